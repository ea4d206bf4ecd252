//! Exact identities between `β` values, and a search for coincidences that
//! the known identity families do not explain.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use super::lists::{fmt_list, lin, lists_of_degree, lists_up_to, lp, signed, zeros};
use super::report::{CheckKind, Functional, Instance, ScanReport, Table};
use crate::algebra::CdMonomial;
use crate::lattice::beta;

/// Partners of `list` under the two reversal identities:
/// `(0,L,1,M) ~ (0,L*,1,M)` and `(L,1,M,1,N) ~ (L,1,M*,1,N)`.
pub fn identity_moves(list: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if list.first() == Some(&0) {
        for p in 1..list.len() {
            if list[p] == 1 {
                let mut v = list.to_vec();
                v[1..p].reverse();
                out.push(v);
            }
        }
    }
    for p in 0..list.len() {
        for q in p + 1..list.len() {
            if list[p] == 1 && list[q] == 1 {
                let mut v = list.to_vec();
                v[p + 1..q].reverse();
                out.push(v);
            }
        }
    }
    out.retain(|v| v != list);
    out.sort();
    out.dedup();
    out
}

fn reversed(list: &[u32]) -> Vec<u32> {
    list.iter().rev().copied().collect()
}

/// `(i, 0^s, i+k)` and friends: the four lists of one instance of the
/// difference identity, with negative entries allowed.
fn difference_lists(i: i64, k: i64, s: usize) -> [Vec<i64>; 4] {
    let m = zeros(s);
    let join = |a: i64, rest: &[i64], b: Option<i64>| {
        let mut v = vec![a];
        v.extend_from_slice(rest);
        v.extend(b);
        v
    };
    let mut b = vec![i, i + k];
    b.extend(&m);
    let mut d = vec![i + k - 1, i + 1];
    d.extend(&m);
    [
        join(i, &m, Some(i + k)),
        b,
        join(i + k - 1, &m, Some(i + 1)),
        d,
    ]
}

/// Instances `(i, k, s)` of the difference identity at list degree `deg`.
fn difference_params(deg: usize) -> Vec<(i64, i64, usize)> {
    let mut out = Vec::new();
    for s in 0..=deg / 2 {
        let base = 2 * (s + 1);
        if base > deg {
            break;
        }
        let rest = deg - base; // 2i + k
        for i in 0..=rest / 2 {
            out.push((i as i64, (rest - 2 * i) as i64, s));
        }
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }
}

/// Lists of one degree grouped into classes of equal `β` that follow from
/// reversal, the two reversal identities, the difference identity, and
/// `β(c^2) = β(d)`.
pub struct ExplainedClasses {
    pub lists: Vec<Vec<u32>>,
    /// Class id per list (the index of the least list of the class).
    pub class_of: Vec<usize>,
}

impl ExplainedClasses {
    pub fn compute(degree: usize) -> Self {
        let lists = lists_of_degree(degree);
        let index: HashMap<Vec<u32>, usize> =
            lists.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let mut uf = UnionFind((0..lists.len()).collect());
        for (i, l) in lists.iter().enumerate() {
            uf.union(i, index[&reversed(l)]);
            for m in identity_moves(l) {
                uf.union(i, index[&m]);
            }
        }
        // β(c^2) = β(d), the equality case of the c^2 -> d inequality.
        if degree == 2 {
            uf.union(index[&vec![2]], index[&vec![0, 0]]);
        }
        // The difference identity βA − βB = βC − βD links classes: if two
        // of its terms are already equal, so are the other two.
        let quads: Vec<[Option<usize>; 4]> = difference_params(degree)
            .into_iter()
            .map(|(i, k, s)| {
                difference_lists(i, k, s).map(|l| {
                    CdMonomial::from_list(&l).map(|m| index[&m.into_exponents()])
                })
            })
            .collect();
        loop {
            let mut changed = false;
            for q in &quads {
                let [Some(a), Some(b), Some(c), Some(d)] = *q else {
                    continue;
                };
                let (fa, fb, fc, fd) = (uf.find(a), uf.find(b), uf.find(c), uf.find(d));
                if fa == fc || fb == fd {
                    changed |= uf.union(a, c) | uf.union(b, d);
                }
                if fa == fb || fc == fd {
                    changed |= uf.union(a, b) | uf.union(c, d);
                }
            }
            if !changed {
                break;
            }
        }
        let class_of = (0..lists.len()).map(|i| uf.find(i)).collect();
        ExplainedClasses { lists, class_of }
    }

    /// Class representatives (least list) in canonical order.
    pub fn representatives(&self) -> Vec<&[u32]> {
        let mut reps: Vec<usize> = self.class_of.clone();
        reps.sort_unstable();
        reps.dedup();
        reps.into_iter().map(|i| self.lists[i].as_slice()).collect()
    }

    pub fn members(&self, rep: usize) -> Vec<&[u32]> {
        (0..self.lists.len())
            .filter(|&i| self.class_of[i] == rep)
            .map(|i| self.lists[i].as_slice())
            .collect()
    }

    pub fn class_index(&self, list: &[u32]) -> Option<usize> {
        self.lists.iter().position(|l| l == list).map(|i| self.class_of[i])
    }
}

/// A group of explained classes sharing one `β` value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coincidence {
    pub beta: BigInt,
    pub representatives: Vec<Vec<u32>>,
}

/// Counts for the equal-`β` search at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSearch {
    pub degree: usize,
    /// Unordered pairs `{u, v}` with `u ≠ v`, `v ≠ u*`, `β(u) = β(v)`.
    pub pairs: u64,
    pub explained: u64,
    pub unexplained: Vec<Coincidence>,
}

pub fn search_equal_beta(degree: usize) -> PairSearch {
    let classes = ExplainedClasses::compute(degree);
    let mut by_value: BTreeMap<BigInt, Vec<usize>> = BTreeMap::new();
    for (i, l) in classes.lists.iter().enumerate() {
        by_value.entry(beta(&CdMonomial::from_exponents(l.clone()))).or_default().push(i);
    }
    let (mut pairs, mut explained) = (0, 0);
    let mut unexplained = Vec::new();
    for (value, members) in by_value {
        for (x, &i) in members.iter().enumerate() {
            for &j in &members[x + 1..] {
                if classes.lists[j] == reversed(&classes.lists[i]) {
                    continue;
                }
                pairs += 1;
                if classes.class_of[i] == classes.class_of[j] {
                    explained += 1;
                }
            }
        }
        let mut roots: Vec<usize> = members.iter().map(|&i| classes.class_of[i]).collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() > 1 {
            unexplained.push(Coincidence {
                beta: value,
                representatives: roots.iter().map(|&r| classes.lists[r].clone()).collect(),
            });
        }
    }
    PairSearch {
        degree,
        pairs,
        explained,
        unexplained,
    }
}

/// Palindromy, both reversal identities, the difference identity, and the
/// equal-`β` search, for list degrees up to `max_degree`.
pub fn scan_identities(max_degree: usize) -> ScanReport {
    let mut r = ScanReport::new("identities", &[("max_degree", max_degree.to_string())]);
    let all = lists_up_to(max_degree);
    let beta_f = Functional::Beta;
    r.run_check("palindromy", CheckKind::Theorem, beta_f, &all, |l, out| {
        out.push(Instance::eq(lp(&signed(l)), lp(&signed(&reversed(l)))));
    });
    r.run_check("reversal-identities", CheckKind::Theorem, beta_f, &all, |l, out| {
        for m in identity_moves(l) {
            out.push(Instance::eq(lp(&signed(l)), lp(&signed(&m))));
        }
    });
    let params: Vec<(i64, i64, usize)> = (0..=max_degree).flat_map(difference_params).collect();
    r.run_check("difference-identity", CheckKind::Theorem, beta_f, &params, |&(i, k, s), out| {
        let [a, b, c, d] = difference_lists(i, k, s);
        out.push(Instance::eq(
            lin(&[(1, &a), (-1, &b)]),
            lin(&[(1, &c), (-1, &d)]),
        ));
    });
    let mut table = Table::new(&["degree", "beta", "classes"]);
    for d in 0..=max_degree {
        let s = search_equal_beta(d);
        r.note(format!(
            "degree {d}: {} equal-β pairs beyond reversal, {} explained",
            s.pairs, s.explained
        ));
        for c in &s.unexplained {
            let reps: Vec<String> = c.representatives.iter().map(|l| fmt_list(l)).collect();
            table.push(vec![d.to_string(), c.beta.to_string(), reps.join(" ")]);
        }
    }
    r.table = Some(table);
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::beta_list;

    #[test]
    fn moves() {
        assert_eq!(identity_moves(&[0, 2, 3, 1]), vec![vec![0, 3, 2, 1]]);
        assert!(identity_moves(&[2, 2]).is_empty());
    }

    #[test]
    fn difference_identity_b9_examples() {
        let lhs = beta_list(&[0, 0, 4]) - beta_list(&[0, 4, 0]);
        assert_eq!(lhs, beta_list(&[3, 0, 1]) - beta_list(&[3, 1, 0]));
        let lhs = beta_list(&[1, 0, 3]) - beta_list(&[1, 3, 0]);
        assert_eq!(lhs, beta_list(&[2, 0, 2]) - beta_list(&[2, 2, 0]));
        let lhs = beta_list(&[2, 0, 0, 0]) - beta_list(&[0, 2, 0, 0]);
        assert_eq!(lhs, beta_list(&[1, 0, 0, 1]) - beta_list(&[1, 1, 0, 0]));
    }

    #[test]
    fn low_degrees_have_no_coincidences() {
        let two = search_equal_beta(2);
        assert_eq!((two.pairs, two.explained), (1, 1));
        for d in 0..=8 {
            assert!(search_equal_beta(d).unexplained.is_empty(), "degree {d}");
        }
    }
}

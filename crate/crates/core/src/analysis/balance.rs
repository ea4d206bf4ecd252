//! Balance inequalities: moving weight between two entries of a list
//! towards equality increases `β`.

use super::lists::{bl, fmt_list, lists_up_to, lp, signed};
use super::report::{CheckKind, Functional, Instance, ScanReport};
use crate::algebra::CdPolynomial;
use crate::lattice::beta_list;

/// Two pairs with equal sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BalancePair {
    pub first: (u32, u32),
    pub second: (u32, u32),
}

impl BalancePair {
    pub fn new(first: (u32, u32), second: (u32, u32)) -> Option<Self> {
        (first.0 + first.1 == second.0 + second.1).then_some(BalancePair { first, second })
    }

    /// `|m₁ - n₁| ≤ |m₂ - n₂|`.
    pub fn better_balanced(&self) -> bool {
        self.first.0.abs_diff(self.first.1) <= self.second.0.abs_diff(self.second.1)
    }

    pub fn strictly_better_balanced(&self) -> bool {
        self.first.0.abs_diff(self.first.1) < self.second.0.abs_diff(self.second.1)
    }
}

/// Pairs `(m₂, n₂)` with the same sum as `(m, n)` and strictly worse balance.
fn worse_pairs(m: i64, n: i64) -> Vec<(i64, i64)> {
    let s = m + n;
    (0..=s)
        .map(|a| (a, s - a))
        .filter(|&(a, b)| (a - b).abs() > (m - n).abs())
        .collect()
}

fn with(list: &[i64], p: usize, q: usize, a: i64, b: i64) -> Vec<i64> {
    let mut v = list.to_vec();
    v[p] = a;
    v[q] = b;
    v
}

fn deg(p: &CdPolynomial) -> i64 {
    p.degree().unwrap_or(-1)
}

/// Balanced lists (entries `k` or `k+1`) with the given length and entry sum.
pub fn balanced_lists(len: usize, sum: u32) -> Vec<Vec<u32>> {
    let k = sum / len as u32;
    let r = (sum % len as u32) as usize;
    let mut out = Vec::new();
    // Choose which r slots get k+1.
    for mask in 0u64..1 << len {
        if mask.count_ones() as usize == r {
            out.push((0..len).map(|i| k + (mask >> i & 1) as u32).collect());
        }
    }
    out
}

pub fn scan_balance(max_degree: usize) -> ScanReport {
    let mut r = ScanReport::new("balance", &[("max_degree", max_degree.to_string())]);
    let f = Functional::Beta;
    let all: Vec<Vec<i64>> = lists_up_to(max_degree).iter().map(|l| signed(l)).collect();

    let sums: Vec<i64> = (0..=max_degree as i64 - 2).collect();
    r.run_check("balance-step", CheckKind::Theorem, f, &sums, |&s, out| {
        for m1 in 0..=s {
            for m2 in 0..=s {
                let (n1, n2) = (s - m1, s - m2);
                let (d1, d2) = ((m1 - n1).abs(), (m2 - n2).abs());
                if d1 == d2 {
                    out.push(Instance::eq(lp(&[m1, n1]), lp(&[m2, n2])));
                } else if d1 < d2 {
                    out.push(Instance::gt(lp(&[m1, n1]), lp(&[m2, n2])));
                }
            }
        }
    });

    // (M, m, n) vs (M, n, m) for n > m.
    r.run_check("adjoining-order", CheckKind::Theorem, f, &all, |l, out| {
        let k = l.len();
        if k >= 2 && l[k - 1] > l[k - 2] {
            let swapped = with(l, k - 2, k - 1, l[k - 1], l[k - 2]);
            if k == 2 {
                out.push(Instance::eq(lp(l), lp(&swapped)));
            } else {
                out.push(Instance::ge(lp(l), lp(&swapped)));
            }
        }
    });

    // (M, m1, n1, N) vs (M, m2, n2, N), adjacent slots.
    r.run_check("adjoining-balance", CheckKind::Theorem, f, &all, |l, out| {
        for p in 0..l.len().saturating_sub(1) {
            for (a, b) in worse_pairs(l[p], l[p + 1]) {
                out.push(Instance::gt(lp(l), lp(&with(l, p, p + 1, a, b))));
            }
        }
    });

    // (m1, L, n1) vs (m2, L, n2).
    r.run_check("end-balance", CheckKind::Theorem, f, &all, |l, out| {
        let k = l.len();
        if k >= 2 {
            for (a, b) in worse_pairs(l[0], l[k - 1]) {
                out.push(Instance::gt(lp(l), lp(&with(l, 0, k - 1, a, b))));
            }
        }
    });

    // (M, m1, L, n1) vs (M, m2, L, n2) with n2 < m2.
    r.run_check("tail-balance", CheckKind::Theorem, f, &all, |l, out| {
        let k = l.len();
        for p in 0..k.saturating_sub(1) {
            for (a, b) in worse_pairs(l[p], l[k - 1]) {
                if b < a {
                    out.push(Instance::gt(lp(l), lp(&with(l, p, k - 1, a, b))));
                }
            }
        }
    });

    // (m1, M)·(N, n1) vs (m2, M)·(N, n2), and (M, m1, L)·(n1) vs
    // (M, m2, L)·(n2) with n2 < m2. Seeds are the concatenations.
    let split_seeds: Vec<(Vec<i64>, usize)> = all
        .iter()
        .flat_map(|l| (1..l.len()).map(move |c| (l.clone(), c)))
        .collect();
    r.run_check("bullet-balance", CheckKind::Theorem, f, &split_seeds, |(l, c), out| {
        let (left, right) = l.split_at(*c);
        let last = right.len() - 1;
        for (a, b) in worse_pairs(left[0], right[last]) {
            let mut l2 = left.to_vec();
            l2[0] = a;
            let mut r2 = right.to_vec();
            r2[last] = b;
            let lhs = bl(left, right);
            if deg(&lhs) <= max_degree as i64 {
                out.push(Instance::gt(lhs, bl(&l2, &r2)));
            }
        }
    });
    r.run_check("bullet-tail-balance", CheckKind::Theorem, f, &all, |l, out| {
        // l = (M, m1, L); the right factor is the single entry n1.
        for n1 in 0..=max_degree as i64 {
            let lhs = bl(l, &[n1]);
            if deg(&lhs) > max_degree as i64 {
                break;
            }
            for p in 0..l.len() {
                for (a, b) in worse_pairs(l[p], n1) {
                    if b < a {
                        let mut l2 = l.clone();
                        l2[p] = a;
                        out.push(Instance::gt(lhs.clone(), bl(&l2, &[b])));
                    }
                }
            }
        }
    });

    // Open statements: reported, never failing the scan.
    r.run_check("skewed", CheckKind::Conjecture, f, &all, |l, out| {
        let k = l.len();
        for p in 1..k.saturating_sub(2) {
            if l[k - 1] > l[p] {
                out.push(Instance::ge(lp(l), lp(&with(l, p, k - 1, l[k - 1], l[p]))));
            }
        }
    });
    r.run_check("balance-step-gap", CheckKind::Conjecture, f, &all, |l, out| {
        for p in 0..l.len() {
            for q in p + 2..l.len() {
                for (a, b) in worse_pairs(l[p], l[q]) {
                    out.push(Instance::gt(lp(l), lp(&with(l, p, q, a, b))));
                }
            }
        }
    });
    r.run_check("sufficient-case", CheckKind::Conjecture, f, &all, |l, out| {
        let k = l.len();
        for p in 0..k.saturating_sub(1) {
            let (m, n) = (l[p], l[k - 1]);
            if m >= n {
                out.push(Instance::gt(lp(l), lp(&with(l, p, k - 1, n - 1, m + 1))));
            }
        }
    });

    let (mut checked, mut fails) = (0u64, Vec::new());
    for l in &all {
        let value = beta_list(l);
        for a in 0..l.len() {
            for b in a + 1..=l.len() {
                checked += 1;
                let seg = &l[a..b];
                let sum: i64 = seg.iter().sum();
                let beaten = balanced_lists(seg.len(), sum as u32).iter().any(|bal| {
                    let mut v = l[..a].to_vec();
                    v.extend(signed(bal));
                    v.extend_from_slice(&l[b..]);
                    beta_list(&v) >= value
                });
                if !beaten {
                    let u: Vec<u32> = l.iter().map(|&x| x as u32).collect();
                    fails.push(format!("{} segment {a}..{b}: no balanced replacement", fmt_list(&u)));
                }
            }
        }
    }
    r.record("balanced-exists", CheckKind::Conjecture, checked, fails);
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_predicates() {
        let p = BalancePair::new((2, 2), (3, 1)).unwrap();
        assert!(p.better_balanced() && p.strictly_better_balanced());
        let q = BalancePair::new((1, 3), (3, 1)).unwrap();
        assert!(q.better_balanced() && !q.strictly_better_balanced());
        assert!(BalancePair::new((1, 1), (3, 0)).is_none());
    }

    #[test]
    fn balanced_list_shapes() {
        assert_eq!(balanced_lists(3, 4).len(), 3);
        assert_eq!(balanced_lists(2, 4), vec![vec![2, 2]]);
    }

    #[test]
    fn two_entry_closed_form() {
        // β(m, n) = C(m+n+2, m+1) - 1, so better balance means larger.
        assert!(beta_list(&[2, 2]) > beta_list(&[3, 1]));
        assert_eq!(beta_list(&[1, 3]), beta_list(&[3, 1]));
    }
}

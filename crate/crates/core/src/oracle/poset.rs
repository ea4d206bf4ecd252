//! Explicit graded posets with bitset order relations.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::PosetError;

/// Fixed-size bitset over element ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }

    /// Elements of `self ∩ other`.
    pub fn iter_and<'a>(&'a self, other: &'a BitSet) -> impl Iterator<Item = usize> + 'a {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .flat_map(|(k, (&a, &b))| {
                let mut w = a & b;
                std::iter::from_fn(move || {
                    if w == 0 {
                        return None;
                    }
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + t)
                })
            })
    }
}

/// A finite graded poset with a unique bottom and top.
#[derive(Clone, Debug)]
pub struct RankedPoset {
    labels: Vec<String>,
    rank: Vec<usize>,
    /// Strict up-sets: `up[x]` holds every `y > x`.
    up: Vec<BitSet>,
    /// Strict down-sets.
    down: Vec<BitSet>,
    covers: Vec<Vec<usize>>,
    levels: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl RankedPoset {
    /// Builds a poset from its cover relations and a rank map, validating
    /// that the covers step the rank by exactly one and that there is a
    /// unique bottom of rank 0 and a unique top.
    pub fn from_covers(
        labels: Vec<String>,
        rank: Vec<usize>,
        covers: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let n = labels.len();
        if rank.len() != n {
            return Err(PosetError::NotGraded("rank map size mismatch".into()));
        }
        let mut up_covers = vec![Vec::new(); n];
        let mut has_lower = vec![false; n];
        let mut seen = HashSet::new();
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(PosetError::NotPartialOrder(format!("unknown element in {a} < {b}")));
            }
            if rank[b] != rank[a] + 1 {
                return Err(PosetError::NotGraded(format!(
                    "cover {} < {} jumps from rank {} to {}",
                    labels[a], labels[b], rank[a], rank[b]
                )));
            }
            if seen.insert((a, b)) {
                up_covers[a].push(b);
                has_lower[b] = true;
            }
        }
        let minimal: Vec<usize> = (0..n).filter(|&x| !has_lower[x]).collect();
        let maximal: Vec<usize> = (0..n).filter(|&x| up_covers[x].is_empty()).collect();
        let bottom = match minimal[..] {
            [b] => b,
            _ => return Err(PosetError::NoExtremum("minimal")),
        };
        let top = match maximal[..] {
            [t] => t,
            _ => return Err(PosetError::NoExtremum("maximal")),
        };
        if rank[bottom] != 0 {
            return Err(PosetError::NotGraded("bottom element must have rank 0".into()));
        }
        let max_rank = rank[top];
        let mut levels = vec![Vec::new(); max_rank + 1];
        for x in 0..n {
            if rank[x] > max_rank {
                return Err(PosetError::NotGraded(format!(
                    "{} has rank above the top",
                    labels[x]
                )));
            }
            levels[rank[x]].push(x);
        }
        let mut up = vec![BitSet::new(n); n];
        for r in (0..=max_rank).rev() {
            for &x in &levels[r] {
                let mut set = BitSet::new(n);
                for &y in &up_covers[x] {
                    set.insert(y);
                    set.union_with(&up[y]);
                }
                up[x] = set;
            }
        }
        let mut down = vec![BitSet::new(n); n];
        for (x, above) in up.iter().enumerate() {
            for y in above.iter() {
                down[y].insert(x);
            }
        }
        for (x, cs) in up_covers.iter_mut().enumerate() {
            cs.sort_unstable();
            debug_assert!(cs.iter().all(|&y| up[x].contains(y)));
        }
        Ok(RankedPoset {
            labels,
            rank,
            up,
            down,
            covers: up_covers,
            levels,
            bottom,
            top,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rank_of_poset(&self) -> usize {
        self.rank[self.top]
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.covers[x]
    }

    pub fn level(&self, r: usize) -> &[usize] {
        &self.levels[r]
    }

    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.covers[x].iter().map(move |&y| (x, y)))
            .collect()
    }

    /// The poset with element `x` removed. Fails if what is left is not a
    /// graded poset with bottom and top.
    pub fn without(&self, x: usize) -> Result<RankedPoset, PosetError> {
        let keep: Vec<usize> = (0..self.len()).filter(|&y| y != x).collect();
        let new_id: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &y)| (y, i)).collect();
        let mut covers = Vec::new();
        for &a in &keep {
            for b in self.up[a].iter() {
                if b == x {
                    continue;
                }
                let between = self.up[a].iter_and(&self.down[b]).any(|z| z != x);
                if !between {
                    covers.push((new_id[&a], new_id[&b]));
                }
            }
        }
        RankedPoset::from_covers(
            keep.iter().map(|&y| self.labels[y].clone()).collect(),
            keep.iter().map(|&y| self.rank[y]).collect(),
            &covers,
        )
    }

    /// Text format: `rank <label> = <r>` lines followed by `<a> < <b>`
    /// cover lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for x in 0..self.len() {
            let _ = writeln!(s, "rank {} = {}", self.labels[x], self.rank[x]);
        }
        for (a, b) in self.cover_relations() {
            let _ = writeln!(s, "{} < {}", self.labels[a], self.labels[b]);
        }
        s
    }

    /// Parses the format written by [`RankedPoset::to_text`]. Blank lines and
    /// `#` comments are ignored. If no rank lines are given, ranks are
    /// derived from the covers.
    pub fn from_text(text: &str) -> Result<RankedPoset, PosetError> {
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut labels = Vec::new();
        let mut intern = |name: &str, labels: &mut Vec<String>| -> usize {
            *ids.entry(name.to_string()).or_insert_with(|| {
                labels.push(name.to_string());
                labels.len() - 1
            })
        };
        let mut given_rank: HashMap<usize, usize> = HashMap::new();
        let mut covers = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| PosetError::Format {
                line: lineno + 1,
                message: message.to_string(),
            };
            if let Some(rest) = line.strip_prefix("rank ") {
                let (name, value) = rest
                    .split_once('=')
                    .ok_or_else(|| err("expected `rank <label> = <r>`"))?;
                let r: usize = value.trim().parse().map_err(|_| err("bad rank value"))?;
                let id = intern(name.trim(), &mut labels);
                given_rank.insert(id, r);
            } else if let Some((a, b)) = line.split_once('<') {
                let (a, b) = (a.trim(), b.trim());
                if a.is_empty() || b.is_empty() || b.contains('<') {
                    return Err(err("expected `<a> < <b>`"));
                }
                let ia = intern(a, &mut labels);
                let ib = intern(b, &mut labels);
                covers.push((ia, ib));
            } else {
                return Err(err("unrecognized line"));
            }
        }
        let n = labels.len();
        let rank = if given_rank.is_empty() {
            derive_ranks(n, &covers)?
        } else {
            (0..n)
                .map(|x| {
                    given_rank.get(&x).copied().ok_or_else(|| {
                        PosetError::NotGraded(format!("no rank given for {}", labels[x]))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        RankedPoset::from_covers(labels, rank, &covers)
    }
}

fn derive_ranks(n: usize, covers: &[(usize, usize)]) -> Result<Vec<usize>, PosetError> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(a, b) in covers {
        out[a].push(b);
        indeg[b] += 1;
    }
    let mut rank: Vec<Option<usize>> = vec![None; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    for &x in &queue {
        rank[x] = Some(0);
    }
    let mut remaining = indeg.clone();
    while let Some(x) = queue.pop_front() {
        let r = rank[x].expect("assigned before queueing");
        for &y in &out[x] {
            match rank[y] {
                Some(ry) if ry != r + 1 => {
                    return Err(PosetError::NotGraded("inconsistent ranks".into()))
                }
                _ => rank[y] = Some(r + 1),
            }
            remaining[y] -= 1;
            if remaining[y] == 0 {
                queue.push_back(y);
            }
        }
    }
    rank.into_iter()
        .map(|r| r.ok_or_else(|| PosetError::NotPartialOrder("cover relation has a cycle".into())))
        .collect()
}

/// Default size limits for the explicit constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub boolean_rank: usize,
    pub cube_dimension: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            boolean_rank: 10,
            cube_dimension: 7,
        }
    }
}

fn set_label(mask: usize, n: usize) -> String {
    let parts: Vec<String> = (0..n)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// The Boolean lattice `B_rank` of subsets of `[rank]`.
pub fn build_boolean(rank: usize) -> Result<RankedPoset, PosetError> {
    build_boolean_capped(rank, OracleCaps::default().boolean_rank)
}

pub fn build_boolean_capped(rank: usize, cap: usize) -> Result<RankedPoset, PosetError> {
    if rank > cap {
        return Err(PosetError::RankCap {
            what: "Boolean rank",
            requested: rank,
            cap,
        });
    }
    let size = 1usize << rank;
    let labels = (0..size).map(|m| set_label(m, rank)).collect();
    let ranks = (0..size).map(|m| m.count_ones() as usize).collect();
    let mut covers = Vec::new();
    for m in 0..size {
        for i in 0..rank {
            if m >> i & 1 == 0 {
                covers.push((m, m | 1 << i));
            }
        }
    }
    RankedPoset::from_covers(labels, ranks, &covers)
}

/// The face lattice of the `dim`-cube: faces are words over `{0,1,*}` plus
/// the empty face, `3^dim + 1` elements of rank `dim + 1`.
pub fn build_cube(dim: usize) -> Result<RankedPoset, PosetError> {
    build_cube_capped(dim, OracleCaps::default().cube_dimension)
}

pub fn build_cube_capped(dim: usize, cap: usize) -> Result<RankedPoset, PosetError> {
    if dim > cap {
        return Err(PosetError::RankCap {
            what: "cube dimension",
            requested: dim,
            cap,
        });
    }
    let faces = 3usize.pow(dim as u32);
    // Element 0 is the empty face; face f (base-3 digits, 2 = '*') is f + 1.
    let digits = |f: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(dim);
        let mut x = f;
        for _ in 0..dim {
            v.push(x % 3);
            x /= 3;
        }
        v
    };
    let mut labels = vec!["empty".to_string()];
    let mut ranks = vec![0];
    let mut covers = Vec::new();
    for f in 0..faces {
        let ds = digits(f);
        let word: String = ds
            .iter()
            .map(|&d| match d {
                0 => '0',
                1 => '1',
                _ => '*',
            })
            .collect();
        labels.push(if word.is_empty() { "pt".into() } else { word });
        let stars = ds.iter().filter(|&&d| d == 2).count();
        ranks.push(stars + 1);
        if stars == 0 {
            covers.push((0, f + 1));
        }
        let mut pow = 1;
        for &d in &ds {
            if d == 2 {
                // Replace this star by 0 or 1 to get a facet of the face.
                covers.push((f - 2 * pow + 1, f + 1));
                covers.push((f - pow + 1, f + 1));
            }
            pow *= 3;
        }
    }
    RankedPoset::from_covers(labels, ranks, &covers)
}

/// The lattice of subspaces of `F_q^dim` for prime `q`, with `q^dim ≤ 128`.
pub fn build_subspace(q: usize, dim: usize) -> Result<RankedPoset, PosetError> {
    let prime = q >= 2 && (2..q).all(|p| !q.is_multiple_of(p));
    if !prime {
        return Err(PosetError::Precondition(format!("q = {q} is not prime")));
    }
    let total = q.checked_pow(dim as u32).unwrap_or(usize::MAX);
    if total > 128 {
        return Err(PosetError::RankCap {
            what: "subspace lattice size q^dim",
            requested: total,
            cap: 128,
        });
    }
    let add = |x: usize, y: usize| -> usize {
        let (mut a, mut b, mut out, mut pow) = (x, y, 0, 1);
        for _ in 0..dim {
            out += ((a % q + b % q) % q) * pow;
            a /= q;
            b /= q;
            pow *= q;
        }
        out
    };
    let scale = |t: usize, x: usize| -> usize {
        let (mut a, mut out, mut pow) = (x, 0, 1);
        for _ in 0..dim {
            out += (a % q * t % q) * pow;
            a /= q;
            pow *= q;
        }
        out
    };
    let span_with = |members: u128, v: usize| -> u128 {
        let mut out = 0u128;
        for x in 0..total {
            if members >> x & 1 == 1 {
                for t in 0..q {
                    out |= 1 << add(x, scale(t, v));
                }
            }
        }
        out
    };
    let zero: u128 = 1;
    let mut ids: HashMap<u128, usize> = HashMap::new();
    let mut sets = vec![zero];
    let mut ranks = vec![0];
    ids.insert(zero, 0);
    let mut covers = Vec::new();
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &id in &frontier {
            let members = sets[id];
            for v in 0..total {
                if members >> v & 1 == 1 {
                    continue;
                }
                let bigger = span_with(members, v);
                let target = *ids.entry(bigger).or_insert_with(|| {
                    sets.push(bigger);
                    ranks.push(ranks[id] + 1);
                    next.push(sets.len() - 1);
                    sets.len() - 1
                });
                covers.push((id, target));
            }
        }
        frontier = next;
    }
    let labels = (0..sets.len()).map(|i| format!("V{i}")).collect();
    RankedPoset::from_covers(labels, ranks, &covers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_sizes() {
        let b0 = build_boolean(0).unwrap();
        assert_eq!(b0.len(), 1);
        assert_eq!(b0.bottom(), b0.top());
        let b2 = build_boolean(2).unwrap();
        assert_eq!(b2.len(), 4);
        assert_eq!(b2.level(1).len(), 2);
        assert!(build_boolean(11).is_err());
    }

    #[test]
    fn cube_sizes() {
        let c1 = build_cube(1).unwrap();
        assert_eq!(c1.len(), 4);
        assert_eq!(c1.rank_of_poset(), 2);
        assert_eq!(c1.level(1).len(), 2);
        let c2 = build_cube(2).unwrap();
        assert_eq!(c2.len(), 10);
        assert_eq!(c2.level(1).len(), 4);
        assert_eq!(c2.level(2).len(), 4);
        assert_eq!(build_cube(3).unwrap().len(), 28);
    }

    #[test]
    fn subspace_sizes() {
        // 1 + 7 + 7 + 1 subspaces of F_2^3.
        let l = build_subspace(2, 3).unwrap();
        let sizes: Vec<usize> = (0..=3).map(|r| l.level(r).len()).collect();
        assert_eq!(sizes, vec![1, 7, 7, 1]);
        let l = build_subspace(3, 2).unwrap();
        assert_eq!(l.level(1).len(), 4);
        assert!(build_subspace(4, 2).is_err());
    }

    #[test]
    fn text_round_trip() {
        let p = build_cube(2).unwrap();
        let q = RankedPoset::from_text(&p.to_text()).unwrap();
        assert_eq!(q.len(), p.len());
        assert_eq!(q.cover_relations().len(), p.cover_relations().len());
        let unranked: String = p
            .to_text()
            .lines()
            .filter(|l| !l.starts_with("rank"))
            .map(|l| format!("{l}\n"))
            .collect();
        let r = RankedPoset::from_text(&unranked).unwrap();
        assert_eq!(r.rank_of_poset(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            RankedPoset::from_text("a < b\nc < d\n"),
            Err(PosetError::NoExtremum(_))
        ));
        assert!(matches!(
            RankedPoset::from_text("what"),
            Err(PosetError::Format { line: 1, .. })
        ));
        let skip = "rank a = 0\nrank b = 2\na < b\n";
        assert!(matches!(
            RankedPoset::from_text(skip),
            Err(PosetError::NotGraded(_))
        ));
    }
}

//! Möbius functions, the Eulerian property, and the generalized
//! Dehn–Sommerville relations checked on flag vectors.

use num_bigint::BigInt;

use super::flags::{mask_ranks, rank_mask, FlagVector};
use super::poset::RankedPoset;
use crate::algebra::{CdMonomial, CdPolynomial};
use crate::dual::{bullet_all, bullet_poly};
use crate::error::PosetError;

/// `μ(x, y)` for every `y ≥ x`, indexed by element (zero off the up-set).
pub fn mobius_row(p: &RankedPoset, x: usize) -> Vec<i64> {
    let mut mu = vec![0i64; p.len()];
    mu[x] = 1;
    let mut above: Vec<usize> = p.up_set(x).iter().collect();
    above.sort_by_key(|&y| p.rank(y));
    for y in above {
        let mut s = mu[x];
        for z in p.up_set(x).iter_and(p.down_set(y)) {
            s += mu[z];
        }
        mu[y] = -s;
    }
    mu
}

/// `μ(x, y)`, zero when `x ≰ y`.
pub fn mobius(p: &RankedPoset, x: usize, y: usize) -> i64 {
    if !p.le(x, y) {
        return 0;
    }
    mobius_row(p, x)[y]
}

/// Every interval `[x, y]` has `μ(x, y) = (-1)^{ρ(y) - ρ(x)}`.
pub fn is_eulerian(p: &RankedPoset) -> bool {
    (0..p.len()).all(|x| {
        let row = mobius_row(p, x);
        p.up_set(x).iter().all(|y| {
            let len = p.rank(y) - p.rank(x);
            row[y] == if len.is_multiple_of(2) { 1 } else { -1 }
        })
    })
}

/// One instance of the relation: a rank set `S ⊆ [n]` and an adjacent pair
/// `i < k` of `S ∪ {0, n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsInstance {
    pub set: Vec<usize>,
    pub i: usize,
    pub k: usize,
}

fn validate(n: usize, inst: &DsInstance) -> Result<(), PosetError> {
    let DsInstance { set, i, k } = inst;
    if set.iter().any(|&s| s == 0 || s > n) {
        return Err(PosetError::Precondition(format!("S must lie in [1, {n}]")));
    }
    if i >= k {
        return Err(PosetError::Precondition(format!("need i < k, got {i} and {k}")));
    }
    let member = |t: usize| t == 0 || t == n + 1 || set.contains(&t);
    if !member(*i) || !member(*k) {
        return Err(PosetError::Precondition(format!(
            "{i} and {k} must lie in S ∪ {{0, {}}}",
            n + 1
        )));
    }
    if set.iter().any(|&s| *i < s && s < *k) {
        return Err(PosetError::Precondition(format!(
            "S has an element strictly between {i} and {k}"
        )));
    }
    Ok(())
}

/// Both sides of `Σ_{j=i+1}^{k-1} (-1)^{j-i-1} f_{S∪{j}} = (1 + (-1)^{k-i}) f_S`.
pub fn dehn_sommerville_sides(
    f: &FlagVector,
    inst: &DsInstance,
) -> Result<(BigInt, BigInt), PosetError> {
    validate(f.n(), inst)?;
    let base = rank_mask(&inst.set);
    let mut lhs = BigInt::from(0);
    for j in inst.i + 1..inst.k {
        let v = BigInt::from(f.get(base | 1 << (j - 1)));
        if (j - inst.i - 1).is_multiple_of(2) {
            lhs += v;
        } else {
            lhs -= v;
        }
    }
    let factor = if (inst.k - inst.i).is_multiple_of(2) { 2 } else { 0 };
    Ok((lhs, BigInt::from(factor) * BigInt::from(f.get(base))))
}

pub fn dehn_sommerville_check(f: &FlagVector, inst: &DsInstance) -> Result<bool, PosetError> {
    let (l, r) = dehn_sommerville_sides(f, inst)?;
    Ok(l == r)
}

/// All legal instances for rank set universe `[n]`.
pub fn dehn_sommerville_instances(n: usize) -> Vec<DsInstance> {
    let mut out = Vec::new();
    for mask in 0..1usize << n {
        let set = mask_ranks(mask);
        let mut points = vec![0];
        points.extend(&set);
        points.push(n + 1);
        for w in points.windows(2) {
            out.push(DsInstance {
                set: set.clone(),
                i: w[0],
                k: w[1],
            });
        }
    }
    out
}

fn c_pow(k: usize) -> CdPolynomial {
    CdPolynomial::from(CdMonomial::c_pow(k as u32))
}

/// `Σ_{j=0}^{n-1} (-1)^j c^j · c^{n-1-j}` and `(1 + (-1)^{n+1}) c^n`, which
/// agree for every `n ≥ 1`.
pub fn euler_relation_identity(n: usize) -> (CdPolynomial, CdPolynomial) {
    assert!(n >= 1);
    let mut lhs = CdPolynomial::zero();
    for j in 0..n {
        let term = bullet_poly(&c_pow(j), &c_pow(n - 1 - j));
        let sign = if j % 2 == 0 { 1 } else { -1 };
        lhs.add_scaled(&term, &BigInt::from(sign));
    }
    let factor = if n % 2 == 1 { 2 } else { 0 };
    (lhs, c_pow(n).scale(&BigInt::from(factor)))
}

/// `c^{s_1 - 1} · c^{s_2 - s_1 - 1} · … · c^{n - s_l}`; pairing it with the
/// cd-index gives `f_S`.
pub fn chain_element(n: usize, set: &[usize]) -> CdPolynomial {
    let mut points = vec![0];
    points.extend(set);
    points.push(n + 1);
    let factors: Vec<CdPolynomial> = points.windows(2).map(|w| c_pow(w[1] - w[0] - 1)).collect();
    bullet_all(&factors)
}

/// The relation derived through the bullet product: the factor between `i`
/// and `k` in [`chain_element`] is replaced by both sides of
/// [`euler_relation_identity`]. Pairing the results with `Ψ(P)` gives the
/// two sides of the flag-vector relation.
pub fn dehn_sommerville_via_bullet(
    n: usize,
    inst: &DsInstance,
) -> Result<(CdPolynomial, CdPolynomial), PosetError> {
    let mut set = inst.set.clone();
    set.sort_unstable();
    validate(n, &DsInstance { set: set.clone(), ..inst.clone() })?;
    let mut points = vec![0];
    points.extend(&set);
    points.push(n + 1);
    let (lhs, rhs) = euler_relation_identity(inst.k - inst.i);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for w in points.windows(2) {
        if w[0] == inst.i {
            left.push(lhs.clone());
            right.push(rhs.clone());
        } else {
            let f = c_pow(w[1] - w[0] - 1);
            left.push(f.clone());
            right.push(f);
        }
    }
    Ok((bullet_all(&left), bullet_all(&right)))
}

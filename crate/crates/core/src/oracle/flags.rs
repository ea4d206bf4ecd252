//! Flag f- and h-vectors and the ab-index of an explicit poset.

use num_bigint::BigInt;
use num_traits::One;

use super::poset::RankedPoset;
use crate::algebra::{Ab, AbPolynomial, AbWord};
use crate::error::PosetError;

/// Flag f-vector of a rank `n + 1` poset, indexed by bitmask over `[n]`
/// (bit `i - 1` stands for rank `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    n: usize,
    values: Vec<u128>,
}

/// Flag h-vector, same indexing as [`FlagVector`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagHVector {
    n: usize,
    values: Vec<i128>,
}

/// Bitmask of a set of ranks in `[n]`.
pub fn rank_mask(set: &[usize]) -> usize {
    set.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// Ranks in a bitmask, ascending.
pub fn mask_ranks(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

impl FlagVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mask: usize) -> u128 {
        self.values[mask]
    }

    pub fn get_set(&self, set: &[usize]) -> u128 {
        self.values[rank_mask(set)]
    }

    pub fn values(&self) -> &[u128] {
        &self.values
    }
}

impl FlagHVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mask: usize) -> i128 {
        self.values[mask]
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }
}

/// Counts chains with prescribed rank sets by dynamic programming over rank
/// levels, sharing work between sets with a common prefix.
pub fn flag_f_vector(p: &RankedPoset) -> Result<FlagVector, PosetError> {
    let rank = p.rank_of_poset();
    if rank == 0 {
        return Err(PosetError::RankTooSmall(0));
    }
    let n = rank - 1;
    let mut values = vec![0u128; 1 << n];
    // counts[x] = chains from the bottom ending at x through the current set.
    let mut counts = vec![0u128; p.len()];
    counts[p.bottom()] = 1;
    extend(p, n, 0, 0, &mut counts, &mut values)?;
    Ok(FlagVector { n, values })
}

fn extend(
    p: &RankedPoset,
    n: usize,
    last: usize,
    mask: usize,
    counts: &mut [u128],
    values: &mut [u128],
) -> Result<(), PosetError> {
    let mut total = 0u128;
    for &x in p.level(last) {
        total = total.checked_add(counts[x]).ok_or(PosetError::Overflow)?;
    }
    values[mask] = total;
    for r in last + 1..=n {
        let mut next = vec![0u128; p.len()];
        for &x in p.level(r) {
            let mut s = 0u128;
            for y in p.down_set(x).iter() {
                if p.rank(y) == last {
                    s = s.checked_add(counts[y]).ok_or(PosetError::Overflow)?;
                }
            }
            next[x] = s;
        }
        extend(p, n, r, mask | 1 << (r - 1), &mut next, values)?;
    }
    Ok(())
}

/// `h_S = Σ_{T ⊆ S} (-1)^{|S - T|} f_T`, by an in-place subset transform.
pub fn flag_h_vector(f: &FlagVector) -> Result<FlagHVector, PosetError> {
    let mut h: Vec<i128> = f
        .values
        .iter()
        .map(|&v| i128::try_from(v).map_err(|_| PosetError::Overflow))
        .collect::<Result<_, _>>()?;
    for bit in 0..f.n {
        for mask in 0..h.len() {
            if mask >> bit & 1 == 1 {
                h[mask] = h[mask]
                    .checked_sub(h[mask ^ 1 << bit])
                    .ok_or(PosetError::Overflow)?;
            }
        }
    }
    Ok(FlagHVector { n: f.n, values: h })
}

/// `Ψ(P) = Σ_S h_S u_S`.
pub fn ab_index_from_h(h: &FlagHVector) -> AbPolynomial {
    let mut out = AbPolynomial::zero();
    for (mask, &v) in h.values.iter().enumerate() {
        if v != 0 {
            out.add_term(AbWord::from_rank_set(h.n, mask_ranks(mask)), BigInt::from(v));
        }
    }
    out
}

/// The ab-index of an explicit poset through its flag vectors.
pub fn ab_index_from_flags(p: &RankedPoset) -> Result<AbPolynomial, PosetError> {
    let f = flag_f_vector(p)?;
    Ok(ab_index_from_h(&flag_h_vector(&f)?))
}

/// The ab-index through chain weights:
/// `W(x) = (a-b)^{ρ(x,1)-1} + Σ_{x<y<1} (a-b)^{ρ(x,y)-1} b W(y)` and
/// `Ψ(P) = W(0)`. Independent of the flag-vector route.
pub fn ab_index_chain_weights(p: &RankedPoset) -> Result<AbPolynomial, PosetError> {
    let rank = p.rank_of_poset();
    if rank == 0 {
        return Err(PosetError::RankTooSmall(0));
    }
    let mut a_minus_b = AbPolynomial::letter(Ab::A);
    a_minus_b.add_term(AbWord::new(vec![Ab::B]), -BigInt::one());
    let mut powers = vec![AbPolynomial::<BigInt>::one()];
    for k in 1..rank {
        powers.push(powers[k - 1].mul(&a_minus_b));
    }
    let b = AbPolynomial::letter(Ab::B);
    let top = p.top();
    let mut weight: Vec<Option<AbPolynomial>> = vec![None; p.len()];
    for r in (0..rank).rev() {
        for &x in p.level(r) {
            let mut w = powers[rank - r - 1].clone();
            // Group the y above x by rank so each power is multiplied once.
            for ry in r + 1..rank {
                let mut sum = AbPolynomial::zero();
                for y in p.up_set(x).iter() {
                    if y != top && p.rank(y) == ry {
                        sum.add_assign(weight[y].as_ref().expect("higher rank done"));
                    }
                }
                if !sum.is_zero() {
                    w.add_assign(&powers[ry - r - 1].mul(&b).mul(&sum));
                }
            }
            weight[x] = Some(w);
        }
    }
    Ok(weight[p.bottom()].take().unwrap_or_else(AbPolynomial::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::poset::{build_boolean, build_cube};

    #[test]
    fn boolean_b3_flags() {
        let f = flag_f_vector(&build_boolean(3).unwrap()).unwrap();
        assert_eq!(f.values(), &[1, 3, 3, 6]);
        let h = flag_h_vector(&f).unwrap();
        assert_eq!(h.values(), &[1, 2, 2, 1]);
        let psi = ab_index_from_h(&h);
        assert_eq!(psi.to_string(), "aa + 2ab + 2ba + bb");
    }

    #[test]
    fn two_routes_agree() {
        for r in 1..=5 {
            let p = build_boolean(r).unwrap();
            assert_eq!(ab_index_from_flags(&p).unwrap(), ab_index_chain_weights(&p).unwrap());
        }
        for d in 0..=3 {
            let p = build_cube(d).unwrap();
            assert_eq!(ab_index_from_flags(&p).unwrap(), ab_index_chain_weights(&p).unwrap());
        }
    }

    #[test]
    fn rank_zero_rejected() {
        let p = build_boolean(0).unwrap();
        assert!(matches!(flag_f_vector(&p), Err(PosetError::RankTooSmall(0))));
        assert!(ab_index_chain_weights(&p).is_err());
    }
}

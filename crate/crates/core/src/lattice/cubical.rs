use crate::algebra::CdPolynomial;
use crate::coalgebra::h_hat_monomial;

/// `Ψ(C_1), …, Ψ(C_max)` by iterating `Ĥ` from `Ψ(C_1) = 1`. Index 0 of the
/// returned vector holds the zero polynomial as a placeholder.
pub fn cubical_sequence(max: usize) -> Vec<CdPolynomial> {
    let mut seq = vec![CdPolynomial::zero()];
    if max == 0 {
        return seq;
    }
    seq.push(CdPolynomial::one());
    for n in 1..max {
        let next = seq[n].map_linear(h_hat_monomial);
        seq.push(next);
    }
    seq
}

/// `Ψ(C_n)` for `n ≥ 1`, the face lattice of the `(n-1)`-cube.
pub fn cubical_cd_index(n: usize) -> CdPolynomial {
    assert!(n >= 1, "the cubical lattice has rank at least 1");
    cubical_sequence(n).swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CdMonomial;
    use num_bigint::BigInt;

    fn p(terms: &[(&str, i64)]) -> CdPolynomial {
        terms
            .iter()
            .map(|(s, k)| (s.parse::<CdMonomial>().unwrap(), BigInt::from(*k)))
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(cubical_cd_index(1), CdPolynomial::one());
        assert_eq!(cubical_cd_index(3), p(&[("c^2", 1), ("d", 2)]));
        assert_eq!(
            cubical_cd_index(5),
            p(&[("c^4", 1), ("c^2d", 6), ("dc^2", 14), ("cdc", 16), ("d^2", 20)])
        );
    }
}

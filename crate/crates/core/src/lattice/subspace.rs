//! The ab-index of the lattice `L_n` of subspaces of `F_q^n`, with
//! coefficients in `Z[q]`.

use num_traits::One;

use crate::algebra::{gaussian_binomial, Ab, AbPolynomial, AbWord, QPoly};

fn word(letters: &[Ab]) -> AbWord {
    AbWord::new(letters.to_vec())
}

/// `Ψ(L_1), …, Ψ(L_max)`; index 0 is a zero placeholder.
///
/// `Ψ(L_{n+1}) = (a + q^n b) Ψ(L_n)
///   + Σ_{i=1}^{n-1} [n-1 choose i]_q Ψ(L_i) (q^n ab + q^i ba) Ψ(L_{n-i})`.
pub fn subspace_sequence(max: usize) -> Vec<AbPolynomial<QPoly>> {
    let mut seq = vec![AbPolynomial::zero()];
    if max == 0 {
        return seq;
    }
    seq.push(AbPolynomial::one());
    for n in 1..max {
        let mut lead = AbPolynomial::term(word(&[Ab::A]), QPoly::one());
        lead.add_term(word(&[Ab::B]), QPoly::q_pow(n));
        let mut next = lead.mul(&seq[n]);
        for i in 1..n {
            let mut mid = AbPolynomial::term(word(&[Ab::A, Ab::B]), QPoly::q_pow(n));
            mid.add_term(word(&[Ab::B, Ab::A]), QPoly::q_pow(i));
            let term = seq[i].mul(&mid).mul(&seq[n - i]);
            next.add_assign(&term.scale(&gaussian_binomial(n - 1, i)));
        }
        seq.push(next);
    }
    seq
}

pub fn subspace_ab_index(n: usize) -> AbPolynomial<QPoly> {
    assert!(n >= 1, "the subspace lattice has rank at least 1");
    subspace_sequence(n).swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(subspace_ab_index(1).to_string(), "1");
        assert_eq!(subspace_ab_index(2).to_string(), "a + qb");
        assert_eq!(
            subspace_ab_index(3).to_string(),
            "aa + (q + q^2)ab + (q + q^2)ba + q^3bb"
        );
    }
}

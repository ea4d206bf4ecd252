//! Three independent ways to compute `Ψ(B_n)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::algebra::{CdMonomial, CdPolynomial};
use crate::coalgebra::g_hat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BooleanMethod {
    /// Iterate `Ĝ` from `Ψ(B_0) = e`.
    GHat,
    /// Purtill's recursion by concatenation products.
    Purtill,
    /// Chain-weight recursion through the sequences `φ_m`.
    Phi,
}

impl BooleanMethod {
    pub const ALL: [BooleanMethod; 3] = [Self::GHat, Self::Purtill, Self::Phi];

    pub fn name(self) -> &'static str {
        match self {
            Self::GHat => "ghat",
            Self::Purtill => "purtill",
            Self::Phi => "phi",
        }
    }
}

impl fmt::Display for BooleanMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BooleanMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ghat" => Ok(Self::GHat),
            "purtill" => Ok(Self::Purtill),
            "phi" => Ok(Self::Phi),
            _ => Err(format!("unknown method `{s}` (expected ghat, purtill or phi)")),
        }
    }
}

/// Base case for the `φ` recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PhiBase {
    /// `φ_0 = 0`, `φ'_0 = 1`, so that `(a-b)^m b = φ_m + b φ'_m`.
    #[default]
    Standard,
    /// `φ_0 = c`, `φ'_0 = -2`. This base satisfies
    /// `(a-b)^{m+1} = φ_m + b φ'_m` instead, and feeding it to the rank
    /// recursion gives wrong indices from rank 2 on.
    Shifted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPair {
    pub m: usize,
    pub phi: CdPolynomial,
    pub phi_prime: CdPolynomial,
}

/// `φ_0..=φ_max` under `φ_{m+1} = cφ_m + dφ'_m`, `φ'_{m+1} = -2φ_m - cφ'_m`.
pub fn phi_sequences(max: usize, base: PhiBase) -> Vec<PhiPair> {
    let c = CdPolynomial::from(CdMonomial::c());
    let d = CdPolynomial::from(CdMonomial::d());
    let (phi, phi_prime) = match base {
        PhiBase::Standard => (CdPolynomial::zero(), CdPolynomial::one()),
        PhiBase::Shifted => (c.clone(), CdPolynomial::term(CdMonomial::one(), -2)),
    };
    let mut out = vec![PhiPair {
        m: 0,
        phi,
        phi_prime,
    }];
    for m in 0..max {
        let prev = &out[m];
        let phi = &(&c * &prev.phi) + &(&d * &prev.phi_prime);
        let phi_prime =
            prev.phi.scale(&BigInt::from(-2)) - &c * &prev.phi_prime;
        out.push(PhiPair {
            m: m + 1,
            phi,
            phi_prime,
        });
    }
    out
}

/// `Ψ(B_0), …, Ψ(B_max)` by the chosen method.
pub fn boolean_sequence(max: usize, method: BooleanMethod) -> Vec<CdPolynomial> {
    boolean_sequence_with_base(max, method, PhiBase::Standard)
}

/// Like [`boolean_sequence`], with an explicit `φ` base for the `Phi` method.
pub fn boolean_sequence_with_base(
    max: usize,
    method: BooleanMethod,
    base: PhiBase,
) -> Vec<CdPolynomial> {
    let mut seq = vec![CdPolynomial::e()];
    match method {
        BooleanMethod::GHat => {
            for n in 0..max {
                let next = g_hat(&seq[n]);
                seq.push(next);
            }
        }
        BooleanMethod::Purtill => {
            if max >= 1 {
                seq.push(CdPolynomial::one());
            }
            let c = CdPolynomial::from(CdMonomial::c());
            let d = CdPolynomial::from(CdMonomial::d());
            for n in 1..max {
                let mut next = &c * &seq[n];
                for i in 1..n {
                    let k = binomial(BigInt::from(n - 1), BigInt::from(i));
                    let term = &(&seq[i] * &d) * &seq[n - i];
                    next.add_scaled(&term, &k);
                }
                seq.push(next);
            }
        }
        BooleanMethod::Phi => {
            let phis = phi_sequences(max.saturating_sub(1), base);
            let c = CdPolynomial::from(CdMonomial::c());
            let square = &c * &c - CdPolynomial::term(CdMonomial::d(), 2);
            for n in 1..=max {
                let mut next = if n % 2 == 1 {
                    square.pow((n - 1) / 2)
                } else {
                    &c * &square.pow((n - 2) / 2)
                };
                for k in 1..n {
                    let coeff = binomial(BigInt::from(n), BigInt::from(k));
                    let term = &phis[k - 1].phi * &seq[n - k];
                    next.add_scaled(&term, &coeff);
                }
                seq.push(next);
            }
        }
    }
    seq
}

/// `Ψ(B_n)`; rank 0 gives `e`.
pub fn boolean_cd_index(n: usize, method: BooleanMethod) -> CdPolynomial {
    boolean_sequence(n, method).swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(&str, i64)]) -> CdPolynomial {
        terms
            .iter()
            .map(|(s, k)| (s.parse::<CdMonomial>().unwrap(), BigInt::from(*k)))
            .collect()
    }

    #[test]
    fn phi_small() {
        let phis = phi_sequences(2, PhiBase::Standard);
        assert_eq!(phis[1].phi, p(&[("d", 1)]));
        assert_eq!(phis[1].phi_prime, p(&[("c", -1)]));
        assert_eq!(phis[2].phi, p(&[("cd", 1), ("dc", -1)]));
        assert_eq!(phis[2].phi_prime, p(&[("c^2", 1), ("d", -2)]));
    }

    #[test]
    fn rank_five_by_each_method() {
        let expected = p(&[("c^4", 1), ("c^2d", 3), ("dc^2", 3), ("cdc", 5), ("d^2", 4)]);
        for method in BooleanMethod::ALL {
            assert_eq!(boolean_cd_index(5, method), expected, "{method}");
            assert_eq!(boolean_cd_index(0, method), CdPolynomial::e());
        }
    }

    #[test]
    fn shifted_phi_base_disagrees_from_rank_two() {
        let seq = boolean_sequence_with_base(3, BooleanMethod::Phi, PhiBase::Shifted);
        assert_eq!(seq[2], p(&[("c", 3)]));
        assert_eq!(seq[3], p(&[("c^2", 13), ("d", -8)]));
        assert_ne!(seq[3], boolean_cd_index(3, BooleanMethod::GHat));
    }
}

//! Dense integer polynomials in `q`, used as coefficients for subspace lattices.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Little-endian coefficient vector with no trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.coeffs.is_empty() {
            return QPoly::default();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }
}

/// Gaussian binomial `[n choose k]_q` by the q-Pascal rule
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn gaussian_binomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let left = if j > 0 { row[j - 1].clone() } else { QPoly::zero() };
            let right = if j < m { row[j].shift(j) } else { QPoly::zero() };
            next.push(left + right);
        }
        row = next;
    }
    row.swap_remove(k)
}

impl Zero for QPoly {
    fn zero() -> Self {
        QPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPoly {
    fn one() -> Self {
        QPoly::constant(1)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = QPoly::from_coeffs(trimmed);
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        self + (-rhs)
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if k == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gaussian_binomials_small() {
        assert_eq!(gaussian_binomial(2, 1), q(&[1, 1]));
        assert_eq!(gaussian_binomial(4, 2), q(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(3, 0), QPoly::one());
        assert!(gaussian_binomial(2, 3).is_zero());
    }

    #[test]
    fn gaussian_binomial_counts_subspaces() {
        // Number of k-dim subspaces of F_p^n via the product formula.
        for p in [2i64, 3] {
            for n in 0..6u32 {
                for k in 0..=n {
                    let mut num = BigInt::one();
                    let mut den = BigInt::one();
                    for i in 0..k {
                        num *= BigInt::from(p).pow(n - i) - 1;
                        den *= BigInt::from(p).pow(k - i) - 1;
                    }
                    let g = gaussian_binomial(n as usize, k as usize);
                    assert_eq!(g.eval(&BigInt::from(p)), num / den);
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(q(&[1, 0, -2, 1]).to_string(), "1 - 2q^2 + q^3");
        assert_eq!(q(&[0, 1]).to_string(), "q");
    }
}

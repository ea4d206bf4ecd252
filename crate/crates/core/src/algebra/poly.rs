//! Integer cd-polynomials in the algebra extended by `e`.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::CdMonomial;

/// A finite integer combination of cd-monomials (and possibly `e`).
/// Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CdPolynomial {
    terms: BTreeMap<CdMonomial, BigInt>,
}

impl CdPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(CdMonomial::one())
    }

    pub fn e() -> Self {
        Self::from(CdMonomial::e())
    }

    pub fn term(m: CdMonomial, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, coeff.into());
        p
    }

    /// Adds `coeff * m`, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: CdMonomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `coeff * list`; lists with a negative entry vanish.
    pub fn add_list(&mut self, list: &[i64], coeff: impl Into<BigInt>) {
        if let Some(m) = CdMonomial::from_list(list) {
            self.add_term(m, coeff.into());
        }
    }

    pub fn add_scaled(&mut self, other: &CdPolynomial, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * scale);
        }
    }

    pub fn coefficient(&self, m: &CdMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn get(&self, m: &CdMonomial) -> Option<&BigInt> {
        self.terms.get(m)
    }

    pub fn terms(&self) -> btree_map::Iter<'_, CdMonomial, BigInt> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &CdMonomial> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_e(&self) -> bool {
        self.terms.contains_key(&CdMonomial::e())
    }

    /// Degree of the highest-degree term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(CdMonomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(CdMonomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn homogeneous_part(&self, degree: i64) -> CdPolynomial {
        CdPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> CdPolynomial {
        if k.is_zero() {
            return CdPolynomial::zero();
        }
        CdPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * k))
                .collect(),
        }
    }

    /// Reversal `p*`, applied monomial-wise.
    pub fn reverse(&self) -> CdPolynomial {
        CdPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.reverse(), c.clone()))
                .collect(),
        }
    }

    /// Applies a linear map given on monomials.
    pub fn map_linear<F>(&self, mut f: F) -> CdPolynomial
    where
        F: FnMut(&CdMonomial) -> CdPolynomial,
    {
        let mut out = CdPolynomial::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    /// Fallible variant of [`CdPolynomial::map_linear`].
    pub fn try_map_linear<F, E>(&self, mut f: F) -> Result<CdPolynomial, E>
    where
        F: FnMut(&CdMonomial) -> Result<CdPolynomial, E>,
    {
        let mut out = CdPolynomial::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m)?, c);
        }
        Ok(out)
    }

    /// `k`-th power under concatenation; `p^0 = 1`.
    pub fn pow(&self, k: usize) -> CdPolynomial {
        let mut acc = CdPolynomial::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inner product against the monomial basis.
    pub fn pairing(&self, other: &CdPolynomial) -> BigInt {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(m, c)| large.terms.get(m).map(|d| c * d))
            .sum()
    }

    pub fn into_terms(self) -> BTreeMap<CdMonomial, BigInt> {
        self.terms
    }
}

impl From<CdMonomial> for CdPolynomial {
    fn from(m: CdMonomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        CdPolynomial { terms }
    }
}

impl FromIterator<(CdMonomial, BigInt)> for CdPolynomial {
    fn from_iter<I: IntoIterator<Item = (CdMonomial, BigInt)>>(iter: I) -> Self {
        let mut p = CdPolynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl AddAssign<&CdPolynomial> for CdPolynomial {
    fn add_assign(&mut self, rhs: &CdPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&CdPolynomial> for CdPolynomial {
    fn sub_assign(&mut self, rhs: &CdPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &CdPolynomial {
    type Output = CdPolynomial;
    fn add(self, rhs: &CdPolynomial) -> CdPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CdPolynomial {
    type Output = CdPolynomial;
    fn add(mut self, rhs: CdPolynomial) -> CdPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for &CdPolynomial {
    type Output = CdPolynomial;
    fn sub(self, rhs: &CdPolynomial) -> CdPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CdPolynomial {
    type Output = CdPolynomial;
    fn sub(mut self, rhs: CdPolynomial) -> CdPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for CdPolynomial {
    type Output = CdPolynomial;
    fn neg(self) -> CdPolynomial {
        CdPolynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

/// Concatenation product; any term involving `e` vanishes.
impl Mul for &CdPolynomial {
    type Output = CdPolynomial;
    fn mul(self, rhs: &CdPolynomial) -> CdPolynomial {
        let mut out = CdPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if let Some(m) = a.concat(b) {
                    out.add_term(m, x * y);
                }
            }
        }
        out
    }
}

impl Mul for CdPolynomial {
    type Output = CdPolynomial;
    fn mul(self, rhs: CdPolynomial) -> CdPolynomial {
        &self * &rhs
    }
}

/// Highest degree first, `c`-heavy monomials leading within a degree.
impl fmt::Display for CdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = m.is_one() || m.is_e();
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if unit && m.is_one() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CdPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> CdMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_drops_zero_terms() {
        let mut p = CdPolynomial::from(m("cd"));
        p.add_term(m("cd"), BigInt::from(-1));
        assert!(p.is_zero());
        p.add_list(&[0, -1], 5);
        assert!(p.is_zero());
    }

    #[test]
    fn concatenation_kills_e() {
        let p = CdPolynomial::e() + CdPolynomial::from(m("c"));
        let q = CdPolynomial::from(m("d"));
        assert_eq!(&p * &q, CdPolynomial::from(m("cd")));
    }

    #[test]
    fn display_orders_by_degree_then_c_first() {
        let mut p = CdPolynomial::zero();
        p.add_term(m("c^2"), 1.into());
        p.add_term(m("d"), 1.into());
        assert_eq!(p.to_string(), "c^2 + d");
        let q = CdPolynomial::term(m("1"), 2) - CdPolynomial::from(m("cd"));
        assert_eq!(q.to_string(), "-cd + 2");
    }

    #[test]
    fn homogeneous_parts_partition() {
        let p = CdPolynomial::from(m("c"))
            + CdPolynomial::term(m("d"), 3)
            + CdPolynomial::from(m("c^2"))
            + CdPolynomial::e();
        let mut sum = CdPolynomial::zero();
        for deg in -1..=2 {
            sum += &p.homogeneous_part(deg);
        }
        assert_eq!(sum, p);
        assert!(!p.is_homogeneous());
        assert_eq!(p.degree(), Some(2));
    }
}

//! Elements of the tensor square, the codomain of the coproducts and of `μ*`.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::CdMonomial;
use super::poly::CdPolynomial;

pub type TensorKey = (CdMonomial, CdMonomial);

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<TensorKey, BigInt>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(left: CdMonomial, right: CdMonomial) -> Self {
        Self::term(left, right, 1)
    }

    pub fn term(left: CdMonomial, right: CdMonomial, coeff: impl Into<BigInt>) -> Self {
        let mut t = Self::zero();
        t.add_term(left, right, coeff.into());
        t
    }

    /// `p ⊗ q`, expanded bilinearly.
    pub fn tensor(p: &CdPolynomial, q: &CdPolynomial) -> Self {
        let mut t = Self::zero();
        for (a, x) in p.terms() {
            for (b, y) in q.terms() {
                t.add_term(a.clone(), b.clone(), x * y);
            }
        }
        t
    }

    pub fn add_term(&mut self, left: CdMonomial, right: CdMonomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
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

    /// Adds `coeff * (left ⊗ right)` given as exponent lists; negative
    /// entries on either side kill the term.
    pub fn add_lists(&mut self, left: &[i64], right: &[i64], coeff: impl Into<BigInt>) {
        if let (Some(l), Some(r)) = (CdMonomial::from_list(left), CdMonomial::from_list(right)) {
            self.add_term(l, r, coeff.into());
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for ((l, r), c) in &other.terms {
            self.add_term(l.clone(), r.clone(), c * scale);
        }
    }

    pub fn coefficient(&self, left: &CdMonomial, right: &CdMonomial) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, TensorKey, BigInt> {
        self.terms.iter()
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

    pub fn scale(&self, k: &BigInt) -> TensorElement {
        let mut t = TensorElement::zero();
        t.add_scaled(self, k);
        t
    }

    /// `(u ⊗ v)* = v* ⊗ u*`.
    pub fn reverse(&self) -> TensorElement {
        TensorElement {
            terms: self
                .terms
                .iter()
                .map(|((l, r), c)| ((r.reverse(), l.reverse()), c.clone()))
                .collect(),
        }
    }

    /// Left module action `u·(x ⊗ y) = (ux) ⊗ y`.
    pub fn left_mul(&self, u: &CdPolynomial) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            for (m, k) in u.terms() {
                if let Some(lm) = m.concat(l) {
                    out.add_term(lm, r.clone(), c * k);
                }
            }
        }
        out
    }

    /// Right module action `(x ⊗ y)·v = x ⊗ (yv)`.
    pub fn right_mul(&self, v: &CdPolynomial) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            for (m, k) in v.terms() {
                if let Some(rm) = r.concat(m) {
                    out.add_term(l.clone(), rm, c * k);
                }
            }
        }
        out
    }

    /// `(f ⊗ id)` for a linear map given on monomials.
    pub fn map_left<F>(&self, mut f: F) -> TensorElement
    where
        F: FnMut(&CdMonomial) -> CdPolynomial,
    {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            for (m, k) in f(l).terms() {
                out.add_term(m.clone(), r.clone(), c * k);
            }
        }
        out
    }

    /// `(id ⊗ f)` for a linear map given on monomials.
    pub fn map_right<F>(&self, mut f: F) -> TensorElement
    where
        F: FnMut(&CdMonomial) -> CdPolynomial,
    {
        let mut out = TensorElement::zero();
        for ((l, r), c) in &self.terms {
            for (m, k) in f(r).terms() {
                out.add_term(l.clone(), m.clone(), c * k);
            }
        }
        out
    }

    /// Applies a bilinear map `u ⊗ v ↦ f(u, v)` and sums.
    pub fn contract<F>(&self, mut f: F) -> CdPolynomial
    where
        F: FnMut(&CdMonomial, &CdMonomial) -> CdPolynomial,
    {
        let mut out = CdPolynomial::zero();
        for ((l, r), c) in &self.terms {
            out.add_scaled(&f(l, r), c);
        }
        out
    }

    /// Inner product against the basis of pure tensors.
    pub fn pairing(&self, other: &TensorElement) -> BigInt {
        self.terms
            .iter()
            .filter_map(|(k, c)| other.terms.get(k).map(|d| c * d))
            .sum()
    }
}

impl FromIterator<(TensorKey, BigInt)> for TensorElement {
    fn from_iter<I: IntoIterator<Item = (TensorKey, BigInt)>>(iter: I) -> Self {
        let mut t = TensorElement::zero();
        for ((l, r), c) in iter {
            t.add_term(l, r, c);
        }
        t
    }
}

impl AddAssign<&TensorElement> for TensorElement {
    fn add_assign(&mut self, rhs: &TensorElement) {
        for ((l, r), c) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }
}

impl SubAssign<&TensorElement> for TensorElement {
    fn sub_assign(&mut self, rhs: &TensorElement) {
        for ((l, r), c) in &rhs.terms {
            self.add_term(l.clone(), r.clone(), -c);
        }
    }
}

impl Add for TensorElement {
    type Output = TensorElement;
    fn add(mut self, rhs: TensorElement) -> TensorElement {
        self += &rhs;
        self
    }
}

impl Sub for TensorElement {
    type Output = TensorElement;
    fn sub(mut self, rhs: TensorElement) -> TensorElement {
        self -= &rhs;
        self
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((l, r), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{l}⊗{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> CdMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn module_actions_and_reverse() {
        let t = TensorElement::pure(m("c"), m("d"));
        let u = CdPolynomial::from(m("d"));
        assert_eq!(t.left_mul(&u), TensorElement::pure(m("dc"), m("d")));
        assert_eq!(t.right_mul(&u), TensorElement::pure(m("c"), m("d^2")));
        assert_eq!(
            TensorElement::pure(m("cd"), m("c^2d")).reverse(),
            TensorElement::pure(m("dc^2"), m("dc"))
        );
    }

    #[test]
    fn e_is_killed_by_module_actions() {
        let t = TensorElement::pure(CdMonomial::e(), m("c"));
        assert!(t.left_mul(&CdPolynomial::one()).is_zero());
        assert_eq!(
            t.right_mul(&CdPolynomial::one()),
            TensorElement::pure(CdMonomial::e(), m("c"))
        );
    }
}

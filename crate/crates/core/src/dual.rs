//! The dual structure: the bullet product, the derivations `S`, `S'`, `T`,
//! the map `μ*`, and decomposition over the free generators `1, d, d², …`.
//!
//! All formulas are written on exponent lists. A list with a negative entry
//! is zero. The one exception is the single-entry list `(-1)`, which arises
//! from decrementing the monomial `1` and stands for `e`; this is what makes
//! `S(1) = e` and `μ*(1) = 2 e⊗e` come out of the uniform formulas.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{CdMonomial, CdPolynomial, TensorElement};
use crate::error::AlgebraError;

fn to_list(m: &CdMonomial) -> Vec<i64> {
    m.exponents().iter().map(|&x| x as i64).collect()
}

/// Like [`CdMonomial::from_list`] but reads `(-1)` as `e`.
fn from_list_ext(list: &[i64]) -> Option<CdMonomial> {
    if list == [-1] {
        Some(CdMonomial::e())
    } else {
        CdMonomial::from_list(list)
    }
}

/// `(M',m)·(n,N') = (M',m-1,n,N') + (M',m,n-1,N') + 2(M',m+n+1,N')`, with
/// `e` as the two-sided unit.
pub fn bullet(u: &CdMonomial, v: &CdMonomial) -> CdPolynomial {
    if u.is_e() {
        return CdPolynomial::from(v.clone());
    }
    if v.is_e() {
        return CdPolynomial::from(u.clone());
    }
    let (left, right) = (to_list(u), to_list(v));
    let (m, n) = (left[left.len() - 1], right[0]);
    let head = &left[..left.len() - 1];
    let tail = &right[1..];
    let build = |mid: &[i64]| -> Vec<i64> {
        let mut l = head.to_vec();
        l.extend_from_slice(mid);
        l.extend_from_slice(tail);
        l
    };
    let mut out = CdPolynomial::zero();
    out.add_list(&build(&[m - 1, n]), 1);
    out.add_list(&build(&[m, n - 1]), 1);
    out.add_list(&build(&[m + n + 1]), 2);
    out
}

pub fn bullet_poly(p: &CdPolynomial, q: &CdPolynomial) -> CdPolynomial {
    let mut out = CdPolynomial::zero();
    for (u, x) in p.terms() {
        for (v, y) in q.terms() {
            out.add_scaled(&bullet(u, v), &(x * y));
        }
    }
    out
}

/// Iterated bullet product; the empty product is `e`.
pub fn bullet_all<'a>(factors: impl IntoIterator<Item = &'a CdPolynomial>) -> CdPolynomial {
    factors
        .into_iter()
        .fold(CdPolynomial::e(), |acc, f| bullet_poly(&acc, f))
}

/// The bullet product applied to a tensor, i.e. `· ∘ t`.
pub fn bullet_tensor(t: &TensorElement) -> CdPolynomial {
    t.contract(bullet)
}

/// `S` on a monomial: every decrement plus every merge
/// `(…, m_i + m_{i+1} + 1, …)`.
pub fn s_monomial(m: &CdMonomial) -> CdPolynomial {
    let list = to_list(m);
    let mut out = CdPolynomial::zero();
    for i in 0..list.len() {
        let mut l = list.clone();
        l[i] -= 1;
        if let Some(x) = from_list_ext(&l) {
            out.add_term(x, BigInt::one());
        }
    }
    for i in 0..list.len().saturating_sub(1) {
        let mut l = list[..i].to_vec();
        l.push(list[i] + list[i + 1] + 1);
        l.extend_from_slice(&list[i + 2..]);
        out.add_list(&l, 1);
    }
    out
}

/// The derivation `S`, dual to `Ĝ`.
pub fn derivation_s(p: &CdPolynomial) -> CdPolynomial {
    p.map_linear(s_monomial)
}

/// `S'(M) = Σ (m_1..m_i)·(m_{i+1}..m_k)`.
pub fn s_prime_monomial(m: &CdMonomial) -> CdPolynomial {
    let list = m.exponents();
    let mut out = CdPolynomial::zero();
    for i in 1..list.len() {
        let a = CdMonomial::from_exponents(list[..i].to_vec());
        let b = CdMonomial::from_exponents(list[i..].to_vec());
        out += &bullet(&a, &b);
    }
    out
}

pub fn derivation_s_prime(p: &CdPolynomial) -> CdPolynomial {
    p.map_linear(s_prime_monomial)
}

/// `μ*`, dual to `μ`: `e⊗(m_1-1,…) + (…,m_k-1)⊗e + Σ (m_1..m_i)⊗(m_{i+1}..m_k)`.
pub fn mu_star_monomial(m: &CdMonomial) -> TensorElement {
    let mut out = TensorElement::zero();
    if m.is_e() {
        return out;
    }
    let list = to_list(m);
    let e = CdMonomial::e();
    let mut first = list.clone();
    first[0] -= 1;
    if let Some(x) = from_list_ext(&first) {
        out.add_term(e.clone(), x, BigInt::one());
    }
    let mut last = list.clone();
    *last.last_mut().expect("non-empty") -= 1;
    if let Some(x) = from_list_ext(&last) {
        out.add_term(x, e, BigInt::one());
    }
    let exps = m.exponents();
    for i in 1..exps.len() {
        out.add_term(
            CdMonomial::from_exponents(exps[..i].to_vec()),
            CdMonomial::from_exponents(exps[i..].to_vec()),
            BigInt::one(),
        );
    }
    out
}

pub fn mu_star(p: &CdPolynomial) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, k) in p.terms() {
        out.add_scaled(&mu_star_monomial(m), k);
    }
    out
}

/// `T` on a monomial of `F`: the first decrement once, later decrements and
/// all merges twice.
pub fn t_monomial(m: &CdMonomial) -> CdPolynomial {
    let list = to_list(m);
    let mut out = CdPolynomial::zero();
    for i in 0..list.len() {
        let mut l = list.clone();
        l[i] -= 1;
        out.add_list(&l, if i == 0 { 1 } else { 2 });
    }
    for i in 0..list.len().saturating_sub(1) {
        let mut l = list[..i].to_vec();
        l.push(list[i] + list[i + 1] + 1);
        l.extend_from_slice(&list[i + 2..]);
        out.add_list(&l, 2);
    }
    out
}

/// The cubical derivation `T`, dual to `Ĥ`; defined on `F` only.
pub fn derivation_t(p: &CdPolynomial) -> Result<CdPolynomial, AlgebraError> {
    if p.has_e() {
        return Err(AlgebraError::ContainsE { op: "T" });
    }
    Ok(p.map_linear(t_monomial))
}

/// A rational combination of bullet products of the generators `d^k`;
/// each key lists the exponents `k` of the factors in order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    terms: BTreeMap<Vec<usize>, BigRational>,
}

#[derive(Serialize, Deserialize)]
struct DecompTermRepr {
    coeff_num: String,
    coeff_den: String,
    factors: Vec<usize>,
}

impl Decomposition {
    fn generator(k: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![k], BigRational::one());
        Decomposition { terms }
    }

    fn add_scaled(&mut self, other: &Decomposition, scale: &BigRational) {
        for (f, c) in &other.terms {
            let entry = self.terms.entry(f.clone()).or_insert_with(BigRational::zero);
            *entry += c * scale;
            if entry.is_zero() {
                self.terms.remove(f);
            }
        }
    }

    /// Right bullet-multiplication by the generator `d^k`.
    fn times_generator(&self, k: usize) -> Decomposition {
        Decomposition {
            terms: self
                .terms
                .iter()
                .map(|(f, c)| {
                    let mut f = f.clone();
                    f.push(k);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigRational)> {
        self.terms.iter().map(|(f, c)| (f.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies out the bullet products. Fails if the rational
    /// combination does not land in the integral span.
    pub fn evaluate(&self) -> Result<CdPolynomial, AlgebraError> {
        let mut num: BTreeMap<CdMonomial, BigRational> = BTreeMap::new();
        let mut cache: HashMap<Vec<usize>, CdPolynomial> = HashMap::new();
        for (factors, c) in &self.terms {
            let prod = product_of_generators(factors, &mut cache);
            for (m, k) in prod.terms() {
                let e = num.entry(m.clone()).or_insert_with(BigRational::zero);
                *e += c * BigRational::from_integer(k.clone());
            }
        }
        let mut out = CdPolynomial::zero();
        for (m, c) in num {
            if !c.is_integer() {
                return Err(AlgebraError::NotIntegral(m.to_string()));
            }
            out.add_term(m, c.to_integer());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<DecompTermRepr> = self
            .terms
            .iter()
            .map(|(f, c)| DecompTermRepr {
                coeff_num: c.numer().to_string(),
                coeff_den: c.denom().to_string(),
                factors: f.clone(),
            })
            .collect();
        serde_json::to_value(rows).expect("plain data serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let rows: Vec<DecompTermRepr> = serde_json::from_value(v.clone()).ok()?;
        let mut out = Decomposition::default();
        for r in rows {
            let num: BigInt = r.coeff_num.parse().ok()?;
            let den: BigInt = r.coeff_den.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            let mut single = Decomposition::default();
            single.terms.insert(r.factors, BigRational::one());
            out.add_scaled(&single, &BigRational::new(num, den));
        }
        Some(out)
    }
}

impl std::fmt::Display for Decomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (factors, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            let names: Vec<String> = factors
                .iter()
                .map(|&k| CdMonomial::d_pow(k).to_string())
                .collect();
            write!(f, "({})", names.join("·"))?;
        }
        Ok(())
    }
}

fn product_of_generators(
    factors: &[usize],
    cache: &mut HashMap<Vec<usize>, CdPolynomial>,
) -> CdPolynomial {
    if let Some(p) = cache.get(factors) {
        return p.clone();
    }
    let p = match factors.split_last() {
        None => CdPolynomial::e(),
        Some((&k, rest)) => {
            let head = product_of_generators(rest, cache);
            bullet_poly(&head, &CdPolynomial::from(CdMonomial::d_pow(k)))
        }
    };
    cache.insert(factors.to_vec(), p.clone());
    p
}

/// Writes monomials of `F` in terms of the free generators `d^k` under the
/// bullet product. Results are memoized across calls on the same value.
#[derive(Default)]
pub struct FreeDecomposer {
    memo: HashMap<CdMonomial, Decomposition>,
}

impl FreeDecomposer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Peels the trailing `c`-run before the trailing `d`-run: for
    /// `v = (U, m, 0^k)` with `m > 0`,
    /// `2v = (U, m-1)·(0^{k+1}) - (U, m-2, 0^{k+1})`.
    pub fn decompose(&mut self, v: &CdMonomial) -> Result<Decomposition, AlgebraError> {
        if v.is_e() {
            return Err(AlgebraError::ContainsE { op: "decompose" });
        }
        if let Some(d) = self.memo.get(v) {
            return Ok(d.clone());
        }
        let exps = v.exponents();
        let result = match exps.iter().rposition(|&x| x > 0) {
            None => Decomposition::generator(exps.len() - 1),
            Some(pos) => {
                let m = exps[pos] as i64;
                let k = exps.len() - 1 - pos;
                let head: Vec<i64> = exps[..pos].iter().map(|&x| x as i64).collect();
                let mut lower = head.clone();
                lower.push(m - 1);
                let lower = CdMonomial::from_list(&lower).expect("m > 0");
                let mut out = self.decompose(&lower)?.times_generator(k);
                let mut same = head;
                same.push(m - 2);
                same.extend(std::iter::repeat_n(0, k + 1));
                if let Some(same) = CdMonomial::from_list(&same) {
                    let d = self.decompose(&same)?;
                    out.add_scaled(&d, &-BigRational::one());
                }
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                let mut scaled = Decomposition::default();
                scaled.add_scaled(&out, &half);
                scaled
            }
        };
        self.memo.insert(v.clone(), result.clone());
        Ok(result)
    }
}

/// Convenience wrapper around a fresh [`FreeDecomposer`].
pub fn free_decompose(v: &CdMonomial) -> Result<Decomposition, AlgebraError> {
    FreeDecomposer::new().decompose(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> CdMonomial {
        s.parse().unwrap()
    }

    fn p(terms: &[(&str, i64)]) -> CdPolynomial {
        terms
            .iter()
            .map(|(s, k)| (m(s), BigInt::from(*k)))
            .collect()
    }

    #[test]
    fn bullet_initial_conditions() {
        assert_eq!(bullet(&m("1"), &m("1")), p(&[("c", 2)]));
        assert_eq!(bullet(&m("1"), &m("c")), p(&[("d", 1), ("c^2", 2)]));
        assert_eq!(bullet(&m("c"), &m("1")), p(&[("d", 1), ("c^2", 2)]));
        assert_eq!(bullet(&m("1"), &m("d")), p(&[("cd", 2)]));
        assert_eq!(bullet(&m("d"), &m("1")), p(&[("dc", 2)]));
        assert_eq!(bullet(&m("c"), &m("c")), p(&[("dc", 1), ("cd", 1), ("c^3", 2)]));
        assert_eq!(bullet(&m("c"), &m("d")), p(&[("d^2", 1), ("c^2d", 2)]));
        assert_eq!(bullet(&m("d"), &m("c")), p(&[("d^2", 1), ("dc^2", 2)]));
        assert_eq!(bullet(&m("d"), &m("d")), p(&[("dcd", 2)]));
        assert_eq!(bullet(&CdMonomial::e(), &m("cd")), p(&[("cd", 1)]));
    }

    #[test]
    fn s_values() {
        assert_eq!(s_monomial(&m("c^4")), p(&[("c^3", 1)]));
        assert_eq!(s_monomial(&m("d")), p(&[("c", 1)]));
        assert_eq!(s_monomial(&m("cd")), p(&[("d", 1), ("c^2", 1)]));
        assert_eq!(s_monomial(&m("1")), CdPolynomial::e());
        assert!(s_monomial(&CdMonomial::e()).is_zero());
    }

    #[test]
    fn s_prime_values() {
        assert_eq!(s_prime_monomial(&m("d")), p(&[("c", 2)]));
        assert!(s_prime_monomial(&m("c^3")).is_zero());
        assert_eq!(s_prime_monomial(&m("cd")), p(&[("d", 1), ("c^2", 2)]));
    }

    #[test]
    fn mu_star_values() {
        let e = CdMonomial::e();
        let mut t = TensorElement::zero();
        t.add_term(m("d"), e.clone(), 1.into());
        t.add_term(m("1"), m("c"), 1.into());
        assert_eq!(mu_star_monomial(&m("(0,1)")), t);
        let mut t = TensorElement::zero();
        t.add_term(e.clone(), m("1"), 1.into());
        t.add_term(m("1"), e.clone(), 1.into());
        assert_eq!(mu_star_monomial(&m("c")), t);
        assert_eq!(
            mu_star_monomial(&m("1")),
            TensorElement::term(e.clone(), e, 2)
        );
    }

    #[test]
    fn t_values() {
        assert!(t_monomial(&m("1")).is_zero());
        assert_eq!(t_monomial(&m("c")), p(&[("1", 1)]));
        assert_eq!(t_monomial(&m("d")), p(&[("c", 2)]));
        assert_eq!(t_monomial(&m("c^2")), p(&[("c", 1)]));
        assert!(derivation_t(&CdPolynomial::e()).is_err());
    }

    #[test]
    fn c_cubed_decomposition() {
        // 8c^3 = 1·1·1·1 - 2 d·1 - 2 (1·d); four unit factors are needed to
        // reach degree 3.
        let d = free_decompose(&m("c^3")).unwrap();
        let eighth = BigRational::new(1.into(), 8.into());
        let quarter = BigRational::new((-1).into(), 4.into());
        let mut expected = Decomposition::default();
        expected.terms.insert(vec![0, 0, 0, 0], eighth);
        expected.terms.insert(vec![1, 0], quarter.clone());
        expected.terms.insert(vec![0, 1], quarter);
        assert_eq!(d, expected);
        assert_eq!(d.evaluate().unwrap(), p(&[("c^3", 1)]));
        assert_eq!(d.to_string(), "1/8 (1·1·1·1) - 1/4 (1·d) - 1/4 (d·1)");
    }

    #[test]
    fn decomposition_json_round_trip() {
        let d = free_decompose(&m("cdc")).unwrap();
        let v = d.to_json();
        assert_eq!(Decomposition::from_json(&v), Some(d));
    }
}

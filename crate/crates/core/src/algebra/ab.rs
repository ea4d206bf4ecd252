//! Polynomials in the non-commuting variables `a`, `b` and the change of
//! basis to and from `c = a + b`, `d = ab + ba`.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::monomial::{CdMonomial, Letter};
use super::poly::CdPolynomial;
use super::qpoly::QPoly;
use crate::error::{AlgebraError, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ab {
    A,
    B,
}

/// A word in `a`, `b`. Words compare by length first, then
/// lexicographically with `a < b`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct AbWord(Vec<Ab>);

impl AbWord {
    pub fn new(letters: Vec<Ab>) -> Self {
        AbWord(letters)
    }

    pub fn empty() -> Self {
        AbWord(Vec::new())
    }

    pub fn letters(&self) -> &[Ab] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &AbWord) -> AbWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        AbWord(v)
    }

    /// The word `u_S`: `b` at the (1-based) positions in `set`, `a` elsewhere.
    pub fn from_rank_set(n: usize, set: impl IntoIterator<Item = usize>) -> AbWord {
        let mut v = vec![Ab::A; n];
        for i in set {
            v[i - 1] = Ab::B;
        }
        AbWord(v)
    }

    /// Bitmask of positions holding `b` (bit `i-1` for position `i`).
    pub fn b_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == Ab::B)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Decodes the word as a product of blocks `a ↦ c`, `ab ↦ d`, the unique
    /// cd-monomial whose expansion has this word as its least term.
    pub fn leading_cd_monomial(&self) -> Option<CdMonomial> {
        let mut letters = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            match (self.0[i], self.0.get(i + 1)) {
                (Ab::A, Some(Ab::B)) => {
                    letters.push(Letter::D);
                    i += 2;
                }
                (Ab::A, _) => {
                    letters.push(Letter::C);
                    i += 1;
                }
                (Ab::B, _) => return None,
            }
        }
        Some(CdMonomial::from_letters(&letters))
    }
}

impl Ord for AbWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AbWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            f.write_str(match l {
                Ab::A => "a",
                Ab::B => "b",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbWord({self})")
    }
}

impl FromStr for AbWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s == "1" {
            return Ok(AbWord::empty());
        }
        s.chars()
            .map(|ch| match ch {
                'a' => Ok(Ab::A),
                'b' => Ok(Ab::B),
                _ => Err(ParseError::Syntax(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(AbWord)
    }
}

/// Coefficient rings used for ab-polynomials.
pub trait Coeff: Clone + PartialEq + Zero + One + fmt::Display + Send + Sync {
    fn add_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Whether the value needs parentheses when printed before a word.
    fn is_compound(&self) -> bool;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Option<Self>;
}

impl Coeff for BigInt {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_compound(&self) -> bool {
        false
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Option<Self> {
        v.as_str()?.parse().ok()
    }
}

impl Coeff for QPoly {
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn is_compound(&self) -> bool {
        self.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
    }
    fn to_json(&self) -> Value {
        let cs: Vec<String> = self.coeffs().iter().map(BigInt::to_string).collect();
        json!({ "q_poly": cs })
    }
    fn from_json(v: &Value) -> Option<Self> {
        let arr = v.get("q_poly")?.as_array()?;
        let cs = arr
            .iter()
            .map(|x| x.as_str()?.parse::<BigInt>().ok())
            .collect::<Option<Vec<_>>>()?;
        Some(QPoly::from_coeffs(cs))
    }
}

#[derive(Clone, PartialEq)]
pub struct AbPolynomial<C: Coeff = BigInt> {
    terms: BTreeMap<AbWord, C>,
}

impl<C: Coeff> Default for AbPolynomial<C> {
    fn default() -> Self {
        AbPolynomial {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coeff> AbPolynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(AbWord::empty(), C::one())
    }

    pub fn term(w: AbWord, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    /// `a` or `b` as a polynomial.
    pub fn letter(l: Ab) -> Self {
        Self::term(AbWord::new(vec![l]), C::one())
    }

    pub fn add_term(&mut self, w: AbWord, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.neg_ref());
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul_ref(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, x) in &self.terms {
            for (v, y) in &other.terms {
                out.add_term(u.concat(v), x.mul_ref(y));
            }
        }
        out
    }

    pub fn coefficient(&self, w: &AbWord) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> btree_map::Iter<'_, AbWord, C> {
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

    pub fn map_coeffs<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> AbPolynomial<D> {
        let mut out = AbPolynomial::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// `{"degree": n, "terms": [{"word": "ab", "coeff": ...}]}` in word order.
    pub fn to_json(&self) -> Value {
        let degree = self.terms.keys().map(AbWord::len).max().unwrap_or(0);
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| json!({ "word": w.to_string(), "coeff": c.to_json() }))
            .collect();
        json!({ "degree": degree, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let mut p = Self::zero();
        for t in v.get("terms")?.as_array()? {
            let w: AbWord = t.get("word")?.as_str()?.parse().ok()?;
            p.add_term(w, C::from_json(t.get("coeff")?)?);
        }
        Some(p)
    }
}

impl AbPolynomial<QPoly> {
    /// Specializes `q` to an integer.
    pub fn eval_q(&self, q: &BigInt) -> AbPolynomial<BigInt> {
        self.map_coeffs(|c| c.eval(q))
    }
}

impl<C: Coeff> fmt::Display for AbPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else if c.is_compound() {
                if w.is_empty() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "({c}){w}")?;
                }
            } else if w.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}{w}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for AbPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbPolynomial({self})")
    }
}

/// All words in the expansion of a single cd-monomial (each with coefficient 1).
fn expand_monomial(m: &CdMonomial) -> Option<Vec<AbWord>> {
    let letters = m.letters()?;
    let mut words: Vec<Vec<Ab>> = vec![Vec::new()];
    for l in letters {
        let blocks: &[&[Ab]] = match l {
            Letter::C => &[&[Ab::A], &[Ab::B]],
            Letter::D => &[&[Ab::A, Ab::B], &[Ab::B, Ab::A]],
        };
        words = words
            .into_iter()
            .flat_map(|w| {
                blocks.iter().map(move |b| {
                    let mut w = w.clone();
                    w.extend_from_slice(b);
                    w
                })
            })
            .collect();
    }
    Some(words.into_iter().map(AbWord).collect())
}

/// Substitutes `c = a + b`, `d = ab + ba`.
pub fn expand_to_ab(p: &CdPolynomial) -> Result<AbPolynomial, AlgebraError> {
    let mut out = AbPolynomial::zero();
    for (m, c) in p.terms() {
        let words = expand_monomial(m).ok_or(AlgebraError::ContainsE {
            op: "expand_to_ab",
        })?;
        for w in words {
            out.add_term(w, c.clone());
        }
    }
    Ok(out)
}

/// Inverse of [`expand_to_ab`] on its image: peel the least surviving word,
/// decode it, subtract, repeat.
pub fn ab_to_cd(p: &AbPolynomial) -> Result<CdPolynomial, AlgebraError> {
    let mut rest = p.clone();
    let mut out = CdPolynomial::zero();
    while let Some((w, c)) = rest.terms.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
        let m = w
            .leading_cd_monomial()
            .ok_or_else(|| AlgebraError::NotEulerianRepresentable {
                word: w.to_string(),
            })?;
        for word in expand_monomial(&m).expect("decoded monomial is not e") {
            rest.add_term(word, -c.clone());
        }
        out.add_term(m, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(s: &str) -> AbWord {
        s.parse().unwrap()
    }

    fn cd(s: &str) -> CdPolynomial {
        CdPolynomial::from(s.parse::<CdMonomial>().unwrap())
    }

    #[test]
    fn expand_b3() {
        let p = cd("c^2") + cd("d");
        let q = expand_to_ab(&p).unwrap();
        assert_eq!(q.to_string(), "aa + 2ab + 2ba + bb");
        assert_eq!(ab_to_cd(&q).unwrap(), p);
    }

    #[test]
    fn ab_to_cd_rejects_non_eulerian() {
        let mut p = AbPolynomial::zero();
        p.add_term(ab("a"), BigInt::from(1));
        p.add_term(ab("b"), BigInt::from(2));
        assert_eq!(
            ab_to_cd(&p),
            Err(AlgebraError::NotEulerianRepresentable { word: "b".into() })
        );
    }

    #[test]
    fn expand_rejects_e() {
        assert!(expand_to_ab(&CdPolynomial::e()).is_err());
        assert!(expand_to_ab(&CdPolynomial::zero()).unwrap().is_zero());
    }

    #[test]
    fn leading_word_decoding() {
        assert_eq!(ab("aab").leading_cd_monomial(), Some("cd".parse().unwrap()));
        assert_eq!(ab("aba").leading_cd_monomial(), Some("dc".parse().unwrap()));
        assert_eq!(ab("abb").leading_cd_monomial(), None);
        assert_eq!(AbWord::empty().leading_cd_monomial(), Some(CdMonomial::one()));
    }

    #[test]
    fn json_round_trip_q() {
        let mut p: AbPolynomial<QPoly> = AbPolynomial::zero();
        p.add_term(ab("a"), QPoly::one());
        p.add_term(ab("b"), QPoly::q_pow(1));
        let v = p.to_json();
        assert_eq!(v["terms"][1]["coeff"]["q_poly"], json!(["0", "1"]));
        assert_eq!(AbPolynomial::<QPoly>::from_json(&v), Some(p.clone()));
        assert_eq!(p.to_string(), "a + qb");
    }
}

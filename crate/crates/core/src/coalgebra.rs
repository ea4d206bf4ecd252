//! Coproducts, the product `μ`, and the derivations `G`, `Ĝ`, `H`, `Ĥ`.
//!
//! Every operator here is linear and determined by its value on letters
//! through the derivation rule `D(uv) = D(u)v + uD(v)`, so monomials are
//! handled by summing over letter positions.

use num_bigint::BigInt;

use crate::algebra::{CdMonomial, CdPolynomial, Letter, TensorElement};
use crate::error::AlgebraError;
use Letter::{C, D};

fn word_parts(m: &CdMonomial) -> Vec<(CdMonomial, Letter, CdMonomial)> {
    let word = m.letters().unwrap_or_default();
    (0..word.len())
        .map(|i| {
            (
                CdMonomial::from_letters(&word[..i]),
                word[i],
                CdMonomial::from_letters(&word[i + 1..]),
            )
        })
        .collect()
}

fn cat3(a: &CdMonomial, b: &CdMonomial, c: &CdMonomial) -> CdMonomial {
    a.concat(b)
        .and_then(|ab| ab.concat(c))
        .expect("factors are not e")
}

type Images = &'static [(&'static [Letter], i64)];

/// Applies the derivation with the given letter images to a monomial of `F`.
fn derive_monomial(m: &CdMonomial, on_c: Images, on_d: Images) -> CdPolynomial {
    let mut out = CdPolynomial::zero();
    for (pre, letter, post) in word_parts(m) {
        let images = match letter {
            Letter::C => on_c,
            Letter::D => on_d,
        };
        for &(word, k) in images {
            let mid = CdMonomial::from_letters(word);
            out.add_term(cat3(&pre, &mid, &post), BigInt::from(k));
        }
    }
    out
}

const G_C: Images = &[(&[D], 1)];
const G_D: Images = &[(&[C, D], 1)];
const H_C: Images = &[(&[D], 2)];
const H_D: Images = &[(&[C, D], 1), (&[D, C], 1)];

fn reject_e(p: &CdPolynomial, op: &'static str) -> Result<(), AlgebraError> {
    if p.has_e() {
        Err(AlgebraError::ContainsE { op })
    } else {
        Ok(())
    }
}

/// `Δ` on a monomial of `F`.
pub fn coproduct_monomial(m: &CdMonomial) -> TensorElement {
    let mut out = TensorElement::zero();
    let c = CdMonomial::c();
    for (pre, letter, post) in word_parts(m) {
        match letter {
            Letter::C => out.add_term(pre, post, BigInt::from(2)),
            Letter::D => {
                let left = pre.concat(&c).expect("not e");
                let right = c.concat(&post).expect("not e");
                out.add_term(pre, right, BigInt::from(1));
                out.add_term(left, post, BigInt::from(1));
            }
        }
    }
    out
}

/// `Δ`, the coproduct on `F`.
pub fn coproduct(p: &CdPolynomial) -> Result<TensorElement, AlgebraError> {
    reject_e(p, "Δ")?;
    let mut out = TensorElement::zero();
    for (m, k) in p.terms() {
        out.add_scaled(&coproduct_monomial(m), k);
    }
    Ok(out)
}

/// `Δ̂` on a single monomial, `e` included.
pub fn coproduct_ext_monomial(m: &CdMonomial) -> TensorElement {
    let e = CdMonomial::e();
    if m.is_e() {
        return TensorElement::pure(e.clone(), e);
    }
    let mut out = coproduct_monomial(m);
    out.add_term(e.clone(), m.clone(), BigInt::from(1));
    out.add_term(m.clone(), e, BigInt::from(1));
    out
}

/// `Δ̂(u) = Δ(u) + e⊗u + u⊗e`, `Δ̂(e) = e⊗e`.
pub fn coproduct_ext(p: &CdPolynomial) -> TensorElement {
    let mut out = TensorElement::zero();
    for (m, k) in p.terms() {
        out.add_scaled(&coproduct_ext_monomial(m), k);
    }
    out
}

/// The counit: the coefficient of `e`.
pub fn counit(p: &CdPolynomial) -> BigInt {
    p.coefficient(&CdMonomial::e())
}

/// `μ` on a pure tensor.
pub fn mu_pure(u: &CdMonomial, v: &CdMonomial) -> CdPolynomial {
    match (u.is_e(), v.is_e()) {
        (true, true) => CdPolynomial::term(CdMonomial::one(), 2),
        (true, false) => CdPolynomial::from(CdMonomial::c().concat(v).expect("not e")),
        (false, true) => CdPolynomial::from(u.concat(&CdMonomial::c()).expect("not e")),
        (false, false) => CdPolynomial::from(cat3(u, &CdMonomial::d(), v)),
    }
}

/// `μ(e⊗e) = 2`, `μ(e⊗v) = cv`, `μ(v⊗e) = vc`, `μ(u⊗v) = udv`.
pub fn mu(t: &TensorElement) -> CdPolynomial {
    t.contract(mu_pure)
}

pub fn g_monomial(m: &CdMonomial) -> CdPolynomial {
    derive_monomial(m, G_C, G_D)
}

/// The derivation `G` with `G(c) = d`, `G(d) = cd`.
pub fn g(p: &CdPolynomial) -> Result<CdPolynomial, AlgebraError> {
    reject_e(p, "G")?;
    Ok(p.map_linear(g_monomial))
}

pub fn g_hat_monomial(m: &CdMonomial) -> CdPolynomial {
    if m.is_e() {
        return CdPolynomial::one();
    }
    let mut out = g_monomial(m);
    out.add_term(m.concat(&CdMonomial::c()).expect("not e"), BigInt::from(1));
    out
}

/// `Ĝ(u) = G(u) + uc`, `Ĝ(e) = 1`.
pub fn g_hat(p: &CdPolynomial) -> CdPolynomial {
    p.map_linear(g_hat_monomial)
}

pub fn h_monomial(m: &CdMonomial) -> CdPolynomial {
    derive_monomial(m, H_C, H_D)
}

/// The derivation `H` with `H(c) = 2d`, `H(d) = cd + dc`.
pub fn h(p: &CdPolynomial) -> Result<CdPolynomial, AlgebraError> {
    reject_e(p, "H")?;
    Ok(p.map_linear(h_monomial))
}

/// `Ĥ` on a monomial of `F`; callers must not pass `e`.
pub fn h_hat_monomial(m: &CdMonomial) -> CdPolynomial {
    debug_assert!(!m.is_e());
    let mut out = h_monomial(m);
    out.add_term(m.concat(&CdMonomial::c()).expect("not e"), BigInt::from(1));
    out
}

/// `Ĥ(u) = H(u) + uc`, defined on `F` only.
pub fn h_hat(p: &CdPolynomial) -> Result<CdPolynomial, AlgebraError> {
    reject_e(p, "Ĥ")?;
    Ok(p.map_linear(h_hat_monomial))
}

pub fn delta_comodule_monomial(m: &CdMonomial) -> TensorElement {
    let mut out = coproduct_monomial(m);
    out.add_term(m.clone(), CdMonomial::e(), BigInt::from(1));
    out
}

/// `δ(u) = Δ(u) + u⊗e`, the comodule map `F → F ⊗ F̂`.
pub fn delta_comodule(p: &CdPolynomial) -> Result<TensorElement, AlgebraError> {
    reject_e(p, "δ")?;
    let mut out = TensorElement::zero();
    for (m, k) in p.terms() {
        out.add_scaled(&delta_comodule_monomial(m), k);
    }
    Ok(out)
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

    fn m(s: &str) -> CdMonomial {
        s.parse().unwrap()
    }

    fn t(terms: &[(&str, &str, i64)]) -> TensorElement {
        terms
            .iter()
            .map(|(l, r, k)| ((m(l), m(r)), BigInt::from(*k)))
            .collect()
    }

    #[test]
    fn coproduct_values() {
        assert_eq!(coproduct(&p(&[("c", 1)])).unwrap(), t(&[("1", "1", 2)]));
        assert_eq!(
            coproduct(&p(&[("c^2", 1)])).unwrap(),
            t(&[("1", "c", 2), ("c", "1", 2)])
        );
        assert!(coproduct(&p(&[("1", 1)])).unwrap().is_zero());
        assert!(coproduct(&CdPolynomial::e()).is_err());
    }

    #[test]
    fn coproduct_ext_values() {
        assert_eq!(coproduct_ext(&CdPolynomial::e()), t(&[("e", "e", 1)]));
        assert_eq!(
            coproduct_ext(&p(&[("d", 1)])),
            t(&[("1", "c", 1), ("c", "1", 1), ("d", "e", 1), ("e", "d", 1)])
        );
        assert_eq!(
            coproduct_ext(&p(&[("1", 1)])),
            t(&[("e", "1", 1), ("1", "e", 1)])
        );
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(&t(&[("1", "1", 1)])), p(&[("d", 1)]));
        assert_eq!(mu(&t(&[("e", "c", 1)])), p(&[("c^2", 1)]));
        assert_eq!(mu(&t(&[("e", "e", 1)])), p(&[("1", 2)]));
    }

    #[test]
    fn g_values() {
        assert_eq!(g_hat(&p(&[("c", 1)])), p(&[("c^2", 1), ("d", 1)]));
        assert_eq!(
            g_hat(&p(&[("c^2", 1), ("d", 1)])),
            p(&[("c^3", 1), ("cd", 2), ("dc", 2)])
        );
        assert!(g(&p(&[("1", 1)])).unwrap().is_zero());
        assert_eq!(g_hat(&CdPolynomial::e()), CdPolynomial::one());
    }

    #[test]
    fn h_values() {
        assert_eq!(h_hat(&p(&[("c", 1)])).unwrap(), p(&[("c^2", 1), ("d", 2)]));
        assert_eq!(h_hat(&p(&[("d", 1)])).unwrap(), p(&[("cd", 1), ("dc", 2)]));
        assert!(h(&p(&[("1", 1)])).unwrap().is_zero());
        assert!(h_hat(&CdPolynomial::e()).is_err());
        // Ψ(C_3) -> Ψ(C_4) pins down Ĥ(d).
        assert_eq!(
            h_hat(&p(&[("c^2", 1), ("d", 2)])).unwrap(),
            p(&[("c^3", 1), ("cd", 4), ("dc", 6)])
        );
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_comodule(&p(&[("1", 1)])).unwrap(), t(&[("1", "e", 1)]));
        assert_eq!(
            delta_comodule(&p(&[("c", 1)])).unwrap(),
            t(&[("1", "1", 2), ("c", "e", 1)])
        );
        assert_eq!(
            delta_comodule(&p(&[("d", 1)])).unwrap(),
            t(&[("1", "c", 1), ("c", "1", 1), ("d", "e", 1)])
        );
    }
}

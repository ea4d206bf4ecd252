//! Cubical analogues of the `β` product rules for `γ`, checked exhaustively.
//!
//! Unlike `β`, `γ` is not invariant under reversal (`γ(cd) = 4`,
//! `γ(dc) = 6`), so the switch rules only reverse factors that are
//! followed by something.

use num_bigint::BigInt;

use super::products::{add_on_triples, choose, mono, monomials, product_pairs, sign_name};
use super::report::{CheckKind, Functional, Instance, ScanReport};
use crate::algebra::{CdMonomial, CdPolynomial};
use crate::dual::{bullet, bullet_all, bullet_poly, derivation_t};
use crate::lattice::{beta, gamma, gamma_poly};

fn word(parts: &[&CdMonomial]) -> CdMonomial {
    parts
        .iter()
        .try_fold(CdMonomial::one(), |acc, p| acc.concat(p))
        .expect("no factor is e")
}

pub fn cubical_property_suite(max_degree: usize) -> ScanReport {
    let d = max_degree as i64;
    let mut r = ScanReport::new("cubical", &[("max_degree", max_degree.to_string())]);
    let f = Functional::Gamma;
    let pairs = product_pairs(d);

    // γ(u·v) = C(m+n+1, m) 2^{n+1} γ(u) β(v), against a multiple of 1.
    assert_eq!(gamma(&CdMonomial::one()), BigInt::from(1));
    r.run_check("product-formula", CheckKind::Theorem, f, &pairs, |(u, v), out| {
        let (m, n) = (u.degree(), v.degree());
        let k = choose(m + n + 1, m) * (BigInt::from(1) << (n + 1)) * gamma(u) * beta(v);
        out.push(Instance::eq(bullet(u, v), CdPolynomial::one().scale(&k)));
    });

    let positive: Vec<CdMonomial> = monomials(d.min(10)).into_iter().filter(|m| m.degree() >= 1).collect();
    r.run_check("reduction", CheckKind::Theorem, f, &positive, |v, out| {
        let t = derivation_t(&mono(v)).expect("v is not e");
        out.push(Instance::eq(t, mono(v)));
    });

    r.run_check("switch", CheckKind::Theorem, f, &pairs, |(u, v), out| {
        out.push(Instance::eq(bullet(u, v), bullet(u, &v.reverse())));
    });
    let triples: Vec<(CdMonomial, CdMonomial, CdMonomial)> = monomials(d - 2)
        .iter()
        .flat_map(|u| pairs.iter().map(move |(v, w)| (u.clone(), v.clone(), w.clone())))
        .filter(|(u, v, w)| u.degree() + v.degree() + w.degree() + 2 <= d)
        .collect();
    r.run_check("switch-triple", CheckKind::Theorem, f, &triples, |(u, v, w), out| {
        let lhs = bullet_all([&mono(u), &mono(v), &mono(w)]);
        let rhs = bullet_poly(&bullet(u, w), &mono(v));
        out.push(Instance::eq(lhs, rhs));
    });

    // Add-on: β order of (u, v) matches γ order of (w·u, w·v), and γ order
    // of (u, v) matches γ order of (u·w, v·w).
    let triples = add_on_triples(4.min(d), d);
    let mut fails = Vec::new();
    for (u, v, w) in &triples {
        let left = beta(u).cmp(&beta(v));
        let left_after = gamma_poly(&bullet(w, u)).cmp(&gamma_poly(&bullet(w, v)));
        if left != left_after {
            fails.push(format!(
                "u = {u}, v = {v}, w = {w}: β(u) {} β(v) but γ(w·u) {} γ(w·v)",
                sign_name(left),
                sign_name(left_after)
            ));
        }
        let right = gamma(u).cmp(&gamma(v));
        let right_after = gamma_poly(&bullet(u, w)).cmp(&gamma_poly(&bullet(v, w)));
        if right != right_after {
            fails.push(format!(
                "u = {u}, v = {v}, w = {w}: γ(u) {} γ(v) but γ(u·w) {} γ(v·w)",
                sign_name(right),
                sign_name(right_after)
            ));
        }
    }
    r.record("add-on", CheckKind::Theorem, 2 * triples.len() as u64, fails);

    // u dcd v d ~ u dcd v* d and u dcd v dcd w ~ u dcd v* dcd w; here u, v,
    // w range over words, the empty word included.
    let dcd: CdMonomial = "dcd".parse().expect("valid");
    let dd = CdMonomial::d();
    let words = monomials(d - 6);
    let seeds: Vec<(CdMonomial, CdMonomial)> = words
        .iter()
        .flat_map(|u| words.iter().map(move |v| (u.clone(), v.clone())))
        .filter(|(u, v)| u.degree() + v.degree() + 6 <= d)
        .collect();
    r.run_check("dcd-identity", CheckKind::Theorem, f, &seeds, |(u, v), out| {
        out.push(Instance::eq(
            mono(&word(&[u, &dcd, v, &dd])),
            mono(&word(&[u, &dcd, &v.reverse(), &dd])),
        ));
        for w in &words {
            if u.degree() + v.degree() + w.degree() + 8 > d {
                break;
            }
            out.push(Instance::eq(
                mono(&word(&[u, &dcd, v, &dcd, w])),
                mono(&word(&[u, &dcd, &v.reverse(), &dcd, w])),
            ));
        }
    });

    // γ(u d v) ≥ γ(u c² v). The stated equality at u = v = empty fails:
    // γ(d) = 2, γ(c²) = 1. It is reported as a separate open check.
    let c2: CdMonomial = "c^2".parse().expect("valid");
    let words = monomials(d - 2);
    let seeds: Vec<(CdMonomial, CdMonomial)> = words
        .iter()
        .flat_map(|u| words.iter().map(move |v| (u.clone(), v.clone())))
        .filter(|(u, v)| u.degree() + v.degree() + 2 <= d)
        .collect();
    r.run_check("cc-d", CheckKind::Theorem, f, &seeds, |(u, v), out| {
        out.push(Instance::ge(mono(&word(&[u, &dd, v])), mono(&word(&[u, &c2, v]))));
    });
    r.run_check("cc-d-base-equality", CheckKind::Conjecture, f, &[()], |_, out| {
        out.push(Instance::eq(mono(&dd), mono(&c2)));
    });

    let cd: CdMonomial = "cd".parse().expect("valid");
    let mut fails = Vec::new();
    let (g1, g2) = (gamma(&cd), gamma(&cd.reverse()));
    if g1 != BigInt::from(4) || g2 != BigInt::from(6) {
        fails.push(format!("γ(cd) = {g1}, γ(dc) = {g2}"));
    }
    r.record("asymmetry", CheckKind::Theorem, 1, fails);
    r.note(format!("γ(cd) = {g1}, γ(dc) = {g2}"));

    // γ of n ones is 2^{n-1} (n-1)!, one step of the product formula per factor.
    // The unshifted 2^n n! is wrong from n = 1 on (γ(1) = 1) and is kept as a
    // conjecture so the mismatch stays visible.
    let (mut fails, mut unshifted) = (Vec::new(), Vec::new());
    let mut ones = Vec::new();
    let mut expected = BigInt::from(1);
    let mut naive = BigInt::from(1);
    for n in 1..=(d + 1) {
        if n > 1 {
            expected *= 2 * (n - 1);
        }
        naive *= 2 * n;
        ones.push(CdPolynomial::one());
        let value = gamma_poly(&bullet_all(&ones));
        if value != expected {
            fails.push(format!("{n} factors: {value} ≠ {expected}"));
        }
        if value != naive {
            unshifted.push(format!("{n} factors: {value} ≠ 2^{n}·{n}! = {naive}"));
        }
    }
    r.record("ones-product", CheckKind::Theorem, ones.len() as u64, fails);
    r.record("ones-product-unshifted", CheckKind::Conjecture, ones.len() as u64, unshifted);
    r.finish()
}

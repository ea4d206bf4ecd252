//! Product rules for `β`: the binomial product formula, invariance
//! under `S`, the add-on and switch rules, and the ω alternating sum.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::binomial;

use super::omega::{alternating_sum_beta, boolean_ab_index, is_valid_ab, omega};
use super::report::{CheckKind, Functional, Instance, ScanReport};
use crate::algebra::{CdMonomial, CdPolynomial};
use crate::dual::{bullet, bullet_all, derivation_s};
use crate::lattice::{beta, beta_poly};

/// Monomials of `F` (no `e`) of degree `0..=max`.
pub(crate) fn monomials(max: i64) -> Vec<CdMonomial> {
    if max < 0 {
        return Vec::new();
    }
    CdMonomial::all_up_to_degree(max)
        .into_iter()
        .filter(|m| !m.is_e())
        .collect()
}

pub(crate) fn choose(n: i64, k: i64) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

pub(crate) fn mono(m: &CdMonomial) -> CdPolynomial {
    CdPolynomial::from(m.clone())
}

/// Pairs `(u, v)` of monomials whose bullet product has degree `≤ max`.
pub(crate) fn product_pairs(max: i64) -> Vec<(CdMonomial, CdMonomial)> {
    let all = monomials(max - 1);
    let mut out = Vec::new();
    for u in &all {
        for v in &all {
            if u.degree() + v.degree() < max {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// Triples `u, v, w` with `(u, v)` and `w` pairs of equal degree, for the
/// add-on rules. Degrees are capped at `each`.
pub(crate) fn add_on_triples(each: i64, max: i64) -> Vec<(CdMonomial, CdMonomial, CdMonomial)> {
    let all = monomials(each);
    let mut out = Vec::new();
    for u in &all {
        for v in &all {
            if u < v && u.degree() == v.degree() {
                for w in &all {
                    if u.degree() + w.degree() < max {
                        out.push((u.clone(), v.clone(), w.clone()));
                    }
                }
            }
        }
    }
    out
}

pub fn scan_products(max_degree: usize) -> ScanReport {
    let d = max_degree as i64;
    let mut r = ScanReport::new("products", &[("max_degree", max_degree.to_string())]);
    let f = Functional::Beta;
    let pairs = product_pairs(d);

    // β(u·v) = C(m+n+2, m+1) β(u) β(v); the right side is a multiple of 1.
    r.run_check("product-formula", CheckKind::Theorem, f, &pairs, |(u, v), out| {
        let (m, n) = (u.degree(), v.degree());
        let k = choose(m + n + 2, m + 1) * beta(u) * beta(v);
        out.push(Instance::eq(bullet(u, v), CdPolynomial::one().scale(&k)));
    });

    let all = monomials(d);
    r.run_check("reduction", CheckKind::Theorem, f, &all, |v, out| {
        out.push(Instance::eq(derivation_s(&mono(v)), mono(v)));
    });

    let pair_seeds: Vec<_> = pairs.iter().filter(|(u, v)| u.degree().max(v.degree()) <= 5).collect();
    r.run_check("switch", CheckKind::Theorem, f, &pair_seeds, |(u, v), out| {
        let uv = bullet(u, v);
        out.push(Instance::eq(uv.clone(), bullet(u, &v.reverse())));
        out.push(Instance::eq(uv.clone(), bullet(&u.reverse(), v)));
        out.push(Instance::eq(uv, bullet(v, u)));
    });

    // sign(β(u) - β(v)) = sign(β(u·w) - β(v·w)), which covers both iffs.
    let triples = add_on_triples(4.min(d), d);
    let mut fails = Vec::new();
    for (u, v, w) in &triples {
        let before = beta(u).cmp(&beta(v));
        let after = beta_poly(&bullet(u, w)).cmp(&beta_poly(&bullet(v, w)));
        if before != after {
            fails.push(format!(
                "u = {u}, v = {v}, w = {w}: β(u) {} β(v) but β(u·w) {} β(v·w)",
                sign_name(before),
                sign_name(after)
            ));
        }
    }
    r.record("add-on", CheckKind::Theorem, triples.len() as u64, fails);

    // β(1·1·…·1) = n!.
    let mut fails = Vec::new();
    let mut factorial = BigInt::from(1);
    let mut ones = Vec::new();
    for n in 1..=(d + 1) / 2 {
        factorial *= n;
        ones.push(CdPolynomial::one());
        let value = beta_poly(&bullet_all(&ones));
        if value != factorial {
            fails.push(format!("{n} factors: {value} ≠ {factorial}"));
        }
    }
    r.record("ones-product", CheckKind::Theorem, ones.len() as u64, fails);

    // ω and the alternating-sum formula.
    let (mut checked, mut fails) = (0u64, Vec::new());
    for n in 0..=d.min(9) {
        let ab = boolean_ab_index(n as usize);
        let mut seen = HashSet::new();
        for v in CdMonomial::all_of_degree(n) {
            checked += 1;
            let w = omega(&v);
            if n >= 1 && !is_valid_ab(&w) {
                fails.push(format!("ω({v}) = {w} is not a valid ab-word"));
            }
            if !seen.insert(w.clone()) {
                fails.push(format!("ω is not injective at {v}"));
            }
            let s = alternating_sum_beta(&v, &ab);
            if s != beta(&v) {
                fails.push(format!("alternating sum at {v}: {s} ≠ {}", beta(&v)));
            }
        }
    }
    r.record("omega-alternating-sum", CheckKind::Theorem, checked, fails);
    r.finish()
}

pub(crate) fn sign_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_formula_example() {
        // β(1·1) = C(2,1) = 2, and 1·1 = 2c² + ... evaluates to 2.
        let one = CdMonomial::one();
        assert_eq!(beta_poly(&bullet(&one, &one)), BigInt::from(2));
    }

    #[test]
    fn pairs_respect_degree() {
        assert!(product_pairs(3)
            .iter()
            .all(|(u, v)| u.degree() + v.degree() < 3));
        assert_eq!(product_pairs(1).len(), 1);
    }
}

//! Small helpers for writing statements in list notation.

use num_bigint::BigInt;

use crate::algebra::{CdMonomial, CdPolynomial};
use crate::dual::bullet_poly;

/// All lists of degree exactly `d` (`d ≥ 0`), canonical order.
pub fn lists_of_degree(d: usize) -> Vec<Vec<u32>> {
    CdMonomial::all_of_degree(d as i64)
        .into_iter()
        .map(CdMonomial::into_exponents)
        .collect()
}

/// All lists of degree `0..=d`.
pub fn lists_up_to(d: usize) -> Vec<Vec<u32>> {
    (0..=d).flat_map(lists_of_degree).collect()
}

/// All lists of degree `≤ d`, with the empty list first.
pub fn lists_or_empty_up_to(d: i64) -> Vec<Vec<u32>> {
    let mut v = vec![Vec::new()];
    if d >= 0 {
        v.extend(lists_up_to(d as usize));
    }
    v
}

pub fn list_degree(list: &[u32]) -> i64 {
    if list.is_empty() {
        return -1;
    }
    list.iter().map(|&m| m as i64).sum::<i64>() + 2 * (list.len() as i64 - 1)
}

pub fn zeros(s: usize) -> Vec<i64> {
    vec![0; s]
}

/// Concatenation of list pieces, with possibly negative entries.
pub fn cat(parts: &[&[i64]]) -> Vec<i64> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

pub fn signed(list: &[u32]) -> Vec<i64> {
    list.iter().map(|&m| m as i64).collect()
}

/// The monomial of a list as a polynomial; zero if an entry is negative.
pub fn lp(list: &[i64]) -> CdPolynomial {
    CdMonomial::from_list(list)
        .map(CdPolynomial::from)
        .unwrap_or_default()
}

/// `Σ k · list`.
pub fn lin(terms: &[(i64, &[i64])]) -> CdPolynomial {
    let mut p = CdPolynomial::zero();
    for (k, l) in terms {
        p.add_list(l, *k);
    }
    p
}

/// Bullet product of lists.
pub fn bl(a: &[i64], b: &[i64]) -> CdPolynomial {
    bullet_poly(&lp(a), &lp(b))
}

pub fn bl3(a: &[i64], b: &[i64], c: &[i64]) -> CdPolynomial {
    bullet_poly(&bl(a, b), &lp(c))
}

pub fn scaled(p: CdPolynomial, k: i64) -> CdPolynomial {
    p.scale(&BigInt::from(k))
}

pub fn fmt_list(list: &[u32]) -> String {
    let parts: Vec<String> = list.iter().map(|m| m.to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        // Monomials of degree n are counted by Fibonacci numbers.
        let counts: Vec<usize> = (0..8).map(|d| lists_of_degree(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(list_degree(&[1, 0, 1]), 6);
        assert_eq!(list_degree(&[]), -1);
    }

    #[test]
    fn negative_lists_vanish() {
        assert!(lp(&[-1, 2]).is_zero());
        assert_eq!(lin(&[(2, &[0]), (-1, &[0])]), lp(&[0]));
    }
}

//! The map `ω` from cd-monomials to ab-monomials, the cd partial order, and
//! the alternating-sum expression of `β` through the ab-index.

use num_bigint::BigInt;

use crate::algebra::{expand_to_ab, Ab, AbPolynomial, AbWord, CdMonomial, CdPolynomial, Letter};
use crate::lattice::boolean_table;

/// Odd occurrences of `d` become `ab`, even ones `ba`. A `c` becomes `a` when
/// the first `d` to its right is an odd occurrence and `b` otherwise. The
/// `c`'s after the last of `k` d's are read as if a `(k+1)`-th `d` followed,
/// which keeps every image valid (`ω(c^n) = a^n`, `ω(d^2 c) = abbaa`).
pub fn omega(v: &CdMonomial) -> AbWord {
    let word = v.letters().unwrap_or_default();
    let mut out = Vec::with_capacity(v.degree().max(0) as usize);
    // Parity of the next d to the right of each position, scanning leftwards.
    let total_d = word.iter().filter(|&&l| l == Letter::D).count();
    let mut seen = 0;
    let mut next_d_odd = vec![false; word.len()];
    for (i, l) in word.iter().enumerate().rev() {
        if *l == Letter::D {
            seen += 1;
        }
        // Occurrence number of the nearest d at or to the right of i.
        let occurrence = total_d + 1 - seen;
        next_d_odd[i] = occurrence % 2 == 1;
    }
    let mut d_index = 0;
    for (i, l) in word.iter().enumerate() {
        match l {
            Letter::D => {
                d_index += 1;
                if d_index % 2 == 1 {
                    out.extend([Ab::A, Ab::B]);
                } else {
                    out.extend([Ab::B, Ab::A]);
                }
            }
            Letter::C => out.push(if next_d_odd[i] { Ab::A } else { Ab::B }),
        }
    }
    AbWord::new(out)
}

/// Begins with `a` and has no `aba` or `bab` factor.
pub fn is_valid_ab(w: &AbWord) -> bool {
    let l = w.letters();
    l.first() == Some(&Ab::A) && !l.windows(3).any(|t| t[0] != t[1] && t[1] != t[2])
}

/// Monomials covering `u`: one `c²` replaced by `d`.
pub fn cd_order_covers(u: &CdMonomial) -> Vec<CdMonomial> {
    let word = u.letters().unwrap_or_default();
    let mut out: Vec<CdMonomial> = (0..word.len().saturating_sub(1))
        .filter(|&i| word[i] == Letter::C && word[i + 1] == Letter::C)
        .map(|i| {
            let mut w = word[..i].to_vec();
            w.push(Letter::D);
            w.extend_from_slice(&word[i + 2..]);
            CdMonomial::from_letters(&w)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Rank in the cd order: the number of `d`'s.
pub fn cd_rank(u: &CdMonomial) -> usize {
    u.d_count()
}

/// Everything below `v`: each `d` either kept or replaced by `c²`.
pub fn cd_order_down_set(v: &CdMonomial) -> Vec<CdMonomial> {
    let word = v.letters().unwrap_or_default();
    let d_positions: Vec<usize> = (0..word.len()).filter(|&i| word[i] == Letter::D).collect();
    let mut out = Vec::with_capacity(1 << d_positions.len());
    for mask in 0..1usize << d_positions.len() {
        let mut w = Vec::new();
        let mut k = 0;
        for l in &word {
            if *l == Letter::D {
                if mask >> k & 1 == 1 {
                    w.extend([Letter::C, Letter::C]);
                } else {
                    w.push(Letter::D);
                }
                k += 1;
            } else {
                w.push(*l);
            }
        }
        out.push(CdMonomial::from_letters(&w));
    }
    out.sort();
    out
}

/// `Σ_{u ≤ v} (-1)^{ρ(v)-ρ(u)} β_ab(ω(u))` where `β_ab` reads coefficients of
/// the given ab-index.
pub fn alternating_sum_beta(v: &CdMonomial, ab_index: &AbPolynomial) -> BigInt {
    let rv = cd_rank(v);
    cd_order_down_set(v)
        .iter()
        .map(|u| {
            let c = ab_index.coefficient(&omega(u));
            if (rv - cd_rank(u)).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .sum()
}

/// The ab-index of `B_{n+1}`, from the cd-index table.
pub fn boolean_ab_index(n: usize) -> AbPolynomial {
    let psi: CdPolynomial = boolean_table().poly(n + 1);
    expand_to_ab(&psi).expect("Boolean index of rank ≥ 1 has no e term")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::beta;
    use std::collections::HashSet;

    fn m(s: &str) -> CdMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&m("cdc")).to_string(), "aabb");
        assert_eq!(omega(&m("cdd")).to_string(), "aabba");
        assert_eq!(omega(&m("d")).to_string(), "ab");
        assert_eq!(omega(&m("c^3")).to_string(), "aaa");
        assert_eq!(omega(&m("d^2c")).to_string(), "abbaa");
    }

    #[test]
    fn omega_image_is_valid_and_injective() {
        for n in 1..=9 {
            let mut seen = HashSet::new();
            for v in CdMonomial::all_of_degree(n) {
                let w = omega(&v);
                assert_eq!(w.len() as i64, n);
                assert!(is_valid_ab(&w), "{v} -> {w}");
                assert!(seen.insert(w), "ω not injective at {v}");
            }
        }
    }

    #[test]
    fn covers() {
        assert_eq!(cd_order_covers(&m("c^3")), vec![m("dc"), m("cd")]);
        assert_eq!(cd_order_covers(&m("dc^2")), vec![m("d^2")]);
        assert!(cd_order_covers(&m("d^3")).is_empty());
        for u in cd_order_covers(&m("c^4d")) {
            assert_eq!(cd_rank(&u), 2);
        }
    }

    #[test]
    fn alternating_sum_small() {
        let ab = boolean_ab_index(2);
        assert_eq!(alternating_sum_beta(&m("d"), &ab), BigInt::from(1));
        let ab4 = boolean_ab_index(4);
        assert_eq!(alternating_sum_beta(&m("cdc"), &ab4), BigInt::from(5));
        for n in 1..=7 {
            let ab = boolean_ab_index(n);
            for v in CdMonomial::all_of_degree(n as i64) {
                assert_eq!(alternating_sum_beta(&v, &ab), beta(&v), "{v}");
            }
        }
    }
}

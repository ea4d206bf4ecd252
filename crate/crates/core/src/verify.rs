//! Theorem-backed invariant suites. Each suite returns a [`ScanReport`]
//! whose checks are all test-failing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{ab_to_cd, expand_to_ab, CdMonomial, CdPolynomial, TensorElement};
use crate::analysis::{cubical_property_suite, ScanReport};
use crate::coalgebra::{
    coproduct_ext, coproduct_ext_monomial, counit, delta_comodule, g_hat, g_hat_monomial,
    h_hat, h_hat_monomial, mu,
};
use crate::dual::{
    bullet, bullet_poly, bullet_tensor, derivation_s, derivation_t, free_decompose, mu_star,
};
use crate::lattice::{
    beta, boolean_cd_index, boolean_table, cubical_table, euler_numbers, subspace_ab_index,
    BooleanMethod,
};
use crate::oracle::{
    ab_index_chain_weights, ab_index_from_flags, build_boolean, build_cube, chain_element,
    dehn_sommerville_check, dehn_sommerville_instances, dehn_sommerville_via_bullet,
    flag_f_vector, is_eulerian, rank_mask,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Core,
    Coalgebra,
    Dual,
    Lattice,
    Oracle,
    Cubical,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Core,
        Suite::Coalgebra,
        Suite::Dual,
        Suite::Lattice,
        Suite::Oracle,
        Suite::Cubical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Coalgebra => "coalgebra",
            Suite::Dual => "dual",
            Suite::Lattice => "lattice",
            Suite::Oracle => "oracle",
            Suite::Cubical => "cubical",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

pub fn verify(suite: Suite, max_degree: usize) -> ScanReport {
    match suite {
        Suite::Core => verify_core(max_degree),
        Suite::Coalgebra => verify_coalgebra(max_degree),
        Suite::Dual => verify_dual(max_degree),
        Suite::Lattice => verify_lattice(max_degree),
        Suite::Oracle => verify_oracle(max_degree),
        Suite::Cubical => cubical_property_suite(max_degree),
    }
}

fn new_report(suite: Suite, max_degree: usize) -> ScanReport {
    ScanReport::new(
        &format!("verify-{suite}"),
        &[("max_degree", max_degree.to_string())],
    )
}

fn mono(m: &CdMonomial) -> CdPolynomial {
    CdPolynomial::from(m.clone())
}

/// `None` when equal, a description otherwise.
fn same<T: PartialEq + fmt::Display>(what: impl fmt::Display, a: &T, b: &T) -> Option<String> {
    (a != b).then(|| format!("{what}: {a} ≠ {b}"))
}

/// `e` followed by the monomials of degree `0..=max`.
fn monomials_ext(max: i64) -> Vec<CdMonomial> {
    let mut out = vec![CdMonomial::e()];
    out.extend(CdMonomial::all_up_to_degree(max));
    out
}

fn monomials(max: i64) -> Vec<CdMonomial> {
    CdMonomial::all_up_to_degree(max)
}

fn verify_core(max_degree: usize) -> ScanReport {
    let mut r = new_report(Suite::Core, max_degree);
    let all = monomials_ext(max_degree as i64);
    r.run_law("parse-render", &all, |m| {
        let word: CdMonomial = m.to_string().parse().ok()?;
        let list: CdMonomial = m.to_list_string().parse().ok()?;
        (word != *m || list != *m).then(|| format!("{m} does not round-trip"))
    });
    r.run_law("reverse-involution", &all, |m| {
        same(format!("reverse twice of {m}"), &m.reverse().reverse(), m)
    });
    r.run_law("json-round-trip", &all, |m| {
        let p = mono(m).scale(&BigInt::from(-7));
        let text = serde_json::to_string(&p).ok()?;
        let back: CdPolynomial = serde_json::from_str(&text).ok()?;
        same(format!("JSON of {m}"), &back, &p)
    });
    let pairs: Vec<(CdMonomial, CdMonomial)> = monomials(max_degree as i64 / 2)
        .iter()
        .flat_map(|u| monomials(max_degree as i64 / 2).into_iter().map(move |v| (u.clone(), v)))
        .collect();
    r.run_law("concat-degree", &pairs, |(u, v)| {
        let w = u.concat(v)?;
        (w.degree() != u.degree() + v.degree()).then(|| format!("deg({u}{v}) = {}", w.degree()))
    });
    r.run_law("concat-reverse", &pairs, |(u, v)| {
        let lhs = u.concat(v)?.reverse();
        let rhs = v.reverse().concat(&u.reverse())?;
        same(format!("({u}{v})*"), &lhs, &rhs)
    });
    // Monomials of degree n are counted by Fibonacci numbers.
    let degrees: Vec<i64> = (0..=max_degree as i64).collect();
    r.run_law("fibonacci-count", &degrees, |&n| {
        let (mut a, mut b) = (1u64, 1u64);
        for _ in 0..n {
            (a, b) = (b, a + b);
        }
        let count = CdMonomial::all_of_degree(n).len() as u64;
        (count != a).then(|| format!("degree {n}: {count} monomials, expected {a}"))
    });
    r.run_law("negative-entry-is-zero", &[()], |_| {
        CdMonomial::from_list(&[1, -1, 0]).map(|m| format!("(1,-1,0) gave {m}"))
    });
    r.finish()
}

type Triple = BTreeMap<(CdMonomial, CdMonomial, CdMonomial), BigInt>;

fn push(t: &mut Triple, key: (CdMonomial, CdMonomial, CdMonomial), c: BigInt) {
    let slot = t.entry(key).or_default();
    *slot += c;
}

fn coassociativity(u: &CdMonomial) -> Option<String> {
    let outer = coproduct_ext_monomial(u);
    let (mut left, mut right) = (Triple::new(), Triple::new());
    for ((l, r), c) in outer.terms() {
        for ((a, b), k) in coproduct_ext_monomial(l).terms() {
            push(&mut left, (a.clone(), b.clone(), r.clone()), c * k);
        }
        for ((a, b), k) in coproduct_ext_monomial(r).terms() {
            push(&mut right, (l.clone(), a.clone(), b.clone()), c * k);
        }
    }
    left.retain(|_, v| !v.is_zero());
    right.retain(|_, v| !v.is_zero());
    (left != right).then(|| format!("Δ̂ is not coassociative at {u}"))
}

fn verify_coalgebra(max_degree: usize) -> ScanReport {
    let d = max_degree.min(8) as i64;
    let mut r = new_report(Suite::Coalgebra, max_degree);
    let ext = monomials_ext(d);
    let plain = monomials(d);
    r.run_law("coassociativity", &ext, coassociativity);
    r.run_law("counit", &ext, |u| {
        let t = coproduct_ext_monomial(u);
        let left = t.contract(|l, r| mono(r).scale(&counit(&mono(l))));
        let right = t.contract(|l, r| mono(l).scale(&counit(&mono(r))));
        same(format!("(ε⊗id)Δ̂({u})"), &left, &mono(u))
            .or_else(|| same(format!("(id⊗ε)Δ̂({u})"), &right, &mono(u)))
    });
    r.run_law("coderivation", &ext, |u| {
        let lhs = coproduct_ext(&g_hat_monomial(u));
        let t = coproduct_ext_monomial(u);
        let mut rhs = t.map_right(g_hat_monomial);
        rhs.add_scaled(&t.map_left(g_hat_monomial), &BigInt::from(1));
        same(format!("Δ̂Ĝ({u})"), &lhs, &rhs)
    });
    r.run_law("mu-identity", &ext, |u| {
        let lhs = g_hat_monomial(u).scale(&BigInt::from(2));
        same(format!("2Ĝ({u})"), &lhs, &mu(&coproduct_ext_monomial(u)))
    });
    r.run_law("reversal", &ext, |u| {
        same(format!("Δ̂({u}*)"), &coproduct_ext_monomial(&u.reverse()), &coproduct_ext_monomial(u).reverse())
            .or_else(|| same(format!("Ĝ({u}*)"), &g_hat_monomial(&u.reverse()), &g_hat_monomial(u).reverse()))
    });
    r.run_law("cubical-coderivation", &plain, |u| {
        let lhs = delta_comodule(&h_hat_monomial(u)).ok()?;
        let t = delta_comodule(&mono(u)).ok()?;
        let mut rhs = t.map_right(g_hat_monomial).scale(&BigInt::from(2));
        rhs.add_scaled(&t.map_left(h_hat_monomial), &BigInt::from(1));
        same(format!("δĤ({u})"), &lhs, &rhs)
    });
    // Ĝ and Ĥ step the Boolean and cubical indices.
    let ranks: Vec<usize> = (1..=d as usize + 1).collect();
    r.run_law("g-hat-steps-boolean", &ranks, |&n| {
        let next = g_hat(&boolean_table().poly(n - 1));
        same(format!("Ĝ(Ψ(B_{}))", n - 1), &next, &boolean_table().poly(n))
    });
    r.run_law("h-hat-steps-cubical", &ranks[1..], |&n| {
        let next = h_hat(&cubical_table().poly(n - 1)).ok()?;
        same(format!("Ĥ(Ψ(C_{}))", n - 1), &next, &cubical_table().poly(n))
    });
    r.finish()
}

fn verify_dual(max_degree: usize) -> ScanReport {
    let d = max_degree.min(8) as i64;
    let mut r = new_report(Suite::Dual, max_degree);
    let ext = monomials_ext(d);
    let pairs: Vec<(CdMonomial, CdMonomial)> = ext
        .iter()
        .flat_map(|u| ext.iter().map(move |v| (u.clone(), v.clone())))
        .filter(|(u, v)| u.degree() + v.degree() < d)
        .collect();
    r.run_law("derivation", &pairs, |(u, v)| {
        let lhs = derivation_s(&bullet(u, v));
        let mut rhs = bullet_poly(&derivation_s(&mono(u)), &mono(v));
        rhs += &bullet_poly(&mono(u), &derivation_s(&mono(v)));
        same(format!("S({u}·{v})"), &lhs, &rhs)
    });
    r.run_law("derivation-base", &[()], |_| {
        same("S(1)", &derivation_s(&CdPolynomial::one()), &CdPolynomial::e())
            .or_else(|| same("S(e)", &derivation_s(&CdPolynomial::e()), &CdPolynomial::zero()))
    });
    r.run_law("mu-star-identity", &ext, |u| {
        let lhs = derivation_s(&mono(u)).scale(&BigInt::from(2));
        same(format!("2S({u})"), &lhs, &bullet_tensor(&mu_star(&mono(u))))
    });
    r.run_law("associativity", &pairs, |(u, v)| {
        let w = CdMonomial::c();
        let lhs = bullet_poly(&bullet(u, v), &mono(&w));
        let rhs = bullet_poly(&mono(u), &bullet(v, &w));
        same(format!("({u}·{v})·c"), &lhs, &rhs)
    });
    // ⟨u·v, w⟩ = ⟨u⊗v, Δ̂w⟩, tested through the full image of Δ̂.
    let targets = monomials(d);
    r.run_law("pairing-coproduct", &targets, |w| {
        let image = coproduct_ext_monomial(w);
        let mut expected = TensorElement::zero();
        for u in monomials_ext(w.degree()) {
            for v in CdMonomial::all_of_degree(w.degree() - u.degree() - 1) {
                let k = bullet(&u, &v).coefficient(w);
                expected.add_term(u.clone(), v, k);
            }
        }
        (image != expected).then(|| format!("⟨·, {w}⟩ disagrees with Δ̂({w})"))
    });
    r.run_law("pairing-g-hat", &ext, |u| {
        // ⟨S(v), u⟩ = ⟨v, Ĝ(u)⟩ for all v one degree up.
        let gu = g_hat_monomial(u);
        CdMonomial::all_of_degree(u.degree() + 1).into_iter().find_map(|v| {
            let lhs = derivation_s(&mono(&v)).coefficient(u);
            same(format!("⟨S({v}), {u}⟩"), &lhs, &gu.coefficient(&v))
        })
    });
    r.run_law("pairing-mu", &ext, |w| {
        let image = mu_star(&mono(w));
        let mut expected = TensorElement::zero();
        for u in monomials_ext(w.degree() - 1) {
            for v in monomials_ext(w.degree() - u.degree() - 2) {
                if u.degree() + v.degree() + 2 == w.degree() {
                    let k = mu(&TensorElement::pure(u.clone(), v.clone())).coefficient(w);
                    expected.add_term(u.clone(), v, k);
                }
            }
        }
        (image != expected).then(|| format!("μ*({w}) is not dual to μ"))
    });
    let plain_pairs: Vec<_> = pairs.iter().filter(|(u, _)| !u.is_e()).collect();
    r.run_law("cubical-derivation", &plain_pairs, |(u, v)| {
        let lhs = derivation_t(&bullet(u, v)).ok()?;
        let mut rhs = bullet_poly(&derivation_t(&mono(u)).ok()?, &mono(v));
        rhs.add_scaled(&bullet_poly(&mono(u), &derivation_s(&mono(v))), &BigInt::from(2));
        same(format!("T({u}·{v})"), &lhs, &rhs)
    });
    r.run_law("pairing-h-hat", &monomials(d), |u| {
        let hu = h_hat_monomial(u);
        CdMonomial::all_of_degree(u.degree() + 1).into_iter().find_map(|v| {
            let lhs = derivation_t(&mono(&v)).ok()?.coefficient(u);
            same(format!("⟨T({v}), {u}⟩"), &lhs, &hu.coefficient(&v))
        })
    });
    r.run_law("free-decomposition", &monomials(d), |v| {
        let dec = free_decompose(v).ok()?;
        same(format!("evaluate(decompose({v}))"), &dec.evaluate().ok()?, &mono(v))
    });
    r.finish()
}

fn verify_lattice(max_degree: usize) -> ScanReport {
    let top = (max_degree + 1).min(14);
    let mut r = new_report(Suite::Lattice, max_degree);
    let ranks: Vec<usize> = (1..=top).collect();
    r.run_law("method-agreement", &ranks, |&n| {
        let g = boolean_cd_index(n, BooleanMethod::GHat);
        BooleanMethod::ALL.into_iter().find_map(|m| {
            same(format!("Ψ(B_{n}) by {m}"), &boolean_cd_index(n, m), &g)
        })
    });
    r.run_law("palindromy", &ranks, |&n| {
        let p = boolean_table().poly(n);
        same(format!("Ψ(B_{n})*"), &p.reverse(), &p)
    });
    let ij: Vec<(u32, u32)> = (0..=top as u32)
        .flat_map(|i| (0..=top as u32).map(move |j| (i, j)))
        .filter(|(i, j)| (i + j + 2) as usize <= top.saturating_sub(1))
        .collect();
    r.run_law("two-entry-closed-form", &ij, |&(i, j)| {
        let v = CdMonomial::from_exponents(vec![i, j]);
        let expected = num_integer::binomial(BigInt::from(i + j + 2), BigInt::from(i + 1)) - 1;
        same(format!("β({v})"), &beta(&v), &expected)
    });
    let ns: Vec<usize> = (1..=(top - 1) / 2).collect();
    let euler = euler_numbers(2 * top + 1);
    r.run_law("d-power-euler", &ns, |&n| {
        let lhs = beta(&CdMonomial::d_pow(n)) << n;
        same(format!("2^{n} β(d^{n})"), &lhs, &euler[2 * n + 1])
    });
    let sub: Vec<usize> = (1..=top.min(8)).collect();
    r.run_law("subspace-at-q-1", &sub, |&n| {
        let at_one = subspace_ab_index(n).eval_q(&BigInt::from(1));
        let boolean = expand_to_ab(&boolean_table().poly(n)).ok()?;
        same(format!("Ψ(L_{n}) at q = 1"), &at_one, &boolean)
    });
    r.finish()
}

fn verify_oracle(max_degree: usize) -> ScanReport {
    let mut r = new_report(Suite::Oracle, max_degree);
    let b_ranks: Vec<usize> = (1..=(max_degree + 1).min(8)).collect();
    let c_ranks: Vec<usize> = (1..=(max_degree + 1).min(7)).collect();
    r.run_law("boolean-flags", &b_ranks, |&n| {
        let p = build_boolean(n).ok()?;
        let ab = ab_index_from_flags(&p).ok()?;
        let chains = ab_index_chain_weights(&p).ok()?;
        let cd = ab_to_cd(&ab).ok()?;
        same(format!("B_{n} flags vs chains"), &ab, &chains)
            .or_else(|| same(format!("Ψ(B_{n})"), &cd, &boolean_table().poly(n)))
    });
    r.run_law("cubical-flags", &c_ranks, |&n| {
        let p = build_cube(n - 1).ok()?;
        let ab = ab_index_from_flags(&p).ok()?;
        let chains = ab_index_chain_weights(&p).ok()?;
        let cd = ab_to_cd(&ab).ok()?;
        same(format!("C_{n} flags vs chains"), &ab, &chains)
            .or_else(|| same(format!("Ψ(C_{n})"), &cd, &cubical_table().poly(n)))
    });
    r.run_law("eulerian", &b_ranks, |&n| {
        let b = build_boolean(n).ok()?;
        let c = build_cube(n - 1).ok()?;
        (!is_eulerian(&b) || !is_eulerian(&c)).then(|| format!("rank {n} is not Eulerian"))
    });
    let ds: Vec<(bool, usize)> = b_ranks
        .iter()
        .map(|&n| (true, n))
        .chain(c_ranks.iter().map(|&n| (false, n)))
        .filter(|&(_, n)| n >= 2)
        .collect();
    r.run_law("dehn-sommerville", &ds, |&(boolean, n)| {
        let p = if boolean { build_boolean(n) } else { build_cube(n - 1) }.ok()?;
        let f = flag_f_vector(&p).ok()?;
        let psi = if boolean { boolean_table() } else { cubical_table() }.poly(n);
        dehn_sommerville_instances(n - 1).into_iter().find_map(|inst| {
            if !dehn_sommerville_check(&f, &inst).ok()? {
                return Some(format!("rank {n}: {inst:?} fails on flag vector"));
            }
            let (lhs, rhs) = dehn_sommerville_via_bullet(n - 1, &inst).ok()?;
            (lhs.pairing(&psi) != rhs.pairing(&psi))
                .then(|| format!("rank {n}: {inst:?} fails through the bullet form"))
        })
    });
    // Pairing the chain element of S with Ψ gives f_S.
    r.run_law("chain-element", &b_ranks, |&n| {
        let f = flag_f_vector(&build_boolean(n).ok()?).ok()?;
        let psi = boolean_table().poly(n);
        (0..1usize << (n - 1)).find_map(|mask| {
            let set = crate::oracle::mask_ranks(mask);
            debug_assert_eq!(rank_mask(&set), mask);
            let got = chain_element(n - 1, &set).pairing(&psi);
            same(format!("B_{n}, S = {set:?}"), &got, &BigInt::from(f.get(mask)))
        })
    });
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let r = verify(s, 4);
            assert!(r.passed(), "{}", r.render());
        }
    }
}

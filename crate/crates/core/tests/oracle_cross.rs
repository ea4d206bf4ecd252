//! The recursive formulas checked against brute-force poset computations.

use cdindex::algebra::expand_to_ab;
use cdindex::lattice::{boolean_cd_index, cubical_cd_index, subspace_ab_index, BooleanMethod};
use cdindex::oracle::*;
use num_bigint::BigInt;

#[test]
fn boolean_formula_matches_oracle() {
    for r in 1..=7 {
        let p = build_boolean(r).unwrap();
        let oracle = ab_index_from_flags(&p).unwrap();
        let psi = boolean_cd_index(r, BooleanMethod::GHat);
        assert_eq!(expand_to_ab(&psi).unwrap(), oracle, "B_{r}");
    }
}

#[test]
fn cubical_formula_matches_oracle() {
    // The face lattice of the (n-1)-cube has rank n.
    for n in 1..=6 {
        let p = build_cube(n - 1).unwrap();
        let oracle = ab_index_chain_weights(&p).unwrap();
        assert_eq!(expand_to_ab(&cubical_cd_index(n)).unwrap(), oracle, "C_{n}");
    }
}

#[test]
fn subspace_recursion_matches_oracle() {
    for (q, max) in [(2usize, 4usize), (3, 3)] {
        for n in 1..=max {
            let p = build_subspace(q, n).unwrap();
            let oracle = ab_index_from_flags(&p).unwrap();
            let formula = subspace_ab_index(n).eval_q(&BigInt::from(q));
            assert_eq!(formula, oracle, "q = {q}, n = {n}");
        }
    }
}

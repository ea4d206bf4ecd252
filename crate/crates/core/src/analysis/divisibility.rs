//! Which `β` values of a given rank are divisible by a modulus, grouped
//! into classes of lists with provably equal `β`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::identities::ExplainedClasses;
use super::lists::fmt_list;
use super::report::{CheckKind, ScanReport, Table};
use crate::algebra::CdMonomial;
use crate::lattice::beta;

/// One class of lists whose common `β` is divisible by the modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibleClass {
    pub representative: Vec<u32>,
    pub members: Vec<Vec<u32>>,
    pub beta: BigInt,
}

/// Classes at `rank` (list degree `rank - 1`) with `modulus | β`, least
/// representative first, in canonical order.
pub fn divisible_classes(rank: usize, modulus: u64) -> Vec<DivisibleClass> {
    assert!(rank >= 1 && modulus >= 1);
    let classes = ExplainedClasses::compute(rank - 1);
    let m = BigInt::from(modulus);
    let mut out = Vec::new();
    for rep in classes.representatives() {
        let value = beta(&CdMonomial::from_exponents(rep.to_vec()));
        if (&value % &m).is_zero() {
            let idx = classes.class_index(rep).expect("representative is listed");
            out.push(DivisibleClass {
                representative: rep.to_vec(),
                members: classes.members(idx).iter().map(|l| l.to_vec()).collect(),
                beta: value,
            });
        }
    }
    out
}

pub fn scan_divisibility(rank: usize, modulus: u64) -> ScanReport {
    let mut r = ScanReport::new(
        "divisibility",
        &[("rank", rank.to_string()), ("modulus", modulus.to_string())],
    );
    let found = divisible_classes(rank, modulus);
    // Every member of a class must really share the value and the divisor.
    let m = BigInt::from(modulus);
    let mut checked = 0;
    let mut fails = Vec::new();
    for class in &found {
        for l in &class.members {
            checked += 1;
            let v = beta(&CdMonomial::from_exponents(l.clone()));
            if v != class.beta || !(&v % &m).is_zero() {
                fails.push(format!("{} has β = {v}, class value {}", fmt_list(l), class.beta));
            }
        }
    }
    r.record("class-values", CheckKind::Theorem, checked, fails);
    let mut table = Table::new(&["representative", "beta", "members"]);
    for c in &found {
        table.push(vec![
            fmt_list(&c.representative),
            c.beta.to_string(),
            c.members.len().to_string(),
        ]);
    }
    r.note(format!("{} classes", found.len()));
    r.table = Some(table);
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_one_takes_everything() {
        let all: usize = divisible_classes(6, 1).iter().map(|c| c.members.len()).sum();
        assert_eq!(all, super::super::lists::lists_of_degree(5).len());
    }
}

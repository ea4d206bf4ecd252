//! The monomials of largest `β` in each degree.

use num_bigint::BigInt;

use super::lists::{bl3, fmt_list, lin, lists_of_degree, signed, zeros};
use super::report::{CheckKind, Functional, Instance, ScanReport, Table};
use crate::lattice::beta_list;

/// Exhaustive argmax of `β` over lists of degree `n`, in canonical order,
/// with the maximal value.
pub fn find_maxima(n: usize) -> (BigInt, Vec<Vec<u32>>) {
    let lists = lists_of_degree(n);
    let values: Vec<BigInt> = lists.iter().map(|l| beta_list(&signed(l))).collect();
    let best = values.iter().max().cloned().unwrap_or_default();
    let arg = lists
        .into_iter()
        .zip(&values)
        .filter(|(_, v)| **v == best)
        .map(|(l, _)| l)
        .collect();
    (best, arg)
}

/// The maxima predicted by the closed description: `(1,0^s,1)` in even
/// degree `2s+4`, `(1,1,0^s,1)` and `(1,0^s,1,1)` in odd degree `2s+7`.
/// `None` for degrees 2, 3 and 5, where no list of that shape exists.
pub fn theorem_maxima(n: usize) -> Option<Vec<Vec<u32>>> {
    if n >= 4 && n.is_multiple_of(2) {
        let s = (n - 4) / 2;
        let mut v = vec![1];
        v.extend(std::iter::repeat_n(0, s));
        v.push(1);
        return Some(vec![v]);
    }
    if n >= 7 && n % 2 == 1 {
        let s = (n - 7) / 2;
        let mut a = vec![1, 1];
        a.extend(std::iter::repeat_n(0, s));
        a.push(1);
        let b: Vec<u32> = a.iter().rev().copied().collect();
        let mut v = vec![a, b];
        v.sort();
        v.dedup();
        return Some(v);
    }
    None
}

/// The maxima in the small degrees outside the closed description.
pub fn small_degree_maxima(n: usize) -> Option<Vec<Vec<u32>>> {
    match n {
        2 => Some(vec![vec![2], vec![0, 0]]),
        3 => Some(vec![vec![0, 1], vec![1, 0]]),
        5 => Some(vec![vec![0, 0, 1], vec![1, 0, 0]]),
        _ => None,
    }
}

fn sorted(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    v
}

pub fn scan_maxima(min_degree: usize, max_degree: usize) -> ScanReport {
    let mut r = ScanReport::new(
        "maxima",
        &[("min_degree", min_degree.to_string()), ("max_degree", max_degree.to_string())],
    );
    let mut table = Table::new(&["degree", "max_beta", "argmax", "source"]);
    let (mut checked, mut fails) = (0, Vec::new());
    for n in min_degree.max(2)..=max_degree {
        let (best, arg) = find_maxima(n);
        let (expected, source) = match theorem_maxima(n) {
            Some(e) => (e, "closed form"),
            None => (small_degree_maxima(n).expect("small degree"), "small degree"),
        };
        checked += 1;
        if sorted(arg.clone()) != sorted(expected.clone()) {
            fails.push(format!(
                "degree {n}: argmax {:?}, expected {:?}",
                arg.iter().map(|l| fmt_list(l)).collect::<Vec<_>>(),
                expected.iter().map(|l| fmt_list(l)).collect::<Vec<_>>()
            ));
        }
        let shown: Vec<String> = arg.iter().map(|l| fmt_list(l)).collect();
        table.push(vec![n.to_string(), best.to_string(), shown.join(" "), source.into()]);
    }
    r.record("maxima", CheckKind::Theorem, checked, fails);

    // β((0)·(0^2)·(0^s)) ≥ 4β(0^{s+2}) and 4β(0^{s+3}) > β((0^2)·(0^2)·(0^s)).
    let ss: Vec<usize> = (1..=max_degree).collect();
    r.run_check("bullet-0-00-zeros", CheckKind::Theorem, Functional::Beta, &ss, |&s, out| {
        if 2 * s + 2 <= max_degree {
            out.push(Instance::ge(
                bl3(&[0], &zeros(2), &zeros(s)),
                lin(&[(4, &zeros(s + 2))]),
            ));
        }
    });
    // The second one only matches its list form (0,0,0,0,0,M) > (0,1,1,0,M)
    // from s = 2 on; at s = 1 it is false (136 < 140).
    r.run_check("bullet-00-00-zeros", CheckKind::Theorem, Functional::Beta, &ss, |&s, out| {
        if s >= 2 && 2 * s + 4 <= max_degree {
            out.push(Instance::gt(
                lin(&[(4, &zeros(s + 3))]),
                bl3(&zeros(2), &zeros(2), &zeros(s)),
            ));
        }
    });
    if max_degree >= 6 {
        r.note("bullet-00-00-zeros starts at s = 2; at s = 1, 4β(0^4) = 136 < 140 = β((0^2)·(0^2)·(0))");
    }
    r.table = Some(table);
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(find_maxima(3).1, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(find_maxima(6).1, vec![vec![1, 0, 1]]);
        assert_eq!(theorem_maxima(7), Some(vec![vec![1, 1, 1]]));
        assert!(theorem_maxima(5).is_none());
    }

    #[test]
    fn bullet_00_00_needs_s_two() {
        let four_d3: BigInt = BigInt::from(4) * beta_list(&[0, 0, 0, 0]);
        let product = crate::lattice::beta_poly(&bl3(&[0, 0], &[0, 0], &[0]));
        assert_eq!((four_d3.clone(), product.clone()), (BigInt::from(136), BigInt::from(140)));
        assert!(four_d3 < product);
    }
}

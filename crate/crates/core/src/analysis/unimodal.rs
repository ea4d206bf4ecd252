//! Reverse unimodality of `a^k_{i,j} = β(i,…,i,j,i,…,i)` (the `j` in slot
//! `k`), with the identities and tangent-number inequality behind it.

use num_bigint::BigInt;
use num_integer::binomial;

use super::lists::{bl, cat, lin, lp, zeros};
use super::report::{CheckKind, Functional, Instance, ScanReport, Table};
use crate::lattice::{beta, beta_list, euler_numbers};
use crate::algebra::CdMonomial;

/// The list of length `l` with `j` at (1-based) position `k`, `i` elsewhere.
pub fn unimodal_list(i: u32, j: u32, l: usize, k: usize) -> Vec<i64> {
    let mut v = vec![i as i64; l];
    v[k - 1] = j as i64;
    v
}

pub fn unimodal_list_degree(i: u32, j: u32, l: usize) -> usize {
    (l - 1) * i as usize + j as usize + 2 * (l - 1)
}

/// `a^1, …, a^l`.
pub fn unimodal_sequence(i: u32, j: u32, l: usize) -> Vec<BigInt> {
    (1..=l).map(|k| beta_list(&unimodal_list(i, j, l, k))).collect()
}

/// Weakly decreasing, then weakly increasing.
pub fn is_reverse_unimodal(seq: &[BigInt]) -> bool {
    let mut k = 0;
    while k + 1 < seq.len() && seq[k] >= seq[k + 1] {
        k += 1;
    }
    while k + 1 < seq.len() && seq[k] <= seq[k + 1] {
        k += 1;
    }
    k + 1 >= seq.len()
}

/// With `a^k = a^{l+1-k}`, reverse unimodality is `a^k ≥ a^{k+1}` on the
/// first half.
fn half_instances(i: u32, j: u32, l: usize, out: &mut Vec<Instance>) {
    for k in 1..l {
        if 2 * (k + 1) <= l + 1 {
            out.push(Instance::ge(
                lp(&unimodal_list(i, j, l, k)),
                lp(&unimodal_list(i, j, l, k + 1)),
            ));
        }
    }
}

fn kind_for(i: u32, j: u32) -> CheckKind {
    if i == 0 && (j == 1 || j == 2) {
        CheckKind::Theorem
    } else {
        CheckKind::Conjecture
    }
}

/// One family `(i, j, l)`: the sequence as a table and its unimodality.
pub fn scan_unimodal(i: u32, j: u32, l: usize) -> ScanReport {
    assert!(j > i && l >= 1, "need j > i and l ≥ 1");
    let mut r = ScanReport::new(
        "unimodal",
        &[("i", i.to_string()), ("j", j.to_string()), ("l", l.to_string())],
    );
    let seeds = [()];
    r.run_check("reverse-unimodal", kind_for(i, j), Functional::Beta, &seeds, |_, out| {
        half_instances(i, j, l, out)
    });
    let seq = unimodal_sequence(i, j, l);
    let mut t = Table::new(&["i", "j", "l", "k", "value"]);
    for (k, v) in seq.iter().enumerate() {
        t.push(vec![i.to_string(), j.to_string(), l.to_string(), (k + 1).to_string(), v.to_string()]);
    }
    r.table = Some(t);
    r.finish()
}

/// All families with list degree `≤ max_degree`, plus the supporting
/// identities and inequalities.
pub fn scan_unimodal_suite(max_degree: usize) -> ScanReport {
    let mut r = ScanReport::new("unimodal-suite", &[("max_degree", max_degree.to_string())]);
    let mut families = Vec::new();
    for l in 1..=max_degree / 2 + 1 {
        for i in 0..=max_degree as u32 {
            for j in i + 1..=max_degree as u32 {
                if unimodal_list_degree(i, j, l) <= max_degree {
                    families.push((i, j, l));
                }
            }
        }
    }
    let by = |pred: fn(u32, u32) -> bool| -> Vec<(u32, u32, usize)> {
        families.iter().copied().filter(|&(i, j, _)| pred(i, j)).collect()
    };
    let f = Functional::Beta;
    // Strict decrease towards the middle for (0,1).
    r.run_check("unimodal-0-1", CheckKind::Theorem, f, &by(|i, j| i == 0 && j == 1), |&(i, j, l), out| {
        let dist = |k: usize| (2 * k as i64 - l as i64 - 1).abs();
        for k in 1..=l {
            for k2 in 1..=l {
                if dist(k) > dist(k2) {
                    out.push(Instance::gt(
                        lp(&unimodal_list(i, j, l, k)),
                        lp(&unimodal_list(i, j, l, k2)),
                    ));
                }
            }
        }
    });
    r.run_check("unimodal-0-2", CheckKind::Theorem, f, &by(|i, j| i == 0 && j == 2), |&(i, j, l), out| {
        half_instances(i, j, l, out)
    });
    r.run_check("first-step", CheckKind::Theorem, f, &families, |&(i, j, l), out| {
        if l == 2 {
            out.push(Instance::eq(
                lp(&unimodal_list(i, j, l, 1)),
                lp(&unimodal_list(i, j, l, 2)),
            ));
        } else if l >= 3 {
            out.push(Instance::gt(
                lp(&unimodal_list(i, j, l, 1)),
                lp(&unimodal_list(i, j, l, 2)),
            ));
        }
    });
    r.run_check("unimodal-general", CheckKind::Conjecture, f, &families, |&(i, j, l), out| {
        half_instances(i, j, l, out)
    });

    // β((0)·(0^s,1,0^t)) = 2β(1,0^{s-1},1,0^t) = β((1,0^s)·(0^{t+1}))
    //   = β((0^s,1)·(0^{t+1})) = β(0^{s+t+2}) + 2β(0^s,2,0^t).
    let mut st = Vec::new();
    for s in 1..=max_degree {
        for t in 0..=max_degree {
            if 2 + 2 * (s + t) <= max_degree {
                st.push((s, t));
            }
        }
    }
    r.run_check("adjoining-chain", CheckKind::Theorem, f, &st, |&(s, t), out| {
        let (zs, zt) = (zeros(s), zeros(t));
        let x0 = bl(&[0], &cat(&[&zs, &[1], &zt]));
        let x1 = lin(&[(2, &cat(&[&[1], &zeros(s - 1), &[1], &zt]))]);
        let x2 = bl(&cat(&[&[1], &zs]), &zeros(t + 1));
        let x3 = bl(&cat(&[&zs, &[1]]), &zeros(t + 1));
        let x4 = lin(&[(1, &zeros(s + t + 2)), (2, &cat(&[&zs, &[2], &zt]))]);
        out.push(Instance::eq(x0, x1.clone()));
        out.push(Instance::eq(x1, x2.clone()));
        out.push(Instance::eq(x2, x3.clone()));
        out.push(Instance::eq(x3, x4));
    });

    let ns: Vec<usize> = (2..=max_degree).filter(|n| 2 * n - 3 <= max_degree).collect();
    r.run_check("bullet-unimodal-1", CheckKind::Theorem, f, &ns, |&n, out| {
        for i in 1..n {
            out.push(Instance::ge(bl(&[0], &zeros(n - 1)), bl(&zeros(i), &zeros(n - i))));
        }
    });
    r.run_check("bullet-unimodal-2", CheckKind::Theorem, f, &ns, |&n, out| {
        for i in 2..n.saturating_sub(1) {
            out.push(Instance::ge(bl(&zeros(2), &zeros(n - 2)), bl(&zeros(i), &zeros(n - i))));
        }
    });

    // 2^n β(d^n) = E_{2n+1}.
    let euler = euler_numbers(2 * (max_degree / 2) + 2);
    let mut fails = Vec::new();
    let mut checked = 0;
    for n in 0..=max_degree / 2 {
        checked += 1;
        let lhs = BigInt::from(1u8) << n;
        let lhs = lhs * beta(&CdMonomial::d_pow(n));
        if lhs != euler[2 * n + 1] {
            fails.push(format!("2^{n} β(d^{n}) = {lhs} but E_{} = {}", 2 * n + 1, euler[2 * n + 1]));
        }
    }
    r.record("tangent-numbers", CheckKind::Theorem, checked, fails);

    // C(n,a) E_a E_b > C(n,c) E_c E_d for odd a+b = c+d = n, |a-b| > |c-d|.
    let euler = euler_numbers(15);
    let (mut checked, mut fails) = (0, Vec::new());
    for n in (2..=15usize).step_by(2) {
        for a in (1..n).step_by(2) {
            for c in (1..n).step_by(2) {
                let (b, d) = (n - a, n - c);
                if a.abs_diff(b) > c.abs_diff(d) {
                    checked += 1;
                    let lhs = BigInt::from(binomial(n as u64, a as u64)) * &euler[a] * &euler[b];
                    let rhs = BigInt::from(binomial(n as u64, c as u64)) * &euler[c] * &euler[d];
                    if lhs <= rhs {
                        fails.push(format!("n={n}, a={a}, c={c}: {lhs} ≤ {rhs}"));
                    }
                }
            }
        }
    }
    r.record("tangent-product-balance", CheckKind::Theorem, checked, fails);

    let mut t = Table::new(&["i", "j", "l", "k", "value"]);
    for &(i, j, l) in &families {
        for (k, v) in unimodal_sequence(i, j, l).iter().enumerate() {
            t.push(vec![i.to_string(), j.to_string(), l.to_string(), (k + 1).to_string(), v.to_string()]);
        }
    }
    r.table = Some(t);
    r.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_detector() {
        let s = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(is_reverse_unimodal(&s(&[5, 3, 3, 5])));
        assert!(is_reverse_unimodal(&s(&[1])));
        assert!(!is_reverse_unimodal(&s(&[3, 5, 3])));
    }

    #[test]
    fn small_family() {
        let seq = unimodal_sequence(0, 1, 3);
        assert!(is_reverse_unimodal(&seq));
        assert_eq!(seq[0], seq[2]);
        assert!(seq[0] > seq[1]);
    }
}

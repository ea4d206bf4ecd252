//! The `c² → d` inequality, the two-sided bound on `β(0,k,K)`, and the
//! nine statements about lists with a fixed head, checked exhaustively up to a degree cap.

use super::lists::{cat, lin, lists_or_empty_up_to, lists_up_to, lp, signed, zeros};
use super::report::{CheckKind, Functional, Instance, ScanReport};
use crate::algebra::CdPolynomial;

fn poly_degree(p: &CdPolynomial) -> i64 {
    p.degree().unwrap_or(-1)
}

fn fits(inst: &Instance, max: usize) -> bool {
    poly_degree(&inst.lhs).max(poly_degree(&inst.rhs)) <= max as i64
}

/// `(M, m, n, N) ≥ (M, m+n+2, N)` for every adjacent pair of entries.
fn cc_d_instances(list: &[u32], strict_empty: bool, out: &mut Vec<Instance>) {
    let l = signed(list);
    for p in 0..l.len().saturating_sub(1) {
        let mut merged = l[..p].to_vec();
        merged.push(l[p] + l[p + 1] + 2);
        merged.extend_from_slice(&l[p + 2..]);
        let inst = if strict_empty && l == [0, 0] {
            Instance::eq(lp(&l), lp(&merged))
        } else {
            Instance::ge(lp(&l), lp(&merged))
        };
        out.push(inst);
    }
}

type HeadStatement = (&'static str, bool, fn(&[i64]) -> Instance);

/// Statements about `(head, M)` as functions of `M`; the flag marks the ones
/// stated only for `M = 0^s`.
fn head_statements() -> Vec<HeadStatement> {
    vec![
        ("head-10-vs-01", false, |m| {
            Instance::ge(lp(&cat(&[&[1, 0], m])), lp(&cat(&[&[0, 1], m])))
        }),
        ("head-01-identity", false, |m| {
            Instance::eq(
                lin(&[(2, &cat(&[&[0, 1], m]))]),
                lin(&[(1, &cat(&[&[1, 0], m])), (2, &cat(&[&[3], m]))]),
            )
        }),
        ("head-000-lower", false, |m| {
            Instance::ge(
                lp(&cat(&[&[0, 0, 0], m])),
                lin(&[(1, &cat(&[&[2, 0], m])), (1, &cat(&[&[4], m]))]),
            )
        }),
        ("head-000-upper", true, |m| {
            Instance::gt(
                lin(&[(1, &cat(&[&[2, 0], m])), (2, &cat(&[&[4], m]))]),
                lp(&cat(&[&[0, 0, 0], m])),
            )
        }),
        ("head-11-identity", false, |m| {
            Instance::eq(
                lin(&[(1, &cat(&[&[2, 0], m])), (2, &cat(&[&[4], m]))]),
                lp(&cat(&[&[1, 1], m])),
            )
        }),
        ("head-11-vs-000", true, |m| {
            Instance::gt(lp(&cat(&[&[1, 1], m])), lp(&cat(&[&[0, 0, 0], m])))
        }),
        ("head-100-upper", true, |m| {
            Instance::gt(
                lin(&[(3, &cat(&[&[3, 0], m])), (2, &cat(&[&[5], m]))]),
                lp(&cat(&[&[1, 0, 0], m])),
            )
        }),
        ("head-100-lower", false, |m| {
            Instance::ge(lp(&cat(&[&[1, 0, 0], m])), lin(&[(3, &cat(&[&[3, 0], m]))]))
        }),
        ("head-00000-vs-0110", true, |m| {
            Instance::gt(lp(&cat(&[&[0, 0, 0, 0, 0], m])), lp(&cat(&[&[0, 1, 1, 0], m])))
        }),
    ]
}

pub fn scan_inequalities(max_degree: usize) -> ScanReport {
    let mut r = ScanReport::new("inequalities", &[("max_degree", max_degree.to_string())]);
    let all = lists_up_to(max_degree);
    r.run_check("cc-d", CheckKind::Theorem, Functional::Beta, &all, |l, out| {
        cc_d_instances(l, true, out)
    });
    r.run_check("cc-d-cubical", CheckKind::Theorem, Functional::Gamma, &all, |l, out| {
        cc_d_instances(l, false, out)
    });

    let tails = lists_or_empty_up_to(max_degree as i64);
    let ks: Vec<(i64, Vec<i64>)> = (0..=max_degree as i64)
        .flat_map(|k| tails.iter().map(move |t| (k, signed(t))))
        .collect();
    r.run_check("two-sided-bound", CheckKind::Theorem, Functional::Beta, &ks, |(k, t), out| {
        let mid = lp(&cat(&[&[0, *k], t]));
        let base = cat(&[&[k + 2], t]);
        for inst in [
            Instance::ge(mid.clone(), lin(&[(k + 1, &base)])),
            Instance::ge(lin(&[(k + 2, &base)]), mid),
        ] {
            if fits(&inst, max_degree) {
                out.push(inst);
            }
        }
    });
    r.run_check("head-k0-vs-0k", CheckKind::Theorem, Functional::Beta, &ks, |(k, t), out| {
        if *k >= 1 {
            let inst = Instance::ge(lp(&cat(&[&[*k, 0], t])), lp(&cat(&[&[0, *k], t])));
            if fits(&inst, max_degree) {
                out.push(inst);
            }
        }
    });

    let zero_tails: Vec<Vec<i64>> = (0..=max_degree / 2).map(zeros).collect();
    let any_tails: Vec<Vec<i64>> = tails.iter().map(|t| signed(t)).collect();
    for (name, zeros_only, f) in head_statements() {
        let seeds = if zeros_only { &zero_tails } else { &any_tails };
        r.run_check(name, CheckKind::Theorem, Functional::Beta, seeds, |m, out| {
            let inst = f(m);
            if fits(&inst, max_degree) {
                out.push(inst);
            }
        });
    }
    r.finish()
}

#[cfg(test)]
mod tests {
    use crate::lattice::beta_list;

    #[test]
    fn spot_values() {
        // β(d) = β(c^2) = 1.
        assert_eq!(beta_list(&[0, 0]), beta_list(&[2]));
        // (2,0) + 2(4) = (1,1) with M empty.
        assert_eq!(
            beta_list(&[2, 0]) + 2 * beta_list(&[4]),
            beta_list(&[1, 1])
        );
    }
}

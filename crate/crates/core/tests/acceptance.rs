//! Acceptance suite: one PASS/FAIL line per criterion. Expected values are
//! either literal known values or recomputed here by independent means
//! (direct combinatorics, explicit posets), never read back from the code
//! under test.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cdindex::algebra::{ab_to_cd, expand_to_ab};
use cdindex::analysis::{
    cubical_property_suite, divisible_classes, find_maxima, scan_balance, scan_identities,
    scan_inequalities, scan_maxima, scan_products, scan_unimodal_suite, search_equal_beta,
    unimodal_sequence, is_reverse_unimodal, ExplainedClasses, ScanReport,
};
use cdindex::dual::{bullet_all, bullet_poly, free_decompose};
use cdindex::lattice::{
    beta, beta_list, beta_poly, boolean_cd_index, boolean_table, cubical_table, gamma_poly,
    BooleanMethod,
};
use cdindex::oracle::{
    ab_index_chain_weights, ab_index_from_flags, ab_index_from_h, build_boolean, build_cube,
    chain_element, dehn_sommerville_check, dehn_sommerville_instances, flag_f_vector,
    flag_h_vector, mask_ranks,
};
use cdindex::verify::{verify, Suite};
use cdindex::{CdMonomial, CdPolynomial};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn poly(terms: &[(i64, &str)]) -> CdPolynomial {
    terms
        .iter()
        .map(|&(k, w)| (w.parse::<CdMonomial>().unwrap(), BigInt::from(k)))
        .collect()
}

fn within(elapsed: Duration, budget_secs: u64) -> Result<(), String> {
    ensure(
        elapsed <= Duration::from_secs(budget_secs),
        format!("took {elapsed:.1?}, budget {budget_secs} s"),
    )
}

fn all_pass(reports: &[ScanReport]) -> Result<u64, String> {
    let mut checked = 0;
    for r in reports {
        if !r.passed() {
            return Err(format!("theorem check failed:\n{}", r.render()));
        }
        checked += r.checks.iter().map(|c| c.checked).sum::<u64>();
    }
    Ok(checked)
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Euler zigzag numbers from the Seidel triangle, rows alternating direction.
fn seidel_euler(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    let mut out = vec![BigInt::from(1)];
    for k in 1..=n {
        let mut next = vec![BigInt::from(0); k + 1];
        if k % 2 == 1 {
            for i in 1..=k {
                next[i] = &next[i - 1] + &row[i - 1];
            }
            out.push(next[k].clone());
        } else {
            for i in (0..k).rev() {
                next[i] = &next[i + 1] + &row[i];
            }
            out.push(next[0].clone());
        }
        row = next;
    }
    out
}

fn golden_values() -> Outcome {
    let t = Instant::now();
    let boolean = [
        CdPolynomial::e(),
        poly(&[(1, "1")]),
        poly(&[(1, "c")]),
        poly(&[(1, "c^2"), (1, "d")]),
        poly(&[(1, "c^3"), (2, "cd"), (2, "dc")]),
        poly(&[(1, "c^4"), (3, "c^2d"), (3, "dc^2"), (5, "cdc"), (4, "d^2")]),
    ];
    for (n, want) in boolean.iter().enumerate() {
        ensure(boolean_table().poly(n) == *want, format!("Ψ(B_{n}) differs"))?;
    }
    let cubical = [
        poly(&[(1, "1")]),
        poly(&[(1, "c")]),
        poly(&[(1, "c^2"), (2, "d")]),
        poly(&[(1, "c^3"), (4, "cd"), (6, "dc")]),
        poly(&[(1, "c^4"), (6, "c^2d"), (14, "dc^2"), (16, "cdc"), (20, "d^2")]),
    ];
    for (i, want) in cubical.iter().enumerate() {
        ensure(cubical_table().poly(i + 1) == *want, format!("Ψ(C_{}) differs", i + 1))?;
    }
    within(t.elapsed(), 1)?;
    Ok("B_0..B_5 and C_1..C_5 match the known values".into())
}

fn method_agreement() -> Outcome {
    let t = Instant::now();
    for n in 1..=14 {
        let g = boolean_cd_index(n, BooleanMethod::GHat);
        for m in [BooleanMethod::Purtill, BooleanMethod::Phi] {
            ensure(boolean_cd_index(n, m) == g, format!("{m} differs at rank {n}"))?;
        }
    }
    within(t.elapsed(), 10)?;
    Ok(format!("ghat = purtill = phi for ranks 1..14 in {:.1?}", t.elapsed()))
}

fn oracle_equivalence() -> Outcome {
    let t = Instant::now();
    for n in 1..=8 {
        let p = build_boolean(n).map_err(|e| e.to_string())?;
        let ab = ab_index_from_flags(&p).map_err(|e| e.to_string())?;
        let chains = ab_index_chain_weights(&p).map_err(|e| e.to_string())?;
        ensure(ab == chains, format!("B_{n}: chain weights differ from flags"))?;
        let cd = ab_to_cd(&ab).map_err(|e| e.to_string())?;
        ensure(cd == boolean_table().poly(n), format!("B_{n}: oracle differs"))?;
    }
    for dim in 0..=6 {
        let p = build_cube(dim).map_err(|e| e.to_string())?;
        let f = flag_f_vector(&p).map_err(|e| e.to_string())?;
        let via_h = ab_index_from_h(&flag_h_vector(&f).map_err(|e| e.to_string())?);
        let chains = ab_index_chain_weights(&p).map_err(|e| e.to_string())?;
        ensure(via_h == chains, format!("cube {dim}: h-vector and chain weights differ"))?;
        let expected = expand_to_ab(&cubical_table().poly(dim + 1)).map_err(|e| e.to_string())?;
        ensure(via_h == expected, format!("cube {dim}: oracle differs"))?;
    }
    within(t.elapsed(), 60)?;
    Ok("B_1..B_8 and cubes of dimension 0..6 agree with explicit posets".into())
}

fn closed_forms() -> Outcome {
    for i in 0..=11u32 {
        for j in 0..=11 - i {
            let v = CdMonomial::from_exponents(vec![i, j]);
            let want = binomial((i + j + 2) as u64, (i + 1) as u64) - 1;
            ensure(beta(&v) == want, format!("β({v})"))?;
        }
    }
    let one = CdPolynomial::one();
    for n in 1..=10u64 {
        let p = bullet_all(std::iter::repeat_n(&one, n as usize));
        ensure(beta_poly(&p) == factorial(n), format!("β of {n} ones"))?;
        // Iterating γ(u·1) = 2(m+1) γ(u) from γ(1) = 1.
        let want = factorial(n - 1) * (BigInt::from(1) << (n - 1));
        ensure(gamma_poly(&p) == want, format!("γ of {n} ones"))?;
    }
    let euler = seidel_euler(15);
    for n in 1..=7usize {
        let lhs = beta(&CdMonomial::d_pow(n)) << n;
        ensure(lhs == euler[2 * n + 1], format!("2^{n} β(d^{n}) vs E_{}", 2 * n + 1))?;
    }
    Ok("two-entry binomials, products of ones, d-powers vs Euler numbers".into())
}

fn suites() -> Outcome {
    let t = Instant::now();
    let checked = all_pass(&[
        scan_identities(13),
        scan_inequalities(13),
        scan_products(12),
        cubical_property_suite(12),
        scan_balance(12),
        scan_unimodal_suite(13),
    ])?;
    within(t.elapsed(), 300)?;
    Ok(format!("{checked} instances, no theorem failure"))
}

fn operator_laws() -> Outcome {
    let checked = all_pass(&[verify(Suite::Coalgebra, 8), verify(Suite::Dual, 8)])?;
    Ok(format!("{checked} instances through degree 8"))
}

fn maxima() -> Outcome {
    for n in 2..=12usize {
        let (_, mut got) = find_maxima(n);
        got.sort();
        let mut want: Vec<Vec<u32>> = match n {
            2 => vec![vec![2], vec![0, 0]],
            3 => vec![vec![0, 1], vec![1, 0]],
            5 => vec![vec![0, 0, 1], vec![1, 0, 0]],
            _ if n % 2 == 0 => {
                let mut v = vec![1];
                v.extend(vec![0; (n - 4) / 2]);
                v.push(1);
                vec![v]
            }
            _ => {
                let z = vec![0; (n - 7) / 2];
                let a: Vec<u32> = [vec![1, 1], z.clone(), vec![1]].concat();
                let b: Vec<u32> = [vec![1], z, vec![1, 1]].concat();
                if a == b { vec![a] } else { vec![a, b] }
            }
        };
        want.sort();
        ensure(got == want, format!("degree {n}: {got:?}"))?;
    }
    all_pass(&[scan_maxima(2, 12)])?;
    Ok("argmax sets for degrees 2..12 match the closed form".into())
}

fn unimodality() -> Outcome {
    let mut families = 0;
    for j in [1u32, 2] {
        for l in 1.. {
            if (l - 1) * 2 + j as usize > 13 {
                break;
            }
            families += 1;
            let seq = unimodal_sequence(0, j, l);
            ensure(is_reverse_unimodal(&seq), format!("(0, {j}, l = {l})"))?;
        }
    }
    let r = scan_unimodal_suite(13);
    for name in ["unimodal-0-1", "unimodal-0-2", "first-step", "bullet-unimodal-1", "bullet-unimodal-2"] {
        let c = r.check(name).ok_or(format!("missing check {name}"))?;
        ensure(c.failures == 0 && c.checked > 0, format!("{name} failed"))?;
    }
    Ok(format!("{families} sequences reverse unimodal through list degree 13"))
}

fn divisibility() -> Outcome {
    let t = Instant::now();
    let known: [(&[u32], u64); 13] = [
        (&[6, 1, 1], 5005),
        (&[1, 1, 2, 2], 140140),
        (&[2, 1, 1, 2], 162162),
        (&[3, 1, 1, 1], 120120),
        (&[1, 1, 3, 1], 90090),
        (&[2, 1, 3, 0], 54054),
        (&[1, 1, 0, 4], 50050),
        (&[0, 0, 1, 3, 0], 72072),
        (&[1, 1, 1, 1, 0], 300300),
        (&[2, 0, 0, 1, 1], 260260),
        (&[1, 1, 1, 0, 1], 360360),
        (&[2, 1, 0, 1, 0], 216216),
        (&[0, 1, 0, 1, 0, 0], 288288),
    ];
    let classes = divisible_classes(13, 1001);
    ensure(classes.len() == 13, format!("{} classes", classes.len()))?;
    let mut hit = vec![false; classes.len()];
    for (list, value) in known {
        let signed: Vec<i64> = list.iter().map(|&x| x as i64).collect();
        ensure(beta_list(&signed) == BigInt::from(value), format!("β{list:?} ≠ {value}"))?;
        let k = classes
            .iter()
            .position(|c| c.members.iter().any(|m| m.as_slice() == list))
            .ok_or(format!("{list:?} is in no class"))?;
        ensure(!hit[k], format!("{list:?} shares a class with another entry"))?;
        hit[k] = true;
    }
    // The degree-12 coincidence c²d²c³dc ~ c³dc²dcd.
    let u: CdMonomial = "c^2d^2c^3dc".parse().unwrap();
    let v: CdMonomial = "c^3dc^2dcd".parse().unwrap();
    ensure(beta(&u) == beta(&v), "pair values differ")?;
    let search = search_equal_beta(12);
    let expl = ExplainedClasses::compute(12);
    let (cu, cv) = (expl.class_index(u.exponents()), expl.class_index(v.exponents()));
    ensure(cu != cv, "the pair is already explained")?;
    ensure(search.unexplained.len() == 1, format!("{} unexplained groups", search.unexplained.len()))?;
    let reps = &search.unexplained[0].representatives;
    let rep_classes: Vec<_> = reps.iter().map(|r| expl.class_index(r)).collect();
    ensure(rep_classes.contains(&cu) && rep_classes.contains(&cv), "search surfaced another pair")?;
    within(t.elapsed(), 120)?;
    Ok(format!("13 classes; unexplained pair at β = {}", search.unexplained[0].beta))
}

fn dehn_sommerville() -> Outcome {
    let mut instances = 0;
    let posets = (1..=7).map(|n| (format!("B_{n}"), build_boolean(n)))
        .chain((1..=6).map(|n| (format!("C_{n}"), build_cube(n - 1))));
    for (name, p) in posets {
        let p = p.map_err(|e| e.to_string())?;
        let f = flag_f_vector(&p).map_err(|e| e.to_string())?;
        for inst in dehn_sommerville_instances(f.n()) {
            instances += 1;
            ensure(dehn_sommerville_check(&f, &inst) == Ok(true), format!("{name}: {inst:?}"))?;
        }
    }
    let f = flag_f_vector(&build_boolean(6).unwrap()).unwrap();
    let psi = boolean_table().poly(6);
    for mask in 0..1usize << 5 {
        let set = mask_ranks(mask);
        let got = chain_element(5, &set).pairing(&psi);
        ensure(got == BigInt::from(f.get(mask)), format!("B_6 chain element {set:?}"))?;
    }
    Ok(format!("{instances} instances; all 32 chain elements on B_6"))
}

fn free_decomposition() -> Outcome {
    let mut count = 0;
    for v in CdMonomial::all_up_to_degree(8) {
        let d = free_decompose(&v).map_err(|e| e.to_string())?;
        ensure(d.evaluate().map_err(|e| e.to_string())? == CdPolynomial::from(v.clone()), format!("{v}"))?;
        count += 1;
    }
    let c3: CdMonomial = "c^3".parse().unwrap();
    let text = free_decompose(&c3).unwrap().to_string();
    ensure(text == "1/8 (1·1·1·1) - 1/4 (1·d) - 1/4 (d·1)", format!("c^3 = {text}"))?;
    // 8c³ = 1·1·1·1 - 2 d·1 - 2 1·d, by direct bullet products.
    let (one, d) = (CdPolynomial::one(), poly(&[(1, "d")]));
    let mut rhs = bullet_all([&one, &one, &one, &one]);
    rhs.add_scaled(&bullet_poly(&d, &one), &BigInt::from(-2));
    rhs.add_scaled(&bullet_poly(&one, &d), &BigInt::from(-2));
    ensure(rhs == poly(&[(8, "c^3")]), "8c^3 expansion")?;
    Ok(format!("{count} monomials round-trip; 8c^3 = 1·1·1·1 - 2(d·1) - 2(1·d)"))
}

fn conjectures() -> Outcome {
    let reports = [scan_balance(12), scan_unimodal_suite(12)];
    let mut checked = 0;
    let mut found = Vec::new();
    for r in &reports {
        for c in r.checks.iter().filter(|c| c.kind == cdindex::analysis::CheckKind::Conjecture) {
            checked += c.checked;
            if c.failures > 0 {
                found.push(format!("{}: {}", c.name, c.failures));
            }
        }
        for ce in &r.counterexamples {
            ensure(ce.reverify(), format!("counterexample does not replay: {}", ce.description))?;
        }
    }
    if found.is_empty() {
        Ok(format!("{checked} conjecture instances, no counterexample"))
    } else {
        // Findings are reported, not failures.
        Ok(format!("{checked} instances; counterexamples found and re-verified: {}", found.join(", ")))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("golden values", golden_values),
        ("method agreement", method_agreement),
        ("oracle equivalence", oracle_equivalence),
        ("closed forms", closed_forms),
        ("identity and inequality suites", suites),
        ("operator laws", operator_laws),
        ("maxima", maxima),
        ("unimodality", unimodality),
        ("divisibility and the unexplained pair", divisibility),
        ("Dehn-Sommerville relations", dehn_sommerville),
        ("free decomposition", free_decomposition),
        ("conjecture scans", conjectures),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {name} ({secs:.2} s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2} s): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

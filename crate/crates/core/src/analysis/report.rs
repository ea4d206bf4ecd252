//! Scan results: per-check tallies, re-verifiable counterexamples, optional
//! data tables, with JSON, text and CSV renderings.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::CdPolynomial;
use crate::lattice::{beta_poly, gamma_poly};

/// Which coefficient functional a check is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Functional {
    Beta,
    Gamma,
}

impl Functional {
    pub fn eval(self, p: &CdPolynomial) -> BigInt {
        match self {
            Functional::Beta => beta_poly(p),
            Functional::Gamma => gamma_poly(p),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Functional::Beta => "β",
            Functional::Gamma => "γ",
        }
    }
}

/// `lhs REL rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Ge,
    Gt,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => "≥",
            Relation::Gt => ">",
        }
    }
}

/// Outcome of one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// The relation holds and the sides differ.
    Holds,
    /// The sides are equal (and the relation allows it).
    Equality,
    Fails,
}

pub fn classify(l: &BigInt, r: &BigInt, rel: Relation) -> Status {
    match rel {
        Relation::Eq if l == r => Status::Equality,
        Relation::Eq => Status::Fails,
        Relation::Ge if l == r => Status::Equality,
        Relation::Ge | Relation::Gt if l > r => Status::Holds,
        _ => Status::Fails,
    }
}

/// One linear relation between coefficient values.
#[derive(Clone, Debug)]
pub struct Instance {
    pub lhs: CdPolynomial,
    pub rhs: CdPolynomial,
    pub rel: Relation,
}

impl Instance {
    pub fn new(lhs: CdPolynomial, rel: Relation, rhs: CdPolynomial) -> Self {
        Instance { lhs, rhs, rel }
    }
    pub fn eq(lhs: CdPolynomial, rhs: CdPolynomial) -> Self {
        Self::new(lhs, Relation::Eq, rhs)
    }
    pub fn ge(lhs: CdPolynomial, rhs: CdPolynomial) -> Self {
        Self::new(lhs, Relation::Ge, rhs)
    }
    pub fn gt(lhs: CdPolynomial, rhs: CdPolynomial) -> Self {
        Self::new(lhs, Relation::Gt, rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// A proved statement: a failure is a bug.
    Theorem,
    /// An open statement: failures are findings.
    Conjecture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub kind: CheckKind,
    pub checked: u64,
    pub holds: u64,
    pub equalities: u64,
    pub failures: u64,
}

/// A failing instance stated in terms of the polynomials involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub functional: Functional,
    pub relation: Relation,
    pub lhs: CdPolynomial,
    pub rhs: CdPolynomial,
    pub lhs_value: String,
    pub rhs_value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub description: String,
    pub witness: Option<Witness>,
}

impl Counterexample {
    /// Recomputes the witness from scratch; true if it still fails.
    /// Description-only entries cannot be replayed and report true.
    pub fn reverify(&self) -> bool {
        match &self.witness {
            None => true,
            Some(w) => {
                let l = w.functional.eval(&w.lhs);
                let r = w.functional.eval(&w.rhs);
                l.to_string() == w.lhs_value
                    && r.to_string() == w.rhs_value
                    && classify(&l, &r, w.relation) == Status::Fails
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let esc = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::new();
        let line = |cells: &[String]| cells.iter().map(|c| esc(c)).collect::<Vec<_>>().join(",");
        let _ = writeln!(out, "{}", line(&self.columns));
        for r in &self.rows {
            let _ = writeln!(out, "{}", line(r));
        }
        out
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let fmt_row = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let mut out = String::new();
        let _ = writeln!(out, "{}", fmt_row(&self.columns));
        for r in &self.rows {
            let _ = writeln!(out, "{}", fmt_row(r));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: String,
}

/// Stored counterexamples per check; the tally count stays exact.
const MAX_STORED: usize = 50;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReport {
    pub scan: String,
    pub params: Vec<Param>,
    pub checks: Vec<CheckTally>,
    pub counterexamples: Vec<Counterexample>,
    pub table: Option<Table>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    started: Option<Instant>,
}

impl PartialEq for ScanReport {
    fn eq(&self, other: &Self) -> bool {
        self.scan == other.scan
            && self.params == other.params
            && self.checks == other.checks
            && self.counterexamples == other.counterexamples
            && self.table == other.table
            && self.notes == other.notes
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    holds: u64,
    equalities: u64,
    failures: u64,
    examples: Vec<Counterexample>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        self.holds += other.holds;
        self.equalities += other.equalities;
        self.failures += other.failures;
        self.examples.extend(other.examples);
        self.examples.truncate(MAX_STORED);
        self
    }
}

impl ScanReport {
    pub fn new(scan: &str, params: &[(&str, String)]) -> Self {
        ScanReport {
            scan: scan.to_string(),
            params: params
                .iter()
                .map(|(n, v)| Param {
                    name: n.to_string(),
                    value: v.clone(),
                })
                .collect(),
            checks: Vec::new(),
            counterexamples: Vec::new(),
            table: None,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
            started: Some(Instant::now()),
        }
    }

    /// Evaluates the instances generated from each seed, in parallel, and
    /// records a tally. Results do not depend on the thread count.
    pub fn run_check<S, G>(
        &mut self,
        name: &str,
        kind: CheckKind,
        functional: Functional,
        seeds: &[S],
        generate: G,
    ) where
        S: Sync,
        G: Fn(&S, &mut Vec<Instance>) + Sync,
    {
        let partial = seeds
            .par_iter()
            .map(|seed| {
                let mut buf = Vec::new();
                generate(seed, &mut buf);
                let mut p = Partial::default();
                for inst in buf {
                    let l = functional.eval(&inst.lhs);
                    let r = functional.eval(&inst.rhs);
                    p.checked += 1;
                    match classify(&l, &r, inst.rel) {
                        Status::Holds => p.holds += 1,
                        Status::Equality => p.equalities += 1,
                        Status::Fails => {
                            p.failures += 1;
                            if p.examples.len() < MAX_STORED {
                                p.examples.push(Counterexample {
                                    check: name.to_string(),
                                    description: format!(
                                        "{f}({}) = {l} {} {f}({}) = {r} fails",
                                        inst.lhs,
                                        inst.rel.symbol(),
                                        inst.rhs,
                                        f = functional.symbol()
                                    ),
                                    witness: Some(Witness {
                                        functional,
                                        relation: inst.rel,
                                        lhs: inst.lhs,
                                        rhs: inst.rhs,
                                        lhs_value: l.to_string(),
                                        rhs_value: r.to_string(),
                                    }),
                                });
                            }
                        }
                    }
                }
                p
            })
            .reduce(Partial::default, Partial::merge);
        self.checks.push(CheckTally {
            name: name.to_string(),
            kind,
            checked: partial.checked,
            holds: partial.holds,
            equalities: partial.equalities,
            failures: partial.failures,
        });
        self.counterexamples.extend(partial.examples);
    }

    /// Checks a law on every seed in parallel; `law` describes a failure.
    pub fn run_law<S, G>(&mut self, name: &str, seeds: &[S], law: G)
    where
        S: Sync,
        G: Fn(&S) -> Option<String> + Sync,
    {
        let fails: Vec<String> = seeds.par_iter().filter_map(&law).collect();
        self.record(name, CheckKind::Theorem, seeds.len() as u64, fails);
    }

    /// Records a check evaluated by the caller; `failures` are descriptions.
    pub fn record(&mut self, name: &str, kind: CheckKind, checked: u64, failures: Vec<String>) {
        self.checks.push(CheckTally {
            name: name.to_string(),
            kind,
            checked,
            holds: checked - failures.len() as u64,
            equalities: 0,
            failures: failures.len() as u64,
        });
        self.counterexamples
            .extend(failures.into_iter().take(MAX_STORED).map(|d| Counterexample {
                check: name.to_string(),
                description: d,
                witness: None,
            }));
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.elapsed = t.elapsed();
        }
        self
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn theorem_failures(&self) -> u64 {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Theorem)
            .map(|c| c.failures)
            .sum()
    }

    pub fn conjecture_failures(&self) -> u64 {
        self.checks
            .iter()
            .filter(|c| c.kind == CheckKind::Conjecture)
            .map(|c| c.failures)
            .sum()
    }

    /// No theorem-backed check failed.
    pub fn passed(&self) -> bool {
        self.theorem_failures() == 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Human-readable summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|p| format!("{}={}", p.name, p.value))
            .collect();
        let _ = writeln!(out, "scan {} [{}]", self.scan, params.join(", "));
        let mut t = Table::new(&["check", "kind", "checked", "holds", "equal", "fail"]);
        for c in &self.checks {
            t.push(vec![
                c.name.clone(),
                format!("{:?}", c.kind).to_lowercase(),
                c.checked.to_string(),
                c.holds.to_string(),
                c.equalities.to_string(),
                c.failures.to_string(),
            ]);
        }
        out.push_str(&t.render());
        for c in &self.counterexamples {
            let _ = writeln!(out, "counterexample [{}]: {}", c.check, c.description);
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        if let Some(t) = &self.table {
            out.push('\n');
            out.push_str(&t.render());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CdMonomial;

    fn mono(list: &[i64]) -> CdPolynomial {
        CdPolynomial::from(CdMonomial::from_list(list).unwrap())
    }

    #[test]
    fn classification() {
        let (a, b) = (BigInt::from(2), BigInt::from(1));
        assert_eq!(classify(&a, &b, Relation::Gt), Status::Holds);
        assert_eq!(classify(&a, &a, Relation::Gt), Status::Fails);
        assert_eq!(classify(&a, &a, Relation::Ge), Status::Equality);
        assert_eq!(classify(&b, &a, Relation::Ge), Status::Fails);
        assert_eq!(classify(&a, &b, Relation::Eq), Status::Fails);
    }

    #[test]
    fn failures_are_replayable() {
        let mut r = ScanReport::new("t", &[]);
        let seeds = [0u8];
        // β(c^2) = 1 < β(cd) = 2, so the reversed inequality fails.
        r.run_check("demo", CheckKind::Conjecture, Functional::Beta, &seeds, |_, out| {
            out.push(Instance::ge(mono(&[2]), mono(&[1, 0])));
            out.push(Instance::eq(mono(&[1, 0]), mono(&[0, 1])));
        });
        let r = r.finish();
        let tally = r.check("demo").unwrap();
        assert_eq!((tally.checked, tally.failures, tally.equalities), (2, 1, 1));
        assert!(r.passed());
        assert_eq!(r.conjecture_failures(), 1);
        assert!(r.counterexamples[0].reverify());
        let json = r.to_json();
        assert!(json.get("elapsed").is_none());
        let back: ScanReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_escaping() {
        let mut t = Table::new(&["list", "value"]);
        t.push(vec!["(1,0)".into(), "2".into()]);
        assert_eq!(t.to_csv(), "list,value\n\"(1,0)\",2\n");
    }
}

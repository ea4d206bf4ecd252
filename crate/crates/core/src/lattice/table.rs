//! Lazily grown, shareable tables of `Ψ(B_n)` and `Ψ(C_n)`, with the
//! coefficient functionals `β` and `γ` read from them.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::algebra::{CdMonomial, CdPolynomial};
use crate::coalgebra::{g_hat, h_hat_monomial};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Boolean,
    Cubical,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Boolean => "boolean",
            Family::Cubical => "cubical",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One computed rank: the polynomial and a hash index for coefficient lookup.
#[derive(Debug)]
pub struct Rank {
    pub poly: CdPolynomial,
    index: HashMap<CdMonomial, BigInt>,
}

impl Rank {
    fn new(poly: CdPolynomial) -> Arc<Self> {
        let index = poly.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        Arc::new(Rank { poly, index })
    }

    pub fn coefficient(&self, m: &CdMonomial) -> BigInt {
        self.index.get(m).cloned().unwrap_or_default()
    }
}

/// Ranks are appended under a write lock; readers clone out an `Arc`.
#[derive(Debug)]
pub struct IndexTable {
    family: Family,
    ranks: RwLock<Vec<Arc<Rank>>>,
}

impl IndexTable {
    pub fn new(family: Family) -> Self {
        let first = match family {
            Family::Boolean => CdPolynomial::e(),
            // Rank 0 is not defined for cubes; keep a zero placeholder so
            // that the vector index equals the rank.
            Family::Cubical => CdPolynomial::zero(),
        };
        IndexTable {
            family,
            ranks: RwLock::new(vec![Rank::new(first)]),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of ranks computed so far (ranks `0..len`).
    pub fn len(&self) -> usize {
        self.ranks.read().expect("table lock").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn step(&self, n: usize, prev: &CdPolynomial) -> CdPolynomial {
        match self.family {
            Family::Boolean => g_hat(prev),
            Family::Cubical if n == 0 => CdPolynomial::one(),
            Family::Cubical => prev.map_linear(h_hat_monomial),
        }
    }

    /// The entry for rank `n`, computing missing ranks first.
    pub fn rank(&self, n: usize) -> Arc<Rank> {
        if let Some(r) = self.ranks.read().expect("table lock").get(n) {
            return Arc::clone(r);
        }
        let mut ranks = self.ranks.write().expect("table lock");
        while ranks.len() <= n {
            let k = ranks.len();
            let next = self.step(k - 1, &ranks[k - 1].poly);
            ranks.push(Rank::new(next));
        }
        Arc::clone(&ranks[n])
    }

    pub fn poly(&self, n: usize) -> CdPolynomial {
        self.rank(n).poly.clone()
    }

    /// Coefficient of `m` in the rank `deg(m) + 1` entry.
    pub fn coefficient(&self, m: &CdMonomial) -> BigInt {
        let n = m.degree() + 1;
        if n < 0 {
            return BigInt::default();
        }
        self.rank(n as usize).coefficient(m)
    }

    /// Linear extension of [`IndexTable::coefficient`].
    pub fn eval(&self, p: &CdPolynomial) -> BigInt {
        p.terms().map(|(m, c)| c * self.coefficient(m)).sum()
    }

    fn file_name(&self, n: usize) -> String {
        format!("{}_rank_{n}.json", self.family.name())
    }

    /// Writes one JSON file per rank `1..=max` into `dir`.
    pub fn save(&self, dir: &Path, max: usize) -> Result<()> {
        fs::create_dir_all(dir)?;
        for n in 1..=max {
            let text = serde_json::to_string(&self.rank(n).poly)?;
            fs::write(dir.join(self.file_name(n)), text)?;
        }
        Ok(())
    }

    /// Loads consecutive ranks from `dir` until a file is missing. Loaded
    /// entries must extend the table; existing ranks are kept. Returns the
    /// number of ranks now available.
    pub fn load(&self, dir: &Path) -> Result<usize> {
        let mut ranks = self.ranks.write().expect("table lock");
        loop {
            let path = dir.join(self.file_name(ranks.len()));
            if !path.exists() {
                break;
            }
            let poly: CdPolynomial = serde_json::from_str(&fs::read_to_string(path)?)?;
            ranks.push(Rank::new(poly));
        }
        Ok(ranks.len())
    }
}

/// The process-wide Boolean table.
pub fn boolean_table() -> &'static IndexTable {
    static T: OnceLock<IndexTable> = OnceLock::new();
    T.get_or_init(|| IndexTable::new(Family::Boolean))
}

/// The process-wide cubical table.
pub fn cubical_table() -> &'static IndexTable {
    static T: OnceLock<IndexTable> = OnceLock::new();
    T.get_or_init(|| IndexTable::new(Family::Cubical))
}

/// `β(v)`: the coefficient of `v` in `Ψ(B_{deg v + 1})`; `β(e) = 1`.
pub fn beta(m: &CdMonomial) -> BigInt {
    boolean_table().coefficient(m)
}

/// `β` extended linearly.
pub fn beta_poly(p: &CdPolynomial) -> BigInt {
    boolean_table().eval(p)
}

/// `γ(v)`: the coefficient of `v` in `Ψ(C_{deg v + 1})`. Zero on `e`.
pub fn gamma(m: &CdMonomial) -> BigInt {
    cubical_table().coefficient(m)
}

pub fn gamma_poly(p: &CdPolynomial) -> BigInt {
    cubical_table().eval(p)
}

/// `β` on a list; negative entries give 0.
pub fn beta_list(list: &[i64]) -> BigInt {
    CdMonomial::from_list(list)
        .map(|m| beta(&m))
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> CdMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn lookups() {
        assert_eq!(beta(&m("cdc")), BigInt::from(5));
        assert_eq!(beta(&CdMonomial::e()), BigInt::from(1));
        assert_eq!(gamma(&m("d^2")), BigInt::from(20));
        assert_eq!(gamma(&m("cd")), BigInt::from(4));
        assert_eq!(gamma(&m("dc")), BigInt::from(6));
        assert_eq!(beta_list(&[6, 1, 1]), BigInt::from(5005));
        assert_eq!(beta_list(&[1, -1]), BigInt::from(0));
    }

    #[test]
    fn persistence_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let t = IndexTable::new(Family::Cubical);
        t.save(dir.path(), 5).unwrap();
        let fresh = IndexTable::new(Family::Cubical);
        assert_eq!(fresh.load(dir.path()).unwrap(), 6);
        for n in 1..=5 {
            assert_eq!(fresh.poly(n), t.poly(n));
        }
    }
}

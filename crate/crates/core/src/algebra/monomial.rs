//! cd-monomials stored in list notation.
//!
//! The word `c^{m1} d c^{m2} d ... d c^{mk}` is stored as the exponent list
//! `(m1, ..., mk)`. The empty list is the degree -1 symbol `e`, and `(0)` is
//! the unit monomial `1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// A letter of a cd-word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    C,
    D,
}

impl Letter {
    pub fn degree(self) -> i64 {
        match self {
            Letter::C => 1,
            Letter::D => 2,
        }
    }
}

/// A cd-monomial, or the symbol `e` when the exponent list is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CdMonomial {
    exps: Vec<u32>,
}

impl CdMonomial {
    /// The degree -1 symbol `e`.
    pub fn e() -> Self {
        CdMonomial { exps: Vec::new() }
    }

    pub fn one() -> Self {
        CdMonomial { exps: vec![0] }
    }

    pub fn c() -> Self {
        CdMonomial { exps: vec![1] }
    }

    pub fn d() -> Self {
        CdMonomial { exps: vec![0, 0] }
    }

    pub fn c_pow(m: u32) -> Self {
        CdMonomial { exps: vec![m] }
    }

    /// `d^k`, the list `(0^{k+1})`.
    pub fn d_pow(k: usize) -> Self {
        CdMonomial {
            exps: vec![0; k + 1],
        }
    }

    /// Builds a monomial from a list of non-negative exponents. An empty list
    /// gives `e`.
    pub fn from_exponents(exps: Vec<u32>) -> Self {
        CdMonomial { exps }
    }

    /// List constructor following the list-notation convention: any negative
    /// entry makes the whole list vanish, reported as `None`.
    pub fn from_list(list: &[i64]) -> Option<Self> {
        let mut exps = Vec::with_capacity(list.len());
        for &m in list {
            if m < 0 {
                return None;
            }
            exps.push(u32::try_from(m).ok()?);
        }
        Some(CdMonomial { exps })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exps
    }

    pub fn is_e(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0]
    }

    /// Number of entries of the list (one more than the number of `d`s).
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> i64 {
        if self.exps.is_empty() {
            return -1;
        }
        let sum: i64 = self.exps.iter().map(|&m| m as i64).sum();
        sum + 2 * (self.exps.len() as i64 - 1)
    }

    pub fn d_count(&self) -> usize {
        self.exps.len().saturating_sub(1)
    }

    pub fn reverse(&self) -> Self {
        let mut exps = self.exps.clone();
        exps.reverse();
        CdMonomial { exps }
    }

    /// The word over `{c, d}`; `None` for `e`.
    pub fn letters(&self) -> Option<Vec<Letter>> {
        if self.is_e() {
            return None;
        }
        let mut word = Vec::new();
        for (i, &m) in self.exps.iter().enumerate() {
            if i > 0 {
                word.push(Letter::D);
            }
            word.extend(std::iter::repeat_n(Letter::C, m as usize));
        }
        Some(word)
    }

    pub fn from_letters(word: &[Letter]) -> Self {
        let mut exps = vec![0u32];
        for &l in word {
            match l {
                Letter::C => *exps.last_mut().unwrap() += 1,
                Letter::D => exps.push(0),
            }
        }
        CdMonomial { exps }
    }

    /// Concatenation product. `None` when either factor is `e`, which
    /// annihilates under juxtaposition.
    pub fn concat(&self, other: &CdMonomial) -> Option<CdMonomial> {
        if self.is_e() || other.is_e() {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len() - 1);
        exps.extend_from_slice(&self.exps[..self.exps.len() - 1]);
        exps.push(self.exps[self.exps.len() - 1] + other.exps[0]);
        exps.extend_from_slice(&other.exps[1..]);
        Some(CdMonomial { exps })
    }

    /// All monomials of degree `n` in canonical order. Degree -1 gives `[e]`.
    pub fn all_of_degree(n: i64) -> Vec<CdMonomial> {
        if n < -1 {
            return Vec::new();
        }
        if n == -1 {
            return vec![CdMonomial::e()];
        }
        let n = n as u32;
        let mut out = Vec::new();
        let mut k = 1u32;
        while 2 * (k - 1) <= n {
            let total = n - 2 * (k - 1);
            let mut current = Vec::with_capacity(k as usize);
            compositions(total, k as usize, &mut current, &mut out);
            k += 1;
        }
        out.sort();
        out
    }

    /// All monomials of degree `0..=max` (no `e`), in canonical order.
    pub fn all_up_to_degree(max: i64) -> Vec<CdMonomial> {
        (0..=max).flat_map(CdMonomial::all_of_degree).collect()
    }

    /// Renders in list notation, e.g. `(1,0,1)`; `e` renders as `()`.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.exps.iter().map(|m| m.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

fn compositions(total: u32, parts: usize, current: &mut Vec<u32>, out: &mut Vec<CdMonomial>) {
    if parts == 1 {
        current.push(total);
        out.push(CdMonomial {
            exps: current.clone(),
        });
        current.pop();
        return;
    }
    for first in 0..=total {
        current.push(first);
        compositions(total - first, parts - 1, current, out);
        current.pop();
    }
}

impl Ord for CdMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for CdMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CdMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_list_string())
    }
}

/// Word form with run-length exponents: `c^2dc`, `d^2`, `1`, `e`.
impl fmt::Display for CdMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(word) = self.letters() else {
            return f.write_str("e");
        };
        if word.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < word.len() {
            let mut j = i;
            while j < word.len() && word[j] == word[i] {
                j += 1;
            }
            let ch = match word[i] {
                Letter::C => 'c',
                Letter::D => 'd',
            };
            if j - i == 1 {
                write!(f, "{ch}")?;
            } else {
                write!(f, "{ch}^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for CdMonomial {
    type Err = ParseError;

    /// Accepts `e`, `1`, list form `(1,0,1)` and word form such as `cdc`,
    /// `c^2d`, `cd^2c`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        if s == "e" || s == "()" {
            return Ok(CdMonomial::e());
        }
        if s == "1" {
            return Ok(CdMonomial::one());
        }
        if let Some(inner) = s.strip_prefix('(') {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| ParseError::Syntax(s.to_string()))?;
            let mut exps = Vec::new();
            for part in inner.split(',') {
                let part = part.trim();
                let value: i64 = part
                    .parse()
                    .map_err(|_| ParseError::Syntax(s.to_string()))?;
                if value < 0 {
                    return Err(ParseError::NegativeEntry(s.to_string()));
                }
                exps.push(value as u32);
            }
            return Ok(CdMonomial { exps });
        }
        let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut word = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let letter = match bytes[i] {
                'c' => Letter::C,
                'd' => Letter::D,
                _ => return Err(ParseError::Syntax(s.to_string())),
            };
            i += 1;
            let mut count = 1usize;
            if i < bytes.len() && bytes[i] == '^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(ParseError::Syntax(s.to_string()));
                }
                let digits: String = bytes[start..i].iter().collect();
                count = digits
                    .parse()
                    .map_err(|_| ParseError::Syntax(s.to_string()))?;
            }
            word.extend(std::iter::repeat_n(letter, count));
        }
        Ok(CdMonomial::from_letters(&word))
    }
}

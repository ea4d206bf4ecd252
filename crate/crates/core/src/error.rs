use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty monomial")]
    Empty,
    #[error("cannot parse monomial `{0}`")]
    Syntax(String),
    #[error("negative list entry in `{0}`")]
    NegativeEntry(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{op} is not defined on the symbol e")]
    ContainsE { op: &'static str },
    #[error("ab-polynomial is not a cd-polynomial: leading word `{word}` does not decode")]
    NotEulerianRepresentable { word: String },
    #[error("rank {rank} is out of range for {what}")]
    InvalidRank { what: &'static str, rank: usize },
    #[error("coefficient of {0} is not an integer")]
    NotIntegral(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("{what} {requested} exceeds the cap {cap}")]
    RankCap {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
    #[error("poset has no unique {0} element")]
    NoExtremum(&'static str),
    #[error("poset is not graded: {0}")]
    NotGraded(String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("poset of rank {0} has no flag vector (rank must be at least 1)")]
    RankTooSmall(usize),
    #[error("chain count overflow")]
    Overflow,
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("Dehn-Sommerville precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

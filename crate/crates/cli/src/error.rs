use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] cdindex::error::ParseError),
    #[error("rank {requested} exceeds the cap {cap} (raise max_rank in the config file)")]
    RankCap { requested: usize, cap: usize },
    #[error(transparent)]
    Poset(#[from] cdindex::error::PosetError),
    #[error(transparent)]
    Algebra(#[from] cdindex::error::AlgebraError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0} theorem-backed check(s) failed")]
    ChecksFailed(u64),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    /// 2 is left to clap for malformed command lines.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ChecksFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::RankCap { .. } => 4,
            CliError::Io { .. } => 5,
            CliError::Config { .. } => 6,
            CliError::Poset(_) | CliError::Algebra(_) => 7,
        }
    }
}

impl From<cdindex::Error> for CliError {
    fn from(e: cdindex::Error) -> Self {
        match e {
            cdindex::Error::Parse(p) => CliError::Parse(p),
            cdindex::Error::Algebra(a) => CliError::Algebra(a),
            cdindex::Error::Poset(p) => CliError::Poset(p),
            cdindex::Error::Io(io) => CliError::Io {
                path: "cache".into(),
                source: io,
            },
            cdindex::Error::Json(j) => CliError::Usage(format!("bad JSON: {j}")),
        }
    }
}

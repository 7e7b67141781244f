use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("schema error: expected header `{expected}`, found `{found}`")]
    Schema { expected: String, found: String },

    #[error("line {line}: {message}")]
    Row { line: usize, message: String },

    #[error("validation error at line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("no data for category `{category}` in {year}")]
    NoData { category: String, year: i32 },

    #[error("no articles for {scope} in {year}")]
    EmptyScope { scope: String, year: i32 },

    #[error("indicator pArt_{q}_{t} undefined for journal `{journal}`: no articles in window")]
    UndefinedIndicator { journal: String, q: String, t: u32 },

    #[error("unknown journal `{0}`")]
    UnknownJournal(String),

    #[error("empty sample")]
    EmptySample,

    #[error("insufficient data: need at least {needed}, found {found}")]
    InsufficientData { needed: usize, found: usize },

    #[error("ANOVA needs at least 2 groups, found {0}")]
    InsufficientGroups(usize),

    #[error("ANOVA is degenerate: all observations are identical")]
    DegenerateAnova,

    #[error("correlation undefined: zero rank variance")]
    UndefinedCorrelation,

    #[error("ranking is empty: every value is missing")]
    EmptyRanking,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{0}")]
    Capability(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    InFile {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

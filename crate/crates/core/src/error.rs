use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partitions of different totals are incomparable ({0} vs {1})")]
    IncomparableSizes(usize, usize),

    #[error("partition {partition} has total {total}, but {algebra} needs {expected}")]
    SizeMismatch {
        partition: String,
        total: usize,
        algebra: String,
        expected: usize,
    },

    #[error("{partition} is not a partition of type {kind}")]
    WrongType { partition: String, kind: String },

    #[error("closure in mode {mode} needs an even total, got {total}")]
    OddTotal { mode: &'static str, total: usize },

    #[error("not a generic congruence class: {0}")]
    NotGenericClass(String),

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("weight has length {got}, {group} needs {expected}")]
    LengthMismatch {
        group: String,
        got: usize,
        expected: usize,
    },

    #[error("normalization violated for {group}: {detail}")]
    Normalization { group: String, detail: String },

    #[error("weight is not compact-dominant for {group}: {detail}")]
    NotDominant { group: String, detail: String },

    #[error("no unitarity pattern matches lambda0 = ({0})")]
    UnclassifiedPattern(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("unknown Bala-Carter label `{0}`")]
    UnknownLabel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Parse errors map to exit status 2, everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature n={n} k={k}: need 2 <= k <= n <= 64")]
    InvalidSignature { n: usize, k: usize },
    #[error("expected {expected} indices, got {got}")]
    WrongCardinality { expected: usize, got: usize },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate index {0}")]
    DuplicateIndex(usize),
    #[error("{relation} move not applicable at position {position}")]
    MoveNotApplicable {
        relation: &'static str,
        position: usize,
    },
    #[error("unsupported signature: {0}")]
    UnsupportedSignature(String),
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(String, String),
    #[error("search budget of {budget} states exhausted")]
    BudgetExhausted { budget: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("dynamical system is not pleasant: {0}")]
    NotPleasant(String),
    #[error("no pleasant realization after {attempts} attempts")]
    PleasantnessUnobtainable { attempts: usize },
    #[error("braid is not pure")]
    NotPure,
    #[error("need at least {min} strands, got {n}")]
    TooFewStrands { n: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

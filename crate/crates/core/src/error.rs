use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An exhaustive loop would visit more items than the configured budget allows.
    #[error(
        "enumeration of {needed} items exceeds the budget of {budget} (set DESIGN_IDEALS_BUDGET to raise it)"
    )]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported field order {q}; supported orders are 2, 3, 4, 5, 7, 8, 9")]
    UnsupportedField { q: u64 },

    #[error("construction failed: {0}")]
    Construction(String),

    /// Randomized completion ran out of attempts. Retrying with another seed may succeed.
    #[error("completion failed after {attempts} attempts (seed {seed}); retry with another seed")]
    CompletionFailed { seed: u64, attempts: usize },

    #[error("the generator set does not contain the trivial generators G0; radicality of the generated ideal (and thus the zero-set criterion) requires them")]
    MissingTrivialGenerators,

    /// A zero-set check did not come out exact.
    #[error("zero-set check failed ({verdict}) at subset {subset:?}")]
    ZeroSet { verdict: String, subset: Vec<usize>, generator: Option<usize> },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, message: msg.into() }
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be strictly decreasing and positive: {0:?}")]
    NotStrict(Vec<u32>),

    #[error("invalid skew shape {outer}/{inner}: inner diagram is not contained in outer")]
    InvalidShape { outer: String, inner: String },

    #[error("cell arrangement is not a skew shifted diagram: {0}")]
    NotRealizable(String),

    #[error("{sub} is not a sub-multiset of the parts of {whole}")]
    NotSubset { whole: String, sub: String },

    #[error("empty shape")]
    EmptyShape,

    #[error("size mismatch: shape has {shape} cells, partition has size {partition}")]
    SizeMismatch { shape: usize, partition: u32 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("parse error at token '{token}': {reason}")]
    Parse { token: String, reason: String },

    #[error("witness construction {lemma} failed verification on {shape}: {reason}")]
    WitnessFailed {
        lemma: &'static str,
        shape: String,
        reason: String,
    },

    #[error("coefficient overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

use thiserror::Error;

use crate::pairs::Kind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial coefficient requires a nonnegative upper index, got {0}")]
    NegativeUpperIndex(i64),

    #[error("binomial coefficient C({r}, {k}) is zero and has no reciprocal")]
    ZeroBinomial { r: String, k: i64 },

    #[error("division by zero in {0}")]
    DivisionByZero(String),

    #[error("index {index} is outside the generated range of `{label}` (0..={max})")]
    IndexOutOfRange { label: String, index: i64, max: i64 },

    #[error("expected a pair of the {expected} kind, got {found}")]
    KindMismatch { expected: Kind, found: Kind },

    #[error("unknown catalog pair `{0}`")]
    UnknownPair(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown selector `{0}`")]
    UnknownSelector(String),

    #[error("parameter `{name}`: {reason}")]
    BadParam { name: String, reason: String },

    #[error("pair `{label}` fails its transform relation at n = {n}: expected {expected}, got {got}")]
    Validation {
        label: String,
        n: usize,
        expected: String,
        got: String,
    },

    #[error("term with negative exponent {exponent} in {context}")]
    NegativeExponent { exponent: i64, context: String },

    #[error("sequence needs at least {needed} terms, has {len}")]
    TooShort { needed: usize, len: usize },

    #[error("guard violated: {0}")]
    Guard(String),

    #[error("cannot parse rational `{0}`")]
    Parse(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("duplicate identity id `{0}`")]
    DuplicateIdentity(String),
}

impl Error {
    pub(crate) fn param(name: &str, reason: impl Into<String>) -> Self {
        Error::BadParam {
            name: name.to_string(),
            reason: reason.into(),
        }
    }
}

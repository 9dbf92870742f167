use thiserror::Error;

use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Criteria are reported 1-based in messages; the API itself is 0-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("criterion count {0} is outside 1..={max}", max = crate::MAX_CRITERIA)]
    InvalidCriteriaCount(usize),

    #[error("expected {expected} values (2^n), got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("not normalized: value on {subset} is {got}, expected {expected}")]
    NotNormalized {
        subset: Subset,
        expected: f64,
        got: f64,
    },

    #[error("not monotone: v({subset}) > v({subset} ∪ {{{criterion}}})", criterion = criterion + 1)]
    NotMonotone { subset: Subset, criterion: usize },

    #[error("singleton weight of criterion {} must be > 0", criterion + 1)]
    NonPositiveSingleton { criterion: usize },

    #[error("dimension mismatch: expected {expected} scores, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("score {} is not finite", index + 1)]
    NonFiniteScore { index: usize },

    #[error("interaction index is undefined for the empty coalition")]
    EmptyCoalition,

    #[error("subset {subset} is not contained in a {n}-criteria universe")]
    SubsetOutOfRange { subset: Subset, n: usize },

    #[error("score {} = {value} lies outside [0, 1]", index + 1)]
    OutOfDomain { index: usize, value: f64 },

    #[error("score {} = {value} is negative; this form is defined on nonnegative scores", index + 1)]
    NegativeScore { index: usize, value: f64 },

    #[error("operator '{name}' is not certified: {reason}")]
    UncertifiedOperator { name: String, reason: String },

    #[error("unknown axiom '{0}'")]
    UnknownAxiom(String),

    #[error("axiom {axiom} needs samples outside the aggregator's [0,1]^n domain")]
    DomainMismatch { axiom: String },

    #[error("criterion {} has no level named '{level}'", criterion + 1)]
    UnknownLevel { criterion: usize, level: String },

    #[error("utility scale of criterion {}: {reason}", criterion + 1)]
    InvalidScale { criterion: usize, reason: String },

    #[error("at least one act is required")]
    EmptyActList,

    #[error("extension '{0}' requires a second capacity")]
    MissingSecondCapacity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

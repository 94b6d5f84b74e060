use thiserror::Error;

use crate::braid::BraidCategory;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("{what} is not licensed in the {category} category")]
    CategoryViolation {
        what: String,
        category: BraidCategory,
    },

    #[error("strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),

    #[error("categories differ ({0} vs {1})")]
    CategoryMismatch(BraidCategory, BraidCategory),

    #[error("relation {relation} does not match at position {pos}")]
    NoMatch { relation: String, pos: usize },

    #[error("move needs at least {needed} strands, word has {strands}")]
    TooFewStrands { needed: usize, strands: usize },

    #[error("bad L_v site: {0}")]
    BadSite(String),

    #[error("move {0} does not apply to this word")]
    MoveInapplicable(String),

    #[error("malformed diagram at slice {slice}: {reason}")]
    MalformedDiagram { slice: usize, reason: String },

    #[error("gauss code carries no virtual-crossing record")]
    MissingVirtualRecord,

    #[error("up-arc is not free (it passes through a crossing box)")]
    NotFreeArc,

    #[error("crossing at slice {0} has no up-arc")]
    NoUpArc(usize),

    #[error("flat crossing present; the bracket is undefined for flat diagrams")]
    FlatCrossingPresent,

    #[error("representation dimension {dim} exceeds budget {budget}")]
    DimensionBudgetExceeded { dim: usize, budget: usize },

    #[error("model cannot represent {0} words")]
    CategoryModelMismatch(BraidCategory),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("script {script} inapplicable at step {step}: {reason}")]
    ScriptInapplicable {
        script: String,
        step: usize,
        reason: String,
    },

    #[error("invalid move path at step {step}: {reason}")]
    InvalidPath { step: usize, reason: String },

    #[error("node budget of {budget} exhausted after {explored} nodes")]
    BudgetExceeded { budget: usize, explored: usize },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("index {index} is outside the domain of {what} (requires {requires})")]
    IndexOutOfDomain { what: &'static str, index: i64, requires: &'static str },

    #[error("knot parameter p must be at least 1, got {0}")]
    InvalidKnotParameter(i64),

    #[error("cannot combine torus-knot elements from different modules ({left} vs {right})")]
    ModuleMismatch { left: String, right: String },

    #[error("reduction rule has no named convention")]
    UnnamedRule,
}

pub type Result<T> = std::result::Result<T, SkeinError>;

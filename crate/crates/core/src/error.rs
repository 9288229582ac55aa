use thiserror::Error;

/// Errors surfaced by the calculator.
///
/// Internal invariant violations (a translated curve-neighborhood image that
/// is not an order ideal, a delta label that is not simple) panic instead:
/// they indicate a bug in the tabulated family data, not bad user input.
#[derive(Debug, Error)]
pub enum Error {
    /// Unsupported family/rank combination or malformed space description.
    #[error("configuration error: {0}")]
    Config(String),

    /// Textual input (space, shape, expression file) failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally valid input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Arithmetic on Schubert expressions in different bases.
    #[error("basis mismatch: expected {expected}, got {got}")]
    BasisMismatch { expected: String, got: String },
}

pub type Result<T> = std::result::Result<T, Error>;

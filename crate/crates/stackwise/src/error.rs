use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad file syntax, unknown identifiers, invalid
    /// structure (cycles, redundant covers, disconnected order diagram).
    #[error("input error: {0}")]
    Input(String),

    /// A raising or lowering step found several candidates of one color,
    /// so the single-term contract is void.
    #[error("EC violated: {0}")]
    EcViolated(String),

    /// Back-substitution against the stackwise family left a nonzero
    /// remainder whose leading multiset is not a chain of ideals.
    #[error("span violation: {0}")]
    SpanViolation(String),

    /// An expansion coefficient that must be an integer is not.
    #[error("integrality violation: {0}")]
    IntegralityViolation(String),

    /// A computation was refused because the lattice is too large.
    #[error("too large: {0}")]
    TooLarge(String),

    /// Two recursion paths disagreed where they must not.
    #[error("internal consistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}

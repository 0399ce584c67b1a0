use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A structured input (spec, generator pair, file) violates an invariant.
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },

    /// Text input could not be parsed.
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A randomized construction gave up.
    #[error("construction failed after {attempts} attempts: {reason}")]
    Construction { attempts: usize, reason: String },

    /// (I + A^N) is singular, so no tail-biting state exists for every input.
    #[error(
        "tail-biting impossible for N = {n}: feedback period {period} divides N; choose another length"
    )]
    UnsupportedLength { n: usize, period: usize },

    /// The requested enumeration exceeds the configured budget.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Certification of a global optimum needs a longer search.
    #[error("inconclusive: {0}")]
    Inconclusive(String),

    /// Non-finite value reached an arithmetic kernel.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Received frame does not match the expected layout.
    #[error("framing error: expected {expected} symbols, got {got}")]
    Framing { expected: usize, got: usize },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }
}

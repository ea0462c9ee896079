use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse numerical set: {0}")]
    Parse(String),

    #[error("invalid gap sequence: {0}")]
    InvalidGaps(String),

    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),

    /// The operation has no meaning on the naturals (no base, no complement).
    #[error("{0} is undefined for the naturals")]
    Naturals(&'static str),

    #[error("{0} requires a numerical semigroup")]
    NotSemigroup(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("sweep up to frobenius number {requested} exceeds the budget of {limit}; raise the budget explicitly")]
    Budget { requested: u32, limit: u32 },
}

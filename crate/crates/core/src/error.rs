use thiserror::Error;

/// Everything that can go wrong while building, realizing or checking a pattern.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a tournament needs at least one vertex")]
    NoVertices,

    #[error("needs at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("pair ({0}, {0}) does not name two distinct vertices")]
    DegeneratePair(usize),

    #[error("invalid tournament: {0}")]
    InvalidTournament(String),

    #[error("invalid ranking: {0}")]
    InvalidRanking(String),

    #[error("malformed profile: {0}")]
    MalformedProfile(String),

    #[error("tie between {a} and {b} (margin 0)")]
    Tie { a: usize, b: usize },

    #[error("empty profile generates no pattern")]
    EmptyProfile,

    #[error("restriction needs a nonempty vertex set")]
    EmptyKeep,

    #[error("vertex {label} is outside 0..{n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("pair ({a}, {b}) is oriented {b}->{a}; swap the arguments")]
    Orientation { a: usize, b: usize },

    #[error("extension needs an odd number of voters, got {0}")]
    EvenProfile(usize),

    #[error(
        "old profile does not generate the restricted pattern: pair ({a}, {b}) has margin {margin}"
    )]
    Precondition { a: usize, b: usize, margin: i32 },

    #[error("{n} vertices exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("node budget exhausted; {}", match last_completed {
        Some(r) => format!("sizes up to {r} voters ruled out"),
        None => "no size fully searched".to_string(),
    })]
    BudgetExceeded { last_completed: Option<usize> },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{method} profile for n = {n}, seed = {seed} does not reproduce its tournament")]
    VerificationFailed { n: usize, seed: u64, method: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

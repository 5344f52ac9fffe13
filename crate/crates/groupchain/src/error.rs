use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown simple type {family}{rank}")]
    UnknownType { family: char, rank: u64 },

    #[error("rank {0} exceeds the supported cap of 2^20")]
    RankTooLarge(u64),

    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("the trivial group has no {0}")]
    TrivialGroup(&'static str),

    #[error("{0}")]
    Domain(String),

    #[error("no curated maximal-subgroup data for {0} in characteristic {1}")]
    NotCurated(String, String),

    #[error("maximal-subgroup data is not complete for {0} in characteristic {1}")]
    Incomplete(String, String),

    #[error("malformed certificate: {msg} (offending indices: {indices:?})")]
    Structural { msg: String, indices: Vec<usize> },

    #[error("{0} is not a prime or zero")]
    BadCharacteristic(u64),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

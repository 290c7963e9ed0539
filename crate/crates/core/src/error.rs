use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("level mismatch: expected {expected} components, found {found}")]
    LevelMismatch { expected: usize, found: usize },
    #[error("level l = {0} is not supported; the family pipelines need l >= 2")]
    LevelTooSmall(usize),
    #[error("sequence entries are not strictly decreasing: {0}")]
    NotStrictlyDecreasing(String),
    #[error("sequence head does not join its tail: {0}")]
    TailNotConsecutive(String),
    #[error("vector does not sum to {expected}: {found}")]
    BadSum { expected: String, found: String },
    #[error("non-integer parameter: {0}")]
    NonInteger(String),
    #[error("cutoff {cutoff} is above the largest valid cutoff {max}")]
    InvalidCutoff { cutoff: i64, max: i64 },
    #[error("block partitions have different ground sets")]
    GroundSetMismatch,
    #[error("J-heart routes disagree for {multipartition}: via C-tilde {via_tilde}, via removal {via_removal}")]
    RouteDisagreement {
        multipartition: String,
        via_tilde: String,
        via_removal: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

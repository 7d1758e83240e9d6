use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("both homogeneous coordinates are zero")]
    ZeroPoint,
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("point {0} is not in the point set")]
    PointNotInSet(String),
    #[error("point index {index} out of range for a set of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("no separator of point {point} in bidegree ({i},{j})")]
    NoSeparator { point: usize, i: usize, j: usize },
    #[error("configuration is not ACM: {0}")]
    NotAcm(String),
    #[error("{0} is not a prime in the accepted range (10^6, 2^63)")]
    InvalidPrime(u64),
    #[error("coordinates do not embed faithfully into {field}: {reason}")]
    FieldTooSmall { field: String, reason: String },
    #[error("grid of {cells} cells exceeds the configured limit of {limit}")]
    LimitExceeded { cells: usize, limit: usize },
    #[error("cannot choose {requested} points from a grid of {available} cells")]
    TooManyPoints { requested: usize, available: usize },
    #[error("invalid incidence grid: {0}")]
    InvalidGrid(String),
    #[error("unknown coordinate scheme `{0}`")]
    UnknownScheme(String),
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("series must have zero constant term")]
    ConstantTerm,
    #[error("plethystic inverse needs a nonzero multiple of p1 in degree 1")]
    DegenerateInverse,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("degree {requested} exceeds the ceiling {ceiling} for `{check}` (set SF_MAX_DEGREE to override)")]
    DegreeCeiling {
        check: String,
        requested: usize,
        ceiling: usize,
    },
    #[error("bad option: {0}")]
    BadOption(String),
}

pub type Result<T> = std::result::Result<T, Error>;

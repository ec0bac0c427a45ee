use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid width {0}: must be between 1 and {max}", max = crate::cube::MAX_WIDTH)]
    InvalidWidth(usize),
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("width {width} exceeds the truth-table cap of {cap} variables")]
    WidthOverCap { width: usize, cap: usize },
    #[error("minterm {minterm} out of range for {width} variables")]
    MintermOutOfRange { minterm: u64, width: usize },
    #[error("cube {0} is not a member of the cover")]
    NotInCover(String),
    #[error("cover is empty")]
    EmptyCover,
    #[error("invalid cube encoding {0:?}")]
    InvalidCube(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("PLA error at line {line}: {msg}")]
    Pla { line: usize, msg: String },
    #[error("unsupported PLA: {0}")]
    UnsupportedPla(String),
    #[error("invalid variable names: {0}")]
    Names(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("K-map rendering supports 2 to 4 variables, got {0}; use a truth table instead")]
    KmapWidth(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

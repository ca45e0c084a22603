use thiserror::Error;

/// A character outside `[a-fA-F]` in a word literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid letter {found:?} at position {position}")]
pub struct ParseError {
    /// 1-based character position.
    pub position: usize,
    pub found: char,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("radius {radius} exceeds the configured cap {cap}")]
    RadiusCap { radius: usize, cap: usize },
    #[error("a vertex is not adjacent to itself")]
    SameVertex,
    #[error("isometry does not fix the vertex {vertex}")]
    NotStabilizing { vertex: String },
    #[error("isometry does not map the link onto itself")]
    LinkNotPreserved,
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {found:?} at position {position} (expected one of {expected})")]
    InvalidLetter {
        found: char,
        position: usize,
        expected: &'static str,
    },

    #[error("program underflow: produced {produced} of {requested} bits and has no fill segment")]
    ProgramUnderflow { produced: usize, requested: usize },

    #[error("empty fill word")]
    EmptyFillWord,

    #[error("program has more than one fill segment")]
    MultipleFill,

    #[error("segment repeat count must be positive")]
    ZeroRepeat,

    #[error("malformed program segment {0:?}")]
    MalformedSegment(String),

    #[error("empty encoding")]
    EmptyEncoding,

    #[error("window must be at least 1x1 cells (got {width}x{height})")]
    EmptyWindow { width: usize, height: usize },

    #[error("vertex ({x}, {y}) out of bounds for a {width}x{height} grid")]
    OutOfBounds {
        x: usize,
        y: usize,
        width: usize,
        height: usize,
    },

    #[error("not a simple pattern: vertex ({x}, {y}) has degree {degree}")]
    NotSimplePattern { x: i64, y: i64, degree: usize },

    #[error("invalid cycle: {0}")]
    InvalidCycle(&'static str),

    #[error("self-intersecting cycle at ({0}, {1})")]
    SelfIntersecting(i64, i64),

    #[error("polyomino must be a non-empty edge-connected set of cells")]
    InvalidPolyomino,

    #[error("open boundary: turtle path ends at ({0}, {1})")]
    OpenBoundary(i64, i64),

    #[error("self-intersecting boundary at ({0}, {1})")]
    SelfIntersectingBoundary(i64, i64),

    #[error(
        "not two-colorable: cells {0:?} and {1:?} lie in one region but are separated by a stitch"
    )]
    NotTwoColorable((usize, usize), (usize, usize)),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("order must be at least 1")]
    InvalidOrder,

    #[error("pattern not found: {0}")]
    PatternNotFound(String),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("line through two coincident points is undefined")]
    DegenerateLine,
    #[error("segment has zero length")]
    ZeroLengthSegment,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("zero-length edge at index {0}")]
    ZeroLengthEdge(usize),
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("vertex {0} is a hairpin: its neighbours coincide, pop is undefined")]
    Hairpin(usize),
    #[error("operation requires a simple polygon")]
    NotSimple,
    #[error("pocket with lid ({0}, {1}) is not a pocket of this polygon")]
    StalePocket(usize, usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("expected {expected} {what}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{axis}[{index}] = {value} is not positive")]
    NonPositive {
        axis: char,
        index: usize,
        value: String,
    },
    #[error("{axis}[{first}] and {axis}[{second}] are both {value}")]
    Duplicate {
        axis: char,
        first: usize,
        second: usize,
        value: String,
    },
    #[error("invalid sign character {0:?}, expected '+' or '-'")]
    BadSign(char),
    #[error("family enumeration over 2^{n} states exceeds the limit of 2^{limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} entries per row, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("vertex label {label} is outside 1..={n}")]
    VertexOutOfRange { label: u32, n: usize },
    #[error("{what} index {index} is out of range (size {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },
    #[error("vertex labels must be strictly increasing and nonzero")]
    NotStrictlyIncreasing,
    #[error("expected a simplex with {expected} vertices, found {found}")]
    SimplexSize { expected: usize, found: usize },
    #[error("face layers of dimension {upper} and {lower} are not adjacent")]
    LayerMismatch { upper: isize, lower: isize },
    #[error("face {0} is missing from the lower layer")]
    MissingFace(alloc::string::String),
    #[error("coordinate vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("halfspace normal is zero")]
    ZeroNormal,
    #[error("unsupported fixture parameters: {0}")]
    FixtureParameters(alloc::string::String),
    #[error("instance too large for the reference computation ({0} faces)")]
    TooLarge(usize),
}

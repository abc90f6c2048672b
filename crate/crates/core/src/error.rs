use thiserror::Error;

/// Errors returned by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported constellation order {0}: only M = 2 and M = 4 are supported")]
    UnsupportedOrder(usize),
    #[error("bit tuple has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the all-zero vector does not generate a subspace")]
    ZeroVector,
    #[error("could not draw a generic point of the subspace after {0} attempts")]
    DegenerateSample(usize),
    #[error("constraint partition conflicts with the exclusive law")]
    ConflictingConstraints,
    #[error("label {0} is not present in the cluster map")]
    UnknownLabel(u16),
    #[error("invalid simulation config: {0}")]
    Config(String),
    #[error("codebook i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed codebook file: {0}")]
    Format(String),
}

use thiserror::Error;

/// Errors produced by quiver parsing, family generation and the fpd pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("representation violates the length-two path relations")]
    RelationsViolated,

    #[error("representation shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error(
        "loop-stripped quiver is not of finite Dynkin type A/D/E and not the \
         two-vertex cycle; thin enumeration does not apply (try oracle mode)"
    )]
    NonDynkinBase,

    #[error("unsupported field order {0}: the oracle works over F_2 or F_3")]
    UnsupportedField(u64),

    #[error("oracle dimension bound must be at least 1")]
    BadDimensionBound,

    #[error("oracle search space too large: {0}")]
    OracleTooLarge(String),

    #[error("brick found over F_{field} does not lift to characteristic zero: {detail}")]
    OracleLiftFailed { field: u64, detail: String },

    #[error("not a brick set: {0}")]
    NotABrickSet(String),

    #[error("spectral radius: {0}")]
    BadSpectralInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6Parse { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },

    #[error("certificate parse error at line {line}: {reason}")]
    CertificateParse { line: usize, reason: String },

    #[error("catalog parse error at line {line}: {reason}")]
    CatalogParse { line: usize, reason: String },

    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("dimension {d} exceeds the solver cap {max}")]
    DimensionTooLarge { d: usize, max: usize },

    #[error("representation has {have} vectors but the graph has {want} vertices")]
    MissingVertex { have: usize, want: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exhausted: {0}")]
    Indeterminate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid vertex subset: {0}")]
    InvalidSubset(String),
    #[error("uniformity mismatch: {0}")]
    UniformityMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid simplex point: {0}")]
    InvalidSimplexPoint(String),
    #[error("invalid type: {0}")]
    InvalidType(String),
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("invalid type choice: {0}")]
    InvalidTypeSpec(String),
    #[error("solver cap exceeded: {0}")]
    CapExceeded(String),
    #[error("solver did not converge: {0}")]
    NonConvergence(String),
    #[error("matrix is not symmetric: {0}")]
    AsymmetricInput(String),
    #[error("matrix is not positive semidefinite: {0}")]
    NotPsd(String),
    #[error("claimed bound exceeded: achieved {achieved} > claimed {claimed}")]
    BoundExceeded { achieved: String, claimed: String },
    #[error("lagrangian coverage gap: {0}")]
    CoverageGap(String),
    #[error("no jump interval derivable: {0}")]
    NoJumpDerivable(String),
    #[error("unknown builtin family: {0}")]
    UnknownFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

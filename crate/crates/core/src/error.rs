use thiserror::Error;

/// Everything that can go wrong while building shapes or normalizing them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate or parameter is not finite")]
    NonFinite,
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("dilation coefficient must be nonzero")]
    ZeroScale,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),
    #[error("invalid side lengths: {0}")]
    InvalidSides(String),
    #[error("degenerate angles: {0}")]
    DegenerateAngles(String),
    #[error("side lengths 0,c,c have no A-vertex normal point (point at infinity)")]
    UnboundedType,
    #[error("degenerate triangle: {0}")]
    Degenerate(String),
    #[error("point lies outside the normal-form domain: {0}")]
    OutOfDomain(String),
    #[error("degenerate quadrilateral: {0}")]
    DegenerateQuad(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("form kind {0} is not supported by this operation")]
    UnsupportedKind(&'static str),
}

impl Error {
    /// Stable token naming the error variant, used in diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonFinite => "NonFinite",
            Error::InvalidTolerance(_) => "InvalidTolerance",
            Error::ZeroScale => "ZeroScale",
            Error::DegenerateSegment => "DegenerateSegment",
            Error::InvalidTriangle(_) => "InvalidTriangle",
            Error::InvalidSides(_) => "InvalidSides",
            Error::DegenerateAngles(_) => "DegenerateAngles",
            Error::UnboundedType => "UnboundedType",
            Error::Degenerate(_) => "Degenerate",
            Error::OutOfDomain(_) => "OutOfDomain",
            Error::DegenerateQuad(_) => "DegenerateQuad",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::UnsupportedKind(_) => "UnsupportedKind",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

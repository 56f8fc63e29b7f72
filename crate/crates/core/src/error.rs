use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{invariant} is undefined for the {ideal} ideal")]
    Undefined {
        invariant: &'static str,
        ideal: &'static str,
    },

    #[error("generator cap exceeded in {op}: {size} > {cap}")]
    SizeLimit { op: String, size: usize, cap: usize },

    #[error("exponent overflow in {0}")]
    ExponentOverflow(&'static str),

    #[error("point is not in the Newton polyhedron of component {component}")]
    NotInBody { component: usize },

    #[error("linear program: {0}")]
    Lp(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    /// Stable snake_case tag for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Undefined { .. } => "undefined",
            Error::SizeLimit { .. } => "size_limit",
            Error::ExponentOverflow(_) => "exponent_overflow",
            Error::NotInBody { .. } => "not_in_body",
            Error::Lp(_) => "lp",
            Error::Parse { .. } => "parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

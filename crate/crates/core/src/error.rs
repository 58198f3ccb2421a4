use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Domain errors raised by the geometric and calculus layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operand dimensions do not agree.
    DimensionMismatch { expected: usize, found: usize },
    /// A polyhedron expected to be a cone has an apex away from the origin.
    NotACone,
    /// An operation needing a nonempty input got the empty set.
    EmptyInput,
    PointNotInSet,
    PointNotOnGraph,
    PointNotInEpigraph,
    /// A mapping declared single-valued has a multi-valued slice.
    NotSingleValued,
    /// Sampling oracles are limited to ambient dimension three.
    DimensionTooLarge { dim: usize, max: usize },
    /// Catch-all for malformed arguments (bad index sets and the like).
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotACone => f.write_str("polyhedron is not a cone with apex at the origin"),
            Error::EmptyInput => f.write_str("input polyhedron is empty"),
            Error::PointNotInSet => f.write_str("point does not belong to the set"),
            Error::PointNotOnGraph => f.write_str("point does not lie on the graph"),
            Error::PointNotInEpigraph => f.write_str("point does not lie in the generalized epigraph"),
            Error::NotSingleValued => f.write_str("mapping is not single-valued"),
            Error::DimensionTooLarge { dim, max } => {
                write!(f, "dimension {dim} exceeds the oracle limit {max}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

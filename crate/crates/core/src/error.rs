use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A vector or matrix with no entries.
    Empty,
    /// NaN or infinity in an input.
    NonFinite,
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Rows of a matrix with differing lengths, or a non-square matrix.
    NotSquare,
    /// Entry `(row, col)` differs from its transpose by more than the
    /// admissible relative asymmetry.
    Asymmetric {
        row: usize,
        col: usize,
    },
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
    },
    /// `x` lies in the polar cone but not in the orthogonal complement; the
    /// nearest points depend on a generating set that a bare cone projector
    /// does not expose.
    PolarCaseNeedsGenerators,
    /// No nonzero vector of the subspace could be found by probing.
    NoSubspaceWitness,
    /// A shifted linear system `(A + σI)x = b` is numerically singular.
    Singular,
    InvalidConfig(&'static str),
    TooLarge {
        size: usize,
        max: usize,
    },
    UnknownAlgorithm(String),
    /// Rejection sampling gave up before producing the requested label.
    SamplingCapExceeded,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Empty => f.write_str("input has no entries"),
            Error::NonFinite => f.write_str("input contains a non-finite value"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotSquare => f.write_str("matrix is not square"),
            Error::Asymmetric { row, col } => {
                write!(f, "matrix is not symmetric at entry ({row}, {col})")
            }
            Error::InvalidParameter { name, reason } => {
                write!(f, "invalid parameter `{name}`: {reason}")
            }
            Error::PolarCaseNeedsGenerators => f.write_str(
                "point lies in the polar cone but not its orthogonal complement; \
                 use a projector that knows the cone's generators",
            ),
            Error::NoSubspaceWitness => {
                f.write_str("could not find a nonzero vector in the subspace")
            }
            Error::Singular => f.write_str("linear system is numerically singular"),
            Error::InvalidConfig(reason) => write!(f, "invalid solver configuration: {reason}"),
            Error::TooLarge { size, max } => {
                write!(f, "size {size} exceeds the supported maximum {max}")
            }
            Error::UnknownAlgorithm(name) => write!(f, "unknown algorithm `{name}`"),
            Error::SamplingCapExceeded => {
                f.write_str("rejection sampling exceeded its draw limit")
            }
        }
    }
}

impl core::error::Error for Error {}

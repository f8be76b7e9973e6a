use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a usable prime modulus (need a prime 3 <= p < 2^31)")]
    InvalidPrime(u64),

    #[error("invalid degree data: {0}")]
    InvalidDegrees(String),

    #[error("cannot parse polynomial {input:?}: {message}")]
    Parse { input: String, message: String },

    #[error("matrix entry ({row}, {col}) must be homogeneous of degree {expected}, found {found}")]
    EntryDegree {
        row: usize,
        col: usize,
        expected: i64,
        found: String,
    },

    #[error("matrix has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("cokernel is not of finite length: dimension {dimension} in degree {degree}, past socle degree {socle_degree}")]
    NotFiniteLength {
        degree: i64,
        dimension: usize,
        socle_degree: i64,
    },

    #[error("the zero vector does not define a line")]
    ZeroLine,

    #[error("line parametrization has rank < 2")]
    DegenerateLine,

    #[error("expected a linear form, got {0}")]
    NotLinear(String),

    #[error("no splitting found for t in [{lo}, {hi}]; restriction is not exact")]
    SplittingWindow { lo: i64, hi: i64 },

    #[error("restricted map is not surjective in degree {0}")]
    NonExactRestriction(i64),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("no generic presentation found for seeds {first}..{last}")]
    GenericDraw { first: u64, last: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

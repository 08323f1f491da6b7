use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no factorization: word of length {0} has no standard factorization")]
    NoFactorization(usize),
    #[error("not a Lyndon word: {0:?}")]
    NotLyndon(Vec<u32>),
    #[error("letter {letter} is not in an alphabet of size {size}")]
    UnknownLetter { letter: u32, size: usize },
    #[error("inhomogeneous input: found lengths {0} and {1}")]
    Inhomogeneous(usize, usize),
    #[error("degree {0} is too small for this map (need at least 2)")]
    DegreeTooSmall(usize),
    #[error("integrality violated: coefficient {coefficient} is not divisible by {divisor}")]
    IntegralityViolated { coefficient: String, divisor: u64 },
    #[error("element is not in the image of mu")]
    NotInMuImage,
    #[error("unknown action variable {0}")]
    UnknownVariable(usize),
    #[error("matrix has {found} columns, expected {expected}")]
    ColumnMismatch { expected: usize, found: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("unsupported prime {0} for characteristic-p computations")]
    UnsupportedPrime(u64),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

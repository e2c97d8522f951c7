use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("ragged rows: row {row} has length {found}, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension {dimension} exceeds the enumeration cap {cap}")]
    EnumerationCap { dimension: usize, cap: usize },

    #[error("not a valid code distribution: {0}")]
    InvalidDistribution(String),

    #[error("word is not a codeword")]
    NotInCode,

    #[error("word must be nonzero")]
    ZeroWord,

    #[error("coordinate {index} out of range for length {n}")]
    CoordinateOutOfRange { index: usize, n: usize },

    #[error("moment identities require a spanning code: coordinate {zero_coordinate} is zero on every codeword")]
    NotSpanning { zero_coordinate: usize },

    #[error("unrealizable weight triple ({wv}, {wvw}, {ww})")]
    UnrealizableWeights { wv: u64, wvw: u64, ww: u64 },

    #[error("incompatible parities: {0}")]
    Parity(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("symbol {0} is not an element of Z4")]
    InvalidSymbol(u8),

    #[error("code has 2^{log2_size} codewords, which exceeds the enumeration cap of {cap}; raise the cap to at least 2^{log2_size}")]
    CapExceeded { log2_size: usize, cap: u64 },

    #[error("search visited more than {budget} vectors without finding a nonzero codeword")]
    SearchBudgetExceeded { budget: u64 },

    #[error("the zero code has no nonzero codeword")]
    ZeroCode,

    #[error("invalid index (s={s}, r={r}, m={m}): {reason}")]
    InvalidIndex {
        s: usize,
        r: i64,
        m: usize,
        reason: String,
    },

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

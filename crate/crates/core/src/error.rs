use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fibonomial [{n} choose {k}] requires k <= n")]
    FibonomialRange { n: u64, k: u64 },

    #[error("golden Pascal recursion needs 1 <= k <= n - 1 (got n = {n}, k = {k})")]
    PascalRange { n: u64, k: u64 },

    #[error("Fibonacci divisor index k must be at least 1")]
    DivisorIndex,

    #[error("matrix order must be at least 1")]
    EmptyOrder,

    #[error("matrix must be square, got {rows} rows of length {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("malformed rational {0:?}; expected p or p/q")]
    ParseRational(String),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

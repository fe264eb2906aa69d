use thiserror::Error;

/// Errors raised by the simulator.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("mode index {mode} out of range for {n} qubits")]
    Index { mode: usize, n: usize },

    #[error("vector is not normalized (norm {norm})")]
    Normalization { norm: f64 },

    #[error("size cap exceeded: {what} needs {requested}, limit is {limit}")]
    SizeCap {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("memory cap exceeded: {requested} qubits requested, cap is {cap}")]
    MemoryCap { requested: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("coefficient {modulus} does not have unit modulus")]
    NotUnitary { modulus: f64 },

    #[error("matrix is not Hermitian (max asymmetry {asymmetry:e})")]
    NotHermitian { asymmetry: f64 },

    #[error("invalid configuration: {0}")]
    Configuration(String),

    #[error("register layout error: {0}")]
    Layout(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

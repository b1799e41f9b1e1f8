use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which diagonal block of the embedded dual slack matrix failed a PSD test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualBlock {
    /// Top-left `n × n` block `Σ yᵢ(Aᵢ + σI) − tI`.
    Spectral,
    /// The `m` multiplier entries.
    Multipliers,
    /// The final `1 × 1` entry `1 − Σ yᵢ`.
    Normalization,
}

impl std::fmt::Display for DualBlock {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DualBlock::Spectral => "spectral (top-left n x n) block",
            DualBlock::Multipliers => "multiplier block",
            DualBlock::Normalization => "normalization (last diagonal) entry",
        })
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("matrix order must be at least 1")]
    EmptyMatrix,
    #[error("row {row} has {found} entries, expected {expected}")]
    NotSquare { row: usize, found: usize, expected: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("matrix exponential overflowed")]
    Overflow,
    #[error("not a spectraplex point: {0}")]
    NotSpectraplex(String),
    #[error("not a simplex point: {0}")]
    NotSimplex(String),
    #[error("instance must contain at least one matrix")]
    EmptyInstance,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("embedded primal objective {delta} is negative; use the auto shift policy")]
    NegativeObjective { delta: f64 },
    #[error("dual point infeasible: {block} has minimum eigenvalue {min_eigenvalue}")]
    DualInfeasible { block: DualBlock, min_eigenvalue: f64 },
    #[error("invalid dual lift: {0}")]
    InvalidLift(String),
    #[error("degenerate multiplier: sum of multipliers {sum} with positive t = {t}")]
    DegenerateMultiplier { sum: f64, t: f64 },
    #[error("game too large for the support-enumeration oracle: min(m, n) = {size} > {limit}")]
    OracleScale { size: usize, limit: usize },
    #[error("no equalizing support found")]
    NoSupport,
    #[error("SDPA parse error on line {line}: {message}")]
    Sdpa { line: usize, message: String },
}

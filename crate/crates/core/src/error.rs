use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch")]
    DimensionMismatch,

    #[error("invalid benchmark spec: {0}")]
    InvalidBenchmark(String),

    #[error("invalid noise spec: {0}")]
    InvalidNoise(String),

    #[error("invalid algorithm spec: {0}")]
    InvalidAlgorithm(String),

    #[error("optimum not all-ones")]
    OptimumNotAllOnes,

    #[error("exhaustive check infeasible (n = {0})")]
    ExhaustiveCheckInfeasible(usize),

    #[error("lumping invalid: {0}")]
    LumpingInvalid(String),

    #[error("state space too large (n = {0})")]
    StateSpaceTooLarge(usize),

    #[error("fitness-proportionate acceptance undefined (negative fitness)")]
    FpAcceptanceUndefined,

    #[error("drift condition violated at state {state} (drift {drift} < {delta})")]
    DriftViolated {
        state: usize,
        drift: f64,
        delta: f64,
    },

    #[error("unpreparable level {0}")]
    UnpreparableLevel(usize),

    #[error("insufficient samples")]
    InsufficientSamples,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

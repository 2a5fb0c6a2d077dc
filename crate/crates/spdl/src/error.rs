//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grid resolution must be even, got n = {0}")]
    OddResolution(usize),
    #[error("grid resolution must be at least 8, got n = {0}")]
    ResolutionTooSmall(usize),
    #[error("box length must be positive, got {0}")]
    NonpositiveBoxLength(f64),
    #[error("expected {expected} samples, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("negative time step {0}")]
    NegativeDt(f64),
    #[error("cannot calibrate a zero field")]
    ZeroField,
    #[error("cutoff {xi_cut} exceeds the dealiased band limit {limit}")]
    CutoffExceedsDealias { xi_cut: f64, limit: f64 },
    #[error("CFL violation at t = {t}: dt = {dt} exceeds 0.5*dx/max|u| = {bound}")]
    CflViolation { t: f64, dt: f64, bound: f64 },
    #[error("sigma2 = {0} outside the Hall-MHD range [-1, 0]")]
    Sigma2Range(f64),
    #[error("sigma = {value} outside the supported range [{lo}, {hi}]")]
    SigmaRange { value: f64, lo: f64, hi: f64 },
    #[error("delta must satisfy 0 < delta < 3/2 - sigma, got delta = {delta}, sigma = {sigma}")]
    DeltaRange { delta: f64, sigma: f64 },
    #[error("time integral diverges: need alpha < 1 and beta < 1, got alpha = {alpha}, beta = {beta}")]
    DivergentBetaIntegral { alpha: f64, beta: f64 },
    #[error("{name} must be positive, got {value}")]
    NonpositiveArgument { name: &'static str, value: f64 },
    #[error("need at least {min} positive samples in window [{t_lo}, {t_hi}], found {found}")]
    InsufficientSamples {
        min: usize,
        t_lo: f64,
        t_hi: f64,
        found: usize,
    },
    #[error("nonpositive value {value} at t = {t} in fit window")]
    NonpositiveValue { t: f64, value: f64 },
    #[error("splitting check precondition failed: {0}")]
    SplittingPrecondition(String),
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("config: {0}")]
    ConfigGlobal(String),
    #[error("csv row {row}: {msg}")]
    Csv { row: usize, msg: String },
    #[error("bad checkpoint magic")]
    BadMagic,
    #[error("unsupported checkpoint version {0}")]
    BadVersion(u32),
    #[error("bad checkpoint field count {0}")]
    BadFieldCount(u8),
    #[error("truncated checkpoint payload")]
    TruncatedPayload,
    #[error("checkpoint has trailing bytes")]
    TrailingData,
    #[error("missing series `{0}`")]
    MissingSeries(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

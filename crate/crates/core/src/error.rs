use thiserror::Error;

/// Errors raised by the catalog, the spinor algebra and the numerical oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("x = {x} lies outside the domain {domain}")]
    Domain { x: f64, domain: String },

    #[error("potential is singular at x = {x}")]
    Pole { x: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("level n = {n} is singular (the closed form has a vanishing denominator)")]
    SingularLevel { n: usize },

    #[error("level n = {n} is outside the admissible window ({window})")]
    LevelOutOfRange { n: usize, window: String },

    #[error("unknown case '{0}'")]
    UnknownCase(String),

    #[error("{0} has no closed-form zero mode")]
    UnsupportedCase(String),

    #[error("k_y = 0 cannot be divided out; use the k_y = 0 solution instead")]
    ZeroKy,

    #[error("residual is undefined for an identically zero field")]
    UndefinedResidual,

    #[error("base of the complex power vanishes at sample {index}")]
    BranchAnchor { index: usize },

    #[error("integrand has a pole at x = {x}")]
    IntegrandPole { x: f64 },

    #[error("boundary condition violated: {0}")]
    BoundaryCondition(String),

    #[error("QR iteration did not converge on block [{lo}, {hi}] after {iterations} sweeps")]
    NoConvergence { lo: usize, hi: usize, iterations: usize },

    #[error("field lengths differ: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("grid: {0}")]
    Grid(String),

    #[error("numerical overflow: {0}")]
    Overflow(String),
}

impl Error {
    /// True for failures of the numerical machinery, as opposed to invalid
    /// input or requests outside a closed form's range.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::UndefinedResidual
                | Error::BranchAnchor { .. }
                | Error::IntegrandPole { .. }
                | Error::BoundaryCondition(_)
                | Error::NoConvergence { .. }
                | Error::Overflow(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

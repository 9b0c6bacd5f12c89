//! Massless (2+1)-dimensional Dirac equation with complex potentials.
//!
//! The crate reduces the Dirac–Weyl equation with a complex scalar potential
//! (or a complex Lorentz-scalar potential) to decoupled Schrödinger-like
//! problems, evaluates the closed-form spectra and wavefunctions of the
//! solvable families, and checks every closed form against independent
//! numerics: finite-difference residuals, real-axis shooting, Hill matrices
//! for periodic potentials and a dense complex eigensolver.
//!
//! Units: `c = 1`, so `U = V/c` and `eps = E/c`.

pub mod error;
pub mod numerics;
pub mod potential;
pub mod reduction;
pub mod specialfun;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use numerics::grid::Grid;
pub use potential::{AnalyticLevel, Branch, LorentzCase, PotentialSpec};
pub use reduction::SpinorField;
pub use verify::{analytic_levels, verify_case, CaseId, CaseParams, GridSettings, Tolerances, VerificationReport};

pub(crate) const I: C64 = C64::new(0.0, 1.0);

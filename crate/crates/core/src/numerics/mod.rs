//! Grids, finite differences, quadrature, residuals and the independent
//! eigenvalue oracles.

pub mod chebyshev;
pub mod diff;
pub mod eigen;
pub mod grid;
pub mod hill;
pub mod quad;
pub mod residual;
pub mod shoot;

pub use chebyshev::{schrodinger_spectrum, EndCondition};
pub use diff::{differentiate, Derivative};
pub use eigen::{dense_complex_eigenvalues, eigenpair_residual, CMatrix};
pub use hill::{hill_band_eigenvalues, HillSpectrum};
pub use quad::cumulative_integral;
pub use residual::schrodinger_residual;
pub use shoot::{find_real_eigenvalues, shoot, BoundaryCondition, MismatchCurve, RealRoot, ScanSettings};

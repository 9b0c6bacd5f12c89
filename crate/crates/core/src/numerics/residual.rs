use crate::numerics::diff::{differentiate, Derivative};
use crate::{Error, Grid, Result, C64};

/// Number of points dropped at each end of a non-periodic grid before a
/// residual norm is taken.
pub fn boundary_trim(grid: &Grid, which: Derivative) -> usize {
    if grid.periodic {
        0
    } else {
        which.order().min(3)
    }
}

/// Sum of `|f_j|^2` over the interior window `[trim, n - trim)`.
pub(crate) fn interior_sq(f: &[C64], trim: usize) -> f64 {
    f[trim..f.len() - trim].iter().map(|z| z.norm_sqr()).sum()
}

/// Relative residual of `-psi'' + ueff * psi = 0` over interior points,
/// `‖-psi'' + ueff psi‖₂ / ‖psi‖₂`.
pub fn schrodinger_residual(psi: &[C64], ueff: &[C64], grid: &Grid) -> Result<f64> {
    if psi.len() != grid.len() {
        return Err(Error::LengthMismatch { expected: grid.len(), got: psi.len() });
    }
    if ueff.len() != grid.len() {
        return Err(Error::LengthMismatch { expected: grid.len(), got: ueff.len() });
    }
    let trim = boundary_trim(grid, Derivative::Second);
    let norm = interior_sq(psi, trim);
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::UndefinedResidual);
    }
    let d2 = differentiate(psi, grid, Derivative::Second);
    let lhs: Vec<C64> = d2
        .iter()
        .zip(psi.iter().zip(ueff))
        .map(|(dd, (p, u))| -dd + u * p)
        .collect();
    Ok((interior_sq(&lhs, trim) / norm).sqrt())
}

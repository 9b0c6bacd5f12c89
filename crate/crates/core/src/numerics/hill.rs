//! Fourier-space (Hill) matrices for periodic Schrödinger operators.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::numerics::eigen::{dense_complex_eigenvalues, CMatrix};
use crate::{Error, Result, C64};

/// Fourier tail above which the truncation is flagged.
pub const TAIL_LIMIT: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HillSpectrum {
    /// Eigenvalues sorted by real part, then imaginary part.
    pub eigenvalues: Vec<C64>,
    /// Largest Fourier coefficient magnitude with `|m| >= K`.
    pub tail: f64,
    pub truncation_warning: Option<String>,
}

impl HillSpectrum {
    /// Eigenvalue of smallest modulus.
    pub fn nearest_zero(&self) -> C64 {
        self.eigenvalues
            .iter()
            .copied()
            .min_by(|a, b| a.norm().total_cmp(&b.norm()))
            .unwrap_or(C64::new(f64::NAN, f64::NAN))
    }
}

/// Fourier coefficients `c_m = (1/L) ∫_0^L u(x) e^{-2πimx/L} dx` for
/// `|m| <= max_m`, by the trapezoidal rule on `samples` points (exact DFT of
/// the samples). Index `m + max_m` holds `c_m`.
fn fourier_coefficients<F: Fn(f64) -> C64>(ueff: &F, period: f64, samples: usize, max_m: usize) -> Vec<C64> {
    let values: Vec<C64> = (0..samples).map(|j| ueff(period * j as f64 / samples as f64)).collect();
    let mm = max_m as i64;
    (-mm..=mm)
        .map(|m| {
            let mut acc = C64::new(0.0, 0.0);
            for (j, v) in values.iter().enumerate() {
                let phase = -2.0 * PI * (m * j as i64).rem_euclid(samples as i64) as f64 / samples as f64;
                acc += v * C64::from_polar(1.0, phase);
            }
            acc / samples as f64
        })
        .collect()
}

/// Eigenvalues of `-d²/dx² + Ueff` restricted to Bloch functions
/// `e^{i k x} Σ_m c_m e^{2πimx/L}` with `|m| <= K`.
///
/// The `(2K+1) x (2K+1)` matrix has entries `(k + 2πm/L)² δ_{mm'} + Û(m - m')`
/// with `Û` taken from a DFT of `8K` samples over one period.
pub fn hill_band_eigenvalues<F>(ueff: F, period: f64, modes: usize, bloch_k: f64) -> Result<HillSpectrum>
where
    F: Fn(f64) -> C64,
{
    if modes < 8 {
        return Err(Error::InvalidParameter(format!("Hill truncation needs K >= 8, got {modes}")));
    }
    if !(period > 0.0 && period.is_finite()) || !bloch_k.is_finite() {
        return Err(Error::InvalidParameter(format!("bad period {period} or Bloch momentum {bloch_k}")));
    }
    let dim = 2 * modes + 1;
    let samples = 8 * modes;
    // differences m - m' reach 2K; samples = 8K keeps them un-aliased
    let coeffs = fourier_coefficients(&ueff, period, samples, 2 * modes);
    if coeffs.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
        return Err(Error::Overflow("non-finite Fourier coefficient of the periodic potential".into()));
    }
    let centre = 2 * modes;
    let tail = coeffs
        .iter()
        .enumerate()
        .filter(|(idx, _)| (*idx as i64 - centre as i64).unsigned_abs() as usize >= modes)
        .map(|(_, c)| c.norm())
        .fold(0.0, f64::max);

    let g = 2.0 * PI / period;
    let h = CMatrix::from_fn(dim, |r, c| {
        let m = r as i64 - modes as i64;
        let mp = c as i64 - modes as i64;
        let mut v = coeffs[(centre as i64 + m - mp) as usize];
        if r == c {
            let q = bloch_k + g * m as f64;
            v += q * q;
        }
        v
    });
    let mut eigenvalues = dense_complex_eigenvalues(&h)?;
    eigenvalues.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let truncation_warning = (tail > TAIL_LIMIT)
        .then(|| format!("Fourier tail {tail:.3e} at |m| >= {modes} exceeds {TAIL_LIMIT:e}; increase the mode count"));
    Ok(HillSpectrum { eigenvalues, tail, truncation_warning })
}

//! Two-sided shooting for energy-dependent Schrödinger problems.
//!
//! The eigenvalue problem `-psi'' + Ueff(x; eps) psi = 0` is integrated as a
//! first-order complex system from both ends of the interval with fixed-step
//! RK4, and the two solutions are compared through their Wronskian at the
//! midpoint. `Ueff` is re-sampled for every trial `eps`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Grid, Result, C64};

/// Boundary condition applied at both ends of the shooting interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryCondition {
    Dirichlet,
    /// Exponential decay outward; requires `Re Ueff > 0` at both ends.
    Decaying,
}

const RENORM_EVERY: usize = 50;
const MAX_STEPS_PER_SIDE: usize = 5_000_000;

/// Normalized mismatch `M(eps)` between the left and right solutions.
///
/// `M = (psiL psiR' - psiL' psiR) / (|(psiL, psiL')| |(psiR, psiR')|)` at the
/// midpoint, so `|M| <= 1` and `M = 0` exactly when the two solutions are
/// proportional.
pub fn shoot<F>(ueff: &F, eps: f64, grid: &Grid, bc: BoundaryCondition) -> Result<C64>
where
    F: Fn(f64, f64) -> C64 + ?Sized,
{
    let (x0, x1) = (grid.x0, grid.x1);
    let xm = 0.5 * (x0 + x1);

    let mut umax = 0.0_f64;
    for j in 0..grid.len() {
        let u = ueff(grid.x(j), eps);
        if !(u.re.is_finite() && u.im.is_finite()) {
            return Err(Error::Pole { x: grid.x(j) });
        }
        umax = umax.max(u.norm());
    }
    let mut h = grid.h();
    if umax > 0.0 {
        h = h.min(0.1 / umax.sqrt());
    }
    let steps = ((xm - x0) / h).ceil() as usize;
    if steps > MAX_STEPS_PER_SIDE {
        return Err(Error::InvalidParameter(format!(
            "shooting would need {steps} RK4 steps per side; shrink the potential range"
        )));
    }
    let steps = steps.max(1);

    let start = |x: f64, outward_sign: f64| -> Result<[C64; 2]> {
        match bc {
            BoundaryCondition::Dirichlet => Ok([C64::new(0.0, 0.0), C64::new(-outward_sign, 0.0)]),
            BoundaryCondition::Decaying => {
                let u = ueff(x, eps);
                if u.re <= 0.0 {
                    return Err(Error::BoundaryCondition(format!(
                        "Re Ueff({x}) = {} is not positive at eps = {eps}; \
                         the truncation point is not classically forbidden",
                        u.re
                    )));
                }
                let kappa = u.sqrt();
                // decays outward: psi' = -outward_sign * kappa * psi
                Ok([C64::new(1.0, 0.0), -kappa * outward_sign])
            }
        }
    };

    let left = integrate(ueff, eps, x0, xm, steps, start(x0, -1.0)?)?;
    let right = integrate(ueff, eps, x1, xm, steps, start(x1, 1.0)?)?;

    let wronskian = left[0] * right[1] - left[1] * right[0];
    let nl = (left[0].norm_sqr() + left[1].norm_sqr()).sqrt();
    let nr = (right[0].norm_sqr() + right[1].norm_sqr()).sqrt();
    Ok(wronskian / (nl * nr))
}

fn integrate<F>(ueff: &F, eps: f64, from: f64, to: f64, steps: usize, mut y: [C64; 2]) -> Result<[C64; 2]>
where
    F: Fn(f64, f64) -> C64 + ?Sized,
{
    let h = (to - from) / steps as f64;
    let rhs = |u: C64, y: &[C64; 2]| [y[1], u * y[0]];
    let mut u0 = ueff(from, eps);
    for k in 0..steps {
        let x = from + k as f64 * h;
        let xh = x + 0.5 * h;
        let xe = if k + 1 == steps { to } else { x + h };
        let uh = ueff(xh, eps);
        let u1 = ueff(xe, eps);

        let k1 = rhs(u0, &y);
        let y2 = [y[0] + k1[0] * (0.5 * h), y[1] + k1[1] * (0.5 * h)];
        let k2 = rhs(uh, &y2);
        let y3 = [y[0] + k2[0] * (0.5 * h), y[1] + k2[1] * (0.5 * h)];
        let k3 = rhs(uh, &y3);
        let y4 = [y[0] + k3[0] * h, y[1] + k3[1] * h];
        let k4 = rhs(u1, &y4);
        for i in 0..2 {
            y[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (h / 6.0);
        }
        u0 = u1;

        if (k + 1) % RENORM_EVERY == 0 || k + 1 == steps {
            let scale = y[0].norm().max(y[1].norm());
            if !scale.is_finite() {
                return Err(Error::Overflow(format!("shooting state diverged near x = {xe}")));
            }
            if scale > 0.0 {
                y[0] /= scale;
                y[1] /= scale;
            }
        }
    }
    Ok(y)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MismatchSample {
    pub eps: f64,
    pub abs: f64,
    pub re: f64,
    pub im: f64,
}

/// A refined real root of the mismatch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealRoot {
    pub eps: f64,
    pub abs_mismatch: f64,
    pub mismatch_re: f64,
    pub mismatch_im: f64,
    /// `1 / |dM/deps|` at the root: how far the root moves per unit of mismatch noise.
    pub condition: f64,
}

/// Mismatch scan over a real energy window plus the refined roots.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MismatchCurve {
    pub samples: Vec<MismatchSample>,
    pub roots: Vec<RealRoot>,
}

impl MismatchCurve {
    pub fn root_energies(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.eps).collect()
    }
}

/// Settings for [`find_real_eigenvalues`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanSettings {
    pub eps_lo: f64,
    pub eps_hi: f64,
    pub step: f64,
    pub tol: f64,
}

impl ScanSettings {
    /// Window with the default step `(hi - lo) / 2000` and tolerance `1e-6`.
    pub fn new(eps_lo: f64, eps_hi: f64) -> Self {
        Self { eps_lo, eps_hi, step: (eps_hi - eps_lo) / 2000.0, tol: 1e-6 }
    }
}

const GOLDEN_WIDTH: f64 = 1e-10;

/// Scan `|M(eps)|` on a real grid, refine every sufficiently deep local
/// minimum by golden section, and keep the ones whose final `|M|` is below
/// `tol`.
pub fn find_real_eigenvalues<F>(
    ueff: &F,
    scan: &ScanSettings,
    grid: &Grid,
    bc: BoundaryCondition,
) -> Result<MismatchCurve>
where
    F: Fn(f64, f64) -> C64 + Sync + ?Sized,
{
    if !(scan.eps_lo < scan.eps_hi) {
        return Err(Error::InvalidParameter(format!(
            "empty energy window [{}, {}]",
            scan.eps_lo, scan.eps_hi
        )));
    }
    if !(scan.step > 0.0) || !(scan.tol > 0.0) {
        return Err(Error::InvalidParameter("scan step and tolerance must be positive".into()));
    }
    let count = ((scan.eps_hi - scan.eps_lo) / scan.step).ceil() as usize + 1;
    let samples: Vec<MismatchSample> = (0..count)
        .into_par_iter()
        .map(|k| {
            let eps = (scan.eps_lo + k as f64 * scan.step).min(scan.eps_hi);
            let m = shoot(ueff, eps, grid, bc)?;
            Ok(MismatchSample { eps, abs: m.norm(), re: m.re, im: m.im })
        })
        .collect::<Result<_>>()?;

    let candidates: Vec<usize> = (1..samples.len().saturating_sub(1))
        .filter(|&k| {
            let a = samples[k].abs;
            a <= samples[k - 1].abs && a <= samples[k + 1].abs && a < 1e3 * scan.tol
        })
        .collect();

    let refined: Vec<Option<RealRoot>> = candidates
        .par_iter()
        .map(|&k| -> Result<Option<RealRoot>> {
            let f = |e: f64| shoot(ueff, e, grid, bc).map(|m| m.norm());
            let eps = golden_section(f, samples[k - 1].eps, samples[k + 1].eps)?;
            let m = shoot(ueff, eps, grid, bc)?;
            if m.norm() >= scan.tol {
                return Ok(None);
            }
            let d = 1e-6 * scan.step.max(1e-3);
            let slope = (shoot(ueff, eps + d, grid, bc)? - shoot(ueff, eps - d, grid, bc)?) / (2.0 * d);
            Ok(Some(RealRoot {
                eps,
                abs_mismatch: m.norm(),
                mismatch_re: m.re,
                mismatch_im: m.im,
                condition: 1.0 / slope.norm(),
            }))
        })
        .collect::<Result<_>>()?;

    let mut roots: Vec<RealRoot> = Vec::new();
    for r in refined.into_iter().flatten() {
        match roots.last_mut() {
            Some(prev) if (r.eps - prev.eps).abs() < scan.step => {
                if r.abs_mismatch < prev.abs_mismatch {
                    *prev = r;
                }
            }
            _ => roots.push(r),
        }
    }
    Ok(MismatchCurve { samples, roots })
}

fn golden_section<F: Fn(f64) -> Result<f64>>(f: F, mut a: f64, mut b: f64) -> Result<f64> {
    let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while (b - a).abs() > GOLDEN_WIDTH {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    Ok(0.5 * (a + b))
}

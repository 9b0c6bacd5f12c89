//! Jacobi polynomials with complex parameters and phase-continuous helpers
//! for complex powers and arctangents sampled along a grid.

use crate::numerics::grid::Grid;
use crate::{Error, Result, C64};

/// Recurrence denominators smaller than this switch evaluation to the series.
pub const DEGENERACY_GUARD: f64 = 1e-13;

/// `P_n^{(alpha, beta)}(y)`.
///
/// Uses the three-term recurrence, falling back to the explicit finite sum
/// when a recurrence denominator is numerically zero.
pub fn jacobi(n: usize, alpha: C64, beta: C64, y: C64) -> C64 {
    jacobi_recurrence(n, alpha, beta, y).unwrap_or_else(|| jacobi_series(n, alpha, beta, y))
}

/// Three-term recurrence; `None` when a denominator is below the guard.
pub fn jacobi_recurrence(n: usize, alpha: C64, beta: C64, y: C64) -> Option<C64> {
    let one = C64::new(1.0, 0.0);
    if n == 0 {
        return Some(one);
    }
    let ab = alpha + beta;
    let p1 = ((ab + 2.0) * y + (alpha - beta)) * 0.5;
    if n == 1 {
        return Some(p1);
    }
    let (mut prev, mut cur) = (one, p1);
    for k in 2..=n {
        let kf = k as f64;
        let c = ab + 2.0 * kf;
        let denom = 2.0 * kf * (ab + kf) * (c - 2.0);
        if (ab + kf).norm() < DEGENERACY_GUARD || (c - 2.0).norm() < DEGENERACY_GUARD {
            return None;
        }
        let a1 = (c - 1.0) * (c * (c - 2.0) * y + alpha * alpha - beta * beta);
        let a2 = 2.0 * (alpha + kf - 1.0) * (beta + kf - 1.0) * c;
        let next = (a1 * cur - a2 * prev) / denom;
        prev = cur;
        cur = next;
    }
    Some(cur)
}

/// `binom(z, m)` for complex `z` and integer `m >= 0`, as a finite product.
pub fn binomial(z: C64, m: usize) -> C64 {
    let mut acc = C64::new(1.0, 0.0);
    for i in 0..m {
        acc *= (z - i as f64) / (i + 1) as f64;
    }
    acc
}

/// Finite sum
/// `Σ_k binom(n+α, n-k) binom(n+β, k) ((y-1)/2)^k ((y+1)/2)^{n-k}`.
pub fn jacobi_series(n: usize, alpha: C64, beta: C64, y: C64) -> C64 {
    let nf = n as f64;
    let lo = (y - 1.0) * 0.5;
    let hi = (y + 1.0) * 0.5;
    (0..=n)
        .map(|k| binomial(alpha + nf, n - k) * binomial(beta + nf, k) * lo.powu(k as u32) * hi.powu((n - k) as u32))
        .sum()
}

/// `exp(exponent * log_c(base))` where `log_c` is the logarithm made
/// continuous along the sample sequence and equal to the principal value at
/// `anchor`.
pub fn phase_continuous_log_power(base: &[C64], exponent: C64, anchor: usize) -> Result<Vec<C64>> {
    let logs = continuous_log(base, anchor)?;
    Ok(logs.into_iter().map(|l| (exponent * l).exp()).collect())
}

/// Continuous logarithm of a nowhere-zero sample sequence, principal at `anchor`.
pub fn continuous_log(base: &[C64], anchor: usize) -> Result<Vec<C64>> {
    if anchor >= base.len() {
        return Err(Error::InvalidParameter(format!("anchor {anchor} outside {} samples", base.len())));
    }
    if let Some(index) = base.iter().position(|b| b.norm() == 0.0 || !b.norm().is_finite()) {
        return Err(Error::BranchAnchor { index });
    }
    let mut out = vec![C64::new(0.0, 0.0); base.len()];
    out[anchor] = base[anchor].ln();
    for j in anchor + 1..base.len() {
        out[j] = out[j - 1] + (base[j] / base[j - 1]).ln();
    }
    for j in (0..anchor).rev() {
        out[j] = out[j + 1] + (base[j] / base[j + 1]).ln();
    }
    Ok(out)
}

const ARCTAN_TOL: f64 = 1e-13;
const ARCTAN_MAX_DEPTH: u32 = 24;

/// `arctan(y(x))` on the grid, as `atan(y(x_anchor)) + ∫ y'/(1+y²) dx`.
///
/// Each grid interval is integrated by Simpson's rule; when one panel and
/// four panels disagree, the interval is refined adaptively.
pub fn arctan_by_integration<Y, D>(y: Y, y_prime: D, grid: &Grid, anchor: usize) -> Result<Vec<C64>>
where
    Y: Fn(f64) -> C64,
    D: Fn(f64) -> C64,
{
    if anchor >= grid.len() {
        return Err(Error::InvalidParameter(format!("anchor {anchor} outside {} samples", grid.len())));
    }
    let integrand = |x: f64| -> Result<C64> {
        let v = y(x);
        let d = C64::new(1.0, 0.0) + v * v;
        if d.norm() < 1e-14 {
            return Err(Error::IntegrandPole { x });
        }
        Ok(y_prime(x) / d)
    };
    let interval = |a: f64, b: f64| -> Result<C64> {
        let one = simpson(&integrand, a, b)?;
        let q = 0.25 * (b - a);
        let mut four = C64::new(0.0, 0.0);
        for i in 0..4 {
            four += simpson(&integrand, a + i as f64 * q, a + (i + 1) as f64 * q)?;
        }
        if (one - four).norm() <= ARCTAN_TOL * (1.0 + four.norm()) {
            return Ok(four);
        }
        let mut total = C64::new(0.0, 0.0);
        for i in 0..4 {
            let (lo, hi) = (a + i as f64 * q, a + (i + 1) as f64 * q);
            total += adaptive_simpson(&integrand, lo, hi, simpson(&integrand, lo, hi)?, ARCTAN_MAX_DEPTH)?;
        }
        Ok(total)
    };

    let n = grid.len();
    let mut out = vec![C64::new(0.0, 0.0); n];
    out[anchor] = y(grid.x(anchor)).atan();
    for j in anchor..n - 1 {
        out[j + 1] = out[j] + interval(grid.x(j), grid.x(j + 1))?;
    }
    for j in (0..anchor).rev() {
        out[j] = out[j + 1] - interval(grid.x(j), grid.x(j + 1))?;
    }
    Ok(out)
}

fn simpson<F: Fn(f64) -> Result<C64>>(f: &F, a: f64, b: f64) -> Result<C64> {
    let m = 0.5 * (a + b);
    Ok((f(a)? + f(m)? * 4.0 + f(b)?) * ((b - a) / 6.0))
}

fn adaptive_simpson<F: Fn(f64) -> Result<C64>>(f: &F, a: f64, b: f64, whole: C64, depth: u32) -> Result<C64> {
    let m = 0.5 * (a + b);
    let left = simpson(f, a, m)?;
    let right = simpson(f, m, b)?;
    let delta = left + right - whole;
    if depth == 0 || delta.norm() <= 15.0 * ARCTAN_TOL * (1.0 + whole.norm()) {
        return Ok(left + right + delta / 15.0);
    }
    Ok(adaptive_simpson(f, a, m, left, depth - 1)? + adaptive_simpson(f, m, b, right, depth - 1)?)
}

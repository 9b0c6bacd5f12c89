//! Spinor algebra: the `±` basis, reconstruction of one component from the
//! other, the `ky = 0` closed form, spin flip, the Lorentz-scalar unitary
//! transform and first-order residuals.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use serde::{Deserialize, Serialize};

use crate::numerics::diff::{differentiate, Derivative};
use crate::numerics::quad::cumulative_integral;
use crate::numerics::residual::{boundary_trim, interior_sq};
use crate::potential::{eval_potential, Domain, PotentialSpec};
use crate::{Error, Grid, Result, C64, I};

/// Two-component field `(psi_A, psi_B)` sampled on a grid, with the `y`
/// dependence `e^{i ky y}` factored out.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpinorField {
    pub grid: Grid,
    pub psi_a: Vec<C64>,
    pub psi_b: Vec<C64>,
    pub ky: f64,
    pub eps: f64,
}

impl SpinorField {
    pub fn new(grid: Grid, psi_a: Vec<C64>, psi_b: Vec<C64>, ky: f64, eps: f64) -> Result<Self> {
        for f in [&psi_a, &psi_b] {
            if f.len() != grid.len() {
                return Err(Error::LengthMismatch { expected: grid.len(), got: f.len() });
            }
        }
        Ok(Self { grid, psi_a, psi_b, ky, eps })
    }

    /// `psi_A = (psi_+ + psi_-)/2`, `psi_B = (psi_- - psi_+)/2`.
    pub fn from_pm_basis(grid: Grid, psi_plus: &[C64], psi_minus: &[C64], ky: f64, eps: f64) -> Result<Self> {
        if psi_plus.len() != psi_minus.len() {
            return Err(Error::LengthMismatch { expected: psi_minus.len(), got: psi_plus.len() });
        }
        let a = psi_plus.iter().zip(psi_minus).map(|(p, m)| (p + m) * 0.5).collect();
        let b = psi_plus.iter().zip(psi_minus).map(|(p, m)| (m - p) * 0.5).collect();
        Self::new(grid, a, b, ky, eps)
    }

    /// `(psi_+, psi_-) = (psi_A - psi_B, psi_A + psi_B)`.
    pub fn to_pm_basis(&self) -> (Vec<C64>, Vec<C64>) {
        let plus = self.psi_a.iter().zip(&self.psi_b).map(|(a, b)| a - b).collect();
        let minus = self.psi_a.iter().zip(&self.psi_b).map(|(a, b)| a + b).collect();
        (plus, minus)
    }

    /// Swap the components and reverse `ky`.
    pub fn spin_flip(&self) -> Self {
        Self {
            grid: self.grid.clone(),
            psi_a: self.psi_b.clone(),
            psi_b: self.psi_a.clone(),
            ky: -self.ky,
            eps: self.eps,
        }
    }

    /// Applies `T† = (1/√2)[[1, -i], [-i, 1]]` to `(f_-, f_+)` stored as
    /// `(psi_a, psi_b)`, giving `(i psi_-, psi_+)`.
    pub fn lorentz_transform(&self) -> Self {
        let (a, b) = apply_2x2(&self.psi_a, &self.psi_b, [[1.0.into(), -I], [-I, 1.0.into()]]);
        Self { psi_a: a, psi_b: b, ..self.clone() }
    }

    /// Inverse of [`lorentz_transform`](Self::lorentz_transform).
    pub fn lorentz_transform_inverse(&self) -> Self {
        let (a, b) = apply_2x2(&self.psi_a, &self.psi_b, [[1.0.into(), I], [I, 1.0.into()]]);
        Self { psi_a: a, psi_b: b, ..self.clone() }
    }

    fn norm_sq(&self, trim: usize) -> f64 {
        interior_sq(&self.psi_a, trim) + interior_sq(&self.psi_b, trim)
    }
}

fn apply_2x2(a: &[C64], b: &[C64], m: [[C64; 2]; 2]) -> (Vec<C64>, Vec<C64>) {
    let s = FRAC_1_SQRT_2;
    let top = a.iter().zip(b).map(|(x, y)| (m[0][0] * x + m[0][1] * y) * s).collect();
    let bot = a.iter().zip(b).map(|(x, y)| (m[1][0] * x + m[1][1] * y) * s).collect();
    (top, bot)
}

fn sample_potential(spec: &PotentialSpec, grid: &Grid) -> Result<Vec<C64>> {
    grid.try_sample(|x| eval_potential(spec, x))
}

fn require_scalar(spec: &PotentialSpec) -> Result<()> {
    if spec.is_lorentz() {
        return Err(Error::InvalidParameter(format!("{} is a Lorentz-scalar family", spec.name())));
    }
    Ok(())
}

/// `psi_+ = [i (U - eps) psi_- + psi_-'] / ky`.
pub fn reconstruct_plus(psi_minus: &[C64], spec: &PotentialSpec, eps: f64, ky: f64, grid: &Grid) -> Result<Vec<C64>> {
    require_scalar(spec)?;
    if ky == 0.0 {
        return Err(Error::ZeroKy);
    }
    if psi_minus.len() != grid.len() {
        return Err(Error::LengthMismatch { expected: grid.len(), got: psi_minus.len() });
    }
    let u = sample_potential(spec, grid)?;
    let d = differentiate(psi_minus, grid, Derivative::First);
    Ok((0..grid.len()).map(|j| (I * (u[j] - eps) * psi_minus[j] + d[j]) / ky).collect())
}

/// `psi_- = [(U - eps) psi_+ + i psi_+'] / (i ky)`.
pub fn reconstruct_minus(psi_plus: &[C64], spec: &PotentialSpec, eps: f64, ky: f64, grid: &Grid) -> Result<Vec<C64>> {
    require_scalar(spec)?;
    if ky == 0.0 {
        return Err(Error::ZeroKy);
    }
    if psi_plus.len() != grid.len() {
        return Err(Error::LengthMismatch { expected: grid.len(), got: psi_plus.len() });
    }
    let u = sample_potential(spec, grid)?;
    let d = differentiate(psi_plus, grid, Derivative::First);
    Ok((0..grid.len()).map(|j| ((u[j] - eps) * psi_plus[j] + I * d[j]) / (I * ky)).collect())
}

/// Sign choice of the `ky = 0` solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KyZeroBranch {
    /// `psi_A = exp(-i ∫(U - eps))`, `psi_B = psi_A`.
    Symmetric,
    /// `psi_A = exp(+i ∫(U - eps))`, `psi_B = -psi_A`.
    Antisymmetric,
}

/// Closed-form `ky = 0` spinor, with the integral anchored at `π/2` on
/// `(0, π)` and at `x = 0` (or the nearest grid point) elsewhere.
pub fn ky_zero_solution(spec: &PotentialSpec, eps: f64, branch: KyZeroBranch, grid: &Grid) -> Result<SpinorField> {
    require_scalar(spec)?;
    let u = sample_potential(spec, grid)?;
    let integrand: Vec<C64> = u.iter().map(|v| v - eps).collect();
    let anchor_x = match spec.domain() {
        Domain::Interval { lo, hi } if (hi - lo - std::f64::consts::PI).abs() < 1e-12 && lo == 0.0 => FRAC_PI_2,
        _ => 0.0,
    };
    let phase = cumulative_integral(&integrand, grid, grid.nearest_index(anchor_x));
    let (s, sign) = match branch {
        KyZeroBranch::Symmetric => (-1.0, 1.0),
        KyZeroBranch::Antisymmetric => (1.0, -1.0),
    };
    let a: Vec<C64> = phase.iter().map(|p| (s * I * p).exp()).collect();
    if a.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::Overflow("ky = 0 solution overflowed".into()));
    }
    let b = a.iter().map(|v| v * sign).collect();
    SpinorField::new(grid.clone(), a, b, 0.0, eps)
}

/// Relative residuals of
/// `(U - eps) psi_A - i (d/dx + ky) psi_B = 0` and
/// `(U - eps) psi_B - i (d/dx - ky) psi_A = 0`,
/// each `‖lhs‖ / (‖psi‖ (1 + |eps| + |ky|))` over interior points.
pub fn dirac_residual(s: &SpinorField, spec: &PotentialSpec) -> Result<(f64, f64)> {
    require_scalar(spec)?;
    let g = &s.grid;
    let trim = boundary_trim(g, Derivative::First);
    let norm = s.norm_sq(trim);
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::UndefinedResidual);
    }
    let u = sample_potential(spec, g)?;
    let da = differentiate(&s.psi_a, g, Derivative::First);
    let db = differentiate(&s.psi_b, g, Derivative::First);
    let (eps, k) = (s.eps, s.ky);
    let r1: Vec<C64> = (0..g.len()).map(|j| (u[j] - eps) * s.psi_a[j] - I * (db[j] + k * s.psi_b[j])).collect();
    let r2: Vec<C64> = (0..g.len()).map(|j| (u[j] - eps) * s.psi_b[j] - I * (da[j] - k * s.psi_a[j])).collect();
    let scale = norm.sqrt() * (1.0 + eps.abs() + k.abs());
    Ok((interior_sq(&r1, trim).sqrt() / scale, interior_sq(&r2, trim).sqrt() / scale))
}

/// Relative residuals of the Lorentz-scalar pair
/// `(d/dx + W) psi_- = (E + ky) psi_+` and `(-d/dx + W) psi_+ = (E - ky) psi_-`.
pub fn lorentz_residual(
    psi_minus: &[C64],
    psi_plus: &[C64],
    grid: &Grid,
    spec: &PotentialSpec,
    energy: f64,
    ky: f64,
) -> Result<(f64, f64)> {
    if !spec.is_lorentz() {
        return Err(Error::InvalidParameter(format!("{} is not a Lorentz-scalar family", spec.name())));
    }
    for f in [psi_minus, psi_plus] {
        if f.len() != grid.len() {
            return Err(Error::LengthMismatch { expected: grid.len(), got: f.len() });
        }
    }
    let trim = boundary_trim(grid, Derivative::First);
    let norm = interior_sq(psi_minus, trim) + interior_sq(psi_plus, trim);
    if norm == 0.0 || !norm.is_finite() {
        return Err(Error::UndefinedResidual);
    }
    let w = sample_potential(spec, grid)?;
    let dm = differentiate(psi_minus, grid, Derivative::First);
    let dp = differentiate(psi_plus, grid, Derivative::First);
    let r1: Vec<C64> = (0..grid.len()).map(|j| dm[j] + w[j] * psi_minus[j] - (energy + ky) * psi_plus[j]).collect();
    let r2: Vec<C64> = (0..grid.len()).map(|j| -dp[j] + w[j] * psi_plus[j] - (energy - ky) * psi_minus[j]).collect();
    let scale = norm.sqrt() * (1.0 + energy.abs() + ky.abs());
    Ok((interior_sq(&r1, trim).sqrt() / scale, interior_sq(&r2, trim).sqrt() / scale))
}

/// `exp(-∫ W)` anchored at `anchor_x`: the field annihilated by `d/dx + W`.
pub fn lorentz_ground_state(spec: &PotentialSpec, grid: &Grid, anchor_x: f64) -> Result<Vec<C64>> {
    if !spec.is_lorentz() {
        return Err(Error::InvalidParameter(format!("{} is not a Lorentz-scalar family", spec.name())));
    }
    let w = sample_potential(spec, grid)?;
    let int = cumulative_integral(&w, grid, grid.nearest_index(anchor_x));
    Ok(int.iter().map(|v| (-v).exp()).collect())
}

/// `psi_+ = (d/dx + W) psi_- / (E + ky)`; requires `E + ky != 0`.
pub fn lorentz_partner(psi_minus: &[C64], spec: &PotentialSpec, energy: f64, ky: f64, grid: &Grid) -> Result<Vec<C64>> {
    if energy + ky == 0.0 {
        return Err(Error::InvalidParameter("E + ky vanishes; psi_+ is not determined by psi_-".into()));
    }
    let w = sample_potential(spec, grid)?;
    let d = differentiate(psi_minus, grid, Derivative::First);
    Ok((0..grid.len()).map(|j| (d[j] + w[j] * psi_minus[j]) / (energy + ky)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{effective_potential, rosen_morse_levels, rosen_morse_wavefunction, zero_mode, Branch, LorentzCase};
    use crate::numerics::residual::schrodinger_residual;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_field(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
        (0..n).map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect()
    }

    fn free_spinor(grid: &Grid, eps: f64, ky: f64) -> SpinorField {
        let kappa = (eps * eps - ky * ky).sqrt();
        let minus = grid.sample(|x| C64::from_polar(1.0, kappa * x));
        let free = PotentialSpec::SinePeriodic { b: 0.0 };
        let plus = reconstruct_plus(&minus, &free, eps, ky, grid).unwrap();
        SpinorField::from_pm_basis(grid.clone(), &plus, &minus, ky, eps).unwrap()
    }

    #[test]
    fn pm_basis_examples() {
        let g = Grid::new(0.0, 1.0, 32).unwrap();
        let a = g.sample(|x| C64::new(x, 1.0 - x));
        let s = SpinorField::new(g.clone(), a.clone(), a.clone(), 0.0, 0.0).unwrap();
        let (p, m) = s.to_pm_basis();
        assert!(p.iter().all(|v| v.norm() == 0.0));
        assert!(m.iter().zip(&a).all(|(m, a)| *m == 2.0 * a));
        let neg: Vec<C64> = a.iter().map(|v| -v).collect();
        let s = SpinorField::new(g.clone(), a.clone(), neg, 0.0, 0.0).unwrap();
        assert!(s.to_pm_basis().1.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn pm_basis_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let g = Grid::new(-1.0, 1.0, 64).unwrap();
        let s = SpinorField::new(g.clone(), random_field(&mut rng, 64), random_field(&mut rng, 64), 0.3, 1.2).unwrap();
        let (p, m) = s.to_pm_basis();
        let back = SpinorField::from_pm_basis(g, &p, &m, 0.3, 1.2).unwrap();
        for j in 0..64 {
            assert!((back.psi_a[j] - s.psi_a[j]).norm() < 1e-15);
            assert!((back.psi_b[j] - s.psi_b[j]).norm() < 1e-15);
        }
    }

    #[test]
    fn free_particle_reconstruction() {
        let g = Grid::new(0.0, 10.0, 4001).unwrap();
        let (eps, ky): (f64, f64) = (1.3, 0.5);
        let kappa = (eps * eps - ky * ky).sqrt();
        let minus = g.sample(|x| C64::from_polar(1.0, kappa * x));
        let free = PotentialSpec::SinePeriodic { b: 0.0 };
        let plus = reconstruct_plus(&minus, &free, eps, ky, &g).unwrap();
        let ratio = I * (kappa - eps) / ky;
        for j in 3..g.len() - 3 {
            assert!((plus[j] - ratio * minus[j]).norm() < 1e-10);
        }
        let s = SpinorField::from_pm_basis(g, &plus, &minus, ky, eps).unwrap();
        let (r1, r2) = dirac_residual(&s, &free).unwrap();
        assert!(r1 < 1e-10 && r2 < 1e-10, "{r1} {r2}");
    }

    #[test]
    fn corrupted_spinor_is_detected() {
        let g = Grid::new(0.0, 10.0, 2001).unwrap();
        let mut s = free_spinor(&g, 1.3, 0.5);
        for v in &mut s.psi_b {
            *v *= 1.01;
        }
        let (r1, r2) = dirac_residual(&s, &PotentialSpec::SinePeriodic { b: 0.0 }).unwrap();
        assert!(r1.max(r2) > 1e-3);
    }

    #[test]
    fn zero_input_reconstructs_to_zero_and_ky_zero_is_rejected() {
        let g = Grid::new(0.0, 1.0, 32).unwrap();
        let z = vec![C64::new(0.0, 0.0); 32];
        let spec = PotentialSpec::SinePeriodic { b: 1.0 };
        assert!(reconstruct_plus(&z, &spec, 1.0, 0.4, &g).unwrap().iter().all(|v| v.norm() == 0.0));
        assert_eq!(reconstruct_plus(&z, &spec, 1.0, 0.0, &g), Err(Error::ZeroKy));
        let s = SpinorField::new(g, z.clone(), z, 0.0, 0.0).unwrap();
        assert_eq!(dirac_residual(&s, &spec), Err(Error::UndefinedResidual));
    }

    #[test]
    fn rosen_morse_spinor_satisfies_first_order_system() {
        let g = Grid::new(0.05, PI - 0.05, 4001).unwrap();
        let spec = PotentialSpec::RosenMorseCot { v0: 2.0 };
        let l = &rosen_morse_levels(2.0, 1.0, 1..=1).unwrap()[0];
        let minus = rosen_morse_wavefunction(l, &g).unwrap();
        let plus = reconstruct_plus(&minus, &spec, l.epsilon, 1.0, &g).unwrap();
        let s = SpinorField::from_pm_basis(g.clone(), &plus, &minus, 1.0, l.epsilon).unwrap();
        let (r1, r2) = dirac_residual(&s, &spec).unwrap();
        assert!(r1 < 1e-6 && r2 < 1e-6, "{r1} {r2}");
        let (f1, f2) = dirac_residual(&s.spin_flip(), &spec).unwrap();
        assert!((f1 - r2).abs() < 1e-12 && (f2 - r1).abs() < 1e-12);
    }

    #[test]
    fn spin_flip_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = Grid::new(0.0, 1.0, 40).unwrap();
        let s = SpinorField::new(g, random_field(&mut rng, 40), random_field(&mut rng, 40), 0.7, 0.1).unwrap();
        assert_eq!(s.spin_flip().spin_flip(), s);
    }

    #[test]
    fn ky_zero_examples() {
        // real constant potential: pure phase
        let g = Grid::new(0.1, 3.0, 501).unwrap();
        let flat = PotentialSpec::SinePeriodic { b: 0.0 };
        let s = ky_zero_solution(&flat, 0.8, KyZeroBranch::Symmetric, &g).unwrap();
        assert!(s.psi_a.iter().all(|v| (v.norm() - 1.0).abs() < 1e-12));

        let v0 = 1.5;
        let rm = PotentialSpec::RosenMorseCot { v0 };
        let g = Grid::new(0.01, PI - 0.01, 4001).unwrap();
        let s = ky_zero_solution(&rm, 0.0, KyZeroBranch::Symmetric, &g).unwrap();
        for j in 0..g.len() {
            assert!((s.psi_a[j] - g.x(j).sin().powf(v0)).norm() < 1e-8);
            assert_eq!(s.psi_b[j], s.psi_a[j]);
        }
        let (r1, r2) = dirac_residual(&s, &rm).unwrap();
        assert!(r1 < 1e-6 && r2 < 1e-6, "{r1} {r2}");
        // the antisymmetric branch grows like sin^{-V0}; keep away from the poles
        let inner = Grid::new(0.3, PI - 0.3, 4001).unwrap();
        let anti = ky_zero_solution(&rm, 0.3, KyZeroBranch::Antisymmetric, &inner).unwrap();
        let (r1, r2) = dirac_residual(&anti, &rm).unwrap();
        assert!(r1 < 1e-6 && r2 < 1e-6, "{r1} {r2}");
    }

    #[test]
    fn ky_zero_matches_parabola_zero_mode() {
        let mu = 1.0;
        let g = Grid::new(-4.0, 4.0, 4001).unwrap();
        let spec = PotentialSpec::ShiftedParabola { mu };
        let s = ky_zero_solution(&spec, 0.0, KyZeroBranch::Symmetric, &g).unwrap();
        let z = &zero_mode(&spec, &g).unwrap().modes[0].field;
        // the two differ by the constant phase of the antiderivative at the anchor
        let ratio = s.psi_a[g.nearest_index(0.0)] / z[g.nearest_index(0.0)];
        for j in 0..g.len() {
            assert!((s.psi_a[j] - ratio * z[j]).norm() < 1e-8 * z[j].norm().max(1e-300) + 1e-12);
        }
    }

    #[test]
    fn sine_zero_mode_spinor() {
        let g = Grid::periodic(0.0, PI, 1024).unwrap();
        let spec = PotentialSpec::SinePeriodic { b: 1.0 };
        let f = &zero_mode(&spec, &g).unwrap().modes[0].field;
        let s = SpinorField::new(g, f.clone(), f.clone(), 0.0, 0.0).unwrap();
        let (r1, r2) = dirac_residual(&s, &spec).unwrap();
        assert!(r1 < 1e-8 && r2 < 1e-8);
    }

    #[test]
    fn lorentz_transform_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = Grid::new(0.0, 1.0, 50).unwrap();
        let s = SpinorField::new(g, random_field(&mut rng, 50), random_field(&mut rng, 50), 0.0, 0.0).unwrap();
        let t = s.lorentz_transform();
        for j in 0..50 {
            let n0 = s.psi_a[j].norm_sqr() + s.psi_b[j].norm_sqr();
            let n1 = t.psi_a[j].norm_sqr() + t.psi_b[j].norm_sqr();
            assert!((n0 - n1).abs() < 1e-15);
        }
        let back = t.lorentz_transform_inverse();
        for j in 0..50 {
            assert!((back.psi_a[j] - s.psi_a[j]).norm() < 1e-15);
            assert!((back.psi_b[j] - s.psi_b[j]).norm() < 1e-15);
        }
    }

    #[test]
    fn transformed_free_solution_solves_lorentz_pair() {
        // H = σx p + σy ky with p = -i d/dx: plane wave (1, (p + i ky)/E) e^{ipx}
        let g = Grid::new(0.0, 6.0, 2001).unwrap();
        let (p, ky): (f64, f64) = (1.1, 0.6);
        let e = (p * p + ky * ky).sqrt();
        let f1 = g.sample(|x| C64::from_polar(1.0, p * x));
        let f2: Vec<C64> = f1.iter().map(|v| v * C64::new(p, ky) / e).collect();
        let t = SpinorField::new(g.clone(), f1, f2, ky, 0.0).unwrap().lorentz_transform();
        let minus: Vec<C64> = t.psi_a.iter().map(|v| -I * v).collect();
        let zero_w = PotentialSpec::LorentzScalar { case: LorentzCase::Morse, a: 0.0, b: 0.0, c: 0.0 };
        let (r1, r2) = lorentz_residual(&minus, &t.psi_b, &g, &zero_w, e, ky).unwrap();
        assert!(r1 < 1e-10 && r2 < 1e-10, "{r1} {r2}");
    }

    #[test]
    fn lorentz_ground_states() {
        let g = Grid::new(-12.0, 12.0, 4001).unwrap();
        let spec = PotentialSpec::LorentzScalar { case: LorentzCase::ScarfII, a: 3.0, b: 1.0, c: 0.0 };
        let minus = lorentz_ground_state(&spec, &g, 0.0).unwrap();
        let u = g.try_sample(|x| effective_potential(&spec, 0.0, 0.0, Branch::Minus, x)).unwrap();
        assert!(schrodinger_residual(&minus, &u, &g).unwrap() < 1e-6);
        // E = ky: psi_+ = (d + W) psi_- / 2ky vanishes
        let ky = 0.8;
        let plus = lorentz_partner(&minus, &spec, ky, ky, &g).unwrap();
        let (r1, r2) = lorentz_residual(&minus, &plus, &g, &spec, ky, ky).unwrap();
        assert!(r1 < 1e-6 && r2 < 1e-6);
        // psi_- = 0 and psi_+ = exp(∫W) with A < 0 so that it decays; needs E = -ky
        let neg = PotentialSpec::LorentzScalar { case: LorentzCase::ScarfII, a: -3.0, b: 1.0, c: 0.5 };
        let plus: Vec<C64> = lorentz_ground_state(&neg, &g, 0.0).unwrap().iter().map(|v| v.inv()).collect();
        let zero = vec![C64::new(0.0, 0.0); g.len()];
        let (r1, r2) = lorentz_residual(&zero, &plus, &g, &neg, -ky, ky).unwrap();
        assert!(r1 < 1e-8 && r2 < 1e-8, "{r1} {r2}");
        assert_eq!(lorentz_residual(&zero, &zero, &g, &spec, 1.0, 0.0), Err(Error::UndefinedResidual));
    }
}

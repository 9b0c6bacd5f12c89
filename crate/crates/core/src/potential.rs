//! Potential families, their energy-dependent effective potentials and the
//! closed-form levels and wavefunctions of each family.

use std::f64::consts::{FRAC_PI_2, PI};
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::numerics::grid::Grid;
use crate::specialfun::{arctan_by_integration, jacobi, phase_continuous_log_power};
use crate::{Error, Result, C64, I};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LorentzCase {
    ScarfI,
    ScarfII,
    Morse,
    PoschlTeller,
}

impl LorentzCase {
    pub const ALL: [LorentzCase; 4] = [Self::ScarfI, Self::ScarfII, Self::Morse, Self::PoschlTeller];
}

/// Which decoupled component: `Minus` is `psi_-` with `U_-`, `Plus` is `psi_+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Minus,
    Plus,
}

impl Branch {
    /// `-1` for `Minus`, `+1` for `Plus`: the sign in front of `i U'` (or `W'`).
    pub fn sign(self) -> f64 {
        match self {
            Branch::Minus => -1.0,
            Branch::Plus => 1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum PotentialSpec {
    /// `U = i V0 cot x` on `(0, π)`.
    RosenMorseCot { v0: f64 },
    /// `U = (x - iμ)²`.
    ShiftedParabola { mu: f64 },
    /// `U = -iμ tanh x + λ sech x`.
    TanhSech { mu: f64, lambda: f64 },
    /// `U = i b sin 2x`, period π.
    SinePeriodic { b: f64 },
    /// `U = -λ sech(x - iμ)`.
    ShiftedSech { lambda: f64, mu: f64 },
    /// Lorentz-scalar superpotential `W` with `β = B + iC`.
    LorentzScalar { case: LorentzCase, a: f64, b: f64, c: f64 },
}

/// Where a family lives.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Domain {
    /// Open interval with singular endpoints.
    Interval { lo: f64, hi: f64 },
    /// `(lo, ∞)` with a singular left endpoint.
    HalfLine { lo: f64 },
    WholeLine,
    /// Whole line, periodic with the given period.
    Periodic { period: f64 },
}

impl Domain {
    fn describe(&self) -> String {
        match self {
            Domain::Interval { lo, hi } => format!("({lo}, {hi})"),
            Domain::HalfLine { lo } => format!("({lo}, inf)"),
            Domain::WholeLine => "(-inf, inf)".into(),
            Domain::Periodic { period } => format!("(-inf, inf), period {period}"),
        }
    }
}

impl PotentialSpec {
    pub fn is_lorentz(&self) -> bool {
        matches!(self, PotentialSpec::LorentzScalar { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PotentialSpec::RosenMorseCot { .. } => "rosen-morse-cot",
            PotentialSpec::ShiftedParabola { .. } => "shifted-parabola",
            PotentialSpec::TanhSech { .. } => "tanh-sech",
            PotentialSpec::SinePeriodic { .. } => "sine-periodic",
            PotentialSpec::ShiftedSech { .. } => "shifted-sech",
            PotentialSpec::LorentzScalar { case, .. } => match case {
                LorentzCase::ScarfI => "lorentz-scarf-i",
                LorentzCase::ScarfII => "lorentz-scarf-ii",
                LorentzCase::Morse => "lorentz-morse",
                LorentzCase::PoschlTeller => "lorentz-poschl-teller",
            },
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            PotentialSpec::RosenMorseCot { .. } => Domain::Interval { lo: 0.0, hi: PI },
            PotentialSpec::SinePeriodic { .. } => Domain::Periodic { period: PI },
            PotentialSpec::LorentzScalar { case: LorentzCase::ScarfI, .. } => {
                Domain::Interval { lo: -FRAC_PI_2, hi: FRAC_PI_2 }
            }
            PotentialSpec::LorentzScalar { case: LorentzCase::PoschlTeller, .. } => Domain::HalfLine { lo: 0.0 },
            _ => Domain::WholeLine,
        }
    }

    /// Parameters must be finite; `V0 > 0` for the cotangent family.
    pub fn validate(&self) -> Result<()> {
        let params: &[f64] = match self {
            PotentialSpec::RosenMorseCot { v0 } => &[*v0],
            PotentialSpec::ShiftedParabola { mu } => &[*mu],
            PotentialSpec::TanhSech { mu, lambda } => &[*mu, *lambda],
            PotentialSpec::SinePeriodic { b } => &[*b],
            PotentialSpec::ShiftedSech { lambda, mu } => &[*lambda, *mu],
            PotentialSpec::LorentzScalar { a, b, c, .. } => &[*a, *b, *c],
        };
        if params.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidParameter(format!("{} has a non-finite parameter", self.name())));
        }
        if let PotentialSpec::RosenMorseCot { v0 } = self {
            if *v0 <= 0.0 {
                return Err(Error::InvalidParameter(format!("V0 must be positive, got {v0}")));
            }
        }
        Ok(())
    }

    fn check_domain(&self, x: f64) -> Result<()> {
        if !x.is_finite() {
            return Err(Error::Domain { x, domain: self.domain().describe() });
        }
        let (lo, hi) = match self.domain() {
            Domain::Interval { lo, hi } => (lo, hi),
            Domain::HalfLine { lo } => (lo, f64::INFINITY),
            Domain::WholeLine | Domain::Periodic { .. } => return Ok(()),
        };
        if x == lo || x == hi {
            return Err(Error::Pole { x });
        }
        if x < lo || x > hi {
            return Err(Error::Domain { x, domain: self.domain().describe() });
        }
        Ok(())
    }

    /// `(U, U')` for scalar families, `(W, W')` for Lorentz-scalar ones.
    pub fn value_and_derivative(&self, x: f64) -> Result<(C64, C64)> {
        self.validate()?;
        self.check_domain(x)?;
        let re = |v: f64| C64::new(v, 0.0);
        let (u, du) = match *self {
            PotentialSpec::RosenMorseCot { v0 } => {
                let (s, c) = x.sin_cos();
                (C64::new(0.0, v0 * c / s), C64::new(0.0, -v0 / (s * s)))
            }
            PotentialSpec::ShiftedParabola { mu } => {
                let z = C64::new(x, -mu);
                (z * z, 2.0 * z)
            }
            PotentialSpec::TanhSech { mu, lambda } => {
                let (t, s) = (x.tanh(), 1.0 / x.cosh());
                (C64::new(lambda * s, -mu * t), C64::new(-lambda * s * t, -mu * s * s))
            }
            PotentialSpec::SinePeriodic { b } => {
                let (s, c) = (2.0 * x).sin_cos();
                (C64::new(0.0, b * s), C64::new(0.0, 2.0 * b * c))
            }
            PotentialSpec::ShiftedSech { lambda, mu } => {
                let z = C64::new(x, -mu);
                let s = z.cosh().inv();
                let t = z.tanh();
                (-lambda * s, lambda * s * t)
            }
            PotentialSpec::LorentzScalar { case, a, b, c } => {
                let beta = C64::new(b, c);
                match case {
                    LorentzCase::ScarfI => {
                        let (sec, tan) = (1.0 / x.cos(), x.tan());
                        (re(a * tan) - beta * sec, re(a * sec * sec) - beta * sec * tan)
                    }
                    LorentzCase::ScarfII => {
                        let (sech, tanh) = (1.0 / x.cosh(), x.tanh());
                        (re(a * tanh) + beta * sech, re(a * sech * sech) - beta * sech * tanh)
                    }
                    LorentzCase::Morse => {
                        let e = (-x).exp();
                        (re(a) - beta * e, beta * e)
                    }
                    LorentzCase::PoschlTeller => {
                        let (csch, coth) = (1.0 / x.sinh(), 1.0 / x.tanh());
                        (re(a * coth) - beta * csch, re(-a * csch * csch) + beta * csch * coth)
                    }
                }
            }
        };
        if !(u.re.is_finite() && u.im.is_finite() && du.re.is_finite() && du.im.is_finite()) {
            return Err(Error::Pole { x });
        }
        Ok((u, du))
    }
}

/// `U(x)` for scalar families, `W(x)` for Lorentz-scalar families.
pub fn eval_potential(spec: &PotentialSpec, x: f64) -> Result<C64> {
    spec.value_and_derivative(x).map(|(u, _)| u)
}

/// `U∓ = -(U - eps)² ∓ i U' + ky²` for scalar families; `W² ∓ W'` for
/// Lorentz-scalar families, where `eps` and `ky` enter only through
/// `eps = E² - ky²` on the spectral side.
pub fn effective_potential(spec: &PotentialSpec, eps: f64, ky: f64, branch: Branch, x: f64) -> Result<C64> {
    let (u, du) = spec.value_and_derivative(x)?;
    let s = branch.sign();
    if spec.is_lorentz() {
        Ok(u * u + s * du)
    } else {
        let shifted = u - eps;
        Ok(-shifted * shifted + s * I * du + ky * ky)
    }
}

/// Auxiliary parameters attached to a closed-form level.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LevelAux {
    /// Cotangent family: `s = V0` and `|a| = eps V0 / (s + n)` (`a` itself is `i|a|`).
    RosenMorse { s: f64, a: f64 },
    /// Scarf II parameters `A` and `β` of the underlying superpotential.
    Scarf { a: f64, beta_re: f64, beta_im: f64 },
    /// Lorentz-scalar superpotential parameters.
    Lorentz { case: LorentzCase, a: f64 },
}

/// One closed-form eigenvalue.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyticLevel {
    pub n: usize,
    pub epsilon: f64,
    pub ky: f64,
    pub aux: LevelAux,
    pub degeneracy: usize,
}

/// `eps_n` of the cotangent family, positive root.
///
/// `eps_n² = (n² + 2 V0 n + ky²) / (1 - V0²/(V0+n)²)`, rewritten as
/// `(V0+n)² (1 + ky² / (n (2V0 + n)))` so that `ky = 0` gives `V0 + n` exactly.
pub fn rosen_morse_levels(v0: f64, ky: f64, n_range: RangeInclusive<usize>) -> Result<Vec<AnalyticLevel>> {
    PotentialSpec::RosenMorseCot { v0 }.validate()?;
    if !ky.is_finite() {
        return Err(Error::InvalidParameter(format!("ky must be finite, got {ky}")));
    }
    n_range
        .map(|n| {
            if n == 0 {
                return Err(Error::SingularLevel { n });
            }
            let nf = n as f64;
            let p = v0 + nf;
            let eps = p * (1.0 + ky * ky / (nf * (2.0 * v0 + nf))).sqrt();
            Ok(AnalyticLevel {
                n,
                epsilon: eps,
                ky,
                aux: LevelAux::RosenMorse { s: v0, a: eps * v0 / p },
                degeneracy: 1,
            })
        })
        .collect()
}

/// `psi_-` of a cotangent-family level on a grid inside `(0, π)`:
/// `(y² - 1)^{-p/2} e^{icx} P_n^{(c-p, -c-p)}(y)` with `y = i cot x`,
/// `p = s + n`, `c = eps V0 / p`. Unnormalized; the power is phase-continuous
/// from `x = π/2`.
pub fn rosen_morse_wavefunction(level: &AnalyticLevel, grid: &Grid) -> Result<Vec<C64>> {
    let LevelAux::RosenMorse { s, a: c } = level.aux else {
        return Err(Error::InvalidParameter("level does not belong to the cotangent family".into()));
    };
    if grid.x0 <= 0.0 || grid.x1 >= PI {
        return Err(Error::Domain { x: if grid.x0 <= 0.0 { grid.x0 } else { grid.x1 }, domain: "(0, π)".into() });
    }
    let p = s + level.n as f64;
    let ys = grid.sample(|x| C64::new(0.0, 1.0 / x.tan()));
    let base: Vec<C64> = ys.iter().map(|y| y * y - 1.0).collect();
    let power = phase_continuous_log_power(&base, C64::new(-p / 2.0, 0.0), grid.nearest_index(FRAC_PI_2))?;
    let (alpha, beta) = (C64::new(c - p, 0.0), C64::new(-c - p, 0.0));
    Ok((0..grid.len())
        .map(|j| power[j] * C64::from_polar(1.0, c * grid.x(j)) * jacobi(level.n, alpha, beta, ys[j]))
        .collect())
}

/// Scarf II window: `n = 0` for any `A > 0`, otherwise `n < ⌊A - 1⌋`.
pub fn scarf2_window_admits(a: f64, n: usize) -> bool {
    a > 0.0 && (n == 0 || (n as f64) < (a - 1.0).floor())
}

/// `E_n = A² - (A - n)²` on the Scarf II window.
pub fn scarf2_levels(a: f64, n_range: RangeInclusive<usize>) -> Result<Vec<AnalyticLevel>> {
    if !a.is_finite() {
        return Err(Error::InvalidParameter(format!("A must be finite, got {a}")));
    }
    n_range
        .map(|n| {
            if !scarf2_window_admits(a, n) {
                return Err(Error::LevelOutOfRange { n, window: format!("n = 0 or n < floor(A - 1) with A = {a}") });
            }
            let nf = n as f64;
            Ok(AnalyticLevel {
                n,
                epsilon: a * a - (a - nf) * (a - nf),
                ky: 0.0,
                aux: LevelAux::Scarf { a, beta_re: 0.0, beta_im: 0.0 },
                degeneracy: 1,
            })
        })
        .collect()
}

/// `W² - W'` for `W = A tanh z + β sech z`, `z = x - i shift`.
pub fn scarf_partner_potential(a: f64, beta: C64, shift: f64, x: f64) -> C64 {
    let z = C64::new(x, -shift);
    let sech = z.cosh().inv();
    let tanh = z.tanh();
    let w = a * tanh + beta * sech;
    let dw = a * sech * sech - beta * sech * tanh;
    w * w - dw
}

/// Eigenfunction `n` of `-d² + W² - W'` with `W = A tanh z + β sech z` and
/// `z = x - i shift`, eigenvalue `A² - (A - n)²`:
///
/// `i^n sech^A z · exp(-β arctan(sinh z)) · P_n^{(-iβ-A-1/2, iβ-A-1/2)}(i sinh z)`.
///
/// The arctangent is accumulated by quadrature of `sech z` from `x = 0`
/// (or the grid point closest to it), and `sech^A` is a phase-continuous power.
pub fn scarf_state(n: usize, a: f64, beta: C64, shift: f64, grid: &Grid) -> Result<Vec<C64>> {
    if !a.is_finite() || !shift.is_finite() || !(beta.re.is_finite() && beta.im.is_finite()) {
        return Err(Error::InvalidParameter("non-finite Scarf parameter".into()));
    }
    let anchor = grid.nearest_index(0.0);
    let z = |x: f64| C64::new(x, -shift);
    let cosh_sq: Vec<C64> = grid.sample(|x| {
        let c = z(x).cosh();
        c * c
    });
    let power = phase_continuous_log_power(&cosh_sq, C64::new(-a / 2.0, 0.0), anchor)?;
    let arctan = arctan_by_integration(|x| z(x).sinh(), |x| z(x).cosh(), grid, anchor)?;
    let alpha = -I * beta - a - 0.5;
    let beta_j = I * beta - a - 0.5;
    let phase = I.powu(n as u32);
    let out: Vec<C64> = (0..grid.len())
        .map(|j| {
            let y = I * z(grid.x(j)).sinh();
            phase * power[j] * (-beta * arctan[j]).exp() * jacobi(n, alpha, beta_j, y)
        })
        .collect();
    if out.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::Overflow("Scarf state overflowed on the grid".into()));
    }
    Ok(out)
}

/// Scarf II state with purely imaginary `β = iB`, real `B`.
pub fn scarf2_wavefunction(n: usize, a: f64, b: f64, grid: &Grid) -> Result<Vec<C64>> {
    scarf2_levels(a, n..=n)?;
    scarf_state(n, a, C64::new(0.0, b), 0.0, grid)
}

/// One analytic zero-energy solution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroMode {
    pub branch: Branch,
    pub ky: f64,
    /// Scarf level index for the sech-type families.
    pub n: Option<usize>,
    pub field: Vec<C64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroModes {
    pub modes: Vec<ZeroMode>,
    /// Degeneracy count as stated for the family (informational).
    pub degeneracy: usize,
    pub note: String,
}

/// Closed-form `eps = 0` solutions of the four zero-mode families.
pub fn zero_mode(spec: &PotentialSpec, grid: &Grid) -> Result<ZeroModes> {
    spec.validate()?;
    match *spec {
        PotentialSpec::ShiftedParabola { mu } => {
            let field = grid.sample(|x| {
                let phase = C64::new(x.powi(3) / 3.0 - mu * mu * x, -mu * x * x);
                (-I * phase).exp()
            });
            Ok(ZeroModes {
                modes: vec![ZeroMode { branch: Branch::Minus, ky: 0.0, n: None, field }],
                degeneracy: 1,
                note: "psi_+ is taken as the trivial solution; its closed form grows at infinity".into(),
            })
        }
        PotentialSpec::TanhSech { mu, lambda } => {
            if mu <= 0.0 {
                return Err(Error::InvalidParameter(format!("the tanh-sech zero mode needs mu > 0, got {mu}")));
            }
            let admissible = example2_ky_admissible(mu, mu.floor() as usize + 1)?;
            let modes = admissible
                .admitted
                .iter()
                .map(|&(n, ky)| {
                    Ok(ZeroMode {
                        branch: Branch::Minus,
                        ky,
                        n: Some(n),
                        field: scarf_state(n, mu, C64::new(0.0, lambda), 0.0, grid)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ZeroModes {
                degeneracy: modes.len(),
                modes,
                note: "psi_A = psi_B = psi_-".into(),
            })
        }
        PotentialSpec::SinePeriodic { b } => Ok(ZeroModes {
            modes: vec![
                ZeroMode { branch: Branch::Minus, ky: 0.0, n: None, field: grid.sample(|x| C64::new((-0.5 * b * (2.0 * x).cos()).exp(), 0.0)) },
                ZeroMode { branch: Branch::Plus, ky: 0.0, n: None, field: grid.sample(|x| C64::new((0.5 * b * (2.0 * x).cos()).exp(), 0.0)) },
            ],
            degeneracy: 1,
            note: "band-edge states of period pi at Bloch momentum 0".into(),
        }),
        PotentialSpec::ShiftedSech { lambda, mu } => {
            let a = lambda - 0.5;
            if a <= 0.0 {
                return Err(Error::InvalidParameter(format!("the shifted-sech zero modes need lambda > 1/2, got {lambda}")));
            }
            let mut modes = Vec::new();
            for n in (0..=a.ceil() as usize).filter(|&n| scarf2_window_admits(a, n)) {
                let k = (n as f64 - lambda + 0.5).abs();
                let field = scarf_state(n, a, C64::new(0.0, 0.5), mu, grid)?;
                modes.push(ZeroMode { branch: Branch::Plus, ky: k, n: Some(n), field: field.clone() });
                modes.push(ZeroMode { branch: Branch::Plus, ky: -k, n: Some(n), field });
            }
            Ok(ZeroModes {
                modes,
                degeneracy: (lambda - 1.5).floor().max(0.0) as usize,
                note: "ky quantized by ky^2 = (n - lambda + 1/2)^2; degeneracy count is informational".into(),
            })
        }
        _ => Err(Error::UnsupportedCase(spec.name().into())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rejection {
    NegativeKySquared,
    OutsideWindow,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KyAdmissibility {
    /// `(n, ky)` with `ky >= 0`.
    pub admitted: Vec<(usize, f64)>,
    /// `(n, ky², reason)`.
    pub rejected: Vec<(usize, f64, Rejection)>,
}

/// Enumerates `ky² = (μ - n)² - μ²` for `n = 0..=n_max` in the tanh-sech family.
pub fn example2_ky_admissible(mu: f64, n_max: usize) -> Result<KyAdmissibility> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(Error::InvalidParameter(format!("mu must be positive, got {mu}")));
    }
    let mut out = KyAdmissibility { admitted: Vec::new(), rejected: Vec::new() };
    for n in 0..=n_max {
        let nf = n as f64;
        let k2 = nf * (nf - 2.0 * mu);
        if !scarf2_window_admits(mu, n) {
            out.rejected.push((n, k2, Rejection::OutsideWindow));
        } else if k2 < 0.0 {
            out.rejected.push((n, k2, Rejection::NegativeKySquared));
        } else {
            out.admitted.push((n, k2.sqrt()));
        }
    }
    Ok(out)
}

/// `eps = E² - ky²` of the Lorentz-scalar families.
///
/// Scarf I: `(A + n)² - A²`, any `n`. Scarf II, Morse, Pöschl–Teller:
/// `A² - (A - n)²` for `0 <= n <= ⌊A⌋`.
pub fn lorentz_levels(case: LorentzCase, a: f64, n_range: RangeInclusive<usize>) -> Result<Vec<AnalyticLevel>> {
    if !a.is_finite() {
        return Err(Error::InvalidParameter(format!("A must be finite, got {a}")));
    }
    n_range
        .map(|n| {
            let nf = n as f64;
            let eps = match case {
                LorentzCase::ScarfI => (a + nf) * (a + nf) - a * a,
                _ => {
                    if a < 0.0 || nf > a.floor() {
                        return Err(Error::LevelOutOfRange { n, window: format!("0 <= n <= floor(A) with A = {a}") });
                    }
                    a * a - (a - nf) * (a - nf)
                }
            };
            Ok(AnalyticLevel { n, epsilon: eps, ky: 0.0, aux: LevelAux::Lorentz { case, a }, degeneracy: 1 })
        })
        .collect()
}

/// Dirac energies `E = ±sqrt(eps + ky²)`, positive first.
pub fn dirac_energies(epsilon: f64, ky: f64) -> [f64; 2] {
    let e = (epsilon + ky * ky).max(0.0).sqrt();
    [e, -e]
}

//! Per-case verification campaigns: closed forms against residuals and
//! independent eigenvalue oracles, collected in a serializable report.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::numerics::chebyshev::{schrodinger_spectrum, EndCondition};
use crate::numerics::hill::hill_band_eigenvalues;
use crate::numerics::residual::schrodinger_residual;
use crate::numerics::shoot::{find_real_eigenvalues, BoundaryCondition, ScanSettings};
use crate::potential::{
    dirac_energies, effective_potential, example2_ky_admissible, lorentz_levels, rosen_morse_levels,
    rosen_morse_wavefunction, scarf2_levels, scarf2_window_admits, scarf_state, zero_mode,
    AnalyticLevel, Branch, Domain, LorentzCase, PotentialSpec,
};
use crate::reduction::{
    dirac_residual, lorentz_ground_state, lorentz_partner, lorentz_residual, reconstruct_minus, reconstruct_plus,
    SpinorField,
};
use crate::{Error, Grid, Result, C64};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseId {
    RosenMorse,
    Example1,
    Example2,
    Example3,
    Example4,
    LorentzScarf1,
    LorentzScarf2,
    LorentzMorse,
    LorentzPoschlTeller,
}

impl CaseId {
    pub const ALL: [CaseId; 9] = [
        CaseId::RosenMorse,
        CaseId::Example1,
        CaseId::Example2,
        CaseId::Example3,
        CaseId::Example4,
        CaseId::LorentzScarf1,
        CaseId::LorentzScarf2,
        CaseId::LorentzMorse,
        CaseId::LorentzPoschlTeller,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::RosenMorse => "rosen-morse",
            CaseId::Example1 => "example1",
            CaseId::Example2 => "example2",
            CaseId::Example3 => "example3",
            CaseId::Example4 => "example4",
            CaseId::LorentzScarf1 => "lorentz-scarf1",
            CaseId::LorentzScarf2 => "lorentz-scarf2",
            CaseId::LorentzMorse => "lorentz-morse",
            CaseId::LorentzPoschlTeller => "lorentz-poschl-teller",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            CaseId::RosenMorse => "U = i V0 cot x on (0, pi): energy-dependent Rosen-Morse spectrum",
            CaseId::Example1 => "U = (x - i mu)^2: Gaussian-decaying zero mode",
            CaseId::Example2 => "U = -i mu tanh x + lambda sech x: Scarf II zero mode, ky = 0 only",
            CaseId::Example3 => "U = i b sin 2x: zero modes at band edges of period pi",
            CaseId::Example4 => "U = -lambda sech(x - i mu): zero modes with quantized ky",
            CaseId::LorentzScarf1 => "Lorentz scalar W = A tan x - (B + iC) sec x",
            CaseId::LorentzScarf2 => "Lorentz scalar W = A tanh x + (B + iC) sech x",
            CaseId::LorentzMorse => "Lorentz scalar W = A - (B + iC) exp(-x)",
            CaseId::LorentzPoschlTeller => "Lorentz scalar W = A coth x - (B + iC) csch x",
        }
    }

    pub fn lorentz_case(self) -> Option<LorentzCase> {
        match self {
            CaseId::LorentzScarf1 => Some(LorentzCase::ScarfI),
            CaseId::LorentzScarf2 => Some(LorentzCase::ScarfII),
            CaseId::LorentzMorse => Some(LorentzCase::Morse),
            CaseId::LorentzPoschlTeller => Some(LorentzCase::PoschlTeller),
            _ => None,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

/// Numeric parameters of a case. Fields a case does not use are ignored.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseParams {
    pub v0: f64,
    pub mu: f64,
    pub lambda: f64,
    pub b: f64,
    #[serde(rename = "A")]
    pub big_a: f64,
    #[serde(rename = "B")]
    pub big_b: f64,
    #[serde(rename = "C")]
    pub big_c: f64,
    pub ky: f64,
    pub nmax: usize,
}

impl CaseParams {
    pub fn defaults_for(case: CaseId) -> Self {
        let mut p = CaseParams {
            v0: 2.0,
            mu: 1.0,
            lambda: 1.0,
            b: 1.0,
            big_a: 3.0,
            big_b: 1.0,
            big_c: 0.0,
            ky: 0.0,
            nmax: 3,
        };
        match case {
            CaseId::RosenMorse => {
                p.ky = 1.0;
                p.nmax = 4;
            }
            CaseId::Example2 => p.mu = 3.0,
            CaseId::Example4 => {
                p.lambda = 2.0;
                p.mu = 0.0;
            }
            _ => {}
        }
        p
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.v0, self.mu, self.lambda, self.b, self.big_a, self.big_b, self.big_c, self.ky];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("case parameters must be finite".into()));
        }
        Ok(())
    }

    pub fn spec(&self, case: CaseId) -> PotentialSpec {
        match case {
            CaseId::RosenMorse => PotentialSpec::RosenMorseCot { v0: self.v0 },
            CaseId::Example1 => PotentialSpec::ShiftedParabola { mu: self.mu },
            CaseId::Example2 => PotentialSpec::TanhSech { mu: self.mu, lambda: self.lambda },
            CaseId::Example3 => PotentialSpec::SinePeriodic { b: self.b },
            CaseId::Example4 => PotentialSpec::ShiftedSech { lambda: self.lambda, mu: self.mu },
            _ => PotentialSpec::LorentzScalar {
                case: case.lorentz_case().expect("Lorentz case"),
                a: self.big_a,
                b: self.big_b,
                c: self.big_c,
            },
        }
    }
}

/// Pass/fail bounds; each may be overridden per run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    pub residual: f64,
    /// `|Δε| / max(1, |ε|)`.
    pub eigen_rel: f64,
    pub imag: f64,
    pub hill_zero: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { residual: 1e-6, eigen_rel: 1e-5, imag: 1e-8, hill_zero: 1e-8 }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("residual", self.residual), ("eigen_rel", self.eigen_rel), ("imag", self.imag), ("hill_zero", self.hill_zero)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!("tolerance {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

/// Grid overrides; `None` picks the per-case default.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSettings {
    pub x0: Option<f64>,
    pub x1: Option<f64>,
    pub points: Option<usize>,
    /// Chebyshev order of the dense oracle.
    pub oracle_points: Option<usize>,
    pub hill_modes: Option<usize>,
    /// Energy step of the shooting scan.
    pub scan_step: Option<f64>,
}

/// Which independent oracle produced `eps_oracle`, with its settings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OracleSettings {
    Shooting { grid: Grid, scan: ScanSettings, bc: BoundaryCondition },
    Chebyshev { a: f64, b: f64, order: usize, left: EndCondition, right: EndCondition },
    Hill { period: f64, modes: usize, bloch_k: f64 },
    None,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub n: usize,
    pub ky: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub branch: Option<Branch>,
    pub eps_analytic: f64,
    /// Dirac energy `+sqrt(eps + ky²)` for Lorentz-scalar cases.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub energy: Option<f64>,
    pub eps_oracle: Option<f64>,
    pub oracle_imag: Option<f64>,
    pub abs_delta: Option<f64>,
    pub rel_delta: Option<f64>,
    /// First-order residuals of the reconstructed spinor.
    pub residual1: Option<f64>,
    pub residual2: Option<f64>,
    /// Residual of the decoupled second-order equation.
    pub second_order_residual: Option<f64>,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalizability {
    Decaying,
    Growing,
    Oscillatory,
    FiniteDomain,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroModeRecord {
    pub branch: Branch,
    pub ky: f64,
    pub n: Option<usize>,
    pub classification: Normalizability,
    /// `max |psi| at the two ends / max |psi| over the central half`.
    pub boundary_ratio: f64,
    pub residual: f64,
    pub residual1: Option<f64>,
    pub residual2: Option<f64>,
    /// Excluded from the report's pass flag.
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    /// `None` for informational entries.
    pub bound: Option<f64>,
    pub pass: bool,
    /// Excluded from the report's pass flag.
    #[serde(default)]
    pub informational: bool,
}

impl Check {
    fn below(name: &str, value: f64, bound: f64) -> Self {
        Self { name: name.into(), value, bound: Some(bound), pass: value < bound, informational: false }
    }

    fn info(name: &str, value: f64) -> Self {
        Self { name: name.into(), value, bound: None, pass: true, informational: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub case: CaseId,
    pub params: CaseParams,
    pub tolerances: Tolerances,
    pub grid_settings: GridSettings,
    pub grid: Grid,
    pub oracle: OracleSettings,
    pub levels: Vec<LevelRecord>,
    pub zero_modes: Vec<ZeroModeRecord>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_s: Option<f64>,
}

impl VerificationReport {
    fn finish(mut self) -> Self {
        self.pass = self.levels.iter().all(|l| l.pass)
            && self.zero_modes.iter().all(|z| z.informational || z.residual < self.tolerances.residual)
            && self.checks.iter().all(|c| c.informational || c.pass);
        self
    }

    pub fn max_abs_delta(&self) -> Option<f64> {
        self.levels.iter().filter_map(|l| l.abs_delta).reduce(f64::max)
    }
}

/// Boundary behaviour of a sampled field.
///
/// Compares the larger end value of `|psi|` with the maximum over the central
/// half of the grid: decaying below `1e-8`, growing above `1e3`; otherwise
/// oscillatory when `|psi|` varies by less than 10% over each outer quarter,
/// and finite-domain in every remaining case (always on bounded domains).
pub fn classify_normalizability(psi: &[C64], grid: &Grid, domain: Domain) -> (Normalizability, f64) {
    let n = psi.len().min(grid.len());
    let abs: Vec<f64> = psi[..n].iter().map(|v| v.norm()).collect();
    let interior = abs[n / 4..n - n / 4].iter().copied().fold(0.0, f64::max);
    let boundary = abs[0].max(abs[n - 1]);
    let ratio = if interior > 0.0 { boundary / interior } else { f64::INFINITY };
    let class = if ratio < 1e-8 {
        Normalizability::Decaying
    } else if matches!(domain, Domain::Interval { .. }) {
        Normalizability::FiniteDomain
    } else if ratio > 1e3 {
        Normalizability::Growing
    } else {
        let flat = |s: &[f64]| {
            let hi = s.iter().copied().fold(0.0, f64::max);
            let lo = s.iter().copied().fold(f64::INFINITY, f64::min);
            hi > 0.0 && (hi - lo) / hi < 0.1
        };
        if flat(&abs[..n / 4]) && flat(&abs[n - n / 4..]) {
            Normalizability::Oscillatory
        } else {
            Normalizability::FiniteDomain
        }
    };
    (class, ratio)
}

/// Runs the full pipeline of one case.
pub fn verify_case(case: CaseId, params: &CaseParams, tol: &Tolerances, grid: &GridSettings) -> Result<VerificationReport> {
    params.validate()?;
    tol.validate()?;
    params.spec(case).validate()?;
    match case {
        CaseId::RosenMorse => verify_rosen_morse(params, tol, grid),
        CaseId::Example1 => verify_parabola(params, tol, grid),
        CaseId::Example2 => verify_tanh_sech(params, tol, grid),
        CaseId::Example3 => verify_sine(params, tol, grid),
        CaseId::Example4 => verify_shifted_sech(params, tol, grid),
        CaseId::LorentzScarf1 | CaseId::LorentzScarf2 | CaseId::LorentzMorse | CaseId::LorentzPoschlTeller => {
            verify_lorentz(case, params, tol, grid)
        }
    }
}

/// [`verify_case`] with `wall_time_s` filled in.
pub fn verify_case_timed(case: CaseId, params: &CaseParams, tol: &Tolerances, grid: &GridSettings) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut r = verify_case(case, params, tol, grid)?;
    r.wall_time_s = Some(start.elapsed().as_secs_f64());
    Ok(r)
}

/// Closed-form levels of the cases with a discrete spectrum: energies
/// `eps_n` for Rosen-Morse (`n = 1..=nmax`) and `eps = E² - ky²` for the
/// Lorentz-scalar families (`n = 0..=nmax`, capped at `⌊A⌋` where the
/// spectrum is finite). The remaining cases only have zero modes.
pub fn analytic_levels(case: CaseId, p: &CaseParams) -> Result<Vec<AnalyticLevel>> {
    p.validate()?;
    match case {
        CaseId::RosenMorse => rosen_morse_levels(p.v0, p.ky, 1..=p.nmax.max(1)),
        CaseId::LorentzScarf1 => lorentz_levels(LorentzCase::ScarfI, p.big_a, 0..=p.nmax),
        CaseId::LorentzScarf2 | CaseId::LorentzMorse | CaseId::LorentzPoschlTeller => {
            if p.big_a < 0.0 {
                return Err(Error::InvalidParameter(format!("A must be non-negative, got {}", p.big_a)));
            }
            let lcase = case.lorentz_case().expect("Lorentz case");
            let mut levels = lorentz_levels(lcase, p.big_a, 0..=p.nmax.min(p.big_a.floor() as usize))?;
            for l in &mut levels {
                l.ky = p.ky;
            }
            Ok(levels)
        }
        _ => Err(Error::UnsupportedCase(format!("{case} has only zero modes; no discrete spectrum in closed form"))),
    }
}

/// Runs independent cases in parallel; results keep the input order.
pub fn verify_many(
    runs: &[(CaseId, CaseParams)],
    tol: &Tolerances,
    grid: &GridSettings,
) -> Vec<Result<VerificationReport>> {
    use rayon::prelude::*;
    runs.par_iter().map(|(case, params)| verify_case(*case, params, tol, grid)).collect()
}

fn empty_report(case: CaseId, params: &CaseParams, tol: &Tolerances, gs: &GridSettings, grid: Grid) -> VerificationReport {
    VerificationReport {
        schema_version: SCHEMA_VERSION,
        case,
        params: params.clone(),
        tolerances: tol.clone(),
        grid_settings: gs.clone(),
        grid,
        oracle: OracleSettings::None,
        levels: Vec::new(),
        zero_modes: Vec::new(),
        checks: Vec::new(),
        notes: Vec::new(),
        pass: false,
        wall_time_s: None,
    }
}

fn resolve_grid(gs: &GridSettings, x0: f64, x1: f64, n: usize) -> Result<Grid> {
    Grid::new(gs.x0.unwrap_or(x0), gs.x1.unwrap_or(x1), gs.points.unwrap_or(n))
}

/// Half-width `L` with `κ L > 34`, at least 12.
fn decay_half_width(kappa: f64) -> f64 {
    if kappa > 0.0 {
        (34.0 / kappa * 1.05).max(12.0)
    } else {
        12.0
    }
}

fn relative_delta(delta: f64, reference: f64) -> f64 {
    delta / reference.abs().max(1.0)
}

fn nearest(values: &[C64], target: f64) -> Option<C64> {
    values.iter().copied().min_by(|a, b| (*a - target).norm().total_cmp(&(*b - target).norm()))
}

/// Residuals of a spinor and of its spin-flipped partner; returns
/// `(r1, r2, flip_mismatch)`.
fn spinor_residuals(s: &SpinorField, spec: &PotentialSpec) -> Result<(f64, f64, f64)> {
    let (r1, r2) = dirac_residual(s, spec)?;
    let (f1, f2) = dirac_residual(&s.spin_flip(), spec)?;
    Ok((r1, r2, (f1 - r2).abs().max((f2 - r1).abs())))
}

fn level_from_oracle(
    l: &AnalyticLevel,
    oracle: Option<C64>,
    tol: &Tolerances,
    check_imag: bool,
) -> LevelRecord {
    let (eps_oracle, imag, abs_delta, rel) = match oracle {
        Some(z) => {
            let d = (z.re - l.epsilon).abs();
            (Some(z.re), Some(z.im.abs()), Some(d), Some(relative_delta(d, l.epsilon)))
        }
        None => (None, None, None, None),
    };
    let pass = rel.is_some_and(|r| r < tol.eigen_rel) && (!check_imag || imag.is_some_and(|i| i < tol.imag));
    LevelRecord {
        n: l.n,
        ky: l.ky,
        branch: None,
        eps_analytic: l.epsilon,
        energy: None,
        eps_oracle,
        oracle_imag: if check_imag { imag } else { None },
        abs_delta,
        rel_delta: rel,
        residual1: None,
        residual2: None,
        second_order_residual: None,
        pass,
    }
}

fn apply_residuals(rec: &mut LevelRecord, second: f64, r1: f64, r2: f64, tol: &Tolerances) {
    rec.second_order_residual = Some(second);
    rec.residual1 = Some(r1);
    rec.residual2 = Some(r2);
    rec.pass = rec.pass && second < tol.residual && r1 < tol.residual && r2 < tol.residual;
}

const SPIN_FLIP_BOUND: f64 = 1e-12;

fn verify_rosen_morse(p: &CaseParams, tol: &Tolerances, gs: &GridSettings) -> Result<VerificationReport> {
    let spec = p.spec(CaseId::RosenMorse);
    let grid = resolve_grid(gs, 0.05, PI - 0.05, 4001)?;
    let mut report = empty_report(CaseId::RosenMorse, p, tol, gs, grid.clone());
    let levels = rosen_morse_levels(p.v0, p.ky, 1..=p.nmax.max(1))?;
    report.notes.push("n = 0 is excluded: the closed-form energy has a vanishing denominator there".into());

    let roots = if p.ky == 0.0 {
        report.notes.push(
            "ky = 0: every real eps admits the solution sin^V0(x) e^{i eps x}, so shooting has no isolated roots; oracle skipped"
                .into(),
        );
        None
    } else {
        let delta = 1e-3;
        let shoot_grid = Grid::new(delta, PI - delta, 2001)?;
        let lo = levels[0].epsilon - 0.5;
        let hi = levels[levels.len() - 1].epsilon + 0.5;
        let mut scan = ScanSettings::new(lo, hi);
        scan.step = gs.scan_step.unwrap_or((hi - lo) / 4000.0);
        let family = |x: f64, eps: f64| {
            effective_potential(&spec, eps, p.ky, Branch::Minus, x).unwrap_or(C64::new(f64::NAN, f64::NAN))
        };
        let curve = find_real_eigenvalues(&family, &scan, &shoot_grid, BoundaryCondition::Dirichlet)?;
        report.oracle = OracleSettings::Shooting { grid: shoot_grid, scan, bc: BoundaryCondition::Dirichlet };
        Some(curve.root_energies())
    };

    let mut flip = 0.0_f64;
    for l in &levels {
        let oracle = roots.as_ref().and_then(|r| {
            r.iter().copied().min_by(|a, b| (a - l.epsilon).abs().total_cmp(&(b - l.epsilon).abs())).map(|e| C64::new(e, 0.0))
        });
        let mut rec = level_from_oracle(l, oracle, tol, false);
        if p.ky == 0.0 {
            rec.pass = true;
        }
        let minus = rosen_morse_wavefunction(l, &grid)?;
        let ueff = grid.try_sample(|x| effective_potential(&spec, l.epsilon, p.ky, Branch::Minus, x))?;
        let second = schrodinger_residual(&minus, &ueff, &grid)?;
        if p.ky != 0.0 {
            let plus = reconstruct_plus(&minus, &spec, l.epsilon, p.ky, &grid)?;
            let s = SpinorField::from_pm_basis(grid.clone(), &plus, &minus, p.ky, l.epsilon)?;
            let (r1, r2, f) = spinor_residuals(&s, &spec)?;
            flip = flip.max(f);
            apply_residuals(&mut rec, second, r1, r2, tol);
        } else {
            rec.second_order_residual = Some(second);
            rec.pass = second < tol.residual;
        }
        report.levels.push(rec);
    }
    if p.ky != 0.0 {
        report.checks.push(Check::below("spin-flip residual invariance", flip, SPIN_FLIP_BOUND));
    }
    Ok(report.finish())
}

fn zero_mode_record(
    psi: &[C64],
    branch: Branch,
    ky: f64,
    n: Option<usize>,
    spec: &PotentialSpec,
    grid: &Grid,
    spinor: Option<&SpinorField>,
) -> Result<(ZeroModeRecord, f64)> {
    let ueff = grid.try_sample(|x| effective_potential(spec, 0.0, ky, branch, x))?;
    let residual = schrodinger_residual(psi, &ueff, grid)?;
    let (classification, boundary_ratio) = classify_normalizability(psi, grid, spec.domain());
    let (r1, r2, flip) = match spinor {
        Some(s) => {
            let (a, b, f) = spinor_residuals(s, spec)?;
            (Some(a), Some(b), f)
        }
        None => (None, None, 0.0),
    };
    Ok((
        ZeroModeRecord { branch, ky, n, classification, boundary_ratio, residual, residual1: r1, residual2: r2, informational: false },
        flip,
    ))
}

fn verify_parabola(p: &CaseParams, tol: &Tolerances, gs: &GridSettings) -> Result<VerificationReport> {
    let spec = p.spec(CaseId::Example1);
    let grid = resolve_grid(gs, -8.0, 8.0, 4001)?;
    let mut report = empty_report(CaseId::Example1, p, tol, gs, grid.clone());
    let zm = zero_mode(&spec, &grid)?;
    let minus = &zm.modes[0].field;
    let zero = vec![C64::new(0.0, 0.0); grid.len()];
    let s = SpinorField::from_pm_basis(grid.clone(), &zero, minus, 0.0, 0.0)?;
    let (rec, flip) = zero_mode_record(minus, Branch::Minus, 0.0, None, &spec, &grid, Some(&s))?;
    let decaying = rec.classification == Normalizability::Decaying;
    report.checks.push(Check::below("psi_- classified decaying", if decaying { 0.0 } else { 1.0 }, 0.5));
    report.checks.push(Check::below("spin-flip residual invariance", flip, SPIN_FLIP_BOUND));
    if let Some(r1) = rec.residual1 {
        report.checks.push(Check::below("first-order residual", r1.max(rec.residual2.unwrap_or(0.0)), tol.residual));
    }
    report.zero_modes.push(rec);

    // the discarded closed form of psi_+
    let mu = p.mu;
    let plus = grid.sample(|x| (crate::I * C64::new(x.powi(3) / 3.0 - mu * mu * x, -mu * x * x)).exp());
    let (mut rec, _) = zero_mode_record(&plus, Branch::Plus, 0.0, None, &spec, &grid, None)?;
    rec.informational = true;
    report.zero_modes.push(rec);
    report.notes.push(zm.note);
    Ok(report.finish())
}

fn verify_tanh_sech(p: &CaseParams, tol: &Tolerances, gs: &GridSettings) -> Result<VerificationReport> {
    let spec = p.spec(CaseId::Example2);
    let half = decay_half_width(p.mu);
    let grid = resolve_grid(gs, -half, half, 4001)?;
    let mut report = empty_report(CaseId::Example2, p, tol, gs, grid.clone());

    let n_scan = p.nmax.max(p.mu.floor() as usize + 1);
    let adm = example2_ky_admissible(p.mu, n_scan)?;
    let only_origin = adm.admitted == vec![(0, 0.0)];
    report.checks.push(Check::below("admissible (n, ky) set is {(0, 0)}", if only_origin { 0.0 } else { 1.0 }, 0.5));
    for (n, k2, why) in &adm.rejected {
        report.notes.push(format!("n = {n} rejected: ky^2 = {k2} ({why:?})"));
    }

    let zm = zero_mode(&spec, &grid)?;
    let mut flip = 0.0_f64;
    for m in &zm.modes {
        let s = SpinorField::new(grid.clone(), m.field.clone(), m.field.clone(), m.ky, 0.0)?;
        let (rec, f) = zero_mode_record(&m.field, m.branch, m.ky, m.n, &spec, &grid, Some(&s))?;
        flip = flip.max(f);
        report.checks.push(Check::below(
            "first-order residual",
            rec.residual1.unwrap_or(f64::NAN).max(rec.residual2.unwrap_or(f64::NAN)),
            tol.residual,
        ));
        report.zero_modes.push(rec);
    }
    report.checks.push(Check::below("spin-flip residual invariance", flip, SPIN_FLIP_BOUND));

    // the decoupled operator at ky = 0 is Scarf II; its window levels are -ky² candidates
    let (a, b, order) = (-20.0, 20.0, gs.oracle_points.unwrap_or(400));
    let spectrum = schrodinger_spectrum(
        |x| effective_potential(&spec, 0.0, 0.0, Branch::Minus, x),
        a,
        b,
        order,
        EndCondition::Neumann,
        EndCondition::Neumann,
    )?;
    report.oracle = OracleSettings::Chebyshev { a, b, order, left: EndCondition::Neumann, right: EndCondition::Neumann };
    let window: Vec<usize> = (0..=n_scan).filter(|&n| scarf2_window_admits(p.mu, n)).collect();
    for n in window {
        let l = &scarf2_levels(p.mu, n..=n)?[0];
        report.levels.push(level_from_oracle(l, nearest(&spectrum, l.epsilon), tol, true));
    }
    report.notes.push(zm.note);
    Ok(report.finish())
}

fn verify_sine(p: &CaseParams, tol: &Tolerances, gs: &GridSettings) -> Result<VerificationReport> {
    let spec = p.spec(CaseId::Example3);
    let grid = Grid::periodic(gs.x0.unwrap_or(0.0), gs.x1.unwrap_or(PI), gs.points.unwrap_or(1024))?;
    if ((grid.x1 - grid.x0) - PI).abs() > 1e-12 {
        return Err(Error::InvalidParameter("the periodic grid must span one period pi".into()));
    }
    let mut report = empty_report(CaseId::Example3, p, tol, gs, grid.clone());
    let modes = gs.hill_modes.unwrap_or(32);
    report.oracle = OracleSettings::Hill { period: PI, modes, bloch_k: 0.0 };

    let zm = zero_mode(&spec, &grid)?;
    let mut flip = 0.0_f64;
    for m in &zm.modes {
        let sign = if m.branch == Branch::Minus { 1.0 } else { -1.0 };
        let b: Vec<C64> = m.field.iter().map(|v| v * sign).collect();
        let s = SpinorField::new(grid.clone(), m.field.clone(), b, 0.0, 0.0)?;
        let (rec, f) = zero_mode_record(&m.field, m.branch, 0.0, None, &spec, &grid, Some(&s))?;
        flip = flip.max(f);
        // only psi_- alone gives a Dirac spinor (psi_+ = 0 there); the psi_+ spinor is checked with psi_- = 0
        let r = rec.residual1.unwrap_or(f64::NAN).max(rec.residual2.unwrap_or(f64::NAN));
        report.checks.push(Check::below(&format!("first-order residual ({:?})", m.branch).to_lowercase(), r, tol.residual));

        let hill = hill_band_eigenvalues(|x| effective_potential(&spec, 0.0, 0.0, m.branch, x).unwrap(), PI, modes, 0.0)?;
        let more = hill_band_eigenvalues(|x| effective_potential(&spec, 0.0, 0.0, m.branch, x).unwrap(), PI, modes + 8, 0.0)?;
        let z = hill.nearest_zero();
        if let Some(w) = &hill.truncation_warning {
            report.notes.push(w.clone());
        }
        let drift = hill
            .eigenvalues
            .iter()
            .take(8)
            .zip(more.eigenvalues.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        report.checks.push(Check::below(&format!("hill drift K -> K+8 ({:?})", m.branch).to_lowercase(), drift, 1e-9));
        report.levels.push(LevelRecord {
            n: 0,
            ky: 0.0,
            branch: Some(m.branch),
            eps_analytic: 0.0,
            energy: None,
            eps_oracle: Some(z.re),
            oracle_imag: Some(z.im.abs()),
            abs_delta: Some(z.norm()),
            rel_delta: Some(z.norm()),
            residual1: rec.residual1,
            residual2: rec.residual2,
            second_order_residual: Some(rec.residual),
            pass: z.norm() < tol.hill_zero && rec.residual < tol.residual,
        });
        report.zero_modes.push(rec);
    }
    report.checks.push(Check::below("spin-flip residual invariance", flip, SPIN_FLIP_BOUND));
    report.notes.push(zm.note);
    Ok(report.finish())
}

fn verify_shifted_sech(p: &CaseParams, tol: &Tolerances, gs: &GridSettings) -> Result<VerificationReport> {
    let spec = p.spec(CaseId::Example4);
    let zm_probe = zero_mode(&spec, &Grid::new(-1.0, 1.0, 16)?)?;
    let kappa = zm_probe.modes.iter().map(|m| m.ky.abs()).fold(f64::INFINITY, f64::min);
    let half = decay_half_width(kappa);
    let grid = resolve_grid(gs, -half, half, 6001)?;
    let mut report = empty_report(CaseId::Example4, p, tol, gs, grid.clone());
    let zm = zero_mode(&spec, &grid)?;

    let mut flip = 0.0_f64;
    for m in &zm.modes {
        let minus = reconstruct_minus(&m.field, &spec, 0.0, m.ky, &grid)?;
        let s = SpinorField::from_pm_basis(grid.clone(), &m.field, &minus, m.ky, 0.0)?;
        let (rec, f) = zero_mode_record(&m.field, m.branch, m.ky, m.n, &spec, &grid, Some(&s))?;
        flip = flip.max(f);
        report.checks.push(Check::below(
            &format!("first-order residual (ky = {})", m.ky),
            rec.residual1.unwrap_or(f64::NAN).max(rec.residual2.unwrap_or(f64::NAN)),
            tol.residual,
        ));
        report.zero_modes.push(rec);
    }
    report.checks.push(Check::below("spin-flip residual invariance", flip, SPIN_FLIP_BOUND));
    report.checks.push(Check::info("stated degeneracy floor(lambda - 3/2)", zm.degeneracy as f64));
    report.checks.push(Check::info("emitted (n, ky) states", zm.modes.len() as f64));

    // -d² + U_+ at ky = 0 has eigenvalues -ky² = -(A - n)²
    let (a, b, order) = (-20.0, 20.0, gs.oracle_points.unwrap_or(400));
    let spectrum = schrodinger_spectrum(
        |x| effective_potential(&spec, 0.0, 0.0, Branch::Plus, x),
        a,
        b,
        order,
        EndCondition::Dirichlet,
        EndCondition::Dirichlet,
    )?;
    report.oracle = OracleSettings::Chebyshev { a, b, order, left: EndCondition::Dirichlet, right: EndCondition::Dirichlet };
    let big_a = p.lambda - 0.5;
    let mut seen = Vec::new();
    for m in &zm.modes {
        let n = m.n.unwrap_or(0);
        if seen.contains(&n) {
            continue;
        }
        seen.push(n);
        let l = AnalyticLevel {
            n,
            epsilon: -(big_a - n as f64).powi(2),
            ky: m.ky.abs(),
            aux: crate::potential::LevelAux::Scarf { a: big_a, beta_re: 0.0, beta_im: 0.5 },
            degeneracy: 2,
        };
        report.levels.push(level_from_oracle(&l, nearest(&spectrum, l.epsilon), tol, true));
    }
    report.notes.push("eps_analytic here is -ky^2, the eigenvalue of -d^2 + U_+ at ky = 0".into());
    report.notes.push(zm.note);
    Ok(report.finish())
}

struct LorentzLayout {
    oracle: (f64, f64, EndCondition, EndCondition, usize),
    residual: (f64, f64),
    anchor: f64,
}

fn lorentz_layout(case: LorentzCase, beta: C64) -> LorentzLayout {
    match case {
        LorentzCase::ScarfI => LorentzLayout {
            oracle: (-FRAC_PI_2, FRAC_PI_2, EndCondition::Dirichlet, EndCondition::Dirichlet, 300),
            residual: (-FRAC_PI_2 + 0.05, FRAC_PI_2 - 0.05),
            anchor: 0.0,
        },
        LorentzCase::ScarfII => LorentzLayout {
            oracle: (-20.0, 20.0, EndCondition::Neumann, EndCondition::Neumann, 400),
            residual: (-12.0, 12.0),
            anchor: 0.0,
        },
        LorentzCase::Morse => {
            let left = -(60.0 / beta.norm().max(1e-300)).ln();
            LorentzLayout {
                oracle: (left, 30.0, EndCondition::Dirichlet, EndCondition::Neumann, 400),
                residual: (left.max(-4.0), 15.0),
                anchor: 0.0,
            }
        }
        LorentzCase::PoschlTeller => LorentzLayout {
            oracle: (0.0, 25.0, EndCondition::Dirichlet, EndCondition::Neumann, 400),
            residual: (0.5, 15.0),
            anchor: 1.0,
        },
    }
}

fn verify_lorentz(case: CaseId, p: &CaseParams, tol: &Tolerances, gs: &GridSettings) -> Result<VerificationReport> {
    let spec = p.spec(case);
    let lcase = case.lorentz_case().expect("Lorentz case");
    let beta = C64::new(p.big_b, p.big_c);
    let layout = lorentz_layout(lcase, beta);
    let grid = resolve_grid(gs, layout.residual.0, layout.residual.1, 4001)?;
    let mut report = empty_report(case, p, tol, gs, grid.clone());

    let levels = analytic_levels(case, p)?;

    let (a, b, left, right, default_order) = layout.oracle;
    let order = gs.oracle_points.unwrap_or(default_order);
    let spectrum = schrodinger_spectrum(
        |x| effective_potential(&spec, 0.0, 0.0, Branch::Minus, x),
        a,
        b,
        order,
        left,
        right,
    )?;
    report.oracle = OracleSettings::Chebyshev { a, b, order, left, right };

    let mut flip_notes = false;
    for l in &levels {
        let mut rec = level_from_oracle(l, nearest(&spectrum, l.epsilon), tol, true);
        rec.ky = p.ky;
        let energy = dirac_energies(l.epsilon, p.ky)[0];
        rec.energy = Some(energy);

        let minus = if l.n == 0 {
            Some(lorentz_ground_state(&spec, &grid, layout.anchor)?)
        } else if lcase == LorentzCase::ScarfII && (l.n as f64) < p.big_a {
            Some(scarf_state(l.n, p.big_a, beta, 0.0, &grid)?)
        } else {
            None
        };
        if let Some(minus) = minus {
            let ueff = grid.try_sample(|x| effective_potential(&spec, 0.0, 0.0, Branch::Minus, x))?;
            let shifted: Vec<C64> = ueff.iter().map(|u| u - l.epsilon).collect();
            let second = schrodinger_residual(&minus, &shifted, &grid)?;
            let plus = if l.epsilon == 0.0 || energy + p.ky == 0.0 {
                vec![C64::new(0.0, 0.0); grid.len()]
            } else {
                lorentz_partner(&minus, &spec, energy, p.ky, &grid)?
            };
            let (r1, r2) = lorentz_residual(&minus, &plus, &grid, &spec, energy, p.ky)?;
            apply_residuals(&mut rec, second, r1, r2, tol);
            if l.n == 0 {
                let (class, ratio) = classify_normalizability(&minus, &grid, spec.domain());
                report.zero_modes.push(ZeroModeRecord {
                    branch: Branch::Minus,
                    ky: p.ky,
                    n: Some(0),
                    classification: class,
                    boundary_ratio: ratio,
                    residual: second,
                    residual1: Some(r1),
                    residual2: Some(r2),
                    informational: true,
                });
            }
        } else if !flip_notes {
            report.notes.push("excited-state wavefunctions are only implemented for the Scarf II case; those levels are checked against the oracle alone".into());
            flip_notes = true;
        }
        report.levels.push(rec);
    }
    if lcase == LorentzCase::PoschlTeller {
        report.notes.push(
            "the closed form assumes Re(B) > A + 1/2; otherwise the ground state is singular at x = 0 and the oracle finds A^2 - (B + iC - 1/2 - n)^2"
                .into(),
        );
    }
    report.notes.push("eps = E^2 - ky^2; energy reports the positive root".into());
    Ok(report.finish())
}

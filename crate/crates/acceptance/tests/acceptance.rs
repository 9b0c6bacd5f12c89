//! Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned
//! below. Runs without the libtest harness so every line is always printed;
//! the process exits non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use complex_dirac::numerics::{
    dense_complex_eigenvalues, eigenpair_residual, find_real_eigenvalues, hill_band_eigenvalues,
    schrodinger_residual, BoundaryCondition, CMatrix, ScanSettings,
};
use complex_dirac::potential::{
    effective_potential, rosen_morse_levels, rosen_morse_wavefunction, scarf2_wavefunction, zero_mode, Domain,
};
use complex_dirac::reduction::{dirac_residual, ky_zero_solution, reconstruct_plus, KyZeroBranch};
use complex_dirac::specialfun::{jacobi_recurrence, jacobi_series};
use complex_dirac::verify::{classify_normalizability, Normalizability};
use complex_dirac::{
    verify_case, Branch, CaseId, CaseParams, Grid, GridSettings, PotentialSpec, SpinorField, Tolerances, C64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RM_IDENTITY_TOL: f64 = 1e-12;
const RM_ORACLE_REL: f64 = 1e-5;
const RESIDUAL_TOL: f64 = 1e-6;
const ZERO_MODE_RESIDUAL_TOL: f64 = 1e-8;
const DECAY_RATIO: f64 = 1e-20;
const HILL_ZERO_TOL: f64 = 1e-8;
const LORENTZ_REL: f64 = 1e-5;
const LORENTZ_IMAG: f64 = 1e-8;
const SPIN_FLIP_TOL: f64 = 1e-12;
const ROUND_TRIP_TOL: f64 = 1e-15;
const MODULUS_TOL: f64 = 1e-12;
const HO_TOL: f64 = 1e-6;
const BACKWARD_ERROR: f64 = 1e-10;
const JACOBI_TOL: f64 = 1e-10;

type Outcome = Result<String, String>;
type Criterion = Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn ensure(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn rosen_morse_identity() -> Outcome {
    let mut worst = 0.0_f64;
    for v0 in [0.5, 1.0, 2.0, 3.5] {
        let levels = rosen_morse_levels(v0, 0.0, 1..=8).map_err(|e| e.to_string())?;
        for l in levels {
            worst = worst.max((l.epsilon - (v0 + l.n as f64)).abs());
        }
    }
    ensure(worst < RM_IDENTITY_TOL, format!("max |eps_n - (V0 + n)| = {worst:.2e} (bound {RM_IDENTITY_TOL:.0e})"))
}

fn rosen_morse_oracle() -> Outcome {
    let case = CaseId::RosenMorse;
    let r = verify_case(case, &CaseParams::defaults_for(case), &Tolerances::default(), &GridSettings::default())
        .map_err(|e| e.to_string())?;
    if r.levels.len() != 4 {
        return Err(format!("expected 4 levels, got {}", r.levels.len()));
    }
    let worst = r.levels.iter().map(|l| l.rel_delta.unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
    // ε₁² = 10.8 follows from squaring the closed form at V0 = 2, ky = 1
    let e1 = r.levels[0].eps_oracle.unwrap_or(f64::NAN);
    let ok = worst < RM_ORACLE_REL && (e1 * e1 - 10.8).abs() < 10.8 * RM_ORACLE_REL * 2.0;
    ensure(ok, format!("n=1..4 max rel |Δε| = {worst:.2e}, shooting ε1 = {e1:.7} (ε1² = {:.6})", e1 * e1))
}

fn wavefunction_residuals() -> Outcome {
    let spec = PotentialSpec::RosenMorseCot { v0: 2.0 };
    let grid = Grid::new(0.05, PI - 0.05, 4001).map_err(|e| e.to_string())?;
    let mut worst_second = 0.0_f64;
    let mut worst_first = 0.0_f64;
    for l in rosen_morse_levels(2.0, 1.0, 1..=2).map_err(|e| e.to_string())? {
        let minus = rosen_morse_wavefunction(&l, &grid).map_err(|e| e.to_string())?;
        let u = grid
            .try_sample(|x| effective_potential(&spec, l.epsilon, 1.0, Branch::Minus, x))
            .map_err(|e| e.to_string())?;
        worst_second = worst_second.max(schrodinger_residual(&minus, &u, &grid).map_err(|e| e.to_string())?);
        let plus = reconstruct_plus(&minus, &spec, l.epsilon, 1.0, &grid).map_err(|e| e.to_string())?;
        let s = SpinorField::from_pm_basis(grid.clone(), &plus, &minus, 1.0, l.epsilon).map_err(|e| e.to_string())?;
        let (r1, r2) = dirac_residual(&s, &spec).map_err(|e| e.to_string())?;
        worst_first = worst_first.max(r1).max(r2);
    }

    // the A = 3, B = 1 ground state is the zero mode of U = -3i tanh x + sech x
    let spec = PotentialSpec::TanhSech { mu: 3.0, lambda: 1.0 };
    let grid = Grid::new(-12.0, 12.0, 4001).map_err(|e| e.to_string())?;
    let psi = scarf2_wavefunction(0, 3.0, 1.0, &grid).map_err(|e| e.to_string())?;
    let u = grid.try_sample(|x| effective_potential(&spec, 0.0, 0.0, Branch::Minus, x)).map_err(|e| e.to_string())?;
    worst_second = worst_second.max(schrodinger_residual(&psi, &u, &grid).map_err(|e| e.to_string())?);
    let s = SpinorField::new(grid, psi.clone(), psi, 0.0, 0.0).map_err(|e| e.to_string())?;
    let (r1, r2) = dirac_residual(&s, &spec).map_err(|e| e.to_string())?;
    worst_first = worst_first.max(r1).max(r2);

    ensure(
        worst_second < RESIDUAL_TOL && worst_first < RESIDUAL_TOL,
        format!("Schrödinger residual {worst_second:.2e}, Dirac residual {worst_first:.2e} (bound {RESIDUAL_TOL:.0e})"),
    )
}

fn zero_modes() -> Outcome {
    // parabola
    let spec = PotentialSpec::ShiftedParabola { mu: 1.0 };
    let grid = Grid::new(-8.0, 8.0, 4001).map_err(|e| e.to_string())?;
    let zm = zero_mode(&spec, &grid).map_err(|e| e.to_string())?;
    let psi = &zm.modes[0].field;
    let u = grid.try_sample(|x| effective_potential(&spec, 0.0, 0.0, Branch::Minus, x)).map_err(|e| e.to_string())?;
    let res1 = schrodinger_residual(psi, &u, &grid).map_err(|e| e.to_string())?;
    let class = classify_normalizability(psi, &grid, Domain::WholeLine).0;
    let mid = psi[grid.nearest_index(0.0)].norm();
    let ratio = psi[0].norm().max(psi[grid.len() - 1].norm()) / mid;
    let ok1 = zm.modes.len() == 1 && res1 < ZERO_MODE_RESIDUAL_TOL && class == Normalizability::Decaying && ratio < DECAY_RATIO;

    // tanh-sech
    let case = CaseId::Example2;
    let mut p = CaseParams::defaults_for(case);
    p.mu = 3.0;
    p.lambda = 1.0;
    let r = verify_case(case, &p, &Tolerances::default(), &GridSettings::default()).map_err(|e| e.to_string())?;
    let set: Vec<(usize, f64)> = r.zero_modes.iter().map(|z| (z.n.unwrap_or(usize::MAX), z.ky.abs())).collect();
    let res2 = r.zero_modes.iter().map(|z| z.residual).fold(0.0, f64::max);
    let ok2 = set == vec![(0, 0.0)] && res2 < RESIDUAL_TOL && r.checks.iter().any(|c| c.name.starts_with("admissible") && c.pass);

    // shifted sech
    let spec = PotentialSpec::ShiftedSech { lambda: 2.0, mu: 0.0 };
    let grid = Grid::new(-24.0, 24.0, 2001).map_err(|e| e.to_string())?;
    let mut kys: Vec<f64> = zero_mode(&spec, &grid).map_err(|e| e.to_string())?.modes.iter().map(|m| m.ky).collect();
    kys.sort_by(f64::total_cmp);
    let ok3 = kys.len() == 2 && (kys[0] + 1.5).abs() < 1e-14 && (kys[1] - 1.5).abs() < 1e-14;

    ensure(
        ok1 && ok2 && ok3,
        format!(
            "parabola residual {res1:.2e}, {class:?}, |ψ(±8)|/|ψ(0)| = {ratio:.1e}; tanh-sech modes {set:?} residual {res2:.2e}; shifted-sech ky = {kys:?}"
        ),
    )
}

fn band_edges() -> Outcome {
    let grid = Grid::periodic(0.0, PI, 1024).map_err(|e| e.to_string())?;
    let mut worst_hill = 0.0_f64;
    let mut worst_res = 0.0_f64;
    let mut worst_pointwise = 0.0_f64;
    for b in [0.5, 1.0] {
        let spec = PotentialSpec::SinePeriodic { b };
        for (branch, s) in [(Branch::Minus, -1.0), (Branch::Plus, 1.0)] {
            let hill = hill_band_eigenvalues(|x| effective_potential(&spec, 0.0, 0.0, branch, x).unwrap(), PI, 32, 0.0)
                .map_err(|e| e.to_string())?;
            worst_hill = worst_hill.max(hill.nearest_zero().norm());

            // ψ = exp(g), g = s (b/2) cos 2x, so ψ''/ψ = g'' + g'² exactly
            let psi = grid.sample(|x| c((s * 0.5 * b * (2.0 * x).cos()).exp(), 0.0));
            let u = grid.try_sample(|x| effective_potential(&spec, 0.0, 0.0, branch, x)).map_err(|e| e.to_string())?;
            worst_res = worst_res.max(schrodinger_residual(&psi, &u, &grid).map_err(|e| e.to_string())?);
            for (j, uj) in u.iter().enumerate() {
                let x = grid.x(j);
                let g1 = -s * b * (2.0 * x).sin();
                let g2 = -2.0 * s * b * (2.0 * x).cos();
                worst_pointwise = worst_pointwise.max((g2 + g1 * g1 - uj).norm());
            }
        }
    }
    ensure(
        worst_hill < HILL_ZERO_TOL && worst_res < ZERO_MODE_RESIDUAL_TOL && worst_pointwise < 1e-12,
        format!(
            "max nearest-zero Hill |λ| = {worst_hill:.2e}, grid residual {worst_res:.2e}, exact substitution {worst_pointwise:.2e}"
        ),
    )
}

fn lorentz_realness() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for case in [CaseId::LorentzScarf1, CaseId::LorentzScarf2, CaseId::LorentzMorse, CaseId::LorentzPoschlTeller] {
        for cc in [0.0, 0.5] {
            let mut p = CaseParams::defaults_for(case);
            p.big_a = 3.0;
            p.big_b = 1.0;
            p.big_c = cc;
            let r = verify_case(case, &p, &Tolerances::default(), &GridSettings::default()).map_err(|e| e.to_string())?;
            let rel = r.levels.iter().map(|l| l.rel_delta.unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
            let im = r.levels.iter().map(|l| l.oracle_imag.unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
            let good = rel < LORENTZ_REL && im < LORENTZ_IMAG;
            ok &= good;
            lines.push(format!("{case} C={cc}: rel {rel:.1e} im {im:.1e}{}", if good { "" } else { " <- fails" }));
        }
    }
    ensure(ok, lines.join("; "))
}

/// Outside the criterion: case (d) in the regime where its ground state is regular.
fn lorentz_poschl_teller_regular_regime() -> String {
    let case = CaseId::LorentzPoschlTeller;
    let mut p = CaseParams::defaults_for(case);
    p.big_b = 5.0;
    match verify_case(case, &p, &Tolerances::default(), &GridSettings::default()) {
        Ok(r) => {
            let rel = r.levels.iter().map(|l| l.rel_delta.unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
            let im = r.levels.iter().map(|l| l.oracle_imag.unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
            let eps: Vec<String> = r.levels.iter().map(|l| format!("{:.6}", l.eps_oracle.unwrap_or(f64::NAN))).collect();
            format!("A=3 B=5 C=0: oracle {{{}}}, max rel {rel:.1e}, |Im| {im:.1e}", eps.join(", "))
        }
        Err(e) => format!("error: {e}"),
    }
}

fn symmetry_suite(rng: &mut ChaCha8Rng) -> Outcome {
    let mut flip = 0.0_f64;
    for case in [CaseId::RosenMorse, CaseId::Example1, CaseId::Example2, CaseId::Example3, CaseId::Example4] {
        let r = verify_case(case, &CaseParams::defaults_for(case), &Tolerances::default(), &GridSettings::default())
            .map_err(|e| e.to_string())?;
        let check = r.checks.iter().find(|c| c.name == "spin-flip residual invariance").ok_or(format!("{case}: no spin-flip check"))?;
        flip = flip.max(check.value);
    }

    let grid = Grid::new(-1.0, 1.0, 257).map_err(|e| e.to_string())?;
    let mut trip = 0.0_f64;
    for _ in 0..20 {
        let plus: Vec<C64> = (0..grid.len()).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        let minus: Vec<C64> = (0..grid.len()).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
        let s = SpinorField::from_pm_basis(grid.clone(), &plus, &minus, 0.7, 1.1).map_err(|e| e.to_string())?;
        let (p2, m2) = s.to_pm_basis();
        for j in 0..grid.len() {
            trip = trip.max((p2[j] - plus[j]).norm()).max((m2[j] - minus[j]).norm());
        }
    }

    let mut modulus = 0.0_f64;
    let grid = Grid::new(-6.0, 6.0, 2001).map_err(|e| e.to_string())?;
    for spec in [PotentialSpec::ShiftedSech { lambda: 2.0, mu: 0.0 }, PotentialSpec::ShiftedParabola { mu: 0.0 }] {
        for branch in [KyZeroBranch::Symmetric, KyZeroBranch::Antisymmetric] {
            let s = ky_zero_solution(&spec, 1.3, branch, &grid).map_err(|e| e.to_string())?;
            let m0 = s.psi_a[0].norm();
            for (a, b) in s.psi_a.iter().zip(&s.psi_b) {
                modulus = modulus.max((a.norm() - m0).abs()).max((b.norm() - m0).abs());
            }
        }
    }

    ensure(
        flip < SPIN_FLIP_TOL && trip < ROUND_TRIP_TOL && modulus < MODULUS_TOL,
        format!("spin-flip {flip:.1e}, pm round trip {trip:.1e}, real-U modulus drift {modulus:.1e}"),
    )
}

fn infrastructure_oracles(rng: &mut ChaCha8Rng) -> Outcome {
    let harmonic = |x: f64, eps: f64| c(x * x - eps, 0.0);
    let grid = Grid::new(-8.0, 8.0, 2001).map_err(|e| e.to_string())?;
    let roots = find_real_eigenvalues(&harmonic, &ScanSettings::new(0.0, 8.0), &grid, BoundaryCondition::Decaying)
        .map_err(|e| e.to_string())?
        .root_energies();
    let ho = if roots.len() == 4 {
        roots.iter().zip([1.0, 3.0, 5.0, 7.0]).map(|(r, e)| (r - e).abs()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };

    let mut backward = 0.0_f64;
    for _ in 0..100 {
        let n = rng.random_range(2..=40);
        let a = CMatrix::from_fn(n, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let eig = dense_complex_eigenvalues(&a).map_err(|e| e.to_string())?;
        if eig.len() != n {
            return Err(format!("eigensolver returned {} of {n} eigenvalues", eig.len()));
        }
        for l in eig {
            backward = backward.max(eigenpair_residual(&a, l).0 / a.frobenius_norm());
        }
    }

    let mut jac = 0.0_f64;
    let mut used = 0;
    while used < 200 {
        let n = rng.random_range(0..=12);
        let alpha = c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let beta = c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let y = c(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        let Some(rec) = jacobi_recurrence(n, alpha, beta, y) else { continue };
        let series = jacobi_series(n, alpha, beta, y);
        jac = jac.max((rec - series).norm() / series.norm().max(1.0));
        used += 1;
    }

    ensure(
        ho < HO_TOL && backward <= BACKWARD_ERROR && jac < JACOBI_TOL,
        format!(
            "oscillator roots {roots:.6?} (max err {ho:.1e}); eigensolver backward error {backward:.1e}·‖A‖; Jacobi recurrence vs series {jac:.1e}"
        ),
    )
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d12a);
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 rosen-morse identity", Box::new(|_| rosen_morse_identity())),
        ("2 rosen-morse shooting oracle", Box::new(|_| rosen_morse_oracle())),
        ("3 wavefunction residuals", Box::new(|_| wavefunction_residuals())),
        ("4 zero modes", Box::new(|_| zero_modes())),
        ("5 band edges", Box::new(|_| band_edges())),
        ("6 lorentz-scalar realness", Box::new(|_| lorentz_realness())),
        ("7 symmetry suite", Box::new(symmetry_suite)),
        ("8 infrastructure oracles", Box::new(infrastructure_oracles)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = run(&mut rng);
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS  {name} [{secs:.1}s]: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name} [{secs:.1}s]: {msg}");
            }
        }
    }
    println!("INFO  6 (d) regular regime: {}", lorentz_poschl_teller_regular_regime());
    println!("{} of 8 criteria failed", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

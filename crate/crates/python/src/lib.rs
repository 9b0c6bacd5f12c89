//! Python bindings: potentials, grids, spinors, closed-form levels and
//! verification reports.

use std::collections::HashMap;

use ::complex_dirac as core;
use core::numerics::hill_band_eigenvalues;
use core::potential::{effective_potential, eval_potential, zero_mode};
use core::reduction::dirac_residual;
use core::verify::classify_normalizability;
use core::{Branch, CaseId, CaseParams, GridSettings, LorentzCase, PotentialSpec, Tolerances, C64};
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: core::Error) -> PyErr {
    if e.is_numerical() {
        PyArithmeticError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn parse_branch(s: &str) -> PyResult<Branch> {
    match s {
        "minus" | "-" => Ok(Branch::Minus),
        "plus" | "+" => Ok(Branch::Plus),
        _ => Err(PyValueError::new_err(format!("branch must be 'minus' or 'plus', got '{s}'"))),
    }
}

fn parse_case(s: &str) -> PyResult<CaseId> {
    s.parse().map_err(to_py)
}

fn json_to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Uniform grid on `[x0, x1]`; periodic grids exclude the right end.
#[pyclass(name = "Grid", module = "complex_dirac", frozen)]
struct PyGrid(core::Grid);

#[pymethods]
impl PyGrid {
    #[new]
    #[pyo3(signature = (x0, x1, n, periodic = false))]
    fn new(x0: f64, x1: f64, n: usize, periodic: bool) -> PyResult<Self> {
        let g = if periodic { core::Grid::periodic(x0, x1, n) } else { core::Grid::new(x0, x1, n) };
        g.map(PyGrid).map_err(to_py)
    }

    fn points(&self) -> Vec<f64> {
        self.0.points()
    }

    #[getter]
    fn h(&self) -> f64 {
        self.0.h()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Grid({}, {}, {}, periodic={})", self.0.x0, self.0.x1, self.0.n, self.0.periodic)
    }
}

/// A potential of the catalog.
#[pyclass(name = "Potential", module = "complex_dirac", frozen)]
struct PyPotential(PotentialSpec);

fn checked(spec: PotentialSpec) -> PyResult<PyPotential> {
    spec.validate().map_err(to_py)?;
    Ok(PyPotential(spec))
}

#[pymethods]
impl PyPotential {
    #[staticmethod]
    fn rosen_morse(v0: f64) -> PyResult<Self> {
        checked(PotentialSpec::RosenMorseCot { v0 })
    }

    #[staticmethod]
    fn shifted_parabola(mu: f64) -> PyResult<Self> {
        checked(PotentialSpec::ShiftedParabola { mu })
    }

    #[staticmethod]
    #[pyo3(signature = (mu, lambda_))]
    fn tanh_sech(mu: f64, lambda_: f64) -> PyResult<Self> {
        checked(PotentialSpec::TanhSech { mu, lambda: lambda_ })
    }

    #[staticmethod]
    fn sine_periodic(b: f64) -> PyResult<Self> {
        checked(PotentialSpec::SinePeriodic { b })
    }

    #[staticmethod]
    #[pyo3(signature = (lambda_, mu))]
    fn shifted_sech(lambda_: f64, mu: f64) -> PyResult<Self> {
        checked(PotentialSpec::ShiftedSech { lambda: lambda_, mu })
    }

    /// Lorentz-scalar superpotential; `case` is one of `scarf1`, `scarf2`,
    /// `morse`, `poschl-teller`.
    #[staticmethod]
    #[pyo3(signature = (case, a, b, c = 0.0))]
    fn lorentz(case: &str, a: f64, b: f64, c: f64) -> PyResult<Self> {
        let case = match case {
            "scarf1" => LorentzCase::ScarfI,
            "scarf2" => LorentzCase::ScarfII,
            "morse" => LorentzCase::Morse,
            "poschl-teller" => LorentzCase::PoschlTeller,
            _ => return Err(PyValueError::new_err(format!("unknown Lorentz case '{case}'"))),
        };
        checked(PotentialSpec::LorentzScalar { case, a, b, c })
    }

    #[getter]
    fn name(&self) -> &'static str {
        self.0.name()
    }

    fn __call__(&self, x: f64) -> PyResult<C64> {
        eval_potential(&self.0, x).map_err(to_py)
    }

    /// `U∓` of the decoupled equation `-psi'' + U∓ psi = 0`.
    fn effective(&self, eps: f64, ky: f64, branch: &str, x: f64) -> PyResult<C64> {
        effective_potential(&self.0, eps, ky, parse_branch(branch)?, x).map_err(to_py)
    }

    /// Closed-form zero modes as dicts with `branch`, `ky`, `n`, `field`.
    fn zero_modes<'py>(&self, py: Python<'py>, grid: PyRef<'_, PyGrid>) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let zm = zero_mode(&self.0, &grid.0).map_err(to_py)?;
        zm.modes
            .into_iter()
            .map(|m| {
                let d = PyDict::new(py);
                d.set_item("branch", if m.branch == Branch::Minus { "minus" } else { "plus" })?;
                d.set_item("ky", m.ky)?;
                d.set_item("n", m.n)?;
                d.set_item("field", m.field)?;
                Ok(d)
            })
            .collect()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("Potential({})", serde_json::to_string(&self.0).unwrap_or_default())
    }
}

/// Two-component field `(psi_A, psi_B)` sampled on a grid.
#[pyclass(name = "SpinorField", module = "complex_dirac", frozen)]
struct PySpinor(core::SpinorField);

#[pymethods]
impl PySpinor {
    #[new]
    fn new(grid: PyRef<'_, PyGrid>, psi_a: Vec<C64>, psi_b: Vec<C64>, ky: f64, eps: f64) -> PyResult<Self> {
        core::SpinorField::new(grid.0.clone(), psi_a, psi_b, ky, eps).map(PySpinor).map_err(to_py)
    }

    #[staticmethod]
    fn from_pm_basis(grid: PyRef<'_, PyGrid>, plus: Vec<C64>, minus: Vec<C64>, ky: f64, eps: f64) -> PyResult<Self> {
        core::SpinorField::from_pm_basis(grid.0.clone(), &plus, &minus, ky, eps).map(PySpinor).map_err(to_py)
    }

    /// `(psi_plus, psi_minus)`.
    fn to_pm_basis(&self) -> (Vec<C64>, Vec<C64>) {
        self.0.to_pm_basis()
    }

    fn spin_flip(&self) -> Self {
        PySpinor(self.0.spin_flip())
    }

    #[getter]
    fn psi_a(&self) -> Vec<C64> {
        self.0.psi_a.clone()
    }

    #[getter]
    fn psi_b(&self) -> Vec<C64> {
        self.0.psi_b.clone()
    }

    #[getter]
    fn ky(&self) -> f64 {
        self.0.ky
    }

    #[getter]
    fn eps(&self) -> f64 {
        self.0.eps
    }

    /// Normalized residuals of the two first-order Dirac equations.
    fn dirac_residual(&self, potential: PyRef<'_, PyPotential>) -> PyResult<(f64, f64)> {
        dirac_residual(&self.0, &potential.0).map_err(to_py)
    }
}

/// Result of a verification campaign.
#[pyclass(name = "VerificationReport", module = "complex_dirac", frozen)]
struct PyReport(core::VerificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn case(&self) -> &'static str {
        self.0.case.as_str()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.pass
    }

    #[getter]
    fn levels<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.0.levels)
    }

    #[getter]
    fn zero_modes<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.0.zero_modes)
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.0.notes.clone()
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.0)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string_pretty(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("VerificationReport(case='{}', passed={}, levels={})", self.0.case, if self.0.pass { "True" } else { "False" }, self.0.levels.len())
    }
}

fn case_params(case: CaseId, overrides: Option<HashMap<String, f64>>) -> PyResult<CaseParams> {
    let mut p = CaseParams::defaults_for(case);
    for (k, v) in overrides.unwrap_or_default() {
        match k.as_str() {
            "v0" => p.v0 = v,
            "mu" => p.mu = v,
            "lambda" => p.lambda = v,
            "b" => p.b = v,
            "A" => p.big_a = v,
            "B" => p.big_b = v,
            "C" => p.big_c = v,
            "ky" => p.ky = v,
            "nmax" => {
                if v < 0.0 || v.fract() != 0.0 {
                    return Err(PyValueError::new_err(format!("nmax must be a non-negative integer, got {v}")));
                }
                p.nmax = v as usize
            }
            _ => return Err(PyValueError::new_err(format!("unknown parameter '{k}'"))),
        }
    }
    Ok(p)
}

fn tolerances(overrides: Option<HashMap<String, f64>>) -> PyResult<Tolerances> {
    let mut t = Tolerances::default();
    for (k, v) in overrides.unwrap_or_default() {
        match k.as_str() {
            "residual" => t.residual = v,
            "eigen_rel" => t.eigen_rel = v,
            "imag" => t.imag = v,
            "hill_zero" => t.hill_zero = v,
            _ => return Err(PyValueError::new_err(format!("unknown tolerance '{k}'"))),
        }
    }
    Ok(t)
}

/// Registered case ids.
#[pyfunction]
fn list_cases() -> Vec<&'static str> {
    CaseId::ALL.iter().map(|c| c.as_str()).collect()
}

/// Default parameters of a case.
#[pyfunction]
fn case_defaults<'py>(py: Python<'py>, case: &str) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &CaseParams::defaults_for(parse_case(case)?))
}

/// Closed-form levels `[(n, eps), ...]` of a case with a discrete spectrum.
#[pyfunction]
#[pyo3(signature = (case, params = None))]
fn analytic_levels(case: &str, params: Option<HashMap<String, f64>>) -> PyResult<Vec<(usize, f64)>> {
    let case = parse_case(case)?;
    let p = case_params(case, params)?;
    Ok(core::analytic_levels(case, &p).map_err(to_py)?.into_iter().map(|l| (l.n, l.epsilon)).collect())
}

/// Runs a case's verification pipeline; `params` and `tolerances` override defaults.
#[pyfunction]
#[pyo3(signature = (case, params = None, tolerances = None, points = None))]
fn verify_case(
    py: Python<'_>,
    case: &str,
    params: Option<HashMap<String, f64>>,
    tolerances: Option<HashMap<String, f64>>,
    points: Option<usize>,
) -> PyResult<PyReport> {
    let case = parse_case(case)?;
    let p = case_params(case, params)?;
    let t = self::tolerances(tolerances)?;
    let g = GridSettings { points, ..GridSettings::default() };
    py.detach(|| core::verify_case(case, &p, &t, &g)).map(PyReport).map_err(to_py)
}

/// Hill-matrix eigenvalues of `U∓` for `U = i b sin 2x`, sorted by real part.
#[pyfunction]
#[pyo3(signature = (b, modes = 32, bloch_k = 0.0, branch = "minus"))]
fn band_eigenvalues(b: f64, modes: usize, bloch_k: f64, branch: &str) -> PyResult<Vec<C64>> {
    let spec = PotentialSpec::SinePeriodic { b };
    let branch = parse_branch(branch)?;
    let s = hill_band_eigenvalues(
        |x| effective_potential(&spec, 0.0, 0.0, branch, x).expect("sine potential is entire"),
        std::f64::consts::PI,
        modes,
        bloch_k,
    )
    .map_err(to_py)?;
    Ok(s.eigenvalues)
}

/// `P_n^{(alpha, beta)}(y)` for complex parameters.
#[pyfunction]
fn jacobi(n: usize, alpha: C64, beta: C64, y: C64) -> C64 {
    core::specialfun::jacobi(n, alpha, beta, y)
}

/// One of `decaying`, `growing`, `oscillatory`, `finite-domain`.
#[pyfunction]
#[pyo3(signature = (psi, grid, bounded = false))]
fn classify(psi: Vec<C64>, grid: PyRef<'_, PyGrid>, bounded: bool) -> PyResult<String> {
    if psi.len() != grid.0.len() {
        return Err(PyValueError::new_err(format!("field has {} samples, grid has {}", psi.len(), grid.0.len())));
    }
    let domain = if bounded {
        core::potential::Domain::Interval { lo: grid.0.x0, hi: grid.0.x1 }
    } else {
        core::potential::Domain::WholeLine
    };
    let (class, _) = classify_normalizability(&psi, &grid.0, domain);
    Ok(serde_json::to_value(class).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())
}

#[pymodule(name = "complex_dirac")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGrid>()?;
    m.add_class::<PyPotential>()?;
    m.add_class::<PySpinor>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(list_cases, m)?)?;
    m.add_function(wrap_pyfunction!(case_defaults, m)?)?;
    m.add_function(wrap_pyfunction!(analytic_levels, m)?)?;
    m.add_function(wrap_pyfunction!(verify_case, m)?)?;
    m.add_function(wrap_pyfunction!(band_eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    Ok(())
}

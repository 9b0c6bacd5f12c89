//! `complex-dirac`: closed-form spectra, zero modes and band edges of the
//! massless Dirac equation with complex potentials, plus verification runs
//! that check them against independent numerics.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 configuration error,
//! 3 numerical failure.

mod config;
mod output;

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Args, CommandFactory, Parser, Subcommand};
use complex_dirac::numerics::hill_band_eigenvalues;
use complex_dirac::potential::effective_potential;
use complex_dirac::verify::{verify_case_timed, verify_many};
use complex_dirac::{analytic_levels, CaseId, CaseParams, GridSettings, PotentialSpec, Tolerances};

use config::{BandBranch, BandSettings, BranchChoice, Command, Document, Format, RunConfig, DOCUMENT_VERSION};

const EXIT_FAIL: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "complex-dirac", version, about = "Dirac equation with complex potentials: spectra, zero modes, verification")]
#[command(after_help = "Exit codes: 0 pass, 1 verification failure, 2 configuration error, 3 numerical failure.\n\
                        Set REPORT_DIR to choose where report files are written.")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Closed-form levels; with --verify, the full verification report.
    Spectrum {
        #[command(flatten)]
        case: CaseArgs,
        /// Run the oracles and residual checks.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Zero modes with residuals, normalizability and admissible ky.
    ZeroModes {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Hill-matrix spectrum of the periodic case U = i b sin 2x.
    Bands {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        b: f64,
        /// Fourier cutoff K (modes -K..=K).
        #[arg(long, default_value_t = 32)]
        modes: usize,
        /// Bloch momentum; 0 gives the band edges of period pi.
        #[arg(long = "bloch-k", default_value_t = 0.0, allow_negative_numbers = true)]
        bloch_k: f64,
        #[arg(long, value_enum, default_value_t = BranchChoice::Both)]
        branch: BranchChoice,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify every registered case with its default parameters.
    VerifyAll {
        #[command(flatten)]
        tol: TolArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the case registry with per-case default parameters.
    ListCases,
    /// Execute a run configuration file.
    Run {
        /// JSON file holding a run configuration.
        config: PathBuf,
    },
    /// Re-run the configuration embedded in a report and compare.
    Replay {
        /// JSON report written by an earlier run.
        report: PathBuf,
    },
}

#[derive(Args, Debug)]
struct CaseArgs {
    #[arg(long, value_parser = PossibleValuesParser::new(CaseId::ALL.map(|c| c.as_str())))]
    case: String,
    /// [default: per case, see list-cases]
    #[arg(long, allow_negative_numbers = true)]
    v0: Option<f64>,
    /// [default: per case, see list-cases]
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// [default: per case, see list-cases]
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// [default: per case, see list-cases]
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Lorentz-scalar A [default: 3]
    #[arg(long = "A", allow_negative_numbers = true)]
    big_a: Option<f64>,
    /// Lorentz-scalar Re(beta) [default: 1]
    #[arg(long = "B", allow_negative_numbers = true)]
    big_b: Option<f64>,
    /// Lorentz-scalar Im(beta) [default: 0]
    #[arg(long = "C", allow_negative_numbers = true)]
    big_c: Option<f64>,
    /// [default: per case, see list-cases]
    #[arg(long, allow_negative_numbers = true)]
    ky: Option<f64>,
    /// Highest level index [default: per case, see list-cases]
    #[arg(long)]
    nmax: Option<usize>,
    /// Left end of the residual grid [default: per case]
    #[arg(long, allow_negative_numbers = true)]
    x0: Option<f64>,
    /// Right end of the residual grid [default: per case]
    #[arg(long, allow_negative_numbers = true)]
    x1: Option<f64>,
    /// Residual grid points [default: per case]
    #[arg(long = "N")]
    points: Option<usize>,
    /// Chebyshev order of the dense oracle [default: per case]
    #[arg(long)]
    oracle_points: Option<usize>,
    /// Hill cutoff K for the periodic case [default: 32]
    #[arg(long)]
    hill_modes: Option<usize>,
    /// Energy step of the shooting scan [default: window/4000]
    #[arg(long)]
    scan_step: Option<f64>,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Args, Debug)]
struct TolArgs {
    #[arg(long, default_value_t = 1e-6)]
    tol_residual: f64,
    /// Relative eigenvalue tolerance |Δε| / max(1, |ε|).
    #[arg(long, default_value_t = 1e-5)]
    tol_eigen: f64,
    #[arg(long, default_value_t = 1e-8)]
    tol_imag: f64,
    #[arg(long, default_value_t = 1e-8)]
    tol_hill: f64,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; relative paths resolve against REPORT_DIR when set [default: stdout]
    #[arg(long)]
    output: Option<PathBuf>,
}

impl TolArgs {
    fn tolerances(&self) -> Tolerances {
        Tolerances { residual: self.tol_residual, eigen_rel: self.tol_eigen, imag: self.tol_imag, hill_zero: self.tol_hill }
    }
}

impl CaseArgs {
    fn case_id(&self) -> CaseId {
        self.case.parse().expect("restricted by the value parser")
    }

    fn params(&self) -> CaseParams {
        let mut p = CaseParams::defaults_for(self.case_id());
        let set = |slot: &mut f64, v: Option<f64>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut p.v0, self.v0);
        set(&mut p.mu, self.mu);
        set(&mut p.lambda, self.lambda);
        set(&mut p.b, self.b);
        set(&mut p.big_a, self.big_a);
        set(&mut p.big_b, self.big_b);
        set(&mut p.big_c, self.big_c);
        set(&mut p.ky, self.ky);
        if let Some(n) = self.nmax {
            p.nmax = n;
        }
        p
    }

    fn grid(&self) -> GridSettings {
        GridSettings {
            x0: self.x0,
            x1: self.x1,
            points: self.points,
            oracle_points: self.oracle_points,
            hill_modes: self.hill_modes,
            scan_step: self.scan_step,
        }
    }

    fn config(&self, command: Command, verify: bool, out: &OutputArgs) -> RunConfig {
        RunConfig {
            command,
            case: Some(self.case_id()),
            params: Some(self.params()),
            grid: self.grid(),
            tolerances: self.tol.tolerances(),
            verify,
            bands: None,
            format: out.format,
            output: out.output.clone(),
        }
    }
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Config(String),
    Numeric(String),
}

impl From<complex_dirac::Error> for Failure {
    fn from(e: complex_dirac::Error) -> Self {
        if e.is_numerical() {
            Failure::Numeric(e.to_string())
        } else {
            Failure::Config(e.to_string())
        }
    }
}

fn execute(cfg: &RunConfig) -> Result<Document, Failure> {
    cfg.validate().map_err(Failure::Config)?;
    let mut doc = Document {
        schema_version: DOCUMENT_VERSION,
        config: cfg.clone(),
        pass: true,
        levels: None,
        report: None,
        reports: None,
        bands: None,
    };
    match cfg.command {
        Command::Spectrum | Command::ZeroModes => {
            let case = cfg.case.expect("validated");
            let params = cfg.params.as_ref().expect("validated");
            if cfg.command == Command::ZeroModes
                && !matches!(case, CaseId::Example1 | CaseId::Example2 | CaseId::Example3 | CaseId::Example4)
            {
                return Err(Failure::Config(format!("{case} has no closed-form zero-mode catalog; use spectrum")));
            }
            if cfg.command == Command::Spectrum && !cfg.verify {
                doc.levels = Some(analytic_levels(case, params)?);
            } else {
                let report = verify_case_timed(case, params, &cfg.tolerances, &cfg.grid)?;
                doc.pass = report.pass;
                doc.report = Some(report);
            }
        }
        Command::Bands => {
            let bs = cfg.bands.as_ref().expect("validated");
            let spec = PotentialSpec::SinePeriodic { b: bs.b };
            let mut out = Vec::new();
            for branch in bs.branch.branches() {
                let spectrum = hill_band_eigenvalues(
                    |x| effective_potential(&spec, 0.0, 0.0, branch, x).expect("sine potential is entire"),
                    PI,
                    bs.modes,
                    bs.bloch_k,
                )?;
                out.push(BandBranch { branch, spectrum });
            }
            doc.bands = Some(out);
        }
        Command::VerifyAll => {
            let runs: Vec<_> = CaseId::ALL.iter().map(|&c| (c, CaseParams::defaults_for(c))).collect();
            let mut reports = Vec::new();
            for r in verify_many(&runs, &cfg.tolerances, &cfg.grid) {
                reports.push(r?);
            }
            doc.pass = reports.iter().all(|r| r.pass);
            doc.reports = Some(reports);
        }
    }
    Ok(doc)
}

fn run_and_emit(cfg: &RunConfig) -> ExitCode {
    let doc = match execute(cfg) {
        Ok(d) => d,
        Err(f) => return report_failure(f),
    };
    if let Err(e) = output::emit(&doc) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_CONFIG);
    }
    output::summarize(&doc);
    if doc.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn report_failure(f: Failure) -> ExitCode {
    match f {
        Failure::Config(m) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_CONFIG)
        }
        Failure::Numeric(m) => {
            eprintln!("numerical failure: {m}");
            ExitCode::from(EXIT_NUMERIC)
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn list_cases() {
    for case in CaseId::ALL {
        let p = CaseParams::defaults_for(case);
        let defaults = match case {
            CaseId::RosenMorse => format!("v0={} ky={} nmax={}", p.v0, p.ky, p.nmax),
            CaseId::Example1 => format!("mu={}", p.mu),
            CaseId::Example2 => format!("mu={} lambda={}", p.mu, p.lambda),
            CaseId::Example3 => format!("b={}", p.b),
            CaseId::Example4 => format!("lambda={} mu={}", p.lambda, p.mu),
            _ => format!("A={} B={} C={} ky={} nmax={}", p.big_a, p.big_b, p.big_c, p.ky, p.nmax),
        };
        println!("{:<22} {}\n{:<22} defaults: {}", case.as_str(), case.description(), "", defaults);
    }
}

fn main() -> ExitCode {
    if std::env::args_os().len() <= 1 {
        Cli::command().print_help().ok();
        println!();
        return ExitCode::SUCCESS;
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Cmd::Spectrum { case, verify, out } => run_and_emit(&case.config(Command::Spectrum, verify, &out)),
        Cmd::ZeroModes { case, out } => run_and_emit(&case.config(Command::ZeroModes, true, &out)),
        Cmd::Bands { b, modes, bloch_k, branch, out } => run_and_emit(&RunConfig {
            command: Command::Bands,
            case: None,
            params: None,
            grid: GridSettings::default(),
            tolerances: Tolerances::default(),
            verify: false,
            bands: Some(BandSettings { b, modes, bloch_k, branch }),
            format: out.format,
            output: out.output,
        }),
        Cmd::VerifyAll { tol, out } => run_and_emit(&RunConfig {
            command: Command::VerifyAll,
            case: None,
            params: None,
            grid: GridSettings::default(),
            tolerances: tol.tolerances(),
            verify: true,
            bands: None,
            format: out.format,
            output: out.output,
        }),
        Cmd::ListCases => {
            list_cases();
            ExitCode::SUCCESS
        }
        Cmd::Run { config } => match read_json::<RunConfig>(&config) {
            Ok(cfg) => run_and_emit(&cfg),
            Err(f) => report_failure(f),
        },
        Cmd::Replay { report } => {
            let old: Document = match read_json(&report) {
                Ok(d) => d,
                Err(f) => return report_failure(f),
            };
            let new = match execute(&old.config) {
                Ok(d) => d,
                Err(f) => return report_failure(f),
            };
            if new.without_timing() == old.without_timing() {
                eprintln!("replay: identical to {}", report.display());
                ExitCode::SUCCESS
            } else {
                eprintln!("replay: results differ from {}", report.display());
                ExitCode::from(EXIT_FAIL)
            }
        }
    }
}

use std::path::PathBuf;

use complex_dirac::numerics::HillSpectrum;
use complex_dirac::{AnalyticLevel, Branch, CaseId, CaseParams, GridSettings, Tolerances, VerificationReport};
use serde::{Deserialize, Serialize};

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Spectrum,
    ZeroModes,
    Bands,
    VerifyAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum BranchChoice {
    Minus,
    Plus,
    Both,
}

impl BranchChoice {
    pub fn branches(self) -> Vec<Branch> {
        match self {
            BranchChoice::Minus => vec![Branch::Minus],
            BranchChoice::Plus => vec![Branch::Plus],
            BranchChoice::Both => vec![Branch::Minus, Branch::Plus],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandSettings {
    pub b: f64,
    pub modes: usize,
    pub bloch_k: f64,
    pub branch: BranchChoice,
}

/// Everything needed to reproduce a run; echoed into every JSON document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<CaseParams>,
    #[serde(default)]
    pub grid: GridSettings,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default)]
    pub verify: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bands: Option<BandSettings>,
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        self.tolerances.validate().map_err(|e| e.to_string())?;
        match self.command {
            Command::Spectrum | Command::ZeroModes => {
                if self.case.is_none() {
                    return Err("--case is required".into());
                }
                let p = self.params.as_ref().ok_or("case parameters are missing")?;
                p.validate().map_err(|e| e.to_string())?;
            }
            Command::Bands => {
                let b = self.bands.as_ref().ok_or("band settings are missing")?;
                if !(b.b.is_finite() && b.bloch_k.is_finite()) {
                    return Err("band parameters must be finite".into());
                }
            }
            Command::VerifyAll => {}
        }
        for v in [self.grid.x0, self.grid.x1, self.grid.scan_step].into_iter().flatten() {
            if !v.is_finite() {
                return Err("grid overrides must be finite".into());
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BandBranch {
    pub branch: Branch,
    pub spectrum: HillSpectrum,
}

/// The file a run writes: config echo plus whichever results the command produced.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub schema_version: u32,
    pub config: RunConfig,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<AnalyticLevel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<VerificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reports: Option<Vec<VerificationReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bands: Option<Vec<BandBranch>>,
}

impl Document {
    /// Copy with wall times cleared, for replay comparison.
    pub fn without_timing(&self) -> Self {
        let mut d = self.clone();
        if let Some(r) = d.report.as_mut() {
            r.wall_time_s = None;
        }
        for r in d.reports.iter_mut().flatten() {
            r.wall_time_s = None;
        }
        d
    }
}

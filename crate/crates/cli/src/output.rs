use std::io::Write;
use std::path::PathBuf;

use complex_dirac::CaseId;

use crate::config::{Command, Document, Format};

pub const CSV_HEADER: [&str; 9] =
    ["case", "n", "ky", "eps_analytic", "eps_oracle", "abs_delta", "residual1", "residual2", "pass"];

/// Output target: `--output` (relative to REPORT_DIR when set), else a
/// generated name inside REPORT_DIR, else stdout.
fn target(doc: &Document) -> Option<PathBuf> {
    let dir = std::env::var_os("REPORT_DIR").map(PathBuf::from);
    let cfg = &doc.config;
    match (&cfg.output, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p.clone()),
        (None, Some(d)) => {
            let stem = match (cfg.command, cfg.case) {
                (Command::Spectrum, Some(c)) => format!("{c}-spectrum"),
                (Command::ZeroModes, Some(c)) => format!("{c}-zero-modes"),
                (Command::Bands, _) => "bands".to_string(),
                _ => "verify-all".to_string(),
            };
            let ext = match cfg.format {
                Format::Json => "json",
                Format::Csv => "csv",
            };
            Some(d.join(format!("{stem}.{ext}")))
        }
        (None, None) => None,
    }
}

pub fn emit(doc: &Document) -> Result<(), String> {
    let bytes = match doc.config.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).map_err(|e| e.to_string())?;
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => csv_bytes(doc).map_err(|e| e.to_string())?,
    };
    match target(doc) {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).map_err(|e| format!("{}: {e}", parent.display()))?;
            }
            std::fs::write(&path, bytes).map_err(|e| format!("{}: {e}", path.display()))?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => std::io::stdout().write_all(&bytes).map_err(|e| e.to_string()),
    }
}

fn num(x: f64) -> String {
    if x != 0.0 && (x.abs() < 1e-4 || x.abs() >= 1e15) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

fn opt(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn csv_bytes(doc: &Document) -> csv::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(bands) = &doc.bands {
        w.write_record(["branch", "index", "re", "im"])?;
        for b in bands {
            let name = format!("{:?}", b.branch).to_lowercase();
            for (i, z) in b.spectrum.eigenvalues.iter().enumerate() {
                w.write_record([name.clone(), i.to_string(), num(z.re), num(z.im)])?;
            }
        }
        return w.into_inner().map_err(|e| e.into_error().into());
    }
    w.write_record(CSV_HEADER)?;
    if let (Some(levels), Some(case)) = (&doc.levels, doc.config.case) {
        for l in levels {
            let row = [case.as_str().to_string(), l.n.to_string(), num(l.ky), num(l.epsilon)];
            w.write_record(row.into_iter().chain(std::iter::repeat_n(String::new(), 4)).chain(["true".to_string()]))?;
        }
    }
    let reports: Vec<_> = doc.report.iter().chain(doc.reports.iter().flatten()).collect();
    for r in reports {
        write_report_rows(&mut w, r.case, r, doc.config.command == Command::ZeroModes)?;
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

fn write_report_rows(
    w: &mut csv::Writer<Vec<u8>>,
    case: CaseId,
    r: &complex_dirac::VerificationReport,
    with_zero_modes: bool,
) -> csv::Result<()> {
    for l in &r.levels {
        w.write_record([
            case.as_str().to_string(),
            l.n.to_string(),
            num(l.ky),
            num(l.eps_analytic),
            opt(l.eps_oracle),
            opt(l.abs_delta),
            opt(l.residual1),
            opt(l.residual2),
            l.pass.to_string(),
        ])?;
    }
    if with_zero_modes {
        for z in r.zero_modes.iter().filter(|z| !z.informational) {
            w.write_record([
                case.as_str().to_string(),
                z.n.map(|n| n.to_string()).unwrap_or_default(),
                num(z.ky),
                "0".to_string(),
                String::new(),
                String::new(),
                opt(z.residual1),
                opt(z.residual2),
                (z.residual < r.tolerances.residual).to_string(),
            ])?;
        }
    }
    Ok(())
}

/// One-line human summary on stderr.
pub fn summarize(doc: &Document) {
    let verdict = if doc.pass { "PASS" } else { "FAIL" };
    if let Some(r) = &doc.report {
        eprintln!("{verdict} {} ({} levels, {} zero modes, {} checks)", r.case, r.levels.len(), r.zero_modes.len(), r.checks.len());
    }
    for r in doc.reports.iter().flatten() {
        eprintln!("{} {}", if r.pass { "PASS" } else { "FAIL" }, r.case);
    }
}

//! Report rendering. JSON documents carry a `schema` tag matching a file in
//! `schemas/`; CSV floats use 17 significant digits.

use std::fmt::Write;

use anyhow::Result;
use serde::Serialize;

use dirac_bounds::bounds::{BestBound, BoundReport, Method, Shortcuts};
use dirac_bounds::catalog::ExampleEntry;
use dirac_bounds::clifford::VerificationSummary;
use dirac_bounds::sweep::{SweepRow, COLUMNS};
use dirac_bounds::warp::{CurvatureTrack, ExtremalData};
use dirac_bounds::{RicciProfile, WarpTrajectory};

pub const BOUND_SCHEMA: &str = "dirac-bounds/bound/v1";
pub const ODE_SCHEMA: &str = "dirac-bounds/ode-summary/v1";
pub const VERIFY_SCHEMA: &str = "dirac-bounds/verify/v1";
pub const CATALOG_SCHEMA: &str = "dirac-bounds/catalog/v1";

#[derive(Serialize)]
pub struct Best {
    pub method: Method,
    pub value: f64,
    pub strict: bool,
}

#[derive(Serialize)]
pub struct BoundOutput<'a> {
    pub schema: &'static str,
    pub profile: &'a RicciProfile,
    pub shortcuts: Shortcuts,
    pub reports: Vec<BoundReport>,
    pub best: Best,
    pub harmonic_spinor_excluded: bool,
}

impl<'a> BoundOutput<'a> {
    pub fn new(
        profile: &'a RicciProfile,
        shortcuts: Shortcuts,
        reports: Vec<BoundReport>,
        best: &BestBound,
        harmonic_spinor_excluded: bool,
    ) -> Self {
        BoundOutput {
            schema: BOUND_SCHEMA,
            profile,
            shortcuts,
            reports,
            best: Best {
                method: best.method,
                value: best.value,
                strict: best.strict,
            },
            harmonic_spinor_excluded,
        }
    }
}

#[derive(Serialize)]
pub struct OdeSummary {
    pub schema: &'static str,
    pub n: usize,
    pub f0: f64,
    pub period: f64,
    pub f_max: f64,
    pub energy: f64,
    pub max_energy_drift: f64,
    pub degenerate: bool,
    pub kappa0: Option<f64>,
    pub ric_norm_sq_min: Option<f64>,
    pub tau_kappa0: Option<f64>,
    pub tau_ric_min: Option<f64>,
}

impl OdeSummary {
    pub fn new(traj: &WarpTrajectory, ex: Option<&ExtremalData>) -> Self {
        OdeSummary {
            schema: ODE_SCHEMA,
            n: traj.n,
            f0: traj.f0,
            period: traj.period,
            f_max: traj.f_max(),
            energy: traj.energy,
            max_energy_drift: traj.max_energy_drift,
            degenerate: traj.degenerate,
            kappa0: ex.map(|e| e.kappa0),
            ric_norm_sq_min: ex.map(|e| e.ric_norm_sq_min),
            tau_kappa0: ex.map(|e| e.tau_kappa0),
            tau_ric_min: ex.map(|e| e.tau_ric_min),
        }
    }
}

#[derive(Serialize)]
pub struct VerifyOutput<'a> {
    pub schema: &'static str,
    #[serde(flatten)]
    pub summary: &'a VerificationSummary,
}

impl<'a> VerifyOutput<'a> {
    pub fn new(summary: &'a VerificationSummary) -> Self {
        VerifyOutput {
            schema: VERIFY_SCHEMA,
            summary,
        }
    }
}

#[derive(Serialize)]
pub struct CatalogOutput {
    pub schema: &'static str,
    pub examples: &'static [ExampleEntry],
}

impl CatalogOutput {
    pub fn new(examples: &'static [ExampleEntry]) -> Self {
        CatalogOutput {
            schema: CATALOG_SCHEMA,
            examples,
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn csv_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_cell(v: Option<f64>) -> String {
    v.map(csv_float).unwrap_or_default()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn bound_table(out: &BoundOutput) -> String {
    let p = out.profile;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "n = {}, scalar = {}, kappa0 = {}, ric_norm_sq_min = {}",
        p.n(),
        p.scalar(),
        p.kappa0(),
        p.ric_norm_sq_min()
    );
    let _ = writeln!(s, "{:<16} {:>12}  {:<6} note", "method", "lambda^2 >=", "strict");
    for r in &out.reports {
        let value = r.value.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"));
        let strict = if r.applicable { yes_no(r.strict) } else { "-" };
        let note = r.reason.as_deref().unwrap_or("");
        let _ = writeln!(s, "{:<16} {:>12}  {:<6} {note}", r.method.name(), value, strict);
    }
    let _ = writeln!(
        s,
        "{:<16} {:>12}  {:<6} {}",
        "best",
        format!("{:.6}", out.best.value),
        yes_no(out.best.strict),
        out.best.method.name()
    );
    let _ = writeln!(s, "harmonic spinors excluded: {}", yes_no(out.harmonic_spinor_excluded));
    s
}

pub fn bound_csv(out: &BoundOutput) -> String {
    let mut s = String::from("method,value,strict,applicable\n");
    for r in &out.reports {
        let _ = writeln!(s, "{},{},{},{}", r.method.name(), csv_cell(r.value), r.strict, r.applicable);
    }
    let _ = writeln!(s, "best,{},{},true", csv_float(out.best.value), out.best.strict);
    s
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut s = String::from("param");
    for m in COLUMNS {
        s.push(',');
        s.push_str(m.name());
    }
    s.push('\n');
    for row in rows {
        s.push_str(&csv_float(row.param));
        for cell in row.cells {
            s.push(',');
            s.push_str(&csv_cell(cell));
        }
        s.push('\n');
    }
    s
}

pub fn trajectory_csv(traj: &WarpTrajectory, track: Option<&CurvatureTrack>) -> String {
    let mut s = String::from("tau,F,Fp,kappa1,kappa2\n");
    for (i, p) in traj.samples.iter().enumerate() {
        let k = track.map(|t| t.samples[i]);
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            csv_float(p.tau),
            csv_float(p.f),
            csv_float(p.fp),
            csv_cell(k.map(|k| k.kappa1)),
            csv_cell(k.map(|k| k.kappa2))
        );
    }
    s
}

pub fn verify_table(v: &VerificationSummary) -> String {
    format!(
        "dim {}, trials {}, seed {}\n\
         anticommutator defect       {:e}\n\
         max trace residual          {:e}\n\
         max traceless residual      {:e}\n\
         max codazzi residual        {:e}\n\
         tolerance {:e}: {}\n",
        v.dim,
        v.trials,
        v.seed,
        v.anticommutator_defect,
        v.max_ricci_trace_residual,
        v.max_ricci_traceless_residual,
        v.max_codazzi_residual,
        v.tolerance,
        if v.passed { "pass" } else { "FAIL" }
    )
}

pub fn catalog_table(examples: &[ExampleEntry]) -> String {
    let mut s = String::new();
    for e in examples {
        let kaehler = e.complex_dim.map(|m| format!(" [kaehler m = {m}]")).unwrap_or_default();
        let _ = writeln!(s, "{:<20} {}{kaehler}", e.name, e.description);
    }
    s
}

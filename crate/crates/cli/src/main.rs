mod output;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use dirac_bounds::bounds::{best_bound, corollary32_bound, harmonic_spinor_excluded, shortcuts};
use dirac_bounds::catalog::{example_entry, EXAMPLES};
use dirac_bounds::clifford::run_batch;
use dirac_bounds::sweep::{SweepRequest, COLUMNS};
use dirac_bounds::warp::{curvature_track, extremal_data, integrate_warp};
use dirac_bounds::{named_example, realize, ManifoldSpec, Method, Parameter, RicciProfile};

use output::{BoundOutput, CatalogOutput, OdeSummary, VerifyOutput};

/// Lower bounds for Dirac eigenvalues from Ricci curvature data.
#[derive(Parser)]
#[command(name = "dirac-bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every bound for one manifold
    Bound(BoundArgs),
    /// Tabulate bounds along a one-parameter family (CSV)
    Sweep(SweepArgs),
    /// Integrate the n = 5 warp equation over one period
    Ode(OdeArgs),
    /// Check the Clifford identities on seeded random instances
    Verify(VerifyArgs),
    /// List the named examples
    CatalogList(CatalogListArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Ricci profile JSON file
    #[arg(long)]
    profile: Option<PathBuf>,
    /// Manifold spec JSON file
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Named example (see catalog-list)
    #[arg(long)]
    example: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SpecSource {
    /// Manifold spec JSON file
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Named example (see catalog-list)
    #[arg(long)]
    example: Option<String>,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    source: Source,
    /// Complex dimension for the Kähler bound (defaults to the example's)
    #[arg(long)]
    kaehler_dim: Option<usize>,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    source: SpecSource,
    /// radius, surface_scalar or f0
    #[arg(long)]
    param: String,
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
    #[arg(long)]
    steps: usize,
    /// Comma-separated columns to fill (default: all)
    #[arg(long, value_delimiter = ',')]
    bounds: Option<Vec<String>>,
    #[arg(long)]
    kaehler_dim: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OdeArgs {
    #[arg(long, default_value_t = 5)]
    n: i64,
    #[arg(long)]
    f0: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Trajectory CSV (tau,F,Fp,kappa1,kappa2); the summary JSON goes to stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the trajectory CSV to stdout instead of the summary
    #[arg(long, conflicts_with = "out")]
    csv: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CatalogListArgs {
    #[arg(long)]
    json: bool,
}

const EXIT_INPUT: u8 = 1;
const EXIT_NO_BOUND: u8 = 2;
const EXIT_BREACH: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Bound(args) => cmd_bound(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Ode(args) => cmd_ode(args),
        Command::Verify(args) => cmd_verify(args),
        Command::CatalogList(args) => cmd_catalog_list(args),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_spec(spec: Option<&Path>, example: Option<&str>) -> Result<ManifoldSpec> {
    match (spec, example) {
        (Some(path), _) => read_json(path),
        (_, Some(name)) => Ok(named_example(name)?),
        _ => bail!("one of --profile, --spec or --example is required"),
    }
}

fn cmd_bound(args: BoundArgs) -> Result<ExitCode> {
    let Source { profile, spec, example } = args.source;
    let profile: RicciProfile = match profile {
        Some(path) => read_json(&path)?,
        None => realize(&load_spec(spec.as_deref(), example.as_deref())?)?,
    };
    let complex_dim = args
        .kaehler_dim
        .or_else(|| example.as_deref().and_then(example_entry).and_then(|e| e.complex_dim));

    let best = best_bound(&profile, complex_dim);
    let mut reports = best.reports.clone();
    let at = reports.iter().position(|r| r.method == Method::Theorem31).map_or(reports.len(), |i| i + 1);
    reports.insert(at, corollary32_bound(&profile));
    let result = BoundOutput::new(
        &profile,
        shortcuts(&profile),
        reports,
        &best,
        harmonic_spinor_excluded(&profile),
    );

    let text = if args.json {
        output::json(&result)?
    } else if args.csv {
        output::bound_csv(&result)
    } else {
        output::bound_table(&result)
    };
    emit(args.out.as_deref(), &text)?;
    if best.value > 0.0 {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("no applicable positive bound");
        Ok(ExitCode::from(EXIT_NO_BOUND))
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode> {
    let spec = load_spec(args.source.spec.as_deref(), args.source.example.as_deref())?;
    let parameter = Parameter::from_name(&args.param)
        .ok_or_else(|| anyhow!("--param '{}' must be radius, surface_scalar or f0", args.param))?;
    let bounds = match args.bounds {
        None => COLUMNS.to_vec(),
        Some(names) => names
            .iter()
            .map(|n| Method::from_name(n.trim()).ok_or_else(|| anyhow!("--bounds: unknown method '{n}'")))
            .collect::<Result<_>>()?,
    };
    let complex_dim = args.kaehler_dim.or_else(|| {
        args.source
            .example
            .as_deref()
            .and_then(example_entry)
            .and_then(|e| e.complex_dim)
    });
    let request = SweepRequest {
        spec,
        parameter,
        from: args.from,
        to: args.to,
        steps: args.steps,
        bounds,
        complex_dim,
    };
    let rows = request.run()?;
    emit(args.out.as_deref(), &output::sweep_csv(&rows))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_ode(args: OdeArgs) -> Result<ExitCode> {
    let traj = integrate_warp(args.n, args.f0, args.tol)?;
    // curvature formulas exist for n = 5 only
    let track = curvature_track(&traj).ok();
    let extremal = track.as_ref().map(extremal_data);
    let csv = output::trajectory_csv(&traj, track.as_ref());
    if args.csv {
        emit(None, &csv)?;
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(path) = &args.out {
        emit(Some(path), &csv)?;
    }
    emit(None, &output::json(&OdeSummary::new(&traj, extremal.as_ref()))?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    if args.trials == 0 {
        bail!("--trials must be at least 1");
    }
    let summary = run_batch(args.dim, args.trials, args.seed)?;
    let result = VerifyOutput::new(&summary);
    let text = if args.json {
        output::json(&result)?
    } else {
        output::verify_table(&summary)
    };
    emit(args.out.as_deref(), &text)?;
    if summary.passed {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("residual above {:e}", summary.tolerance);
        Ok(ExitCode::from(EXIT_BREACH))
    }
}

fn cmd_catalog_list(args: CatalogListArgs) -> Result<ExitCode> {
    let text = if args.json {
        output::json(&CatalogOutput::new(EXAMPLES))?
    } else {
        output::catalog_table(EXAMPLES)
    };
    emit(None, &text)?;
    Ok(ExitCode::SUCCESS)
}

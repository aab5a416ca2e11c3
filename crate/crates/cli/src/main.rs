//! kgc: reports and parameter scans of Fisher-Shannon / LMC complexity for
//! Klein-Gordon and Schrödinger Coulomb bound states.
//!
//! Exit codes: 0 success, 2 validation or I/O error, 3 at least one
//! requested state failed (its row carries the error message).

mod options;
mod presets;
mod scan;
mod svg;

use clap::{Args, Parser, Subcommand, ValueEnum};
use options::{resolve, Overrides};
use scan::{
    any_row_failed, build_points, parse_z_range, run_scan, write_csv, write_json, AxisSpec,
    KgDensity, Measure, ModelChoice, Point, Row, ScanSpec,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kgc",
    version,
    about = "Complexity measures of Klein-Gordon and Schrödinger Coulomb systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Single-state report.
    Report(ReportArgs),
    /// Grid scan over Z and quantum numbers.
    Scan(ScanArgs),
    /// Built-in scans reproducing the published figures.
    Preset(PresetArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Kg,
    Sch,
    Both,
}

impl From<ModelArg> for ModelChoice {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Kg => ModelChoice::Kg,
            ModelArg::Sch => ModelChoice::Sch,
            ModelArg::Both => ModelChoice::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KgDensityArg {
    /// |psi|^2 normalized to unit probability (default).
    Psi2,
    /// Lorentz-invariant density (Fisher measures diverge for l = 0 rows).
    Li,
}

impl From<KgDensityArg> for KgDensity {
    fn from(d: KgDensityArg) -> Self {
        match d {
            KgDensityArg::Psi2 => KgDensity::Psi2,
            KgDensityArg::Li => KgDensity::Li,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Particle rest mass in electron masses (default: charged pion, 273.13).
    #[arg(long)]
    mass: Option<f64>,
    /// Fine-structure constant (default 1/137.035999).
    #[arg(long)]
    alpha: Option<f64>,
    /// Relative quadrature tolerance (default 1e-10).
    #[arg(long)]
    tol: Option<f64>,
    /// Which density represents the Klein-Gordon model.
    #[arg(long = "kg-density", value_enum, default_value = "psi2")]
    kg_density: KgDensityArg,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key=value config file (CLI flags take precedence).
    #[arg(long)]
    config: Option<PathBuf>,
}

impl CommonArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            mass: self.mass,
            alpha: self.alpha,
            rel_tol: self.tol,
            ..Default::default()
        }
    }
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long = "Z")]
    z: f64,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    #[arg(long, default_value_t = 0)]
    m: i32,
    #[arg(long, value_enum, default_value = "both")]
    model: ModelArg,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ScanArgs {
    /// Comma-separated list of charges.
    #[arg(long = "Z", value_delimiter = ',')]
    z: Option<Vec<f64>>,
    /// Inclusive charge range min:max:step.
    #[arg(long = "Z-range")]
    z_range: Option<String>,
    /// Comma-separated principal quantum numbers.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u32>,
    /// Comma-separated l values, or 'all' for 0..n-1 per state.
    #[arg(long, default_value = "0")]
    l: String,
    /// Comma-separated m values, or 'all' for -l..l per state.
    #[arg(long, default_value = "0")]
    m: String,
    #[arg(long, value_enum, default_value = "both")]
    model: ModelArg,
    /// Subset of S,I,J,diseq,C_FS,C_LMC,zeta (default: all).
    #[arg(long)]
    measures: Option<String>,
    /// Optional plot (zeta or C_FS against the scan axis).
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct PresetArgs {
    /// fig1, fig2 or fig3.
    name: String,
    /// Optional plot output.
    #[arg(long)]
    svg: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

fn emit(rows: &[Row], format: FormatArg, out: Option<&PathBuf>) -> Result<(), String> {
    let write_to = |w: &mut dyn std::io::Write| -> Result<(), String> {
        match format {
            FormatArg::Csv => write_csv(rows, w),
            FormatArg::Json => write_json(rows, w),
        }
    };
    match out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            let mut buf = std::io::BufWriter::new(file);
            write_to(&mut buf)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_to(&mut lock)
        }
    }
}

fn finish(rows: Vec<Row>, format: FormatArg, out: Option<&PathBuf>) -> Result<ExitCode, String> {
    emit(&rows, format, out)?;
    if any_row_failed(&rows) {
        for row in rows.iter().filter(|r| r.error.is_some()) {
            eprintln!(
                "state error: {} Z={} ({},{},{}): {}",
                row.model,
                row.z,
                row.n,
                row.l,
                row.m,
                row.error.as_deref().unwrap_or("")
            );
        }
        Ok(ExitCode::from(3))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_report(args: &ReportArgs) -> Result<ExitCode, String> {
    let opts = resolve(args.common.config.as_deref(), args.common.overrides())?;
    let mut spec = ScanSpec {
        points: vec![Point {
            z: args.z,
            n: args.n,
            l: args.l,
            m: args.m,
        }],
        models: args.model.into(),
        measures: Measure::all(),
        kg_density: args.common.kg_density.into(),
        options: opts,
    };
    if spec.models != ModelChoice::Both {
        spec.measures.remove(&Measure::Zeta);
    }
    let rows = run_scan(&spec)?;
    finish(rows, args.common.format, args.common.out.as_ref())
}

fn cmd_scan(args: &ScanArgs) -> Result<ExitCode, String> {
    let opts = resolve(args.common.config.as_deref(), args.common.overrides())?;
    let z_values = match (&args.z, &args.z_range) {
        (Some(_), Some(_)) => return Err("--Z and --Z-range are mutually exclusive".into()),
        (Some(list), None) => list.clone(),
        (None, Some(range)) => parse_z_range(range)?,
        (None, None) => return Err("one of --Z or --Z-range is required".into()),
    };
    let l_axis = AxisSpec::parse(&args.l).map_err(|e| format!("--l: {e}"))?;
    let m_axis = AxisSpec::parse(&args.m).map_err(|e| format!("--m: {e}"))?;
    let points = build_points(&z_values, &args.n, &l_axis, &m_axis)?;
    let measures = match &args.measures {
        Some(spec) => Measure::parse_list(spec)?,
        None => {
            let mut all = Measure::all();
            if ModelChoice::from(args.model) != ModelChoice::Both {
                all.remove(&Measure::Zeta);
            }
            all
        }
    };
    let spec = ScanSpec {
        points,
        models: args.model.into(),
        measures,
        kg_density: args.common.kg_density.into(),
        options: opts,
    };
    let rows = run_scan(&spec)?;
    if let Some(path) = &args.svg {
        let chart = presets::scan_chart(&rows)?;
        std::fs::write(path, chart)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    finish(rows, args.common.format, args.common.out.as_ref())
}

fn cmd_preset(args: &PresetArgs) -> Result<ExitCode, String> {
    let opts = resolve(args.common.config.as_deref(), args.common.overrides())?;
    let (spec, chart_kind) = presets::build(&args.name, opts, args.common.kg_density.into())?;
    let rows = run_scan(&spec)?;
    if let Some(path) = &args.svg {
        let chart = presets::chart(chart_kind, &rows);
        std::fs::write(path, chart)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    finish(rows, args.common.format, args.common.out.as_ref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Report(args) => cmd_report(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Preset(args) => cmd_preset(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

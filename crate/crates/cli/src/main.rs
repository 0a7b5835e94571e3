use clap::{Args, Parser, Subcommand};
use csp_core::bench::{run_bench, write_csv, BenchConfig};
use csp_core::report::SolutionDoc;
use csp_core::svg::render_candidates;
use csp_core::{compute_bounds, default_extent, generate, read_instance, solve_sequence, write_instance, CspError, HeadingGrid, Instance};
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Shortest curvature-constrained paths through ordered waypoints.
#[derive(Parser)]
#[command(name = "csp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance.
    Gen(GenArgs),
    /// Solve an instance and report the three candidates and bounds.
    Solve(SolveArgs),
    /// Compute lower and upper bounds for an instance.
    Lb(LbArgs),
    /// Run the benchmark and write a CSV table.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Number of waypoints.
    #[arg(long)]
    n: usize,
    /// Turning radius.
    #[arg(long, default_value_t = 100.0)]
    rho: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Side of the sampling square (default 10·rho·sqrt(n)).
    #[arg(long)]
    extent: Option<f64>,
    /// Output file (stdout if omitted).
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance document, or `-` for stdin.
    instance: PathBuf,
    #[arg(long, default_value_t = 1e-4)]
    eps: f64,
    /// Heading intervals per waypoint for the grid bounds.
    #[arg(long, default_value_t = 32)]
    intervals: usize,
    /// Solution document (stdout if omitted).
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Also render F1, F2 and F3 to this SVG file.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct LbArgs {
    instance: PathBuf,
    #[arg(long, default_value_t = 32)]
    intervals: usize,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance sizes, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [12, 15, 18, 21, 24, 27, 30])]
    sizes: Vec<usize>,
    /// Instances per size.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 100.0)]
    rho: f64,
    #[arg(long, default_value_t = 1e-4)]
    eps: f64,
    #[arg(long, default_value_t = 32)]
    intervals: usize,
    /// Master seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output (stdout if omitted).
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write `NA` for runtimes so the table is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

enum Failure {
    Core(CspError),
    Io(String, io::Error),
}

impl From<CspError> for Failure {
    fn from(e: CspError) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::Io("stdin".into(), e))?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Failure::Io(path.display().to_string(), e))
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    Ok(read_instance(&read_input(path)?)?)
}

fn emit(path: Option<&Path>, bytes: &[u8]) -> Outcome {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::Io(p.display().to_string(), e)),
        None => io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::Io("stdout".into(), e)),
    }
}

fn gen(a: GenArgs) -> Outcome {
    let extent = a.extent.unwrap_or_else(|| default_extent(a.n, a.rho));
    let inst = generate(a.n, a.rho, extent, a.seed)?;
    emit(a.output.as_deref(), &write_instance(&inst))
}

fn solve(a: SolveArgs) -> Outcome {
    let inst = load(&a.instance)?;
    let grid = HeadingGrid::new(a.intervals)?;
    let report = solve_sequence(&inst, a.eps)?;
    let bounds = compute_bounds(&inst, &grid);
    if let Some(svg) = &a.svg {
        let text = render_candidates(&inst, &report.candidates)?;
        fs::write(svg, text).map_err(|e| Failure::Io(svg.display().to_string(), e))?;
    }
    emit(a.output.as_deref(), &SolutionDoc::new(&report, Some(&bounds)).to_json())
}

fn lb(a: LbArgs) -> Outcome {
    let inst = load(&a.instance)?;
    let grid = HeadingGrid::new(a.intervals)?;
    let mut out = serde_json::to_vec_pretty(&compute_bounds(&inst, &grid)).expect("bounds serialize");
    out.push(b'\n');
    emit(a.output.as_deref(), &out)
}

fn bench(a: BenchArgs) -> Outcome {
    let cfg = BenchConfig {
        sizes: a.sizes,
        count: a.count,
        rho: a.rho,
        eps: a.eps,
        intervals: a.intervals,
        seed: a.seed,
        record_timing: !a.no_timing,
    };
    let rows = run_bench(&cfg)?;
    let mut out = Vec::new();
    write_csv(&cfg, &rows, &mut out)?;
    emit(a.csv.as_deref(), &out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Lb(a) => lb(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // bad flag values are usage errors
        Err(Failure::Core(e @ CspError::InvalidParameter(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(what, e)) => {
            eprintln!("error: {what}: {e}");
            ExitCode::from(1)
        }
    }
}

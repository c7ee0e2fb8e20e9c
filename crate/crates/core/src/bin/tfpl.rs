use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tfpl::drift::{drift, trace_drifter, Direction, DrifterTrace};
use tfpl::enumerate::{count_tables, enumerate_filtered, BoundaryFilter};
use tfpl::render::{render, Format};
use tfpl::verify::{self, VerificationReport};
use tfpl::{BoundaryTriple, Tfpl};

/// Largest size verified without `--long`.
const DEFAULT_MAX_N: usize = 5;

#[derive(Parser)]
#[command(name = "tfpl", version, about = "Triangular fully packed loops and Wieland drift")]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every TFPL of size N, separated by blank lines.
    Enumerate {
        n: usize,
        /// Only TFPLs with this boundary, as `u,v,w`.
        #[arg(long)]
        boundary: Option<BoundaryTriple>,
    },
    /// Count table `N,u,v,w,t,s`.
    Count {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Iterate drift and dump the orbit as JSON.
    Drift {
        #[arg(long = "in")]
        input: PathBuf,
        /// Number of steps; by default until a fixed point.
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long, value_enum, default_value = "left")]
        dir: DirArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Path statistics of every drifter.
    Trace {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check identities against enumeration; exit 1 on any failure.
    Verify {
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        identity: Identity,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow N above the default budget.
        #[arg(long)]
        long: bool,
    },
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    Thm1,
    Exc0,
    Exc1,
    Cor2,
    Phi,
    Drift,
    Structure,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Serialize)]
struct OrbitStep {
    step: usize,
    boundary: BoundaryTriple,
    drifters: usize,
    tfpl: Tfpl,
}

#[derive(Serialize)]
struct Orbit {
    direction: Direction,
    steps: Vec<OrbitStep>,
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_tfpl(path: &Path) -> Result<Tfpl, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(Tfpl::from_text(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn check_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("N must be at least 1".into()));
    }
    Ok(())
}

fn run_verify(n: usize, identity: Identity) -> Vec<VerificationReport> {
    let wants = |i: Identity| identity == i || identity == Identity::All;
    let mut reports = Vec::new();
    if wants(Identity::Thm1) || wants(Identity::Exc0) || wants(Identity::Exc1) {
        let table = count_tables(n);
        reports.push(verify::verify_necessary_conditions(&table));
        let checks = [
            (Identity::Thm1, verify::verify_theorem1(&table, n)),
            (Identity::Exc0, verify::verify_exc0(&table)),
            (Identity::Exc1, verify::verify_exc1(&table)),
        ];
        for (id, r) in checks {
            if wants(id) {
                reports.push(r.expect("table built for this N"));
            }
        }
    }
    if wants(Identity::Cor2) {
        reports.push(verify::verify_corollary2(n));
    }
    if wants(Identity::Phi) {
        reports.push(verify::verify_phi_census(n));
    }
    if wants(Identity::Drift) {
        reports.push(verify::verify_drift_laws(n));
    }
    if wants(Identity::Structure) {
        reports.push(verify::verify_structure(n));
    }
    reports
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(k) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
    }
    match cli.command {
        Command::Enumerate { n, boundary } => {
            check_n(n)?;
            let filter = match &boundary {
                Some(b) if [&b.u, &b.v, &b.w].iter().any(|w| w.len() != n) => {
                    return Err(Failure::Usage(format!("boundary words must have length {n}")));
                }
                Some(b) => BoundaryFilter::triple(b),
                None => BoundaryFilter::default(),
            };
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            for (i, f) in enumerate_filtered(n, filter).enumerate() {
                if i > 0 {
                    writeln!(w)?;
                }
                w.write_all(f.to_text().as_bytes())?;
            }
            w.flush()?;
        }
        Command::Count { n, out, format } => {
            check_n(n)?;
            let table = count_tables(n);
            let text = match format {
                TableFormat::Csv => table.to_csv(),
                TableFormat::Json => table.to_json(),
            };
            emit(out.as_deref(), &text)?;
        }
        Command::Drift { input, steps, dir, out } => {
            let f = read_tfpl(&input)?;
            f.validate()?;
            let direction = match dir {
                DirArg::Left => Direction::Left,
                DirArg::Right => Direction::Right,
            };
            let cap = steps.unwrap_or(2 * f.size());
            let mut cur = f;
            let mut orbit = Orbit {
                direction,
                steps: Vec::new(),
            };
            for step in 0..=cap {
                let next = drift(&cur, direction)?;
                let done = steps.is_none() && next == cur;
                orbit.steps.push(OrbitStep {
                    step,
                    boundary: cur.boundary()?,
                    drifters: cur.drifters().len(),
                    tfpl: cur,
                });
                if done || step == cap {
                    break;
                }
                cur = next;
            }
            emit(out.as_deref(), &(serde_json::to_string_pretty(&orbit)? + "\n"))?;
        }
        Command::Trace { input } => {
            let f = read_tfpl(&input)?;
            let traces = f
                .drifters()
                .into_iter()
                .map(|d| trace_drifter(&f, d))
                .collect::<Result<Vec<DrifterTrace>, _>>()?;
            emit(None, &(serde_json::to_string_pretty(&traces)? + "\n"))?;
        }
        Command::Verify { n, identity, out, long } => {
            check_n(n)?;
            if n > DEFAULT_MAX_N && !long {
                return Err(Failure::Usage(format!(
                    "N = {n} exceeds the default budget of {DEFAULT_MAX_N}; pass --long"
                )));
            }
            let reports = run_verify(n, identity);
            for r in &reports {
                let status = if r.passed() { "ok" } else { "FAILED" };
                eprintln!("{:<10} N={} checked {:>6} failed {:>4}  {status}", r.identity, r.n, r.checked, r.failed);
            }
            emit(out.as_deref(), &(serde_json::to_string_pretty(&reports)? + "\n"))?;
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Verification);
            }
        }
        Command::Render { input, format, out } => {
            let f = read_tfpl(&input)?;
            f.validate()?;
            let format = match format {
                RenderFormat::Ascii => Format::Ascii,
                RenderFormat::Svg => Format::Svg,
            };
            emit(out.as_deref(), &render(&f, format))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

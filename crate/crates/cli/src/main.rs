use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fiedler_cli::edgelist;
use fiedler_cli::generators::{self, BaseKind, FamilyConfig};
use fiedler_cli::report::{self, ReportFormat};
use fiedler_cli::HarnessError;
use fiedler_core::bisect::spectral_bisection;
use fiedler_core::eigen::{eigendecompose, fiedler_space};
use fiedler_core::graph::Graph;
use fiedler_core::oracle::optimal_bisection;

#[derive(Parser)]
#[command(name = "fiedler", about = "Spectral graph bisection toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family instance and write it as an edge list.
    Generate(GenerateArgs),
    /// Print the Laplacian eigenvalues of a graph.
    Spectrum { file: PathBuf },
    /// Spectrally bisect a graph and print the partition and cut.
    Bisect { file: PathBuf },
    /// Exhaustive optimal bisection (order at most 28).
    Oracle { file: PathBuf },
    /// Run the gap experiment sweep and check the error bounds.
    Verify(VerifyArgs),
    /// Convert an edge-list graph to DOT.
    Export {
        file: PathBuf,
        /// Output DOT file.
        #[arg(long)]
        dot: PathBuf,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// Block size (each of the four base graphs has m vertices).
    #[arg(long, required_unless_present = "spec", conflicts_with = "spec")]
    m: Option<usize>,
    /// Base-graph descriptor, e.g. "cycle" or "complete_bipartite 2 3".
    #[arg(long, default_value = "cycle")]
    base: String,
    /// Number of appended universal vertices (0..=3).
    #[arg(long, default_value_t = 0)]
    cone: usize,
    /// Family config file (key = value form) instead of --m/--base/--cone.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Output edge-list file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated block sizes, e.g. "13,14,15,16".
    #[arg(long = "m-list", value_delimiter = ',', required = true)]
    m_list: Vec<usize>,
    /// Comma-separated cone counts, e.g. "0,1,2,3".
    #[arg(long = "k-list", value_delimiter = ',', default_value = "0")]
    k_list: Vec<usize>,
    /// Base-graph descriptor used for all blocks.
    #[arg(long, default_value = "cycle")]
    base: String,
    /// Write the reports as JSON to this file.
    #[arg(long, conflicts_with = "csv")]
    json: Option<PathBuf>,
    /// Write the reports as CSV to this file.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn read_graph(path: &PathBuf) -> Result<Graph, HarnessError> {
    let text = std::fs::read_to_string(path)?;
    edgelist::parse_edge_list(&text)
}

fn run(cli: Cli) -> Result<ExitCode, HarnessError> {
    match cli.command {
        Command::Generate(args) => {
            let config = match args.spec {
                Some(path) => {
                    let mut cfg = FamilyConfig::parse(&std::fs::read_to_string(&path)?)?;
                    if let Some(dir) = path.parent() {
                        generators::rebase_files(&mut cfg, dir);
                    }
                    cfg
                }
                None => FamilyConfig::uniform(
                    args.m.expect("clap enforces --m without --spec"),
                    BaseKind::parse(&args.base)?,
                    args.cone,
                ),
            };
            let spec = config.build()?;
            let (g, _) = fiedler_core::family::build_family(&spec)?;
            std::fs::write(&args.out, edgelist::write_edge_list(&g))?;
            println!(
                "wrote {} (n = {}, edges = {})",
                args.out.display(),
                g.n(),
                g.edge_count()
            );
        }
        Command::Spectrum { file } => {
            let g = read_graph(&file)?;
            let s = eigendecompose(&g.laplacian())?;
            for lam in s.eigenvalues() {
                println!("{}", report::sig12(*lam));
            }
        }
        Command::Bisect { file } => {
            let g = read_graph(&file)?;
            let es = fiedler_space(&g.laplacian())?;
            let mut best: Option<fiedler_core::bisect::Bisection> = None;
            for v in es.basis() {
                let b = spectral_bisection(&g, v)?;
                if best.as_ref().map_or(true, |cur| b.cut() < cur.cut()) {
                    best = Some(b);
                }
            }
            let b = best.expect("fiedler space is nonempty");
            println!("lambda2 = {}", report::sig12(es.eigenvalue()));
            println!("fiedler multiplicity = {}", es.multiplicity());
            let side: Vec<String> =
                b.side_s().members().iter().map(|v| v.to_string()).collect();
            println!("S = {{{}}}", side.join(", "));
            println!("cut = {}", b.cut());
        }
        Command::Oracle { file } => {
            let g = read_graph(&file)?;
            let r = optimal_bisection(&g)?;
            let side: Vec<String> =
                r.best_set().members().iter().map(|v| v.to_string()).collect();
            println!("optimal bisection cut = {}", r.best_cut());
            println!("S = {{{}}}", side.join(", "));
            println!("subsets enumerated = {}", r.enumerated());
        }
        Command::Verify(args) => {
            let base = BaseKind::parse(&args.base)?;
            let reports = report::verify_sweep(&args.m_list, &base, &args.k_list)?;
            let mut failures = 0;
            for r in &reports {
                let verdict = match r.passes_lower {
                    _ if !r.passes_upper => "FAIL (upper)",
                    Some(true) => "pass",
                    Some(false) => "FAIL (lower)",
                    None => "n/a (n <= 48)",
                };
                if r.bound_failed() {
                    failures += 1;
                }
                println!(
                    "m={} k={} n={}: spectral={} witness={} oracle={} error={} \
                     threshold={} bound={}",
                    r.m,
                    r.k,
                    r.n,
                    r.spectral_cut,
                    r.witness_cut,
                    r.oracle_cut.map_or("-".into(), |c| c.to_string()),
                    r.error_lower,
                    report::sig12(r.theorem_threshold),
                    verdict,
                );
            }
            println!(
                "{} instances, {} checked failures",
                reports.len(),
                failures
            );
            if let Some(path) = &args.json {
                std::fs::write(path, report::export_many(&reports, ReportFormat::Json))?;
            }
            if let Some(path) = &args.csv {
                std::fs::write(path, report::export_many(&reports, ReportFormat::Csv))?;
            }
            if failures > 0 {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Export { file, dot } => {
            let g = read_graph(&file)?;
            std::fs::write(&dot, edgelist::write_dot(&g))?;
            println!("wrote {}", dot.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

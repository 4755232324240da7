use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use preisach::cli::{self, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED};
use preisach::{bijection, build_bfs, lis_patience, Error, PreisachGraph, DEFAULT_MAX_VERTICES};

#[derive(Parser)]
#[command(name = "preisach", version, about = "Preisach graphs of permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PermArgs {
    /// Permutation in one-line notation, e.g. "2,3,1" or "2 3 1"
    #[arg(long)]
    perm: String,
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Output file (default: stdout)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the graph and print its vertices with their images under Phi
    Build(PermArgs),
    /// Write the graph as a DOT digraph
    ExportDot(PermArgs),
    /// Write the graph as canonical JSON
    ExportJson(PermArgs),
    /// Increasing subsequence associated with a vertex
    Phi {
        #[command(flatten)]
        common: PermArgs,
        /// Vertex as a sign string, e.g. "+-+"
        #[arg(long)]
        vertex: String,
    },
    /// Vertex associated with an increasing subsequence
    PhiInverse {
        #[command(flatten)]
        common: PermArgs,
        /// Increasing subsequence, e.g. "2,4,5" (empty string for the empty one)
        #[arg(long)]
        subseq: String,
    },
    /// Nesting degree of a vertex, or of the whole graph without --vertex
    Nesting {
        #[command(flatten)]
        common: PermArgs,
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Longest increasing subsequence length
    Lis {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every structural identity for one permutation
    Verify(PermArgs),
    /// Check every permutation of {1, ..., n}
    VerifyAll {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// LIS statistics of random permutations
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Text to emit, and the exit status to return after emitting it.
type Outcome = (String, i32);

fn graph_of(args: &PermArgs) -> Result<PreisachGraph, Error> {
    let rho = cli::parse_permutation(&args.perm)?;
    build_bfs(&rho, args.max_vertices)
}

fn run(command: Command) -> Result<(Outcome, Option<PathBuf>), Error> {
    let (outcome, out) = match command {
        Command::Build(args) => {
            let g = graph_of(&args)?;
            let table = bijection::PhiTable::new(&g)?;
            let mut text = format!(
                "perm: {}\nvertices: {}\nedges: {}\n",
                g.perm(),
                g.vertex_count(),
                g.edge_count()
            );
            for (v, s) in g.vertices().iter().zip(table.images()) {
                text.push_str(&format!("{v} {s}\n"));
            }
            ((text, EXIT_OK), args.out)
        }
        Command::ExportDot(args) => ((cli::export_dot(&graph_of(&args)?), EXIT_OK), args.out),
        Command::ExportJson(args) => {
            let mut text = cli::export_json(&graph_of(&args)?);
            text.push('\n');
            ((text, EXIT_OK), args.out)
        }
        Command::Phi { common, vertex } => {
            let g = graph_of(&common)?;
            let sigma = cli::parse_config(&vertex, g.n())?;
            let s = bijection::phi(&g, &sigma)?;
            ((format!("{s}\n"), EXIT_OK), common.out)
        }
        Command::PhiInverse { common, subseq } => {
            let g = graph_of(&common)?;
            let s = cli::parse_subsequence(&subseq, g.perm())?;
            let sigma = bijection::phi_inverse(&g, &s)?;
            ((format!("{sigma}\n"), EXIT_OK), common.out)
        }
        Command::Nesting { common, vertex } => {
            let g = graph_of(&common)?;
            let degree = match vertex {
                Some(v) => bijection::nesting_degree(&g, &cli::parse_config(&v, g.n())?)?,
                None => bijection::nesting_of_graph(&g)?,
            };
            ((format!("{degree}\n"), EXIT_OK), common.out)
        }
        Command::Lis { perm, out } => {
            let rho = cli::parse_permutation(&perm)?;
            ((format!("{}\n", lis_patience(&rho)), EXIT_OK), out)
        }
        Command::Verify(args) => {
            let rho = cli::parse_permutation(&args.perm)?;
            let report = cli::cmd_verify(&rho, args.max_vertices)?;
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            ((format!("{report}\n"), code), args.out)
        }
        Command::VerifyAll {
            n,
            max_vertices,
            out,
        } => {
            let summary = cli::cmd_verify_all(n, max_vertices)?;
            let code = if summary.failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            ((format!("{summary}\n"), code), out)
        }
        Command::Stats {
            n,
            samples,
            seed,
            max_vertices,
            out,
        } => {
            let report = cli::cmd_stats(n, samples, seed, max_vertices)?;
            let code = if report.nesting_mismatches == 0 {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            };
            ((format!("{report}\n"), code), out)
        }
    };
    Ok((outcome, out))
}

fn emit(text: &str, out: Option<PathBuf>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.command) {
        Ok(((text, code), out)) => {
            if let Err(e) = emit(&text, out) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE as u8);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}

//! `mobpos`: compute mobile position numbers, generate and verify move
//! certificates, print families, run the reproduction matrix and scan
//! graph6 corpora.

mod commands;
mod input;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "mobpos", version, about = "Mobile general position and mutual visibility on graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Dot,
    Json,
    Edges,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Family spec such as `hypercube:4` or `cartesian_grid:6,5`.
    #[arg(long)]
    pub family: Option<String>,
    /// File of graph6 lines, or `-` for stdin.
    #[arg(long, value_name = "FILE")]
    pub graph6: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct Workers {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, env = "MOBPOS_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute numbers for each input graph.
    Compute {
        #[command(flatten)]
        source: Source,
        /// Comma-separated: gp, mu, mu_r, mob, mobmv, cmob, cmobmv, omega, diam, hubs.
        #[arg(long, default_value = "gp,mu,mob,mobmv", value_delimiter = ',')]
        numbers: Vec<String>,
        /// Distance cap for mu_r.
        #[arg(long)]
        radius: Option<usize>,
        /// State budget per mobility search.
        #[arg(long, default_value_t = 50_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[command(flatten)]
        workers: Workers,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
        /// Include witness certificates in JSON output.
        #[arg(long)]
        certificates: bool,
    },
    /// Generate a move certificate, e.g. `schedule cart_grid_mv 6 5`.
    Schedule {
        strategy: String,
        args: Vec<String>,
        /// Write the certificate here instead of stdout.
        #[arg(long, short)]
        out: Option<String>,
    },
    /// List the schedule strategies and their arguments.
    Strategies,
    /// Replay a certificate; exits 1 when it is rejected.
    Verify {
        /// Certificate JSON file, or `-` for stdin.
        #[arg(default_value = "-")]
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Run the reproduction matrix; exits 1 on any failing row.
    Reproduce {
        /// Criterion numbers, group names or row-name fragments, comma-separated.
        #[arg(long)]
        only: Option<String>,
        /// Override an expected value: `NAME=VALUE`.
        #[arg(long, value_name = "NAME=VALUE")]
        expect: Vec<String>,
        #[command(flatten)]
        workers: Workers,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Largest mob = 2 graphs in a graph6 stream of one order.
    Scan {
        /// File of graph6 lines, or `-` for stdin.
        #[arg(long, value_name = "FILE", default_value = "-")]
        graph6: String,
        #[arg(long, default_value_t = 50_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[command(flatten)]
        workers: Workers,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Print one graph of a family.
    Family {
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// List the graph families.
    Families,
    /// Structural characterization verdicts for each input graph.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { source, numbers, radius, budget, workers, format, certificates } => {
            commands::compute(&source, &numbers, radius, budget, &workers, format, certificates)
        }
        Command::Schedule { strategy, args, out } => commands::schedule(&strategy, &args, out.as_deref()),
        Command::Strategies => commands::strategies(),
        Command::Verify { file, format } => commands::verify(&file, format),
        Command::Reproduce { only, expect, workers, format } => {
            commands::reproduce(only.as_deref(), &expect, &workers, format)
        }
        Command::Scan { graph6, budget, workers, format } => commands::scan(&graph6, budget, &workers, format),
        Command::Family { spec, format } => commands::family(&spec, format),
        Command::Families => commands::families(),
        Command::Classify { source, format } => commands::classify(&source, format),
    };
    match result {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<std::io::Error>())
        .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

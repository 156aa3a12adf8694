use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kodag::digraph::DEFAULT_SEARCH_BOUND;
use kodag::oracle::THEOREM1_MAX_VERTICES;

mod commands;
mod dot;

/// Cobweb posets, their two-chain realizers, and orderable-DAG checks.
#[derive(Parser)]
#[command(name = "kodag", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the cobweb Hasse diagram in digraph text format, plus a
    /// `<out>.vertices.json` index -> [j, s] map.
    Generate {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        levels: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the chains X and Y of the cobweb realizer as JSON.
    Realizer {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        levels: usize,
    },
    /// Report acyclicity and regularity of a digraph file.
    Check {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Decide whether a digraph is the Hasse diagram of a dimension-2 poset.
    Odag {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// Compare the brute-force dimension-2 test against regularity plus an
    /// admissible chain on every labeled DAG with `--bound` vertices.
    #[command(name = "verify-theorem1")]
    VerifyTheorem1 {
        #[arg(long, default_value_t = THEOREM1_MAX_VERTICES)]
        bound: usize,
    },
    /// Write a layered DOT drawing of the cobweb Hasse diagram.
    #[command(name = "export-dot")]
    ExportDot {
        #[arg(long)]
        seq: String,
        #[arg(long)]
        levels: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> anyhow::Result<(String, bool)> {
    let ok = |s| Ok((s, true));
    match command {
        Command::Generate { seq, levels, out } => ok(commands::generate(&seq, levels, &out)?),
        Command::Realizer { seq, levels } => ok(commands::realizer_json(&seq, levels)?),
        Command::Check { graph } => ok(commands::check(&graph)?),
        Command::Odag { graph, bound } => ok(commands::odag(&graph, bound)?),
        Command::VerifyTheorem1 { bound } => commands::theorem1(bound),
        Command::ExportDot { seq, levels, out } => {
            ok(commands::export_dot(&seq, levels, out.as_deref())?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((output, success)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(output.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            if success {
                ExitCode::SUCCESS
            } else {
                eprintln!("kodag: counterexamples found");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("kodag: {e:#}");
            ExitCode::from(1)
        }
    }
}

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod error;

use error::CliError;

/// Sombor coindex and Zagreb-type indices of simple graphs, with a bound
/// auditor over exhaustively enumerated small graphs.
#[derive(Debug, Parser)]
#[command(name = "sombor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute every index for each input graph.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generate a named family member and compare with its closed forms.
    Family {
        /// One of empty, complete, path, cycle, star, complete_bipartite,
        /// nanotorus, closed_fence.
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Closed-form variant for the closed fence.
        #[arg(long, default_value = "corrected")]
        variant: sombor_core::Variant,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply a binary graph operation and evaluate its coindex bounds.
    Ops {
        #[arg(long)]
        op: sombor_core::GraphOperation,
        /// First operand in graph6; otherwise the first input line.
        #[arg(long, requires = "g2")]
        g1: Option<String>,
        /// Second operand in graph6; otherwise the second input line.
        #[arg(long, requires = "g1")]
        g2: Option<String>,
        /// graph6 file holding the two operands, or `-` for stdin.
        #[arg(conflicts_with = "g1")]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate the bound theorems on input graphs or on every labeled graph.
    Audit {
        #[command(flatten)]
        input: InputArgs,
        /// Theorem ids, comma separated, or `all` for every single-graph
        /// theorem.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        theorem: Vec<String>,
        /// Audit all labeled graphs on 1..=N vertices instead of reading input.
        #[arg(long, value_name = "N", conflicts_with = "path")]
        enumerate_max_n: Option<usize>,
        /// Exit with status 1 if any violation is found.
        #[arg(long)]
        strict: bool,
        /// With enumeration, emit every report rather than only violating ones.
        #[arg(long)]
        all_reports: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List every labeled graph on exactly N vertices as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file, or `-` for stdin (the default).
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, default_value = "json_lines")]
    output: sombor_core::OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    #[value(alias = "edge_list")]
    Edgelist,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let clean = match cli.command {
        Command::Compute { input, output } => {
            commands::compute(&mut out, input.path.as_deref(), input.format, output.output)?
        }
        Command::Family {
            name,
            n,
            p,
            q,
            variant,
            output,
        } => commands::family(&mut out, &name, n, p, q, variant, output.output)?,
        Command::Ops {
            op,
            g1,
            g2,
            input,
            output,
        } => {
            let operands = match (g1, g2) {
                (Some(a), Some(b)) => commands::Operands::Inline(a, b),
                _ => commands::Operands::Input(input),
            };
            commands::ops(&mut out, op, operands, output.output)?
        }
        Command::Audit {
            input,
            theorem,
            enumerate_max_n,
            strict,
            all_reports,
            output,
        } => {
            let violations = commands::audit(
                &mut out,
                &commands::AuditConfig {
                    path: input.path,
                    format: input.format,
                    theorems: theorem,
                    enumerate_max_n,
                    all_reports,
                    output: output.output,
                },
            )?;
            !(strict && violations > 0)
        }
        Command::Enumerate { n } => commands::enumerate(&mut out, n)?,
    };
    out.flush()?;
    Ok(clean)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Write(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sombor: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

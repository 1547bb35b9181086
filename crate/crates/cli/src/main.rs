use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unmixed_cli::commands::{self, GenKind};
use unmixed_cli::crosscheck::{self, Family};
use unmixed_cli::{CliError, EXIT_INPUT};

/// Decide whether a bipartite graph is unmixed, with certificates.
///
/// Exit status: 0 unmixed, 1 mixed or not bipartite, 2 input error.
#[derive(Debug, Parser)]
#[command(name = "unmixed", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the polynomial-time decision and print a certificate.
    Check {
        /// Edge-list file, or `-` for standard input.
        path: String,
        #[arg(long)]
        quiet: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Enumerate all minimal vertex covers by brute force.
    Oracle {
        path: String,
        /// Also list every minimal cover.
        #[arg(long)]
        covers: bool,
        /// Raise the vertex limit (default 24).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Write a random graph as an edge list.
    Generate {
        #[command(subcommand)]
        kind: GenCommand,
    },
    /// Compare the fast decision against the oracle on random graphs.
    Crosscheck {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FamilyArg::Bipartite)]
        kind: FamilyArg,
        /// Where mismatching graphs are written.
        #[arg(long, default_value = ".")]
        dump_dir: PathBuf,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug, Args)]
struct GenOpts {
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Unmixed graph built from a random preorder on G labels.
    Preorder {
        g: usize,
        p: f64,
        #[command(flatten)]
        opts: GenOpts,
    },
    Bipartite {
        n1: usize,
        n2: usize,
        p: f64,
        #[command(flatten)]
        opts: GenOpts,
    },
    /// Uniform random labeled tree.
    Tree {
        n: usize,
        #[command(flatten)]
        opts: GenOpts,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Bipartite,
    Tree,
    All,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Check {
            path,
            quiet,
            pretty,
        } => commands::check(&commands::read_graph(&path)?, quiet, pretty, &mut out),
        Command::Oracle {
            path,
            covers,
            max_n,
        } => {
            commands::oracle_cap(max_n)?;
            commands::oracle(&commands::read_graph(&path)?, covers, max_n, &mut out)
        }
        Command::Generate { kind } => {
            let (kind, opts) = match kind {
                GenCommand::Preorder { g, p, opts } => (GenKind::Preorder { g, p }, opts),
                GenCommand::Bipartite { n1, n2, p, opts } => {
                    (GenKind::Bipartite { n1, n2, p }, opts)
                }
                GenCommand::Tree { n, opts } => (GenKind::Tree { n }, opts),
            };
            let text = commands::generate(&kind, opts.seed)?;
            drop(out);
            commands::write_output(&text, opts.out.as_deref())?;
            Ok(0)
        }
        Command::Crosscheck {
            count,
            max_n,
            seed,
            kind,
            dump_dir,
            inject_fault,
        } => {
            let opts = crosscheck::Options {
                count,
                max_n,
                seed,
                family: match kind {
                    FamilyArg::Bipartite => Family::Bipartite,
                    FamilyArg::Tree => Family::Tree,
                    FamilyArg::All => Family::All,
                },
                dump_dir,
                inject_fault,
            };
            let summary = crosscheck::run(&opts, &mut io::stderr())?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&summary).expect("summary serializes")
            )?;
            Ok(crosscheck::exit_code(&summary))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

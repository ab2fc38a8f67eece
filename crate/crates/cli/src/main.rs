//! `posetforge`: batch enumeration, verification and export for naturally
//! labelled posets.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "posetforge", version, about = "Naturally labelled posets as Boolean matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// What `list` streams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ListKind {
    /// Poset matrices separated by blank lines.
    Matrices,
    /// Ideal families, one per line.
    Topologies,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count labelled posets two ways and isomorphism classes; one CSV row.
    Count {
        #[arg(long)]
        n: usize,
        /// Parallel workers over parent shards (defaults to the core count).
        #[arg(long)]
        shards: Option<usize>,
        /// Keep class keys in bucket files under this directory.
        #[arg(long)]
        keys_dir: Option<PathBuf>,
        #[arg(long)]
        no_header: bool,
    },
    /// Stream every poset matrix or every ideal family of size n.
    List {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ListKind::Matrices)]
        kind: ListKind,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Emit every one-row extension of the matrix in a file.
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the ideal lattice of a matrix as JSON lines.
    Ideals {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Automorphism group order, twin classes and the orbits on poset vectors.
    Aut {
        #[arg(long)]
        input: PathBuf,
    },
    /// First/next stream of ideal families, optionally resumed.
    Nlt {
        #[arg(long, required_unless_present = "resume")]
        n: Option<usize>,
        /// Continue after this family (one line, as printed by this command).
        #[arg(long)]
        resume: Option<String>,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the exhaustive invariant checks for every size up to n.
    Verify {
        /// Defaults to POSETFORGE_MAX_N, else 5.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Graphviz Hasse diagram of a matrix or of its ideal lattice.
    Dot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        lattice: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count { n, shards, keys_dir, no_header } => {
            commands::count(n, shards, keys_dir.as_deref(), !no_header)
        }
        Command::List { n, kind, output, limit } => {
            commands::list(n, kind == ListKind::Topologies, output.as_deref(), limit)
        }
        Command::Extend { input, output } => commands::extend(&input, output.as_deref()),
        Command::Ideals { input, output } => commands::ideals(&input, output.as_deref()),
        Command::Aut { input } => commands::aut(&input),
        Command::Nlt { n, resume, limit, output } => {
            commands::nlt(n, resume.as_deref(), limit, output.as_deref())
        }
        Command::Verify { n } => commands::verify(n),
        Command::Dot { input, lattice, output } => commands::dot(&input, lattice, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed downstream pipe (`| head`) is not a failure
        Err(CliError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("posetforge: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

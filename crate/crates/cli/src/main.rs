use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod instance;
mod report;

/// Spectral minimax solver with certified bounds.
#[derive(Parser)]
#[command(name = "specmm", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket min over the spectraplex of max over the simplex.
    Solve(SolveArgs),
    /// Bracket max over the spectraplex of min over the simplex.
    Maximin(SolveArgs),
    /// Export the single-SDP embedding in SDPA sparse format.
    Embed(EmbedArgs),
    /// Compare the exact matrix-game value with the spectral route on diagonal matrices.
    Classic(ClassicArgs),
    /// Run the certificate battery on an instance.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Shift {
    #[default]
    Auto,
    None,
}

impl From<Shift> for specmm::ShiftPolicy {
    fn from(s: Shift) -> Self {
        match s {
            Shift::Auto => Self::Auto,
            Shift::None => Self::None,
        }
    }
}

#[derive(Args, Clone, Debug)]
struct SolverFlags {
    /// Target gap between the upper and lower bound.
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    #[arg(long, default_value_t = 5000)]
    max_iters: usize,
    /// Exit with status 2 when the gap target is not reached.
    #[arg(long)]
    strict: bool,
    /// Reserved; the solver is deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Clone, Copy, Debug)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    instance: PathBuf,
    #[command(flatten)]
    solver: SolverFlags,
    #[command(flatten)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    shift: Shift,
}

#[derive(Args, Debug)]
struct EmbedArgs {
    instance: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    shift: Shift,
}

#[derive(Args, Debug)]
struct ClassicArgs {
    /// JSON file of the form {"vectors": [[...], ...]}.
    #[arg(required_unless_present = "rows", conflicts_with = "rows")]
    vectors: Option<PathBuf>,
    /// Inline rows, e.g. "1,0;0,1".
    #[arg(long)]
    rows: Option<String>,
    #[command(flatten)]
    solver: SolverFlags,
    #[command(flatten)]
    format: Format,
}

#[derive(Args, Debug)]
struct CheckArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    shift: Shift,
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SPECMM_LOG", "warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Solve(a) => commands::solve(&a, specmm::Sense::Minimax),
        Command::Maximin(a) => commands::solve(&a, specmm::Sense::Maximin),
        Command::Embed(a) => commands::embed(&a),
        Command::Classic(a) => commands::classic(&a),
        Command::Check(a) => commands::check(&a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

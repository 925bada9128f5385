use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use wbcast_cli::{run_to_string, CliError, Format, Mode, RunRequest};
use wbcast_core::MachineBranch;

/// Secret entanglement broadcasting from W states by two rounds of local cloning.
#[derive(Debug, Parser)]
#[command(name = "wbcast", version, allow_negative_numbers = true)]
struct Args {
    /// What to run.
    #[arg(value_enum)]
    mode: Mode,

    /// Amplitude of |001>.
    #[arg(long)]
    alpha: Option<f64>,

    /// Amplitude of |010>.
    #[arg(long)]
    beta: Option<f64>,

    /// Amplitude of |100>.
    #[arg(long)]
    gamma: Option<f64>,

    /// First-round machine readout, e.g. UUD.
    #[arg(long, default_value = "UUU", value_parser = parse_branch)]
    branch1: MachineBranch,

    /// Second-round machine readout.
    #[arg(long, default_value = "UUU", value_parser = parse_branch)]
    branch2: MachineBranch,

    /// Skip the local unitary stage.
    #[arg(long)]
    no_unitaries: bool,

    /// Number of random draws in sweep mode.
    #[arg(long, default_value_t = 50)]
    sweep: usize,

    /// Seed for sweep mode.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Grid size for background mode (at least 100).
    #[arg(long, default_value_t = 100)]
    grid: usize,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn parse_branch(s: &str) -> Result<MachineBranch, String> {
    s.parse::<MachineBranch>().map_err(|e| e.to_string())
}

fn request(args: Args) -> Result<RunRequest, CliError> {
    let mut req = RunRequest::new(args.mode);
    match (args.alpha, args.beta, args.gamma) {
        (None, None, None) => {}
        (Some(a), Some(b), Some(c)) => req = req.with_params(a, b, c)?,
        _ => {
            return Err(CliError::InvalidInput(
                "--alpha, --beta and --gamma must be given together".into(),
            ))
        }
    }
    req.branch1 = args.branch1;
    req.branch2 = args.branch2;
    req.apply_unitaries = !args.no_unitaries;
    req.sweep = args.sweep;
    req.seed = args.seed;
    req.grid = args.grid;
    req.format = args.format;
    req.out = args.out;
    Ok(req)
}

fn run(args: Args) -> Result<(), CliError> {
    let req = request(args)?;
    let text = run_to_string(&req)?;
    match &req.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("wbcast: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

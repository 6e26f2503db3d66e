use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use btconv::verify::{self, RunConfig};

const DEFAULT_NMAX: usize = 10;

#[derive(Parser)]
#[command(name = "btconv", version, about = "Sweep binomial-transform identities with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate registered identities and report each instance.
    Verify(VerifyArgs),
    /// Print every registered identity with what it states.
    List,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Comma-separated ids, or `all`.
    #[arg(long, value_delimiter = ',')]
    identity: Vec<String>,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Write reports here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    /// JSON file with `nmax`, `seed` and `identities`; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Summary,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for check in verify::registry().checks() {
                println!("{}\t{}", check.id(), check.anchor());
            }
            ExitCode::SUCCESS
        }
        Command::Verify(args) => match run_verify(args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("btconv: {e}");
                ExitCode::from(2)
            }
        },
    }
}

/// `Ok(all_passed)`, or an error for anything that prevented the sweep.
fn run_verify(args: VerifyArgs) -> Result<bool, String> {
    let config = match &args.config {
        Some(path) => RunConfig::load(path).map_err(|e| e.to_string())?,
        None => RunConfig::default(),
    };
    let nmax = args.nmax.or(config.nmax).unwrap_or(DEFAULT_NMAX);
    let seed = args.seed.or(config.seed).unwrap_or(0);
    let ids = if args.identity.is_empty() {
        config.identities.unwrap_or_default()
    } else {
        args.identity
    };

    let reports = verify::run(&ids, nmax, seed).map_err(|e| e.to_string())?;

    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut out = BufWriter::new(sink);
    let write_err = |e: io::Error| e.to_string();
    match args.format {
        Format::Jsonl => {
            for r in &reports {
                writeln!(out, "{}", r.to_jsonl()).map_err(write_err)?;
            }
        }
        Format::Summary => {
            for (id, pass, fail) in verify::summarize(&reports) {
                let status = if fail == 0 { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {id} ({pass} passed, {fail} failed)").map_err(write_err)?;
            }
            let failed = reports.iter().filter(|r| !r.pass).count();
            writeln!(out, "{} instances, {failed} failed, nmax={nmax}, seed={seed}", reports.len())
                .map_err(write_err)?;
        }
    }
    out.flush().map_err(write_err)?;
    Ok(reports.iter().all(|r| r.pass))
}

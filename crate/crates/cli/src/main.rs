mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use afkit::chain::Family;
use afkit::verify::Fault;
use afkit::{Caps, DEFAULT_CYCLE_CAP, DEFAULT_PM_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Parser)]
#[command(name = "afkit", version, about = "Anti-forcing numbers of perfect matchings")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Alternating cycles examined per matching before giving up.
    #[arg(long, env = "AFKIT_CYCLE_CAP", default_value_t = DEFAULT_CYCLE_CAP, global = true)]
    cycle_cap: usize,
    /// Perfect matchings enumerated per graph before giving up.
    #[arg(long, env = "AFKIT_PM_CAP", default_value_t = DEFAULT_PM_CAP, global = true)]
    pm_cap: usize,
    /// Worker threads for the per-matching loop (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact computations on a graph file.
    Exact {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        task: ExactTask,
    },
    /// Linear-time computations on a chain spec such as "6 6@1 6".
    Chain {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum)]
        task: ChainTask,
        /// Where `realize` writes the graph; stdout if absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare chain results with the exact solver on the realized graph.
    Verify(VerifyArgs),
    /// Generate a chain spec.
    Gen {
        family: Family,
        n: usize,
        #[arg(long, default_value = "")]
        modes: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Z-transformation graph of a graph file with faces.
    Ztg {
        #[arg(long)]
        input: PathBuf,
        /// Write the Z-graph here, and the node matchings to `<path>.matchings`.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["family", "n"])]
    spec: Option<String>,
    #[arg(long, requires = "n")]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    n: Option<usize>,
    #[arg(long, default_value = "")]
    modes: String,
    /// First seed; instance k uses seed + k.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, value_enum, hide = true)]
    fault: Option<FaultArg>,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum FaultArg {
    AfPlusOne,
    MaxAfMinusOne,
    SpectrumDropLast,
}

impl From<FaultArg> for Fault {
    fn from(f: FaultArg) -> Fault {
        match f {
            FaultArg::AfPlusOne => Fault::AfPlusOne,
            FaultArg::MaxAfMinusOne => Fault::MaxAfMinusOne,
            FaultArg::SpectrumDropLast => Fault::SpectrumDropLast,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
pub enum ExactTask {
    Af,
    MaxAf,
    Spectrum,
    PerMatching,
    EdgesAntiForcing,
    EdgesForcing,
    Components,
}

#[derive(Copy, Clone, ValueEnum)]
pub enum ChainTask {
    Af,
    MaxAf,
    Spectrum,
    Segments,
    Blocks,
    Kinks,
    KCount,
    Realize,
}

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Report(Report),
    /// Raw text for stdout (`gen` in text mode, `realize` without a file).
    Raw(String, Report),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.global.jobs > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build_global().ok();
    }
    let caps = Caps { cycle_cap: cli.global.cycle_cap, pm_cap: cli.global.pm_cap };
    let start = Instant::now();
    let result = match cli.command {
        Command::Exact { input, task } => commands::exact(&input, task, caps),
        Command::Chain { spec, task, output } => commands::chain(&spec, task, output.as_deref(), caps),
        Command::Verify(args) => commands::verify(&args, caps),
        Command::Gen { family, n, modes, seed } => commands::gen(family, n, &modes, seed, caps),
        Command::Ztg { input, export } => commands::ztg(&input, export.as_deref(), caps),
    };
    match result {
        Ok(outcome) => {
            let (raw, mut report) = match outcome {
                Outcome::Report(r) => (None, r),
                Outcome::Raw(text, r) => (Some(text), r),
            };
            report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            match (cli.global.format, raw) {
                (Format::Json, _) => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                (Format::Text, Some(text)) => print!("{text}"),
                (Format::Text, None) => print!("{}", report.to_text()),
            }
            if report.values.get("ok") == Some(&serde_json::Value::Bool(false)) {
                ExitCode::from(EXIT_MISMATCH)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("afkit: {e:#}");
            let capped = e.chain().any(|c| matches!(c.downcast_ref(), Some(afkit::Error::CapExceeded(_))));
            ExitCode::from(if capped { EXIT_CAP } else { EXIT_USAGE })
        }
    }
}

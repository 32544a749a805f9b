//! `fxform`: batch front end for indices, transforms, generators and the
//! verification harness.
//!
//! Exit codes: 0 on success, 1 when verification finds a mismatch, 2 on a
//! usage or input error. Results go to standard output (or `--out FILE`),
//! diagnostics to standard error.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "fxform",
    version,
    about = "F-index of total transformation graphs"
)]
struct Cli {
    /// Write results to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute (n, m, M1, M2, F, xi4, rezg3) for each input graph.
    Indices {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build a transformation graph of each input graph.
    Transform {
        #[command(flatten)]
        input: InputArgs,
        /// One of t1, t2, +++, ++-, +-+, +--, -++, -+-, --+, ---.
        #[arg(long, allow_hyphen_values = true)]
        kind: fxform_core::TransformKind,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Also emit the closed-form degree of every transform vertex.
        #[arg(long)]
        predict: bool,
    },
    /// Check every closed form against construction over a corpus.
    Verify(VerifyArgs),
    /// Emit a generated graph.
    Generate {
        /// path, cycle, complete, star, complete_bipartite or random_gnm.
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// First part size for complete_bipartite.
        #[arg(long)]
        a: Option<usize>,
        /// Second part size for complete_bipartite.
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file; standard input when omitted or "-".
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormatArg::Auto)]
    input_format: InputFormatArg,
}

#[derive(Args, Debug)]
#[command(group(
    ArgGroup::new("corpus")
        .required(true)
        .multiple(false)
        .args(["exhaustive", "random", "families", "input"])
))]
struct VerifyArgs {
    /// Every labeled graph on 1..=N vertices (N <= 7).
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// COUNT seeded G(n, m) graphs; needs --nmin, --nmax and --seed.
    #[arg(long, value_name = "COUNT", requires_all = ["nmin", "nmax", "seed"])]
    random: Option<usize>,
    #[arg(long, value_name = "A", requires = "random")]
    nmin: Option<usize>,
    #[arg(long, value_name = "B", requires = "random")]
    nmax: Option<usize>,
    #[arg(long, value_name = "S", requires = "random")]
    seed: Option<u64>,
    /// Comma-separated generator calls, e.g. "cycle:3..12,star:3..12".
    #[arg(long, value_name = "LIST")]
    families: Option<String>,
    /// graph6 lines or an edge list.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Skip graphs whose graph6 string repeats.
    #[arg(long)]
    dedupe: bool,
    /// Report every graph, not only failures (CSV and text output).
    #[arg(long)]
    all: bool,
    /// Record wall time in the report (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    /// Worker threads; defaults to XFORM_THREADS or the number of CPUs.
    #[arg(long, env = "XFORM_THREADS")]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Graph6,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormatArg {
    Auto,
    Graph6,
    Edgelist,
}

impl From<InputFormatArg> for fxform_core::InputFormat {
    fn from(f: InputFormatArg) -> Self {
        match f {
            InputFormatArg::Auto => fxform_core::InputFormat::Auto,
            InputFormatArg::Graph6 => fxform_core::InputFormat::Graph6,
            InputFormatArg::Edgelist => fxform_core::InputFormat::EdgeList,
        }
    }
}

/// Why a command stopped.
#[derive(Debug)]
enum Failure {
    /// Verification ran and found a mismatch.
    Mismatch,
    /// Bad usage, bad input or an I/O problem.
    Usage(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

fn open_input(args: &InputArgs) -> anyhow::Result<Box<dyn BufRead>> {
    match &args.input {
        Some(p) if p.as_os_str() != "-" => {
            let f = File::open(p).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
            Ok(Box::new(BufReader::new(f)))
        }
        _ => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

fn open_output(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    match out {
        Some(p) => {
            let f = File::create(p).map_err(|e| anyhow::anyhow!("{}: {e}", p.display()))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = open_output(&cli.out)?;
    let result = match cli.command {
        Command::Indices { input, format } => commands::indices(
            open_input(&input)?,
            input.input_format.into(),
            format,
            &mut out,
        ),
        Command::Transform {
            input,
            kind,
            format,
            predict,
        } => commands::transform(
            open_input(&input)?,
            input.input_format.into(),
            kind,
            format,
            predict,
            &mut out,
        ),
        Command::Verify(args) => commands::verify(&args, &mut out),
        Command::Generate {
            family,
            n,
            m,
            seed,
            a,
            b,
            format,
        } => commands::generate(
            &family,
            commands::GenParams { n, m, seed, a, b },
            format,
            &mut out,
        ),
    };
    // Flush whatever was produced before an error, then report the error.
    let flushed = out.flush();
    result?;
    flushed?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("fxform: {e}");
            ExitCode::from(2)
        }
    }
}

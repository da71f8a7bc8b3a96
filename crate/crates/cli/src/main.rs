use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use liequot::Mode;
use liequot_cli::{run, Format, Input, RunConfig, DEFAULT_SAFETY_CAP};

/// Nilpotent quotients of finitely presented Lie rings.
#[derive(Parser, Debug)]
#[command(name = "liequot", version)]
struct Args {
    /// Presentation file, or "-" for standard input.
    input: String,

    /// Nilpotency class to compute.
    #[arg(short = 'c', long = "class", value_parser = clap::value_parser!(u64).range(1..))]
    class: Option<u64>,

    /// Graded algorithm (relators must be homogeneous).
    #[arg(short = 'g', long)]
    graded: bool,

    /// Canonical presentations via Smith normal form; implies --graded.
    #[arg(long)]
    canonical: bool,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Per-class progress and timing on standard error.
    #[arg(long)]
    stats: bool,

    /// Class limit used when -c is not given.
    #[arg(long, default_value_t = DEFAULT_SAFETY_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    max_class: u64,

    /// Without -c, run until the series stabilizes (may not terminate).
    #[arg(long, conflicts_with = "class")]
    unbounded: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let input = if args.input == "-" { Input::Stdin } else { Input::Path(PathBuf::from(&args.input)) };
    let mode = if args.canonical {
        Mode::Canonical
    } else if args.graded {
        Mode::Graded
    } else {
        Mode::Plain
    };
    let config = RunConfig {
        input,
        class_bound: args.class.map(|c| c as usize),
        mode,
        format: match args.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Structured => Format::Structured,
        },
        stats: args.stats,
        safety_cap: (!args.unbounded).then_some(args.max_class as usize),
    };
    let code = run(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code as u8)
}

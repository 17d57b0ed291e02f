use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use garnish_cli::bench::{self, BenchConfig};
use garnish_cli::pipeline::{self, Engine};
use garnish_cli::report::ReportFormat;
use garnish_cli::stack;
use garnish_core::{textreaders, Error};

/// Decoration-chain pipeline runner.
///
/// Builds the decoration stack described by --stack around the input text,
/// drains the input through it, and answers each --query through the chosen
/// dispatch engine. With --bench, runs the dispatch cost comparison instead.
#[derive(Parser, Debug)]
#[command(name = "garnish", version, disable_help_subcommand = true)]
struct Args {
    /// Pipe-separated decoration stack, outermost first,
    /// e.g. "words|pushback(16)|crc32|counter"
    #[arg(long)]
    stack: Option<String>,

    /// Input file path, or '-' for standard input
    #[arg(long)]
    input: Option<String>,

    /// Capability to query after the drain; repeatable. Aliases: no_chars,
    /// no_words, no_sentences, checksum
    #[arg(long = "query")]
    queries: Vec<String>,

    /// Dispatch engine answering the queries
    #[arg(long, value_enum, default_value = "mix")]
    engine: Engine,

    /// Report rendering
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,

    /// Run the dispatch microbenchmark instead of a pipeline
    #[arg(long)]
    bench: bool,

    /// Comma-separated chain depths for --bench
    #[arg(long, default_value = "1,4,16")]
    depths: String,

    /// Measured calls per engine and depth for --bench
    #[arg(long, default_value_t = 10_000)]
    iters: u64,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(error)
            if matches!(
                error.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            let _ = error.print();
            return ExitCode::SUCCESS;
        }
        Err(error) => {
            let _ = error.print();
            return ExitCode::from(1);
        }
    };

    match run(args) {
        Ok(code) => ExitCode::from(code),
        Err(error) => {
            eprintln!("garnish: {error}");
            ExitCode::from(if error.is_unsupported() { 2 } else { 1 })
        }
    }
}

fn run(args: Args) -> Result<u8, Error> {
    if args.bench {
        let config = BenchConfig {
            depths: bench::parse_depths(&args.depths)?,
            iters: args.iters,
        };
        print!("{}", bench::run_bench(&config)?);
        return Ok(0);
    }

    let spec_text = args
        .stack
        .ok_or_else(|| Error::Config("missing --stack".to_string()))?;
    let input_arg = args
        .input
        .ok_or_else(|| Error::Config("missing --input".to_string()))?;
    let spec = stack::parse_stack_spec(&spec_text)?;
    let input = read_input(&input_arg)?;

    let registry = textreaders::registry();
    let report = pipeline::run_pipeline(&registry, &spec, &input, &args.queries, args.engine)?;
    match args.format {
        ReportFormat::Text => print!("{}", report.render_text()),
        ReportFormat::Json => print!("{}", report.render_json()),
    }
    Ok(if report.any_unsupported() {
        2
    } else if report.any_error() {
        1
    } else {
        0
    })
}

fn read_input(input: &str) -> Result<String, Error> {
    if input == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    std::fs::read_to_string(input)
        .map_err(|error| Error::Config(format!("cannot read '{input}': {error}")))
}

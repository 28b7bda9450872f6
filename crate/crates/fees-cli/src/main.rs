//! `fees`: batch front end for the airport fee engines.
//!
//! Exit codes: 0 success, 1 input error (missing/malformed dataset),
//! 2 method/structure mismatch (e.g. Owen fees on a code-sharing dataset
//! without an alliance coarsening).

use airport_games::dataset::{coarsen_to_alliances, parse_dataset, Dataset};
use airport_games::error::{AirportError, DatasetError};
use airport_games::report::{build_comparison, build_report, compare, OutputFormat, ReportOptions};
use airport_games::AirportProblem;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fees",
    version,
    about = "Runway fee schedules for airport movements: Shapley, Owen and configuration values"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shapley fees: movements priced as isolated players.
    Shapley(RunArgs),
    /// Owen fees: movements grouped into disjoint airlines or alliances.
    Owen(RunArgs),
    /// Configuration fees: code-sharing aware, airlines may overlap.
    Configuration(RunArgs),
    /// All methods side by side: per-type averages and per-alliance totals.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Dataset file.
    #[arg(long)]
    input: PathBuf,
    /// Print exact fractions instead of rounded decimals.
    #[arg(long)]
    exact: bool,
    /// Append per-airline totals.
    #[arg(long)]
    per_airline: bool,
    /// Show each movement's per-airline share decomposition.
    #[arg(long)]
    split_by_airline: bool,
    /// Coarsen airlines into the dataset's [alliances] blocks first.
    #[arg(long)]
    alliances: bool,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Dataset file.
    #[arg(long)]
    input: PathBuf,
    /// Print exact fractions instead of rounded decimals.
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

enum CliError {
    /// Unreadable or malformed input: exit 1.
    Input(String),
    /// The method does not fit the dataset's structure: exit 2.
    Structure(String),
}

impl From<DatasetError> for CliError {
    fn from(e: DatasetError) -> Self {
        match e {
            DatasetError::Airport(AirportError::CodeSharingPresent) => {
                CliError::Structure(AirportError::CodeSharingPresent.to_string())
            }
            DatasetError::MissingAlliances => CliError::Structure(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<AirportError> for CliError {
    fn from(e: AirportError) -> Self {
        match e {
            AirportError::CodeSharingPresent => CliError::Structure(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn effective_problem(ds: &Dataset, use_alliances: bool) -> Result<AirportProblem, CliError> {
    if use_alliances {
        let map = ds.alliances.as_ref().ok_or(DatasetError::MissingAlliances)?;
        Ok(coarsen_to_alliances(&ds.problem, map)?.problem)
    } else {
        Ok(ds.problem.clone())
    }
}

fn run_method(method: &str, args: &RunArgs) -> Result<(), CliError> {
    let ds = parse_dataset(&args.input)?;
    let problem = effective_problem(&ds, args.alliances)?;
    let report = match method {
        "shapley" => airport_games::airport::shapley_closed(&problem),
        "owen" => airport_games::airport::owen_closed(&problem)?,
        "configuration" => airport_games::airport::configuration_closed(&problem),
        _ => unreachable!(),
    };
    let opts = ReportOptions {
        exact: args.exact,
        per_airline: args.per_airline,
        split_by_airline: args.split_by_airline,
        format: args.format.into(),
    };
    let rendered =
        build_report(&problem, &report, ds.currency.as_deref(), &opts).render(opts.format);
    write_out(&rendered, args.output.as_deref())
}

fn run_compare(args: &CompareArgs) -> Result<(), CliError> {
    let ds = parse_dataset(&args.input)?;
    let cmp = compare(&ds)?;
    let opts = ReportOptions {
        exact: args.exact,
        format: args.format.into(),
        ..Default::default()
    };
    let rendered = build_comparison(&cmp, ds.currency.as_deref(), &opts).render(opts.format);
    write_out(&rendered, args.output.as_deref())
}

fn write_out(text: &str, output: Option<&std::path::Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Shapley(args) => run_method("shapley", args),
        Command::Owen(args) => run_method("owen", args),
        Command::Configuration(args) => run_method("configuration", args),
        Command::Compare(args) => run_compare(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Structure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

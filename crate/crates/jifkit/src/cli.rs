//! Command-line front end.

use std::fs::File;
use std::io::{self, BufReader, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jifkit_core::stats::{
    group_summary, maturity_tally, pooled_summary, variance_decomposition, CorrelationMatrix,
    CorrelationMethod, Grouping, IndicatorName, IndicatorVector, ParseIndicatorNameError,
    SdConvention, StatsError,
};
use jifkit_core::{citation_age_profile, report, Dataset, IndicatorError};
use thiserror::Error;

use crate::ingest::{parse_dataset, IngestError, Schema};
use crate::output::{
    write_correlations, write_profiles, write_reports, write_summary, write_variance,
    CorrelationBlock, Format, OutputError, Profile, ReportDocument, SummaryReport,
};

/// Label of the block that pools every journal.
pub const TOTAL: &str = "Total";

#[derive(Debug, Parser)]
#[command(
    name = "jifkit",
    version,
    about = "Rolling two-year impact windows, maximum impact factors and impact maturity times"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-journal rolling windows, 2M-JIF, 5-JIF and maturity time.
    Compute(CommonArgs),
    /// Correlation matrices per category and over all journals.
    Correlate(CorrelateArgs),
    /// Median, mean and standard deviation per category, plus maturity-time tallies.
    Summarize(SummarizeArgs),
    /// Within- and between-category variance of each indicator.
    Variance(GroupedArgs),
    /// Citations, items and citation rate by age.
    Profile(ProfileArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Dataset to read.
    #[arg(long, short = 'i', value_name = "FILE")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = SchemaArg::Wide)]
    pub schema: SchemaArg,
    #[arg(long, short = 'f', value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Write here instead of standard output.
    #[arg(long, short = 'o', value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GroupedArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, value_enum, default_value_t = GroupBy::Category)]
    pub group_by: GroupBy,
    /// Comma-separated indicators such as `R_1,R_2,2M-JIF,5-JIF`; defaults to every rolling window and 2M-JIF.
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub indicators: Option<Vec<String>>,
}

#[derive(Debug, Clone, Args)]
pub struct CorrelateArgs {
    #[command(flatten)]
    pub grouped: GroupedArgs,
    #[arg(long, value_enum, default_value_t = MethodArg::Pearson)]
    pub method: MethodArg,
}

#[derive(Debug, Clone, Args)]
pub struct SummarizeArgs {
    #[command(flatten)]
    pub grouped: GroupedArgs,
    #[arg(long, value_enum, default_value_t = SdArg::Sample)]
    pub sd: SdArg,
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Only this journal id.
    #[arg(long, value_name = "ID")]
    pub journal: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemaArg {
    Long,
    Wide,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Pearson,
    Spearman,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SdArg {
    Sample,
    Population,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupBy {
    Category,
}

/// Where to read, how to parse and where to write.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub schema: Schema,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl From<&CommonArgs> for RunConfig {
    fn from(args: &CommonArgs) -> Self {
        RunConfig {
            input: args.input.clone(),
            schema: match args.schema {
                SchemaArg::Long => Schema::Long,
                SchemaArg::Wide => Schema::Wide,
            },
            format: match args.format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Tsv => Format::Tsv,
                FormatArg::Json => Format::Json,
            },
            output: args.output.clone(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot open {}: {source}", path.display())]
    Open { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Ingest { path: PathBuf, source: IngestError },
    #[error("{}: dataset has no journals", path.display())]
    EmptyDataset { path: PathBuf },
    #[error("--indicators: {0}")]
    IndicatorName(#[from] ParseIndicatorNameError),
    #[error("{name}: {source}")]
    Indicator {
        name: IndicatorName,
        source: IndicatorError,
    },
    #[error("{context}: {source}")]
    Stats { context: String, source: StatsError },
    #[error("no journal with id {0:?}")]
    UnknownJournal(String),
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Output(#[from] OutputError),
}

fn load(config: &RunConfig) -> Result<Dataset, CliError> {
    let path = &config.input;
    let file = File::open(path).map_err(|source| CliError::Open {
        path: path.clone(),
        source,
    })?;
    let dataset =
        parse_dataset(BufReader::new(file), config.schema).map_err(|source| CliError::Ingest {
            path: path.clone(),
            source,
        })?;
    if dataset.is_empty() {
        return Err(CliError::EmptyDataset { path: path.clone() });
    }
    Ok(dataset)
}

fn indicator_list(
    requested: Option<&[String]>,
    horizon: usize,
) -> Result<Vec<IndicatorName>, CliError> {
    match requested {
        Some(names) => Ok(names.iter().map(|n| n.parse()).collect::<Result<_, _>>()?),
        None => Ok(IndicatorName::rolling_and_max(horizon.saturating_sub(1))),
    }
}

fn vectors(dataset: &Dataset, names: &[IndicatorName]) -> Result<Vec<IndicatorVector>, CliError> {
    names
        .iter()
        .map(|&name| {
            IndicatorVector::from_records(name, dataset.records())
                .map_err(|source| CliError::Indicator { name, source })
        })
        .collect()
}

fn stats_err(context: impl Into<String>) -> impl FnOnce(StatsError) -> CliError {
    let context = context.into();
    move |source| CliError::Stats { context, source }
}

/// Renders into memory so that a failure never leaves a partial file behind.
fn emit(
    config: &RunConfig,
    render: impl FnOnce(&mut Vec<u8>) -> Result<(), OutputError>,
) -> Result<(), CliError> {
    let mut buffer = Vec::new();
    render(&mut buffer)?;
    match &config.output {
        Some(path) => std::fs::write(path, &buffer).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(&buffer)
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Write {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

pub fn cmd_compute(args: &CommonArgs) -> Result<(), CliError> {
    let config = RunConfig::from(args);
    let dataset = load(&config)?;
    let document = ReportDocument {
        census_year: dataset.census_year(),
        horizon: dataset.horizon(),
        journals: dataset.records().iter().map(report).collect(),
    };
    emit(&config, |out| write_reports(out, config.format, &document))
}

pub fn cmd_correlate(args: &CorrelateArgs) -> Result<(), CliError> {
    let config = RunConfig::from(&args.grouped.common);
    let dataset = load(&config)?;
    let names = indicator_list(args.grouped.indicators.as_deref(), dataset.horizon())?;
    let method = match args.method {
        MethodArg::Pearson => CorrelationMethod::Pearson,
        MethodArg::Spearman => CorrelationMethod::Spearman,
    };
    let all = vectors(&dataset, &names)?;
    let grouping = Grouping::by_category(&dataset);
    let mut blocks = Vec::new();
    for category in grouping.categories() {
        let members: Vec<IndicatorVector> = all
            .iter()
            .map(|v| v.filter(|id| grouping.category_of(id) == Some(category)))
            .collect();
        let matrix = CorrelationMatrix::pairwise(&members, method).map_err(stats_err(category))?;
        blocks.push(CorrelationBlock {
            category: category.to_string(),
            matrix,
        });
    }
    let matrix = CorrelationMatrix::pairwise(&all, method).map_err(stats_err(TOTAL))?;
    blocks.push(CorrelationBlock {
        category: TOTAL.to_string(),
        matrix,
    });
    emit(&config, |out| {
        write_correlations(out, config.format, method, &blocks)
    })
}

pub fn cmd_summarize(args: &SummarizeArgs) -> Result<(), CliError> {
    let config = RunConfig::from(&args.grouped.common);
    let dataset = load(&config)?;
    let names = indicator_list(args.grouped.indicators.as_deref(), dataset.horizon())?;
    let sd = match args.sd {
        SdArg::Sample => SdConvention::Sample,
        SdArg::Population => SdConvention::Population,
    };
    let grouping = Grouping::by_category(&dataset);
    let mut per_indicator = Vec::new();
    for vector in vectors(&dataset, &names)? {
        let context = vector.name().to_string();
        let mut rows = group_summary(&vector, &grouping, sd).map_err(stats_err(context.clone()))?;
        rows.push(pooled_summary(&vector, TOTAL, sd).map_err(stats_err(context))?);
        per_indicator.push(rows);
    }
    let reports: Vec<_> = dataset.records().iter().map(report).collect();
    let tallies = maturity_tally(&reports, &grouping).map_err(stats_err("maturity time"))?;
    let total = tallies.total(TOTAL);
    let mut rows = tallies.categories;
    rows.push(total);
    let summary = SummaryReport {
        sd,
        indicators: names,
        per_indicator,
        tallies: rows,
    };
    emit(&config, |out| write_summary(out, config.format, &summary))
}

pub fn cmd_variance(args: &GroupedArgs) -> Result<(), CliError> {
    let config = RunConfig::from(&args.common);
    let dataset = load(&config)?;
    let names = indicator_list(args.indicators.as_deref(), dataset.horizon())?;
    let grouping = Grouping::by_category(&dataset);
    let rows = vectors(&dataset, &names)?
        .iter()
        .map(|v| variance_decomposition(v, &grouping).map_err(stats_err(v.name().to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    emit(&config, |out| write_variance(out, config.format, &rows))
}

pub fn cmd_profile(args: &ProfileArgs) -> Result<(), CliError> {
    let config = RunConfig::from(&args.common);
    let dataset = load(&config)?;
    let profiles: Vec<Profile> = dataset
        .records()
        .iter()
        .filter(|r| args.journal.as_deref().is_none_or(|id| r.id() == id))
        .map(|r| Profile {
            journal: r.id().to_string(),
            rows: citation_age_profile(r),
        })
        .collect();
    if let (Some(id), true) = (&args.journal, profiles.is_empty()) {
        return Err(CliError::UnknownJournal(id.clone()));
    }
    emit(&config, |out| write_profiles(out, config.format, &profiles))
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Correlate(a) => cmd_correlate(a),
        Command::Summarize(a) => cmd_summarize(a),
        Command::Variance(a) => cmd_variance(a),
        Command::Profile(a) => cmd_profile(a),
    }
}

fn use_color() -> bool {
    std::env::var_os("JIFKIT_NO_COLOR").is_none() && io::stderr().is_terminal()
}

/// `jifkit: error: ...` on standard error.
pub fn report_error(err: &CliError) {
    let prefix = if use_color() {
        "\x1b[1;31merror\x1b[0m"
    } else {
        "error"
    };
    let _ = writeln!(io::stderr().lock(), "jifkit: {prefix}: {err}");
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(err) => {
            report_error(&err);
            1
        }
    }
}

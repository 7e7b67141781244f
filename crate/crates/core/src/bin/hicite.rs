use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use hicite::corpus::Percentile;
use hicite::report::{emit, load_input, run, InputKind, OutputFormat, RunConfig, Selection};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Articles,
    JournalTable,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Journal impact indicators based on the share of highly cited articles,
/// with descriptive, ANOVA, correlation and ranking reports.
#[derive(Debug, Parser)]
#[command(name = "hicite", version)]
struct Cli {
    /// Input CSV file; repeat to concatenate several files.
    #[arg(long, required = true, value_name = "PATH")]
    input: Vec<PathBuf>,

    /// Article records (journal_id,category_id,pub_year,citations) or a
    /// journal indicator table.
    #[arg(long, value_enum, default_value = "journal-table")]
    kind: Kind,

    /// Last year counted for citations; also closes every window.
    #[arg(long, default_value_t = 2013, value_name = "YEAR")]
    census: i32,

    /// Comma-separated percentiles.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    q: Option<Vec<String>>,

    /// Comma-separated window lengths in years.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    t: Option<Vec<u32>>,

    /// descriptives, anova, correlations, rankings, figures, fig1, fig2,
    /// fig3 or all. Repeatable or comma-separated.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "all",
        value_name = "REPORT"
    )]
    report: Vec<String>,

    /// Group descriptives and correlations by category.
    #[arg(long)]
    per_category: bool,

    #[arg(long, value_enum, default_value = "csv")]
    format: Format,

    /// Directory for one file per table; standard output when omitted.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

fn config_from(cli: Cli) -> hicite::Result<RunConfig> {
    let mut config = RunConfig {
        inputs: cli.input,
        kind: match cli.kind {
            Kind::Articles => InputKind::Articles,
            Kind::JournalTable => InputKind::JournalTable,
        },
        census_year: cli.census,
        format: match cli.format {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        },
        out_dir: cli.out,
        per_category: cli.per_category,
        grid_explicit: cli.q.is_some() || cli.t.is_some(),
        ..RunConfig::default()
    };
    if let Some(qs) = cli.q {
        config.qs = qs
            .iter()
            .map(|s| s.parse::<Percentile>())
            .collect::<Result<_, _>>()?;
    }
    if let Some(ts) = cli.t {
        config.ts = ts;
    }
    for r in &cli.report {
        config.select(r.parse::<Selection>()?);
    }
    config.validate()?;
    Ok(config)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let config = match config_from(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run `hicite --help` for usage");
            return ExitCode::from(2);
        }
    };

    let result = load_input(&config).and_then(|input| {
        let output = run(&config, &input)?;
        for w in &output.warnings {
            eprintln!("warning: {w}");
        }
        emit(&output, &config, &mut io::stdout().lock())
    });
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

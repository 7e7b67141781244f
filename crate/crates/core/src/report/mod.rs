//! Report assembly: reproduces descriptive, ANOVA, correlation, ranking and
//! figure-data tables from a journal indicator table (ingested or computed
//! from articles) and writes them as CSV or JSON.

mod config;
mod output;
mod reports;
mod run;
mod variable;

pub use config::{Figure, InputKind, OutputFormat, ReportKind, RunConfig, Selection};
pub use output::{Cell, ReportTable};
pub use reports::{
    run_anova_report, run_correlation_report, run_descriptives_report, run_figure_data_export,
    run_ranking_report, ReportOutput,
};
pub use run::{emit, load_input, run, LoadedInput};
pub use variable::Variable;

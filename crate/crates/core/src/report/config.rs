use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::corpus::Percentile;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputKind {
    Articles,
    JournalTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ReportKind {
    Descriptives,
    Anova,
    Correlations,
    Rankings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Figure {
    MeanCitations,
    Thresholds,
    Distributions,
}

impl Figure {
    pub fn file_stem(self) -> &'static str {
        match self {
            Figure::MeanCitations => "fig1_mean_citations",
            Figure::Thresholds => "fig2_thresholds",
            Figure::Distributions => "fig3_distributions",
        }
    }

    pub fn needs_articles(self) -> bool {
        !matches!(self, Figure::Distributions)
    }
}

/// What a single `--report` value selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Report(ReportKind),
    /// `figures`: every figure the input can support.
    Figures,
    Figure(Figure),
    All,
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "descriptives" => Selection::Report(ReportKind::Descriptives),
            "anova" => Selection::Report(ReportKind::Anova),
            "correlations" => Selection::Report(ReportKind::Correlations),
            "rankings" => Selection::Report(ReportKind::Rankings),
            "figures" => Selection::Figures,
            "fig1" => Selection::Figure(Figure::MeanCitations),
            "fig2" => Selection::Figure(Figure::Thresholds),
            "fig3" => Selection::Figure(Figure::Distributions),
            "all" => Selection::All,
            other => return Err(Error::Config(format!("unknown report `{other}`"))),
        })
    }
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputKind::Articles => "articles",
            InputKind::JournalTable => "journal-table",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub kind: InputKind,
    pub census_year: i32,
    pub qs: Vec<Percentile>,
    pub ts: Vec<u32>,
    pub format: OutputFormat,
    /// `None` writes to standard output.
    pub out_dir: Option<PathBuf>,
    pub reports: BTreeSet<ReportKind>,
    /// Figures asked for by name; requesting fig1/fig2 on journal-level
    /// input is an error.
    pub figures: BTreeSet<Figure>,
    /// `figures` or `all`: emit whatever the input supports.
    pub all_figures: bool,
    pub per_category: bool,
    /// qs/ts given explicitly rather than defaulted.
    pub grid_explicit: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            inputs: Vec::new(),
            kind: InputKind::JournalTable,
            census_year: 2013,
            qs: Percentile::defaults(),
            ts: vec![2, 3, 4, 5],
            format: OutputFormat::Csv,
            out_dir: None,
            reports: BTreeSet::new(),
            figures: BTreeSet::new(),
            all_figures: false,
            per_category: false,
            grid_explicit: false,
        }
    }
}

impl RunConfig {
    pub fn select(&mut self, selection: Selection) {
        match selection {
            Selection::Report(r) => {
                self.reports.insert(r);
            }
            Selection::Figure(f) => {
                self.figures.insert(f);
            }
            Selection::Figures => self.all_figures = true,
            Selection::All => {
                self.reports.extend([
                    ReportKind::Descriptives,
                    ReportKind::Anova,
                    ReportKind::Correlations,
                    ReportKind::Rankings,
                ]);
                self.all_figures = true;
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.inputs.is_empty() {
            return Err(Error::Config("at least one --input is required".into()));
        }
        if self.qs.is_empty() || self.ts.is_empty() {
            return Err(Error::Config("--q and --t lists must be non-empty".into()));
        }
        if self.ts.contains(&0) {
            return Err(Error::Config("window lengths in --t must be >= 1".into()));
        }
        if !(1900..=2100).contains(&self.census_year) {
            return Err(Error::Config(format!(
                "census year {} outside 1900..=2100",
                self.census_year
            )));
        }
        if self.reports.is_empty() && self.figures.is_empty() && !self.all_figures {
            return Err(Error::Config("no report selected".into()));
        }
        Ok(())
    }
}

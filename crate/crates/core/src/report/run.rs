use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use super::config::{Figure, InputKind, OutputFormat, ReportKind, RunConfig};
use super::reports::{
    descriptives, run_anova_report, run_correlation_report, run_figure_data_export,
    run_ranking_report, ReportOutput,
};
use super::variable::Variable;
use crate::corpus::{
    parse_article_corpus, parse_journal_indicator_table, validate_corpus, ArticleCorpus,
    JournalIndicatorTable, PartKey,
};
use crate::error::{Error, Result};
use crate::indicators::compute_indicator_table;

#[derive(Debug, Clone)]
pub enum LoadedInput {
    /// Article data plus the indicator table computed from it.
    Articles {
        corpus: ArticleCorpus,
        table: JournalIndicatorTable,
    },
    Journals(JournalIndicatorTable),
}

impl LoadedInput {
    pub fn table(&self) -> &JournalIndicatorTable {
        match self {
            LoadedInput::Articles { table, .. } | LoadedInput::Journals(table) => table,
        }
    }

    pub fn corpus(&self) -> Option<&ArticleCorpus> {
        match self {
            LoadedInput::Articles { corpus, .. } => Some(corpus),
            LoadedInput::Journals(_) => None,
        }
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path, e))
}

fn in_file(path: &Path) -> impl FnOnce(Error) -> Error + '_ {
    move |e| match e {
        e @ Error::Io { .. } => e,
        e => Error::InFile {
            path: path.to_path_buf(),
            source: Box::new(e),
        },
    }
}

pub fn load_input(config: &RunConfig) -> Result<LoadedInput> {
    match config.kind {
        InputKind::Articles => {
            let mut records = Vec::new();
            for path in &config.inputs {
                let corpus =
                    parse_article_corpus(open(path)?, config.census_year).map_err(in_file(path))?;
                records.extend_from_slice(corpus.records());
            }
            let corpus = ArticleCorpus::new(config.census_year, records)?;
            let table =
                compute_indicator_table(&corpus, &config.qs, &config.ts, config.census_year)?;
            Ok(LoadedInput::Articles { corpus, table })
        }
        InputKind::JournalTable => {
            let mut tables = Vec::new();
            for path in &config.inputs {
                tables.push(parse_journal_indicator_table(open(path)?).map_err(in_file(path))?);
            }
            Ok(LoadedInput::Journals(JournalIndicatorTable::merge(tables)?))
        }
    }
}

/// Standard variables, with the pArt columns cut down to an explicitly
/// requested grid.
fn variables(config: &RunConfig, table: &JournalIndicatorTable) -> Result<Vec<Variable>> {
    let mut vars = Variable::standard(table);
    if config.grid_explicit {
        let grid = PartKey::grid(&config.qs, &config.ts);
        if let Some(k) = grid.iter().find(|k| !table.part_keys().contains(k)) {
            return Err(Error::Config(format!(
                "input has no {} column",
                k.column_name()
            )));
        }
        vars.retain(|v| match v {
            Variable::Part(k) => grid.contains(k),
            _ => true,
        });
    }
    Ok(vars)
}

fn restrict(defaults: Vec<Variable>, allowed: &[Variable]) -> Vec<Variable> {
    defaults
        .into_iter()
        .filter(|v| allowed.contains(v))
        .collect()
}

/// Executes every selected report against already loaded input.
pub fn run(config: &RunConfig, input: &LoadedInput) -> Result<ReportOutput> {
    let table = input.table();
    let vars = variables(config, table)?;
    let mut out = ReportOutput::default();

    if let Some(corpus) = input.corpus() {
        for cell in validate_corpus(corpus).small_cells {
            out.warnings.push(format!(
                "category {} year {} has only {} articles; its thresholds are coarse",
                cell.category_id, cell.pub_year, cell.n_articles
            ));
        }
    }

    for report in &config.reports {
        out.extend(match report {
            ReportKind::Descriptives => descriptives(table, &vars, config.per_category)?,
            ReportKind::Anova => run_anova_report(table, &vars)?,
            ReportKind::Correlations => run_correlation_report(
                table,
                &restrict(Variable::correlation_set(table), &vars),
                config.per_category,
            )?,
            ReportKind::Rankings => {
                run_ranking_report(table, &restrict(Variable::ranking_set(table), &vars))?
            }
        });
    }

    let mut figures: BTreeSet<Figure> = config.figures.clone();
    if config.all_figures {
        figures.insert(Figure::Distributions);
        if input.corpus().is_some() {
            figures.extend([Figure::MeanCitations, Figure::Thresholds]);
        } else {
            out.warnings
                .push("fig1 and fig2 skipped: they need article-level input".to_owned());
        }
    }
    if !figures.is_empty() {
        out.extend(run_figure_data_export(
            input.corpus(),
            table,
            &config.qs,
            &figures,
        )?);
    }
    Ok(out)
}

/// Writes each table to `<out_dir>/<name>.<ext>`, or all of them to
/// `stdout` when no directory is configured. Returns the files written.
pub fn emit(
    output: &ReportOutput,
    config: &RunConfig,
    stdout: &mut dyn Write,
) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    match &config.out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
            for t in &output.tables {
                let path = dir.join(format!("{}.{}", t.name, config.format.extension()));
                let body = match config.format {
                    OutputFormat::Csv => t.to_csv()?,
                    OutputFormat::Json => serde_json::to_string_pretty(&t.to_json())? + "\n",
                };
                fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
                written.push(path);
            }
        }
        None => {
            let body = match config.format {
                OutputFormat::Csv => {
                    let mut s = String::new();
                    for (i, t) in output.tables.iter().enumerate() {
                        if i > 0 {
                            s.push('\n');
                        }
                        s.push_str(&format!("# {}\n", t.name));
                        s.push_str(&t.to_csv()?);
                    }
                    s
                }
                OutputFormat::Json => {
                    let obj: serde_json::Map<String, serde_json::Value> = output
                        .tables
                        .iter()
                        .map(|t| (t.name.clone(), t.to_json()))
                        .collect();
                    serde_json::to_string_pretty(&obj)? + "\n"
                }
            };
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| Error::io("<stdout>", e))?;
        }
    }
    Ok(written)
}

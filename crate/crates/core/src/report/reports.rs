use std::collections::BTreeSet;

use super::config::Figure;
use super::output::{Cell, ReportTable};
use super::variable::Variable;
use crate::corpus::{ArticleCorpus, JournalIndicatorRow, JournalIndicatorTable, Percentile};
use crate::error::{Error, Result};
use crate::indicators::{build_threshold_table, mean_citation_rate, Scope};
use crate::stats::{
    competition_rank, descriptive_stats, distribution_summary, one_way_anova, spearman,
    welch_t_test,
};

/// Tables produced by one report plus non-fatal diagnostics.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReportOutput {
    pub tables: Vec<ReportTable>,
    pub warnings: Vec<String>,
}

impl ReportOutput {
    pub fn table(&self, name: &str) -> Option<&ReportTable> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn extend(&mut self, other: ReportOutput) {
        self.tables.extend(other.tables);
        self.warnings.extend(other.warnings);
    }
}

const ALL: &str = "all";

fn groups(
    table: &JournalIndicatorTable,
    per_category: bool,
) -> Vec<(String, Vec<&JournalIndicatorRow>)> {
    if per_category {
        table
            .categories()
            .into_iter()
            .map(|c| (c.to_owned(), rows_in(table, c)))
            .collect()
    } else {
        vec![(ALL.to_owned(), table.rows().iter().collect())]
    }
}

fn rows_in<'a>(table: &'a JournalIndicatorTable, category: &str) -> Vec<&'a JournalIndicatorRow> {
    table
        .rows()
        .iter()
        .filter(|r| r.category_id == category)
        .collect()
}

fn present(rows: &[&JournalIndicatorRow], var: Variable) -> Vec<f64> {
    rows.iter().filter_map(|r| var.value(r)).collect()
}

fn blanks(n: usize) -> impl Iterator<Item = Cell> {
    std::iter::repeat_n(Cell::Empty, n)
}

/// Obs, mean, SD, CV, min, max, skewness and kurtosis for every standard
/// variable, over the whole table or per category.
pub fn run_descriptives_report(
    table: &JournalIndicatorTable,
    per_category: bool,
) -> Result<ReportOutput> {
    descriptives(table, &Variable::standard(table), per_category)
}

pub(crate) fn descriptives(
    table: &JournalIndicatorTable,
    variables: &[Variable],
    per_category: bool,
) -> Result<ReportOutput> {
    if table.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut out = ReportOutput::default();
    let mut t = ReportTable::new(
        "descriptives",
        &[
            "category", "variable", "obs", "mean", "sd", "cv", "min", "max", "skewness", "kurtosis",
        ],
    );
    for (cat, rows) in groups(table, per_category) {
        for &var in variables {
            match descriptive_stats(&present(&rows, var)) {
                Ok(d) => t.push(vec![
                    cat.as_str().into(),
                    var.to_string().into(),
                    d.n.into(),
                    d.mean.into(),
                    d.sd.into(),
                    d.cv.into(),
                    d.min.into(),
                    d.max.into(),
                    d.skewness.into(),
                    d.kurtosis.into(),
                ]),
                Err(Error::EmptySample) => out.warnings.push(format!(
                    "descriptives: no values for {var} in category {cat}"
                )),
                Err(e) => return Err(e),
            }
        }
    }
    out.tables.push(t);
    Ok(out)
}

/// Between-category one-way ANOVA per variable, the pArt column with the
/// largest p-value, and Welch t-tests for every category pair.
pub fn run_anova_report(
    table: &JournalIndicatorTable,
    variables: &[Variable],
) -> Result<ReportOutput> {
    let cats = table.categories();
    if cats.len() < 2 {
        return Err(Error::InsufficientGroups(cats.len()));
    }
    let by_cat: Vec<(&str, Vec<&JournalIndicatorRow>)> =
        cats.iter().map(|&c| (c, rows_in(table, c))).collect();

    let mut out = ReportOutput::default();
    let mut main = ReportTable::new(
        "anova",
        &[
            "variable",
            "obs",
            "groups",
            "eta_squared",
            "f",
            "p",
            "df_between",
            "df_within",
            "status",
        ],
    );
    let mut pairs = ReportTable::new(
        "anova_pairwise",
        &[
            "variable",
            "category_a",
            "category_b",
            "mean_a",
            "mean_b",
            "t",
            "df",
            "p",
            "significant_05",
            "status",
        ],
    );
    let mut best: Option<(Variable, f64)> = None;

    for &var in variables {
        let samples: Vec<(&str, Vec<f64>)> = by_cat
            .iter()
            .map(|(c, rows)| (*c, present(rows, var)))
            .filter(|(_, v)| !v.is_empty())
            .collect();
        let obs: usize = samples.iter().map(|(_, v)| v.len()).sum();
        let values: Vec<&[f64]> = samples.iter().map(|(_, v)| v.as_slice()).collect();
        let mut row = vec![var.to_string().into(), obs.into(), samples.len().into()];
        match one_way_anova(&values) {
            Ok(r) => {
                row.extend([
                    r.eta_squared.into(),
                    r.f_stat.into(),
                    r.p_value.into(),
                    r.df_between.into(),
                    r.df_within.into(),
                    if r.is_f_infinite() {
                        "infinite F"
                    } else {
                        "ok"
                    }
                    .into(),
                ]);
                if var.is_part() && best.is_none_or(|(_, p)| r.p_value > p) {
                    best = Some((var, r.p_value));
                }
            }
            Err(e) => {
                out.warnings.push(format!("anova: {var}: {e}"));
                row.extend(blanks(5));
                row.push(e.to_string().into());
            }
        }
        main.push(row);

        for (i, (ca, a)) in samples.iter().enumerate() {
            for (cb, b) in &samples[i + 1..] {
                let mut row: Vec<Cell> = vec![var.to_string().into(), (*ca).into(), (*cb).into()];
                match welch_t_test(a, b) {
                    Ok(w) => row.extend([
                        w.mean_a.into(),
                        w.mean_b.into(),
                        w.t_stat.into(),
                        w.df.into(),
                        w.p_value.into(),
                        (w.p_value < 0.05).into(),
                        "ok".into(),
                    ]),
                    Err(e) => {
                        row.extend(blanks(6));
                        row.push(e.to_string().into());
                    }
                }
                pairs.push(row);
            }
        }
    }

    let mut summary = ReportTable::new("anova_summary", &["criterion", "variable", "p"]);
    match best {
        Some((var, p)) => summary.push(vec![
            "highest p among pArt".into(),
            var.to_string().into(),
            p.into(),
        ]),
        None => out
            .warnings
            .push("anova: no pArt variable produced a p-value".to_owned()),
    }
    out.tables.extend([main, summary, pairs]);
    Ok(out)
}

/// Lower-triangular Spearman matrices in long form, one block per category
/// (or a single `all` block).
pub fn run_correlation_report(
    table: &JournalIndicatorTable,
    variables: &[Variable],
    per_category: bool,
) -> Result<ReportOutput> {
    let mut out = ReportOutput::default();
    let mut t = ReportTable::new(
        "correlations",
        &[
            "category",
            "variable_x",
            "variable_y",
            "n",
            "rho",
            "t",
            "p",
            "significant_99",
            "status",
        ],
    );
    for (cat, rows) in groups(table, per_category) {
        let columns: Vec<Vec<Option<f64>>> = variables
            .iter()
            .map(|v| rows.iter().map(|r| v.value(r)).collect())
            .collect();
        for (i, x) in variables.iter().enumerate() {
            for (j, y) in variables.iter().enumerate().take(i + 1) {
                let mut row: Vec<Cell> = vec![
                    cat.as_str().into(),
                    x.to_string().into(),
                    y.to_string().into(),
                ];
                match spearman(&columns[i], &columns[j]) {
                    Ok(r) => row.extend([
                        r.n.into(),
                        r.rho.into(),
                        r.t_stat.into(),
                        r.p_value.into(),
                        r.significant_99.into(),
                        "ok".into(),
                    ]),
                    Err(e) => {
                        out.warnings
                            .push(format!("correlations: {cat}: {x} vs {y}: {e}"));
                        row.extend(blanks(5));
                        row.push(format!("unavailable: {e}").into());
                    }
                }
                t.push(row);
            }
        }
    }
    out.tables.push(t);
    Ok(out)
}

/// Competition ranks (best value first) within each category; missing
/// values leave the cell blank.
pub fn run_ranking_report(
    table: &JournalIndicatorTable,
    variables: &[Variable],
) -> Result<ReportOutput> {
    if table.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut out = ReportOutput::default();
    let names: Vec<String> = variables.iter().map(Variable::to_string).collect();
    let mut columns = vec!["category", "journal_id", "title"];
    columns.extend(names.iter().map(String::as_str));
    let mut t = ReportTable::new("rankings", &columns);

    for cat in table.categories() {
        let rows = rows_in(table, cat);
        let mut rankings = Vec::with_capacity(variables.len());
        for &var in variables {
            let values: Vec<(String, Option<f64>)> = rows
                .iter()
                .map(|r| (r.journal_id.clone(), var.value(r)))
                .collect();
            match competition_rank(&values, true) {
                Ok(r) => rankings.push(Some(r)),
                Err(Error::EmptyRanking) => {
                    out.warnings
                        .push(format!("rankings: no values for {var} in category {cat}"));
                    rankings.push(None);
                }
                Err(e) => return Err(e),
            }
        }
        for r in rows {
            let mut row: Vec<Cell> = vec![
                cat.into(),
                r.journal_id.as_str().into(),
                r.title.as_str().into(),
            ];
            row.extend(rankings.iter().map(|ranking| {
                ranking
                    .as_ref()
                    .and_then(|m| m.get(&r.journal_id))
                    .map_or(Cell::Empty, |&p| p.into())
            }));
            t.push(row);
        }
    }
    out.tables.push(t);
    Ok(out)
}

/// Data behind the three figures: yearly mean citations per category,
/// percentile thresholds per cell, and per-category distribution summaries
/// of every variable. The first two need article-level data.
pub fn run_figure_data_export(
    corpus: Option<&ArticleCorpus>,
    table: &JournalIndicatorTable,
    qs: &[Percentile],
    figures: &BTreeSet<Figure>,
) -> Result<ReportOutput> {
    let mut out = ReportOutput::default();
    for &fig in figures {
        let corpus = match (fig.needs_articles(), corpus) {
            (true, None) => {
                return Err(Error::Capability(format!(
                    "{} needs article-level input (--kind articles); a journal table carries no per-article citations",
                    fig.file_stem()
                )))
            }
            (_, c) => c,
        };
        let mut t = match fig {
            Figure::MeanCitations => {
                let corpus = corpus.expect("checked above");
                let mut t =
                    ReportTable::new(fig.file_stem(), &["category", "pub_year", "mean", "n"]);
                for ((cat, year), _) in corpus.cells() {
                    let r = mean_citation_rate(corpus, &Scope::Category(cat.clone()), *year)?;
                    t.push(vec![
                        cat.as_str().into(),
                        (*year).into(),
                        r.mean_citations.into(),
                        r.n_articles.into(),
                    ]);
                }
                t
            }
            Figure::Thresholds => {
                let corpus = corpus.expect("checked above");
                let thresholds = build_threshold_table(corpus, qs)?;
                let mut t = ReportTable::new(
                    fig.file_stem(),
                    &[
                        "category_id",
                        "pub_year",
                        "q",
                        "min_citations",
                        "n_articles",
                    ],
                );
                for (cat, year, q, min) in thresholds.entries() {
                    let n = thresholds.cell_size(cat, year).unwrap_or(0);
                    t.push(vec![
                        cat.into(),
                        year.into(),
                        q.to_string().into(),
                        min.into(),
                        n.into(),
                    ]);
                }
                t
            }
            Figure::Distributions => {
                let mut t = ReportTable::new(
                    fig.file_stem(),
                    &[
                        "category", "variable", "min", "q1", "median", "q3", "max", "mean",
                    ],
                );
                for cat in table.categories() {
                    let rows = rows_in(table, cat);
                    for var in Variable::standard(table) {
                        let Ok(s) = distribution_summary(&present(&rows, var)) else {
                            continue;
                        };
                        t.push(vec![
                            cat.into(),
                            var.to_string().into(),
                            s.min.into(),
                            s.q1.into(),
                            s.median.into(),
                            s.q3.into(),
                            s.max.into(),
                            s.mean.into(),
                        ]);
                    }
                }
                t
            }
        };
        t.decimals = None;
        out.tables.push(t);
    }
    Ok(out)
}

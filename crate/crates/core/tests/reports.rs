//! Report functions on the transcribed journal table and small inputs.

mod common;

use std::collections::BTreeSet;

use common::*;
use hicite::corpus::{
    generate_synthetic_corpus, CitationDistribution, JournalIndicatorRow, JournalIndicatorTable,
    PartKey, Provenance, SyntheticConfig,
};
use hicite::indicators::{citation_threshold, compute_indicator_table};
use hicite::report::{
    run_anova_report, run_correlation_report, run_descriptives_report, run_figure_data_export,
    run_ranking_report, Cell, Figure, ReportTable, Variable,
};
use hicite::Error;

fn text(c: &Cell) -> &str {
    match c {
        Cell::Text(s) => s,
        other => panic!("not text: {other:?}"),
    }
}

fn find<'a>(t: &'a ReportTable, keys: &[(&str, &str)]) -> &'a [Cell] {
    t.rows
        .iter()
        .find(|r| {
            keys.iter()
                .all(|(col, v)| text(&r[t.column_index(col).unwrap()]) == *v)
        })
        .unwrap_or_else(|| panic!("no row {keys:?} in {}", t.name))
}

fn real_at(t: &ReportTable, row: &[Cell], col: &str) -> Option<f64> {
    match row[t.column_index(col).unwrap()] {
        Cell::Real(v) => Some(v),
        Cell::Int(i) => Some(i as f64),
        _ => None,
    }
}

#[test]
fn informetrics_row_values() {
    let table = load_fixture();
    let row = table.get("40").unwrap();
    assert_eq!(row.title, "J INFORMETR");
    assert_eq!(row.part_value(PartKey::new(q(25), 4)), Some(0.707));
}

#[test]
fn isls_jif5_descriptives() {
    let table = load_fixture();
    let out = run_descriptives_report(&table, true).unwrap();
    let t = out.table("descriptives").unwrap();
    let row = find(t, &[("category", "1"), ("variable", "JIF5")]);
    // the published maximum belongs to a transcribed journal
    assert_eq!(real_at(t, row, "max"), Some(8.157));
    assert_eq!(real_at(t, row, "obs"), Some(61.0));
}

#[test]
fn top_ranked_information_science_journals() {
    let table = load_fixture();
    let out = run_ranking_report(&table, &Variable::ranking_set(&table)).unwrap();
    let t = out.table("rankings").unwrap();
    let quart = find(t, &[("journal_id", "65")]);
    assert_eq!(text(&quart[2]), "MIS QUART");
    assert_eq!(quart[t.column_index("JIF5").unwrap()], Cell::Int(1));
    let exec = find(t, &[("journal_id", "64")]);
    assert_eq!(exec[t.column_index("pArt_40_5").unwrap()], Cell::Int(1));
}

#[test]
fn ranking_blanks_for_missing_values() {
    let table = load_fixture();
    let out = run_ranking_report(&table, &[Variable::Jif5]).unwrap();
    let t = out.table("rankings").unwrap();
    let missing: BTreeSet<&str> = table
        .rows()
        .iter()
        .filter(|r| r.jif5.is_none())
        .map(|r| r.journal_id.as_str())
        .collect();
    assert!(!missing.is_empty());
    for row in &t.rows {
        let blank = row[3] == Cell::Empty;
        assert_eq!(blank, missing.contains(text(&row[1])));
    }
}

#[test]
fn anova_summary_and_pairwise() {
    let table = load_fixture();
    let out = run_anova_report(&table, &Variable::standard(&table)).unwrap();
    let summary = out.table("anova_summary").unwrap();
    assert_eq!(text(&summary.rows[0][1]), "pArt_10_2");
    // the empty pArt_40_2 column is flagged, not fatal
    let anova = out.table("anova").unwrap();
    let row = find(anova, &[("variable", "pArt_40_2")]);
    assert_eq!(real_at(anova, row, "f"), None);
    assert!(out.warnings.iter().any(|w| w.contains("pArt_40_2")));
    let pairs = out.table("anova_pairwise").unwrap();
    assert!(pairs
        .rows
        .iter()
        .any(|r| text(&r[0]) == "h5" && r[8] == Cell::Bool(true)));
}

#[test]
fn anova_needs_two_categories() {
    let table = load_fixture();
    let rows: Vec<JournalIndicatorRow> = table
        .rows()
        .iter()
        .filter(|r| r.category_id == "1")
        .cloned()
        .collect();
    let one =
        JournalIndicatorTable::new(rows, table.part_keys().to_vec(), Provenance::Ingested).unwrap();
    assert!(matches!(
        run_anova_report(&one, &Variable::standard(&one)),
        Err(Error::InsufficientGroups(1))
    ));
}

#[test]
fn correlation_diagonal_and_layout() {
    let table = load_fixture();
    let vars = Variable::correlation_set(&table);
    assert_eq!(vars.len(), 6);
    let out = run_correlation_report(&table, &vars, true).unwrap();
    let t = out.table("correlations").unwrap();
    // four categories, lower triangle with diagonal
    assert_eq!(t.rows.len(), 4 * 21);
    for row in &t.rows {
        if text(&row[1]) == text(&row[2]) {
            if let Cell::Real(rho) = row[4] {
                assert_eq!(rho, 1.0);
            }
        }
    }
    // a single Ophthalmology journal cannot support a correlation
    let oph = find(
        t,
        &[
            ("category", "3"),
            ("variable_x", "h5"),
            ("variable_y", "h3"),
        ],
    );
    assert!(text(&oph[8]).starts_with("unavailable"));
}

#[test]
fn single_journal_descriptives_leave_moments_undefined() {
    let table = load_fixture();
    let row = table.rows()[0].clone();
    let one =
        JournalIndicatorTable::new(vec![row], table.part_keys().to_vec(), Provenance::Ingested)
            .unwrap();
    let out = run_descriptives_report(&one, false).unwrap();
    let t = out.table("descriptives").unwrap();
    for r in &t.rows {
        assert_eq!(real_at(t, r, "obs"), Some(1.0));
        assert_eq!(r[t.column_index("skewness").unwrap()], Cell::Empty);
        assert_eq!(r[t.column_index("kurtosis").unwrap()], Cell::Empty);
    }
}

#[test]
fn journal_table_figures() {
    let table = load_fixture();
    let qs = oracle_qs();
    let only3 = BTreeSet::from([Figure::Distributions]);
    let out = run_figure_data_export(None, &table, &qs, &only3).unwrap();
    assert_eq!(out.tables.len(), 1);
    let t = &out.tables[0];
    assert_eq!(t.name, "fig3_distributions");
    assert_eq!(
        t.columns,
        ["category", "variable", "min", "q1", "median", "q3", "max", "mean"]
    );
    for fig in [Figure::MeanCitations, Figure::Thresholds] {
        let err = run_figure_data_export(None, &table, &qs, &BTreeSet::from([fig])).unwrap_err();
        assert!(matches!(err, Error::Capability(_)), "{err}");
    }
}

#[test]
fn synthetic_figures_follow_thresholds() {
    let corpus = generate_synthetic_corpus(&SyntheticConfig {
        n_categories: 2,
        journals_per_category: 4,
        articles_per_journal: (3, 12),
        pub_years: (2009, 2013),
        citation_distribution: CitationDistribution::Geometric { p: 0.1 },
        seed: 11,
    })
    .unwrap();
    let mut qs = oracle_qs();
    qs.sort();
    let table = compute_indicator_table(&corpus, &qs, &[2, 5], 2013).unwrap();
    let all = BTreeSet::from([
        Figure::MeanCitations,
        Figure::Thresholds,
        Figure::Distributions,
    ]);
    let out = run_figure_data_export(Some(&corpus), &table, &qs, &all).unwrap();
    assert_eq!(out.tables.len(), 3);

    let fig2 = out.table("fig2_thresholds").unwrap();
    assert_eq!(
        fig2.columns.join(","),
        hicite::indicators::THRESHOLDS_HEADER
    );
    let mut last: Option<(String, i64, i64)> = None;
    for row in &fig2.rows {
        let cat = text(&row[0]).to_owned();
        let year = match row[1] {
            Cell::Int(y) => y,
            _ => unreachable!(),
        };
        let min = match row[3] {
            Cell::Int(m) => m,
            _ => unreachable!(),
        };
        let qv = text(&row[2]).parse().unwrap();
        assert_eq!(
            min as u32,
            citation_threshold(&corpus, &cat, year as i32, qv).unwrap()
        );
        // rows run in ascending q within a cell, so thresholds never rise
        if let Some((c, y, m)) = &last {
            if *c == cat && *y == year {
                assert!(min <= *m);
            }
        }
        last = Some((cat, year, min));
    }

    let fig1 = out.table("fig1_mean_citations").unwrap();
    assert_eq!(fig1.rows.len(), corpus.cells().count());
    let csv = fig1.to_csv().unwrap();
    assert!(csv.starts_with("category,pub_year,mean,n\n"));
}

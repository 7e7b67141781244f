//! End-to-end runs of the `hicite` binary.

mod common;

use std::fs;
use std::process::{Command, Output};

use common::data_path;

fn hicite(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hicite"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture() -> String {
    data_path("journals.csv").to_string_lossy().into_owned()
}

#[test]
fn anova_on_journal_table() {
    let o = hicite(&[
        "--input",
        &fixture(),
        "--kind",
        "journal-table",
        "--report",
        "anova",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out
        .starts_with("# anova\nvariable,obs,groups,eta_squared,f,p,df_between,df_within,status\n"));
    assert!(out.contains("\npArt_10_2,168,4,"));
    assert!(out.contains("highest p among pArt,pArt_10_2,"));
}

#[test]
fn usage_errors_exit_2() {
    let o = hicite(&["--input", &fixture(), "--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage"));
    assert!(stdout(&o).is_empty());

    for bad in [
        vec!["--input", "x.csv", "--report", "pie"],
        vec!["--input", "x.csv", "--q", "0"],
        vec!["--input", "x.csv", "--t", "0"],
        vec!["--input", "x.csv", "--census", "13"],
        vec!["--report", "anova"],
    ] {
        let o = hicite(&bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}: {}", stderr(&o));
    }
}

#[test]
fn help_exits_0() {
    let o = hicite(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("--per-category"));
}

#[test]
fn census_violation_exits_1_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("articles.csv");
    fs::write(
        &path,
        "journal_id,category_id,pub_year,citations\nJ1,C1,2012,4\nJ1,C1,2014,5\n",
    )
    .unwrap();
    let o = hicite(&["--input", path.to_str().unwrap(), "--kind", "articles"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("articles.csv"), "{err}");
}

#[test]
fn missing_file_exits_1() {
    let o = hicite(&["--input", "/nonexistent/journals.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn article_run_writes_every_table() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("articles.csv");
    let mut body = String::from("journal_id,category_id,pub_year,citations\n");
    for (i, (j, c)) in [("A1", "X"), ("A2", "X"), ("B1", "Y"), ("B2", "Y")]
        .iter()
        .enumerate()
    {
        for year in 2009..=2013 {
            for k in 0..4u32 {
                body.push_str(&format!(
                    "{j},{c},{year},{}\n",
                    (k * 7 + i as u32 * 3 + year as u32) % 23
                ));
            }
        }
    }
    fs::write(&input, body).unwrap();
    let out = dir.path().join("out");
    let o = hicite(&[
        "--input",
        input.to_str().unwrap(),
        "--kind",
        "articles",
        "--report",
        "all",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let mut names: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(
        names,
        [
            "anova.csv",
            "anova_pairwise.csv",
            "anova_summary.csv",
            "correlations.csv",
            "descriptives.csv",
            "fig1_mean_citations.csv",
            "fig2_thresholds.csv",
            "fig3_distributions.csv",
            "rankings.csv",
        ]
    );
    let fig2 = fs::read_to_string(out.join("fig2_thresholds.csv")).unwrap();
    assert!(fig2.starts_with("category_id,pub_year,q,min_citations,n_articles\n"));
    // small cells are reported, not fatal
    assert!(stderr(&o).contains("warning: category X year 2009 has only 8 articles"));
}

#[test]
fn journal_table_figures_request() {
    let o = hicite(&["--input", &fixture(), "--report", "figures"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# fig3_distributions\n"));
    assert!(!out.contains("# fig1"));

    let o = hicite(&["--input", &fixture(), "--report", "fig1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("article-level"));
}

#[test]
fn json_output_has_full_precision() {
    let o = hicite(&[
        "--input",
        &fixture(),
        "--report",
        "descriptives",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["descriptives"].as_array().unwrap();
    let jif5 = rows.iter().find(|r| r["variable"] == "JIF5").unwrap();
    let keys: Vec<&str> = jif5
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(
        keys,
        ["category", "variable", "obs", "mean", "sd", "cv", "min", "max", "skewness", "kurtosis"]
    );
    let mean = jif5["mean"].as_f64().unwrap();
    assert_ne!(mean, (mean * 1000.0).round() / 1000.0);
}

#[test]
fn explicit_grid_restricts_columns() {
    let o = hicite(&[
        "--input",
        &fixture(),
        "--report",
        "descriptives",
        "--q",
        "10,40",
        "--t",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains(",pArt_10_5,") && out.contains(",pArt_40_5,"));
    assert!(!out.contains("pArt_20_5") && !out.contains("pArt_10_2"));

    let o = hicite(&[
        "--input",
        &fixture(),
        "--report",
        "descriptives",
        "--q",
        "15",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["--input", &fixture(), "--report", "all", "--per-category"];
    let a = hicite(&args);
    let b = hicite(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs::File;
use std::path::PathBuf;

use hicite::corpus::{
    generate_synthetic_corpus, parse_journal_indicator_table, ArticleCorpus, CitationDistribution,
    JournalIndicatorTable, Percentile, SyntheticConfig,
};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

pub fn load_fixture() -> JournalIndicatorTable {
    let file = File::open(data_path("journals.csv")).expect("journals fixture");
    parse_journal_indicator_table(file).expect("fixture parses")
}

/// Ids listed as skipped, with the reason given.
pub fn skipped_ids() -> BTreeMap<u32, String> {
    let mut r = csv::Reader::from_path(data_path("journals_skipped.csv")).unwrap();
    r.records()
        .map(|rec| {
            let rec = rec.unwrap();
            (rec[0].parse().unwrap(), rec[2].to_owned())
        })
        .collect()
}

/// Published ranking columns, in file order.
pub const RANK_COLUMNS: [&str; 6] = ["JIF5", "JIF2", "h5", "h3", "pArt_20_2", "pArt_40_5"];

#[derive(Debug, Clone)]
pub struct PublishedRanks {
    pub id: String,
    pub title: String,
    pub category: String,
    /// Same order as [`RANK_COLUMNS`]; `None` for a blank cell.
    pub ranks: [Option<u32>; 6],
}

pub fn load_published_ranks() -> Vec<PublishedRanks> {
    let mut r = csv::Reader::from_path(data_path("rankings.csv")).unwrap();
    r.records()
        .map(|rec| {
            let rec = rec.unwrap();
            let mut ranks = [None; 6];
            for (i, slot) in ranks.iter_mut().enumerate() {
                let cell = rec[3 + i].trim();
                *slot = (!cell.is_empty()).then(|| cell.parse().unwrap());
            }
            PublishedRanks {
                id: rec[0].to_owned(),
                title: rec[1].to_owned(),
                category: rec[2].to_owned(),
                ranks,
            }
        })
        .collect()
}

pub fn q(v: u32) -> Percentile {
    Percentile::whole(v).unwrap()
}

pub fn oracle_qs() -> Vec<Percentile> {
    let mut qs = Percentile::defaults();
    qs.push(Percentile::from_f64(12.5).unwrap());
    qs.push(q(100));
    qs
}

/// The 200 seeded corpora: at most 50 articles each, citations at most 30.
pub fn synthetic_corpora() -> Vec<ArticleCorpus> {
    (0..200u64)
        .map(|seed| {
            let n_categories = 1 + (seed % 2) as usize;
            let journals_per_category = 1 + (seed / 2 % 3) as usize;
            let years = 1 + (seed / 6 % 5) as i32;
            let slots = n_categories * journals_per_category * years as usize;
            let hi = (50 / slots).clamp(1, 4);
            let citation_distribution = match seed % 3 {
                0 => CitationDistribution::Uniform { min: 0, max: 30 },
                1 => CitationDistribution::Geometric { p: 0.25 },
                _ => CitationDistribution::LogNormal {
                    mu: 1.0,
                    sigma: 1.2,
                    cap: 30,
                },
            };
            let corpus = generate_synthetic_corpus(&SyntheticConfig {
                n_categories,
                journals_per_category,
                articles_per_journal: (1, hi),
                pub_years: (2014 - years, 2013),
                citation_distribution,
                seed,
            })
            .unwrap();
            assert!(corpus.len() <= 50);
            assert!(corpus.records().iter().all(|r| r.citations <= 30));
            corpus
        })
        .collect()
}

// ---- definition oracles ----

/// Smallest k with 100·k ≥ q·N, using q in hundredths of a percent.
pub fn oracle_rank(q: Percentile, n: usize) -> usize {
    let q_hundredths = (q.as_f64() * 100.0).round() as usize;
    (1..=n).find(|&k| 10_000 * k >= q_hundredths * n).unwrap()
}

/// The largest citation value reached by at least k articles of the cell.
pub fn oracle_threshold(cell: &[u32], q: Percentile) -> u32 {
    let k = oracle_rank(q, cell.len());
    cell.iter()
        .copied()
        .filter(|&v| cell.iter().filter(|&&c| c >= v).count() >= k)
        .max()
        .unwrap()
}

pub fn cell_of(corpus: &ArticleCorpus, category: &str, year: i32) -> Vec<u32> {
    corpus
        .records()
        .iter()
        .filter(|r| r.category_id == category && r.pub_year == year)
        .map(|r| r.citations)
        .collect()
}

pub fn oracle_count(corpus: &ArticleCorpus, journal: &str, year: i32, q: Percentile) -> usize {
    let recs: Vec<_> = corpus
        .records()
        .iter()
        .filter(|r| r.journal_id == journal && r.pub_year == year)
        .collect();
    recs.iter()
        .filter(|r| r.citations >= oracle_threshold(&cell_of(corpus, &r.category_id, year), q))
        .count()
}

/// (numerator, denominator) of the share of highly cited window articles.
pub fn oracle_part(corpus: &ArticleCorpus, journal: &str, q: Percentile, t: u32) -> (usize, usize) {
    let census = corpus.census_year();
    let window = |y: i32| y > census - t as i32 && y <= census;
    let mut num = 0;
    let mut den = 0;
    for r in corpus.records() {
        if r.journal_id == journal && window(r.pub_year) {
            den += 1;
            if r.citations >= oracle_threshold(&cell_of(corpus, &r.category_id, r.pub_year), q) {
                num += 1;
            }
        }
    }
    (num, den)
}

/// Largest h such that at least h values are ≥ h.
pub fn oracle_h(values: &[u32]) -> u32 {
    (0..=values.len() as u32)
        .filter(|&h| values.iter().filter(|&&v| v >= h).count() as u32 >= h)
        .max()
        .unwrap()
}

// ---- quadrature oracles ----

fn midpoint(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    (0..n).map(|i| f(a + (i as f64 + 0.5) * h)).sum::<f64>() * h
}

/// Midpoint rule with one Richardson step.
fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let n = 20_000;
    (4.0 * midpoint(f, a, b, 2 * n) - midpoint(f, a, b, n)) / 3.0
}

/// P(F > x) by quadrature of the F density after the substitution
/// x ↦ φ with d1·x / (d2 + d1·x) = sin²φ, which maps the density to
/// sin^(d1−1)φ · cos^(d2−1)φ on [0, π/2]. Normalised by quadrature too.
pub fn f_tail_by_quadrature(x: f64, d1: u32, d2: u32) -> f64 {
    let (a, b) = (d1 as f64, d2 as f64);
    let phi = (a * x / (b + a * x)).sqrt().asin();
    let g = |p: f64| p.sin().powf(a - 1.0) * p.cos().powf(b - 1.0);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let upper = integrate(&g, phi, half_pi);
    let lower = integrate(&g, 0.0, phi);
    upper / (upper + lower)
}

/// P(|T| > |t|) for Student's t by quadrature after t = √ν·tan θ, which
/// turns the density into cos^(ν−1)θ on [0, π/2).
pub fn t_two_sided_by_quadrature(t: f64, df: f64) -> f64 {
    let theta = (t.abs() / df.sqrt()).atan();
    let g = |th: f64| th.cos().powf(df - 1.0);
    let half_pi = std::f64::consts::FRAC_PI_2;
    let upper = integrate(&g, theta, half_pi);
    let lower = integrate(&g, 0.0, theta);
    upper / (upper + lower)
}

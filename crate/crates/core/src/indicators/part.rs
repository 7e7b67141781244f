use super::ThresholdTable;
use crate::corpus::{ArticleCorpus, Percentile};
use crate::error::{Error, Result};

/// Share of a journal's window articles that are highly cited at level `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartResult {
    pub journal_id: String,
    pub q: Percentile,
    pub t: u32,
    pub census_year: i32,
    pub numerator: usize,
    pub denominator: usize,
    pub value: f64,
}

fn journal_category<'a>(corpus: &'a ArticleCorpus, journal_id: &str) -> Result<&'a str> {
    corpus
        .category_of(journal_id)
        .ok_or_else(|| Error::UnknownJournal(journal_id.to_owned()))
}

/// Number of the journal's `pub_year` articles whose citations reach the
/// cell threshold for `q`.
pub fn highly_cited_count(
    corpus: &ArticleCorpus,
    thresholds: &ThresholdTable,
    journal_id: &str,
    pub_year: i32,
    q: Percentile,
) -> Result<usize> {
    let category = journal_category(corpus, journal_id)?;
    let min = thresholds
        .get(category, pub_year, q)
        .ok_or_else(|| Error::NoData {
            category: category.to_owned(),
            year: pub_year,
        })?;
    Ok(corpus
        .journal_year_citations(journal_id, pub_year)
        .into_iter()
        .filter(|&c| c >= min)
        .count())
}

/// `pArt_q_t` for a journal over publication years `[ν−t+1, ν]`.
///
/// A journal that published nothing in the window has an undefined
/// indicator ([`Error::UndefinedIndicator`]), which is distinct from 0.
pub fn part_indicator(
    corpus: &ArticleCorpus,
    thresholds: &ThresholdTable,
    journal_id: &str,
    q: Percentile,
    t: u32,
    census_year: i32,
) -> Result<PartResult> {
    if t == 0 {
        return Err(Error::Config("window length t must be >= 1".into()));
    }
    if census_year != corpus.census_year() {
        return Err(Error::Config(format!(
            "census year {census_year} differs from corpus census year {}",
            corpus.census_year()
        )));
    }
    let category = journal_category(corpus, journal_id)?;
    let first = census_year - (t as i32 - 1);

    let mut numerator = 0;
    let mut denominator = 0;
    for year in first..=census_year {
        let cites = corpus.journal_year_citations(journal_id, year);
        if cites.is_empty() {
            continue;
        }
        denominator += cites.len();
        if let Some(min) = thresholds.get(category, year, q) {
            numerator += cites.iter().filter(|&&c| c >= min).count();
        }
    }

    if denominator == 0 {
        return Err(Error::UndefinedIndicator {
            journal: journal_id.to_owned(),
            q: q.to_string(),
            t,
        });
    }
    Ok(PartResult {
        journal_id: journal_id.to_owned(),
        q,
        t,
        census_year,
        numerator,
        denominator,
        value: numerator as f64 / denominator as f64,
    })
}

use std::collections::BTreeMap;

use super::{build_threshold_table, part_indicator, windowed_h_index};
use crate::corpus::{
    ArticleCorpus, JournalIndicatorRow, JournalIndicatorTable, PartKey, Percentile, Provenance,
};
use crate::error::{Error, Result};

/// Builds the journal-level indicator table from article data.
///
/// `n_articles` and `h5` cover the five publication years ending at the
/// census year, `h3` the last three. Undefined `pArt` cells (no articles in
/// the window) are left missing. Impact factors are never fabricated.
pub fn compute_indicator_table(
    corpus: &ArticleCorpus,
    qs: &[Percentile],
    ts: &[u32],
    census_year: i32,
) -> Result<JournalIndicatorTable> {
    if qs.is_empty() || ts.is_empty() {
        return Err(Error::Config("qs and ts must be non-empty".into()));
    }
    if let Some(t) = ts.iter().find(|&&t| t == 0) {
        return Err(Error::Config(format!("window length {t} must be >= 1")));
    }
    if census_year != corpus.census_year() {
        return Err(Error::Config(format!(
            "census year {census_year} differs from corpus census year {}",
            corpus.census_year()
        )));
    }
    let thresholds = build_threshold_table(corpus, qs)?;
    let keys = PartKey::grid(qs, ts);

    let mut rows = Vec::new();
    for journal in corpus.journals() {
        let category = corpus.category_of(journal).unwrap_or_default().to_owned();
        let n_articles: usize = (census_year - 4..=census_year)
            .map(|y| corpus.journal_year_citations(journal, y).len())
            .sum();
        let mut part = BTreeMap::new();
        for key in &keys {
            let value =
                match part_indicator(corpus, &thresholds, journal, key.q, key.t, census_year) {
                    Ok(r) => Some(r.value),
                    Err(Error::UndefinedIndicator { .. }) => None,
                    Err(e) => return Err(e),
                };
            part.insert(*key, value);
        }
        rows.push(JournalIndicatorRow {
            journal_id: journal.to_owned(),
            title: journal.to_owned(),
            category_id: category,
            n_articles: n_articles as u64,
            jif5: None,
            jif2: None,
            h5: windowed_h_index(corpus, journal, census_year - 4, census_year)?,
            h3: windowed_h_index(corpus, journal, census_year - 2, census_year)?,
            part,
        });
    }
    JournalIndicatorTable::new(rows, keys, Provenance::Computed)
}

//! Data model and ingestion: article-level corpora, journal-level indicator
//! tables, corpus validation and seeded synthetic corpora.

mod articles;
mod journals;
mod synthetic;
mod validate;

use std::collections::BTreeMap;

pub use articles::{parse_article_corpus, write_article_corpus, ARTICLES_HEADER};
pub use journals::{
    parse_journal_indicator_table, write_journal_indicator_table, JournalIndicatorRow,
    JournalIndicatorTable, PartKey, Percentile, Provenance, JOURNALS_FIXED_HEADER,
};
pub use synthetic::{generate_synthetic_corpus, CitationDistribution, SyntheticConfig};
pub use validate::{
    validate_corpus, validate_corpus_with, SmallCell, ValidationReport, DEFAULT_MIN_CELL_SIZE,
};

use crate::error::{Error, Result};

/// One published research article.
///
/// `citations` is the total received from publication through the census
/// year of the owning corpus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArticleRecord {
    pub journal_id: String,
    pub category_id: String,
    pub pub_year: i32,
    pub citations: u32,
}

impl ArticleRecord {
    pub fn new(
        journal_id: impl Into<String>,
        category_id: impl Into<String>,
        pub_year: i32,
        citations: u32,
    ) -> Self {
        Self {
            journal_id: journal_id.into(),
            category_id: category_id.into(),
            pub_year,
            citations,
        }
    }
}

/// A (category, publication year) cell.
pub type CellKey = (String, i32);

/// An immutable pool of articles with a fixed census year.
///
/// Records are indexed two ways: by (category, publication year), which is
/// the population thresholds are computed over, and by (journal, publication
/// year). Every journal belongs to exactly one category.
#[derive(Debug, Clone)]
pub struct ArticleCorpus {
    census_year: i32,
    records: Vec<ArticleRecord>,
    by_cell: BTreeMap<CellKey, Vec<usize>>,
    by_journal_year: BTreeMap<(String, i32), Vec<usize>>,
    journal_category: BTreeMap<String, String>,
}

impl PartialEq for ArticleCorpus {
    fn eq(&self, other: &Self) -> bool {
        self.census_year == other.census_year && self.records == other.records
    }
}

impl ArticleCorpus {
    /// Builds a corpus and its indices.
    ///
    /// Errors carry the line the offending record would occupy in the
    /// `articles.csv` serialization (header on line 1).
    pub fn new(census_year: i32, records: Vec<ArticleRecord>) -> Result<Self> {
        let mut by_cell: BTreeMap<CellKey, Vec<usize>> = BTreeMap::new();
        let mut by_journal_year: BTreeMap<(String, i32), Vec<usize>> = BTreeMap::new();
        let mut journal_category: BTreeMap<String, String> = BTreeMap::new();

        for (i, rec) in records.iter().enumerate() {
            let line = i + 2;
            if rec.pub_year > census_year {
                return Err(Error::Validation {
                    line,
                    message: format!(
                        "pub_year {} is after census year {census_year}",
                        rec.pub_year
                    ),
                });
            }
            match journal_category.get(&rec.journal_id) {
                Some(cat) if *cat != rec.category_id => {
                    return Err(Error::Validation {
                        line,
                        message: format!(
                            "journal `{}` listed under category `{}` and `{}`",
                            rec.journal_id, cat, rec.category_id
                        ),
                    });
                }
                Some(_) => {}
                None => {
                    journal_category.insert(rec.journal_id.clone(), rec.category_id.clone());
                }
            }
            by_cell
                .entry((rec.category_id.clone(), rec.pub_year))
                .or_default()
                .push(i);
            by_journal_year
                .entry((rec.journal_id.clone(), rec.pub_year))
                .or_default()
                .push(i);
        }

        Ok(Self {
            census_year,
            records,
            by_cell,
            by_journal_year,
            journal_category,
        })
    }

    pub fn census_year(&self) -> i32 {
        self.census_year
    }

    pub fn records(&self) -> &[ArticleRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Iterates the (category, year) cells in sorted order with their sizes.
    pub fn cells(&self) -> impl Iterator<Item = (&CellKey, usize)> + '_ {
        self.by_cell.iter().map(|(k, v)| (k, v.len()))
    }

    /// Citation counts of every article in a (category, year) cell, in
    /// record order. Empty when the cell does not exist.
    pub fn cell_citations(&self, category_id: &str, pub_year: i32) -> Vec<u32> {
        self.by_cell
            .get(&(category_id.to_owned(), pub_year))
            .map(|idx| idx.iter().map(|&i| self.records[i].citations).collect())
            .unwrap_or_default()
    }

    /// Citation counts of a journal's articles published in `pub_year`.
    pub fn journal_year_citations(&self, journal_id: &str, pub_year: i32) -> Vec<u32> {
        self.by_journal_year
            .get(&(journal_id.to_owned(), pub_year))
            .map(|idx| idx.iter().map(|&i| self.records[i].citations).collect())
            .unwrap_or_default()
    }

    pub fn category_of(&self, journal_id: &str) -> Option<&str> {
        self.journal_category.get(journal_id).map(String::as_str)
    }

    /// Journal ids in sorted order.
    pub fn journals(&self) -> impl Iterator<Item = &str> + '_ {
        self.journal_category.keys().map(String::as_str)
    }

    /// Category ids in sorted order.
    pub fn categories(&self) -> Vec<&str> {
        let mut cats: Vec<&str> = self.journal_category.values().map(String::as_str).collect();
        cats.sort_unstable();
        cats.dedup();
        cats
    }

    /// Publication years present for a category, ascending.
    pub fn category_years(&self, category_id: &str) -> Vec<i32> {
        self.by_cell
            .keys()
            .filter(|(c, _)| c == category_id)
            .map(|(_, y)| *y)
            .collect()
    }
}

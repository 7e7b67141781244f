use std::fmt;

use crate::corpus::ArticleCorpus;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scope {
    Category(String),
    Journal(String),
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Category(c) => write!(f, "category `{c}`"),
            Scope::Journal(j) => write!(f, "journal `{j}`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CitationRateResult {
    pub scope: Scope,
    pub pub_year: i32,
    pub mean_citations: f64,
    pub n_articles: usize,
}

/// Average citations (through the census year) of the articles a category
/// or journal published in `pub_year`.
pub fn mean_citation_rate(
    corpus: &ArticleCorpus,
    scope: &Scope,
    pub_year: i32,
) -> Result<CitationRateResult> {
    let cites = match scope {
        Scope::Category(c) => corpus.cell_citations(c, pub_year),
        Scope::Journal(j) => corpus.journal_year_citations(j, pub_year),
    };
    if cites.is_empty() {
        return Err(Error::EmptyScope {
            scope: scope.to_string(),
            year: pub_year,
        });
    }
    let total: u64 = cites.iter().map(|&c| c as u64).sum();
    Ok(CitationRateResult {
        scope: scope.clone(),
        pub_year,
        mean_citations: total as f64 / cites.len() as f64,
        n_articles: cites.len(),
    })
}

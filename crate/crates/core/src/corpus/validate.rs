use super::ArticleCorpus;

pub const DEFAULT_MIN_CELL_SIZE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallCell {
    pub category_id: String,
    pub pub_year: i32,
    pub n_articles: usize,
}

/// Informational only: lists (category, year) cells too small for stable
/// percentile thresholds. Nothing downstream refuses to run on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub min_cell_size: usize,
    pub small_cells: Vec<SmallCell>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.small_cells.is_empty()
    }
}

pub fn validate_corpus(corpus: &ArticleCorpus) -> ValidationReport {
    validate_corpus_with(corpus, DEFAULT_MIN_CELL_SIZE)
}

pub fn validate_corpus_with(corpus: &ArticleCorpus, min_cell_size: usize) -> ValidationReport {
    let small_cells = corpus
        .cells()
        .filter(|(_, n)| *n < min_cell_size)
        .map(|((category_id, pub_year), n)| SmallCell {
            category_id: category_id.clone(),
            pub_year: *pub_year,
            n_articles: n,
        })
        .collect();
    ValidationReport {
        min_cell_size,
        small_cells,
    }
}

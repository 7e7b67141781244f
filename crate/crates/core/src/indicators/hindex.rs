use crate::corpus::ArticleCorpus;
use crate::error::{Error, Result};

/// Largest `h` such that at least `h` of the values are `>= h`.
pub fn h_index(citations: &[u32]) -> u32 {
    let mut sorted = citations.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .enumerate()
        .take_while(|(i, &c)| c as usize > *i)
        .count() as u32
}

/// h-index of a journal's articles published in `[first_year, last_year]`,
/// using their census-anchored citation totals.
pub fn windowed_h_index(
    corpus: &ArticleCorpus,
    journal_id: &str,
    first_year: i32,
    last_year: i32,
) -> Result<u32> {
    if first_year > last_year {
        return Err(Error::Config(format!(
            "window [{first_year}, {last_year}] is empty"
        )));
    }
    let cites: Vec<u32> = (first_year..=last_year)
        .flat_map(|y| corpus.journal_year_citations(journal_id, y))
        .collect();
    Ok(h_index(&cites))
}

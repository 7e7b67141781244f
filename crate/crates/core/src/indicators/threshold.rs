use std::collections::BTreeMap;
use std::io::Write;

use crate::corpus::{ArticleCorpus, CellKey, Percentile};
use crate::error::{Error, Result};

pub const THRESHOLDS_HEADER: &str = "category_id,pub_year,q,min_citations,n_articles";

/// Minimum citations needed to be highly cited, per (category, year, q).
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdTable {
    census_year: i32,
    entries: BTreeMap<(String, i32, Percentile), u32>,
    cell_sizes: BTreeMap<CellKey, usize>,
}

impl ThresholdTable {
    /// Assembles a table from explicit entries, e.g. thresholds computed
    /// elsewhere. Every entry's cell must have a size.
    pub fn from_entries(
        census_year: i32,
        entries: BTreeMap<(String, i32, Percentile), u32>,
        cell_sizes: BTreeMap<CellKey, usize>,
    ) -> Result<Self> {
        for (cat, year, _) in entries.keys() {
            match cell_sizes.get(&(cat.clone(), *year)) {
                Some(n) if *n >= 1 => {}
                _ => {
                    return Err(Error::NoData {
                        category: cat.clone(),
                        year: *year,
                    })
                }
            }
        }
        Ok(Self {
            census_year,
            entries,
            cell_sizes,
        })
    }

    pub fn census_year(&self) -> i32 {
        self.census_year
    }

    pub fn get(&self, category_id: &str, pub_year: i32, q: Percentile) -> Option<u32> {
        self.entries
            .get(&(category_id.to_owned(), pub_year, q))
            .copied()
    }

    pub fn cell_size(&self, category_id: &str, pub_year: i32) -> Option<usize> {
        self.cell_sizes
            .get(&(category_id.to_owned(), pub_year))
            .copied()
    }

    /// Entries sorted by category, year and ascending q.
    pub fn entries(&self) -> impl Iterator<Item = (&str, i32, Percentile, u32)> + '_ {
        self.entries
            .iter()
            .map(|((c, y, q), m)| (c.as_str(), *y, *q, *m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn nearest_rank(sorted_desc: &[u32], q: Percentile) -> u32 {
    let k = q.rank_in(sorted_desc.len());
    sorted_desc[k - 1]
}

/// Citation count of the article at nearest-rank position `ceil(q·N/100)`
/// in the cell's descending order. No interpolation.
pub fn citation_threshold(
    corpus: &ArticleCorpus,
    category_id: &str,
    pub_year: i32,
    q: Percentile,
) -> Result<u32> {
    let mut cites = corpus.cell_citations(category_id, pub_year);
    if cites.is_empty() {
        return Err(Error::NoData {
            category: category_id.to_owned(),
            year: pub_year,
        });
    }
    cites.sort_unstable_by(|a, b| b.cmp(a));
    Ok(nearest_rank(&cites, q))
}

/// One entry per non-empty cell and requested percentile.
pub fn build_threshold_table(corpus: &ArticleCorpus, qs: &[Percentile]) -> Result<ThresholdTable> {
    if qs.is_empty() {
        return Err(Error::Config("at least one percentile is required".into()));
    }
    let mut entries = BTreeMap::new();
    let mut cell_sizes = BTreeMap::new();
    for ((category, year), _) in corpus.cells() {
        let mut cites = corpus.cell_citations(category, *year);
        cites.sort_unstable_by(|a, b| b.cmp(a));
        cell_sizes.insert((category.clone(), *year), cites.len());
        for &q in qs {
            entries.insert((category.clone(), *year, q), nearest_rank(&cites, q));
        }
    }
    Ok(ThresholdTable {
        census_year: corpus.census_year(),
        entries,
        cell_sizes,
    })
}

/// Writes `category_id,pub_year,q,min_citations,n_articles`.
pub fn write_threshold_table<W: Write>(table: &ThresholdTable, sink: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(THRESHOLDS_HEADER.split(','))?;
    for (cat, year, q, min) in table.entries() {
        let n = table.cell_size(cat, year).unwrap_or(0);
        w.write_record([
            cat.to_owned(),
            year.to_string(),
            q.to_string(),
            min.to_string(),
            n.to_string(),
        ])?;
    }
    w.flush().map_err(|e| Error::io("<output>", e))?;
    Ok(())
}

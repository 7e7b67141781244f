use std::io::{Read, Write};

use super::{ArticleCorpus, ArticleRecord};
use crate::error::{Error, Result};

pub const ARTICLES_HEADER: &str = "journal_id,category_id,pub_year,citations";

/// Parses an `articles.csv` stream into a corpus anchored at `census_year`.
///
/// The header must match [`ARTICLES_HEADER`] exactly. Row errors report the
/// 1-based line number of the offending row.
pub fn parse_article_corpus<R: Read>(source: R, census_year: i32) -> Result<ArticleCorpus> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(source);

    let mut rows = reader.records();
    let header = match rows.next() {
        Some(h) => h?,
        None => {
            return Err(Error::Schema {
                expected: ARTICLES_HEADER.to_owned(),
                found: String::new(),
            })
        }
    };
    let found: Vec<&str> = header.iter().collect();
    let found = found.join(",");
    if found.trim_start_matches('\u{feff}') != ARTICLES_HEADER {
        return Err(Error::Schema {
            expected: ARTICLES_HEADER.to_owned(),
            found,
        });
    }

    let mut records = Vec::new();
    for row in rows {
        let row = row?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        if row.len() == 1 && row[0].trim().is_empty() {
            continue;
        }
        if row.len() != 4 {
            return Err(Error::Row {
                line,
                message: format!("expected 4 fields, found {}", row.len()),
            });
        }
        let journal_id = row[0].trim();
        let category_id = row[1].trim();
        if journal_id.is_empty() || category_id.is_empty() {
            return Err(Error::Row {
                line,
                message: "journal_id and category_id must be non-empty".to_owned(),
            });
        }
        let pub_year: i32 = row[2].trim().parse().map_err(|_| Error::Row {
            line,
            message: format!("pub_year `{}` is not an integer", &row[2]),
        })?;
        let citations: u32 = row[3].trim().parse().map_err(|_| Error::Row {
            line,
            message: format!("citations `{}` is not a non-negative integer", &row[3]),
        })?;
        if pub_year > census_year {
            return Err(Error::Validation {
                line,
                message: format!("pub_year {pub_year} is after census year {census_year}"),
            });
        }
        records.push(ArticleRecord::new(
            journal_id,
            category_id,
            pub_year,
            citations,
        ));
    }

    ArticleCorpus::new(census_year, records)
}

/// Serializes a corpus in the `articles.csv` format, records in stored order.
pub fn write_article_corpus<W: Write>(corpus: &ArticleCorpus, sink: W) -> Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    writer.write_record(ARTICLES_HEADER.split(','))?;
    for rec in corpus.records() {
        writer.write_record([
            rec.journal_id.as_str(),
            rec.category_id.as_str(),
            &rec.pub_year.to_string(),
            &rec.citations.to_string(),
        ])?;
    }
    writer.flush().map_err(|e| Error::io("<output>", e))?;
    Ok(())
}

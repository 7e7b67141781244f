use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;

use crate::error::{Error, Result};

pub const JOURNALS_FIXED_HEADER: [&str; 8] = [
    "id", "title", "category", "n_art", "jif5", "jif2", "h5", "h3",
];

/// A citation percentile `q` in (0, 100], stored in hundredths of a percent
/// so that nearest-rank positions are computed in exact integer arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Percentile(u32);

impl Percentile {
    const SCALE: u32 = 100;

    /// Whole-percent constructor; `q` must be in 1..=100.
    pub fn whole(q: u32) -> Result<Self> {
        if q == 0 || q > 100 {
            return Err(Error::Config(format!("percentile {q} outside (0, 100]")));
        }
        Ok(Self(q * Self::SCALE))
    }

    /// Accepts up to two decimal places.
    pub fn from_f64(q: f64) -> Result<Self> {
        let scaled = (q * Self::SCALE as f64).round();
        if !q.is_finite() || scaled < 1.0 || scaled > 100.0 * Self::SCALE as f64 {
            return Err(Error::Config(format!("percentile {q} outside (0, 100]")));
        }
        if (scaled - q * Self::SCALE as f64).abs() > 1e-6 {
            return Err(Error::Config(format!(
                "percentile {q} has more than two decimals"
            )));
        }
        Ok(Self(scaled as u32))
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / Self::SCALE as f64
    }

    /// Nearest-rank position `ceil(q·n/100)` for a cell of `n` articles.
    pub fn rank_in(self, n: usize) -> usize {
        let total = 100 * Self::SCALE as u64;
        ((self.0 as u64 * n as u64).div_ceil(total)) as usize
    }

    /// The five benchmarks used throughout: 10, 20, 25, 30 and 40.
    pub fn defaults() -> Vec<Percentile> {
        [10, 20, 25, 30, 40]
            .into_iter()
            .map(|q| Percentile(q * Self::SCALE))
            .collect()
    }
}

impl fmt::Display for Percentile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / Self::SCALE;
        let frac = self.0 % Self::SCALE;
        if frac == 0 {
            write!(f, "{whole}")
        } else if frac.is_multiple_of(10) {
            write!(f, "{whole}.{}", frac / 10)
        } else {
            write!(f, "{whole}.{frac:02}")
        }
    }
}

impl FromStr for Percentile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let q: f64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("invalid percentile `{s}`")))?;
        Percentile::from_f64(q)
    }
}

/// One (q, t) cell of the indicator grid.
///
/// Ordering follows the column layout of `journals.csv`: ascending `q`, then
/// descending `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartKey {
    pub q: Percentile,
    pub t: u32,
}

impl PartKey {
    pub fn new(q: Percentile, t: u32) -> Self {
        Self { q, t }
    }

    pub fn column_name(&self) -> String {
        format!("pArt_{}_{}", self.q, self.t)
    }

    pub fn parse_column(name: &str) -> Option<Self> {
        let rest = name.strip_prefix("pArt_")?;
        let (q, t) = rest.rsplit_once('_')?;
        let q: Percentile = q.parse().ok()?;
        let t: u32 = t.parse().ok()?;
        (t >= 1).then_some(Self { q, t })
    }

    /// Cartesian product of `qs` × `ts` in column order.
    pub fn grid(qs: &[Percentile], ts: &[u32]) -> Vec<PartKey> {
        let mut keys: Vec<PartKey> = qs
            .iter()
            .flat_map(|&q| ts.iter().map(move |&t| PartKey { q, t }))
            .collect();
        keys.sort();
        keys.dedup();
        keys
    }

    /// The twenty-cell default grid: q ∈ {10,20,25,30,40}, t ∈ {5,4,3,2}.
    pub fn default_grid() -> Vec<PartKey> {
        Self::grid(&Percentile::defaults(), &[5, 4, 3, 2])
    }
}

impl Ord for PartKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.q.cmp(&other.q).then_with(|| other.t.cmp(&self.t))
    }
}

impl PartialOrd for PartKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.column_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Ingested,
    Computed,
}

/// One journal's indicators. `None` marks a missing value, which is never
/// the same thing as zero.
#[derive(Debug, Clone, PartialEq)]
pub struct JournalIndicatorRow {
    pub journal_id: String,
    pub title: String,
    pub category_id: String,
    pub n_articles: u64,
    pub jif5: Option<f64>,
    pub jif2: Option<f64>,
    pub h5: u32,
    pub h3: u32,
    pub part: BTreeMap<PartKey, Option<f64>>,
}

impl JournalIndicatorRow {
    pub fn part_value(&self, key: PartKey) -> Option<f64> {
        self.part.get(&key).copied().flatten()
    }

    /// Violations of the row-level invariants: each value in [0, 1],
    /// non-decreasing in `q` for every `t`, and `h5 >= h3`.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (key, v) in &self.part {
            if let Some(v) = v {
                if !(0.0..=1.0).contains(v) {
                    out.push(format!("{}: {key} = {v} outside [0, 1]", self.journal_id));
                }
            }
        }
        let mut by_t: BTreeMap<u32, Vec<(Percentile, f64)>> = BTreeMap::new();
        for (key, v) in &self.part {
            if let Some(v) = v {
                by_t.entry(key.t).or_default().push((key.q, *v));
            }
        }
        for (t, mut seq) in by_t {
            seq.sort_by_key(|(q, _)| *q);
            for pair in seq.windows(2) {
                if pair[1].1 < pair[0].1 {
                    out.push(format!(
                        "{}: pArt_{}_{t} = {} > pArt_{}_{t} = {}",
                        self.journal_id, pair[0].0, pair[0].1, pair[1].0, pair[1].1
                    ));
                }
            }
        }
        if self.h5 < self.h3 {
            out.push(format!(
                "{}: h5 = {} < h3 = {}",
                self.journal_id, self.h5, self.h3
            ));
        }
        out
    }
}

/// Journal-level indicator table with unique journal ids.
#[derive(Debug, Clone, PartialEq)]
pub struct JournalIndicatorTable {
    rows: Vec<JournalIndicatorRow>,
    part_keys: Vec<PartKey>,
    provenance: Provenance,
}

impl JournalIndicatorTable {
    /// Every row's `part` map is normalised to exactly `part_keys`.
    pub fn new(
        mut rows: Vec<JournalIndicatorRow>,
        part_keys: Vec<PartKey>,
        provenance: Provenance,
    ) -> Result<Self> {
        let mut part_keys = part_keys;
        part_keys.sort();
        part_keys.dedup();
        let mut seen = HashSet::new();
        for (i, row) in rows.iter_mut().enumerate() {
            if !seen.insert(row.journal_id.clone()) {
                return Err(Error::Validation {
                    line: i + 2,
                    message: format!("duplicate journal id `{}`", row.journal_id),
                });
            }
            let part = part_keys
                .iter()
                .map(|k| (*k, row.part.get(k).copied().flatten()))
                .collect();
            row.part = part;
        }
        Ok(Self {
            rows,
            part_keys,
            provenance,
        })
    }

    pub fn rows(&self) -> &[JournalIndicatorRow] {
        &self.rows
    }

    pub fn part_keys(&self) -> &[PartKey] {
        &self.part_keys
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, journal_id: &str) -> Option<&JournalIndicatorRow> {
        self.rows.iter().find(|r| r.journal_id == journal_id)
    }

    /// Distinct category ids, sorted.
    pub fn categories(&self) -> Vec<&str> {
        let mut cats: Vec<&str> = self.rows.iter().map(|r| r.category_id.as_str()).collect();
        cats.sort_unstable();
        cats.dedup();
        cats
    }

    /// Concatenates tables sharing the same column grid.
    pub fn merge(tables: Vec<JournalIndicatorTable>) -> Result<Self> {
        let mut iter = tables.into_iter();
        let Some(first) = iter.next() else {
            return Err(Error::EmptySample);
        };
        let (mut rows, keys, provenance) = (first.rows, first.part_keys, first.provenance);
        for t in iter {
            if t.part_keys != keys {
                return Err(Error::Config(
                    "cannot merge journal tables with different pArt columns".to_owned(),
                ));
            }
            rows.extend(t.rows);
        }
        Self::new(rows, keys, provenance)
    }

    pub fn invariant_violations(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(JournalIndicatorRow::invariant_violations)
            .collect()
    }
}

fn header_line(keys: &[PartKey]) -> Vec<String> {
    JOURNALS_FIXED_HEADER
        .iter()
        .map(|s| s.to_string())
        .chain(keys.iter().map(PartKey::column_name))
        .collect()
}

/// Parses a `journals.csv` stream.
///
/// The first eight columns are fixed; they are followed by one or more
/// `pArt_{q}_{t}` columns in ascending-q, descending-t order. Empty `jif5`,
/// `jif2` or `pArt` cells are read as missing.
pub fn parse_journal_indicator_table<R: Read>(source: R) -> Result<JournalIndicatorTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(source);
    let mut records = reader.records();

    let expected_default = header_line(&PartKey::default_grid()).join(",");
    let header = match records.next() {
        Some(h) => h?,
        None => {
            return Err(Error::Schema {
                expected: expected_default,
                found: String::new(),
            })
        }
    };
    let cols: Vec<String> = header
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let c = c.trim();
            if i == 0 {
                c.trim_start_matches('\u{feff}').to_owned()
            } else {
                c.to_owned()
            }
        })
        .collect();
    let schema_err = || Error::Schema {
        expected: expected_default.clone(),
        found: cols.join(","),
    };
    if cols.len() <= JOURNALS_FIXED_HEADER.len()
        || cols[..JOURNALS_FIXED_HEADER.len()] != JOURNALS_FIXED_HEADER
    {
        return Err(schema_err());
    }
    let mut keys = Vec::new();
    for c in &cols[JOURNALS_FIXED_HEADER.len()..] {
        let key = PartKey::parse_column(c).ok_or_else(schema_err)?;
        if keys.last().is_some_and(|prev| *prev >= key) {
            return Err(schema_err());
        }
        keys.push(key);
    }

    let mut rows = Vec::new();
    let mut seen = HashSet::new();
    for rec in records {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        if rec.len() == 1 && rec[0].trim().is_empty() {
            continue;
        }
        if rec.len() != cols.len() {
            return Err(Error::Row {
                line,
                message: format!("expected {} fields, found {}", cols.len(), rec.len()),
            });
        }
        let field = |i: usize| rec[i].trim();
        let journal_id = field(0).to_owned();
        if journal_id.is_empty() {
            return Err(Error::Row {
                line,
                message: "empty id".to_owned(),
            });
        }
        if !seen.insert(journal_id.clone()) {
            return Err(Error::Validation {
                line,
                message: format!("duplicate journal id `{journal_id}`"),
            });
        }
        let int = |i: usize| -> Result<u64> {
            field(i).parse().map_err(|_| Error::Row {
                line,
                message: format!("{} `{}` is not a non-negative integer", cols[i], field(i)),
            })
        };
        let real = |i: usize| -> Result<Option<f64>> {
            let s = field(i);
            if s.is_empty() {
                return Ok(None);
            }
            let v: f64 = s.parse().map_err(|_| Error::Row {
                line,
                message: format!("{} `{s}` is not a number", cols[i]),
            })?;
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Validation {
                    line,
                    message: format!("{} = {s} must be a finite non-negative number", cols[i]),
                });
            }
            Ok(Some(v))
        };
        let h = |i: usize| -> Result<u32> {
            u32::try_from(int(i)?).map_err(|_| Error::Row {
                line,
                message: format!("{} out of range", cols[i]),
            })
        };

        let mut part = BTreeMap::new();
        for (offset, key) in keys.iter().enumerate() {
            let i = JOURNALS_FIXED_HEADER.len() + offset;
            let v = real(i)?;
            if let Some(x) = v {
                if x > 1.0 {
                    return Err(Error::Validation {
                        line,
                        message: format!("{key} = {x} outside [0, 1]"),
                    });
                }
            }
            part.insert(*key, v);
        }

        rows.push(JournalIndicatorRow {
            journal_id,
            title: field(1).to_owned(),
            category_id: field(2).to_owned(),
            n_articles: int(3)?,
            jif5: real(4)?,
            jif2: real(5)?,
            h5: h(6)?,
            h3: h(7)?,
            part,
        });
    }

    JournalIndicatorTable::new(rows, keys, Provenance::Ingested)
}

/// Formats a value with the shortest representation that parses back to
/// the same `f64`.
pub(crate) fn format_full(v: f64) -> String {
    format!("{v}")
}

/// Writes a table in the `journals.csv` schema. Missing values become empty
/// fields.
pub fn write_journal_indicator_table<W: Write>(
    table: &JournalIndicatorTable,
    sink: W,
) -> Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    writer.write_record(header_line(table.part_keys()))?;
    let opt = |v: Option<f64>| v.map(format_full).unwrap_or_default();
    for row in table.rows() {
        let mut rec = vec![
            row.journal_id.clone(),
            row.title.clone(),
            row.category_id.clone(),
            row.n_articles.to_string(),
            opt(row.jif5),
            opt(row.jif2),
            row.h5.to_string(),
            row.h3.to_string(),
        ];
        rec.extend(table.part_keys().iter().map(|k| opt(row.part_value(*k))));
        writer.write_record(&rec)?;
    }
    writer.flush().map_err(|e| Error::io("<output>", e))?;
    Ok(())
}

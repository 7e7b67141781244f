use std::fmt;
use std::str::FromStr;

use crate::corpus::{JournalIndicatorRow, JournalIndicatorTable, PartKey, Percentile};
use crate::error::{Error, Result};

/// A journal-level indicator column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    Jif5,
    Jif2,
    H5,
    H3,
    Part(PartKey),
}

impl Variable {
    pub fn value(&self, row: &JournalIndicatorRow) -> Option<f64> {
        match self {
            Variable::Jif5 => row.jif5,
            Variable::Jif2 => row.jif2,
            Variable::H5 => Some(row.h5 as f64),
            Variable::H3 => Some(row.h3 as f64),
            Variable::Part(k) => row.part_value(*k),
        }
        .filter(|v| !v.is_nan())
    }

    pub fn is_part(&self) -> bool {
        matches!(self, Variable::Part(_))
    }

    /// JIF5, JIF2, h5, h3, then every pArt column of the table. Impact
    /// factors are left out when no row carries them.
    pub fn standard(table: &JournalIndicatorTable) -> Vec<Variable> {
        let mut vars = Vec::new();
        if table.rows().iter().any(|r| r.jif5.is_some()) {
            vars.push(Variable::Jif5);
        }
        if table.rows().iter().any(|r| r.jif2.is_some()) {
            vars.push(Variable::Jif2);
        }
        vars.extend([Variable::H5, Variable::H3]);
        vars.extend(table.part_keys().iter().map(|&k| Variable::Part(k)));
        vars
    }

    /// Default correlation block: JIF2, JIF5, h3, h5, pArt_10_2, pArt_40_5,
    /// keeping those the table can supply.
    pub fn correlation_set(table: &JournalIndicatorTable) -> Vec<Variable> {
        let available = Self::standard(table);
        [
            Variable::Jif2,
            Variable::Jif5,
            Variable::H3,
            Variable::H5,
            part(10, 2),
            part(40, 5),
        ]
        .into_iter()
        .filter(|v| available.contains(v))
        .collect()
    }

    /// Default ranking columns: JIF5, JIF2, h5, h3, pArt_20_2, pArt_40_5,
    /// keeping those the table can supply.
    pub fn ranking_set(table: &JournalIndicatorTable) -> Vec<Variable> {
        let available = Self::standard(table);
        [
            Variable::Jif5,
            Variable::Jif2,
            Variable::H5,
            Variable::H3,
            part(20, 2),
            part(40, 5),
        ]
        .into_iter()
        .filter(|v| available.contains(v))
        .collect()
    }
}

fn part(q: u32, t: u32) -> Variable {
    let q = Percentile::whole(q).expect("constant percentile in range");
    Variable::Part(PartKey::new(q, t))
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Jif5 => f.write_str("JIF5"),
            Variable::Jif2 => f.write_str("JIF2"),
            Variable::H5 => f.write_str("h5"),
            Variable::H3 => f.write_str("h3"),
            Variable::Part(k) => f.write_str(&k.column_name()),
        }
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "JIF5" | "jif5" => Ok(Variable::Jif5),
            "JIF2" | "jif2" => Ok(Variable::Jif2),
            "h5" => Ok(Variable::H5),
            "h3" => Ok(Variable::H3),
            _ => PartKey::parse_column(s)
                .map(Variable::Part)
                .ok_or_else(|| Error::Config(format!("unknown variable `{s}`"))),
        }
    }
}

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// Journal id → 1-based rank.
pub type Ranking = BTreeMap<String, u32>;

/// Competition ranking: every journal gets 1 + the number of journals with a
/// strictly better value. Missing and NaN values are left unranked.
pub fn competition_rank(values: &[(String, Option<f64>)], descending: bool) -> Result<Ranking> {
    let mut seen = BTreeSet::new();
    for (id, _) in values {
        if !seen.insert(id.as_str()) {
            return Err(Error::Domain(format!("journal {id} listed twice")));
        }
    }
    let mut present: Vec<(&str, f64)> = values
        .iter()
        .filter_map(|(id, v)| v.filter(|v| !v.is_nan()).map(|v| (id.as_str(), v)))
        .collect();
    if present.is_empty() {
        return Err(Error::EmptyRanking);
    }
    present.sort_by(|a, b| {
        let ord = a.1.total_cmp(&b.1);
        if descending {
            ord.reverse()
        } else {
            ord
        }
    });

    let mut ranks = Ranking::new();
    let mut rank = 1u32;
    for (i, &(id, v)) in present.iter().enumerate() {
        // -0.0 and 0.0 tie
        if i > 0 && v != present[i - 1].1 {
            rank = i as u32 + 1;
        }
        ranks.insert(id.to_owned(), rank);
    }
    Ok(ranks)
}

/// Indicator name → ranking.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RankTable {
    ranks: BTreeMap<String, Ranking>,
}

impl RankTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, indicator: impl Into<String>, ranking: Ranking) {
        self.ranks.insert(indicator.into(), ranking);
    }

    pub fn get(&self, indicator: &str) -> Option<&Ranking> {
        self.ranks.get(indicator)
    }

    pub fn rank(&self, indicator: &str, journal: &str) -> Option<u32> {
        self.ranks.get(indicator)?.get(journal).copied()
    }

    pub fn indicators(&self) -> impl Iterator<Item = &str> {
        self.ranks.keys().map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(v: &[(&str, Option<f64>)]) -> Vec<(String, Option<f64>)> {
        v.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn ties_share_best_position() {
        let r = competition_rank(
            &entries(&[("A", Some(0.5)), ("B", Some(0.5)), ("C", Some(0.1))]),
            true,
        )
        .unwrap();
        assert_eq!(r["A"], 1);
        assert_eq!(r["B"], 1);
        assert_eq!(r["C"], 3);
    }

    #[test]
    fn ascending_and_missing() {
        let r = competition_rank(
            &entries(&[
                ("A", Some(3.0)),
                ("B", None),
                ("C", Some(1.0)),
                ("D", Some(3.0)),
            ]),
            false,
        )
        .unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!((r["C"], r["A"], r["D"]), (1, 2, 2));
        assert!(!r.contains_key("B"));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            competition_rank(&entries(&[("A", None)]), true),
            Err(Error::EmptyRanking)
        ));
        assert!(competition_rank(&entries(&[("A", Some(1.0)), ("A", Some(2.0))]), true).is_err());
    }
}

use super::mean;
use crate::error::{Error, Result};
use serde::Serialize;

/// Five-number summary plus mean; quartiles are nearest-rank on ascending
/// order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionSummary {
    pub n: usize,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    pub mean: f64,
}

pub fn distribution_summary(values: &[f64]) -> Result<DistributionSummary> {
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("non-finite observation {bad}")));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    // rank ceil(n·num/4), at least 1
    let at = |num: usize| sorted[(n * num).div_ceil(4).max(1) - 1];
    Ok(DistributionSummary {
        n,
        min: sorted[0],
        q1: at(1),
        median: at(2),
        q3: at(3),
        max: sorted[n - 1],
        mean: mean(values),
    })
}

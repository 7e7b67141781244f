use super::t_two_sided;
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationResult {
    /// Pairwise-complete observations.
    pub n: usize,
    pub rho: f64,
    pub t_stat: f64,
    pub p_value: f64,
    pub significant_99: bool,
}

/// 1-based ranks in ascending order; tied values share the mean of the
/// positions they occupy.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && values[order[j]] == values[order[i]] {
            j += 1;
        }
        // positions i+1 ..= j
        let avg = (i + 1 + j) as f64 / 2.0;
        for &idx in &order[i..j] {
            ranks[idx] = avg;
        }
        i = j;
    }
    ranks
}

/// Spearman rank correlation over the pairs where both values are present
/// (`None` and NaN count as missing).
pub fn spearman(x: &[Option<f64>], y: &[Option<f64>]) -> Result<CorrelationResult> {
    if x.len() != y.len() {
        return Err(Error::Domain(format!(
            "paired samples differ in length ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = x
        .iter()
        .zip(y)
        .filter_map(|(a, b)| match (a, b) {
            (Some(a), Some(b)) if !a.is_nan() && !b.is_nan() => Some((*a, *b)),
            _ => None,
        })
        .unzip();
    let n = xs.len();
    if n < 3 {
        return Err(Error::InsufficientData {
            needed: 3,
            found: n,
        });
    }
    let rx = average_ranks(&xs);
    let ry = average_ranks(&ys);

    // both rank vectors have mean (n + 1) / 2
    let centre = (n + 1) as f64 / 2.0;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    let (mut same, mut mirrored) = (true, true);
    for (a, b) in rx.iter().zip(&ry) {
        let (da, db) = (a - centre, b - centre);
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
        same &= a == b;
        mirrored &= da == -db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation);
    }
    let rho = if same {
        1.0
    } else if mirrored {
        -1.0
    } else {
        (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0)
    };

    let df = (n - 2) as f64;
    let (t_stat, p_value) = if rho.abs() == 1.0 {
        (rho * f64::INFINITY, 0.0)
    } else {
        let t = rho * (df / (1.0 - rho * rho)).sqrt();
        (t, t_two_sided(t, df)?)
    };
    Ok(CorrelationResult {
        n,
        rho,
        t_stat,
        p_value,
        significant_99: p_value < 0.01,
    })
}

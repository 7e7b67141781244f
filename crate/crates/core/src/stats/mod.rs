//! Statistics used to validate indicators: descriptive moments, one-way
//! ANOVA with Welch pairwise follow-ups, Spearman rank correlation,
//! competition ranking and five-number summaries, together with the
//! incomplete-beta machinery behind their p-values.

mod anova;
mod correlation;
mod descriptive;
mod distribution;
mod ranking;
pub mod special;
mod summary;

pub use anova::{one_way_anova, welch_t_test, AnovaResult, WelchResult};
pub use correlation::{average_ranks, spearman, CorrelationResult};
pub use descriptive::{descriptive_stats, DescriptiveStats};
pub use distribution::{f_upper_tail, t_two_sided};
pub use ranking::{competition_rank, RankTable, Ranking};
pub use summary::{distribution_summary, DistributionSummary};

/// Sum that does not depend on input order: values are summed in sorted
/// order with Neumaier compensation.
pub(crate) fn stable_sum(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for v in sorted {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Arithmetic mean, exact for constant samples and clamped to [min, max].
pub(crate) fn mean(values: &[f64]) -> f64 {
    let (min, max) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    if min == max {
        return min;
    }
    (stable_sum(values) / values.len() as f64).clamp(min, max)
}

use super::{f_upper_tail, mean, stable_sum, t_two_sided};
use crate::error::{Error, Result};
use serde::Serialize;

/// One-way ANOVA of k groups.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnovaResult {
    pub k: usize,
    pub n: usize,
    /// `+inf` when every group is constant but the group means differ.
    pub f_stat: f64,
    pub p_value: f64,
    pub eta_squared: f64,
    pub df_between: u32,
    pub df_within: u32,
    pub ss_between: f64,
    pub ss_within: f64,
}

impl AnovaResult {
    pub fn is_f_infinite(&self) -> bool {
        self.f_stat.is_infinite()
    }
}

pub fn one_way_anova<G: AsRef<[f64]>>(groups: &[G]) -> Result<AnovaResult> {
    let k = groups.len();
    if k < 2 {
        return Err(Error::InsufficientGroups(k));
    }
    let mut n = 0usize;
    let mut group_means = Vec::with_capacity(k);
    let mut all = Vec::new();
    let mut ss_within_parts = Vec::new();
    for g in groups {
        let g = g.as_ref();
        if g.is_empty() {
            return Err(Error::EmptySample);
        }
        if let Some(bad) = g.iter().find(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("non-finite observation {bad}")));
        }
        let m = mean(g);
        ss_within_parts.extend(g.iter().map(|x| (x - m) * (x - m)));
        group_means.push((m, g.len()));
        all.extend_from_slice(g);
        n += g.len();
    }
    if n <= k {
        return Err(Error::InsufficientData {
            needed: k + 1,
            found: n,
        });
    }

    let first = group_means[0].0;
    let grand = if group_means.iter().all(|&(m, _)| m == first) {
        first
    } else {
        mean(&all)
    };
    let ss_between = stable_sum(
        &group_means
            .iter()
            .map(|&(m, size)| size as f64 * (m - grand) * (m - grand))
            .collect::<Vec<_>>(),
    );
    let ss_within = stable_sum(&ss_within_parts);
    let ss_total = ss_between + ss_within;
    if ss_total == 0.0 {
        return Err(Error::DegenerateAnova);
    }

    let df_between = (k - 1) as u32;
    let df_within = (n - k) as u32;
    let (f_stat, p_value) = if ss_within == 0.0 {
        (f64::INFINITY, 0.0)
    } else {
        let f = (ss_between / df_between as f64) / (ss_within / df_within as f64);
        (f, f_upper_tail(f, df_between, df_within)?)
    };

    Ok(AnovaResult {
        k,
        n,
        f_stat,
        p_value,
        eta_squared: ss_between / ss_total,
        df_between,
        df_within,
        ss_between,
        ss_within,
    })
}

/// Unpooled two-sample t-test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WelchResult {
    pub mean_a: f64,
    pub mean_b: f64,
    pub t_stat: f64,
    /// Welch–Satterthwaite degrees of freedom.
    pub df: f64,
    pub p_value: f64,
}

pub fn welch_t_test(a: &[f64], b: &[f64]) -> Result<WelchResult> {
    for s in [a, b] {
        if s.len() < 2 {
            return Err(Error::InsufficientData {
                needed: 2,
                found: s.len(),
            });
        }
    }
    let var = |s: &[f64], m: f64| {
        stable_sum(&s.iter().map(|x| (x - m) * (x - m)).collect::<Vec<_>>()) / (s.len() - 1) as f64
    };
    let (ma, mb) = (mean(a), mean(b));
    let va = var(a, ma) / a.len() as f64;
    let vb = var(b, mb) / b.len() as f64;
    let se2 = va + vb;
    if se2 == 0.0 {
        return Err(Error::Domain("both samples are constant".into()));
    }
    let t_stat = (ma - mb) / se2.sqrt();
    let df = se2 * se2 / (va * va / (a.len() - 1) as f64 + vb * vb / (b.len() - 1) as f64);
    Ok(WelchResult {
        mean_a: ma,
        mean_b: mb,
        t_stat,
        df,
        p_value: t_two_sided(t_stat, df)?,
    })
}

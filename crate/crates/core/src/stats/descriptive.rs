use super::{mean, stable_sum};
use crate::error::{Error, Result};
use serde::Serialize;

/// Moments and range of one sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DescriptiveStats {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (n − 1 denominator); 0 for a single value.
    pub sd: f64,
    /// `sd / mean`, undefined when the mean is 0.
    pub cv: Option<f64>,
    pub min: f64,
    pub max: f64,
    /// `m3 / m2^1.5` over population central moments; undefined for a
    /// constant sample.
    pub skewness: Option<f64>,
    /// `m4 / m2²` (non-excess); undefined for a constant sample.
    pub kurtosis: Option<f64>,
}

pub fn descriptive_stats(values: &[f64]) -> Result<DescriptiveStats> {
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Domain(format!("non-finite observation {bad}")));
    }
    let n = values.len();
    let nf = n as f64;
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = mean(values);

    let dev: Vec<f64> = values.iter().map(|v| v - mean).collect();
    let pow_sum = |p: i32| stable_sum(&dev.iter().map(|d| d.powi(p)).collect::<Vec<_>>());
    let ss = pow_sum(2);
    let sd = if n > 1 { (ss / (nf - 1.0)).sqrt() } else { 0.0 };
    let cv = (mean != 0.0).then(|| sd / mean);

    let (skewness, kurtosis) = if min == max {
        (None, None)
    } else {
        let m2 = ss / nf;
        let m3 = pow_sum(3) / nf;
        let m4 = pow_sum(4) / nf;
        (Some(m3 / m2.powf(1.5)), Some(m4 / (m2 * m2)))
    };

    Ok(DescriptiveStats {
        n,
        mean,
        sd,
        cv,
        min,
        max,
        skewness,
        kurtosis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_sample() {
        let d = descriptive_stats(&[-1.0, 0.0, 1.0]).unwrap();
        assert_eq!(d.mean, 0.0);
        assert_eq!(d.skewness, Some(0.0));
        assert_eq!(d.cv, None);
        assert!((d.sd - 1.0_f64).abs() < 1e-15);
    }

    #[test]
    fn kurtosis_of_one_to_five() {
        let d = descriptive_stats(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        assert!((d.kurtosis.unwrap() - 1.7).abs() < 1e-12);
        assert!((d.sd - 2.5_f64.sqrt()).abs() < 1e-15_f64);
        assert_eq!((d.min, d.max, d.mean), (1.0, 5.0, 3.0));
    }

    #[test]
    fn constant_and_single_samples() {
        let d = descriptive_stats(&[0.1, 0.1, 0.1]).unwrap();
        assert_eq!(d.mean, 0.1);
        assert_eq!(d.sd, 0.0);
        assert_eq!(d.skewness, None);
        assert_eq!(d.kurtosis, None);

        let d = descriptive_stats(&[4.0]).unwrap();
        assert_eq!((d.n, d.sd, d.cv), (1, 0.0, Some(0.0)));
        assert_eq!(d.kurtosis, None);
    }

    #[test]
    fn errors() {
        assert!(matches!(descriptive_stats(&[]), Err(Error::EmptySample)));
        assert!(descriptive_stats(&[1.0, f64::NAN]).is_err());
    }
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric, LogNormal};

use super::{ArticleCorpus, ArticleRecord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CitationDistribution {
    /// Uniform integers in `[min, max]`.
    Uniform { min: u32, max: u32 },
    /// Number of failures before the first success, success probability `p`.
    Geometric { p: f64 },
    /// `floor(X)` with `ln X ~ N(mu, sigma²)`, capped at `cap`.
    LogNormal { mu: f64, sigma: f64, cap: u32 },
}

/// Parameters for a seeded synthetic corpus.
///
/// Every journal publishes a number of articles drawn uniformly from
/// `articles_per_journal` in each year of `pub_years`. The census year is
/// the last publication year.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticConfig {
    pub n_categories: usize,
    pub journals_per_category: usize,
    pub articles_per_journal: (usize, usize),
    pub pub_years: (i32, i32),
    pub citation_distribution: CitationDistribution,
    pub seed: u64,
}

impl SyntheticConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_categories == 0 || self.journals_per_category == 0 {
            return Err(Error::Config(
                "category and journal counts must be >= 1".into(),
            ));
        }
        let (lo, hi) = self.articles_per_journal;
        if lo == 0 || lo > hi {
            return Err(Error::Config(format!(
                "articles_per_journal range [{lo}, {hi}] must be non-empty and >= 1"
            )));
        }
        if self.pub_years.0 > self.pub_years.1 {
            return Err(Error::Config(format!(
                "pub_years range [{}, {}] is empty",
                self.pub_years.0, self.pub_years.1
            )));
        }
        match self.citation_distribution {
            CitationDistribution::Uniform { min, max } if min > max => Err(Error::Config(format!(
                "uniform citation range [{min}, {max}] is empty"
            ))),
            CitationDistribution::Geometric { p } if !(p > 0.0 && p <= 1.0) => {
                Err(Error::Config(format!("geometric p = {p} outside (0, 1]")))
            }
            CitationDistribution::LogNormal { mu, sigma, .. }
                if !mu.is_finite() || !sigma.is_finite() || sigma < 0.0 =>
            {
                Err(Error::Config(format!(
                    "lognormal parameters mu = {mu}, sigma = {sigma} are invalid"
                )))
            }
            _ => Ok(()),
        }
    }
}

enum Sampler {
    Uniform(u32, u32),
    Geometric(Geometric),
    LogNormal(LogNormal<f64>, u32),
}

impl Sampler {
    fn new(dist: CitationDistribution) -> Result<Self> {
        Ok(match dist {
            CitationDistribution::Uniform { min, max } => Sampler::Uniform(min, max),
            CitationDistribution::Geometric { p } => Sampler::Geometric(
                Geometric::new(p).map_err(|e| Error::Config(format!("geometric: {e}")))?,
            ),
            CitationDistribution::LogNormal { mu, sigma, cap } => Sampler::LogNormal(
                LogNormal::new(mu, sigma).map_err(|e| Error::Config(format!("lognormal: {e}")))?,
                cap,
            ),
        })
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> u32 {
        match self {
            Sampler::Uniform(lo, hi) => rng.random_range(*lo..=*hi),
            Sampler::Geometric(g) => g.sample(rng).min(u32::MAX as u64) as u32,
            Sampler::LogNormal(d, cap) => {
                let x = d.sample(rng).floor();
                if x >= *cap as f64 {
                    *cap
                } else {
                    x as u32
                }
            }
        }
    }
}

/// Deterministic for a given config: the same config (seed included) always
/// yields the same records in the same order.
pub fn generate_synthetic_corpus(config: &SyntheticConfig) -> Result<ArticleCorpus> {
    config.validate()?;
    let sampler = Sampler::new(config.citation_distribution)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (first, last) = config.pub_years;
    let (lo, hi) = config.articles_per_journal;

    let mut records = Vec::new();
    for c in 0..config.n_categories {
        let category = format!("C{c}");
        for j in 0..config.journals_per_category {
            let journal = format!("C{c}J{j}");
            for year in first..=last {
                let n = rng.random_range(lo..=hi);
                for _ in 0..n {
                    let citations = sampler.sample(&mut rng);
                    records.push(ArticleRecord::new(&journal, &category, year, citations));
                }
            }
        }
    }
    ArticleCorpus::new(last, records)
}

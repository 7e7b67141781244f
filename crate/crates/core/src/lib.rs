//! Journal citation-impact indicators built on the share of highly cited
//! articles, plus the statistics used to judge whether an indicator is
//! comparable across subject categories.
//!
//! The crate is organised in four layers:
//!
//! * [`corpus`]: article-level and journal-level data models, CSV ingestion
//!   and seeded synthetic corpora.
//! * [`indicators`]: percentile citation thresholds per (category, year),
//!   the `pArt_q_t` indicator, windowed h-indices and mean citation rates.
//! * [`stats`]: descriptive moments, one-way ANOVA, Spearman correlation,
//!   competition ranking and the special functions behind their p-values.
//! * [`report`]: table builders and output formatting used by the `hicite`
//!   command-line tool.

pub mod corpus;
pub mod error;
pub mod indicators;
pub mod report;
pub mod stats;

pub use error::{Error, Result};

//! Percentile thresholds, the share of highly cited articles (`pArt_q_t`),
//! windowed h-indices and mean citation rates.
//!
//! An article is highly cited at level `q` when its citations equal or
//! exceed those of the article at nearest-rank position `ceil(q·N/100)` of
//! its (category, publication year) cell sorted in descending order. Ties
//! at the threshold all qualify, so a cell's qualifying share may exceed
//! `q/100`.

mod hindex;
mod part;
mod rate;
mod table;
mod threshold;

pub use hindex::{h_index, windowed_h_index};
pub use part::{highly_cited_count, part_indicator, PartResult};
pub use rate::{mean_citation_rate, CitationRateResult, Scope};
pub use table::compute_indicator_table;
pub use threshold::{
    build_threshold_table, citation_threshold, write_threshold_table, ThresholdTable,
    THRESHOLDS_HEADER,
};

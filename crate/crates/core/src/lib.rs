//! Journal impact indicators computed from raw yearly citation and item counts.
//!
//! A [`JournalRecord`] holds, for a single census year `t`, the citations
//! received in `t` by items published `j` years earlier together with the
//! number of citable items published in each of those years. From it the
//! [`indicators`] module derives the fixed-window `n`-year impact factors, the
//! 2-year rolling impact factors `R_j`, their maximum (2M-JIF) and the impact
//! maturity time. The [`stats`] module compares indicators across journals and
//! categories.
//!
//! All ratio comparisons are decided on integer cross-products; floating-point
//! values are derived output only.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod indicators;
pub mod model;
pub mod stats;

pub use indicators::{
    citation_age_profile, decompose_unmeasured_impact, five_jif, impact_maturity_time,
    max_rolling_window, n_jif, report, rolling_jif, two_jif, two_m_jif, AgeRow, IndicatorError,
    IndicatorReport, UnmeasuredImpact,
};
pub use model::{
    validate_record, CountKind, Dataset, DatasetError, IndicatorValue, JournalRecord, RawRecord,
    RecordError, RoundedDecimal,
};

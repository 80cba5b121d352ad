//! Impact-factor arithmetic over a single [`JournalRecord`].
//!
//! Ages are 1-based throughout: `c[j]` is the number of census-year citations
//! to items published `j` years earlier and `a[j]` the number of citable
//! items published that year.
//!
//! * `n`-year impact factor: `sum(c[1..=n]) / sum(a[1..=n])`.
//! * rolling impact factor `R_j`: `(c[j] + c[j+1]) / (a[j] + a[j+1])` for
//!   `j = 1..=h` with `h = Y - 1`. `R_1` is the classic 2-year impact factor.
//! * 2M-JIF: the largest defined `R_j`. The maturity time is `j* + 1` for the
//!   smallest maximizing `j*`.
//!
//! Windows with a zero denominator are undefined and never take part in the
//! maximum.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::model::{IndicatorValue, JournalRecord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndicatorError {
    WindowOutOfRange {
        window: usize,
        min: usize,
        max: usize,
    },
    NonConstantItems,
    ZeroItems,
}

impl fmt::Display for IndicatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndicatorError::WindowOutOfRange { window, min, max } => {
                write!(f, "window {window} outside the valid range {min}..={max}")
            }
            IndicatorError::NonConstantItems => f.write_str(
                "citable items differ between years; decomposition needs equal yearly output",
            ),
            IndicatorError::ZeroItems => f.write_str("citable items are zero in every year"),
        }
    }
}

impl core::error::Error for IndicatorError {}

/// Citations over the `n` most recent target years divided by items in those years.
pub fn n_jif(record: &JournalRecord, n: usize) -> Result<IndicatorValue, IndicatorError> {
    let max = record.horizon();
    if n < 1 || n > max {
        return Err(IndicatorError::WindowOutOfRange {
            window: n,
            min: 1,
            max,
        });
    }
    Ok(record.window_sum(1, n))
}

pub fn two_jif(record: &JournalRecord) -> IndicatorValue {
    record.window_sum(1, 2)
}

/// `None` for records with fewer than five target years.
pub fn five_jif(record: &JournalRecord) -> Option<IndicatorValue> {
    n_jif(record, 5).ok()
}

/// The 2-year window starting `j` years before the census year.
pub fn rolling_jif(record: &JournalRecord, j: usize) -> Result<IndicatorValue, IndicatorError> {
    let max = record.horizon() - 1;
    if j < 1 || j > max {
        return Err(IndicatorError::WindowOutOfRange {
            window: j,
            min: 1,
            max,
        });
    }
    Ok(record.window_sum(j, j + 1))
}

fn rolling_windows(record: &JournalRecord) -> impl Iterator<Item = (usize, IndicatorValue)> + '_ {
    (1..record.horizon()).map(move |j| (j, record.window_sum(j, j + 1)))
}

/// The maximizing lag and its window, or `None` if no window is defined.
///
/// Ties are exact and resolve to the smallest lag.
pub fn max_rolling_window(record: &JournalRecord) -> Option<(usize, IndicatorValue)> {
    let mut best: Option<(usize, IndicatorValue)> = None;
    for (j, window) in rolling_windows(record) {
        if !window.is_defined() {
            continue;
        }
        match &best {
            Some((_, current)) if window.cmp_value(current) != Some(Ordering::Greater) => {}
            _ => best = Some((j, window)),
        }
    }
    best
}

/// The 2-year maximum journal impact factor. Undefined (zero denominator)
/// only when every rolling window is undefined.
pub fn two_m_jif(record: &JournalRecord) -> IndicatorValue {
    max_rolling_window(record)
        .map(|(_, v)| v)
        .unwrap_or(IndicatorValue::new(0, 0))
}

pub fn impact_maturity_time(record: &JournalRecord) -> Option<u32> {
    max_rolling_window(record).map(|(j, _)| j as u32 + 1)
}

/// 2-JIF and the part of 2M-JIF it does not capture, for journals with equal yearly output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnmeasuredImpact {
    pub two_jif: f64,
    pub unmeasured: f64,
    /// The maximizing lag `j*`.
    pub lag: usize,
}

/// Splits 2M-JIF into 2-JIF plus `(c[j*] + c[j*+1] - c[1] - c[2]) / (2 a)`.
///
/// Requires every `a[j]` to be equal and positive.
pub fn decompose_unmeasured_impact(
    record: &JournalRecord,
) -> Result<UnmeasuredImpact, IndicatorError> {
    let items = record.citable_items();
    let per_year = items[0];
    if items.iter().any(|&a| a != per_year) {
        return Err(IndicatorError::NonConstantItems);
    }
    if per_year == 0 {
        return Err(IndicatorError::ZeroItems);
    }
    let (lag, _) = max_rolling_window(record).ok_or(IndicatorError::ZeroItems)?;
    let c = record.citations();
    let recent = u64::from(c[0]) + u64::from(c[1]);
    let best = u64::from(c[lag - 1]) + u64::from(c[lag]);
    let denominator = 2.0 * f64::from(per_year);
    Ok(UnmeasuredImpact {
        two_jif: recent as f64 / denominator,
        unmeasured: (best - recent) as f64 / denominator,
        lag,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AgeRow {
    pub age: usize,
    pub citations: u32,
    pub items: u32,
    pub rate: IndicatorValue,
}

/// Per-age citations, items and citations per item.
pub fn citation_age_profile(record: &JournalRecord) -> Vec<AgeRow> {
    record
        .citations()
        .iter()
        .zip(record.citable_items())
        .enumerate()
        .map(|(i, (&citations, &items))| AgeRow {
            age: i + 1,
            citations,
            items,
            rate: IndicatorValue::new(u64::from(citations), u64::from(items)),
        })
        .collect()
}

/// Every indicator computed for one journal.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IndicatorReport {
    pub journal: String,
    pub category: String,
    /// `rolling[j - 1]` is `R_j`.
    pub rolling: Vec<IndicatorValue>,
    pub two_m_jif: IndicatorValue,
    pub maturity_time: Option<u32>,
    /// Fixed `n`-year impact factors keyed by `n`: always 2, and 5 when the horizon allows.
    pub fixed: BTreeMap<u32, IndicatorValue>,
}

impl IndicatorReport {
    /// Number of rolling windows `h`.
    pub fn windows(&self) -> usize {
        self.rolling.len()
    }

    /// Maximizing lag `j*`.
    pub fn maximizing_lag(&self) -> Option<usize> {
        self.maturity_time.map(|t| t as usize - 1)
    }
}

pub fn report(record: &JournalRecord) -> IndicatorReport {
    let rolling: Vec<IndicatorValue> = rolling_windows(record).map(|(_, v)| v).collect();
    let best = max_rolling_window(record);
    let mut fixed = BTreeMap::new();
    fixed.insert(2, two_jif(record));
    if let Some(five) = five_jif(record) {
        fixed.insert(5, five);
    }
    IndicatorReport {
        journal: String::from(record.id()),
        category: String::from(record.category()),
        rolling,
        two_m_jif: best.map(|(_, v)| v).unwrap_or(IndicatorValue::new(0, 0)),
        maturity_time: best.map(|(j, _)| j as u32 + 1),
        fixed,
    }
}

use alloc::string::String;
use alloc::vec::Vec;

use super::{bucket, mean, Grouping, IndicatorName, IndicatorVector, StatsError};

/// Divisor used for the standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SdConvention {
    /// `n - 1`; a single observation has sd 0.
    #[default]
    Sample,
    /// `n`.
    Population,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupSummary {
    pub category: String,
    pub indicator: IndicatorName,
    /// Defined values used.
    pub count: usize,
    /// Undefined values left out.
    pub excluded: usize,
    pub median: f64,
    pub mean: f64,
    pub sd: f64,
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

fn summarize(
    category: String,
    indicator: IndicatorName,
    mut values: Vec<f64>,
    excluded: usize,
    sd: SdConvention,
) -> GroupSummary {
    values.sort_by(f64::total_cmp);
    let count = values.len();
    let m = mean(&values);
    let squares: f64 = values.iter().map(|v| (v - m) * (v - m)).sum();
    let divisor = match sd {
        SdConvention::Sample => count - 1,
        SdConvention::Population => count,
    };
    GroupSummary {
        category,
        indicator,
        count,
        excluded,
        median: median(&values),
        mean: m,
        sd: if divisor == 0 {
            0.0
        } else {
            libm::sqrt(squares / divisor as f64)
        },
    }
}

/// Median, mean and standard deviation per category, categories in lexicographic order.
pub fn group_summary(
    values: &IndicatorVector,
    grouping: &Grouping,
    sd: SdConvention,
) -> Result<Vec<GroupSummary>, StatsError> {
    let groups = bucket(values, grouping)?;
    if groups.is_empty() {
        return Err(StatsError::EmptyGroup { category: None });
    }
    groups
        .into_iter()
        .map(|(category, (defined, excluded))| {
            if defined.is_empty() {
                return Err(StatsError::EmptyGroup {
                    category: Some(String::from(category)),
                });
            }
            Ok(summarize(
                String::from(category),
                values.name(),
                defined,
                excluded,
                sd,
            ))
        })
        .collect()
}

/// The same measures over every journal at once, labelled `label`.
pub fn pooled_summary(
    values: &IndicatorVector,
    label: &str,
    sd: SdConvention,
) -> Result<GroupSummary, StatsError> {
    let defined: Vec<f64> = values.values().iter().flatten().copied().collect();
    if defined.is_empty() {
        return Err(StatsError::EmptyGroup { category: None });
    }
    let excluded = values.len() - defined.len();
    Ok(summarize(
        String::from(label),
        values.name(),
        defined,
        excluded,
        sd,
    ))
}

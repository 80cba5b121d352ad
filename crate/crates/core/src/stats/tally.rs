use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{Grouping, StatsError};
use crate::indicators::IndicatorReport;

/// How many journals in one category peak in each rolling window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaturityTally {
    pub category: String,
    /// `counts[j - 1]` journals have their maximum at `R_j` (maturity time `j + 1`).
    pub counts: Vec<usize>,
    /// Journals with no defined window, left out of `counts`.
    pub undefined: usize,
}

impl MaturityTally {
    pub fn journals(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Unrounded shares of [`journals`](Self::journals), in percent. All zero for an empty tally.
    pub fn percentages(&self) -> Vec<f64> {
        let total = self.journals();
        self.counts
            .iter()
            .map(|&c| {
                if total == 0 {
                    0.0
                } else {
                    100.0 * c as f64 / total as f64
                }
            })
            .collect()
    }

    /// Percentages rounded to one decimal with the largest-remainder method,
    /// so a non-empty tally sums to exactly 100.0.
    pub fn rounded_percentages(&self) -> Vec<f64> {
        let total = self.journals() as u64;
        if total == 0 {
            return vec![0.0; self.counts.len()];
        }
        // work in tenths of a percent: share = 1000 * c / total
        let mut tenths: Vec<u64> = self
            .counts
            .iter()
            .map(|&c| 1000 * c as u64 / total)
            .collect();
        let mut shortfall = 1000 - tenths.iter().sum::<u64>();
        let mut by_remainder: Vec<usize> = (0..self.counts.len()).collect();
        // stable sort keeps the earlier window first among equal remainders
        by_remainder.sort_by_key(|&i| core::cmp::Reverse(1000 * self.counts[i] as u64 % total));
        for i in by_remainder {
            if shortfall == 0 {
                break;
            }
            if !(1000 * self.counts[i] as u64).is_multiple_of(total) {
                tenths[i] += 1;
                shortfall -= 1;
            }
        }
        tenths.into_iter().map(|t| t as f64 / 10.0).collect()
    }

    /// Sums several tallies into one labelled `label`.
    pub fn pooled<'a>(label: &str, tallies: impl IntoIterator<Item = &'a MaturityTally>) -> Self {
        let mut pooled = MaturityTally {
            category: String::from(label),
            counts: Vec::new(),
            undefined: 0,
        };
        for tally in tallies {
            if pooled.counts.len() < tally.counts.len() {
                pooled.counts.resize(tally.counts.len(), 0);
            }
            for (slot, c) in pooled.counts.iter_mut().zip(&tally.counts) {
                *slot += c;
            }
            pooled.undefined += tally.undefined;
        }
        pooled
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaturityTallies {
    /// Every category of the grouping, lexicographic order, including empty ones.
    pub categories: Vec<MaturityTally>,
    /// Ids of journals without a maturity time.
    pub undefined: Vec<String>,
}

impl MaturityTallies {
    pub fn total(&self, label: &str) -> MaturityTally {
        MaturityTally::pooled(label, &self.categories)
    }
}

pub fn maturity_tally(
    reports: &[IndicatorReport],
    grouping: &Grouping,
) -> Result<MaturityTallies, StatsError> {
    let windows = reports
        .iter()
        .map(IndicatorReport::windows)
        .max()
        .unwrap_or(0);
    let mut by_category: BTreeMap<&str, MaturityTally> = grouping
        .categories()
        .into_iter()
        .map(|c| {
            (
                c,
                MaturityTally {
                    category: String::from(c),
                    counts: vec![0; windows],
                    undefined: 0,
                },
            )
        })
        .collect();
    let mut undefined = Vec::new();
    for report in reports {
        let category =
            grouping
                .category_of(&report.journal)
                .ok_or_else(|| StatsError::UnknownJournal {
                    id: report.journal.clone(),
                })?;
        let tally = by_category
            .get_mut(category)
            .expect("grouping categories cover every grouped journal");
        match report.maximizing_lag() {
            Some(lag) => tally.counts[lag - 1] += 1,
            None => {
                tally.undefined += 1;
                undefined.push(report.journal.clone());
            }
        }
    }
    Ok(MaturityTallies {
        categories: by_category.into_values().collect(),
        undefined,
    })
}

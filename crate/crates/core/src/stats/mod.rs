//! Cross-journal statistics: correlations, per-category summaries, maturity
//! tallies and the within/between-group variance decomposition.
//!
//! Undefined indicator values are carried as `None` and excluded pairwise
//! (correlations) or listwise within a group (summaries); every result
//! reports how many entries were excluded.

mod correlation;
mod summary;
mod tally;
mod variance;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::indicators::{n_jif, rolling_jif, two_m_jif, IndicatorError, IndicatorReport};
use crate::model::{Dataset, IndicatorValue, JournalRecord};

pub use correlation::{correlation, correlation_matrix, CorrelationMatrix, CorrelationMethod};
pub use summary::{group_summary, pooled_summary, GroupSummary, SdConvention};
pub use tally::{maturity_tally, MaturityTallies, MaturityTally};
pub use variance::{variance_decomposition, VarianceDecomposition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StatsError {
    InsufficientData {
        needed: usize,
        found: usize,
    },
    ZeroVariance,
    Misaligned,
    LengthMismatch {
        ids: usize,
        values: usize,
    },
    TooFewIndicators,
    /// `None` when there were no observations at all.
    EmptyGroup {
        category: Option<String>,
    },
    SingleGroup,
    AllUndefined,
    UnknownJournal {
        id: String,
    },
}

impl fmt::Display for StatsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatsError::InsufficientData { needed, found } => write!(
                f,
                "need at least {needed} jointly defined values, found {found}"
            ),
            StatsError::ZeroVariance => {
                f.write_str("zero variance after excluding undefined values")
            }
            StatsError::Misaligned => {
                f.write_str("indicator vectors are not aligned to the same journals")
            }
            StatsError::LengthMismatch { ids, values } => {
                write!(f, "{ids} journal ids but {values} values")
            }
            StatsError::TooFewIndicators => f.write_str("need at least two indicators"),
            StatsError::EmptyGroup { category: Some(c) } => {
                write!(f, "category {c:?} has no defined values")
            }
            StatsError::EmptyGroup { category: None } => {
                f.write_str("no defined values in any category")
            }
            StatsError::SingleGroup => {
                f.write_str("variance decomposition needs at least two categories")
            }
            StatsError::AllUndefined => f.write_str("every value is undefined"),
            StatsError::UnknownJournal { id } => write!(f, "journal {id:?} has no category"),
        }
    }
}

impl core::error::Error for StatsError {}

/// Names one column of an [`IndicatorReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndicatorName {
    /// `R_j`, 1-based lag.
    Rolling(u32),
    TwoMaxJif,
    /// `n`-JIF.
    Fixed(u32),
}

impl IndicatorName {
    pub fn extract(&self, report: &IndicatorReport) -> Option<IndicatorValue> {
        match *self {
            IndicatorName::Rolling(j) => report.rolling.get((j as usize).checked_sub(1)?).copied(),
            IndicatorName::TwoMaxJif => Some(report.two_m_jif),
            IndicatorName::Fixed(n) => report.fixed.get(&n).copied(),
        }
    }

    /// Computes the indicator straight from a record; any window the horizon allows.
    pub fn evaluate(&self, record: &JournalRecord) -> Result<IndicatorValue, IndicatorError> {
        match *self {
            IndicatorName::Rolling(j) => rolling_jif(record, j as usize),
            IndicatorName::TwoMaxJif => Ok(two_m_jif(record)),
            IndicatorName::Fixed(n) => n_jif(record, n as usize),
        }
    }

    /// `R_1, ..., R_h, 2M-JIF`: the correlation table columns.
    pub fn rolling_and_max(windows: usize) -> Vec<IndicatorName> {
        let mut names: Vec<_> = (1..=windows as u32).map(IndicatorName::Rolling).collect();
        names.push(IndicatorName::TwoMaxJif);
        names
    }
}

impl fmt::Display for IndicatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndicatorName::Rolling(j) => write!(f, "R_{j}"),
            IndicatorName::TwoMaxJif => f.write_str("2M-JIF"),
            IndicatorName::Fixed(n) => write!(f, "{n}-JIF"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseIndicatorNameError(pub String);

impl fmt::Display for ParseIndicatorNameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown indicator {:?} (expected R_<j>, 2M-JIF or <n>-JIF)",
            self.0
        )
    }
}

impl core::error::Error for ParseIndicatorNameError {}

impl FromStr for IndicatorName {
    type Err = ParseIndicatorNameError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseIndicatorNameError(String::from(s));
        let s = s.trim();
        if s.eq_ignore_ascii_case("2M-JIF") {
            return Ok(IndicatorName::TwoMaxJif);
        }
        let positive = |digits: &str| digits.parse::<u32>().ok().filter(|&k| k >= 1);
        if let Some(lag) = s.strip_prefix("R_").or_else(|| s.strip_prefix("r_")) {
            return positive(lag).map(IndicatorName::Rolling).ok_or_else(err);
        }
        if let Some(n) = s.strip_suffix("-JIF").or_else(|| s.strip_suffix("-jif")) {
            return positive(n).map(IndicatorName::Fixed).ok_or_else(err);
        }
        Err(err())
    }
}

/// One indicator's values aligned to a journal-id list.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorVector {
    name: IndicatorName,
    ids: Vec<String>,
    values: Vec<Option<f64>>,
}

impl IndicatorVector {
    pub fn new(
        name: IndicatorName,
        ids: Vec<String>,
        values: Vec<Option<f64>>,
    ) -> Result<Self, StatsError> {
        if ids.len() != values.len() {
            return Err(StatsError::LengthMismatch {
                ids: ids.len(),
                values: values.len(),
            });
        }
        Ok(IndicatorVector { name, ids, values })
    }

    pub fn from_reports(name: IndicatorName, reports: &[IndicatorReport]) -> Self {
        IndicatorVector {
            name,
            ids: reports.iter().map(|r| r.journal.clone()).collect(),
            values: reports
                .iter()
                .map(|r| name.extract(r).and_then(|v| v.value()))
                .collect(),
        }
    }

    /// Evaluates `name` on every record; fails if the window does not fit the horizon.
    pub fn from_records(
        name: IndicatorName,
        records: &[JournalRecord],
    ) -> Result<Self, IndicatorError> {
        let mut ids = Vec::with_capacity(records.len());
        let mut values = Vec::with_capacity(records.len());
        for record in records {
            ids.push(String::from(record.id()));
            values.push(name.evaluate(record)?.value());
        }
        Ok(IndicatorVector { name, ids, values })
    }

    pub fn name(&self) -> IndicatorName {
        self.name
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn values(&self) -> &[Option<f64>] {
        &self.values
    }

    pub fn defined_mask(&self) -> Vec<bool> {
        self.values.iter().map(Option::is_some).collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Keeps only entries whose id satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&str) -> bool) -> Self {
        let (ids, values) = self
            .ids
            .iter()
            .zip(&self.values)
            .filter(|(id, _)| keep(id))
            .map(|(id, v)| (id.clone(), *v))
            .unzip();
        IndicatorVector {
            name: self.name,
            ids,
            values,
        }
    }
}

/// Journal id to category.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Grouping {
    by_journal: BTreeMap<String, String>,
}

impl Grouping {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn by_category(dataset: &Dataset) -> Self {
        dataset
            .records()
            .iter()
            .map(|r| (String::from(r.id()), String::from(r.category())))
            .collect()
    }

    pub fn insert(&mut self, journal: impl Into<String>, category: impl Into<String>) {
        self.by_journal.insert(journal.into(), category.into());
    }

    pub fn category_of(&self, journal: &str) -> Option<&str> {
        self.by_journal.get(journal).map(String::as_str)
    }

    /// Distinct categories in lexicographic order.
    pub fn categories(&self) -> Vec<&str> {
        let set: BTreeSet<&str> = self.by_journal.values().map(String::as_str).collect();
        set.into_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.by_journal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_journal.is_empty()
    }
}

impl<J: Into<String>, C: Into<String>> FromIterator<(J, C)> for Grouping {
    fn from_iter<I: IntoIterator<Item = (J, C)>>(iter: I) -> Self {
        Grouping {
            by_journal: iter
                .into_iter()
                .map(|(j, c)| (j.into(), c.into()))
                .collect(),
        }
    }
}

/// Buckets a vector's values by category, lexicographic order.
/// Returns per category the defined values and the number of undefined ones.
pub(crate) fn bucket<'g>(
    values: &IndicatorVector,
    grouping: &'g Grouping,
) -> Result<BTreeMap<&'g str, (Vec<f64>, usize)>, StatsError> {
    let mut groups: BTreeMap<&str, (Vec<f64>, usize)> = BTreeMap::new();
    for (id, value) in values.ids.iter().zip(&values.values) {
        let category = grouping
            .category_of(id)
            .ok_or_else(|| StatsError::UnknownJournal { id: id.clone() })?;
        let entry = groups.entry(category).or_default();
        match value {
            Some(v) => entry.0.push(*v),
            None => entry.1 += 1,
        }
    }
    Ok(groups)
}

pub(crate) fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

//! Domain types shared by every other module.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Which count list a validation error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    Citations,
    CitableItems,
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountKind::Citations => f.write_str("citations"),
            CountKind::CitableItems => f.write_str("citable items"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecordError {
    /// `age` is 1-based: years before the census year.
    NegativeCount {
        kind: CountKind,
        age: usize,
        count: i64,
    },
    CountTooLarge {
        kind: CountKind,
        age: usize,
        count: i64,
    },
    LengthMismatch {
        citations: usize,
        citable_items: usize,
    },
    ShortHistory {
        years: usize,
    },
    EmptyId,
    EmptyCategory,
}

impl fmt::Display for RecordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordError::NegativeCount { kind, age, count } => {
                write!(f, "negative {kind} count {count} at age {age}")
            }
            RecordError::CountTooLarge { kind, age, count } => {
                write!(f, "{kind} count {count} at age {age} exceeds {}", u32::MAX)
            }
            RecordError::LengthMismatch {
                citations,
                citable_items,
            } => write!(
                f,
                "citations cover {citations} years but citable items cover {citable_items}"
            ),
            RecordError::ShortHistory { years } => {
                write!(
                    f,
                    "history of {years} year(s) is shorter than the minimum of 2"
                )
            }
            RecordError::EmptyId => f.write_str("journal id is empty"),
            RecordError::EmptyCategory => f.write_str("category is empty"),
        }
    }
}

impl core::error::Error for RecordError {}

/// Unvalidated record fields, as read from an input source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRecord {
    pub id: String,
    pub category: String,
    pub census_year: i32,
    /// `citations[j - 1]` is the count for items published `j` years before the census year.
    pub citations: Vec<i64>,
    pub citable_items: Vec<i64>,
}

impl From<&JournalRecord> for RawRecord {
    fn from(record: &JournalRecord) -> Self {
        RawRecord {
            id: record.id.clone(),
            category: record.category.clone(),
            census_year: record.census_year,
            citations: record.citations.iter().map(|&c| i64::from(c)).collect(),
            citable_items: record.citable_items.iter().map(|&a| i64::from(a)).collect(),
        }
    }
}

/// One journal's census-year citation counts and citable-item counts by age.
///
/// Index `j - 1` of either list always means "published `j` years before the
/// census year". Both lists have the same length `Y >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JournalRecord {
    id: String,
    category: String,
    census_year: i32,
    citations: Vec<u32>,
    citable_items: Vec<u32>,
}

fn convert_counts(kind: CountKind, raw: &[i64]) -> Result<Vec<u32>, RecordError> {
    raw.iter()
        .enumerate()
        .map(|(i, &count)| {
            if count < 0 {
                Err(RecordError::NegativeCount {
                    kind,
                    age: i + 1,
                    count,
                })
            } else {
                u32::try_from(count).map_err(|_| RecordError::CountTooLarge {
                    kind,
                    age: i + 1,
                    count,
                })
            }
        })
        .collect()
}

/// Checks every [`JournalRecord`] invariant and converts the counts.
pub fn validate_record(raw: RawRecord) -> Result<JournalRecord, RecordError> {
    if raw.id.trim().is_empty() {
        return Err(RecordError::EmptyId);
    }
    if raw.category.trim().is_empty() {
        return Err(RecordError::EmptyCategory);
    }
    if raw.citations.len() != raw.citable_items.len() {
        return Err(RecordError::LengthMismatch {
            citations: raw.citations.len(),
            citable_items: raw.citable_items.len(),
        });
    }
    if raw.citations.len() < 2 {
        return Err(RecordError::ShortHistory {
            years: raw.citations.len(),
        });
    }
    let citations = convert_counts(CountKind::Citations, &raw.citations)?;
    let citable_items = convert_counts(CountKind::CitableItems, &raw.citable_items)?;
    Ok(JournalRecord {
        id: raw.id,
        category: raw.category,
        census_year: raw.census_year,
        citations,
        citable_items,
    })
}

impl JournalRecord {
    pub fn new(
        id: impl Into<String>,
        category: impl Into<String>,
        census_year: i32,
        citations: Vec<u32>,
        citable_items: Vec<u32>,
    ) -> Result<Self, RecordError> {
        let record = JournalRecord {
            id: id.into(),
            category: category.into(),
            census_year,
            citations,
            citable_items,
        };
        validate_record(RawRecord::from(&record))
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn category(&self) -> &str {
        &self.category
    }

    pub fn census_year(&self) -> i32 {
        self.census_year
    }

    /// Number of target years `Y`.
    pub fn horizon(&self) -> usize {
        self.citations.len()
    }

    pub fn citations(&self) -> &[u32] {
        &self.citations
    }

    pub fn citable_items(&self) -> &[u32] {
        &self.citable_items
    }

    /// Sums citations and items over ages `first..=last` (1-based, inclusive).
    pub(crate) fn window_sum(&self, first: usize, last: usize) -> IndicatorValue {
        let range = first - 1..last;
        let numerator = self.citations[range.clone()]
            .iter()
            .map(|&c| u64::from(c))
            .sum();
        let denominator = self.citable_items[range]
            .iter()
            .map(|&a| u64::from(a))
            .sum();
        IndicatorValue::new(numerator, denominator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatasetError {
    HorizonTooShort {
        horizon: usize,
    },
    CensusYearMismatch {
        id: String,
        expected: i32,
        found: i32,
    },
    HorizonMismatch {
        id: String,
        expected: usize,
        found: usize,
    },
    DuplicateId {
        id: String,
    },
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatasetError::HorizonTooShort { horizon } => {
                write!(
                    f,
                    "dataset horizon {horizon} is shorter than the minimum of 2"
                )
            }
            DatasetError::CensusYearMismatch {
                id,
                expected,
                found,
            } => write!(
                f,
                "journal {id:?} has census year {found}, dataset census year is {expected}"
            ),
            DatasetError::HorizonMismatch {
                id,
                expected,
                found,
            } => write!(
                f,
                "journal {id:?} covers {found} target years, dataset horizon is {expected}"
            ),
            DatasetError::DuplicateId { id } => write!(f, "journal {id:?} appears more than once"),
        }
    }
}

impl core::error::Error for DatasetError {}

/// Validated collection of journals that share a census year and horizon.
///
/// An empty dataset is legal; it carries whatever census year and horizon its
/// source declared (possibly 0) and is rejected by downstream statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    census_year: i32,
    horizon: usize,
    records: Vec<JournalRecord>,
}

impl Dataset {
    pub fn new(
        census_year: i32,
        horizon: usize,
        records: Vec<JournalRecord>,
    ) -> Result<Self, DatasetError> {
        if !records.is_empty() && horizon < 2 {
            return Err(DatasetError::HorizonTooShort { horizon });
        }
        let mut seen = BTreeSet::new();
        for record in &records {
            if record.census_year != census_year {
                return Err(DatasetError::CensusYearMismatch {
                    id: record.id.clone(),
                    expected: census_year,
                    found: record.census_year,
                });
            }
            if record.horizon() != horizon {
                return Err(DatasetError::HorizonMismatch {
                    id: record.id.clone(),
                    expected: horizon,
                    found: record.horizon(),
                });
            }
            if !seen.insert(record.id.as_str()) {
                return Err(DatasetError::DuplicateId {
                    id: record.id.clone(),
                });
            }
        }
        Ok(Dataset {
            census_year,
            horizon,
            records,
        })
    }

    /// Builds a dataset taking census year and horizon from the first record.
    pub fn from_records(records: Vec<JournalRecord>) -> Result<Self, DatasetError> {
        let (census_year, horizon) = records
            .first()
            .map(|r| (r.census_year, r.horizon()))
            .unwrap_or((0, 0));
        Dataset::new(census_year, horizon, records)
    }

    pub fn census_year(&self) -> i32 {
        self.census_year
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn records(&self) -> &[JournalRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&JournalRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Distinct categories in lexicographic order.
    pub fn categories(&self) -> Vec<&str> {
        let set: BTreeSet<&str> = self.records.iter().map(|r| r.category.as_str()).collect();
        set.into_iter().collect()
    }

    /// The same dataset with records ordered by journal id.
    pub fn sorted_by_id(mut self) -> Self {
        self.records.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }

    pub fn into_records(self) -> Vec<JournalRecord> {
        self.records
    }
}

/// An exact citations-per-item ratio.
///
/// The value is undefined exactly when the denominator is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(into = "IndicatorValueRepr", from = "IndicatorValueRepr")
)]
pub struct IndicatorValue {
    numerator: u64,
    denominator: u64,
}

impl IndicatorValue {
    pub const fn new(numerator: u64, denominator: u64) -> Self {
        IndicatorValue {
            numerator,
            denominator,
        }
    }

    pub const fn numerator(&self) -> u64 {
        self.numerator
    }

    pub const fn denominator(&self) -> u64 {
        self.denominator
    }

    pub const fn is_defined(&self) -> bool {
        self.denominator != 0
    }

    pub fn value(&self) -> Option<f64> {
        self.is_defined()
            .then(|| self.numerator as f64 / self.denominator as f64)
    }

    /// Compares two ratios exactly. `None` if either is undefined.
    pub fn cmp_value(&self, other: &IndicatorValue) -> Option<Ordering> {
        if !self.is_defined() || !other.is_defined() {
            return None;
        }
        let lhs = u128::from(self.numerator) * u128::from(other.denominator);
        let rhs = u128::from(other.numerator) * u128::from(self.denominator);
        Some(lhs.cmp(&rhs))
    }

    /// Rounds the exact ratio to `places` decimals, halves away from zero.
    pub fn rounded(&self, places: u32) -> Option<RoundedDecimal> {
        if !self.is_defined() {
            return None;
        }
        let scale = 10u128.pow(places);
        let num = u128::from(self.numerator) * scale;
        let den = u128::from(self.denominator);
        let scaled = (2 * num + den) / (2 * den);
        Some(RoundedDecimal { scaled, places })
    }
}

/// A non-negative fixed-point decimal produced by exact rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RoundedDecimal {
    scaled: u128,
    places: u32,
}

impl RoundedDecimal {
    pub fn to_f64(&self) -> f64 {
        self.scaled as f64 / 10u128.pow(self.places) as f64
    }
}

impl fmt::Display for RoundedDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.places == 0 {
            return write!(f, "{}", self.scaled);
        }
        let scale = 10u128.pow(self.places);
        write!(
            f,
            "{}.{:0width$}",
            self.scaled / scale,
            self.scaled % scale,
            width = self.places as usize
        )
    }
}

#[cfg(feature = "serde")]
#[derive(serde::Serialize, serde::Deserialize)]
struct IndicatorValueRepr {
    value: Option<f64>,
    numerator: u64,
    denominator: u64,
}

#[cfg(feature = "serde")]
impl From<IndicatorValue> for IndicatorValueRepr {
    fn from(v: IndicatorValue) -> Self {
        IndicatorValueRepr {
            value: v.value(),
            numerator: v.numerator,
            denominator: v.denominator,
        }
    }
}

#[cfg(feature = "serde")]
impl From<IndicatorValueRepr> for IndicatorValue {
    fn from(r: IndicatorValueRepr) -> Self {
        IndicatorValue::new(r.numerator, r.denominator)
    }
}

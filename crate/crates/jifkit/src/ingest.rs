//! Delimited-text datasets.
//!
//! Two schemas are accepted, both comma-separated UTF-8 with a mandatory
//! header row:
//!
//! * long: `journal,category,census_year,target_year,citations,citable_items`,
//!   one row per journal and target year;
//! * wide: `journal,category,census_year,cit_1..cit_Y,art_1..art_Y`, one row
//!   per journal, where suffix `k` means `k` years before the census year.
//!
//! Journal and category strings are kept verbatim apart from surrounding
//! whitespace. Long-form journals are ordered by id; wide-form journals keep
//! their input order.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::io::{Read, Write};

use jifkit_core::{validate_record, Dataset, DatasetError, JournalRecord, RawRecord, RecordError};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Schema {
    Long,
    Wide,
}

pub const LONG_HEADER: [&str; 6] = [
    "journal",
    "category",
    "census_year",
    "target_year",
    "citations",
    "citable_items",
];

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}, column {column} ({field}): {message}")]
    Parse {
        line: u64,
        column: usize,
        field: String,
        message: String,
    },
    #[error("line {line}: malformed row: {message}")]
    Malformed { line: u64, message: String },
    #[error("header: {0}")]
    Schema(String),
    #[error("line {line}: journal {journal:?} already has a row for target year {target_year}")]
    DuplicateCell {
        line: u64,
        journal: String,
        target_year: i32,
    },
    #[error("line {line}: journal {journal:?} already appeared on line {first_line}")]
    DuplicateJournal {
        line: u64,
        journal: String,
        first_line: u64,
    },
    #[error("journal {journal:?}: no row for target year {missing_year}")]
    GapInYears { journal: String, missing_year: i32 },
    #[error("line {line}: census year {found} differs from {expected} used earlier")]
    MixedCensusYears {
        line: u64,
        expected: i32,
        found: i32,
    },
    #[error("line {line}: target year {target_year} is not before census year {census_year}")]
    TargetNotBeforeCensus {
        line: u64,
        target_year: i32,
        census_year: i32,
    },
    #[error(
        "line {line}: journal {journal:?} is in category {found:?}, earlier rows say {expected:?}"
    )]
    CategoryConflict {
        line: u64,
        journal: String,
        expected: String,
        found: String,
    },
    #[error("{}journal {journal:?}: {source}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    InvalidRecord {
        line: Option<u64>,
        journal: String,
        source: RecordError,
    },
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn from_csv(err: csv::Error) -> IngestError {
    let line = err.position().map(|p| p.line()).unwrap_or(0);
    match err.into_kind() {
        csv::ErrorKind::Io(io) => IngestError::Io(io),
        csv::ErrorKind::Utf8 { err, .. } => IngestError::Malformed {
            line,
            message: err.to_string(),
        },
        csv::ErrorKind::UnequalLengths {
            expected_len, len, ..
        } => IngestError::Malformed {
            line,
            message: format!("expected {expected_len} fields, found {len}"),
        },
        other => IngestError::Malformed {
            line,
            message: format!("{other:?}"),
        },
    }
}

/// Column lookup by header name for one row.
struct Row<'a> {
    record: &'a csv::StringRecord,
    columns: &'a HashMap<String, usize>,
    line: u64,
}

impl Row<'_> {
    fn text(&self, name: &str) -> &str {
        let idx = self.columns[name];
        self.record.get(idx).unwrap_or("")
    }

    fn int<T: std::str::FromStr>(&self, name: &str) -> Result<T, IngestError>
    where
        T::Err: std::fmt::Display,
    {
        let raw = self.text(name);
        raw.parse().map_err(|e: T::Err| IngestError::Parse {
            line: self.line,
            column: self.columns[name] + 1,
            field: name.to_string(),
            message: format!("{raw:?} is not an integer ({e})"),
        })
    }
}

fn reader<R: Read>(source: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(source)
}

fn header_columns<R: Read>(
    rdr: &mut csv::Reader<R>,
) -> Result<HashMap<String, usize>, IngestError> {
    let headers = rdr.headers().map_err(from_csv)?.clone();
    if headers.is_empty() || (headers.len() == 1 && headers[0].is_empty()) {
        return Err(IngestError::Schema("missing header row".into()));
    }
    let mut columns = HashMap::new();
    for (i, name) in headers.iter().enumerate() {
        if columns.insert(name.to_string(), i).is_some() {
            return Err(IngestError::Schema(format!(
                "column {name:?} appears twice"
            )));
        }
    }
    Ok(columns)
}

fn check_census(line: u64, found: i32, census: &mut Option<i32>) -> Result<(), IngestError> {
    match *census {
        Some(expected) if expected != found => Err(IngestError::MixedCensusYears {
            line,
            expected,
            found,
        }),
        _ => {
            *census = Some(found);
            Ok(())
        }
    }
}

fn require_nonempty(row: &Row<'_>, name: &str) -> Result<String, IngestError> {
    let value = row.text(name);
    if value.is_empty() {
        return Err(IngestError::Parse {
            line: row.line,
            column: row.columns[name] + 1,
            field: name.to_string(),
            message: "empty value".into(),
        });
    }
    Ok(value.to_string())
}

pub fn parse_dataset<R: Read>(source: R, schema: Schema) -> Result<Dataset, IngestError> {
    match schema {
        Schema::Long => parse_long(source),
        Schema::Wide => parse_wide(source),
    }
}

struct LongJournal {
    category: String,
    first_line: u64,
    /// age -> (citations, items)
    cells: BTreeMap<usize, (i64, i64)>,
}

fn parse_long<R: Read>(source: R) -> Result<Dataset, IngestError> {
    let mut rdr = reader(source);
    let columns = header_columns(&mut rdr)?;
    for name in LONG_HEADER {
        if !columns.contains_key(name) {
            return Err(IngestError::Schema(format!("missing column {name:?}")));
        }
    }
    if let Some(extra) = columns.keys().find(|c| !LONG_HEADER.contains(&c.as_str())) {
        return Err(IngestError::Schema(format!("unknown column {extra:?}")));
    }

    let mut census: Option<i32> = None;
    let mut journals: BTreeMap<String, LongJournal> = BTreeMap::new();
    let mut record = csv::StringRecord::new();
    while rdr.read_record(&mut record).map_err(from_csv)? {
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let row = Row {
            record: &record,
            columns: &columns,
            line,
        };
        let journal = require_nonempty(&row, "journal")?;
        let category = require_nonempty(&row, "category")?;
        let census_year: i32 = row.int("census_year")?;
        let target_year: i32 = row.int("target_year")?;
        let citations: i64 = row.int("citations")?;
        let items: i64 = row.int("citable_items")?;
        check_census(line, census_year, &mut census)?;
        if target_year >= census_year {
            return Err(IngestError::TargetNotBeforeCensus {
                line,
                target_year,
                census_year,
            });
        }
        let age = (census_year - target_year) as usize;
        for (kind, count) in [
            (jifkit_core::CountKind::Citations, citations),
            (jifkit_core::CountKind::CitableItems, items),
        ] {
            if count < 0 {
                return Err(IngestError::InvalidRecord {
                    line: Some(line),
                    journal,
                    source: RecordError::NegativeCount { kind, age, count },
                });
            }
        }
        let entry = journals
            .entry(journal.clone())
            .or_insert_with(|| LongJournal {
                category: category.clone(),
                first_line: line,
                cells: BTreeMap::new(),
            });
        if entry.category != category {
            return Err(IngestError::CategoryConflict {
                line,
                journal,
                expected: entry.category.clone(),
                found: category,
            });
        }
        match entry.cells.entry(age) {
            Entry::Occupied(_) => {
                return Err(IngestError::DuplicateCell {
                    line,
                    journal,
                    target_year,
                });
            }
            Entry::Vacant(slot) => {
                slot.insert((citations, items));
            }
        }
    }

    let census_year = census.unwrap_or(0);
    let mut records = Vec::with_capacity(journals.len());
    for (journal, data) in journals {
        let horizon = *data
            .cells
            .keys()
            .next_back()
            .expect("at least one row per journal");
        if let Some(missing) = (1..=horizon).find(|age| !data.cells.contains_key(age)) {
            return Err(IngestError::GapInYears {
                journal,
                missing_year: census_year - missing as i32,
            });
        }
        let (citations, citable_items) = data.cells.into_values().unzip();
        let raw = RawRecord {
            id: journal.clone(),
            category: data.category,
            census_year,
            citations,
            citable_items,
        };
        let record = validate_record(raw).map_err(|source| IngestError::InvalidRecord {
            line: Some(data.first_line),
            journal,
            source,
        })?;
        records.push(record);
    }
    let horizon = records.first().map_or(0, JournalRecord::horizon);
    Ok(Dataset::new(census_year, horizon, records)?)
}

/// `prefix_1..prefix_Y` column indices, or a schema error.
fn numbered_columns(
    columns: &HashMap<String, usize>,
    prefix: &str,
) -> Result<Vec<usize>, IngestError> {
    let mut found: BTreeMap<usize, usize> = BTreeMap::new();
    for (name, &idx) in columns {
        if let Some(suffix) = name.strip_prefix(prefix) {
            let k: usize = suffix
                .parse()
                .ok()
                .filter(|&k| k >= 1)
                .ok_or_else(|| IngestError::Schema(format!("unknown column {name:?}")))?;
            found.insert(k, idx);
        }
    }
    if let Some(missing) = (1..=found.len()).find(|k| !found.contains_key(k)) {
        return Err(IngestError::Schema(format!(
            "missing column \"{prefix}{missing}\""
        )));
    }
    Ok(found.into_values().collect())
}

fn parse_wide<R: Read>(source: R) -> Result<Dataset, IngestError> {
    let mut rdr = reader(source);
    let columns = header_columns(&mut rdr)?;
    for name in ["journal", "category", "census_year"] {
        if !columns.contains_key(name) {
            return Err(IngestError::Schema(format!("missing column {name:?}")));
        }
    }
    if let Some(extra) = columns.keys().find(|c| {
        !matches!(c.as_str(), "journal" | "category" | "census_year")
            && !c.starts_with("cit_")
            && !c.starts_with("art_")
    }) {
        return Err(IngestError::Schema(format!("unknown column {extra:?}")));
    }
    let cit = numbered_columns(&columns, "cit_")?;
    let art = numbered_columns(&columns, "art_")?;
    if cit.len() != art.len() {
        return Err(IngestError::Schema(format!(
            "{} citation columns but {} citable-item columns",
            cit.len(),
            art.len()
        )));
    }
    if cit.len() < 2 {
        return Err(IngestError::Schema(
            "need at least cit_1, cit_2, art_1 and art_2".into(),
        ));
    }
    let horizon = cit.len();
    let cit_names: Vec<String> = (1..=horizon).map(|k| format!("cit_{k}")).collect();
    let art_names: Vec<String> = (1..=horizon).map(|k| format!("art_{k}")).collect();

    let mut census: Option<i32> = None;
    let mut seen: HashMap<String, u64> = HashMap::new();
    let mut records = Vec::new();
    let mut record = csv::StringRecord::new();
    while rdr.read_record(&mut record).map_err(from_csv)? {
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let row = Row {
            record: &record,
            columns: &columns,
            line,
        };
        let journal = require_nonempty(&row, "journal")?;
        let category = require_nonempty(&row, "category")?;
        let census_year: i32 = row.int("census_year")?;
        check_census(line, census_year, &mut census)?;
        if let Some(&first_line) = seen.get(&journal) {
            return Err(IngestError::DuplicateJournal {
                line,
                journal,
                first_line,
            });
        }
        seen.insert(journal.clone(), line);
        let citations = cit_names
            .iter()
            .map(|n| row.int::<i64>(n))
            .collect::<Result<Vec<_>, _>>()?;
        let citable_items = art_names
            .iter()
            .map(|n| row.int::<i64>(n))
            .collect::<Result<Vec<_>, _>>()?;
        let raw = RawRecord {
            id: journal.clone(),
            category,
            census_year,
            citations,
            citable_items,
        };
        records.push(
            validate_record(raw).map_err(|source| IngestError::InvalidRecord {
                line: Some(line),
                journal,
                source,
            })?,
        );
    }
    Ok(Dataset::new(census.unwrap_or(0), horizon, records)?)
}

fn csv_writer<W: Write>(sink: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().from_writer(sink)
}

fn into_io(err: csv::Error) -> std::io::Error {
    match err.into_kind() {
        csv::ErrorKind::Io(io) => io,
        other => std::io::Error::other(format!("{other:?}")),
    }
}

/// Writes one row per journal and target year, journals in dataset order, most recent year first.
pub fn write_long_csv<W: Write>(dataset: &Dataset, sink: W) -> std::io::Result<()> {
    let mut w = csv_writer(sink);
    w.write_record(LONG_HEADER).map_err(into_io)?;
    for record in dataset.records() {
        for (i, (c, a)) in record
            .citations()
            .iter()
            .zip(record.citable_items())
            .enumerate()
        {
            let target_year = record.census_year() - (i as i32 + 1);
            w.write_record([
                record.id().to_string(),
                record.category().to_string(),
                record.census_year().to_string(),
                target_year.to_string(),
                c.to_string(),
                a.to_string(),
            ])
            .map_err(into_io)?;
        }
    }
    w.flush()
}

pub fn write_wide_csv<W: Write>(dataset: &Dataset, sink: W) -> std::io::Result<()> {
    let mut w = csv_writer(sink);
    let y = dataset.horizon();
    let mut header = vec![
        "journal".to_string(),
        "category".to_string(),
        "census_year".to_string(),
    ];
    header.extend((1..=y).map(|k| format!("cit_{k}")));
    header.extend((1..=y).map(|k| format!("art_{k}")));
    w.write_record(&header).map_err(into_io)?;
    for record in dataset.records() {
        let mut row = vec![
            record.id().to_string(),
            record.category().to_string(),
            record.census_year().to_string(),
        ];
        row.extend(record.citations().iter().map(u32::to_string));
        row.extend(record.citable_items().iter().map(u32::to_string));
        w.write_record(&row).map_err(into_io)?;
    }
    w.flush()
}

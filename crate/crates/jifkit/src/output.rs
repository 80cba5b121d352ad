//! Report serialization: csv, tsv and json.
//!
//! Text formats round indicator values to three decimals (exactly, halves away
//! from zero) and print `NA` for undefined cells. JSON carries unrounded
//! numbers and `null`. Output depends only on the payload, so identical inputs
//! give byte-identical output.

use std::io::{self, Write};

use jifkit_core::stats::{
    CorrelationMatrix, CorrelationMethod, GroupSummary, IndicatorName, MaturityTally, SdConvention,
    VarianceDecomposition,
};
use jifkit_core::{AgeRow, IndicatorReport, IndicatorValue};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const NA: &str = "NA";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Tsv,
    Json,
}

#[derive(Debug, Error)]
pub enum OutputError {
    #[error("nothing to write: {0}")]
    EmptyPayload(&'static str),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// A header plus rows of already formatted cells.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// Writes tables in csv or tsv, separated by one empty line.
pub fn write_tables<W: Write>(
    sink: &mut W,
    format: Format,
    tables: &[Table],
) -> Result<(), OutputError> {
    let delimiter = match format {
        Format::Csv => b',',
        Format::Tsv => b'\t',
        Format::Json => unreachable!("json payloads are serialized directly"),
    };
    for (i, table) in tables.iter().enumerate() {
        if i > 0 {
            sink.write_all(b"\n")?;
        }
        let mut w = csv::WriterBuilder::new()
            .delimiter(delimiter)
            .from_writer(&mut *sink);
        let io_err = |e: csv::Error| match e.into_kind() {
            csv::ErrorKind::Io(io) => io,
            other => io::Error::other(format!("{other:?}")),
        };
        w.write_record(&table.header).map_err(io_err)?;
        for row in &table.rows {
            w.write_record(row).map_err(io_err)?;
        }
        w.flush()?;
    }
    Ok(())
}

fn write_json<W: Write, T: Serialize>(sink: &mut W, payload: &T) -> Result<(), OutputError> {
    serde_json::to_writer_pretty(&mut *sink, payload)?;
    sink.write_all(b"\n")?;
    Ok(())
}

pub fn indicator_cell(value: &IndicatorValue) -> String {
    value
        .rounded(3)
        .map_or_else(|| NA.to_string(), |d| d.to_string())
}

/// Fixed-point text for a derived real; never prints a negative zero.
pub fn real_cell(value: f64, places: usize) -> String {
    if !value.is_finite() {
        return NA.to_string();
    }
    let text = format!("{value:.places$}");
    if text.starts_with('-') && text[1..].bytes().all(|b| b == b'0' || b == b'.') {
        text[1..].to_string()
    } else {
        text
    }
}

/// The document written by `compute --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub census_year: i32,
    pub horizon: usize,
    pub journals: Vec<IndicatorReport>,
}

pub fn read_report_json<R: io::Read>(source: R) -> Result<ReportDocument, OutputError> {
    Ok(serde_json::from_reader(source)?)
}

/// One row per journal: `R_1..R_h`, 2M-JIF, 5-JIF when present, maturity time.
pub fn report_table(reports: &[IndicatorReport]) -> Table {
    let windows = reports
        .iter()
        .map(IndicatorReport::windows)
        .max()
        .unwrap_or(0);
    let with_five = reports.iter().any(|r| r.fixed.contains_key(&5));
    let mut header = vec!["journal".to_string(), "category".to_string()];
    header.extend((1..=windows).map(|j| format!("R_{j}")));
    header.push("2M-JIF".into());
    if with_five {
        header.push("5-JIF".into());
    }
    header.push("maturity_time".into());
    let mut table = Table::new(header);
    for r in reports {
        let mut row = vec![r.journal.clone(), r.category.clone()];
        row.extend((0..windows).map(|j| {
            r.rolling
                .get(j)
                .map_or_else(|| NA.to_string(), indicator_cell)
        }));
        row.push(indicator_cell(&r.two_m_jif));
        if with_five {
            row.push(
                r.fixed
                    .get(&5)
                    .map_or_else(|| NA.to_string(), indicator_cell),
            );
        }
        row.push(
            r.maturity_time
                .map_or_else(|| NA.to_string(), |t| t.to_string()),
        );
        table.push(row);
    }
    table
}

pub fn write_reports<W: Write>(
    sink: &mut W,
    format: Format,
    document: &ReportDocument,
) -> Result<(), OutputError> {
    if document.journals.is_empty() {
        return Err(OutputError::EmptyPayload("no journals"));
    }
    match format {
        Format::Json => write_json(sink, document),
        _ => write_tables(sink, format, &[report_table(&document.journals)]),
    }
}

/// A correlation matrix for one category, or for the pooled journals.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationBlock {
    pub category: String,
    pub matrix: CorrelationMatrix,
}

#[derive(Serialize)]
struct CorrelationJson<'a> {
    method: &'static str,
    blocks: Vec<CorrelationBlockJson<'a>>,
}

#[derive(Serialize)]
struct CorrelationBlockJson<'a> {
    category: &'a str,
    journals: usize,
    indicators: Vec<String>,
    matrix: &'a [Vec<Option<f64>>],
    jointly_defined: &'a [Vec<usize>],
}

fn method_name(method: CorrelationMethod) -> &'static str {
    match method {
        CorrelationMethod::Pearson => "pearson",
        CorrelationMethod::Spearman => "spearman",
    }
}

/// Upper triangle including the diagonal, two decimals; cells below the diagonal are blank.
pub fn correlation_table(blocks: &[CorrelationBlock]) -> Table {
    let names: Vec<String> = blocks
        .first()
        .map(|b| b.matrix.names.iter().map(ToString::to_string).collect())
        .unwrap_or_default();
    let mut header = vec![
        "category".to_string(),
        "journals".to_string(),
        "indicator".to_string(),
    ];
    header.extend(names.iter().cloned());
    let mut table = Table::new(header);
    for block in blocks {
        let m = &block.matrix;
        for i in 0..m.size() {
            let mut row = vec![
                block.category.clone(),
                m.journals.to_string(),
                m.names[i].to_string(),
            ];
            for j in 0..m.size() {
                row.push(if j < i {
                    String::new()
                } else {
                    m.get(i, j)
                        .map_or_else(|| NA.to_string(), |r| real_cell(r, 2))
                });
            }
            table.push(row);
        }
    }
    table
}

pub fn write_correlations<W: Write>(
    sink: &mut W,
    format: Format,
    method: CorrelationMethod,
    blocks: &[CorrelationBlock],
) -> Result<(), OutputError> {
    if blocks.is_empty() {
        return Err(OutputError::EmptyPayload("no correlation matrices"));
    }
    match format {
        Format::Json => write_json(
            sink,
            &CorrelationJson {
                method: method_name(method),
                blocks: blocks
                    .iter()
                    .map(|b| CorrelationBlockJson {
                        category: &b.category,
                        journals: b.matrix.journals,
                        indicators: b.matrix.names.iter().map(ToString::to_string).collect(),
                        matrix: &b.matrix.entries,
                        jointly_defined: &b.matrix.pairs,
                    })
                    .collect(),
            },
        ),
        _ => write_tables(sink, format, &[correlation_table(blocks)]),
    }
}

/// Summaries for several indicators; `per_indicator[k]` holds indicator `k`'s
/// rows in the same category order for every `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryReport {
    pub sd: SdConvention,
    pub indicators: Vec<IndicatorName>,
    pub per_indicator: Vec<Vec<GroupSummary>>,
    pub tallies: Vec<MaturityTally>,
}

fn sd_name(sd: SdConvention) -> &'static str {
    match sd {
        SdConvention::Sample => "sample",
        SdConvention::Population => "population",
    }
}

#[derive(Serialize)]
struct SummaryJson<'a> {
    sd: &'static str,
    summaries: Vec<SummaryRowJson<'a>>,
    maturity: Vec<TallyJson<'a>>,
}

#[derive(Serialize)]
struct SummaryRowJson<'a> {
    category: &'a str,
    indicator: String,
    count: usize,
    excluded: usize,
    median: f64,
    mean: f64,
    sd: f64,
}

#[derive(Serialize)]
struct TallyJson<'a> {
    category: &'a str,
    journals: usize,
    undefined: usize,
    /// keyed by window, `R_j`
    counts: Vec<usize>,
    percentages: Vec<f64>,
}

type Measure<'a> = (&'a str, &'a dyn Fn(&GroupSummary) -> String);

/// Rows `N`, `Undefined`, `Median`, `Mean`, `Sd` per category; one column per indicator.
pub fn summary_table(report: &SummaryReport) -> Table {
    let mut header = vec![
        "category".to_string(),
        format!("measure (sd={})", sd_name(report.sd)),
    ];
    header.extend(report.indicators.iter().map(ToString::to_string));
    let mut table = Table::new(header);
    let Some(first) = report.per_indicator.first() else {
        return table;
    };
    for (row_idx, group) in first.iter().enumerate() {
        let cells = |f: &dyn Fn(&GroupSummary) -> String| -> Vec<String> {
            report
                .per_indicator
                .iter()
                .map(|rows| f(&rows[row_idx]))
                .collect()
        };
        let measures: [Measure<'_>; 5] = [
            ("N", &|s| s.count.to_string()),
            ("Undefined", &|s| s.excluded.to_string()),
            ("Median", &|s| real_cell(s.median, 3)),
            ("Mean", &|s| real_cell(s.mean, 3)),
            ("Sd", &|s| real_cell(s.sd, 3)),
        ];
        for (measure, f) in measures {
            let mut row = vec![group.category.clone(), measure.to_string()];
            row.extend(cells(f));
            table.push(row);
        }
    }
    table
}

/// Counts and one-decimal percentages per category.
pub fn tally_table(tallies: &[MaturityTally]) -> Table {
    let windows = tallies.iter().map(|t| t.counts.len()).max().unwrap_or(0);
    let mut header = vec![
        "category".to_string(),
        "journals".to_string(),
        "undefined".to_string(),
        "measure".to_string(),
    ];
    header.extend((1..=windows).map(|j| format!("R_{j}")));
    let mut table = Table::new(header);
    for t in tallies {
        let lead = || {
            vec![
                t.category.clone(),
                t.journals().to_string(),
                t.undefined.to_string(),
            ]
        };
        let mut counts = lead();
        counts.push("count".into());
        counts.extend(t.counts.iter().map(ToString::to_string));
        table.push(counts);
        let mut percent = lead();
        percent.push("percent".into());
        percent.extend(t.rounded_percentages().iter().map(|p| real_cell(*p, 1)));
        table.push(percent);
    }
    table
}

pub fn write_summary<W: Write>(
    sink: &mut W,
    format: Format,
    report: &SummaryReport,
) -> Result<(), OutputError> {
    if report.per_indicator.iter().all(Vec::is_empty) {
        return Err(OutputError::EmptyPayload("no summaries"));
    }
    match format {
        Format::Json => {
            let summaries = report
                .per_indicator
                .iter()
                .flatten()
                .map(|s| SummaryRowJson {
                    category: &s.category,
                    indicator: s.indicator.to_string(),
                    count: s.count,
                    excluded: s.excluded,
                    median: s.median,
                    mean: s.mean,
                    sd: s.sd,
                })
                .collect();
            let maturity = report
                .tallies
                .iter()
                .map(|t| TallyJson {
                    category: &t.category,
                    journals: t.journals(),
                    undefined: t.undefined,
                    counts: t.counts.clone(),
                    percentages: t.percentages(),
                })
                .collect();
            write_json(
                sink,
                &SummaryJson {
                    sd: sd_name(report.sd),
                    summaries,
                    maturity,
                },
            )
        }
        _ => write_tables(
            sink,
            format,
            &[summary_table(report), tally_table(&report.tallies)],
        ),
    }
}

#[derive(Serialize)]
struct VarianceJson<'a> {
    divisor: &'static str,
    indicators: Vec<VarianceRowJson<'a>>,
}

#[derive(Serialize)]
struct VarianceRowJson<'a> {
    indicator: String,
    journals: usize,
    groups: usize,
    excluded: usize,
    grand_mean: f64,
    within_group_variance: f64,
    between_group_variance: f64,
    total_variance: f64,
    reduction: f64,
    ratio: Option<f64>,
    #[serde(skip)]
    _marker: std::marker::PhantomData<&'a ()>,
}

fn ratio_cell(d: &VarianceDecomposition) -> String {
    match d.ratio {
        Some(r) => real_cell(r, 3),
        None if d.between > 0.0 => "Inf".to_string(),
        None => NA.to_string(),
    }
}

pub fn variance_table(rows: &[VarianceDecomposition]) -> Table {
    let mut table = Table::new([
        "indicator",
        "journals",
        "groups",
        "excluded",
        "grand_mean",
        "within_group_variance[divisor=N]",
        "between_group_variance[divisor=N]",
        "total_variance[divisor=N]",
        "reduction[within-between]",
        "ratio[between/within]",
    ]);
    for d in rows {
        table.push(vec![
            d.indicator.to_string(),
            d.journals.to_string(),
            d.groups.to_string(),
            d.excluded.to_string(),
            real_cell(d.grand_mean, 3),
            real_cell(d.within, 3),
            real_cell(d.between, 3),
            real_cell(d.total, 3),
            real_cell(d.reduction, 3),
            ratio_cell(d),
        ]);
    }
    table
}

pub fn write_variance<W: Write>(
    sink: &mut W,
    format: Format,
    rows: &[VarianceDecomposition],
) -> Result<(), OutputError> {
    if rows.is_empty() {
        return Err(OutputError::EmptyPayload("no variance decompositions"));
    }
    match format {
        Format::Json => write_json(
            sink,
            &VarianceJson {
                divisor: "N",
                indicators: rows
                    .iter()
                    .map(|d| VarianceRowJson {
                        indicator: d.indicator.to_string(),
                        journals: d.journals,
                        groups: d.groups,
                        excluded: d.excluded,
                        grand_mean: d.grand_mean,
                        within_group_variance: d.within,
                        between_group_variance: d.between,
                        total_variance: d.total,
                        reduction: d.reduction,
                        ratio: d.ratio,
                        _marker: std::marker::PhantomData,
                    })
                    .collect(),
            },
        ),
        _ => write_tables(sink, format, &[variance_table(rows)]),
    }
}

/// One journal's age profile.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub journal: String,
    pub rows: Vec<AgeRow>,
}

#[derive(Serialize)]
struct ProfileRowJson<'a> {
    journal: &'a str,
    age: usize,
    citations: u32,
    items: u32,
    rate: Option<f64>,
}

pub fn write_profiles<W: Write>(
    sink: &mut W,
    format: Format,
    profiles: &[Profile],
) -> Result<(), OutputError> {
    if profiles.is_empty() {
        return Err(OutputError::EmptyPayload("no journals to profile"));
    }
    match format {
        Format::Json => {
            let rows: Vec<_> = profiles
                .iter()
                .flat_map(|p| {
                    p.rows.iter().map(|r| ProfileRowJson {
                        journal: &p.journal,
                        age: r.age,
                        citations: r.citations,
                        items: r.items,
                        rate: r.rate.value(),
                    })
                })
                .collect();
            write_json(sink, &rows)
        }
        _ => {
            let mut table = Table::new(["journal", "age", "citations", "items", "rate"]);
            for p in profiles {
                for r in &p.rows {
                    table.push(vec![
                        p.journal.clone(),
                        r.age.to_string(),
                        r.citations.to_string(),
                        r.items.to_string(),
                        indicator_cell(&r.rate),
                    ]);
                }
            }
            write_tables(sink, format, &[table])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use jifkit_core::{report, JournalRecord};

    fn aiaa() -> IndicatorReport {
        report(
            &JournalRecord::new(
                "AIAA J",
                "EA",
                2011,
                vec![239, 354, 474, 418, 467],
                vec![275, 286, 301, 311, 356],
            )
            .unwrap(),
        )
    }

    fn doc(journals: Vec<IndicatorReport>) -> ReportDocument {
        ReportDocument {
            census_year: 2011,
            horizon: 5,
            journals,
        }
    }

    #[test]
    fn csv_row_matches_printed_table() {
        let mut out = Vec::new();
        write_reports(&mut out, Format::Csv, &doc(vec![aiaa()])).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text,
            "journal,category,R_1,R_2,R_3,R_4,2M-JIF,5-JIF,maturity_time\nAIAA J,EA,1.057,1.411,1.458,1.327,1.458,1.277,4\n"
        );
        let mut tsv = Vec::new();
        write_reports(&mut tsv, Format::Tsv, &doc(vec![aiaa()])).unwrap();
        assert!(String::from_utf8(tsv)
            .unwrap()
            .contains("AIAA J\tEA\t1.057\t"));
    }

    #[test]
    fn undefined_cells_print_na() {
        let empty =
            report(&JournalRecord::new("Z", "X", 2011, vec![0, 0, 0], vec![0, 0, 0]).unwrap());
        let mut out = Vec::new();
        write_reports(
            &mut out,
            Format::Csv,
            &ReportDocument {
                census_year: 2011,
                horizon: 3,
                journals: vec![empty.clone()],
            },
        )
        .unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap().lines().nth(1).unwrap(),
            "Z,X,NA,NA,NA,NA"
        );
        let mut json = Vec::new();
        write_reports(
            &mut json,
            Format::Json,
            &ReportDocument {
                census_year: 2011,
                horizon: 3,
                journals: vec![empty],
            },
        )
        .unwrap();
        let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
        assert!(v["journals"][0]["two_m_jif"]["value"].is_null());
        assert!(v["journals"][0]["maturity_time"].is_null());
    }

    #[test]
    fn empty_payload_is_an_error() {
        let mut out = Vec::new();
        assert!(matches!(
            write_reports(&mut out, Format::Csv, &doc(vec![])),
            Err(OutputError::EmptyPayload(_))
        ));
        assert!(out.is_empty());
        assert!(write_profiles(&mut out, Format::Json, &[]).is_err());
        assert!(write_variance(&mut out, Format::Tsv, &[]).is_err());
        assert!(
            write_correlations(&mut out, Format::Csv, CorrelationMethod::Pearson, &[]).is_err()
        );
    }

    #[test]
    fn json_keys_and_round_trip() {
        let document = doc(vec![aiaa()]);
        let mut out = Vec::new();
        write_reports(&mut out, Format::Json, &document).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["census_year"], 2011);
        assert_eq!(v["horizon"], 5);
        let j = &v["journals"][0];
        for key in ["rolling", "two_m_jif", "maturity_time", "fixed"] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["maturity_time"], 4);
        assert_eq!(j["fixed"]["5"]["numerator"], 1952);
        assert_eq!(j["rolling"][0]["value"].as_f64().unwrap(), 593.0 / 561.0);
        assert_eq!(read_report_json(out.as_slice()).unwrap(), document);
    }

    #[test]
    fn real_cells() {
        assert_eq!(real_cell(-0.0001, 3), "0.000");
        assert_eq!(real_cell(-0.25, 1), "-0.2");
        assert_eq!(real_cell(f64::NAN, 2), "NA");
        assert_eq!(real_cell(0.955, 2), "0.95"); // binary 0.95499...
    }
}

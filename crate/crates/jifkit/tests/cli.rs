use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use jifkit::output::read_report_json;

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/journals24_wide.csv")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jifkit"))
        .args(args)
        .env("JIFKIT_NO_COLOR", "1")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn stderr_of_failure(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(1), "{args:?}");
    assert!(out.stdout.is_empty());
    String::from_utf8(out.stderr).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn compute_matches_expected_fixture() {
    let expected = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/journals24_indicators.csv"),
    )
    .unwrap();
    assert_eq!(
        stdout(&["compute", "--input", fixture().to_str().unwrap()]),
        expected
    );
}

#[test]
fn long_schema_gives_the_same_indicators() {
    let dir = tempfile::tempdir().unwrap();
    let wide = jifkit::ingest::parse_dataset(
        std::fs::File::open(fixture()).unwrap(),
        jifkit::ingest::Schema::Wide,
    )
    .unwrap();
    let long_path = dir.path().join("long.csv");
    jifkit::ingest::write_long_csv(&wide, std::fs::File::create(&long_path).unwrap()).unwrap();
    let long = stdout(&[
        "compute",
        "-i",
        long_path.to_str().unwrap(),
        "--schema",
        "long",
    ]);
    let mut expected: Vec<String> = stdout(&["compute", "-i", fixture().to_str().unwrap()])
        .lines()
        .map(String::from)
        .collect();
    let header = expected.remove(0);
    expected.sort();
    let mut got: Vec<String> = long.lines().map(String::from).collect();
    assert_eq!(got.remove(0), header);
    assert_eq!(got, expected, "long form is ordered by journal id");
}

#[test]
fn json_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    stdout(&[
        "compute",
        "-i",
        fixture().to_str().unwrap(),
        "-f",
        "json",
        "-o",
        out.to_str().unwrap(),
    ]);
    let doc = read_report_json(std::fs::File::open(&out).unwrap()).unwrap();
    assert_eq!(
        (doc.census_year, doc.horizon, doc.journals.len()),
        (2011, 5, 24)
    );
    let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
    assert_eq!(again, std::fs::read_to_string(&out).unwrap());
}

#[test]
fn undefined_journal_prints_na() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "na.csv",
        "journal,category,census_year,cit_1,cit_2,cit_3,art_1,art_2,art_3\nNEW,X,2011,0,0,0,0,0,0\nOLD,X,2011,4,2,1,2,2,0\n",
    );
    let out = stdout(&["compute", "-i", &input]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "journal,category,R_1,R_2,2M-JIF,maturity_time");
    assert_eq!(lines[1], "NEW,X,NA,NA,NA,NA");
    assert_eq!(lines[2], "OLD,X,1.500,1.500,1.500,2");
}

#[test]
fn correlate_blocks_and_methods() {
    let input = fixture();
    let input = input.to_str().unwrap();
    let pearson = stdout(&["correlate", "-i", input]);
    assert!(pearson.starts_with("category,journals,indicator,R_1,R_2,R_3,R_4,2M-JIF\n"));
    // 8 categories plus the pooled block, five rows each
    assert_eq!(pearson.lines().count(), 1 + 9 * 5);
    assert!(
        pearson.contains("\nTotal,24,R_1,1.00,0.99,0.96,0.90,0.92\n"),
        "{pearson}"
    );
    let spearman = stdout(&[
        "correlate",
        "-i",
        input,
        "--method",
        "spearman",
        "--indicators",
        "R_1,2M-JIF",
    ]);
    assert!(spearman
        .lines()
        .any(|l| l.starts_with("Total,24,R_1,1.00,")));
    assert_ne!(spearman, pearson);
}

#[test]
fn summarize_reports_tallies() {
    let out = stdout(&[
        "summarize",
        "-i",
        fixture().to_str().unwrap(),
        "--sd",
        "population",
    ]);
    assert!(out.starts_with("category,measure (sd=population),R_1,R_2,R_3,R_4,2M-JIF\n"));
    assert!(out.contains("\nTotal,24,0,count,3,5,8,8\n"), "{out}");
    assert!(out.contains("\nTotal,24,0,percent,12.5,20.9,33.3,33.3\n"));
    assert!(out.contains("\nTotal,N,24,24,24,24,24\n"));
}

#[test]
fn variance_ratios_on_fixture() {
    let out = stdout(&[
        "variance",
        "-i",
        fixture().to_str().unwrap(),
        "--indicators",
        "R_1,2M-JIF",
    ]);
    let rows: Vec<Vec<&str>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    assert_eq!(rows[0][0], "R_1");
    assert_eq!(rows[1][0], "2M-JIF");
    assert_eq!(rows[0][9], "0.950");
    assert_eq!(rows[1][9], "0.932");
    assert!(out
        .lines()
        .next()
        .unwrap()
        .contains("within_group_variance[divisor=N]"));
}

#[test]
fn variance_needs_two_categories() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "one.csv",
        "journal,category,census_year,cit_1,cit_2,art_1,art_2\nA,X,2011,1,2,3,4\nB,X,2011,5,6,7,8\n",
    );
    let err = stderr_of_failure(&["variance", "-i", &input]);
    assert!(err.starts_with("jifkit: error: "), "{err}");
    assert!(err.contains("at least two categories"), "{err}");
}

#[test]
fn profile_filters_by_journal() {
    let input = fixture();
    let input = input.to_str().unwrap();
    let out = stdout(&["profile", "-i", input, "--journal", "AIAA J"]);
    assert_eq!(out.lines().nth(1), Some("AIAA J,1,239,275,0.869"));
    assert_eq!(out.lines().count(), 6);
    assert_eq!(
        stdout(&["profile", "-i", input]).lines().count(),
        1 + 24 * 5
    );
    let err = stderr_of_failure(&["profile", "-i", input, "--journal", "NOPE"]);
    assert!(err.contains("\"NOPE\""), "{err}");
}

#[test]
fn diagnostics_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("absent.csv");
    let err = stderr_of_failure(&["compute", "-i", missing.to_str().unwrap()]);
    assert!(err.contains("absent.csv"), "{err}");

    let input = write(
        dir.path(),
        "bad.csv",
        "journal,category,census_year,target_year,citations,citable_items\nA,X,2011,2010,5,5\nA,X,2011,2009,-3,5\n",
    );
    let err = stderr_of_failure(&["compute", "-i", &input, "--schema", "long"]);
    assert!(err.contains("bad.csv") && err.contains("line 3"), "{err}");

    let err = stderr_of_failure(&[
        "correlate",
        "-i",
        fixture().to_str().unwrap(),
        "--indicators",
        "R_9",
    ]);
    assert!(err.contains("R_9"), "{err}");
}

#[test]
fn failed_run_leaves_no_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.csv");
    let input = write(
        dir.path(),
        "empty.csv",
        "journal,category,census_year,cit_1,cit_2,art_1,art_2\n",
    );
    stderr_of_failure(&["compute", "-i", &input, "-o", target.to_str().unwrap()]);
    assert!(!target.exists());
}

#[test]
fn usage_errors_exit_with_clap_status() {
    let out = run(&["compute"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["compute", "-i", "x", "--format", "xml"]);
    assert_eq!(out.status.code(), Some(2));
}

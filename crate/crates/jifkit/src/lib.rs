//! Journal impact indicators from citation and citable-item counts: dataset
//! ingestion, report formats and the `jifkit` command line.

pub mod cli;
pub mod ingest;
pub mod output;

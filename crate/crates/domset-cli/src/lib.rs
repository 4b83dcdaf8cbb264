//! Library half of the benchmark CLI: experiment configuration, the
//! parallel harness, and report serialization. The binary in `main.rs` is a
//! thin front end over these modules and the `domset` crate.

pub mod config;
pub mod harness;
pub mod report;

pub use config::{ExperimentConfig, InstanceConfig, InstanceSource, LevyConfig, SolverConfig};
pub use harness::{run_experiment, resolve_instance, BenchmarkReport, InstanceFailure, InstanceRow, RunDetail};
pub use report::{csv_without_timing, parse_report_csv, report_to_csv, report_to_json, CsvRow, CSV_HEADER};

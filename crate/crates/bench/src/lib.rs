//! Benchmarking and verification tooling for `quickfloat`.

pub mod dataset;
pub mod harness;
pub mod reference;
pub mod verify;

pub use dataset::{generate_dataset, read_dataset, write_dataset, DatasetKind};
pub use harness::{count_paths, run_bench, BenchMode, BenchReport, PathCounters};
pub use reference::PackedLines;
pub use verify::{verify_differential, VerifyMode, VerifyReport};

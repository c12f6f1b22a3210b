//! Throughput measurement: parse every line, fold a running minimum so the
//! work cannot be optimized away, repeat, report min and average time.

use std::hint::black_box;
use std::time::Instant;

use anyhow::{bail, Result};
use quickfloat::{convert_components, scan_number, CodePath, Format, ScanOptions};

use crate::reference::{strtod, strtof, PackedLines};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct PathCounters {
    pub fast_path: u64,
    pub core_path: u64,
    pub two_mults: u64,
    pub fallback: u64,
}

impl PathCounters {
    pub fn record(&mut self, path: CodePath) {
        match path {
            CodePath::FastPath => self.fast_path += 1,
            CodePath::CorePath => self.core_path += 1,
            CodePath::TwoMults => self.two_mults += 1,
            CodePath::Fallback => self.fallback += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.fast_path + self.core_path + self.two_mults + self.fallback
    }

    /// Share of `count` in percent of all recorded parses.
    pub fn percent(&self, count: u64) -> f64 {
        if self.total() == 0 {
            0.0
        } else {
            100.0 * count as f64 / self.total() as f64
        }
    }
}

/// What a timed repetition does with each line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum BenchMode {
    /// Scan and convert with this library.
    Full,
    /// Scan only; the conversion to binary is skipped.
    ScanOnly,
    /// The C library's `strtod`/`strtof`.
    Reference,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub dataset: String,
    pub mode: BenchMode,
    pub numbers: usize,
    pub bytes: usize,
    pub repetitions: usize,
    pub min_ns: f64,
    pub avg_ns: f64,
    /// Running minimum of the values parsed in the last repetition.
    pub checksum: f64,
    pub counters: PathCounters,
}

impl BenchReport {
    /// Numbers per second at the minimum time.
    pub fn numbers_per_second(&self) -> f64 {
        self.numbers as f64 / (self.min_ns * 1e-9)
    }

    pub fn bytes_per_second(&self) -> f64 {
        self.bytes as f64 / (self.min_ns * 1e-9)
    }

    /// `(avg - min) / min`, the run-to-run margin of error.
    pub fn margin(&self) -> f64 {
        (self.avg_ns - self.min_ns) / self.min_ns
    }

    pub fn render(&self) -> String {
        let c = &self.counters;
        format!(
            "{dataset} [{mode:?}] {n} numbers, {reps} reps\n  \
             min {min:.3} ms  avg {avg:.3} ms  margin {margin:.2}%\n  \
             {mps:.2} Mnum/s  {mbps:.2} MB/s  checksum {checksum:e}\n  \
             paths: fast {fp:.2}%  core {cp:.2}%  two-mults {tm:.2}%  fallback {fb:.2}%",
            dataset = self.dataset,
            mode = self.mode,
            n = self.numbers,
            reps = self.repetitions,
            min = self.min_ns / 1e6,
            avg = self.avg_ns / 1e6,
            margin = 100.0 * self.margin(),
            mps = self.numbers_per_second() / 1e6,
            mbps = self.bytes_per_second() / 1e6,
            checksum = self.checksum,
            fp = c.percent(c.fast_path),
            cp = c.percent(c.core_path),
            tm = c.percent(c.two_mults),
            fb = c.percent(c.fallback),
        )
    }
}

fn spec(format: Format) -> &'static quickfloat::FormatSpec {
    format.spec()
}

/// Parses every line once, checking that each is a complete number, and
/// attributes it to a code path.
pub fn count_paths(lines: &PackedLines, format: Format) -> Result<PathCounters> {
    let options = ScanOptions::default();
    let mut counters = PathCounters::default();
    for (i, line) in lines.lines().enumerate() {
        let c = match scan_number(line, 0, &options) {
            Ok(c) if c.consumed == line.len() => c,
            _ => bail!("line {}: not a number: {:?}", i + 1, String::from_utf8_lossy(line)),
        };
        counters.record(convert_components(line, &c, spec(format)).1);
    }
    Ok(counters)
}

#[inline(never)]
fn pass_full(lines: &PackedLines, format: Format) -> f64 {
    let options = ScanOptions::default();
    let spec = spec(format);
    let mut min = f64::INFINITY;
    for line in lines.lines() {
        if let Ok(c) = scan_number(line, 0, &options) {
            let value = convert_components(line, &c, spec).0.value();
            if value < min {
                min = value;
            }
        }
    }
    min
}

#[inline(never)]
fn pass_scan_only(lines: &PackedLines) -> f64 {
    let options = ScanOptions::default();
    let mut min = u64::MAX;
    for line in lines.lines() {
        if let Ok(c) = scan_number(line, 0, &options) {
            let folded = c.significand.wrapping_add(c.exponent as u64);
            if folded < min {
                min = folded;
            }
        }
    }
    min as f64
}

#[inline(never)]
fn pass_reference(lines: &PackedLines, format: Format) -> f64 {
    let mut min = f64::INFINITY;
    for i in 0..lines.len() {
        let text = lines.c_line(i);
        let value = match format {
            Format::Binary64 => strtod(text).0,
            Format::Binary32 => f64::from(strtof(text).0),
        };
        if value < min {
            min = value;
        }
    }
    min
}

/// Times `repetitions` passes over `lines`.
pub fn run_bench(
    dataset: &str,
    lines: &PackedLines,
    repetitions: usize,
    format: Format,
    mode: BenchMode,
) -> Result<BenchReport> {
    if lines.is_empty() || repetitions == 0 {
        bail!("need at least one line and one repetition");
    }
    let counters = count_paths(lines, format)?;
    let pass = |lines: &PackedLines| match mode {
        BenchMode::Full => pass_full(lines, format),
        BenchMode::ScanOnly => pass_scan_only(lines),
        BenchMode::Reference => pass_reference(lines, format),
    };
    // One untimed pass warms caches and the branch predictor.
    black_box(pass(black_box(lines)));
    let mut times = Vec::with_capacity(repetitions);
    let mut checksum = 0.0;
    for _ in 0..repetitions {
        let start = Instant::now();
        checksum = black_box(pass(black_box(lines)));
        times.push(start.elapsed().as_nanos() as f64);
    }
    let min_ns = times.iter().copied().fold(f64::INFINITY, f64::min);
    let avg_ns = times.iter().sum::<f64>() / times.len() as f64;
    Ok(BenchReport {
        dataset: dataset.to_owned(),
        mode,
        numbers: lines.len(),
        bytes: lines.text_bytes(),
        repetitions,
        min_ns,
        avg_ns,
        checksum,
        counters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{generate_dataset, DatasetKind};

    #[test]
    fn counters_sum_to_lines() {
        for kind in [DatasetKind::Uniform, DatasetKind::Integer, DatasetKind::Bigint] {
            let lines = PackedLines::new(&generate_dataset(kind, 2_000, 11));
            let counters = count_paths(&lines, Format::Binary64).unwrap();
            assert_eq!(counters.total(), 2_000);
        }
    }

    #[test]
    fn checksum_is_the_minimum() {
        let lines = PackedLines::new(&["3.5", "-1.25", "7"]);
        for mode in [BenchMode::Full, BenchMode::Reference] {
            let report = run_bench("t", &lines, 3, Format::Binary64, mode).unwrap();
            assert_eq!(report.checksum, -1.25);
            assert!(report.min_ns <= report.avg_ns);
        }
    }

    #[test]
    fn rejects_bad_lines() {
        let lines = PackedLines::new(&["1.5", "abc"]);
        assert!(run_bench("t", &lines, 1, Format::Binary64, BenchMode::Full).is_err());
        let lines = PackedLines::new(&["1.5x"]);
        assert!(count_paths(&lines, Format::Binary64).is_err());
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use quickfloat::table::{emit_rust_source, format_entries, generate_table, verify_tie_safety};
use quickfloat::{parse_decimal, parse_hex, Format, ParseError, ScanOptions};
use quickfloat_bench::{
    generate_dataset, read_dataset, run_bench, verify_differential, write_dataset, BenchMode,
    DatasetKind, PackedLines, VerifyMode,
};

#[derive(Parser)]
#[command(name = "quickfloat", version, about = "Fast, correctly rounded float parsing: tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Width {
    #[value(name = "32")]
    W32,
    #[value(name = "64")]
    W64,
}

impl Width {
    fn format(self) -> Format {
        match self {
            Width::W32 => Format::Binary32,
            Width::W64 => Format::Binary64,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Full,
    ScanOnly,
    Reference,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Write a synthetic dataset, one number per line.
    Gen {
        #[arg(long, value_enum)]
        kind: DatasetKind,
        #[arg(long, default_value_t = 100_000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time parsing of a dataset file.
    Bench {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        reps: usize,
        #[arg(long, value_enum, default_value = "64")]
        format: Width,
        #[arg(long, value_enum, default_value = "all")]
        mode: ModeArg,
    },
    /// Compare against independent conversions; exits nonzero on mismatch.
    Verify {
        #[arg(long, value_enum)]
        mode: VerifyMode,
        #[arg(long, default_value_t = 1_000_000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Regenerate the power-of-five table.
    TableGen {
        /// Print Rust source for the static table instead of `q= hi= lo=` lines.
        #[arg(long)]
        emit_rust: bool,
        /// Print the tie-safety analysis of the small negative powers.
        #[arg(long)]
        tie_report: bool,
    },
    /// Parse one number and show its bits and the code path taken.
    Parse {
        #[arg(allow_hyphen_values = true)]
        text: String,
        #[arg(long, value_enum, default_value = "64")]
        format: Width,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { kind, count, seed, out } => {
            let lines = generate_dataset(kind, count, seed);
            write_dataset(&out, &lines).with_context(|| format!("writing {}", out.display()))?;
            println!("wrote {count} {} numbers to {}", kind.name(), out.display());
        }
        Command::Bench { file, reps, format, mode } => {
            let lines = read_dataset(&file).with_context(|| format!("reading {}", file.display()))?;
            let packed = PackedLines::new(&lines);
            let name = file.file_name().map_or_else(String::new, |n| n.to_string_lossy().into());
            let modes: &[BenchMode] = match mode {
                ModeArg::Full => &[BenchMode::Full],
                ModeArg::ScanOnly => &[BenchMode::ScanOnly],
                ModeArg::Reference => &[BenchMode::Reference],
                ModeArg::All => &[BenchMode::Full, BenchMode::ScanOnly, BenchMode::Reference],
            };
            let mut reports = Vec::new();
            for &m in modes {
                let report = run_bench(&name, &packed, reps, format.format(), m)?;
                println!("{}", report.render());
                reports.push(report);
            }
            if let [full, scan, reference] = reports.as_slice() {
                println!(
                    "speedup over reference {:.2}x, scan share of full time {:.1}%",
                    reference.min_ns / full.min_ns,
                    100.0 * scan.min_ns / full.min_ns
                );
            }
        }
        Command::Verify { mode, count, seed } => {
            let report = verify_differential(mode, count, seed);
            println!("{mode:?}: {} checked, {} mismatches", report.checked, report.mismatches);
            for example in &report.examples {
                println!("  {example}");
            }
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::TableGen { emit_rust, tie_report } => {
            let entries = generate_table();
            if tie_report {
                let report = verify_tie_safety();
                for row in &report.rows {
                    print!("q={} hi={:#018x} trailing_zeros={}", row.q, row.hi, row.hi_trailing_zeros);
                    if let Some((inv, high, tz)) = row.inverse {
                        print!(" inverse={inv:#018x} product_hi={high:#018x} product_tz={tz}");
                    }
                    println!();
                }
                println!("violations: {:?}", report.violations);
            } else if emit_rust {
                print!("{}", emit_rust_source(&entries));
            } else {
                print!("{}", format_entries(&entries));
            }
        }
        Command::Parse { text, format } => {
            let spec = format.format().spec();
            let bytes = text.as_bytes();
            let unsigned = bytes.strip_prefix(b"-").or(bytes.strip_prefix(b"+")).unwrap_or(bytes);
            let (bits, consumed, path) = if unsigned.len() > 1 && unsigned[1] | 0x20 == b'x' {
                let (bits, consumed) = parse_hex(bytes, spec).map_err(describe)?;
                (bits, consumed, "hexadecimal")
            } else {
                let parsed =
                    parse_decimal(bytes, &ScanOptions::default(), spec).map_err(describe)?;
                (parsed.bits, parsed.consumed, parsed.path.name())
            };
            if consumed != bytes.len() {
                bail!("trailing input after byte {consumed}: {:?}", &text[consumed..]);
            }
            let width = if format.format() == Format::Binary64 { 18 } else { 10 };
            println!("value: {:e}", bits.value());
            println!("bits:  {:#0width$x}", bits.bits);
            println!("path:  {path}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn describe(err: ParseError) -> anyhow::Error {
    anyhow::anyhow!("not a number: {err}")
}

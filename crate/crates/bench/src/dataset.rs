//! Synthetic datasets: one ASCII number per line.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DatasetKind {
    /// Uniform doubles in [0, 1) printed with 17 significant digits.
    Uniform,
    /// Uniform 32-bit unsigned integers.
    Integer,
    /// Three concatenated 64-bit unsigned integers (up to 60 digits).
    Bigint,
}

impl DatasetKind {
    pub fn name(self) -> &'static str {
        match self {
            DatasetKind::Uniform => "uniform",
            DatasetKind::Integer => "integer",
            DatasetKind::Bigint => "bigint",
        }
    }
}

/// Deterministic dataset of `count` lines for `seed`.
pub fn generate_dataset(kind: DatasetKind, count: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| match kind {
            DatasetKind::Uniform => format!("{:.16e}", rng.gen::<f64>()),
            DatasetKind::Integer => rng.gen::<u32>().to_string(),
            DatasetKind::Bigint => {
                format!("{}{}{}", rng.gen::<u64>(), rng.gen::<u64>(), rng.gen::<u64>())
            }
        })
        .collect()
}

pub fn write_dataset(path: &Path, lines: &[String]) -> io::Result<()> {
    let mut out = io::BufWriter::new(fs::File::create(path)?);
    for line in lines {
        out.write_all(line.as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Reads a dataset file, skipping empty lines and trimming `\r`.
pub fn read_dataset(path: &Path) -> io::Result<Vec<String>> {
    let text = fs::read_to_string(path)?;
    Ok(text
        .lines()
        .map(|l| l.trim_end_matches('\r'))
        .filter(|l| !l.is_empty())
        .map(str::to_owned)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            generate_dataset(DatasetKind::Uniform, 50, 7),
            generate_dataset(DatasetKind::Uniform, 50, 7)
        );
        assert_ne!(
            generate_dataset(DatasetKind::Uniform, 50, 7),
            generate_dataset(DatasetKind::Uniform, 50, 8)
        );
    }

    #[test]
    fn shapes() {
        for line in generate_dataset(DatasetKind::Uniform, 200, 1) {
            let digits = line.split('e').next().unwrap().bytes().filter(u8::is_ascii_digit).count();
            assert_eq!(digits, 17, "{line}");
            let x: f64 = line.parse().unwrap();
            assert!((0.0..1.0).contains(&x));
        }
        for line in generate_dataset(DatasetKind::Integer, 200, 1) {
            line.parse::<u32>().unwrap();
        }
        for line in generate_dataset(DatasetKind::Bigint, 200, 1) {
            assert!(line.len() <= 60 && line.bytes().all(|b| b.is_ascii_digit()));
        }
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join(format!("qf-dataset-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("d.txt");
        let lines = generate_dataset(DatasetKind::Bigint, 10, 3);
        write_dataset(&path, &lines).unwrap();
        assert_eq!(read_dataset(&path).unwrap(), lines);
        fs::remove_dir_all(dir).unwrap();
    }
}

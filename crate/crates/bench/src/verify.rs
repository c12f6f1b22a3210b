//! Differential verification of the fast parser against independent routes.

use std::ffi::CString;

use quickfloat::{
    exact_fallback, parse_binary32, parse_binary64, BigDecimal, FloatBits, ScanOptions, BINARY32,
    BINARY64,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::reference::{strtod, strtof};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyMode {
    /// Random decimal strings against the exact big-decimal conversion.
    RandomStrings,
    /// Random finite doubles printed with 17 digits must parse back exactly.
    Roundtrip64,
    /// Random finite floats printed with 9 digits must parse back exactly.
    Roundtrip32,
    /// Random decimal strings against the C library's strtod/strtof.
    ReferenceParser,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub mode: VerifyMode,
    pub checked: u64,
    pub mismatches: u64,
    /// Up to ten mismatching inputs with both results.
    pub examples: Vec<String>,
}

impl VerifyReport {
    fn new(mode: VerifyMode) -> Self {
        VerifyReport { mode, checked: 0, mismatches: 0, examples: Vec::new() }
    }

    fn check(&mut self, input: &str, ours: u64, theirs: u64) {
        self.checked += 1;
        if ours != theirs {
            self.mismatches += 1;
            if self.examples.len() < 10 {
                self.examples.push(format!("{input}: ours {ours:#x}, expected {theirs:#x}"));
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// A random decimal string: up to 40 significant digits, optional sign,
/// point and exponent, covering the whole binary64 range and beyond.
pub fn random_decimal(rng: &mut ChaCha8Rng) -> String {
    let mut s = String::new();
    if rng.gen_bool(0.25) {
        s.push('-');
    }
    let digits = if rng.gen_bool(0.7) { rng.gen_range(1..=19) } else { rng.gen_range(20..=40) };
    let point = rng.gen_range(0..=digits);
    for i in 0..digits {
        if i == point && i > 0 {
            s.push('.');
        }
        let d = if i == 0 { rng.gen_range(1..10) } else { rng.gen_range(0..10) };
        s.push(char::from(b'0' + d));
    }
    if rng.gen_bool(0.8) {
        s.push(if rng.gen_bool(0.5) { 'e' } else { 'E' });
        let e: i32 = rng.gen_range(-345..=330);
        s.push_str(&e.to_string());
    }
    s
}

fn ours64(s: &str) -> u64 {
    parse_binary64(s.as_bytes(), &ScanOptions::default()).expect("valid number").bits.bits
}

fn ours32(s: &str) -> u64 {
    parse_binary32(s.as_bytes(), &ScanOptions::default()).expect("valid number").bits.bits
}

pub fn verify_differential(mode: VerifyMode, count: u64, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport::new(mode);
    for _ in 0..count {
        match mode {
            VerifyMode::RandomStrings => {
                let s = random_decimal(&mut rng);
                let slow64 = exact_fallback(BigDecimal::parse(s.as_bytes()), &BINARY64);
                report.check(&s, ours64(&s), slow64.bits);
                let slow32 = exact_fallback(BigDecimal::parse(s.as_bytes()), &BINARY32);
                report.check(&s, ours32(&s), slow32.bits);
            }
            VerifyMode::Roundtrip64 => {
                let x = loop {
                    let x = f64::from_bits(rng.gen());
                    if x.is_finite() {
                        break x;
                    }
                };
                let s = format!("{x:.16e}");
                report.check(&s, ours64(&s), x.to_bits());
            }
            VerifyMode::Roundtrip32 => {
                let x = loop {
                    let x = f32::from_bits(rng.gen());
                    if x.is_finite() {
                        break x;
                    }
                };
                let s = format!("{x:.8e}");
                report.check(&s, ours32(&s), FloatBits::from_f32(x).bits);
            }
            VerifyMode::ReferenceParser => {
                let s = random_decimal(&mut rng);
                let c = CString::new(s.clone()).expect("no NUL");
                report.check(&s, ours64(&s), strtod(&c).0.to_bits());
                report.check(&s, ours32(&s), u64::from(strtof(&c).0.to_bits()));
            }
        }
    }
    report
}

//! 128-bit powers of five for decimal exponents `q ∈ [-342, 308]`.
//!
//! Non-negative `q` store `5^q` scaled into `[2^127, 2^128)` and truncated.
//! Negative `q` store a reciprocal `⌈2^b / 5^-q⌉` scaled the same way, so
//! the stored value is never below the exact one. The static data lives in
//! `table_data.rs` and is produced by [`generate_table`] / [`emit_rust_source`].

use std::fmt::Write as _;

use crate::format::{MAX_TABLE_Q, MIN_TABLE_Q};
use crate::table_data::POWERS_OF_FIVE;

pub const TABLE_LEN: usize = (MAX_TABLE_Q - MIN_TABLE_Q + 1) as usize;

/// Two most significant 64-bit words of a normalized power of five.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PowerEntry {
    pub hi: u64,
    pub lo: u64,
}

impl PowerEntry {
    pub const fn new(hi: u64, lo: u64) -> Self {
        PowerEntry { hi, lo }
    }

    pub const fn as_u128(self) -> u128 {
        ((self.hi as u128) << 64) | self.lo as u128
    }
}

/// Table entry for `q`. Panics if `q` is outside `[-342, 308]`.
#[inline]
pub fn lookup(q: i32) -> PowerEntry {
    assert!((MIN_TABLE_Q..=MAX_TABLE_Q).contains(&q), "decimal exponent {q} outside table");
    POWERS_OF_FIVE[(q - MIN_TABLE_Q) as usize]
}

/// The whole static table, ordered by ascending `q`.
pub fn table() -> &'static [PowerEntry; TABLE_LEN] {
    &POWERS_OF_FIVE
}

/// Little-endian multiword unsigned integer, just enough for table generation.
#[derive(Clone, Debug)]
struct Words(Vec<u64>);

impl Words {
    fn one() -> Self {
        Words(vec![1])
    }

    fn power_of_two(exp: u32) -> Self {
        let mut words = vec![0u64; exp as usize / 64 + 1];
        words[exp as usize / 64] = 1 << (exp % 64);
        Words(words)
    }

    fn trim(&mut self) {
        while self.0.len() > 1 && *self.0.last().unwrap() == 0 {
            self.0.pop();
        }
    }

    fn mul_small(&mut self, k: u64) {
        let mut carry = 0u128;
        for w in &mut self.0 {
            let t = u128::from(*w) * u128::from(k) + carry;
            *w = t as u64;
            carry = t >> 64;
        }
        if carry != 0 {
            self.0.push(carry as u64);
        }
    }

    fn div_small(&mut self, k: u64) {
        let mut rem = 0u128;
        for w in self.0.iter_mut().rev() {
            let cur = (rem << 64) | u128::from(*w);
            *w = (cur / u128::from(k)) as u64;
            rem = cur % u128::from(k);
        }
        self.trim();
    }

    fn add_one(&mut self) {
        for w in &mut self.0 {
            let (sum, overflow) = w.overflowing_add(1);
            *w = sum;
            if !overflow {
                return;
            }
        }
        self.0.push(1);
    }

    fn bit_length(&self) -> u32 {
        let top = self.0.len() - 1;
        top as u32 * 64 + (64 - self.0[top].leading_zeros())
    }

    /// Bits `[shift, shift + 128)` as a `u128`.
    fn window(&self, shift: u32) -> u128 {
        let word = (shift / 64) as usize;
        let bit = shift % 64;
        let get = |i: usize| u128::from(self.0.get(i).copied().unwrap_or(0));
        let low = (get(word) | get(word + 1) << 64) >> bit;
        if bit == 0 {
            low
        } else {
            low | get(word + 2) << (128 - bit)
        }
    }

    /// Scales into `[2^127, 2^128)` by a power of two, truncating.
    fn top_128(&self) -> u128 {
        let len = self.bit_length();
        if len >= 128 {
            self.window(len - 128)
        } else {
            self.window(0) << (128 - len)
        }
    }
}

fn power_of_five(n: u32) -> Words {
    let mut p = Words::one();
    for _ in 0..n {
        p.mul_small(5);
    }
    p
}

/// `⌊2^exp / 5^n⌋`, by dividing by five `n` times (floors compose).
fn floor_pow2_over_pow5(exp: u32, n: u32) -> Words {
    let mut v = Words::power_of_two(exp);
    for _ in 0..n {
        v.div_small(5);
    }
    v
}

fn split(v: u128) -> PowerEntry {
    PowerEntry::new((v >> 64) as u64, v as u64)
}

/// Computes the entry for one `q` from scratch.
pub fn generate_entry(q: i32) -> PowerEntry {
    assert!((MIN_TABLE_Q..=MAX_TABLE_Q).contains(&q));
    if q >= 0 {
        return split(power_of_five(q as u32).top_128());
    }
    let n = (-q) as u32;
    // 5^n is never a power of two, so ⌈log2 5^n⌉ is its bit length.
    let z = power_of_five(n).bit_length();
    let mut c = if q >= -27 {
        floor_pow2_over_pow5(z + 127, n)
    } else {
        floor_pow2_over_pow5(2 * z + 128, n)
    };
    c.add_one();
    split(c.top_128())
}

/// Regenerates all 651 entries, `q` ascending.
pub fn generate_table() -> Vec<PowerEntry> {
    (MIN_TABLE_Q..=MAX_TABLE_Q).map(generate_entry).collect()
}

/// One line per entry: `q=<q> hi=0x<16 hex> lo=0x<16 hex>`.
pub fn format_entries(entries: &[PowerEntry]) -> String {
    let mut out = String::with_capacity(entries.len() * 48);
    for (i, e) in entries.iter().enumerate() {
        let q = MIN_TABLE_Q + i as i32;
        writeln!(out, "q={q} hi=0x{:016x} lo=0x{:016x}", e.hi, e.lo).unwrap();
    }
    out
}

/// Rust source for `table_data.rs`.
pub fn emit_rust_source(entries: &[PowerEntry]) -> String {
    let mut out = String::new();
    out.push_str("// Generated by `quickfloat table-gen --emit-rust`. Do not edit.\n\n");
    out.push_str("use crate::table::{PowerEntry, TABLE_LEN};\n\n");
    out.push_str("/// Entry `i` holds the normalized power of five for `q = i - 342`.\n");
    out.push_str("pub(crate) static POWERS_OF_FIVE: [PowerEntry; TABLE_LEN] = [\n");
    for (i, e) in entries.iter().enumerate() {
        let q = MIN_TABLE_Q + i as i32;
        writeln!(out, "    PowerEntry::new(0x{:016x}, 0x{:016x}), // {q}", e.hi, e.lo).unwrap();
    }
    out.push_str("];\n");
    out
}

/// Inverse of an odd `x` modulo 2^64 by five Newton steps `y ← y(2 − yx)`.
pub fn multiplicative_inverse(x: u64) -> u64 {
    assert!(x & 1 == 1, "only odd integers are invertible modulo 2^64");
    let step = |y: u64| y.wrapping_mul(2u64.wrapping_sub(y.wrapping_mul(x)));
    let mut y = x;
    for _ in 0..5 {
        y = step(y);
    }
    y
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TieSafetyRow {
    pub q: i32,
    pub hi: u64,
    pub hi_trailing_zeros: u32,
    /// For odd `hi`: the inverse, the high word of `hi × inverse`, and that
    /// word's trailing zero count.
    pub inverse: Option<(u64, u64, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TieSafetyReport {
    pub rows: Vec<TieSafetyRow>,
    pub violations: Vec<i32>,
}

/// Largest admissible trailing-zero count of a reciprocal's high word.
pub const MAX_HI_TRAILING_ZEROS: u32 = 9;
/// Largest admissible trailing-zero count of `hi × inverse(hi) / 2^64`.
pub const MAX_INVERSE_PRODUCT_TRAILING_ZEROS: u32 = 5;

/// Checks the reciprocals for `q ∈ [-17, -1]` against the two conditions
/// that rule out a spurious halfway detection after a single multiplication:
/// a 128-bit product can only end in 64+9 zero bits (or zeros and a final
/// one) if the high word has at least 10 trailing zeros, or if it is odd and
/// its inverse yields a product whose high word has many trailing zeros.
pub fn verify_tie_safety() -> TieSafetyReport {
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for q in -17..=-1 {
        let hi = lookup(q).hi;
        let hi_trailing_zeros = hi.trailing_zeros();
        let inverse = (hi & 1 == 1).then(|| {
            let inv = multiplicative_inverse(hi);
            let high = ((u128::from(hi) * u128::from(inv)) >> 64) as u64;
            (inv, high, high.trailing_zeros())
        });
        let bad_hi = hi_trailing_zeros > MAX_HI_TRAILING_ZEROS;
        let bad_inv = inverse.is_some_and(|(_, _, tz)| tz > MAX_INVERSE_PRODUCT_TRAILING_ZEROS);
        if bad_hi || bad_inv {
            violations.push(q);
        }
        rows.push(TieSafetyRow {
            q,
            hi,
            hi_trailing_zeros,
            inverse,
        });
    }
    TieSafetyReport { rows, violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_powers() {
        assert_eq!(lookup(0), PowerEntry::new(0x8000000000000000, 0));
        assert_eq!(lookup(27), PowerEntry::new(0xcecb8f27f4200f3a, 0));
        assert_eq!(lookup(28), PowerEntry::new(0x813f3978f8940984, 0x4000000000000000));
        assert_eq!(lookup(55), PowerEntry::new(0xd0cf4b50cfe20765, 0xfff4b4e3f741cf6d));
    }

    #[test]
    fn reciprocals() {
        assert_eq!(lookup(-1), PowerEntry::new(0xcccccccccccccccc, 0xcccccccccccccccd));
        assert_eq!(lookup(-17), PowerEntry::new(0xb877aa3236a4b449, 0x09befeb9fad487c3));
        assert_eq!(lookup(-27), PowerEntry::new(0x9e74d1b791e07e48, 0x775ea264cf55347e));
        assert_eq!(lookup(-28), PowerEntry::new(0xfd87b5f28300ca0d, 0x8bca9d6e188853fc));
        assert_eq!(lookup(-34), PowerEntry::new(0x84ec3c97da624ab4, 0xbd5af13bef0b113e));
        assert_eq!(lookup(-40), PowerEntry::new(0x8b61313bbabce2c6, 0x2323ac4b3b3da015));
    }

    #[test]
    fn small_positive_powers_are_exact() {
        for q in 0..=27 {
            let p = 5u64.pow(q as u32);
            let e = lookup(q);
            assert_eq!(e.lo, 0);
            assert_eq!(e.hi, p << p.leading_zeros());
        }
    }

    #[test]
    fn generated_matches_static() {
        assert_eq!(generate_table().as_slice(), table().as_slice());
    }

    #[test]
    fn normalized() {
        assert!(table().iter().all(|e| e.hi >> 63 == 1));
    }

    #[test]
    #[should_panic]
    fn lookup_out_of_range() {
        lookup(309);
    }

    #[test]
    fn inverses() {
        assert_eq!(multiplicative_inverse(1), 1);
        assert_eq!(multiplicative_inverse(0x83126e978d4fdf3b), 0xc687d6343eb1a1f3);
        assert_eq!(multiplicative_inverse(0xb877aa3236a4b449), 0x89ee897ef59d7df9);
        for x in [3u64, 5, 0xffff_ffff_ffff_ffff, 0x1234_5678_9abc_def1] {
            assert_eq!(x.wrapping_mul(multiplicative_inverse(x)), 1);
        }
    }

    #[test]
    fn tie_safety() {
        let report = verify_tie_safety();
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        let row = |q: i32| report.rows.iter().find(|r| r.q == q).unwrap().clone();
        assert_eq!(row(-16).inverse, Some((0x30fad280461f66d3, 0x2c1df79145125a20, 5)));
        assert!(row(-4).hi_trailing_zeros <= 2);
        assert!(row(-1).inverse.is_none());
        assert!(report.rows.iter().all(|r| r.hi_trailing_zeros <= 2));
    }

    #[test]
    fn line_format() {
        let text = format_entries(table());
        assert_eq!(text.lines().count(), TABLE_LEN);
        assert_eq!(text.lines().nth(342), Some("q=0 hi=0x8000000000000000 lo=0x0000000000000000"));
    }
}

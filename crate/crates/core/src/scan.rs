//! Decimal string scanning: ASCII bytes to `(sign, w, q)` components.
//!
//! The scanner reads an optional sign, a significand with an optional `.`,
//! and an optional `e`/`E` exponent. It keeps the first 19 significant digits
//! in a `u64` and records whether anything was dropped. It never reads at or
//! beyond `bytes.len()`, and it stops (without error) at the first byte that
//! cannot continue the number.

use crate::error::ParseError;

/// Number of decimal digits that always fit in a `u64`.
pub const MAX_SIGNIFICAND_DIGITS: usize = 19;

/// Saturation bound for the magnitude of the decimal exponent.
pub const EXPONENT_SATURATION: i64 = 1 << 15;

// Explicit exponents stop accumulating here. Digit-position adjustments are
// bounded by the input length, so the sum still classifies correctly before
// the final clamp to EXPONENT_SATURATION.
const EXPLICIT_EXPONENT_CAP: i64 = 1 << 48;

/// Syntax options. The default is permissive: `+1`, `1.`, `.5`, `inf` and
/// `nan` are all accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    /// Reject `1.` and `.5` (digits must appear on both sides of the point).
    pub require_digits_around_point: bool,
    pub allow_leading_plus: bool,
    /// Accept `inf`, `infinity` and `nan` (case-insensitive, optional sign).
    pub allow_inf_nan_literals: bool,
    /// Fail with [`ParseError::MissingExponentDigits`] unless an exponent
    /// with at least one digit is present.
    pub require_exponent: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            require_digits_around_point: false,
            allow_leading_plus: true,
            allow_inf_nan_literals: true,
            require_exponent: false,
        }
    }
}

impl ScanOptions {
    /// JSON-like strictness: no leading `+`, no bare points, no literals.
    pub const fn strict() -> Self {
        ScanOptions {
            require_digits_around_point: true,
            allow_leading_plus: false,
            allow_inf_nan_literals: false,
            require_exponent: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    Finite,
    Infinity,
    NaN,
}

/// A scanned decimal number `(-1)^negative × significand × 10^exponent`.
///
/// When `truncated` is set the true magnitude lies in
/// `[significand × 10^exponent, (significand + 1) × 10^exponent)`, and equals
/// the lower end exactly iff `truncated_nonzero` is clear.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecimalComponents {
    pub negative: bool,
    pub significand: u64,
    pub exponent: i32,
    /// Significant digits seen, leading zeros excluded.
    pub digit_count: usize,
    pub truncated: bool,
    pub truncated_nonzero: bool,
    /// Index one past the last accepted byte.
    pub consumed: usize,
    pub kind: ValueKind,
}

impl DecimalComponents {
    fn special(negative: bool, kind: ValueKind, consumed: usize) -> Self {
        DecimalComponents {
            negative,
            significand: 0,
            exponent: 0,
            digit_count: 0,
            truncated: false,
            truncated_nonzero: false,
            consumed,
            kind,
        }
    }
}

/// True iff all eight bytes of the little-endian word are ASCII digits.
#[inline]
pub const fn is_eight_digits(block: u64) -> bool {
    let a = block.wrapping_add(0x4646_4646_4646_4646);
    let b = block.wrapping_sub(0x3030_3030_3030_3030);
    (a | b) & 0x8080_8080_8080_8080 == 0
}

/// Decimal value of eight ASCII digits loaded as a little-endian word.
#[inline]
pub const fn parse_eight_digits(block: u64) -> u32 {
    let v = (block & 0x0F0F_0F0F_0F0F_0F0F).wrapping_mul(2561) >> 8;
    let v = (v & 0x00FF_00FF_00FF_00FF).wrapping_mul(6553601) >> 16;
    ((v & 0x0000_FFFF_0000_FFFF).wrapping_mul(42949672960001) >> 32) as u32
}

/// Loads eight bytes starting at `i` as a little-endian word, if available.
#[inline]
pub fn load_block(bytes: &[u8], i: usize) -> Option<u64> {
    let chunk = bytes.get(i..i.checked_add(8)?)?;
    Some(u64::from_le_bytes(chunk.try_into().unwrap()))
}

#[inline]
fn digit_at(bytes: &[u8], i: usize) -> Option<u8> {
    match bytes.get(i) {
        Some(&b) if b.is_ascii_digit() => Some(b - b'0'),
        _ => None,
    }
}

/// Scans a decimal number starting at `start`.
///
/// Trailing bytes after a valid number are left unconsumed and are not an
/// error; `consumed` reports where the number ended.
#[inline]
pub fn scan_number(
    bytes: &[u8],
    start: usize,
    options: &ScanOptions,
) -> Result<DecimalComponents, ParseError> {
    scan::<true>(bytes, start, options)
}

/// Same as [`scan_number`] but folds every digit one byte at a time.
#[doc(hidden)]
pub fn scan_number_bytewise(
    bytes: &[u8],
    start: usize,
    options: &ScanOptions,
) -> Result<DecimalComponents, ParseError> {
    scan::<false>(bytes, start, options)
}

#[inline(always)]
fn scan<const SWAR: bool>(
    bytes: &[u8],
    start: usize,
    options: &ScanOptions,
) -> Result<DecimalComponents, ParseError> {
    assert!(start <= bytes.len(), "scan start past end of input");
    let mut i = start;
    let mut negative = false;
    match bytes.get(i) {
        Some(b'-') => {
            negative = true;
            i += 1;
        }
        Some(b'+') => {
            if !options.allow_leading_plus {
                return Err(ParseError::InvalidSyntax(i));
            }
            i += 1;
        }
        _ => {}
    }

    if options.allow_inf_nan_literals {
        if let Some(&b) = bytes.get(i) {
            if matches!(b | 0x20, b'i' | b'n') {
                return scan_special(bytes, i, negative);
            }
        }
    }

    let int_start = i;
    let mut w: u64 = 0;
    while let Some(d) = digit_at(bytes, i) {
        w = w.wrapping_mul(10).wrapping_add(u64::from(d));
        i += 1;
    }
    let int_end = i;

    let mut has_point = false;
    let mut frac_start = i;
    if bytes.get(i) == Some(&b'.') {
        has_point = true;
        i += 1;
        frac_start = i;
        if SWAR {
            if let Some(block) = load_block(bytes, i).filter(|&b| is_eight_digits(b)) {
                w = w.wrapping_mul(100_000_000).wrapping_add(u64::from(parse_eight_digits(block)));
                i += 8;
                if let Some(block) = load_block(bytes, i).filter(|&b| is_eight_digits(b)) {
                    w = w
                        .wrapping_mul(100_000_000)
                        .wrapping_add(u64::from(parse_eight_digits(block)));
                    i += 8;
                }
            }
        }
        while let Some(d) = digit_at(bytes, i) {
            w = w.wrapping_mul(10).wrapping_add(u64::from(d));
            i += 1;
        }
    }
    let digits_end = i;
    let int_digits = int_end - int_start;
    let frac_digits = if has_point { digits_end - frac_start } else { 0 };
    let raw_digits = int_digits + frac_digits;
    if raw_digits == 0 {
        return Err(ParseError::NoDigits);
    }
    if has_point && options.require_digits_around_point && (int_digits == 0 || frac_digits == 0) {
        return Err(ParseError::InvalidSyntax(int_end));
    }

    let mut explicit: i64 = 0;
    let mut has_exponent = false;
    if matches!(bytes.get(i), Some(b'e' | b'E')) {
        let mut j = i + 1;
        let mut exp_negative = false;
        match bytes.get(j) {
            Some(b'-') => {
                exp_negative = true;
                j += 1;
            }
            Some(b'+') => j += 1,
            _ => {}
        }
        if digit_at(bytes, j).is_some() {
            while let Some(d) = digit_at(bytes, j) {
                if explicit < EXPLICIT_EXPONENT_CAP {
                    explicit = explicit * 10 + i64::from(d);
                }
                j += 1;
            }
            if exp_negative {
                explicit = -explicit;
            }
            has_exponent = true;
            i = j;
        }
    }
    if options.require_exponent && !has_exponent {
        return Err(ParseError::MissingExponentDigits);
    }

    // Leading zeros (including a "0.000" prefix) are not significant.
    let mut p = int_start;
    let mut leading_zeros = 0;
    while p < digits_end {
        match bytes[p] {
            b'0' => leading_zeros += 1,
            b'.' => {}
            _ => break,
        }
        p += 1;
    }
    let digit_count = raw_digits - leading_zeros;

    let mut exponent = explicit - frac_digits as i64;
    let mut truncated = false;
    let mut truncated_nonzero = false;
    if digit_count > MAX_SIGNIFICAND_DIGITS {
        // Rebuild w from the first 19 significant digits; `p` is the first one.
        truncated = true;
        w = 0;
        let mut kept = 0;
        while kept < MAX_SIGNIFICAND_DIGITS {
            let b = bytes[p];
            if b != b'.' {
                w = w * 10 + u64::from(b - b'0');
                kept += 1;
            }
            p += 1;
        }
        exponent = if p <= int_end {
            explicit + (int_end - p) as i64
        } else {
            explicit - (p - frac_start) as i64
        };
        truncated_nonzero = bytes[p..digits_end].iter().any(|&b| matches!(b, b'1'..=b'9'));
    }

    Ok(DecimalComponents {
        negative,
        significand: w,
        exponent: exponent.clamp(-EXPONENT_SATURATION, EXPONENT_SATURATION) as i32,
        digit_count,
        truncated,
        truncated_nonzero,
        consumed: i,
        kind: ValueKind::Finite,
    })
}

fn starts_with_ignore_case(bytes: &[u8], i: usize, word: &[u8]) -> bool {
    bytes
        .get(i..i + word.len())
        .is_some_and(|s| s.eq_ignore_ascii_case(word))
}

fn scan_special(bytes: &[u8], i: usize, negative: bool) -> Result<DecimalComponents, ParseError> {
    if starts_with_ignore_case(bytes, i, b"infinity") {
        Ok(DecimalComponents::special(negative, ValueKind::Infinity, i + 8))
    } else if starts_with_ignore_case(bytes, i, b"inf") {
        Ok(DecimalComponents::special(negative, ValueKind::Infinity, i + 3))
    } else if starts_with_ignore_case(bytes, i, b"nan") {
        Ok(DecimalComponents::special(negative, ValueKind::NaN, i + 3))
    } else {
        Err(ParseError::NoDigits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(s: &str) -> DecimalComponents {
        scan_number(s.as_bytes(), 0, &ScanOptions::default()).unwrap()
    }

    fn block(s: &[u8; 8]) -> u64 {
        u64::from_le_bytes(*s)
    }

    #[test]
    fn ten_point_zero() {
        let c = scan("10.0");
        assert_eq!((c.significand, c.exponent, c.digit_count), (100, -1, 3));
        assert!(!c.negative && !c.truncated);
        assert_eq!(c.consumed, 4);
    }

    #[test]
    fn second_smallest_normal_components() {
        let c = scan("2.2250738585072019e-308");
        assert_eq!(c.significand, 22250738585072019);
        assert_eq!(c.exponent, -324);
        assert_eq!(c.digit_count, 17);
    }

    #[test]
    fn twenty_five_digits_truncate() {
        let c = scan("1234567890123456789012345");
        assert_eq!(c.significand, 1234567890123456789);
        assert_eq!(c.exponent, 6);
        assert_eq!(c.digit_count, 25);
        assert!(c.truncated && c.truncated_nonzero);
    }

    #[test]
    fn truncation_inside_fraction() {
        let c = scan("0.000123456789012345678900");
        assert_eq!(c.digit_count, 21);
        assert_eq!(c.significand, 1234567890123456789);
        assert_eq!(c.exponent, -22);
        assert!(c.truncated && !c.truncated_nonzero);
        assert!(scan("0.000123456789012345678901").truncated_nonzero);

        let c = scan("83.1094210000001110000000");
        assert_eq!(c.significand, 8310942100000011100);
        assert_eq!(c.exponent, -17);
        assert!(c.truncated && !c.truncated_nonzero);
    }

    #[test]
    fn leading_zeros_do_not_count() {
        let c = scan("0.000123");
        assert_eq!((c.significand, c.exponent, c.digit_count), (123, -6, 3));
        let c = scan("000000000000000000000000001");
        assert_eq!((c.significand, c.digit_count, c.truncated), (1, 1, false));
        let c = scan("0.000");
        assert_eq!((c.significand, c.digit_count), (0, 0));
    }

    #[test]
    fn errors() {
        let opts = ScanOptions::default();
        assert_eq!(scan_number(b"e10", 0, &opts), Err(ParseError::NoDigits));
        assert_eq!(scan_number(b".", 0, &opts), Err(ParseError::NoDigits));
        assert_eq!(scan_number(b"", 0, &opts), Err(ParseError::NoDigits));
        assert_eq!(scan_number(b"-", 0, &opts), Err(ParseError::NoDigits));
        assert_eq!(scan_number(b"-x", 0, &opts), Err(ParseError::NoDigits));
        let strict = ScanOptions::strict();
        assert_eq!(scan_number(b"+1", 0, &strict), Err(ParseError::InvalidSyntax(0)));
        assert_eq!(scan_number(b"1.e1", 0, &strict), Err(ParseError::InvalidSyntax(1)));
        assert_eq!(scan_number(b".5", 0, &strict), Err(ParseError::InvalidSyntax(0)));
        assert_eq!(scan_number(b"inf", 0, &strict), Err(ParseError::NoDigits));
        let sci = ScanOptions { require_exponent: true, ..ScanOptions::default() };
        assert_eq!(scan_number(b"1.5", 0, &sci), Err(ParseError::MissingExponentDigits));
        assert_eq!(scan_number(b"1.5e", 0, &sci), Err(ParseError::MissingExponentDigits));
        assert_eq!(scan_number(b"1.5e+", 0, &sci), Err(ParseError::MissingExponentDigits));
        assert!(scan_number(b"1.5e3", 0, &sci).is_ok());
    }

    #[test]
    fn permissive_spellings_of_ten() {
        for s in ["1e+1", "10", "10.0", "10.", "1.e1", "+1e1", "10E-01"] {
            let c = scan(s);
            let value = c.significand as f64 * 10f64.powi(c.exponent);
            assert_eq!(value.round(), if s == "10E-01" { 1.0 } else { 10.0 }, "{s}");
            assert_eq!(c.consumed, s.len());
        }
    }

    #[test]
    fn dangling_exponent_is_not_consumed() {
        let c = scan("12e");
        assert_eq!((c.significand, c.exponent, c.consumed), (12, 0, 2));
        let c = scan("12e-x");
        assert_eq!(c.consumed, 2);
        let c = scan("7.25abc");
        assert_eq!((c.significand, c.exponent, c.consumed), (725, -2, 4));
    }

    #[test]
    fn start_offset_and_sign() {
        let c = scan_number(b"xx-3.5,", 2, &ScanOptions::default()).unwrap();
        assert!(c.negative);
        assert_eq!((c.significand, c.exponent, c.consumed), (35, -1, 6));
    }

    #[test]
    fn exponent_saturates() {
        assert_eq!(scan("1e99999999999999999999").exponent, 1 << 15);
        assert_eq!(scan("1e-99999999999999999999").exponent, -(1 << 15));
        assert_eq!(scan("1e32768").exponent, 1 << 15);
        assert_eq!(scan("1e32767").exponent, 32767);
        // Many integer digits must not pull a huge negative exponent back in range.
        let s = format!("1{}e-40000", "0".repeat(33000));
        assert_eq!(scan(&s).exponent, 33000 - 18 - 40000);
        let s = format!("1{}e-99999999999", "0".repeat(33000));
        assert_eq!(scan(&s).exponent, -(1 << 15));
    }

    #[test]
    fn special_literals() {
        let c = scan("-Infinity");
        assert_eq!((c.kind, c.negative, c.consumed), (ValueKind::Infinity, true, 9));
        let c = scan("infx");
        assert_eq!((c.kind, c.consumed), (ValueKind::Infinity, 3));
        let c = scan("NaN");
        assert_eq!((c.kind, c.consumed), (ValueKind::NaN, 3));
        assert_eq!(
            scan_number(b"info", 0, &ScanOptions::default()).unwrap().consumed,
            3
        );
        assert!(scan_number(b"in", 0, &ScanOptions::default()).is_err());
    }

    #[test]
    fn eight_digit_detection() {
        assert!(is_eight_digits(block(b"12345678")));
        assert!(!is_eight_digits(block(b"1234567a")));
        assert!(!is_eight_digits(block(b"////////")));
        assert!(!is_eight_digits(block(b"::::::::")));
        assert!(!is_eight_digits(block(b"1234.678")));
        assert!(is_eight_digits(block(b"00000000")));
        assert!(is_eight_digits(block(b"99999999")));
    }

    #[test]
    fn eight_digit_value() {
        assert_eq!(parse_eight_digits(block(b"00000000")), 0);
        assert_eq!(parse_eight_digits(block(b"12345678")), 12345678);
        assert_eq!(parse_eight_digits(block(b"99999999")), 99999999);
        assert_eq!(parse_eight_digits(block(b"00000001")), 1);
        assert_eq!(parse_eight_digits(block(b"10000000")), 10000000);
    }

    #[test]
    fn eight_digit_detection_matches_bytewise_check() {
        // Every single-byte substitution into an all-digit block.
        for pos in 0..8 {
            for byte in 0..=255u8 {
                let mut raw = *b"31415926";
                raw[pos] = byte;
                assert_eq!(is_eight_digits(block(&raw)), raw.iter().all(u8::is_ascii_digit));
            }
        }
    }

    #[test]
    fn swar_blocks_near_end_of_input() {
        for s in ["0.1234567", "0.12345678", "0.123456789", "1.1234567812345678", "1.12345678123456789"] {
            let opts = ScanOptions::default();
            assert_eq!(
                scan_number(s.as_bytes(), 0, &opts),
                scan_number_bytewise(s.as_bytes(), 0, &opts)
            );
        }
    }
}

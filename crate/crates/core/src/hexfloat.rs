//! Hexadecimal floating-point literals such as `0x1.8p3` or `-0X.cP-2`.
//!
//! The binary exponent after `p` is mandatory. Conversion is exact up to one
//! rounding to nearest, ties to even.

use crate::error::ParseError;
use crate::format::{assemble, FloatBits, FormatSpec};

// Significand bits kept before extra digits collapse into the sticky bit.
const KEPT_BITS: u32 = 60;
const EXPONENT_CAP: i64 = 1 << 48;

fn hex_value(b: u8) -> Option<u8> {
    match b {
        b'0'..=b'9' => Some(b - b'0'),
        b'a'..=b'f' => Some(b - b'a' + 10),
        b'A'..=b'F' => Some(b - b'A' + 10),
        _ => None,
    }
}

/// Parses a hexadecimal float starting at `start` and returns the value with
/// the index one past the last byte consumed.
pub fn scan_hexfloat(
    bytes: &[u8],
    start: usize,
    spec: &FormatSpec,
) -> Result<(FloatBits, usize), ParseError> {
    assert!(start <= bytes.len(), "scan start past end of input");
    let mut i = start;
    let mut negative = false;
    match bytes.get(i) {
        Some(b'-') => {
            negative = true;
            i += 1;
        }
        Some(b'+') => i += 1,
        _ => {}
    }
    if bytes.get(i) != Some(&b'0') || !matches!(bytes.get(i + 1), Some(b'x' | b'X')) {
        return Err(ParseError::InvalidSyntax(i));
    }
    i += 2;

    // Value is (mantissa + sticky fraction) × 2^exponent.
    let mut mantissa: u64 = 0;
    let mut exponent: i64 = 0;
    let mut sticky = false;
    let mut digits = 0usize;
    let mut fraction = false;
    loop {
        let Some(&b) = bytes.get(i) else { break };
        if b == b'.' && !fraction {
            fraction = true;
            i += 1;
            continue;
        }
        let Some(d) = hex_value(b) else { break };
        digits += 1;
        if mantissa >> (KEPT_BITS - 4) == 0 {
            mantissa = (mantissa << 4) | u64::from(d);
            if fraction {
                exponent -= 4;
            }
        } else {
            sticky |= d != 0;
            if !fraction {
                exponent += 4;
            }
        }
        i += 1;
    }
    if digits == 0 {
        return Err(ParseError::NoDigits);
    }

    if !matches!(bytes.get(i), Some(b'p' | b'P')) {
        return Err(ParseError::MissingExponentDigits);
    }
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
    if !matches!(bytes.get(j), Some(b'0'..=b'9')) {
        return Err(ParseError::MissingExponentDigits);
    }
    let mut explicit: i64 = 0;
    while let Some(&b @ b'0'..=b'9') = bytes.get(j) {
        if explicit < EXPONENT_CAP {
            explicit = explicit * 10 + i64::from(b - b'0');
        }
        j += 1;
    }
    exponent += if exp_negative { -explicit } else { explicit };

    Ok((round_binary(negative, mantissa, exponent, sticky, spec), j))
}

/// Nearest float to `(mantissa + ε) × 2^exponent`, where `ε ∈ (0, 1)` iff `sticky`.
fn round_binary(negative: bool, mantissa: u64, exponent: i64, sticky: bool, spec: &FormatSpec) -> FloatBits {
    if mantissa == 0 {
        return FloatBits::zero(negative, spec);
    }
    let stored = i64::from(spec.stored_significand_bits);
    let top = exponent + i64::from(63 - mantissa.leading_zeros());
    if top > i64::from(spec.max_exponent) + 1 {
        return FloatBits::infinity(negative, spec);
    }
    // Weight of the result's last significand bit.
    let lsb = top.max(i64::from(spec.min_exponent)) - stored;
    let shift = lsb - exponent;
    let mut m = if shift <= 0 {
        mantissa << -shift
    } else if shift > 64 {
        0
    } else {
        let wide = u128::from(mantissa);
        let kept = wide >> shift;
        let rest = wide & ((1u128 << shift) - 1);
        let half = 1u128 << (shift - 1);
        let round_up = rest > half || (rest == half && (sticky || kept & 1 == 1));
        (kept as u64) + u64::from(round_up)
    };
    let mut p = (lsb + stored) as i32;
    if m >> spec.significand_bits != 0 {
        m >>= 1;
        p += 1;
    }
    if p > spec.max_exponent {
        return FloatBits::infinity(negative, spec);
    }
    if m >> spec.stored_significand_bits == 0 {
        p = spec.min_exponent;
    }
    assemble(negative, m, p, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{BINARY32, BINARY64};

    fn hex64(s: &str) -> f64 {
        let (bits, consumed) = scan_hexfloat(s.as_bytes(), 0, &BINARY64).unwrap();
        assert_eq!(consumed, s.len(), "{s}");
        bits.to_f64()
    }

    fn hex32(s: &str) -> f32 {
        scan_hexfloat(s.as_bytes(), 0, &BINARY32).unwrap().0.to_f32()
    }

    #[test]
    fn simple_values() {
        assert_eq!(hex64("0x1p0"), 1.0);
        assert_eq!(hex64("0x1.8p1"), 3.0);
        assert_eq!(hex64("-0X.cP-2"), -0.1875);
        assert_eq!(hex64("0x1.FCp17"), 260096.0);
        assert_eq!(hex64("0x10p-4"), 1.0);
        assert_eq!(hex64("0x0p0"), 0.0);
        assert_eq!(hex64("-0x0.0p0").to_bits(), 0x8000_0000_0000_0000);
        assert_eq!(hex64("0x1.999999999999ap-4"), 0.1);
        assert_eq!(hex64("0x1.279a9c8073d8bp-100").to_bits(), 0x39B2_79A9_C807_3D8B);
    }

    #[test]
    fn extremes() {
        assert_eq!(hex64("0x1.fffffffffffffp1023"), f64::MAX);
        assert_eq!(hex64("0x1.fffffffffffff8p1023"), f64::INFINITY);
        assert_eq!(hex64("0x1p1024"), f64::INFINITY);
        assert_eq!(hex64("0x1p-1074"), 5e-324);
        assert_eq!(hex64("0x1p-1075"), 0.0);
        assert_eq!(hex64("0x1.0000000000001p-1075"), 5e-324);
        assert_eq!(hex64("0x3p-1076"), 5e-324);
        assert_eq!(hex64("0x1.ffffffffffffffp-1023"), 2.0f64.powi(-1022));
        assert_eq!(hex64("0x1p-99999999999999999999"), 0.0);
        assert_eq!(hex64("0x1p+99999999999999999999"), f64::INFINITY);
        assert_eq!(hex32("0x1.fffffep127"), f32::MAX);
        assert_eq!(hex32("0x1p-149"), f32::from_bits(1));
        assert_eq!(hex32("0x1.000001p0"), 1.0);
        assert_eq!(hex32("0x1.000003p0"), 1.0000002);
    }

    #[test]
    fn ties_and_sticky() {
        // 2^53 + 1 is halfway; even goes down, a nonzero tail goes up.
        assert_eq!(hex64("0x20000000000001p0"), 9007199254740992.0);
        assert_eq!(hex64("0x20000000000003p0"), 9007199254740996.0);
        assert_eq!(hex64("0x20000000000001000000000001p-48"), 9007199254740994.0);
        assert_eq!(hex64("0x200000000000010000000000000000000000p-88"), 9007199254740992.0);
        assert_eq!(hex64("0x200000000000010000000000000000000001p-88"), 9007199254740994.0);
        assert_eq!(hex64("0x.000000000000000000000000000001p120"), 1.0);
    }

    #[test]
    fn syntax() {
        let spec = &BINARY64;
        assert_eq!(scan_hexfloat(b"0x1.8", 0, spec), Err(ParseError::MissingExponentDigits));
        assert_eq!(scan_hexfloat(b"0x1p", 0, spec), Err(ParseError::MissingExponentDigits));
        assert_eq!(scan_hexfloat(b"0x1p-", 0, spec), Err(ParseError::MissingExponentDigits));
        assert_eq!(scan_hexfloat(b"0xp1", 0, spec), Err(ParseError::NoDigits));
        assert_eq!(scan_hexfloat(b"0x.p1", 0, spec), Err(ParseError::NoDigits));
        assert_eq!(scan_hexfloat(b"1p1", 0, spec), Err(ParseError::InvalidSyntax(0)));
        assert_eq!(scan_hexfloat(b"", 0, spec), Err(ParseError::InvalidSyntax(0)));
        let (bits, consumed) = scan_hexfloat(b"[0x1p3]", 1, spec).unwrap();
        assert_eq!((bits.to_f64(), consumed), (8.0, 6));
        let (_, consumed) = scan_hexfloat(b"0x1.8p1.5", 0, spec).unwrap();
        assert_eq!(consumed, 7);
    }
}

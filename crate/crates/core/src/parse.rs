//! Library entry points: bytes in, IEEE-754 bit pattern out.

use crate::convert::{clinger_fast_path, eisel_lemire, ConversionOutcome};
use crate::error::ParseError;
use crate::format::{FloatBits, FormatSpec, BINARY32, BINARY64};
use crate::hexfloat::scan_hexfloat;
use crate::scan::{scan_number, DecimalComponents, ScanOptions, ValueKind};
use crate::slow::{exact_fallback, resolve_long_mantissa, BigDecimal};

/// Which stage of the pipeline produced a result. Every decimal parse is
/// attributed to exactly one stage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodePath {
    /// Clinger's exact path, or an `inf`/`nan` literal.
    FastPath,
    /// The product against the power table needed one multiplication.
    CorePath,
    /// The product needed the second table word.
    TwoMults,
    /// Exact big-decimal arithmetic.
    Fallback,
}

impl CodePath {
    pub(crate) fn from_product(two_mults: bool) -> Self {
        if two_mults {
            CodePath::TwoMults
        } else {
            CodePath::CorePath
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CodePath::FastPath => "fast-path",
            CodePath::CorePath => "core",
            CodePath::TwoMults => "two-mults",
            CodePath::Fallback => "fallback",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub bits: FloatBits,
    /// Bytes of input that formed the number.
    pub consumed: usize,
    pub path: CodePath,
}

/// Converts scanned components. `text` must be the bytes the components were
/// scanned from, starting at the number's first byte; it is only read again
/// when more than 19 significant digits leave the rounding undecided.
#[inline]
pub fn convert_components(
    text: &[u8],
    components: &DecimalComponents,
    spec: &FormatSpec,
) -> (FloatBits, CodePath) {
    match components.kind {
        ValueKind::Infinity => {
            return (FloatBits::infinity(components.negative, spec), CodePath::FastPath)
        }
        ValueKind::NaN => return (FloatBits::nan(components.negative, spec), CodePath::FastPath),
        ValueKind::Finite => {}
    }
    if components.truncated {
        return resolve_long_mantissa(text, components, spec);
    }
    if let Some(bits) = clinger_fast_path(components, spec) {
        return (bits, CodePath::FastPath);
    }
    match eisel_lemire(components, spec) {
        ConversionOutcome::Value { bits, two_mults } => (bits, CodePath::from_product(two_mults)),
        ConversionOutcome::NeedFallback => (
            exact_fallback(BigDecimal::from_components(components), spec),
            CodePath::Fallback,
        ),
    }
}

/// Parses a decimal number at the start of `bytes`. Trailing bytes are not
/// an error; see [`Parsed::consumed`].
#[inline]
pub fn parse_decimal(
    bytes: &[u8],
    options: &ScanOptions,
    spec: &FormatSpec,
) -> Result<Parsed, ParseError> {
    let components = scan_number(bytes, 0, options)?;
    let (bits, path) = convert_components(&bytes[..components.consumed], &components, spec);
    Ok(Parsed { bits, consumed: components.consumed, path })
}

#[inline]
pub fn parse_binary64(bytes: &[u8], options: &ScanOptions) -> Result<Parsed, ParseError> {
    parse_decimal(bytes, options, &BINARY64)
}

#[inline]
pub fn parse_binary32(bytes: &[u8], options: &ScanOptions) -> Result<Parsed, ParseError> {
    parse_decimal(bytes, options, &BINARY32)
}

/// Parses a hexadecimal float such as `0x1.8p3` at the start of `bytes`.
pub fn parse_hex(bytes: &[u8], spec: &FormatSpec) -> Result<(FloatBits, usize), ParseError> {
    scan_hexfloat(bytes, 0, spec)
}

fn whole(s: &str, spec: &FormatSpec) -> Result<FloatBits, ParseError> {
    let parsed = parse_decimal(s.as_bytes(), &ScanOptions::default(), spec)?;
    if parsed.consumed != s.len() {
        return Err(ParseError::InvalidSyntax(parsed.consumed));
    }
    Ok(parsed.bits)
}

/// Parses the whole string as a decimal `f64` with permissive syntax.
pub fn parse_f64(s: &str) -> Result<f64, ParseError> {
    whole(s, &BINARY64).map(FloatBits::to_f64)
}

/// Parses the whole string as a decimal `f32` with permissive syntax.
pub fn parse_f32(s: &str) -> Result<f32, ParseError> {
    whole(s, &BINARY32).map(FloatBits::to_f32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path64(s: &str) -> CodePath {
        parse_binary64(s.as_bytes(), &ScanOptions::default()).unwrap().path
    }

    #[test]
    fn paths() {
        assert_eq!(path64("1.5"), CodePath::FastPath);
        assert_eq!(path64("123456789"), CodePath::FastPath);
        assert_eq!(path64("-inf"), CodePath::FastPath);
        assert_eq!(path64("9109e-34"), CodePath::CorePath);
        assert_eq!(path64("2440254496e57"), CodePath::TwoMults);
        assert_eq!(path64("9007199254740993"), CodePath::CorePath);
    }

    #[test]
    fn whole_string_helpers() {
        assert_eq!(parse_f64("0.1"), Ok(0.1));
        assert_eq!(parse_f32("0.1"), Ok(0.1f32));
        assert_eq!(parse_f64("1.5x"), Err(ParseError::InvalidSyntax(3)));
        assert_eq!(parse_f64(""), Err(ParseError::NoDigits));
        assert!(parse_f64("nan").unwrap().is_nan());
        assert_eq!(parse_f64("-0.0").unwrap().to_bits(), 0x8000_0000_0000_0000);
        assert_eq!(parse_f64("-0e999999").unwrap().to_bits(), 0x8000_0000_0000_0000);
        assert_eq!(parse_f64("-1e999999"), Ok(f64::NEG_INFINITY));
    }

    #[test]
    fn consumed_reports_number_end() {
        let p = parse_binary64(b"3.25,4", &ScanOptions::default()).unwrap();
        assert_eq!((p.bits.to_f64(), p.consumed), (3.25, 4));
        let (bits, consumed) = parse_hex(b"0x1p-1 ", &BINARY32).unwrap();
        assert_eq!((bits.to_f32(), consumed), (0.5, 6));
    }

    #[test]
    fn long_inputs() {
        let s = "1.00000000000000011102230246251565404236316680908203125";
        assert_eq!(parse_f64(s), Ok(1.0));
        let p = parse_binary64(s.as_bytes(), &ScanOptions::default()).unwrap();
        assert_eq!(p.path, CodePath::Fallback);
        let s = "3.14159265358979323846264338327950288419716939937510";
        assert_eq!(parse_f64(s), Ok(std::f64::consts::PI));
        assert_ne!(path64(s), CodePath::Fallback);
    }
}

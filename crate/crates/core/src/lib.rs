//! Correctly rounded conversion of decimal and hexadecimal strings to IEEE-754
//! binary32 and binary64.
//!
//! Most inputs take one or two 64×64-bit multiplications against a table of
//! 128-bit powers of five. Inputs the table cannot settle fall back to exact
//! big-decimal arithmetic, so every result is the nearest float with ties
//! to even.
//!
//! ```
//! use quickfloat::{parse_binary64, parse_f64, CodePath, ScanOptions};
//!
//! assert_eq!(parse_f64("9109e-34"), Ok(9.109e-31));
//! let parsed = parse_binary64(b"2440254496e57,", &ScanOptions::default()).unwrap();
//! assert_eq!(parsed.consumed, 13);
//! assert_eq!(parsed.path, CodePath::TwoMults);
//! ```

pub mod convert;
mod error;
pub mod format;
pub mod hexfloat;
pub mod parse;
pub mod scan;
pub mod slow;
pub mod table;
mod table_data;

pub use convert::{
    clinger_fast_path, compute_binary_exponent, compute_product_approx, eisel_lemire,
    ConversionOutcome, ProductResult,
};
pub use error::ParseError;
pub use format::{assemble, FloatBits, Format, FormatSpec, BINARY32, BINARY64};
pub use hexfloat::scan_hexfloat;
pub use parse::{
    convert_components, parse_binary32, parse_binary64, parse_decimal, parse_f32, parse_f64,
    parse_hex, CodePath, Parsed,
};
pub use scan::{scan_number, DecimalComponents, ScanOptions, ValueKind};
pub use slow::{exact_fallback, parse_long_mantissa, BigDecimal};

//! Exact decimal-to-binary conversion on a fixed-capacity digit array.
//!
//! Used when the truncated product cannot decide the rounding, and for
//! inputs with more than 19 significant digits whose neighbours `w` and
//! `w + 1` round differently. Shifts by powers of two are done digit by
//! digit, so cost grows with the number of digits but no heap is touched.

use crate::convert::{eisel_lemire, ConversionOutcome};
use crate::format::{assemble, FloatBits, FormatSpec};
use crate::parse::CodePath;
use crate::scan::{DecimalComponents, EXPONENT_SATURATION};

/// Digits kept exactly. Any decimal that is exactly halfway between two
/// binary64 values has at most 768 significant digits.
pub const MAX_DIGITS: usize = 768;

/// Beyond this many decimal places the value is certainly zero or infinite.
const DECIMAL_POINT_RANGE: i32 = 2047;

/// Largest single shift; `10 × 2^60` still fits in a `u64`.
const MAX_SHIFT: u32 = 60;

/// `POWERS[n]` is the largest shift that keeps `10^n` decimal digits from
/// crossing the point in one step.
const POWERS: [u8; 19] = [0, 3, 6, 9, 13, 16, 19, 23, 26, 29, 33, 36, 39, 43, 46, 49, 53, 56, 59];

// Left shifts write the product here right to left before copying back.
const SHIFT_BUFFER: usize = MAX_DIGITS + 20;

fn get_shift(n: usize) -> u32 {
    POWERS.get(n).map_or(MAX_SHIFT, |&s| u32::from(s))
}

/// A decimal `0.d₁d₂…dₙ × 10^decimal_point` with at most [`MAX_DIGITS`]
/// digits and a sticky flag for nonzero digits that did not fit.
///
/// Invariants: `digits[..num_digits]` has no leading or trailing zero, and
/// `num_digits == 0` means the value is zero.
#[derive(Clone)]
pub struct BigDecimal {
    num_digits: usize,
    decimal_point: i32,
    negative: bool,
    truncated: bool,
    digits: [u8; MAX_DIGITS],
}

impl std::fmt::Debug for BigDecimal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let digits: String = self.digits().iter().map(|&d| char::from(b'0' + d)).collect();
        write!(
            f,
            "BigDecimal({}0.{digits}e{}{})",
            if self.negative { "-" } else { "" },
            self.decimal_point,
            if self.truncated { ", truncated" } else { "" }
        )
    }
}

impl BigDecimal {
    fn zero(negative: bool) -> Self {
        BigDecimal {
            num_digits: 0,
            decimal_point: 0,
            negative,
            truncated: false,
            digits: [0; MAX_DIGITS],
        }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits[..self.num_digits]
    }

    pub fn decimal_point(&self) -> i32 {
        self.decimal_point
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    fn push_digit(&mut self, d: u8) {
        if self.num_digits < MAX_DIGITS {
            self.digits[self.num_digits] = d;
        } else if d != 0 {
            self.truncated = true;
        }
        self.num_digits += 1;
    }

    fn trim(&mut self) {
        while self.num_digits > 0 && self.digits[self.num_digits - 1] == 0 {
            self.num_digits -= 1;
        }
        if self.num_digits == 0 {
            self.decimal_point = 0;
        }
    }

    /// Exact decimal for `w × 10^q`. Meaningful only when the components
    /// were not truncated, or the truncated digits were all zero.
    pub fn from_components(components: &DecimalComponents) -> Self {
        let mut d = BigDecimal::zero(components.negative);
        let mut w = components.significand;
        if w == 0 {
            return d;
        }
        let mut buf = [0u8; 20];
        let mut n = 0;
        while w > 0 {
            buf[n] = (w % 10) as u8;
            w /= 10;
            n += 1;
        }
        for i in (0..n).rev() {
            d.push_digit(buf[i]);
        }
        d.decimal_point = n as i32 + components.exponent;
        d.trim();
        d
    }

    /// Reads a decimal number from the start of `bytes` with the same syntax
    /// as the scanner: `[+-]digits[.digits][(e|E)[+-]digits]`. Unrecognized
    /// trailing bytes are ignored. All digits are honoured; those past
    /// [`MAX_DIGITS`] only contribute to the sticky flag.
    pub fn parse(bytes: &[u8]) -> Self {
        let mut i = 0;
        let mut negative = false;
        match bytes.first() {
            Some(b'-') => {
                negative = true;
                i += 1;
            }
            Some(b'+') => i += 1,
            _ => {}
        }
        let mut d = BigDecimal::zero(negative);
        let mut point: i64 = 0;
        while let Some(&b @ b'0'..=b'9') = bytes.get(i) {
            if d.num_digits > 0 || b != b'0' {
                d.push_digit(b - b'0');
                point += 1;
            }
            i += 1;
        }
        if bytes.get(i) == Some(&b'.') {
            i += 1;
            while let Some(&b @ b'0'..=b'9') = bytes.get(i) {
                if d.num_digits == 0 && b == b'0' {
                    point -= 1;
                } else {
                    d.push_digit(b - b'0');
                }
                i += 1;
            }
        }
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
            let mut explicit: i64 = 0;
            while let Some(&b @ b'0'..=b'9') = bytes.get(j) {
                if explicit < 1 << 48 {
                    explicit = explicit * 10 + i64::from(b - b'0');
                }
                j += 1;
            }
            point += if exp_negative { -explicit } else { explicit };
        }
        d.num_digits = d.num_digits.min(MAX_DIGITS);
        d.decimal_point = point.clamp(-EXPONENT_SATURATION, EXPONENT_SATURATION) as i32;
        d.trim();
        d
    }

    /// Multiplies by `2^shift` for `shift ≤ 60`.
    fn left_shift(&mut self, shift: u32) {
        debug_assert!(shift <= MAX_SHIFT);
        if self.num_digits == 0 {
            return;
        }
        let mut buf = [0u8; SHIFT_BUFFER];
        let mut write = SHIFT_BUFFER;
        let mut carry: u64 = 0;
        for &digit in self.digits[..self.num_digits].iter().rev() {
            let n = (u64::from(digit) << shift) + carry;
            write -= 1;
            buf[write] = (n % 10) as u8;
            carry = n / 10;
        }
        while carry > 0 {
            write -= 1;
            buf[write] = (carry % 10) as u8;
            carry /= 10;
        }
        let total = SHIFT_BUFFER - write;
        let kept = total.min(MAX_DIGITS);
        self.digits[..kept].copy_from_slice(&buf[write..write + kept]);
        if buf[write + kept..].iter().any(|&d| d != 0) {
            self.truncated = true;
        }
        self.decimal_point += (total - self.num_digits) as i32;
        self.num_digits = kept;
        self.trim();
    }

    /// Divides by `2^shift` for `shift ≤ 60`, keeping the sticky flag.
    fn right_shift(&mut self, shift: u32) {
        debug_assert!(shift <= MAX_SHIFT);
        let mut read = 0;
        let mut write = 0;
        let mut n: u64 = 0;
        while n >> shift == 0 {
            if read < self.num_digits {
                n = 10 * n + u64::from(self.digits[read]);
                read += 1;
            } else if n == 0 {
                return;
            } else {
                while n >> shift == 0 {
                    n *= 10;
                    read += 1;
                }
                break;
            }
        }
        self.decimal_point -= read as i32 - 1;
        if self.decimal_point < -DECIMAL_POINT_RANGE {
            *self = BigDecimal::zero(self.negative);
            return;
        }
        let mask = (1u64 << shift) - 1;
        while read < self.num_digits {
            let digit = (n >> shift) as u8;
            n = 10 * (n & mask) + u64::from(self.digits[read]);
            read += 1;
            self.digits[write] = digit;
            write += 1;
        }
        while n > 0 {
            let digit = (n >> shift) as u8;
            n = 10 * (n & mask);
            if write < MAX_DIGITS {
                self.digits[write] = digit;
                write += 1;
            } else if digit > 0 {
                self.truncated = true;
            }
        }
        self.num_digits = write;
        self.trim();
    }

    /// Integer part rounded half to even, saturating at `u64::MAX` when the
    /// integer part has more than 18 digits.
    fn round(&self) -> u64 {
        if self.num_digits == 0 || self.decimal_point < 0 {
            return 0;
        }
        if self.decimal_point > 18 {
            return u64::MAX;
        }
        let dp = self.decimal_point as usize;
        let mut n: u64 = 0;
        for i in 0..dp {
            n *= 10;
            if i < self.num_digits {
                n += u64::from(self.digits[i]);
            }
        }
        let mut round_up = false;
        if dp < self.num_digits {
            round_up = self.digits[dp] >= 5;
            if self.digits[dp] == 5 && dp + 1 == self.num_digits {
                round_up = self.truncated || (dp > 0 && self.digits[dp - 1] & 1 == 1);
            }
        }
        n + u64::from(round_up)
    }
}

/// Correctly rounded conversion of an arbitrary decimal.
pub fn exact_fallback(mut d: BigDecimal, spec: &FormatSpec) -> FloatBits {
    let negative = d.negative;
    let zero = FloatBits::zero(negative, spec);
    let infinity = FloatBits::infinity(negative, spec);
    // Biased exponent field 0 corresponds to this unbiased exponent.
    let min_exponent = spec.min_exponent - 1;
    let infinite_power = spec.max_exponent_field() as i32;
    let stored = spec.stored_significand_bits;

    if d.num_digits == 0 || d.decimal_point < -324 {
        return zero;
    }
    if d.decimal_point >= 310 {
        return infinity;
    }

    // Scale into [1/2, 1) tracking the binary exponent.
    let mut exp2: i32 = 0;
    while d.decimal_point > 0 {
        let shift = get_shift(d.decimal_point as usize);
        d.right_shift(shift);
        if d.decimal_point < -DECIMAL_POINT_RANGE {
            return zero;
        }
        exp2 += shift as i32;
    }
    while d.decimal_point <= 0 {
        let shift = if d.decimal_point == 0 {
            match d.digits[0] {
                5..=9 => break,
                0 | 1 => 2,
                _ => 1,
            }
        } else {
            get_shift((-d.decimal_point) as usize)
        };
        d.left_shift(shift);
        if d.decimal_point > DECIMAL_POINT_RANGE {
            return infinity;
        }
        exp2 -= shift as i32;
    }

    // Now in [1, 2) × 2^exp2; denormalize below the smallest normal exponent.
    exp2 -= 1;
    while min_exponent + 1 > exp2 {
        let n = ((min_exponent + 1 - exp2) as u32).min(MAX_SHIFT);
        d.right_shift(n);
        exp2 += n as i32;
    }
    if exp2 - min_exponent >= infinite_power {
        return infinity;
    }

    d.left_shift(stored + 1);
    let mut mantissa = d.round();
    if mantissa >= 1 << (stored + 1) {
        // Rounding carried into a new bit.
        d.right_shift(1);
        exp2 += 1;
        mantissa = d.round();
        if exp2 - min_exponent >= infinite_power {
            return infinity;
        }
    }
    let p = if mantissa >> stored == 0 { spec.min_exponent } else { exp2 };
    assemble(negative, mantissa, p, spec)
}

/// Conversion of a scanned number whose significand was truncated to 19
/// digits. `bytes` must be the exact text the components were scanned from.
///
/// Dropped zeros leave the value exact. Otherwise the value lies strictly
/// between `w × 10^q` and `(w + 1) × 10^q`; if both ends round to the same
/// float so does the value, else the whole digit string decides.
pub fn parse_long_mantissa(
    bytes: &[u8],
    components: &DecimalComponents,
    spec: &FormatSpec,
) -> FloatBits {
    resolve_long_mantissa(bytes, components, spec).0
}

pub(crate) fn resolve_long_mantissa(
    bytes: &[u8],
    components: &DecimalComponents,
    spec: &FormatSpec,
) -> (FloatBits, CodePath) {
    if !components.truncated_nonzero {
        return match eisel_lemire(components, spec) {
            ConversionOutcome::Value { bits, two_mults } => (bits, CodePath::from_product(two_mults)),
            ConversionOutcome::NeedFallback => (
                exact_fallback(BigDecimal::from_components(components), spec),
                CodePath::Fallback,
            ),
        };
    }
    let lower = eisel_lemire(components, spec);
    let above = DecimalComponents { significand: components.significand + 1, ..*components };
    let upper = eisel_lemire(&above, spec);
    match (lower, upper) {
        (
            ConversionOutcome::Value { bits: a, two_mults: ta },
            ConversionOutcome::Value { bits: b, two_mults: tb },
        ) if a == b => (a, CodePath::from_product(ta || tb)),
        _ => (exact_fallback(BigDecimal::parse(bytes), spec), CodePath::Fallback),
    }
}

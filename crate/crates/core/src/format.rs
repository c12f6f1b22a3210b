//! IEEE-754 binary32/binary64 format parameters and bit-pattern assembly.

use std::fmt;

/// Which of the two supported binary interchange formats a value uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Binary32,
    Binary64,
}

impl Format {
    #[inline]
    pub const fn spec(self) -> &'static FormatSpec {
        match self {
            Format::Binary32 => &BINARY32,
            Format::Binary64 => &BINARY64,
        }
    }
}

/// Constants describing one binary floating-point format.
///
/// Exponents follow the normalized convention `1.f × 2^e`, so binary64 normal
/// values have `e ∈ [-1022, 1023]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormatSpec {
    pub format: Format,
    /// Significand width including the implicit leading bit.
    pub significand_bits: u32,
    pub stored_significand_bits: u32,
    pub exponent_bits: u32,
    pub min_exponent: i32,
    pub max_exponent: i32,
    pub exponent_bias: i32,
    /// Largest `|q|` for which `10^q` is exactly representable.
    pub fast_path_max_q: i32,
    pub fast_path_max_significand: u64,
    /// Decimal exponents for which `w × 10^q` (with `w < 2^64`) can land
    /// exactly halfway between two floats.
    pub min_tie_q: i32,
    pub max_tie_q: i32,
}

/// Range of decimal exponents covered by the power-of-five table.
pub const MIN_TABLE_Q: i32 = -342;
pub const MAX_TABLE_Q: i32 = 308;

pub const BINARY64: FormatSpec = FormatSpec {
    format: Format::Binary64,
    significand_bits: 53,
    stored_significand_bits: 52,
    exponent_bits: 11,
    min_exponent: -1022,
    max_exponent: 1023,
    exponent_bias: 1023,
    fast_path_max_q: 22,
    fast_path_max_significand: 1 << 53,
    min_tie_q: -4,
    max_tie_q: 23,
};

pub const BINARY32: FormatSpec = FormatSpec {
    format: Format::Binary32,
    significand_bits: 24,
    stored_significand_bits: 23,
    exponent_bits: 8,
    min_exponent: -126,
    max_exponent: 127,
    exponent_bias: 127,
    fast_path_max_q: 10,
    fast_path_max_significand: 1 << 24,
    min_tie_q: -17,
    max_tie_q: 10,
};

impl FormatSpec {
    #[inline]
    pub const fn sign_mask(&self) -> u64 {
        1 << (self.stored_significand_bits + self.exponent_bits)
    }

    #[inline]
    pub const fn fraction_mask(&self) -> u64 {
        (1 << self.stored_significand_bits) - 1
    }

    #[inline]
    pub const fn max_exponent_field(&self) -> u64 {
        (1 << self.exponent_bits) - 1
    }

    #[inline]
    pub const fn exponent_mask(&self) -> u64 {
        self.max_exponent_field() << self.stored_significand_bits
    }
}

/// A finished IEEE-754 bit pattern. binary32 results occupy the low 32 bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FloatBits {
    pub bits: u64,
    pub format: Format,
}

impl fmt::Debug for FloatBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.format {
            Format::Binary64 => write!(f, "FloatBits({:#018x} = {:e})", self.bits, self.to_f64()),
            Format::Binary32 => write!(f, "FloatBits({:#010x} = {:e})", self.bits, self.to_f32()),
        }
    }
}

impl FloatBits {
    #[inline]
    pub const fn zero(negative: bool, spec: &FormatSpec) -> Self {
        FloatBits {
            bits: if negative { spec.sign_mask() } else { 0 },
            format: spec.format,
        }
    }

    #[inline]
    pub const fn infinity(negative: bool, spec: &FormatSpec) -> Self {
        let sign = if negative { spec.sign_mask() } else { 0 };
        FloatBits {
            bits: sign | spec.exponent_mask(),
            format: spec.format,
        }
    }

    /// The canonical quiet NaN: all-ones exponent, top fraction bit set.
    #[inline]
    pub const fn nan(negative: bool, spec: &FormatSpec) -> Self {
        let sign = if negative { spec.sign_mask() } else { 0 };
        FloatBits {
            bits: sign | spec.exponent_mask() | (1 << (spec.stored_significand_bits - 1)),
            format: spec.format,
        }
    }

    #[inline]
    pub fn from_f64(value: f64) -> Self {
        FloatBits {
            bits: value.to_bits(),
            format: Format::Binary64,
        }
    }

    #[inline]
    pub fn from_f32(value: f32) -> Self {
        FloatBits {
            bits: u64::from(value.to_bits()),
            format: Format::Binary32,
        }
    }

    /// Reinterprets the pattern as an `f64`. Panics if the format is binary32.
    #[inline]
    pub fn to_f64(self) -> f64 {
        assert_eq!(self.format, Format::Binary64);
        f64::from_bits(self.bits)
    }

    /// Reinterprets the pattern as an `f32`. Panics if the format is binary64.
    #[inline]
    pub fn to_f32(self) -> f32 {
        assert_eq!(self.format, Format::Binary32);
        f32::from_bits(self.bits as u32)
    }

    /// Value widened to `f64` (exact for both formats).
    pub fn value(self) -> f64 {
        match self.format {
            Format::Binary64 => self.to_f64(),
            Format::Binary32 => f64::from(self.to_f32()),
        }
    }

    #[inline]
    pub fn spec(self) -> &'static FormatSpec {
        self.format.spec()
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self.bits & self.spec().sign_mask() != 0
    }

    #[inline]
    pub fn exponent_field(self) -> u64 {
        let spec = self.spec();
        (self.bits & spec.exponent_mask()) >> spec.stored_significand_bits
    }

    pub fn is_finite(self) -> bool {
        self.exponent_field() != self.spec().max_exponent_field()
    }

    pub fn is_nan(self) -> bool {
        !self.is_finite() && self.bits & self.spec().fraction_mask() != 0
    }

    pub fn with_sign(self, negative: bool) -> Self {
        let mask = self.spec().sign_mask();
        FloatBits {
            bits: if negative { self.bits | mask } else { self.bits & !mask },
            format: self.format,
        }
    }

    /// Splits a finite value into `(negative, m, p)` such that its magnitude
    /// is `m × 2^(p - stored_significand_bits)`. Subnormals and zero report
    /// `p = min_exponent` with `m < 2^stored_significand_bits`.
    ///
    /// Returns `None` for infinities and NaNs.
    pub fn decompose(self) -> Option<(bool, u64, i32)> {
        if !self.is_finite() {
            return None;
        }
        let spec = self.spec();
        let field = self.exponent_field();
        let fraction = self.bits & spec.fraction_mask();
        let negative = self.is_negative();
        if field == 0 {
            Some((negative, fraction, spec.min_exponent))
        } else {
            let m = fraction | (1 << spec.stored_significand_bits);
            Some((negative, m, field as i32 - spec.exponent_bias))
        }
    }
}

/// Packs `(negative, m, p)` into an IEEE-754 pattern where the magnitude is
/// `m × 2^(p - stored_significand_bits)`.
///
/// `m` must be below `2^significand_bits`. Values with `m` below the implicit
/// bit are subnormal and must use `p = min_exponent`; a subnormal significand
/// that rounded up to exactly `2^stored_significand_bits` lands on the
/// smallest normal pattern without special handling.
#[inline]
pub fn assemble(negative: bool, m: u64, p: i32, spec: &FormatSpec) -> FloatBits {
    debug_assert!(m < 1 << spec.significand_bits);
    debug_assert!(p >= spec.min_exponent && p <= spec.max_exponent);
    let sign = if negative { spec.sign_mask() } else { 0 };
    let magnitude = if m >> spec.stored_significand_bits == 0 {
        m
    } else {
        let field = (p + spec.exponent_bias) as u64;
        (field << spec.stored_significand_bits) | (m & spec.fraction_mask())
    };
    FloatBits {
        bits: sign | magnitude,
        format: spec.format,
    }
}

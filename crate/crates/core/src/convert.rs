//! Decimal `w × 10^q` to binary floating point with one or two 64-bit
//! multiplications against the power-of-five table.

use crate::format::{assemble, Format, FloatBits, FormatSpec, MAX_TABLE_Q, MIN_TABLE_Q};
use crate::scan::DecimalComponents;
use crate::table::lookup;

/// Most significant 128 bits of `w' × T[q]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductResult {
    pub hi: u64,
    pub lo: u64,
    pub two_mults: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConversionOutcome {
    Value { bits: FloatBits, two_mults: bool },
    /// The truncated product could not be proven accurate enough.
    NeedFallback,
}

impl ConversionOutcome {
    pub fn bits(self) -> Option<FloatBits> {
        match self {
            ConversionOutcome::Value { bits, .. } => Some(bits),
            ConversionOutcome::NeedFallback => None,
        }
    }
}

/// Decimal exponents for which the two-word product is always sufficient.
pub const EXACT_PRODUCT_Q: std::ops::RangeInclusive<i32> = -27..=55;

const POWERS_OF_TEN_F64: [f64; 23] = [
    1e0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8, 1e9, 1e10, 1e11, 1e12, 1e13, 1e14, 1e15, 1e16,
    1e17, 1e18, 1e19, 1e20, 1e21, 1e22,
];
const POWERS_OF_TEN_F32: [f32; 11] = [1e0, 1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8, 1e9, 1e10];

// x87 without SSE2 does not round divisions to the destination precision.
const CORRECTLY_ROUNDED_DIVISION: bool = !cfg!(all(target_arch = "x86", not(target_feature = "sse2")));

/// Exact conversion when `w` and `10^|q|` are both representable: a single
/// correctly rounded multiply or divide gives the answer.
#[inline]
pub fn clinger_fast_path(components: &DecimalComponents, spec: &FormatSpec) -> Option<FloatBits> {
    let w = components.significand;
    let q = components.exponent;
    if components.truncated
        || w > spec.fast_path_max_significand
        || q < -spec.fast_path_max_q
        || q > spec.fast_path_max_q
        || (q < 0 && !CORRECTLY_ROUNDED_DIVISION)
    {
        return None;
    }
    let bits = match spec.format {
        Format::Binary64 => {
            let mut value = w as f64;
            if q < 0 {
                value /= POWERS_OF_TEN_F64[(-q) as usize];
            } else {
                value *= POWERS_OF_TEN_F64[q as usize];
            }
            FloatBits::from_f64(value)
        }
        Format::Binary32 => {
            let mut value = w as f32;
            if q < 0 {
                value /= POWERS_OF_TEN_F32[(-q) as usize];
            } else {
                value *= POWERS_OF_TEN_F32[q as usize];
            }
            FloatBits::from_f32(value)
        }
    };
    Some(bits.with_sign(components.negative))
}

/// Truncated product of a normalized significand with `T[q]`.
///
/// One multiplication suffices unless the bits of the high word below the
/// `bits_needed` most significant ones are all ones, in which case a carry
/// from the next word could reach them and the second word is multiplied in.
#[inline]
pub fn compute_product_approx(w_normalized: u64, q: i32, bits_needed: u32) -> ProductResult {
    debug_assert!(w_normalized >> 63 == 1);
    let entry = lookup(q);
    let first = u128::from(w_normalized) * u128::from(entry.hi);
    let mut hi = (first >> 64) as u64;
    let mut lo = first as u64;
    let mask = u64::MAX >> bits_needed;
    let two_mults = hi & mask == mask;
    if two_mults {
        let second = u128::from(w_normalized) * u128::from(entry.lo);
        let (sum, carry) = lo.overflowing_add((second >> 64) as u64);
        lo = sum;
        hi += u64::from(carry);
    }
    ProductResult { hi, lo, two_mults }
}

/// `⌊log2 10^q⌋ + 63 − leading_zeros + u`, with the logarithm computed as
/// `(217706 × q) >> 16` (exact for `q ∈ (−400, 350)`).
#[inline]
pub const fn compute_binary_exponent(q: i32, leading_zeros: u32, u: u32) -> i32 {
    ((217706 * q) >> 16) + 63 - leading_zeros as i32 + u as i32
}

/// Nearest float to `w × 10^q` for `w < 2^64`, or [`ConversionOutcome::NeedFallback`].
///
/// Only the significand and exponent of `components` are used; callers must
/// not pass a truncated significand unless the dropped digits were zero.
#[inline]
pub fn eisel_lemire(components: &DecimalComponents, spec: &FormatSpec) -> ConversionOutcome {
    let negative = components.negative;
    let w = components.significand;
    let q = components.exponent;
    let value = |bits: FloatBits, two_mults: bool| ConversionOutcome::Value { bits, two_mults };

    if w == 0 || q < MIN_TABLE_Q {
        return value(FloatBits::zero(negative, spec), false);
    }
    if q > MAX_TABLE_Q {
        return value(FloatBits::infinity(negative, spec), false);
    }

    let leading_zeros = w.leading_zeros();
    let product = compute_product_approx(w << leading_zeros, q, spec.significand_bits + 2);
    let two_mults = product.two_mults;
    if product.lo == u64::MAX && !EXACT_PRODUCT_Q.contains(&q) {
        return ConversionOutcome::NeedFallback;
    }

    // Keep significand_bits + 1 bits after the (possible) leading zero.
    let upper_bit = (product.hi >> 63) as u32;
    let shift = upper_bit + 64 - spec.significand_bits - 2;
    let mut m = product.hi >> shift;
    let mut p = compute_binary_exponent(q, leading_zeros, upper_bit);

    if p <= spec.min_exponent - 64 {
        return value(FloatBits::zero(negative, spec), two_mults);
    }
    if p < spec.min_exponent {
        // Subnormal: drop the extra bits, round half up, halve. A carry may
        // reach the implicit bit and yield the smallest normal.
        m >>= spec.min_exponent - p;
        m += m & 1;
        m >>= 1;
        return value(assemble(negative, m, spec.min_exponent, spec), two_mults);
    }

    // Exact halfway case: the product has no bits below m's rounding bit.
    if product.lo <= 1
        && m & 3 == 1
        && q >= spec.min_tie_q
        && q <= spec.max_tie_q
        && product.hi % m == 0
        && (product.hi / m).is_power_of_two()
    {
        m -= 1;
    }

    m += m & 1;
    m >>= 1;
    if m == 1 << spec.significand_bits {
        m >>= 1;
        p += 1;
    }
    if p > spec.max_exponent {
        return value(FloatBits::infinity(negative, spec), two_mults);
    }
    value(assemble(negative, m, p, spec), two_mults)
}

//! Slow, obviously-correct reference arithmetic for testing quickfloat.
//!
//! Everything here works on exact rationals built from `num-bigint` and
//! shares no code with the library under test.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Binary interchange format parameters, kept separate from the library's.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    F32,
    F64,
}

impl Target {
    fn precision(self) -> u64 {
        match self {
            Target::F32 => 24,
            Target::F64 => 53,
        }
    }

    /// Weight exponent of the smallest subnormal.
    fn min_lsb(self) -> i64 {
        match self {
            Target::F32 => -149,
            Target::F64 => -1074,
        }
    }

    fn max_exponent(self) -> i64 {
        match self {
            Target::F32 => 127,
            Target::F64 => 1023,
        }
    }

    fn infinity(self) -> u64 {
        match self {
            Target::F32 => 0x7F80_0000,
            Target::F64 => 0x7FF0_0000_0000_0000,
        }
    }

    fn sign_bit(self) -> u64 {
        match self {
            Target::F32 => 1 << 31,
            Target::F64 => 1 << 63,
        }
    }
}

fn pow(base: u32, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Bit pattern of the value nearest to `num / den` (ties to even).
pub fn nearest_ratio(negative: bool, num: &BigUint, den: &BigUint, target: Target) -> u64 {
    assert!(!den.is_zero());
    let sign = if negative { target.sign_bit() } else { 0 };
    if num.is_zero() {
        return sign;
    }
    let prec = target.precision();
    // floor(log2(num/den))
    let mut e = num.bits() as i64 - den.bits() as i64;
    let below = |e: i64| {
        if e >= 0 {
            num < &(den << e as usize)
        } else {
            &(num << (-e) as usize) < den
        }
    };
    if below(e) {
        e -= 1;
    }
    let mut lsb = (e - (prec as i64 - 1)).max(target.min_lsb());
    let (n, d) = if lsb >= 0 {
        (num.clone(), den << lsb as usize)
    } else {
        (num << (-lsb) as usize, den.clone())
    };
    let mut m = &n / &d;
    let twice_rem: BigUint = (&n % &d) << 1usize;
    if twice_rem > d || (twice_rem == d && m.bit(0)) {
        m += 1u32;
    }
    if m.bits() > prec {
        m >>= 1usize;
        lsb += 1;
    }
    let m = m.to_u64().unwrap();
    let fraction_bits = prec - 1;
    if m >> fraction_bits == 0 {
        return sign | m;
    }
    let exponent = lsb + fraction_bits as i64;
    if exponent > target.max_exponent() {
        return sign | target.infinity();
    }
    let field = (exponent + target.max_exponent()) as u64;
    sign | (field << fraction_bits) | (m & ((1 << fraction_bits) - 1))
}

/// Bit pattern of the value nearest to `w × 10^q`.
pub fn nearest(negative: bool, w: &BigUint, q: i64, target: Target) -> u64 {
    if q >= 0 {
        nearest_ratio(negative, &(w * pow(10, q as u64)), &BigUint::one(), target)
    } else {
        nearest_ratio(negative, w, &pow(10, (-q) as u64), target)
    }
}

pub fn nearest_u64(w: u64, q: i64, target: Target) -> u64 {
    nearest(false, &BigUint::from(w), q, target)
}

/// Exact decimal value of a plain decimal string `[-]digits[.digits][e[+-]digits]`.
/// Returns `(negative, w, q)`; panics on anything else.
pub fn decimal_value(s: &str) -> (bool, BigUint, i64) {
    let (negative, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (mantissa, exponent) = match rest.find(['e', 'E']) {
        Some(i) => (&rest[..i], rest[i + 1..].parse::<i64>().expect("exponent")),
        None => (rest, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int}{frac}");
    assert!(!digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()), "{s}");
    let w = BigUint::parse_bytes(digits.as_bytes(), 10).unwrap();
    (negative, w, exponent - frac.len() as i64)
}

/// Bit pattern nearest to the decimal string (see [`decimal_value`]).
pub fn nearest_str(s: &str, target: Target) -> u64 {
    let (negative, w, q) = decimal_value(s);
    nearest(negative, &w, q, target)
}

/// Expected 128-bit table word pair for decimal exponent `q`, straight from
/// the definition:
/// - `q ≥ 0`: the top 128 bits of `5^q`, truncated;
/// - `-27 ≤ q < 0`: `⌊2^(z+127) / 5^-q⌋ + 1` where `z` is the bit length of `5^-q`;
/// - `q < -27`: `⌊2^(2z+128) / 5^-q⌋ + 1`, then truncated to its top 128 bits.
pub fn table_entry(q: i32) -> (u64, u64) {
    let top128 = |v: BigUint| -> BigUint {
        let bits = v.bits();
        if bits > 128 {
            v >> (bits - 128) as usize
        } else {
            v << (128 - bits) as usize
        }
    };
    let value = if q >= 0 {
        top128(pow(5, q as u64))
    } else {
        let five = pow(5, (-q) as u64);
        let z = five.bits();
        if q >= -27 {
            (BigUint::one() << (z + 127) as usize) / &five + 1u32
        } else {
            top128((BigUint::one() << (2 * z + 128) as usize) / &five + 1u32)
        }
    };
    assert_eq!(value.bits(), 128);
    let mask = BigUint::from(u64::MAX);
    let lo = (&value & &mask).to_u64().unwrap();
    let hi = (&value >> 64usize).to_u64().unwrap();
    (hi, lo)
}

/// `⌊log2(10^q)⌋` from the bit lengths of exact powers.
pub fn floor_log2_pow10(q: i64) -> i64 {
    let p = pow(10, q.unsigned_abs());
    let bits = p.bits() as i64;
    if q >= 0 {
        bits - 1
    } else if p.count_ones() == 1 {
        -(bits - 1)
    } else {
        // 2^(bits-1) < 10^|q| < 2^bits, so -bits < log2(10^q) < -(bits-1).
        -bits
    }
}

use num_bigint::BigUint;
use proptest::prelude::*;
use quickfloat::scan::scan_number_bytewise;
use quickfloat::{
    parse_binary32, parse_binary64, parse_hex, scan_number, FloatBits, ScanOptions, BINARY32,
    BINARY64,
};
use quickfloat_oracle::{decimal_value, nearest_str, Target};

fn digit_string(max_len: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(0u8..10, 1..max_len)
        .prop_map(|v| v.into_iter().map(|d| char::from(b'0' + d)).collect())
}

fn decimal_text() -> impl Strategy<Value = String> {
    (
        any::<bool>(),
        digit_string(30),
        proptest::option::of(digit_string(30)),
        proptest::option::of(-400i32..400),
    )
        .prop_map(|(neg, int, frac, exp)| {
            let mut s = String::new();
            if neg {
                s.push('-');
            }
            s.push_str(&int);
            if let Some(f) = frac {
                s.push('.');
                s.push_str(&f);
            }
            if let Some(e) = exp {
                s.push_str(&format!("e{e}"));
            }
            s
        })
}

/// Hexadecimal rendering `0x1.<13 hex>p<e>` of a finite nonzero double.
fn to_hex(x: f64) -> String {
    let bits = x.to_bits();
    let sign = if x.is_sign_negative() { "-" } else { "" };
    let field = ((bits >> 52) & 0x7FF) as i32;
    let frac = bits & ((1 << 52) - 1);
    if field == 0 {
        format!("{sign}0x0.{frac:013x}p-1022")
    } else {
        format!("{sign}0x1.{frac:013x}p{}", field - 1023)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4096))]

    /// Folding keeps the exact value whenever nothing is truncated, and
    /// brackets it from below otherwise.
    #[test]
    fn folding_identity(s in decimal_text()) {
        let c = scan_number(s.as_bytes(), 0, &ScanOptions::default()).unwrap();
        prop_assert_eq!(c.consumed, s.len());
        let (negative, exact, q) = decimal_value(&s);
        prop_assert_eq!(c.negative, negative);
        let folded = BigUint::from(c.significand);
        // Compare w × 10^(c.exponent) with exact × 10^q on a common scale.
        let shift = i64::from(c.exponent) - q;
        let pow = |n: i64| num_traits::pow(BigUint::from(10u32), n as usize);
        let (lhs, rhs) = if shift >= 0 {
            (&folded * pow(shift), exact.clone())
        } else {
            (folded.clone(), &exact * pow(-shift))
        };
        if !c.truncated {
            prop_assert_eq!(lhs, rhs);
        } else {
            prop_assert!(lhs <= rhs);
            let upper = if shift >= 0 { (&folded + 1u32) * pow(shift) } else { &folded + 1u32 };
            prop_assert!(rhs < upper);
            prop_assert_eq!(c.truncated_nonzero, lhs != rhs);
        }
    }

    /// The sticky flag is set exactly when a dropped digit is nonzero.
    #[test]
    fn sticky_bit(head in digit_string(25), tail in digit_string(40)) {
        let s = format!("9{head}.{tail}");
        let c = scan_number(s.as_bytes(), 0, &ScanOptions::default()).unwrap();
        let significant: Vec<u8> = s.bytes().filter(u8::is_ascii_digit).collect();
        prop_assert_eq!(c.digit_count, significant.len());
        prop_assert_eq!(c.truncated, significant.len() > 19);
        let dropped_nonzero = significant.iter().skip(19).any(|&b| b != b'0');
        prop_assert_eq!(c.truncated_nonzero, dropped_nonzero);
    }

    #[test]
    fn swar_matches_bytewise(s in decimal_text(), prefix in 0usize..3) {
        let text = format!("{}{s}", " ".repeat(prefix));
        let opts = ScanOptions::default();
        prop_assert_eq!(
            scan_number(text.as_bytes(), prefix, &opts),
            scan_number_bytewise(text.as_bytes(), prefix, &opts)
        );
    }

    #[test]
    fn decimal_text_is_correctly_rounded(s in decimal_text()) {
        let opts = ScanOptions::default();
        prop_assert_eq!(
            parse_binary64(s.as_bytes(), &opts).unwrap().bits.bits,
            nearest_str(&s, Target::F64)
        );
        prop_assert_eq!(
            parse_binary32(s.as_bytes(), &opts).unwrap().bits.bits,
            nearest_str(&s, Target::F32)
        );
    }

    #[test]
    fn shortest_and_full_precision_round_trip(bits in any::<u64>()) {
        let x = f64::from_bits(bits);
        prop_assume!(x.is_finite());
        let opts = ScanOptions::default();
        for text in [format!("{x:e}"), format!("{x:.16e}"), format!("{x:?}")] {
            let parsed = parse_binary64(text.as_bytes(), &opts).unwrap();
            prop_assert_eq!(parsed.bits.bits, bits, "{}", text);
        }
    }

    #[test]
    fn binary32_round_trip(bits in any::<u32>()) {
        let x = f32::from_bits(bits);
        prop_assume!(x.is_finite());
        let opts = ScanOptions::default();
        for text in [format!("{x:e}"), format!("{x:.8e}")] {
            let parsed = parse_binary32(text.as_bytes(), &opts).unwrap();
            prop_assert_eq!(parsed.bits, FloatBits::from_f32(x), "{}", text);
        }
    }

    #[test]
    fn hex_round_trip(bits in any::<u64>()) {
        let x = f64::from_bits(bits);
        prop_assume!(x.is_finite() && x != 0.0);
        let text = to_hex(x);
        let (parsed, consumed) = parse_hex(text.as_bytes(), &BINARY64).unwrap();
        prop_assert_eq!(consumed, text.len());
        prop_assert_eq!(parsed.bits, bits, "{}", text);
        // Narrowing through the hex path equals narrowing the value.
        let (narrow, _) = parse_hex(text.as_bytes(), &BINARY32).unwrap();
        prop_assert_eq!(narrow, FloatBits::from_f32(x as f32), "{}", text);
    }

    #[test]
    fn never_panics_on_arbitrary_bytes(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let opts = ScanOptions::default();
        if let Ok(p) = parse_binary64(&bytes, &opts) {
            prop_assert!(p.consumed <= bytes.len());
        }
        let _ = parse_binary32(&bytes, &ScanOptions::strict());
        let _ = parse_hex(&bytes, &BINARY64);
    }

    #[test]
    fn agrees_with_std(s in decimal_text()) {
        let ours = parse_binary64(s.as_bytes(), &ScanOptions::default()).unwrap().bits.to_f64();
        let theirs: f64 = s.parse().unwrap();
        prop_assert_eq!(ours.to_bits(), theirs.to_bits());
    }
}

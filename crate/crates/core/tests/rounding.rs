use num_bigint::BigUint;
use quickfloat::{
    clinger_fast_path, convert_components, eisel_lemire, exact_fallback, parse_binary32,
    parse_binary64, BigDecimal, CodePath, ConversionOutcome, DecimalComponents, FormatSpec,
    ScanOptions, ValueKind, BINARY32, BINARY64,
};
use quickfloat_oracle::{nearest, nearest_str, nearest_u64, Target};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn components(w: u64, q: i32) -> DecimalComponents {
    DecimalComponents {
        negative: false,
        significand: w,
        exponent: q,
        digit_count: 0,
        truncated: false,
        truncated_nonzero: false,
        consumed: 0,
        kind: ValueKind::Finite,
    }
}

fn target(spec: &FormatSpec) -> Target {
    if spec.significand_bits == 53 {
        Target::F64
    } else {
        Target::F32
    }
}

/// Random significand with a uniformly random digit count in 1..=19.
fn random_w(rng: &mut ChaCha8Rng) -> u64 {
    let digits = rng.gen_range(1..=19u32);
    rng.gen_range(0..10u64.pow(digits))
}

#[test]
fn fast_conversion_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for spec in [&BINARY64, &BINARY32] {
        let mut fallbacks = 0;
        for _ in 0..100_000 {
            let w = random_w(&mut rng);
            let q = rng.gen_range(-342..=308);
            let expected = nearest_u64(w, i64::from(q), target(spec));
            match eisel_lemire(&components(w, q), spec) {
                ConversionOutcome::Value { bits, .. } => {
                    assert_eq!(bits.bits, expected, "w={w} q={q} {:?}", spec.format)
                }
                ConversionOutcome::NeedFallback => {
                    assert!(!(-27..=55).contains(&q));
                    fallbacks += 1;
                }
            }
        }
        assert!(fallbacks < 100, "{fallbacks} fallbacks");
    }
}

#[test]
fn full_width_significands_match_oracle() {
    // w up to 2^64 - 1 is outside what the scanner produces but inside the
    // algorithm's domain.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..20_000 {
        let w: u64 = rng.gen_range(1..=u64::MAX);
        let q = rng.gen_range(-342..=308);
        for spec in [&BINARY64, &BINARY32] {
            if let Some(bits) = eisel_lemire(&components(w, q), spec).bits() {
                assert_eq!(bits.bits, nearest_u64(w, i64::from(q), target(spec)), "w={w} q={q}");
            }
        }
    }
}

#[test]
fn exact_fallback_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..5_000 {
        let w = random_w(&mut rng);
        let q = rng.gen_range(-360..=320);
        let c = components(w, q);
        for spec in [&BINARY64, &BINARY32] {
            let got = exact_fallback(BigDecimal::from_components(&c), spec);
            assert_eq!(got.bits, nearest_u64(w, i64::from(q), target(spec)), "w={w} q={q}");
        }
    }
}

#[test]
fn long_random_strings_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..3_000 {
        let int_len = rng.gen_range(0..40);
        let frac_len = rng.gen_range(0..60);
        let mut s = String::new();
        if rng.gen_bool(0.3) {
            s.push('-');
        }
        for _ in 0..int_len {
            s.push(char::from(b'0' + rng.gen_range(0..10)));
        }
        if int_len == 0 || rng.gen_bool(0.5) {
            s.push('.');
            for _ in 0..frac_len.max(1) {
                s.push(char::from(b'0' + rng.gen_range(0..10)));
            }
        }
        let e = rng.gen_range(-360..=340);
        s.push_str(&format!("e{e}"));
        let expected64 = nearest_str(&s, Target::F64);
        let expected32 = nearest_str(&s, Target::F32);
        let opts = ScanOptions::default();
        assert_eq!(parse_binary64(s.as_bytes(), &opts).unwrap().bits.bits, expected64, "{s}");
        assert_eq!(parse_binary32(s.as_bytes(), &opts).unwrap().bits.bits, expected32, "{s}");
    }
}

#[test]
fn near_halfway_long_strings() {
    // Midpoints between consecutive doubles, printed exactly, then nudged.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..300 {
        let bits: u64 = rng.gen_range(1..0x7FE0_0000_0000_0000);
        let x = f64::from_bits(bits);
        // midpoint = (2m + 1) × 2^(e - 1) as an exact decimal.
        let (m, e) = {
            let field = (bits >> 52) as i64;
            let frac = bits & ((1 << 52) - 1);
            if field == 0 {
                (frac, -1074)
            } else {
                (frac | 1 << 52, field - 1075)
            }
        };
        let odd = BigUint::from(2 * m + 1);
        let exact = if e - 1 >= 0 {
            (odd << (e - 1) as usize).to_string()
        } else {
            let n = (1 - e) as usize;
            let scaled = odd * num_traits::pow(BigUint::from(5u32), n);
            format!("{scaled}e-{n}")
        };
        for (s, expected) in [
            (exact.clone(), nearest_str(&exact, Target::F64)),
            (nudge(&exact, false), nearest_str(&nudge(&exact, false), Target::F64)),
            (nudge(&exact, true), nearest_str(&nudge(&exact, true), Target::F64)),
        ] {
            let got = parse_binary64(s.as_bytes(), &ScanOptions::default()).unwrap();
            assert_eq!(got.bits.bits, expected, "{s} near {x:e}");
        }
    }
}

/// Appends a nonzero digit far past the point (up), or decrements the last digit (down).
fn nudge(s: &str, up: bool) -> String {
    let (mantissa, exponent) = s.split_once('e').map_or((s, ""), |(a, b)| (a, b));
    let mut digits = mantissa.to_string();
    if up {
        if !digits.contains('.') {
            digits.push('.');
        }
        digits.push_str("00000000000000000000001");
    } else {
        let mut bytes = digits.into_bytes();
        let mut i = bytes.len() - 1;
        while bytes[i] == b'0' {
            bytes[i] = b'9';
            i -= 1;
        }
        bytes[i] -= 1;
        digits = String::from_utf8(bytes).unwrap();
    }
    if exponent.is_empty() {
        digits
    } else {
        format!("{digits}e{exponent}")
    }
}

#[test]
fn clinger_agrees_with_general_path() {
    for spec in [&BINARY64, &BINARY32] {
        let max_q = spec.fast_path_max_q;
        for w in [0, 1, spec.fast_path_max_significand] {
            for q in -max_q..=max_q {
                let c = components(w, q);
                let fast = clinger_fast_path(&c, spec).expect("applies");
                assert_eq!(Some(fast), eisel_lemire(&c, spec).bits(), "w={w} q={q}");
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
        for _ in 0..100_000 {
            let w = rng.gen_range(0..=spec.fast_path_max_significand);
            let q = rng.gen_range(-max_q..=max_q);
            let c = components(w, q);
            assert_eq!(clinger_fast_path(&c, spec), eisel_lemire(&c, spec).bits(), "w={w} q={q}");
        }
    }
}

#[test]
fn no_fallback_inside_exact_product_range() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for _ in 0..200_000 {
        let w: u64 = rng.gen_range(1..=u64::MAX);
        let q = rng.gen_range(-27..=55);
        for spec in [&BINARY64, &BINARY32] {
            assert!(eisel_lemire(&components(w, q), spec).bits().is_some());
        }
    }
}

#[test]
fn worked_examples() {
    let p64 = |s: &str| parse_binary64(s.as_bytes(), &ScanOptions::default()).unwrap();
    assert_eq!(p64("2440254496e57").bits.to_f64(), 2.440254496e66);
    let (_, m, p) = p64("2440254496e57").bits.decompose().unwrap();
    assert_eq!((m, p), (6522226100552617, 220));
    assert_eq!(p64("9007199254740993").bits.to_f64(), 9007199254740992.0);
    assert_eq!(p64("9.109e-31").bits.bits, 0x39B2_79A9_C807_3D8B);
    assert_eq!(p64("0.2").bits.decompose().unwrap(), (false, 7205759403792794, -3));
    assert_eq!(p64("9000000000000000.5").bits.to_f64(), 9000000000000000.0);
    assert_eq!(p64("9000000000000001.5").bits.to_f64(), 9000000000000002.0);
    assert_eq!(p64("9000000000000002.5").bits.to_f64(), 9000000000000002.0);
    assert_eq!(p64("7450580596923828125e-27").bits.to_f64(), 2f64.powi(-27));
}

#[test]
fn longest_halfway_decimal() {
    // (2^53 + 3) × 2^-1075 lies halfway between two doubles just above the
    // smallest normal; written out it needs 768 significant digits.
    let w = BigUint::from(9007199254740995u64) * num_traits::pow(BigUint::from(5u32), 1075);
    let digits = w.to_string();
    assert_eq!(digits.len(), 768);
    let s = format!("{digits}e-1075");
    let parsed = parse_binary64(s.as_bytes(), &ScanOptions::default()).unwrap();
    assert_eq!(parsed.bits.bits, 0x0010_0000_0000_0002);
    assert_eq!(parsed.path, CodePath::Fallback);
    assert_eq!(nearest(false, &w, -1075, Target::F64), 0x0010_0000_0000_0002);

    // Dropping the last digit lands below the tie; a nonzero digit past the
    // 768th lands above it, which still rounds to the even neighbour.
    let below = format!("{}e-1074", &digits[..767]);
    let parsed = parse_binary64(below.as_bytes(), &ScanOptions::default()).unwrap();
    assert_eq!(parsed.bits.bits, 0x0010_0000_0000_0001);
    let above = format!("{digits}{}1e-{}", "0".repeat(100), 1075 + 101);
    let parsed = parse_binary64(above.as_bytes(), &ScanOptions::default()).unwrap();
    assert_eq!(parsed.bits.bits, 0x0010_0000_0000_0002);
    let odd_tie = BigUint::from(9007199254740993u64) * num_traits::pow(BigUint::from(5u32), 1075);
    let above = format!("{odd_tie}{}1e-{}", "0".repeat(100), 1075 + 101);
    let parsed = parse_binary64(above.as_bytes(), &ScanOptions::default()).unwrap();
    assert_eq!(parsed.bits.bits, 0x0010_0000_0000_0001);
}

#[test]
fn components_pipeline_is_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..20_000 {
        let w = random_w(&mut rng);
        let q = rng.gen_range(-350..=320);
        let c = components(w, q);
        let (bits, _) = convert_components(b"", &c, &BINARY64);
        assert_eq!(bits.bits, nearest_u64(w, i64::from(q), Target::F64), "w={w} q={q}");
    }
}

use quickfloat::compute_binary_exponent;
use quickfloat::format::{MAX_TABLE_Q, MIN_TABLE_Q};
use quickfloat::table::{self, lookup, verify_tie_safety};
use quickfloat_oracle::{floor_log2_pow10, table_entry};

#[test]
fn every_entry_matches_big_integer_definition() {
    for q in MIN_TABLE_Q..=MAX_TABLE_Q {
        let entry = lookup(q);
        assert_eq!((entry.hi, entry.lo), table_entry(q), "q = {q}");
    }
    assert_eq!(table::table().len(), 651);
}

#[test]
fn golden_spot_values() {
    let golden: [(i32, u64, u64); 10] = [
        (0, 0x8000000000000000, 0x0000000000000000),
        (27, 0xcecb8f27f4200f3a, 0x0000000000000000),
        (28, 0x813f3978f8940984, 0x4000000000000000),
        (55, 0xd0cf4b50cfe20765, 0xfff4b4e3f741cf6d),
        (-1, 0xcccccccccccccccc, 0xcccccccccccccccd),
        (-17, 0xb877aa3236a4b449, 0x09befeb9fad487c3),
        (-27, 0x9e74d1b791e07e48, 0x775ea264cf55347e),
        (-28, 0xfd87b5f28300ca0d, 0x8bca9d6e188853fc),
        (-34, 0x84ec3c97da624ab4, 0xbd5af13bef0b113e),
        (-40, 0x8b61313bbabce2c6, 0x2323ac4b3b3da015),
    ];
    for (q, hi, lo) in golden {
        assert_eq!((lookup(q).hi, lookup(q).lo), (hi, lo), "q = {q}");
    }
}

#[test]
fn negative_entries_bracket_the_reciprocal() {
    use num_bigint::BigUint;
    for q in MIN_TABLE_Q..0 {
        let five = num_traits::pow(BigUint::from(5u32), (-q) as usize);
        let t = BigUint::from(lookup(q).as_u128());
        // T × 5^n must lie within one T-ulp of a power of two.
        let product = &t * &five;
        let k = product.bits() - 1;
        let lower = BigUint::from(1u32) << k as usize;
        if q >= -27 {
            assert!(product > lower && &product - &lower < five, "q = {q}");
        } else {
            let upper = &lower << 1usize;
            assert!(&upper - &product <= five, "q = {q}");
        }
    }
}

#[test]
fn exponent_formula_matches_brute_force() {
    for q in -399..350 {
        let p = compute_binary_exponent(q, 63, 0);
        assert_eq!(i64::from(p), floor_log2_pow10(i64::from(q)), "q = {q}");
    }
}

#[test]
fn tie_safety_report_is_clean() {
    let report = verify_tie_safety();
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert_eq!(report.rows.len(), 17);
    for row in &report.rows {
        assert!(row.hi_trailing_zeros <= 2, "{row:?}");
    }
}

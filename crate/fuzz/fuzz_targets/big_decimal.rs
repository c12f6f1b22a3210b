#![no_main]

use libfuzzer_sys::fuzz_target;
use quickfloat::{exact_fallback, BigDecimal, BINARY32, BINARY64};

// Arbitrary bytes reach the shift and rounding code without panicking.
fuzz_target!(|data: &[u8]| {
    let d = BigDecimal::parse(data);
    assert!(d.digits().len() <= quickfloat::slow::MAX_DIGITS);
    exact_fallback(d.clone(), &BINARY64);
    exact_fallback(d, &BINARY32);
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use quickfloat::{scan_hexfloat, BINARY32, BINARY64};

fuzz_target!(|data: &[u8]| {
    for spec in [&BINARY64, &BINARY32] {
        if let Ok((_, consumed)) = scan_hexfloat(data, 0, spec) {
            assert!(consumed <= data.len());
        }
    }
});

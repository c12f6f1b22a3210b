#![no_main]

use libfuzzer_sys::fuzz_target;
use quickfloat::scan::scan_number_bytewise;
use quickfloat::{scan_number, ScanOptions};

// The word-at-a-time scanner must agree with the bytewise one on every input.
fuzz_target!(|data: &[u8]| {
    for options in [ScanOptions::default(), ScanOptions::strict()] {
        let fast = scan_number(data, 0, &options);
        let slow = scan_number_bytewise(data, 0, &options);
        assert_eq!(fast, slow);
        if let Ok(c) = fast {
            assert!(c.consumed <= data.len());
        }
    }
});

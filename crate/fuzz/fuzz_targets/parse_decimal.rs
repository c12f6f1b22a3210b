#![no_main]

use libfuzzer_sys::fuzz_target;
use quickfloat::{
    exact_fallback, parse_decimal, BigDecimal, ScanOptions, ValueKind, BINARY32, BINARY64,
};

// Every finite result must equal the exact big-decimal conversion of the
// consumed text.
fuzz_target!(|data: &[u8]| {
    let options = ScanOptions::default();
    for spec in [&BINARY64, &BINARY32] {
        let Ok(parsed) = parse_decimal(data, &options, spec) else { continue };
        assert!(parsed.consumed <= data.len());
        let text = &data[..parsed.consumed];
        let comps = quickfloat::scan_number(text, 0, &options).expect("rescan");
        if comps.kind != ValueKind::Finite {
            continue;
        }
        let exact = exact_fallback(BigDecimal::parse(text), spec);
        assert_eq!(parsed.bits, exact, "{:?}", String::from_utf8_lossy(text));
    }
});

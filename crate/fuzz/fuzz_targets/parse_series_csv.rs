#![no_main]

use chebsig_core::io::parse_series_csv;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(table) = parse_series_csv(text) {
        let back = parse_series_csv(&table.to_csv()).expect("written table parses");
        assert_eq!(back.headers(), table.headers());
        for (a, b) in back.columns().iter().flatten().zip(table.columns().iter().flatten()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }
});

#![no_main]

use chebsig_core::io::{parse_signal_csv, write_signal_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((signal, meta)) = parse_signal_csv(text) {
        // anything accepted must survive a write/parse cycle unchanged
        let again = write_signal_csv(&signal, &meta).expect("parsed metadata is writable");
        let (back, meta_back) = parse_signal_csv(&again).expect("written signal parses");
        assert_eq!(back, signal);
        assert_eq!(meta_back, meta);
    }
});

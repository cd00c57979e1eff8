#![no_main]

use chebsig_core::io::parse_report_json;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = parse_report_json(text) {
        let json = report.to_json().expect("validated report serializes");
        assert_eq!(parse_report_json(&json).expect("round trip"), report);
    }
});

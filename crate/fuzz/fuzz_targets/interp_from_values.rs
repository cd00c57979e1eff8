#![no_main]

use arbitrary::Arbitrary;
use chebsig_core::{ChebInterpolant, Domain};
use libfuzzer_sys::fuzz_target;

#[derive(Debug, Arbitrary)]
struct Input {
    a: f64,
    width: f64,
    values: Vec<f64>,
}

const MAX_LEN: usize = 257;

fuzz_target!(|input: Input| {
    if input.values.len() > MAX_LEN {
        return;
    }
    let Ok(domain) = Domain::new(input.a, input.a + input.width) else {
        return;
    };
    let Ok(p) = ChebInterpolant::from_values(&input.values, domain) else {
        return;
    };
    let scale = input.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if !(scale.is_finite() && scale < 1e100) {
        return;
    }
    // node values come back through the inverse transform
    let back = p.values_at_nodes();
    for (v, b) in input.values.iter().zip(&back) {
        assert!((v - b).abs() <= 1e-10 * scale.max(f64::MIN_POSITIVE), "{v} vs {b}");
    }
    let (lo, hi) = p.min_and_max();
    assert!(lo <= hi || lo.is_nan() || hi.is_nan());
});

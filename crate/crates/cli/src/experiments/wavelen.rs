use chebsig_core::cheb::DEFAULT_TOL;
use chebsig_core::io::Table;
use chebsig_core::{ChebInterpolant, Domain, Error};

use crate::error::HarnessResult;
use crate::report::{ExperimentReport, Scale};

pub const MAX_POWER: u32 = 10;

/// Adaptive length and whether the ladder resolved the function.
fn adaptive_length<F: Fn(f64) -> f64>(f: F) -> HarnessResult<(usize, bool)> {
    match ChebInterpolant::adaptive(f, Domain::UNIT, DEFAULT_TOL) {
        Ok(p) => Ok((p.len(), true)),
        Err(Error::Unresolved { best, .. }) => Ok((best.len(), false)),
        Err(e) => Err(e.into()),
    }
}

pub fn run_wavelen() -> HarnessResult<ExperimentReport> {
    let mut ks = Vec::new();
    let (mut len_sin, mut ok_sin, mut len_rat, mut ok_rat) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for p in 0..=MAX_POWER {
        let k = (1u32 << p) as f64;
        let (l, ok) = adaptive_length(|x| (k * x).sin())?;
        len_sin.push(l as f64);
        ok_sin.push(if ok { 1.0 } else { 0.0 });
        let (l, ok) = adaptive_length(|x| 1.0 / (1.0 + (k * x) * (k * x)))?;
        len_rat.push(l as f64);
        ok_rat.push(if ok { 1.0 } else { 0.0 });
        ks.push(k);
    }
    let unresolved = ok_sin.iter().chain(&ok_rat).filter(|&&v| v == 0.0).count();

    let mut r = ExperimentReport::new("wavelen");
    r.meta("tolerance", DEFAULT_TOL);
    r.meta("unresolved_means", "resolved = 0: length of the largest ladder interpolant");
    r.scalar("length_sin_k1", len_sin[0])?;
    r.scalar("unresolved_count", unresolved as f64)?;
    r.series(
        "lengths",
        Table::from_pairs(vec![
            ("k", ks),
            ("len_sin", len_sin),
            ("resolved_sin", ok_sin),
            ("len_rational", len_rat),
            ("resolved_rational", ok_rat),
        ])?,
        Scale::Log,
    )?;
    Ok(r)
}

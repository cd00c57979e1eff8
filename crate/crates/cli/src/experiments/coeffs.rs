use chebsig_core::cheb::DEFAULT_TOL;
use chebsig_core::io::Table;
use chebsig_core::{BuildMode, ChebInterpolant, Domain};

use super::index_column;
use crate::error::HarnessResult;
use crate::report::{ExperimentReport, Scale};

/// Coefficient magnitudes reported for parity checks go up to this degree.
pub const PARITY_WINDOW: usize = 50;

fn magnitude_table(p: &ChebInterpolant) -> HarnessResult<Table> {
    let a: Vec<f64> = p.coeffs().iter().map(|c| c.abs()).collect();
    Ok(Table::from_pairs(vec![("k", index_column(a.len())), ("abs_coeff", a)])?)
}

fn adaptive<F: Fn(f64) -> f64>(f: F) -> HarnessResult<ChebInterpolant> {
    Ok(ChebInterpolant::from_function(f, Domain::UNIT, BuildMode::Adaptive)?)
}

pub fn run_coeffs() -> HarnessResult<ExperimentReport> {
    let mut r = ExperimentReport::new("coeffs");

    let f = adaptive(f64::tanh)?;
    let g = adaptive(|x| 1e-5 * (10.0 * x).tanh())?;
    let h = adaptive(|x| 1e-10 * (100.0 * x).tanh())?;
    let s = f.add(&g)?.add(&h)?;
    let s_trunc = s.truncate(DEFAULT_TOL);
    for (label, p) in [("tanh_f", &f), ("tanh_g", &g), ("tanh_h", &h), ("tanh_sum", &s), ("tanh_sum_truncated", &s_trunc)] {
        r.series(label, magnitude_table(p)?, Scale::Log)?;
    }
    r.scalar("length_sum", s.len() as f64)?;
    r.scalar("length_sum_truncated", s_trunc.len() as f64)?;

    let stripe = adaptive(|x| x.exp() / (1.0 + 10000.0 * x * x))?;
    r.series("stripe", magnitude_table(&stripe)?, Scale::Log)?;
    let parity_max = |parity: usize| {
        stripe.coeffs().iter().enumerate().take(PARITY_WINDOW + 1).filter(|(k, _)| k % 2 == parity).map(|(_, c)| c.abs()).fold(0.0, f64::max)
    };
    r.scalar("stripe_length", stripe.len() as f64)?;
    r.scalar("stripe_max_even", parity_max(0))?;
    r.scalar("stripe_max_odd", parity_max(1))?;

    let atan = adaptive(f64::atan)?;
    r.series("atan", magnitude_table(&atan)?, Scale::Log)?;
    for k in [1usize, 3, 5] {
        r.scalar(&format!("atan_a{k}"), atan.coeffs()[k])?;
    }
    r.meta("truncation_tolerance", DEFAULT_TOL);
    Ok(r)
}

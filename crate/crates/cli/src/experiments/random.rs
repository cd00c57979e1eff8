use std::time::Instant;

use chebsig_core::io::Table;
use chebsig_core::signal::{uniform_values, RngSeed};
use chebsig_core::{ChebInterpolant, Domain, Error};

use super::linspace;
use crate::error::HarnessResult;
use crate::report::{ExperimentReport, Scale};

pub const DENSE_POINTS: usize = 2001;
pub const ZOOM: (f64, f64) = (0.9999, 1.0);

/// The interpolant through seeded `U(-1, 1)` values at `points`
/// second-kind points of `[-1, 1]`.
pub fn random_interpolant(points: usize, seed: RngSeed) -> HarnessResult<ChebInterpolant> {
    if points < 2 {
        return Err(Error::InvalidArgument(format!("random data needs at least 2 points (got {points})")).into());
    }
    let values = uniform_values(points, -1.0, 1.0, seed)?;
    Ok(ChebInterpolant::from_values(&values, Domain::UNIT)?)
}

pub fn run_random(points: usize, seed: RngSeed) -> HarnessResult<ExperimentReport> {
    let clock = Instant::now();
    let p = random_interpolant(points, seed)?;
    let (min, max) = p.min_and_max();
    let elapsed = clock.elapsed().as_secs_f64();

    let mut r = ExperimentReport::new("random");
    r.meta("seed", seed.0);
    r.meta("points", points);
    r.meta("elapsed_seconds", "informational only, monotonic clock");
    r.scalar("min", min)?;
    r.scalar("max", max)?;
    r.scalar("elapsed_seconds", elapsed)?;
    for (label, (a, b)) in [("dense", (-1.0, 1.0)), ("zoom", ZOOM)] {
        let x = linspace(a, b, DENSE_POINTS);
        let y = p.evaluate_many(&x);
        r.series(label, Table::from_pairs(vec![("x", x), ("p", y)])?, Scale::Linear)?;
    }
    Ok(r)
}

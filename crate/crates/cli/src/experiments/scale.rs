use chebsig_core::io::Table;
use chebsig_core::{BuildMode, ChebInterpolant, Domain};

use super::linspace;
use crate::error::HarnessResult;
use crate::report::{ExperimentReport, Scale};

pub const DEGREE: usize = 9;
pub const DENSE_POINTS: usize = 1201;

pub fn run_scale() -> HarnessResult<ExperimentReport> {
    let sym = Domain::new(-6.0, 6.0)?;
    let half = Domain::new(0.0, 6.0)?;
    let p_sym = ChebInterpolant::from_function(f64::sin, sym, BuildMode::Fixed(DEGREE))?;
    let p_half = ChebInterpolant::from_function(f64::sin, half, BuildMode::Fixed(DEGREE))?;

    let x = linspace(-6.0, 6.0, DENSE_POINTS);
    let f: Vec<f64> = x.iter().map(|v| v.sin()).collect();
    let err_sym: Vec<f64> = x.iter().zip(&f).map(|(&v, fv)| (p_sym.evaluate(v) - fv).abs()).collect();
    let err_half: Vec<f64> = x.iter().zip(&f).map(|(&v, fv)| (p_half.evaluate(v) - fv).abs()).collect();

    let max_sym = err_sym.iter().copied().fold(0.0, f64::max);
    let max_half_in = x.iter().zip(&err_half).filter(|(v, _)| **v >= 0.0).map(|(_, e)| *e).fold(0.0, f64::max);
    let node_err = p_sym
        .nodes()?
        .points()
        .iter()
        .map(|&v| (p_sym.evaluate(v) - v.sin()).abs())
        .fold(0.0, f64::max);

    let mut r = ExperimentReport::new("scale");
    r.meta("function", "sin");
    r.meta("degree", DEGREE);
    r.scalar("max_error_sym", max_sym)?;
    r.scalar("max_error_half_in_domain", max_half_in)?;
    r.scalar("node_error_sym", node_err)?;
    r.scalar("extrapolation_error_at_minus6", (p_half.evaluate(-6.0) - (-6.0f64).sin()).abs())?;
    r.series(
        "error",
        Table::from_pairs(vec![("x", x.clone()), ("err_sym", err_sym), ("err_half", err_half)])?,
        Scale::Log,
    )?;
    let p_s = p_sym.evaluate_many(&x);
    let p_h = p_half.evaluate_many(&x);
    r.series("curves", Table::from_pairs(vec![("x", x), ("f", f), ("p_sym", p_s), ("p_half", p_h)])?, Scale::Linear)?;
    Ok(r)
}

//! Convergence of fixed-degree interpolants of `e^x` and the Runge function
//! `1/(1+25x²)` on `[-1, 1]`.
//!
//! Two error measures are recorded for each degree: the measured error of
//! the computed interpolant (weighted L² on a Clenshaw–Curtis grid, and the
//! maximum over a uniform grid) and the exact L² error of the interpolant in
//! real arithmetic. The latter follows from the known Chebyshev series of
//! both functions: on the `n + 1` second-kind points `T_m` coincides with
//! `T_{m'}`, `m'` being `m` folded into `[0, n]` modulo `2n`, so the
//! interpolant's coefficients are the folded series and the error series is
//! known term by term. Its L² norm uses the exact Gram matrix of the `T_k`.
//!
//! Measured errors stall near `|f'|·ε` (node rounding) and never reach
//! `2^-52·‖f‖`, so the threshold degree is taken from the exact errors.

use chebsig_core::conditioning::clenshaw_curtis_weights;
use chebsig_core::io::Table;
use chebsig_core::{BuildMode, ChebInterpolant, Domain};

use super::{index_column, linspace};
use crate::error::HarnessResult;
use crate::report::{ExperimentReport, Scale};

pub const MAX_DEGREE: usize = 300;
pub const L2_GRID: usize = 2048;
pub const SUP_GRID: usize = 10_001;
/// Series terms kept beyond which coefficients are below any double.
const SERIES_TERMS: usize = 2400;
pub const RATIO_RANGE: (usize, usize) = (60, 120);

/// `2^-52`.
pub const THRESHOLD: f64 = f64::EPSILON;

pub fn runge(x: f64) -> f64 {
    1.0 / (1.0 + 25.0 * x * x)
}

/// `ρ = (1 + √26)/5`, the Bernstein ellipse parameter of the Runge function.
pub fn runge_rho() -> f64 {
    (1.0 + 26f64.sqrt()) / 5.0
}

/// A function's Chebyshev series on `[-1, 1]` and its L² norm.
#[derive(Debug, Clone)]
pub struct ExactSeries {
    pub coeffs: Vec<f64>,
    pub norm: f64,
}

impl ExactSeries {
    /// `e^x = I_0(1) + 2 Σ I_k(1) T_k(x)`.
    pub fn exp() -> Self {
        let mut coeffs: Vec<f64> = (0..SERIES_TERMS).map(|k| 2.0 * bessel_i_at_one(k)).collect();
        coeffs[0] /= 2.0;
        Self { coeffs, norm: 2f64.sinh().sqrt() }
    }

    /// `1/(1+25x²) = (1/√26) (1 + 2 Σ (-1)^k r^{2k} T_{2k}(x))`,
    /// `r = (√26 - 1)/5`.
    pub fn runge() -> Self {
        let s = 26f64.sqrt();
        let r2 = ((s - 1.0) / 5.0).powi(2);
        let mut coeffs = vec![0.0; SERIES_TERMS];
        coeffs[0] = 1.0 / s;
        let mut pow = 1.0;
        for k in 1..SERIES_TERMS / 2 {
            pow *= r2;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            coeffs[2 * k] = 2.0 * sign * pow / s;
        }
        Self { coeffs, norm: (1.0 / 26.0 + 5f64.atan() / 5.0).sqrt() }
    }
}

/// `I_k(1) = Σ_m (1/2)^{2m+k} / (m! (m+k)!)`.
fn bessel_i_at_one(k: usize) -> f64 {
    let mut lead = 1.0;
    for j in 1..=k {
        lead *= 0.5 / j as f64;
    }
    let mut term = lead;
    let mut sum = 0.0;
    let mut m = 0usize;
    while term > sum * 1e-18 || m == 0 {
        sum += term;
        m += 1;
        term *= 0.25 / (m as f64 * (m + k) as f64);
        if term == 0.0 {
            break;
        }
    }
    sum
}

/// `∫_{-1}^{1} T_m(x) dx`.
fn integral_t(m: usize) -> f64 {
    if m % 2 == 1 {
        0.0
    } else {
        let mf = m as f64;
        2.0 / (1.0 - mf * mf)
    }
}

/// Exact L² error of the degree-`n` interpolant at the second-kind points.
pub fn exact_l2_error(series: &ExactSeries, n: usize) -> f64 {
    let a = &series.coeffs;
    let mut err = vec![0.0; a.len()];
    let period = 2 * n;
    for (m, &am) in a.iter().enumerate() {
        if m <= n {
            continue;
        }
        // T_m beyond the degree: error gets +a_m at m and -a_m at its alias
        err[m] += am;
        let r = m % period;
        let folded = if r <= n { r } else { period - r };
        err[folded] -= am;
    }
    let peak = err.iter().fold(0.0f64, |acc, e| acc.max(e.abs()));
    if peak == 0.0 {
        return 0.0;
    }
    let support: Vec<(usize, f64)> =
        err.iter().enumerate().filter(|(_, e)| e.abs() > peak * 1e-24).map(|(k, &e)| (k, e)).collect();
    let mut sum = 0.0;
    for &(i, ei) in &support {
        for &(j, ej) in &support {
            sum += ei * ej * 0.5 * (integral_t(i + j) + integral_t(i.abs_diff(j)));
        }
    }
    sum.max(0.0).sqrt()
}

struct Measured {
    l2: Vec<f64>,
    sup: Vec<f64>,
}

fn measure<F: Fn(f64) -> f64 + Copy>(f: F, grid: &[f64], weights: &[f64], uniform: &[f64]) -> HarnessResult<Measured> {
    let fg: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
    let fu: Vec<f64> = uniform.iter().map(|&x| f(x)).collect();
    let mut l2 = Vec::with_capacity(MAX_DEGREE);
    let mut sup = Vec::with_capacity(MAX_DEGREE);
    for n in 1..=MAX_DEGREE {
        let p = ChebInterpolant::from_function(f, Domain::UNIT, BuildMode::Fixed(n))?;
        let s: f64 = grid.iter().zip(&fg).zip(weights).map(|((&x, fx), w)| w * (p.evaluate(x) - fx).powi(2)).sum();
        l2.push(s.sqrt());
        sup.push(uniform.iter().zip(&fu).map(|(&x, fx)| (p.evaluate(x) - fx).abs()).fold(0.0, f64::max));
    }
    Ok(Measured { l2, sup })
}

/// Largest relative deviation of `e(n)/e(n-2)` from `target` over the range.
pub fn ratio_deviation(errors: &[f64], range: (usize, usize), target: f64) -> f64 {
    (range.0..=range.1)
        .map(|n| (errors[n - 1] / errors[n - 3] / target - 1.0).abs())
        .fold(0.0, f64::max)
}

pub fn run_converge() -> HarnessResult<ExperimentReport> {
    let grid_nodes = chebsig_core::cheb::cheb_points_second_kind(L2_GRID - 1, Domain::UNIT)?;
    let grid = grid_nodes.points();
    let weights = clenshaw_curtis_weights(L2_GRID, Domain::UNIT)?;
    let uniform = linspace(-1.0, 1.0, SUP_GRID);

    let exp_m = measure(f64::exp, grid, &weights, &uniform)?;
    let runge_m = measure(runge, grid, &weights, &uniform)?;
    let (exp_s, runge_s) = (ExactSeries::exp(), ExactSeries::runge());
    let exp_exact: Vec<f64> = (1..=MAX_DEGREE).map(|n| exact_l2_error(&exp_s, n)).collect();
    let runge_exact: Vec<f64> = (1..=MAX_DEGREE).map(|n| exact_l2_error(&runge_s, n)).collect();

    let first_below = |a: &[f64], na: f64, b: &[f64], nb: f64| {
        (0..MAX_DEGREE).find(|&i| a[i] < THRESHOLD * na && b[i] < THRESHOLD * nb).map(|i| i + 1)
    };
    let n_star = first_below(&exp_exact, exp_s.norm, &runge_exact, runge_s.norm);
    let n_star_measured = first_below(&exp_m.l2, exp_s.norm, &runge_m.l2, runge_s.norm);

    let target = runge_rho().powi(-2);
    let mut r = ExperimentReport::new("converge");
    r.meta("degrees", format!("1..={MAX_DEGREE}"));
    r.meta("l2_grid", format!("{L2_GRID} second-kind points, Clenshaw-Curtis weights"));
    r.meta("sup_grid", format!("{SUP_GRID} uniform points"));
    r.meta("threshold", "first n with both L2 errors below 2^-52 * ||f||_2");
    r.meta("n_star_source", "exact-arithmetic interpolation error (aliased Chebyshev series)");
    match n_star {
        Some(n) => r.scalar("n_star", n as f64)?,
        None => r.meta("n_star", format!("none up to {MAX_DEGREE}")),
    }
    match n_star_measured {
        Some(n) => r.scalar("n_star_measured", n as f64)?,
        None => r.meta("n_star_measured", format!("none up to {MAX_DEGREE}: measured errors floor above the threshold")),
    }
    r.scalar("norm_exp", exp_s.norm)?;
    r.scalar("norm_runge", runge_s.norm)?;
    r.scalar("exp_l2_error_n20", exp_m.l2[19])?;
    r.scalar("exp_sup_error_n20", exp_m.sup[19])?;
    r.scalar("exp_measured_floor", exp_m.l2.iter().copied().fold(f64::INFINITY, f64::min))?;
    r.scalar("runge_measured_floor", runge_m.l2.iter().copied().fold(f64::INFINITY, f64::min))?;
    r.scalar("runge_rho_inverse_squared", target)?;
    r.scalar("runge_ratio_deviation_l2", ratio_deviation(&runge_m.l2, RATIO_RANGE, target))?;
    r.scalar("runge_ratio_deviation_sup", ratio_deviation(&runge_m.sup, RATIO_RANGE, target))?;
    r.series(
        "errors",
        Table::from_pairs(vec![
            ("n", index_column(MAX_DEGREE + 1)[1..].to_vec()),
            ("exp_l2", exp_m.l2),
            ("exp_sup", exp_m.sup),
            ("exp_l2_exact", exp_exact),
            ("runge_l2", runge_m.l2),
            ("runge_sup", runge_m.sup),
            ("runge_l2_exact", runge_exact),
        ])?,
        Scale::Log,
    )?;
    Ok(r)
}

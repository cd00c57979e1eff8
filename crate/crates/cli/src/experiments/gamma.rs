//! Gamma-variate reconstruction: Chebyshev fit versus spectral resampling,
//! with optional noise and uneven sampling, plus the spectrum, deviation and
//! filtering experiments built on the same curve.

use std::f64::consts::PI;

use chebsig_core::cheb::{cheb_points_second_kind, evaluate_barycentric};
use chebsig_core::fourier::{amplitude_spectrum, resample_spectral, SpectralInterpolant, UniformSignal};
use chebsig_core::io::Table;
use chebsig_core::signal::{
    add_noise, even_grid, gamma_variate, moving_average, peak_metrics, rms_deviation, uneven_grid, FilterMode,
    GammaParams, RngSeed, Signal, DEFAULT_NOISE_SIGMA,
};
use chebsig_core::{ChebInterpolant, Domain, NodeSet};

use super::{linspace, ChebFit, Options, SpacingChoice};
use crate::error::HarnessResult;
use crate::report::{ExperimentReport, Scale};

pub const SAMPLE_INTERVALS: usize = 30;
pub const FILTER_INTERVALS: usize = 300;
pub const RESAMPLE_COUNT: usize = 1000;
pub const DENSE_POINTS: usize = 1000;

pub fn span() -> f64 {
    3.0 * PI
}

fn params() -> GammaParams {
    GammaParams::standard()
}

/// Data handed to the Chebyshev fit: the interpolation nodes and the values
/// placed on them.
struct ChebData {
    nodes: NodeSet,
    values: Vec<f64>,
}

fn cheb_data(fit: ChebFit, samples: &Signal, noise: Option<(f64, RngSeed)>) -> HarnessResult<ChebData> {
    let domain = Domain::new(0.0, span())?;
    let nodes = cheb_points_second_kind(samples.len() - 1, domain)?;
    let values = match fit {
        ChebFit::NodeValues => samples.y().to_vec(),
        ChebFit::Resample => {
            let clean = gamma_variate(&params(), nodes.points())?;
            match noise {
                Some((sigma, seed)) => add_noise(&clean, sigma, seed)?.y().to_vec(),
                None => clean.y().to_vec(),
            }
        }
    };
    Ok(ChebData { nodes, values })
}

fn sample_signal(opts: &Options) -> HarnessResult<Signal> {
    let t = match opts.spacing {
        SpacingChoice::Even => even_grid(span(), SAMPLE_INTERVALS),
        SpacingChoice::Uneven => uneven_grid(SAMPLE_INTERVALS + 1, span(), opts.seed, opts.uneven_mode)?,
    };
    let clean = gamma_variate(&params(), &t)?;
    Ok(if opts.noise { add_noise(&clean, DEFAULT_NOISE_SIGMA, opts.seed)? } else { clean })
}

pub fn gamma_report_name(spacing: SpacingChoice, noise: bool) -> String {
    let s = match spacing {
        SpacingChoice::Even => "even",
        SpacingChoice::Uneven => "uneven",
    };
    format!("gamma_{s}_{}", if noise { "noisy" } else { "clean" })
}

pub fn run_gamma(opts: &Options) -> HarnessResult<ExperimentReport> {
    let samples = sample_signal(opts)?;
    let noise = opts.noise.then_some((DEFAULT_NOISE_SIGMA, opts.seed));
    let data = cheb_data(opts.cheb_fit, &samples, noise)?;
    let p = ChebInterpolant::from_values(&data.values, data.nodes.domain())?;

    let mut r = ExperimentReport::new(gamma_report_name(opts.spacing, opts.noise));
    r.meta("spacing", format!("{:?}", opts.spacing).to_lowercase());
    r.meta("uneven_mode", format!("{:?}", opts.uneven_mode).to_lowercase());
    r.meta("noise", if opts.noise { "on" } else { "off" });
    r.meta("sigma", if opts.noise { DEFAULT_NOISE_SIGMA } else { 0.0 });
    r.meta("seed", opts.seed.0);
    r.meta("cheb_fit", opts.cheb_fit.label());
    r.meta("params", "normalized pdf, shape 2, rate 1");

    // Clenshaw at the nodes measures reproduction; the barycentric form
    // returns the data exactly at the nodes and defines the reported peak
    let at_nodes: Vec<f64> = p.evaluate_many(data.nodes.points());
    let exact_at_nodes: Vec<f64> = data
        .nodes
        .points()
        .iter()
        .map(|&x| evaluate_barycentric(&data.values, &data.nodes, x))
        .collect::<Result<_, _>>()?;
    let reproduction = at_nodes.iter().zip(&data.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let reference = Signal::new(data.nodes.points().to_vec(), data.values.clone())?;
    let cheb_peak = peak_metrics(&reference, &reference.with_values(exact_at_nodes));
    r.scalar("cheb_sample_max_error", reproduction)?;
    r.scalar("sample_max", samples.max_value())?;
    r.scalar("cheb_peak", cheb_peak.cand_max)?;
    r.scalar("cheb_peak_gap", cheb_peak.abs_gap)?;

    let dense_t = linspace(0.0, span(), DENSE_POINTS);
    let dense_p = p.evaluate_many(&dense_t);
    r.scalar("cheb_dense_max", dense_p.iter().copied().fold(f64::NEG_INFINITY, f64::max))?;

    r.series("samples", Table::from_pairs(vec![("t", samples.t().to_vec()), ("y", samples.y().to_vec())])?, Scale::Linear)?;
    r.series(
        "cheb_nodes",
        Table::from_pairs(vec![("x", data.nodes.points().to_vec()), ("data", data.values.clone()), ("p", at_nodes)])?,
        Scale::Linear,
    )?;
    r.series("cheb_dense", Table::from_pairs(vec![("t", dense_t), ("p", dense_p)])?, Scale::Linear)?;

    match samples.to_uniform() {
        Ok(u) => {
            r.meta("fourier", "ok");
            fourier_part(&mut r, &samples, &u)?;
        }
        Err(e) => r.meta("fourier", e.to_string()),
    }
    Ok(r)
}

fn fourier_part(r: &mut ExperimentReport, samples: &Signal, u: &UniformSignal) -> HarnessResult<()> {
    let resampled = resample_spectral(u, RESAMPLE_COUNT)?;
    let series = SpectralInterpolant::new(u);
    let reproduction =
        samples.t().iter().zip(samples.y()).map(|(&t, &y)| (series.evaluate(t) - y).abs()).fold(0.0, f64::max);
    let dense = Signal::from(resampled);
    let consistency =
        dense.t().iter().zip(dense.y()).map(|(&t, &y)| (series.evaluate(t) - y).abs()).fold(0.0, f64::max);
    let peak = peak_metrics(samples, &dense);
    r.scalar("fourier_sample_max_error", reproduction)?;
    r.scalar("fourier_resample_consistency", consistency)?;
    r.scalar("fourier_peak", peak.cand_max)?;
    r.scalar("fourier_peak_gap", peak.abs_gap)?;
    r.series("fourier_dense", Table::from_pairs(vec![("t", dense.t().to_vec()), ("y", dense.y().to_vec())])?, Scale::Linear)?;
    Ok(())
}

fn clean_even_samples() -> HarnessResult<Signal> {
    Ok(gamma_variate(&params(), &even_grid(span(), SAMPLE_INTERVALS))?)
}

pub fn run_spectrum() -> HarnessResult<ExperimentReport> {
    let s = clean_even_samples()?;
    let u = s.to_uniform()?;
    let spec = amplitude_spectrum(&u);
    let n = spec.len();
    let energy_time: f64 = s.y().iter().map(|v| v * v).sum::<f64>() * n as f64;
    let energy_freq: f64 = spec.amplitudes.iter().map(|a| a * a).sum();

    let mut r = ExperimentReport::new("spectrum");
    r.meta("signal", "clean gamma variate, 31 even samples on [0, 3pi]");
    r.meta("polar", "theta = 2*pi*frequency, rho = amplitude");
    r.scalar("length", n as f64)?;
    r.scalar("dc_amplitude", spec.amplitudes[0])?;
    r.scalar("sample_sum", s.y().iter().sum::<f64>())?;
    r.scalar("parseval_relative_error", (energy_freq - energy_time).abs() / energy_time)?;
    let theta: Vec<f64> = spec.frequencies.iter().map(|f| 2.0 * PI * f).collect();
    r.series(
        "spectrum",
        Table::from_pairs(vec![
            ("frequency", spec.frequencies.clone()),
            ("amplitude", spec.amplitudes.clone()),
            ("phase", spec.phases.clone()),
            ("theta", theta),
            ("rho", spec.amplitudes),
        ])?,
        Scale::Linear,
    )?;
    Ok(r)
}

pub fn run_deviation(fit: ChebFit) -> HarnessResult<ExperimentReport> {
    let samples = clean_even_samples()?;
    let data = cheb_data(fit, &samples, None)?;
    let p = ChebInterpolant::from_values(&data.values, data.nodes.domain())?;
    let dev: Vec<f64> =
        data.nodes.points().iter().zip(&data.values).map(|(&x, &y)| (p.evaluate(x) - y).abs()).collect();

    let mut r = ExperimentReport::new("deviation");
    r.meta("cheb_fit", fit.label());
    r.scalar("count", dev.len() as f64)?;
    r.scalar("mean_abs_deviation", dev.iter().sum::<f64>() / dev.len() as f64)?;
    r.scalar("max_abs_deviation", dev.iter().copied().fold(0.0, f64::max))?;
    r.series("deviation", Table::from_pairs(vec![("x", data.nodes.points().to_vec()), ("abs_dev", dev)])?, Scale::Linear)?;
    Ok(r)
}

pub fn run_filter(seed: RngSeed, window: usize, mode: FilterMode) -> HarnessResult<ExperimentReport> {
    let clean = gamma_variate(&params(), &even_grid(span(), FILTER_INTERVALS))?;
    let noisy = add_noise(&clean, DEFAULT_NOISE_SIGMA, seed)?;
    let filtered = moving_average(&noisy, window, mode)?;

    let mut r = ExperimentReport::new("filter");
    r.meta("seed", seed.0);
    r.meta("window", window);
    r.meta("mode", format!("{mode:?}").to_lowercase());
    r.meta("sigma", DEFAULT_NOISE_SIGMA);
    r.scalar("rms_raw", rms_deviation(noisy.y(), clean.y()))?;
    r.scalar("rms_filtered", rms_deviation(filtered.y(), clean.y()))?;
    r.series(
        "overlay",
        Table::from_pairs(vec![
            ("t", clean.t().to_vec()),
            ("clean", clean.y().to_vec()),
            ("raw", noisy.y().to_vec()),
            ("filtered", filtered.y().to_vec()),
        ])?,
        Scale::Linear,
    )?;
    Ok(r)
}

//! Trigonometric interpolation on uniform grids.
//!
//! A uniformly sampled signal of `N` points with spacing `h` is treated as
//! one period (length `N·h`) of a band-limited function. Three views of the
//! same interpolant are provided: zero-padded spectral resampling, direct
//! evaluation of the Fourier series, and the sum of periodic cardinal
//! functions.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fft::{dft_forward_real, dft_inverse};

/// Relative tolerance on spacing deviations for a grid to count as uniform.
pub const UNIFORM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniformSignal {
    start: f64,
    step: f64,
    values: Vec<f64>,
}

impl UniformSignal {
    pub fn new(start: f64, step: f64, values: Vec<f64>) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) || !start.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "uniform signal needs finite start and positive step (got {start}, {step})"
            )));
        }
        if values.len() < 2 {
            return Err(Error::InvalidArgument("uniform signal needs at least 2 samples".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { start, step, values })
    }

    /// Builds from explicit abscissae, which must be uniformly spaced.
    pub fn from_samples(t: &[f64], y: &[f64]) -> Result<Self> {
        if t.len() != y.len() {
            return Err(Error::LengthMismatch { expected: t.len(), got: y.len() });
        }
        let step = uniform_step(t)?;
        Self::new(t[0], step, y.to_vec())
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Length of one period of the implied periodic extension.
    pub fn period(&self) -> f64 {
        self.step * self.values.len() as f64
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.values.len()).map(|k| self.start + k as f64 * self.step).collect()
    }
}

/// Returns the common spacing of `t`, or [`Error::UnevenNodes`] when the
/// consecutive differences deviate from their mean by more than
/// [`UNIFORM_TOL`] relative.
pub fn uniform_step(t: &[f64]) -> Result<f64> {
    if t.len() < 2 {
        return Err(Error::InvalidArgument("need at least 2 abscissae".into()));
    }
    if let Some(i) = t.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let n = t.len() - 1;
    let step = (t[n] - t[0]) / n as f64;
    if !(step > 0.0) {
        return Err(Error::UnevenNodes);
    }
    for w in t.windows(2) {
        if ((w[1] - w[0]) - step).abs() > UNIFORM_TOL * step {
            return Err(Error::UnevenNodes);
        }
    }
    Ok(step)
}

/// Resamples to `new_count` points over the same period by zero-padding the
/// spectrum. For even input length the Nyquist coefficient is split evenly
/// between the positive and negative frequency slots.
pub fn resample_spectral(signal: &UniformSignal, new_count: usize) -> Result<UniformSignal> {
    let n = signal.len();
    if new_count < n {
        return Err(Error::InvalidArgument(format!(
            "cannot resample {n} points down to {new_count}"
        )));
    }
    if new_count == n {
        return Ok(signal.clone());
    }
    let spec = dft_forward_real(signal.values());
    let mut padded = vec![Complex64::new(0.0, 0.0); new_count];
    let half = (n - 1) / 2;
    padded[..=half].copy_from_slice(&spec[..=half]);
    for j in 1..=half {
        padded[new_count - j] = spec[n - j];
    }
    if n % 2 == 0 {
        let nyq = spec[n / 2] * 0.5;
        padded[n / 2] = nyq;
        padded[new_count - n / 2] = nyq;
    }
    let ratio = new_count as f64 / n as f64;
    let values: Vec<f64> = dft_inverse(&padded).iter().map(|z| z.re * ratio).collect();
    UniformSignal::new(signal.start(), signal.step() / ratio, values)
}

/// The trigonometric interpolant of a uniform signal in Fourier-series form,
/// evaluable at any abscissa.
#[derive(Debug, Clone)]
pub struct SpectralInterpolant {
    start: f64,
    period: f64,
    count: usize,
    spectrum: Vec<Complex64>,
}

impl SpectralInterpolant {
    pub fn new(signal: &UniformSignal) -> Self {
        Self {
            start: signal.start(),
            period: signal.period(),
            count: signal.len(),
            spectrum: dft_forward_real(signal.values()),
        }
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        let n = self.count;
        let phase = 2.0 * PI * (t - self.start) / self.period;
        let mut sum = self.spectrum[0].re;
        for k in 1..=(n - 1) / 2 {
            let z = self.spectrum[k];
            let th = k as f64 * phase;
            // X_k e^{ikθ} + conj(X_k) e^{-ikθ}
            sum += 2.0 * (z.re * th.cos() - z.im * th.sin());
        }
        if n % 2 == 0 {
            let z = self.spectrum[n / 2];
            sum += z.re * ((n / 2) as f64 * phase).cos();
        }
        sum / n as f64
    }
}

/// Periodic cardinal function on a grid of spacing `2/N` (period 2):
/// `sin(Nπx/2) / (N sin(πx/2))` for odd `N`, with `tan` in place of `sin`
/// in the denominator for even `N`. Equals 1 at every even integer.
pub fn trig_cardinal(x: f64, n: usize) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 {
        return 1.0;
    }
    let nf = n as f64;
    let num = (nf * PI * r / 2.0).sin();
    let den = if n % 2 == 1 { (PI * r / 2.0).sin() } else { (PI * r / 2.0).tan() };
    num / (nf * den)
}

/// Evaluates the trigonometric interpolant through `(sample_x, sample_y)`
/// at `query_x` as a sum of cardinal functions. The samples are rescaled so
/// their spacing becomes `2/N`; the implied period is `N` sample spacings.
pub fn trig_interpolate(sample_x: &[f64], sample_y: &[f64], query_x: &[f64]) -> Result<Vec<f64>> {
    if sample_x.len() != sample_y.len() {
        return Err(Error::LengthMismatch { expected: sample_x.len(), got: sample_y.len() });
    }
    let step = uniform_step(sample_x)?;
    let n = sample_x.len();
    let scale = step / (2.0 / n as f64);
    Ok(query_x
        .iter()
        .map(|&q| {
            sample_x
                .iter()
                .zip(sample_y)
                .map(|(&xk, &yk)| yk * trig_cardinal((q - xk) / scale, n))
                .sum()
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub frequencies: Vec<f64>,
    pub amplitudes: Vec<f64>,
    pub phases: Vec<f64>,
}

impl SpectrumReport {
    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }
}

/// Magnitude and phase of the unnormalized DFT, with bin `k` placed at
/// frequency `k / (N·step)`.
pub fn amplitude_spectrum(signal: &UniformSignal) -> SpectrumReport {
    let n = signal.len();
    let spec = dft_forward_real(signal.values());
    let df = 1.0 / (n as f64 * signal.step());
    SpectrumReport {
        frequencies: (0..n).map(|k| k as f64 * df).collect(),
        amplitudes: spec.iter().map(|z| z.norm()).collect(),
        phases: spec
            .iter()
            .map(|z| {
                let p = z.arg();
                if p == -PI {
                    PI
                } else {
                    p
                }
            })
            .collect(),
    }
}

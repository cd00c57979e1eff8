//! Sampled signals: gamma-variate generation, seeded noise, uneven grids,
//! moving-average filtering and peak comparison.
//!
//! All randomness comes from ChaCha8 seeded with a caller-supplied `u64`.
//! Independent draws for the same seed (grid vs. noise) use separate ChaCha
//! streams, so every experiment is reproducible bit for bit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::{uniform_step, UniformSignal};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Spacing {
    Even(f64),
    Uneven,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Signal {
    t: Vec<f64>,
    y: Vec<f64>,
    spacing: Spacing,
}

impl Signal {
    /// Validates the samples and classifies the spacing.
    pub fn new(t: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if t.len() != y.len() {
            return Err(Error::LengthMismatch { expected: t.len(), got: y.len() });
        }
        if t.len() < 2 {
            return Err(Error::InvalidArgument("signal needs at least 2 samples".into()));
        }
        if let Some(i) = t.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        if let Some(i) = y.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        if t.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("sample times must be strictly increasing".into()));
        }
        let spacing = match uniform_step(&t) {
            Ok(step) => Spacing::Even(step),
            Err(_) => Spacing::Uneven,
        };
        Ok(Self { t, y, spacing })
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn with_values(&self, y: Vec<f64>) -> Self {
        debug_assert_eq!(y.len(), self.t.len());
        Self { t: self.t.clone(), y, spacing: self.spacing }
    }

    /// Fails with [`Error::UnevenNodes`] unless the grid is uniform.
    pub fn to_uniform(&self) -> Result<UniformSignal> {
        match self.spacing {
            Spacing::Even(step) => UniformSignal::new(self.t[0], step, self.y.clone()),
            Spacing::Uneven => Err(Error::UnevenNodes),
        }
    }

    pub fn max_value(&self) -> f64 {
        self.y.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

impl From<UniformSignal> for Signal {
    fn from(u: UniformSignal) -> Self {
        let t = u.times();
        let step = u.step();
        Self { t, y: u.values().to_vec(), spacing: Spacing::Even(step) }
    }
}

/// `0, h, 2h, …` up to `end` inclusive, built by multiplication as
/// `0:h:end` would.
pub fn even_grid(end: f64, intervals: usize) -> Vec<f64> {
    let h = end / intervals as f64;
    (0..=intervals).map(|k| k as f64 * h).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaForm {
    /// `A (t - t0)^α exp(-(t - t0)/β)` for `t >= t0`, zero before.
    Scaled,
    /// `β^α (t - t0)^{α-1} exp(-β (t - t0)) / Γ(α)`; `β` acts as a rate and
    /// the amplitude is unused.
    NormalizedPdf,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaParams {
    pub amplitude: f64,
    pub onset: f64,
    pub shape: f64,
    pub scale: f64,
    pub form: GammaForm,
}

impl GammaParams {
    /// `α = 2, β = 1`, normalized form: `t·e^{-t}`.
    pub fn standard() -> Self {
        Self { amplitude: 1.0, onset: 0.0, shape: 2.0, scale: 1.0, form: GammaForm::NormalizedPdf }
    }

    fn validate(&self) -> Result<()> {
        if !(self.shape > 0.0) || !(self.scale > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "gamma shape and scale must be positive (got {}, {})",
                self.shape, self.scale
            )));
        }
        if self.form == GammaForm::Scaled && !(self.amplitude > 0.0) {
            return Err(Error::InvalidArgument("gamma amplitude must be positive".into()));
        }
        Ok(())
    }

    pub fn value(&self, t: f64) -> f64 {
        let s = t - self.onset;
        if s < 0.0 {
            return 0.0;
        }
        match self.form {
            GammaForm::Scaled => self.amplitude * s.powf(self.shape) * (-s / self.scale).exp(),
            GammaForm::NormalizedPdf => {
                let (a, b) = (self.shape, self.scale);
                b.powf(a) * s.powf(a - 1.0) * (-b * s).exp() / libm::tgamma(a)
            }
        }
    }
}

pub fn gamma_variate(params: &GammaParams, t: &[f64]) -> Result<Signal> {
    params.validate()?;
    let y = t.iter().map(|&x| params.value(x)).collect();
    Signal::new(t.to_vec(), y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed(pub u64);

/// ChaCha stream identifiers so that different uses of one seed do not
/// share draws.
const GRID_STREAM: u64 = 0;
const NOISE_STREAM: u64 = 1;
const VALUE_STREAM: u64 = 2;

impl RngSeed {
    fn rng(self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.0);
        rng.set_stream(stream);
        rng
    }
}

/// `count` independent draws from `U(lo, hi)`.
pub fn uniform_values(count: usize, lo: f64, hi: f64, seed: RngSeed) -> Result<Vec<f64>> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidArgument(format!("bad range [{lo}, {hi}]")));
    }
    let mut rng = seed.rng(VALUE_STREAM);
    Ok((0..count).map(|_| rng.random_range(lo..hi)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnevenMode {
    /// Sorted uniform draws on `[0, span]`.
    Sorted,
    /// The even grid over `[0, span]` multiplied pointwise by sorted uniform draws.
    Modulated,
}

pub fn uneven_grid(count: usize, span: f64, seed: RngSeed, mode: UnevenMode) -> Result<Vec<f64>> {
    if count < 2 {
        return Err(Error::InvalidArgument("uneven grid needs at least 2 points".into()));
    }
    if !(span > 0.0 && span.is_finite()) {
        return Err(Error::InvalidArgument(format!("span must be positive (got {span})")));
    }
    let mut rng = seed.rng(GRID_STREAM);
    let mut u: Vec<f64> = (0..count).map(|_| rng.random::<f64>()).collect();
    u.sort_by(f64::total_cmp);
    let mut t: Vec<f64> = match mode {
        UnevenMode::Sorted => u.iter().map(|v| v * span).collect(),
        UnevenMode::Modulated => even_grid(span, count - 1).iter().zip(&u).map(|(g, v)| g * v).collect(),
    };
    let nudge = 1e-12 * span;
    for i in 1..t.len() {
        if t[i] <= t[i - 1] {
            t[i] = t[i - 1] + nudge;
        }
    }
    Ok(t)
}

/// Adds `sigma · N(0, 1)` to every sample (absolute, not relative, noise).
pub fn add_noise(signal: &Signal, sigma: f64, seed: RngSeed) -> Result<Signal> {
    if !(sigma >= 0.0 && sigma.is_finite()) {
        return Err(Error::InvalidArgument(format!("noise sigma must be >= 0 (got {sigma})")));
    }
    if sigma == 0.0 {
        return Ok(signal.clone());
    }
    let mut rng = seed.rng(NOISE_STREAM);
    let y = signal
        .y()
        .iter()
        .map(|&v| {
            let g: f64 = rng.sample(StandardNormal);
            v + sigma * g
        })
        .collect();
    Ok(signal.with_values(y))
}

pub const DEFAULT_NOISE_SIGMA: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FilterMode {
    /// `y'[k] = (1/w) Σ_{i<w} y[k-i]` with zeros before the first sample.
    Causal,
    /// Window centred on `k`, averaged over the samples that exist.
    Centered,
}

pub fn moving_average(signal: &Signal, window: usize, mode: FilterMode) -> Result<Signal> {
    if window == 0 {
        return Err(Error::InvalidArgument("window must be >= 1".into()));
    }
    let y = signal.y();
    let n = y.len();
    let out = match mode {
        FilterMode::Causal => {
            let w = window as f64;
            (0..n)
                .map(|k| {
                    let lo = (k + 1).saturating_sub(window);
                    y[lo..=k].iter().sum::<f64>() / w
                })
                .collect()
        }
        FilterMode::Centered => {
            let back = (window - 1) / 2;
            let ahead = window - 1 - back;
            (0..n)
                .map(|k| {
                    let lo = k.saturating_sub(back);
                    let hi = (k + ahead).min(n - 1);
                    y[lo..=hi].iter().sum::<f64>() / (hi - lo + 1) as f64
                })
                .collect()
        }
    };
    Ok(signal.with_values(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PeakMetrics {
    pub ref_max: f64,
    pub cand_max: f64,
    pub abs_gap: f64,
}

pub fn peak_metrics(reference: &Signal, candidate: &Signal) -> PeakMetrics {
    let ref_max = reference.max_value();
    let cand_max = candidate.max_value();
    PeakMetrics { ref_max, cand_max, abs_gap: (cand_max - ref_max).abs() }
}

/// Root-mean-square difference of two equally long value vectors.
pub fn rms_deviation(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    (a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>() / a.len() as f64).sqrt()
}

/// Consecutive spacings deviate from uniform by more than [`crate::fourier::UNIFORM_TOL`].
pub fn is_uneven(t: &[f64]) -> bool {
    uniform_step(t).is_err()
}

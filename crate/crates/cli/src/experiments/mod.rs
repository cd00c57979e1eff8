//! One function per experiment. Each returns an [`ExperimentReport`]; none
//! touches the filesystem.

mod coeffs;
pub mod condition;
mod converge;
mod gamma;
mod nodes;
pub mod random;
mod scale;
mod wavelen;

use chebsig_core::signal::{FilterMode, RngSeed, UnevenMode};

use crate::error::HarnessResult;
use crate::report::ExperimentReport;

pub use coeffs::run_coeffs;
pub use condition::run_condition;
pub use converge::{exact_l2_error, run_converge, ExactSeries};
pub use gamma::{run_deviation, run_filter, run_gamma, run_spectrum};
pub use nodes::run_nodes;
pub use random::run_random;
pub use scale::run_scale;
pub use wavelen::run_wavelen;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpacingChoice {
    Even,
    Uneven,
}

/// How sampled signal values feed the Chebyshev fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebFit {
    /// The samples are taken as values at the second-kind points of the
    /// signal's interval, whatever abscissae they were recorded at.
    NodeValues,
    /// The generator is sampled afresh at the second-kind points.
    Resample,
}

impl ChebFit {
    pub fn label(self) -> &'static str {
        match self {
            Self::NodeValues => "node-values",
            Self::Resample => "resample",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub n: Option<usize>,
    pub seed: RngSeed,
    pub noise: bool,
    pub spacing: SpacingChoice,
    pub uneven_mode: UnevenMode,
    pub window: usize,
    pub cheb_fit: ChebFit,
    pub filter_mode: FilterMode,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            n: None,
            seed: RngSeed(42),
            noise: false,
            spacing: SpacingChoice::Even,
            uneven_mode: UnevenMode::Sorted,
            window: 5,
            cheb_fit: ChebFit::NodeValues,
            filter_mode: FilterMode::Causal,
        }
    }
}

pub const DEFAULT_RANDOM_POINTS: usize = 10;
pub const DEFAULT_NODE_COUNT: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    Random,
    Converge,
    Scale,
    Wavelen,
    Coeffs,
    Gamma,
    Spectrum,
    Deviation,
    Filter,
    Nodes,
    Condition,
}

impl Experiment {
    pub const ALL: [Experiment; 11] = [
        Self::Random,
        Self::Converge,
        Self::Scale,
        Self::Wavelen,
        Self::Coeffs,
        Self::Gamma,
        Self::Spectrum,
        Self::Deviation,
        Self::Filter,
        Self::Nodes,
        Self::Condition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Random => "random",
            Self::Converge => "converge",
            Self::Scale => "scale",
            Self::Wavelen => "wavelen",
            Self::Coeffs => "coeffs",
            Self::Gamma => "gamma",
            Self::Spectrum => "spectrum",
            Self::Deviation => "deviation",
            Self::Filter => "filter",
            Self::Nodes => "nodes",
            Self::Condition => "condition",
        }
    }
}

pub fn run(exp: Experiment, opts: &Options) -> HarnessResult<ExperimentReport> {
    match exp {
        Experiment::Random => run_random(opts.n.unwrap_or(DEFAULT_RANDOM_POINTS), opts.seed),
        Experiment::Converge => run_converge(),
        Experiment::Scale => run_scale(),
        Experiment::Wavelen => run_wavelen(),
        Experiment::Coeffs => run_coeffs(),
        Experiment::Gamma => run_gamma(opts),
        Experiment::Spectrum => run_spectrum(),
        Experiment::Deviation => run_deviation(opts.cheb_fit),
        Experiment::Filter => run_filter(opts.seed, opts.window, opts.filter_mode),
        Experiment::Nodes => run_nodes(opts.n.unwrap_or(DEFAULT_NODE_COUNT)),
        Experiment::Condition => run_condition(),
    }
}

/// Every experiment; the gamma experiment in its three standard variants
/// (even and clean, even and noisy, uneven and noisy).
pub fn run_all(opts: &Options) -> HarnessResult<Vec<(Experiment, ExperimentReport)>> {
    let mut out = Vec::new();
    for exp in Experiment::ALL {
        if exp == Experiment::Gamma {
            for (spacing, noise) in
                [(SpacingChoice::Even, false), (SpacingChoice::Even, true), (SpacingChoice::Uneven, true)]
            {
                let o = Options { spacing, noise, ..opts.clone() };
                out.push((exp, run_gamma(&o)?));
            }
        } else {
            out.push((exp, run(exp, opts)?));
        }
    }
    Ok(out)
}

/// `m` equispaced points from `a` to `b` with both ends exact.
pub fn linspace(a: f64, b: f64, m: usize) -> Vec<f64> {
    let step = (b - a) / (m - 1) as f64;
    (0..m).map(|i| if i == m - 1 { b } else { a + i as f64 * step }).collect()
}

pub(crate) fn index_column(len: usize) -> Vec<f64> {
    (0..len).map(|k| k as f64).collect()
}

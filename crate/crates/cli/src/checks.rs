//! Golden assertions for `--check`.

use chebsig_core::conditioning::DEFAULT_GRID;
use chebsig_core::nodes_analysis::smallest_nonzero_midpoint;

use crate::error::HarnessResult;
use crate::experiments::condition::run_condition_on_grid;
use crate::experiments::random::random_interpolant;
use crate::experiments::{linspace, Experiment, Options, DEFAULT_NODE_COUNT, DEFAULT_RANDOM_POINTS};
use crate::report::ExperimentReport;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(label: &str, passed: bool, detail: String) -> Self {
        Self { label: label.into(), passed, detail }
    }
}

struct Checker<'a> {
    report: &'a ExperimentReport,
    out: Vec<Check>,
}

impl<'a> Checker<'a> {
    fn value(&self, key: &str) -> f64 {
        self.report.get(key).unwrap_or(f64::NAN)
    }

    fn near(&mut self, key: &str, target: f64, rel: f64) {
        let v = self.value(key);
        let ok = ((v - target) / target).abs() <= rel;
        self.out.push(Check::new(key, ok, format!("{v:.6e} vs {target:.6e} (rel tol {rel:e})")));
    }

    fn within(&mut self, key: &str, target: f64, abs: f64) {
        let v = self.value(key);
        let ok = (v - target).abs() <= abs;
        self.out.push(Check::new(key, ok, format!("{v:.10e} vs {target:.10e} (abs tol {abs:e})")));
    }

    fn below(&mut self, key: &str, bound: f64) {
        let v = self.value(key);
        self.out.push(Check::new(key, v < bound, format!("{v:.3e} < {bound:.3e}")));
    }

    fn above(&mut self, key: &str, bound: f64) {
        let v = self.value(key);
        self.out.push(Check::new(key, v > bound, format!("{v:.3e} > {bound:.3e}")));
    }

    fn equal(&mut self, key: &str, target: f64) {
        let v = self.value(key);
        self.out.push(Check::new(key, v == target, format!("{v:e} == {target:e}")));
    }

    fn truth(&mut self, label: &str, ok: bool, detail: impl Into<String>) {
        self.out.push(Check::new(label, ok, detail.into()));
    }
}

fn column_ok<F: Fn(&[f64]) -> bool>(report: &ExperimentReport, series: &str, column: &str, pred: F) -> bool {
    report.get_series(series).and_then(|t| t.column(column)).is_some_and(pred)
}

pub fn check(exp: Experiment, report: &ExperimentReport, opts: &Options) -> HarnessResult<Vec<Check>> {
    let mut c = Checker { report, out: Vec::new() };
    match exp {
        Experiment::Random => {
            let points = opts.n.unwrap_or(DEFAULT_RANDOM_POINTS);
            c.truth(
                "schema",
                report.get("min").is_some()
                    && report.get("max").is_some()
                    && report.get("elapsed_seconds").is_some()
                    && report.all_series().len() == 2,
                "scalars min, max, elapsed_seconds and two series",
            );
            if points <= 100 {
                let p = random_interpolant(points, opts.seed)?;
                let scan = p.evaluate_many(&linspace(-1.0, 1.0, 1_000_001));
                let lo = scan.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = scan.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                c.within("min", lo, 1e-8);
                c.within("max", hi, 1e-8);
            }
        }
        Experiment::Converge => {
            let n = c.value("n_star");
            c.truth("n_star", (180.0..=260.0).contains(&n), format!("{n} in [180, 260]"));
            c.below("exp_l2_error_n20", 1e-14);
            c.below("runge_ratio_deviation_l2", 0.05);
            c.below("runge_ratio_deviation_sup", 0.05);
        }
        Experiment::Scale => {
            c.below("node_error_sym", 1e-13);
            c.above("max_error_sym", 1e-3);
            c.above("extrapolation_error_at_minus6", 1.0);
        }
        Experiment::Wavelen => {
            let ok = column_ok(report, "lengths", "len_sin", |l| l.windows(2).all(|w| w[0] <= w[1]));
            c.truth("len_sin_nondecreasing", ok, "L(k) for sin(kx)");
            // k = 2^p sits at index p. The length is k plus a slowly growing
            // resolution margin, so the doubling ratio climbs towards 2 and
            // only clears 1.6 once k dominates the margin.
            let ratios = |l: &[f64]| -> Vec<f64> { l.windows(2).map(|w| w[1] / w[0]).collect() };
            let asymptotic = column_ok(report, "lengths", "len_sin", |l| {
                ratios(l).iter().skip(6).all(|r| (1.6..=2.4).contains(r))
            });
            c.truth("len_sin_doubling", asymptotic, "L(2k)/L(k) in [1.6, 2.4] for k >= 64");
            let climbing = column_ok(report, "lengths", "len_sin", |l| {
                ratios(l).windows(2).skip(3).all(|w| w[0] <= w[1] && w[1] < 2.0)
            });
            c.truth("len_sin_ratio_climbs", climbing, "L(2k)/L(k) nondecreasing and below 2 for k >= 8");
            let above_k = report
                .get_series("lengths")
                .and_then(|t| Some(t.column("k")?.iter().zip(t.column("len_sin")?).all(|(k, l)| l > k)))
                .unwrap_or(false);
            c.truth("len_sin_exceeds_k", above_k, "L(k) > k");
            let v = c.value("length_sin_k1");
            c.truth("length_sin_k1", v <= 20.0, format!("{v} <= 20"));
        }
        Experiment::Coeffs => {
            c.within("atan_a1", 0.828427124746190, 1e-12);
            c.within("atan_a3", -0.047378541243650, 1e-12);
            c.within("atan_a5", 0.004877323527903, 1e-12);
            let (a, b) = (c.value("length_sum_truncated"), c.value("length_sum"));
            c.truth("truncation_shortens", a < b, format!("{a} < {b}"));
            c.above("stripe_max_even", 1e-14);
            c.above("stripe_max_odd", 1e-14);
        }
        Experiment::Gamma => {
            c.below("cheb_sample_max_error", 1e-10);
            c.equal("cheb_peak_gap", 0.0);
            let uneven = report.get_meta("spacing") == Some("uneven");
            let noisy = report.get_meta("noise") == Some("on");
            if uneven {
                let msg = report.get_meta("fourier").unwrap_or("");
                c.truth("fourier_rejects_uneven", msg.contains("uneven nodes unsupported"), msg.to_string());
            } else {
                c.below("fourier_sample_max_error", 1e-10);
                c.below("fourier_resample_consistency", 1e-10);
                if noisy {
                    c.above("fourier_peak_gap", 0.0);
                }
            }
        }
        Experiment::Spectrum => {
            c.equal("length", 31.0);
            let sum = c.value("sample_sum").abs();
            c.within("dc_amplitude", sum, 1e-12 * sum);
            c.below("parseval_relative_error", 1e-9);
        }
        Experiment::Deviation => {
            c.below("mean_abs_deviation", 1e-10);
            c.below("max_abs_deviation", 1e-9);
            c.equal("count", 31.0);
        }
        Experiment::Filter => {
            let (f, raw) = (c.value("rms_filtered"), c.value("rms_raw"));
            c.truth("filter_reduces_rms", f < raw || opts.window == 1, format!("{f:.4e} < {raw:.4e}"));
            if opts.window == 1 {
                let same = report
                    .get_series("overlay")
                    .is_some_and(|t| t.column("raw") == t.column("filtered"));
                c.truth("window_one_identity", same, "filtered == raw");
            }
            c.truth(
                "metadata",
                report.get_meta("window").is_some() && report.get_meta("seed").is_some(),
                "window and seed recorded",
            );
        }
        Experiment::Nodes => {
            if opts.n.unwrap_or(DEFAULT_NODE_COUNT) == 100 {
                c.within("compare_second_kind_legendre", 0.0084, 5e-4);
                c.within("compare_first_kind_legendre", 0.0028078, 1e-6);
            }
            let sorted = report
                .get_series("node_tables")
                .is_some_and(|t| t.columns()[1..].iter().all(|col| col.windows(2).all(|w| w[0] < w[1])));
            c.truth("tables_ascending", sorted, "every node column strictly ascending");
            c.equal("smallest_nonzero_midpoint", smallest_nonzero_midpoint()? as f64);
        }
        Experiment::Condition => {
            c.near("cond_chebyshev", 3.7126, 0.01);
            c.near("cond_monomial", 3.073e3, 0.02);
            c.near("cond_monomial_0_1", 2.2871e7, 0.05);
            c.near("sigma_max_chebyshev", 1.5238, 0.01);
            c.near("sigma_min_chebyshev", 0.4104, 0.01);
            let coarse = run_condition_on_grid(DEFAULT_GRID / 2)?;
            for key in ["cond_chebyshev", "cond_monomial", "cond_monomial_0_1"] {
                let (a, b) = (coarse.get(key).unwrap_or(f64::NAN), c.value(key));
                let rel = ((a - b) / b).abs();
                c.truth(&format!("{key}_grid_stable"), rel < 1e-3, format!("512 vs 1024 grid: {rel:.2e} < 1e-3"));
            }
        }
    }
    Ok(c.out)
}

//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use chebsig::experiments::{run_condition, run_converge, run_gamma};
use chebsig::{ChebFit, Options, SpacingChoice};
use chebsig_core::cheb::{cheb_points_first_kind, cheb_points_second_kind, coeffs_to_values, values_to_coeffs};
use chebsig_core::conditioning::{conditioning_sweep, Basis};
use chebsig_core::fft::dft_forward_real;
use chebsig_core::fourier::trig_cardinal;
use chebsig_core::nodes_analysis::{compare_nodes, legendre_eval, legendre_points};
use chebsig_core::signal::{
    add_noise, even_grid, gamma_variate, moving_average, rms_deviation, uniform_values, FilterMode, GammaParams,
    RngSeed, Signal,
};
use chebsig_core::{BuildMode, ChebInterpolant, Domain};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Runs `body`, folds the runtime limit into the verdict and prints the line.
fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let clock = Instant::now();
    let mut o = body();
    let took = clock.elapsed();
    if took > limit {
        o.passed = false;
        o.detail = format!("{}; runtime {:.2?} over limit {:.0?}", o.detail, took, limit);
    }
    println!("{} [{id}] {title} ({took:.2?}): {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    o.passed
}

fn arctan_coefficients() -> Outcome {
    let p = ChebInterpolant::from_function(f64::atan, Domain::UNIT, BuildMode::Adaptive).unwrap();
    let want = [(1, 0.828427124746190), (3, -0.047378541243650), (5, 0.004877323527903)];
    let worst = want.iter().map(|&(k, v)| (p.coeffs()[k] - v).abs()).fold(0.0, f64::max);
    outcome(worst < 1e-12, format!("max |delta| = {worst:.2e} (< 1e-12)"))
}

fn degree_nine_nodes() -> Outcome {
    let listing = [-1.0000, -0.9397, -0.7660, -0.5000, -0.1736, 0.1736, 0.5000, 0.7660, 0.9397, 1.0000];
    let pts = cheb_points_second_kind(9, Domain::UNIT).unwrap();
    let worst = pts.points().iter().zip(listing).map(|(p, e)| (p - e).abs()).fold(0.0, f64::max);
    outcome(pts.len() == 10 && worst <= 5e-5, format!("max |delta| = {worst:.2e} (<= 5e-5)"))
}

fn legendre_comparison() -> Outcome {
    let leg = legendre_points(100).unwrap();
    let first = compare_nodes(&cheb_points_first_kind(100, Domain::UNIT).unwrap(), &leg).unwrap();
    let second = compare_nodes(&cheb_points_second_kind(99, Domain::UNIT).unwrap(), &leg).unwrap();
    outcome(
        (first - 0.0084).abs() <= 5e-4,
        format!(
            "first-kind(100) vs Legendre(100) = {first:.7} (target 0.0084 +- 0.0005); \
             second-kind(100) vs Legendre(100) = {second:.7}"
        ),
    )
}

fn conditioning() -> Outcome {
    let r = run_condition().unwrap();
    let rel = |key: &str, target: f64| ((r.get(key).unwrap() - target) / target).abs();
    let checks = [
        ("cond_chebyshev", 3.7126, 0.01),
        ("cond_monomial", 3.073e3, 0.02),
        ("cond_monomial_0_1", 2.2871e7, 0.05),
        ("sigma_max_chebyshev", 1.5238, 0.01),
        ("sigma_min_chebyshev", 0.4104, 0.01),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (key, target, tol) in checks {
        let e = rel(key, target);
        ok &= e <= tol;
        parts.push(format!("{key} {:.6e} (rel {e:.1e} <= {tol})", r.get(key).unwrap()));
    }
    outcome(ok, parts.join("; "))
}

fn convergence() -> Outcome {
    let r = run_converge().unwrap();
    let n_star = r.get("n_star").unwrap_or(f64::NAN);
    let e20 = r.get("exp_l2_error_n20").unwrap();
    let dev_l2 = r.get("runge_ratio_deviation_l2").unwrap();
    let dev_sup = r.get("runge_ratio_deviation_sup").unwrap();
    outcome(
        (180.0..=260.0).contains(&n_star) && e20 < 1e-14 && dev_l2 < 0.05 && dev_sup < 0.05,
        format!(
            "n* = {n_star} in [180, 260]; e^x error at n=20 = {e20:.2e}; Runge ratio deviation L2 {dev_l2:.2e}, \
             sup {dev_sup:.2e} (< 5%); measured floors e^x {:.2e}, Runge {:.2e}",
            r.get("exp_measured_floor").unwrap(),
            r.get("runge_measured_floor").unwrap()
        ),
    )
}

fn gamma_even() -> Outcome {
    let clean = run_gamma(&Options::default()).unwrap();
    let noisy = run_gamma(&Options { noise: true, ..Options::default() }).unwrap();
    let g = |r: &chebsig::ExperimentReport, k: &str| r.get(k).unwrap();
    let ok = g(&clean, "cheb_sample_max_error") < 1e-10
        && g(&clean, "cheb_peak_gap") == 0.0
        && g(&clean, "fourier_sample_max_error") < 1e-10
        && clean.get_series("samples").unwrap().rows() == 31
        && g(&noisy, "cheb_peak_gap") == 0.0
        && g(&noisy, "fourier_peak_gap") > 0.0;
    outcome(
        ok,
        format!(
            "clean: cheb reproduction {:.1e}, cheb gap {}, fourier reproduction {:.1e}; noisy: cheb gap {}, fourier gap {:.3e}",
            g(&clean, "cheb_sample_max_error"),
            g(&clean, "cheb_peak_gap"),
            g(&clean, "fourier_sample_max_error"),
            g(&noisy, "cheb_peak_gap"),
            g(&noisy, "fourier_peak_gap"),
        ),
    )
}

fn gamma_uneven() -> Outcome {
    let opts = Options { spacing: SpacingChoice::Uneven, noise: true, cheb_fit: ChebFit::NodeValues, ..Options::default() };
    let r = run_gamma(&opts).unwrap();
    let msg = r.get_meta("fourier").unwrap_or("").to_string();
    let through = r.get("cheb_sample_max_error").unwrap();
    let data = r.get_series("cheb_nodes").unwrap();
    let samples = r.get_series("samples").unwrap();
    let ok = msg.contains("uneven nodes unsupported")
        && through < 1e-10
        && r.get("cheb_peak_gap") == Some(0.0)
        && data.column("data") == samples.column("y");
    outcome(ok, format!("fourier: {msg:?}; chebyshev passes through all samples (max error {through:.1e})"))
}

fn property_suites() -> Outcome {
    let mut failures = Vec::new();
    let mut note = |name: &str, ok: bool, detail: String| {
        if !ok {
            failures.push(format!("{name}: {detail}"));
        }
    };

    let mut sym = true;
    for n in 1..=200 {
        let p = cheb_points_second_kind(n, Domain::UNIT).unwrap();
        let q = cheb_points_first_kind(n, Domain::UNIT).unwrap();
        let l = legendre_points(n).unwrap();
        for set in [p.points(), q.points(), l.points()] {
            let m = set.len();
            sym &= (0..m).all(|k| set[k] == -set[m - 1 - k]);
        }
    }
    note("node symmetry", sym, "mirror not bit-exact".into());

    let mut worst_rt = 0.0f64;
    for (i, n) in [2usize, 3, 8, 17, 100, 257, 1000, 4097].into_iter().enumerate() {
        let v = uniform_values(n, -1.0, 1.0, RngSeed(i as u64)).unwrap();
        let back = coeffs_to_values(&values_to_coeffs(&v));
        worst_rt = worst_rt.max(v.iter().zip(&back).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
    }
    note("transform round trip", worst_rt < 1e-12, format!("{worst_rt:.2e}"));

    let mut worst_card = 0.0f64;
    for n in [5usize, 8, 31, 32, 101] {
        for j in -(n as i64)..=(n as i64) {
            let x = 2.0 * j as f64 / n as f64;
            let want = if j.rem_euclid(n as i64) == 0 { 1.0 } else { 0.0 };
            worst_card = worst_card.max((trig_cardinal(x, n) - want).abs());
        }
    }
    note("cardinal Kronecker delta", worst_card < 1e-13, format!("{worst_card:.2e}"));

    let mut worst_parseval = 0.0f64;
    for (i, n) in [7usize, 31, 64, 1000].into_iter().enumerate() {
        let y = uniform_values(n, -1.0, 1.0, RngSeed(100 + i as u64)).unwrap();
        let time: f64 = y.iter().map(|v| v * v).sum::<f64>() * n as f64;
        let freq: f64 = dft_forward_real(&y).iter().map(|z| z.norm_sqr()).sum();
        worst_parseval = worst_parseval.max((time - freq).abs() / time);
    }
    note("Parseval", worst_parseval < 1e-9, format!("{worst_parseval:.2e}"));

    let p = ChebInterpolant::from_function(f64::exp, Domain::UNIT, BuildMode::Adaptive).unwrap();
    let dp = p.derivative();
    let h = 1e-6;
    let xs = uniform_values(100, -0.99, 0.99, RngSeed(7)).unwrap();
    let worst_fd = xs
        .iter()
        .map(|&x| (dp.evaluate(x) - (p.evaluate(x + h) - p.evaluate(x - h)) / (2.0 * h)).abs())
        .fold(0.0, f64::max);
    note("derivative vs finite difference", worst_fd < 1e-7, format!("{worst_fd:.2e}"));

    let mut worst_leg = (0.0f64, 0usize);
    for n in 1..=500 {
        for &x in legendre_points(n).unwrap().points() {
            let r = legendre_eval(n, x).0.abs();
            if r > worst_leg.0 {
                worst_leg = (r, n);
            }
        }
    }
    note(
        "Legendre root residuals",
        worst_leg.0 < 1e-13,
        format!("max |P_n(x_k)| = {:.2e} at n = {} (bound 1e-13)", worst_leg.0, worst_leg.1),
    );

    let t: Vec<f64> = (0..50).map(|k| k as f64).collect();
    let flat = Signal::new(t, vec![0.75; 50]).unwrap();
    let mut dc = true;
    for w in [1usize, 2, 5, 9] {
        let f = moving_average(&flat, w, FilterMode::Causal).unwrap();
        dc &= f.y()[w - 1..].iter().all(|&v| (v - 0.75).abs() < 1e-15);
    }
    note("filter DC gain", dc, "steady state differs from input".into());

    let clean = gamma_variate(&GammaParams::standard(), &even_grid(3.0 * std::f64::consts::PI, 300)).unwrap();
    let wins = (0..20)
        .filter(|&s| {
            let noisy = add_noise(&clean, 0.02, RngSeed(s)).unwrap();
            let f = moving_average(&noisy, 5, FilterMode::Causal).unwrap();
            rms_deviation(f.y(), clean.y()) < rms_deviation(noisy.y(), clean.y())
        })
        .count();
    note("moving-average RMS improvement", wins >= 18, format!("{wins}/20 seeds"));

    let mut worst_grid = 0.0f64;
    for (basis, d) in [
        (Basis::Chebyshev, Domain::UNIT),
        (Basis::Monomial, Domain::UNIT),
        (Basis::Monomial, Domain::new(0.0, 1.0).unwrap()),
    ] {
        let a = conditioning_sweep(basis, d, 10, 512).unwrap();
        let b = conditioning_sweep(basis, d, 10, 1024).unwrap();
        worst_grid = worst_grid.max(a.iter().zip(&b).map(|(x, y)| ((x - y) / y).abs()).fold(0.0, f64::max));
    }
    note("condition grid refinement", worst_grid < 1e-3, format!("{worst_grid:.2e}"));

    let passed = failures.is_empty();
    let detail = if passed {
        format!(
            "round trip {worst_rt:.1e}, cardinal {worst_card:.1e}, Parseval {worst_parseval:.1e}, FD {worst_fd:.1e}, \
             Legendre {:.1e}, RMS {wins}/20, grid {worst_grid:.1e}",
            worst_leg.0
        )
    } else {
        failures.join("; ")
    };
    outcome(passed, detail)
}

fn csv_files(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    for exp in std::fs::read_dir(dir).unwrap() {
        let exp = exp.unwrap().path();
        for f in std::fs::read_dir(&exp).unwrap() {
            let f = f.unwrap().path();
            if f.extension().is_some_and(|e| e == "csv") {
                let key = f.strip_prefix(dir).unwrap().display().to_string();
                out.insert(key, std::fs::read(&f).unwrap());
            }
        }
    }
    out
}

fn determinism() -> Outcome {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [a.path(), b.path()] {
        let status = Command::new(env!("CARGO_BIN_EXE_chebsig"))
            .args(["run-all", "--seed", "42", "--out"])
            .arg(dir)
            .output()
            .unwrap();
        if !status.status.success() {
            return outcome(false, format!("run-all failed: {}", String::from_utf8_lossy(&status.stderr)));
        }
    }
    let (fa, fb) = (csv_files(a.path()), csv_files(b.path()));
    let differing: Vec<&String> = fa.iter().filter(|(k, v)| fb.get(*k) != Some(v)).map(|(k, _)| k).collect();
    outcome(
        !fa.is_empty() && fa.len() == fb.len() && differing.is_empty(),
        format!("{} CSV files compared, {} differ", fa.len(), differing.len()),
    )
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "arctan Chebyshev coefficients", s(1), arctan_coefficients),
        criterion(2, "degree-9 second-kind nodes", s(1), degree_nine_nodes),
        criterion(3, "first-kind Chebyshev vs Legendre, 100 points", s(1), legendre_comparison),
        criterion(4, "basis conditioning", s(5), conditioning),
        criterion(5, "convergence threshold and rates", s(30), convergence),
        criterion(6, "gamma reconstruction on even nodes", s(2), gamma_even),
        criterion(7, "uneven nodes", s(2), gamma_uneven),
        criterion(8, "property suites", s(120), property_suites),
        criterion(9, "run-all determinism", s(120), determinism),
    ];
    let failed = results.iter().filter(|p| !**p).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

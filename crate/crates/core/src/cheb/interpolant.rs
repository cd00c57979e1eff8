use serde::{Deserialize, Serialize};

use super::chop::plateau_cutoff;
use super::nodes::{cheb_points_second_kind, second_kind_unit};
use super::transform::{coeffs_to_values, values_to_coeffs};
use crate::domain::{Domain, NodeKind, NodeSet};
use crate::error::{Error, Result};

/// Default relative tolerance for adaptive construction and truncation.
pub const DEFAULT_TOL: f64 = f64::EPSILON;

/// Smallest and largest ladder exponents: the adaptive constructor samples
/// at `2^k + 1` points for `k` in this range.
pub const LADDER_MIN: u32 = 3;
pub const LADDER_MAX: u32 = 16;

/// A Chebyshev series `Σ a_k T_k(s)` on a domain, where `s` is the point
/// mapped onto `[-1, 1]`. Coefficients are stored in ascending degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChebInterpolant {
    coeffs: Vec<f64>,
    domain: Domain,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BuildMode {
    /// Sample at the `n + 1` second-kind points.
    Fixed(usize),
    /// Sample on the `2^k + 1` ladder until the coefficients hit a plateau.
    Adaptive,
}

impl ChebInterpolant {
    pub fn from_coeffs(coeffs: Vec<f64>, domain: Domain) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("coefficient vector is empty".into()));
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { coeffs, domain })
    }

    pub fn constant(c: f64, domain: Domain) -> Self {
        Self { coeffs: vec![c], domain }
    }

    /// Interpolant through `values` taken at the second-kind points of
    /// `domain` (ascending). Needs at least two values.
    pub fn from_values(values: &[f64], domain: Domain) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidArgument(
                "need at least 2 values (degree >= 1)".into(),
            ));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { coeffs: values_to_coeffs(values), domain })
    }

    pub fn from_function<F>(f: F, domain: Domain, mode: BuildMode) -> Result<Self>
    where
        F: Fn(f64) -> f64,
    {
        match mode {
            BuildMode::Fixed(n) => {
                let nodes = cheb_points_second_kind(n, domain)?;
                let values: Vec<f64> = nodes.points().iter().map(|&x| f(x)).collect();
                Self::from_values(&values, domain)
            }
            BuildMode::Adaptive => Self::adaptive(f, domain, DEFAULT_TOL),
        }
    }

    /// Adaptive construction with an explicit relative tolerance.
    pub fn adaptive<F>(f: F, domain: Domain, tol: f64) -> Result<Self>
    where
        F: Fn(f64) -> f64,
    {
        let mut last = None;
        for k in LADDER_MIN..=LADDER_MAX {
            let n = 1usize << k;
            let values: Vec<f64> = second_kind_unit(n)
                .into_iter()
                .map(|s| f(domain.from_unit(s)))
                .collect();
            let p = Self::from_values(&values, domain)?;
            if let Some(cut) = plateau_cutoff(&p.coeffs, tol) {
                if cut < p.coeffs.len() {
                    let mut coeffs = p.coeffs;
                    coeffs.truncate(cut);
                    return Ok(Self { coeffs, domain });
                }
            }
            last = Some(p);
        }
        let best = last.expect("ladder is non-empty");
        Err(Error::Unresolved { points: best.coeffs.len(), best: Box::new(best) })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Number of coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Clenshaw evaluation. Points outside the domain extrapolate.
    pub fn evaluate(&self, x: f64) -> f64 {
        clenshaw(&self.coeffs, self.domain.to_unit(x))
    }

    pub fn evaluate_many(&self, xs: &[f64]) -> Vec<f64> {
        xs.iter().map(|&x| self.evaluate(x)).collect()
    }

    /// The second-kind points this interpolant is defined by.
    pub fn nodes(&self) -> Result<NodeSet> {
        cheb_points_second_kind(self.degree().max(1), self.domain)
    }

    /// Values at the second-kind points, by inverse cosine transform.
    pub fn values_at_nodes(&self) -> Vec<f64> {
        if self.coeffs.len() == 1 {
            return vec![self.coeffs[0]; 2];
        }
        coeffs_to_values(&self.coeffs)
    }

    pub fn derivative(&self) -> Self {
        let n = self.degree();
        if n == 0 {
            return Self::constant(0.0, self.domain);
        }
        let a = &self.coeffs;
        let mut d = vec![0.0; n + 1];
        // d has a spare slot at index n so d[k + 1] is always valid
        for k in (1..=n).rev() {
            let next = if k < n { d[k + 1] } else { 0.0 };
            d[k - 1] = next + 2.0 * k as f64 * a[k];
        }
        d[0] *= 0.5;
        d.truncate(n);
        let scale = 2.0 / self.domain.length();
        for c in &mut d {
            *c *= scale;
        }
        Self { coeffs: d, domain: self.domain }
    }

    /// Drops trailing coefficients below `tol_rel · max|a_j|`, always keeping `a_0`.
    pub fn truncate(&self, tol_rel: f64) -> Self {
        let scale = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        let cutoff = tol_rel * scale;
        let mut keep = self.coeffs.len();
        while keep > 1 && self.coeffs[keep - 1].abs() < cutoff {
            keep -= 1;
        }
        Self { coeffs: self.coeffs[..keep].to_vec(), domain: self.domain }
    }

    /// Coefficient-wise sum of two series on the same domain.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.domain != other.domain {
            return Err(Error::InvalidArgument("cannot add series on different domains".into()));
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                self.coeffs.get(k).copied().unwrap_or(0.0) + other.coeffs.get(k).copied().unwrap_or(0.0)
            })
            .collect();
        Ok(Self { coeffs, domain: self.domain })
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
            domain: self.domain,
        }
    }

    /// Global minimum and maximum over the domain.
    ///
    /// Sign changes of `p'` are located on a uniform grid of `8·degree + 16`
    /// points and each bracket is bisected down to `1e-13` (relative to the
    /// half-length of the domain). Brackets whose endpoint values cannot
    /// compete with the best candidate found so far are skipped.
    pub fn min_and_max(&self) -> (f64, f64) {
        let n = self.degree();
        if n == 0 {
            return (self.coeffs[0], self.coeffs[0]);
        }
        let dp = self.derivative();
        let m = 8 * n + 16;
        let (a, b) = (self.domain.a(), self.domain.b());
        let h = (b - a) / (m - 1) as f64;
        let grid: Vec<f64> = (0..m)
            .map(|i| if i == m - 1 { b } else { a + i as f64 * h })
            .collect();
        let slope: Vec<f64> = grid.iter().map(|&x| dp.evaluate(x)).collect();
        let value: Vec<f64> = grid.iter().map(|&x| self.evaluate(x)).collect();

        let mut lo = value.iter().copied().fold(f64::INFINITY, f64::min);
        let mut hi = value.iter().copied().fold(f64::NEG_INFINITY, f64::max);

        struct Bracket {
            left: f64,
            right: f64,
            dl: f64,
            best_val: f64,
            worst_val: f64,
            slack: f64,
        }
        let mut brackets: Vec<Bracket> = Vec::new();
        for i in 0..m - 1 {
            let (d0, d1) = (slope[i], slope[i + 1]);
            if d0 == 0.0 || d0.signum() != d1.signum() {
                brackets.push(Bracket {
                    left: grid[i],
                    right: grid[i + 1],
                    dl: d0,
                    best_val: value[i].max(value[i + 1]),
                    worst_val: value[i].min(value[i + 1]),
                    slack: 2.0 * (grid[i + 1] - grid[i]) * d0.abs().max(d1.abs()),
                });
            }
        }

        let tol = 1e-13 * (0.5 * (b - a)).max(1.0);
        let refine = |br: &Bracket| -> f64 {
            let (mut l, mut r) = (br.left, br.right);
            let mut dl = br.dl;
            if dl == 0.0 {
                return l;
            }
            while r - l > tol {
                let mid = 0.5 * (l + r);
                if mid <= l || mid >= r {
                    break;
                }
                let dm = dp.evaluate(mid);
                if dm == 0.0 {
                    return mid;
                }
                if dm.signum() == dl.signum() {
                    l = mid;
                    dl = dm;
                } else {
                    r = mid;
                }
            }
            0.5 * (l + r)
        };

        brackets.sort_by(|x, y| y.best_val.total_cmp(&x.best_val));
        for br in &brackets {
            if br.best_val + br.slack < hi {
                break;
            }
            let v = self.evaluate(refine(br));
            hi = hi.max(v);
        }
        brackets.sort_by(|x, y| x.worst_val.total_cmp(&y.worst_val));
        for br in &brackets {
            if br.worst_val - br.slack > lo {
                break;
            }
            let v = self.evaluate(refine(br));
            lo = lo.min(v);
        }
        (lo, hi)
    }
}

/// Clenshaw recurrence for `Σ a_k T_k(s)`.
pub fn clenshaw(coeffs: &[f64], s: f64) -> f64 {
    let n = coeffs.len();
    if n == 1 {
        return coeffs[0];
    }
    let two_s = 2.0 * s;
    let (mut b1, mut b2) = (0.0, 0.0);
    for &a in coeffs[1..].iter().rev() {
        let b0 = a + two_s * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    coeffs[0] + s * b1 - b2
}

/// Barycentric evaluation of the interpolant through `values` at the
/// second-kind `nodes`. Returns `values[j]` exactly when `x == nodes[j]`.
pub fn evaluate_barycentric(values: &[f64], nodes: &NodeSet, x: f64) -> Result<f64> {
    if nodes.kind() != NodeKind::ChebSecond {
        return Err(Error::InvalidArgument(
            "barycentric weights assume second-kind Chebyshev points".into(),
        ));
    }
    if values.len() != nodes.len() {
        return Err(Error::LengthMismatch { expected: nodes.len(), got: values.len() });
    }
    let pts = nodes.points();
    let last = pts.len() - 1;
    let mut num = 0.0;
    let mut den = 0.0;
    for (j, (&xj, &vj)) in pts.iter().zip(values).enumerate() {
        let diff = x - xj;
        if diff == 0.0 {
            return Ok(vj);
        }
        let mut w = if j % 2 == 0 { 1.0 } else { -1.0 };
        if j == 0 || j == last {
            w *= 0.5;
        }
        let t = w / diff;
        num += t * vj;
        den += t;
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::nodes::eval_cheb_poly;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const EPS: f64 = f64::EPSILON;

    fn unit() -> Domain {
        Domain::UNIT
    }

    #[test]
    fn arctan_listing_coefficients() {
        let p = ChebInterpolant::from_function(f64::atan, unit(), BuildMode::Adaptive).unwrap();
        let a = p.coeffs();
        assert!((a[1] - 0.828427124746190).abs() < 1e-12);
        assert!((a[3] + 0.047378541243650).abs() < 1e-12);
        assert!((a[5] - 0.004877323527903).abs() < 1e-12);
    }

    #[test]
    fn arctan_matches_closed_form() {
        // a_{2k+1} = 2(-1)^k (√2-1)^{2k+1} / (2k+1)
        let p = ChebInterpolant::from_function(f64::atan, unit(), BuildMode::Adaptive).unwrap();
        let r = std::f64::consts::SQRT_2 - 1.0;
        for (k, a) in p.coeffs().iter().enumerate() {
            if k % 2 == 0 {
                assert!(a.abs() < 1e-15, "a_{k} = {a:e}");
            } else {
                let m = (k - 1) / 2;
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let want = 2.0 * sign * r.powi(k as i32) / k as f64;
                assert!((a - want).abs() < 1e-15, "a_{k}: {a:e} vs {want:e}");
            }
        }
    }

    #[test]
    fn constant_function_has_length_one() {
        let p = ChebInterpolant::from_function(|_| 1.0, unit(), BuildMode::Adaptive).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeffs()[0], 1.0);
    }

    #[test]
    fn adaptive_arctan_evaluates_accurately() {
        let p = ChebInterpolant::from_function(f64::atan, unit(), BuildMode::Adaptive).unwrap();
        assert!((p.evaluate(0.7) - 0.7f64.atan()).abs() < 1e-14);
    }

    #[test]
    fn unresolved_reports_best_effort() {
        // a jump cannot be resolved by a polynomial
        let err = ChebInterpolant::from_function(|x| if x < 0.1 { 0.0 } else { 1.0 }, unit(), BuildMode::Adaptive)
            .unwrap_err();
        match err {
            Error::Unresolved { points, best } => {
                assert_eq!(points, (1 << LADDER_MAX) + 1);
                assert_eq!(best.len(), points);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn from_values_constant_and_identity() {
        let p = ChebInterpolant::from_values(&[3.0; 5], unit()).unwrap();
        assert!((p.coeffs()[0] - 3.0).abs() < 1e-15);
        assert!(p.coeffs()[1..].iter().all(|c| c.abs() < 1e-15));

        let x = cheb_points_second_kind(6, unit()).unwrap();
        let p = ChebInterpolant::from_values(x.points(), unit()).unwrap();
        assert!((p.coeffs()[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn from_values_rejects_bad_input() {
        assert!(ChebInterpolant::from_values(&[1.0], unit()).is_err());
        assert_eq!(
            ChebInterpolant::from_values(&[1.0, f64::NAN], unit()),
            Err(Error::NonFinite(1))
        );
    }

    #[test]
    fn constant_evaluates_anywhere() {
        let p = ChebInterpolant::constant(4.25, unit());
        assert_eq!(p.evaluate(-0.3), 4.25);
        assert_eq!(p.evaluate(7.0), 4.25);
    }

    #[test]
    fn clenshaw_reproduces_nodes_small_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=16 {
            let d = Domain::new(-2.0, 5.0).unwrap();
            let v: Vec<f64> = (0..=n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let p = ChebInterpolant::from_values(&v, d).unwrap();
            let nodes = cheb_points_second_kind(n, d).unwrap();
            let vmax = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            for (x, want) in nodes.points().iter().zip(&v) {
                assert!((p.evaluate(*x) - want).abs() <= 50.0 * EPS * vmax);
            }
        }
    }

    #[test]
    fn values_at_nodes_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let v: Vec<f64> = (0..=4096).map(|_| rng.random_range(-1.0..1.0)).collect();
        let p = ChebInterpolant::from_values(&v, unit()).unwrap();
        let back = p.values_at_nodes();
        let err = v.iter().zip(&back).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        assert!(err <= 50.0 * EPS);
    }

    #[test]
    fn barycentric_exact_at_nodes() {
        let nodes = cheb_points_second_kind(9, unit()).unwrap();
        let v: Vec<f64> = (0..10).map(|i| (i as f64).sin()).collect();
        for (j, &x) in nodes.points().iter().enumerate() {
            assert_eq!(evaluate_barycentric(&v, &nodes, x).unwrap(), v[j]);
        }
    }

    #[test]
    fn barycentric_linear_reproduction() {
        let nodes = cheb_points_second_kind(9, unit()).unwrap();
        let v = nodes.points().to_vec();
        let y = evaluate_barycentric(&v, &nodes, 0.33).unwrap();
        assert!((y - 0.33).abs() < 1e-14);
    }

    #[test]
    fn barycentric_rejects_mismatch() {
        let nodes = cheb_points_second_kind(4, unit()).unwrap();
        assert!(matches!(
            evaluate_barycentric(&[1.0, 2.0], &nodes, 0.0),
            Err(Error::LengthMismatch { .. })
        ));
        let first = crate::cheb::cheb_points_first_kind(2, unit()).unwrap();
        assert!(evaluate_barycentric(&[1.0, 2.0], &first, 0.0).is_err());
    }

    #[test]
    fn barycentric_agrees_with_clenshaw_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let d = unit();
        let nodes = cheb_points_second_kind(49, d).unwrap();
        let v: Vec<f64> = (0..50).map(|_| rng.random_range(-1.0..1.0)).collect();
        let p = ChebInterpolant::from_values(&v, d).unwrap();
        for _ in 0..100 {
            let x = rng.random_range(-1.0..1.0);
            let a = evaluate_barycentric(&v, &nodes, x).unwrap();
            let b = p.evaluate(x);
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0), "x = {x}");
        }
    }

    #[test]
    fn barycentric_agrees_with_clenshaw_smooth_large_degree() {
        let d = Domain::new(0.0, 4.0).unwrap();
        let f = |x: f64| (3.0 * x).sin() + x.exp() / 10.0;
        let nodes = cheb_points_second_kind(1000, d).unwrap();
        let v: Vec<f64> = nodes.points().iter().map(|&x| f(x)).collect();
        let p = ChebInterpolant::from_values(&v, d).unwrap();
        for i in 0..97 {
            let x = 0.0413 * i as f64;
            let a = evaluate_barycentric(&v, &nodes, x).unwrap();
            assert!((a - p.evaluate(x)).abs() <= 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn derivative_of_basis_polynomials() {
        let t1 = ChebInterpolant::from_coeffs(vec![0.0, 1.0], unit()).unwrap();
        assert_eq!(t1.derivative().coeffs(), &[1.0]);
        let t2 = ChebInterpolant::from_coeffs(vec![0.0, 0.0, 1.0], unit()).unwrap();
        assert_eq!(t2.derivative().coeffs(), &[0.0, 4.0]);
        let c = ChebInterpolant::constant(3.0, unit());
        assert_eq!(c.derivative().coeffs(), &[0.0]);
    }

    #[test]
    fn derivative_respects_domain_scale() {
        let d = Domain::new(0.0, 6.0).unwrap();
        let p = ChebInterpolant::from_function(|x| x * x, d, BuildMode::Fixed(4)).unwrap();
        assert!((p.derivative().evaluate(2.5) - 5.0).abs() < 1e-13);
    }

    #[test]
    fn derivative_of_exp() {
        let p = ChebInterpolant::from_function(f64::exp, unit(), BuildMode::Adaptive).unwrap();
        let dp = p.derivative();
        let x: f64 = 0.5;
        assert!((dp.evaluate(x) - x.exp()).abs() < 1e-10);
        let h = 1e-6;
        let fd = (p.evaluate(x + h) - p.evaluate(x - h)) / (2.0 * h);
        assert!((dp.evaluate(x) - fd).abs() < 1e-7);
    }

    #[test]
    fn min_max_known_cases() {
        let t2 = ChebInterpolant::from_coeffs(vec![0.0, 0.0, 1.0], unit()).unwrap();
        let (lo, hi) = t2.min_and_max();
        assert!((lo + 1.0).abs() < 1e-15 && (hi - 1.0).abs() < 1e-15);
        let c = ChebInterpolant::constant(5.0, unit());
        assert_eq!(c.min_and_max(), (5.0, 5.0));
    }

    #[test]
    fn min_max_interior_extremum() {
        // x - x³ = T_1/4 - T_3/4, extrema ±2/(3√3) at ±1/√3
        let p = ChebInterpolant::from_coeffs(vec![0.0, 0.25, 0.0, -0.25], unit()).unwrap();
        let (lo, hi) = p.min_and_max();
        let want = 2.0 / (3.0 * 3f64.sqrt());
        assert!((hi - want).abs() < 1e-14);
        assert!((lo + want).abs() < 1e-14);
    }

    #[test]
    fn min_max_random_data_dense_grid() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let v: Vec<f64> = (0..10).map(|_| rng.random_range(-1.0..1.0)).collect();
        let p = ChebInterpolant::from_values(&v, unit()).unwrap();
        let (lo, hi) = p.min_and_max();
        let m = 1_000_000;
        let (mut glo, mut ghi) = (f64::INFINITY, f64::NEG_INFINITY);
        for i in 0..m {
            let y = p.evaluate(-1.0 + 2.0 * i as f64 / (m - 1) as f64);
            glo = glo.min(y);
            ghi = ghi.max(y);
        }
        assert!((lo - glo).abs() < 1e-8 && lo <= glo + 1e-15);
        assert!((hi - ghi).abs() < 1e-8 && hi >= ghi - 1e-15);
    }

    #[test]
    fn truncate_cases() {
        let p = ChebInterpolant::from_coeffs(vec![1.0, 1e-20, 1e-20], unit()).unwrap();
        assert_eq!(p.truncate(1e-15).coeffs(), &[1.0]);
        let q = ChebInterpolant::from_coeffs(vec![0.0, 1.0], unit()).unwrap();
        assert_eq!(q.truncate(1e-15).coeffs(), &[0.0, 1.0]);
        let z = ChebInterpolant::from_coeffs(vec![0.0, 0.0], unit()).unwrap();
        assert_eq!(z.truncate(1e-15).len(), 2);
    }

    #[test]
    fn tanh_sum_shrinks_under_truncation() {
        let d = unit();
        let f = ChebInterpolant::from_function(f64::tanh, d, BuildMode::Adaptive).unwrap();
        let g = ChebInterpolant::from_function(|x| 1e-5 * (10.0 * x).tanh(), d, BuildMode::Adaptive).unwrap();
        let h = ChebInterpolant::from_function(|x| 1e-10 * (100.0 * x).tanh(), d, BuildMode::Adaptive).unwrap();
        let s = f.add(&g).unwrap().add(&h).unwrap();
        let t = s.truncate(DEFAULT_TOL);
        assert!(t.len() < s.len(), "{} vs {}", t.len(), s.len());
    }

    proptest! {
        #[test]
        fn clenshaw_matches_trig_identity(k in 0usize..=100, x in -1.0f64..=1.0) {
            let mut c = vec![0.0; k + 1];
            c[k] = 1.0;
            let want = (k as f64 * x.acos()).cos();
            prop_assert!((clenshaw(&c, x) - want).abs() < 1e-12);
            prop_assert!((eval_cheb_poly(k, x) - want).abs() < 1e-12);
        }

        #[test]
        fn derivative_matches_finite_difference(x in -0.99f64..0.99) {
            let p = ChebInterpolant::from_function(f64::exp, Domain::UNIT, BuildMode::Adaptive).unwrap();
            let h = 1e-6;
            let fd = (p.evaluate(x + h) - p.evaluate(x - h)) / (2.0 * h);
            prop_assert!((p.derivative().evaluate(x) - fd).abs() < 1e-7);
        }
    }
}

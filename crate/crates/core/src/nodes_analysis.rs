//! Legendre points, node-set comparisons and the geometric-mean distance
//! profile used to contrast Chebyshev, Legendre and equispaced grids.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::domain::{Domain, NodeKind, NodeSet};
use crate::error::{Error, Result};

const NEWTON_MAX_ITER: usize = 100;
const NEWTON_TOL: f64 = 1e-15;

/// `(P_n(x), P_n'(x))` from the three-term recurrence.
pub fn legendre_eval(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    // derivative from P_n and P_{n-1}; the closed form is singular at ±1
    let dp = if x.abs() == 1.0 {
        let s = if x > 0.0 || n % 2 == 0 { 1.0 } else { -1.0 };
        s * (n * (n + 1)) as f64 / 2.0
    } else {
        n as f64 * (x * p1 - p0) / (x * x - 1.0)
    };
    (p1, dp)
}

/// Roots of the degree-`n` Legendre polynomial, ascending.
///
/// Newton's method from `cos(π(4k-1)/(4n+2))` on the non-negative half; the
/// negative half is the exact mirror image.
pub fn legendre_points(n: usize) -> Result<NodeSet> {
    if n == 0 {
        return Err(Error::InvalidArgument("Legendre points need n >= 1".into()));
    }
    let half = n / 2;
    let mut positive = Vec::with_capacity(half);
    for k in 1..=half {
        let mut x = (PI * (4 * k - 1) as f64 / (4 * n + 2) as f64).cos();
        let mut converged = false;
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = legendre_eval(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < NEWTON_TOL {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { degree: n, index: k });
        }
        positive.push(x);
    }
    // positive is descending; emit ascending
    let mut points: Vec<f64> = positive.iter().map(|x| -x).collect();
    if n % 2 == 1 {
        points.push(0.0);
    }
    points.extend(positive.iter().rev());
    Ok(NodeSet::from_sorted_unchecked(NodeKind::Legendre, points, Domain::UNIT))
}

/// Largest pointwise gap between two equally sized node sets, after sorting.
pub fn compare_nodes(a: &NodeSet, b: &NodeSet) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    let mut xs = a.points().to_vec();
    let mut ys = b.points().to_vec();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);
    Ok(xs.iter().zip(&ys).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceProfile {
    pub points: Vec<f64>,
    pub gm_distance: Vec<f64>,
}

impl DistanceProfile {
    /// Largest over smallest profile value.
    pub fn flatness(&self) -> f64 {
        let hi = self.gm_distance.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = self.gm_distance.iter().copied().fold(f64::INFINITY, f64::min);
        hi / lo
    }

    pub fn mean(&self) -> f64 {
        self.gm_distance.iter().sum::<f64>() / self.gm_distance.len() as f64
    }
}

/// For each point, the geometric mean of its distances to the other points.
///
/// Computed as `exp(mean(log|x_j - x_i|))` over `i != j`.
pub fn mean_distance(points: &[f64]) -> Result<DistanceProfile> {
    if points.len() < 2 {
        return Err(Error::InvalidArgument("need at least 2 points".into()));
    }
    if let Some(i) = points.iter().position(|p| !p.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let m = (points.len() - 1) as f64;
    let mut gm = Vec::with_capacity(points.len());
    for (j, &xj) in points.iter().enumerate() {
        let mut log_sum = 0.0;
        for (i, &xi) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = (xj - xi).abs();
            if d == 0.0 {
                return Err(Error::DuplicatePoint(xj));
            }
            log_sum += d.ln();
        }
        gm.push((log_sum / m).exp());
    }
    Ok(DistanceProfile { points: points.to_vec(), gm_distance: gm })
}

/// Search cap for [`smallest_nonzero_midpoint`].
pub const MIDPOINT_SEARCH_CAP: usize = 1_000_000;

/// Smallest even `n >= 2` for which the middle second-kind point, evaluated
/// literally as `cos((n/2)·π / n)` in binary64, is not exactly zero.
pub fn smallest_nonzero_midpoint() -> Result<usize> {
    let mut n = 2;
    while n <= MIDPOINT_SEARCH_CAP {
        if midpoint_value(n) != 0.0 {
            return Ok(n);
        }
        n += 2;
    }
    Err(Error::SearchCap(MIDPOINT_SEARCH_CAP))
}

/// `cos((j·π)/n)` with `j = n/2`, rounding exactly as the loop does.
pub fn midpoint_value(n: usize) -> f64 {
    let j = (n / 2) as f64;
    (j * PI / n as f64).cos()
}

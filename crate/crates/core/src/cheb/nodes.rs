use std::f64::consts::PI;

use crate::domain::{Domain, NodeKind, NodeSet};
use crate::error::{Error, Result};

/// `sin(π m / (2d))` for integer `m` with `|m| ≤ d`, computed on the
/// non-negative half only so that `m` and `-m` give exact negatives.
fn half_sin(m: i64, d: i64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    if m == d {
        return 1.0;
    }
    if m == -d {
        return -1.0;
    }
    let s = (PI * m.unsigned_abs() as f64 / (2 * d) as f64).sin();
    if m < 0 {
        -s
    } else {
        s
    }
}

/// Chebyshev points of the second kind, `cos(jπ/n)` for `j = 0..=n`,
/// returned in ascending order and mapped onto `domain`.
///
/// The points are evaluated through the equivalent `sin(π(2j-n)/(2n))`,
/// which keeps full relative accuracy near the origin and makes the set
/// bit-exactly symmetric on `[-1, 1]`.
pub fn cheb_points_second_kind(n: usize, domain: Domain) -> Result<NodeSet> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "second-kind points need degree n >= 1".into(),
        ));
    }
    let unit = second_kind_unit(n);
    let points = unit.iter().map(|&s| domain.from_unit(s)).collect();
    Ok(NodeSet::from_sorted_unchecked(NodeKind::ChebSecond, points, domain))
}

pub(crate) fn second_kind_unit(n: usize) -> Vec<f64> {
    let d = n as i64;
    (0..=d).map(|j| half_sin(2 * j - d, d)).collect()
}

/// Chebyshev points of the first kind, `cos((2j+1)π/(2·count))`, ascending.
/// All points lie strictly inside the domain.
pub fn cheb_points_first_kind(count: usize, domain: Domain) -> Result<NodeSet> {
    if count == 0 {
        return Err(Error::InvalidArgument(
            "first-kind points need count >= 1".into(),
        ));
    }
    let unit = first_kind_unit(count);
    let points = unit.iter().map(|&s| domain.from_unit(s)).collect();
    Ok(NodeSet::from_sorted_unchecked(NodeKind::ChebFirst, points, domain))
}

fn first_kind_unit(count: usize) -> Vec<f64> {
    let d = count as i64;
    (0..d).map(|j| half_sin(2 * j + 1 - d, d)).collect()
}

/// Extrema of `T_n` on `[-1, 1]`: `cos(kπ/n)`, `k = 0..=n`, in that
/// (descending) order.
pub fn cheb_extrema_nodes(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    let mut pts = second_kind_unit(n);
    pts.reverse();
    Ok(pts)
}

/// Roots of `T_n`: `cos((2k+1)π/(2n))`, `k = 0..n`, ascending.
/// Identical to the first-kind points on `[-1, 1]`.
pub fn cheb_root_nodes(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    Ok(first_kind_unit(n))
}

/// `T_k(x)` by the three-term recurrence. Arguments outside `[-1, 1]` are
/// accepted and extrapolate the polynomial.
pub fn eval_cheb_poly(k: usize, x: f64) -> f64 {
    match k {
        0 => 1.0,
        1 => x,
        _ => {
            let (mut prev, mut cur) = (1.0, x);
            for _ in 1..k {
                let next = 2.0 * x * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

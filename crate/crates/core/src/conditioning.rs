//! Conditioning of polynomial bases in the continuous L² sense.
//!
//! A basis `{φ_0, …, φ_n}` on `[a, b]` is sampled at second-kind Chebyshev
//! points and each row is scaled by the square root of its Clenshaw–Curtis
//! weight. For polynomial columns the Gram matrix of the result equals the
//! continuous one exactly as long as `2n` stays below the grid degree, so the
//! singular values match those of the continuous quasimatrix.

use serde::{Deserialize, Serialize};

use crate::cheb::{cheb_points_second_kind, eval_cheb_poly};
use crate::domain::Domain;
use crate::error::{Error, Result};

pub const DEFAULT_GRID: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    Chebyshev,
    Monomial,
}

/// Clenshaw–Curtis weights for the `count` second-kind points of `domain`.
pub fn clenshaw_curtis_weights(count: usize, domain: Domain) -> Result<Vec<f64>> {
    if count < 2 {
        return Err(Error::InvalidArgument("Clenshaw-Curtis needs at least 2 points".into()));
    }
    let n = count - 1;
    let nf = n as f64;
    let mut w = vec![0.0; count];
    if n == 1 {
        w[0] = 1.0;
        w[1] = 1.0;
    } else {
        let theta: Vec<f64> = (0..=n).map(|k| std::f64::consts::PI * k as f64 / nf).collect();
        let mut v = vec![1.0; n - 1];
        if n % 2 == 0 {
            w[0] = 1.0 / (nf * nf - 1.0);
            w[n] = w[0];
            for k in 1..n / 2 {
                let kf = k as f64;
                for (i, vi) in v.iter_mut().enumerate() {
                    *vi -= 2.0 * (2.0 * kf * theta[i + 1]).cos() / (4.0 * kf * kf - 1.0);
                }
            }
            for (i, vi) in v.iter_mut().enumerate() {
                *vi -= (nf * theta[i + 1]).cos() / (nf * nf - 1.0);
            }
        } else {
            w[0] = 1.0 / (nf * nf);
            w[n] = w[0];
            for k in 1..=(n - 1) / 2 {
                let kf = k as f64;
                for (i, vi) in v.iter_mut().enumerate() {
                    *vi -= 2.0 * (2.0 * kf * theta[i + 1]).cos() / (4.0 * kf * kf - 1.0);
                }
            }
        }
        for (i, vi) in v.iter().enumerate() {
            w[i + 1] = 2.0 * vi / nf;
        }
    }
    let half = 0.5 * domain.length();
    for wi in &mut w {
        *wi *= half;
    }
    Ok(w)
}

/// Weighted sample matrix of a polynomial basis, stored column-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisMatrix {
    pub basis: Basis,
    pub domain: Domain,
    pub max_degree: usize,
    pub grid_size: usize,
    columns: Vec<Vec<f64>>,
}

impl BasisMatrix {
    pub fn rows(&self) -> usize {
        self.grid_size
    }

    pub fn cols(&self) -> usize {
        self.max_degree + 1
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.columns[j][i]
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        for col in &mut out.columns {
            for v in col {
                *v *= factor;
            }
        }
        out
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.columns.iter().flatten().map(|v| v * v).sum()
    }
}

pub fn build_basis_matrix(
    basis: Basis,
    domain: Domain,
    max_degree: usize,
    grid_size: usize,
) -> Result<BasisMatrix> {
    if grid_size < 4 * (max_degree + 1) {
        return Err(Error::InvalidArgument(format!(
            "grid of {grid_size} points too coarse for degree {max_degree} (need >= {})",
            4 * (max_degree + 1)
        )));
    }
    let nodes = cheb_points_second_kind(grid_size - 1, domain)?;
    let sqrt_w: Vec<f64> = clenshaw_curtis_weights(grid_size, domain)?
        .into_iter()
        .map(f64::sqrt)
        .collect();
    let columns = (0..=max_degree)
        .map(|j| {
            nodes
                .points()
                .iter()
                .zip(&sqrt_w)
                .map(|(&x, &sw)| {
                    let phi = match basis {
                        Basis::Chebyshev => eval_cheb_poly(j, domain.to_unit(x)),
                        Basis::Monomial => x.powi(j as i32),
                    };
                    sw * phi
                })
                .collect()
        })
        .collect();
    Ok(BasisMatrix { basis, domain, max_degree, grid_size, columns })
}

const JACOBI_MAX_SWEEPS: usize = 60;

/// Singular values of a column-major matrix by one-sided (Hestenes) Jacobi
/// rotations, in descending order.
pub fn jacobi_singular_values(columns: &[Vec<f64>]) -> Vec<f64> {
    let mut a: Vec<Vec<f64>> = columns.to_vec();
    let n = a.len();
    let tol = f64::EPSILON;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let (alpha, beta, gamma) = {
                    let (cp, cq) = (&a[p], &a[q]);
                    let mut al = 0.0;
                    let mut be = 0.0;
                    let mut ga = 0.0;
                    for (x, y) in cp.iter().zip(cq) {
                        al += x * x;
                        be += y * y;
                        ga += x * y;
                    }
                    (al, be, ga)
                };
                if gamma == 0.0 || gamma.abs() <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = a.split_at_mut(q);
                let cp = &mut left[p];
                let cq = &mut right[0];
                for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
                    let xp = *x;
                    let yq = *y;
                    *x = c * xp - s * yq;
                    *y = s * xp + c * yq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = a.iter().map(|c| c.iter().map(|v| v * v).sum::<f64>().sqrt()).collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    sv
}

pub fn singular_values(m: &BasisMatrix) -> Vec<f64> {
    jacobi_singular_values(&m.columns)
}

/// Ratio of the extreme singular values from a descending list.
pub fn condition_from_singular_values(sv: &[f64]) -> Result<f64> {
    let hi = sv[0];
    let lo = *sv.last().expect("non-empty");
    if !(lo > 1e3 * f64::EPSILON * hi) {
        return Err(Error::NumericallySingular { ratio: lo / hi });
    }
    Ok(hi / lo)
}

pub fn condition_number(m: &BasisMatrix) -> Result<f64> {
    condition_from_singular_values(&singular_values(m))
}

/// Condition numbers of the bases truncated at degree `0..=n_max`.
pub fn conditioning_sweep(basis: Basis, domain: Domain, n_max: usize, grid_size: usize) -> Result<Vec<f64>> {
    (0..=n_max)
        .map(|n| condition_number(&build_basis_matrix(basis, domain, n, grid_size)?))
        .collect()
}

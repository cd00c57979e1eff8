//! Chebyshev interpolation kernel: node families, the values/coefficients
//! transform, evaluation, calculus and truncation.

mod chop;
mod interpolant;
mod nodes;
mod transform;

pub use chop::plateau_cutoff;
pub use interpolant::{
    clenshaw, evaluate_barycentric, BuildMode, ChebInterpolant, DEFAULT_TOL, LADDER_MAX, LADDER_MIN,
};
pub use nodes::{
    cheb_extrema_nodes, cheb_points_first_kind, cheb_points_second_kind, cheb_root_nodes,
    eval_cheb_poly,
};
pub use transform::{coeffs_to_values, values_to_coeffs};

//! Chebyshev and trigonometric interpolation with the signal utilities used
//! to compare them on sampled gamma-variate curves.

pub mod cheb;
pub mod conditioning;
pub mod domain;
pub mod error;
pub mod fft;
pub mod fourier;
pub mod io;
pub mod nodes_analysis;
pub mod signal;

pub use cheb::{BuildMode, ChebInterpolant};
pub use domain::{Domain, NodeKind, NodeSet};
pub use error::{Error, Result};

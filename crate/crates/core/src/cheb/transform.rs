//! Type-I discrete cosine transform between values at second-kind points
//! and Chebyshev coefficients, carried out as a length-`2n` FFT of the even
//! extension.
//!
//! Values are ordered ascending in `x` (the first value sits at `x = -1`).

use num_complex::Complex64;

use crate::fft::dft_forward;

/// Coefficients `a_0..=a_n` of the degree-`n` interpolant through `values`
/// (length `n + 1 >= 2`) at the second-kind points.
pub fn values_to_coeffs(values: &[f64]) -> Vec<f64> {
    let n = values.len() - 1;
    debug_assert!(n >= 1);
    // descending-x order: v_j sits at cos(jπ/n)
    let mut ext: Vec<Complex64> = Vec::with_capacity(2 * n);
    ext.extend(values.iter().rev().map(|&v| Complex64::new(v, 0.0)));
    ext.extend(values[1..n].iter().map(|&v| Complex64::new(v, 0.0)));
    let spec = dft_forward(&ext);
    let scale = 1.0 / n as f64;
    let mut coeffs: Vec<f64> = spec[..=n].iter().map(|z| z.re * scale).collect();
    coeffs[0] *= 0.5;
    coeffs[n] *= 0.5;
    coeffs
}

/// Values at the `n + 1` second-kind points (ascending) of the series with
/// coefficients `coeffs` (length `n + 1 >= 2`).
pub fn coeffs_to_values(coeffs: &[f64]) -> Vec<f64> {
    let n = coeffs.len() - 1;
    debug_assert!(n >= 1);
    let half: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .map(|(k, &a)| if k == 0 || k == n { a } else { 0.5 * a })
        .collect();
    let mut ext: Vec<Complex64> = Vec::with_capacity(2 * n);
    ext.extend(half.iter().map(|&v| Complex64::new(v, 0.0)));
    ext.extend(half[1..n].iter().rev().map(|&v| Complex64::new(v, 0.0)));
    let spec = dft_forward(&ext);
    let mut values: Vec<f64> = spec[..=n].iter().map(|z| z.re).collect();
    values.reverse();
    values
}

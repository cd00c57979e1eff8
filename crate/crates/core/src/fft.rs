//! Discrete Fourier transforms of arbitrary length.
//!
//! Power-of-two lengths run an iterative radix-2 Cooley–Tukey kernel. Any
//! other length goes through Bluestein's chirp-z identity, which re-expresses
//! the transform as a circular convolution of power-of-two length.
//!
//! Twiddle factors are computed per call; nothing is cached, so every
//! function here can be called from many threads at once.

use std::f64::consts::PI;

use num_complex::Complex64;

/// Unnormalized forward transform `X_k = Σ_j x_j e^{-2πi jk/N}`.
pub fn dft_forward(values: &[Complex64]) -> Vec<Complex64> {
    let mut out = values.to_vec();
    transform_in_place(&mut out, Direction::Forward);
    out
}

/// Inverse transform including the `1/N` factor, so that
/// `dft_inverse(&dft_forward(x)) == x` up to rounding.
pub fn dft_inverse(values: &[Complex64]) -> Vec<Complex64> {
    let mut out = values.to_vec();
    transform_in_place(&mut out, Direction::Inverse);
    let scale = 1.0 / out.len().max(1) as f64;
    for v in &mut out {
        *v *= scale;
    }
    out
}

/// Forward transform of a real sequence.
pub fn dft_forward_real(values: &[f64]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    transform_in_place(&mut buf, Direction::Forward);
    buf
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Forward => -1.0,
            Direction::Inverse => 1.0,
        }
    }
}

fn transform_in_place(data: &mut [Complex64], dir: Direction) {
    let n = data.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        radix2(data, dir);
    } else {
        bluestein(data, dir);
    }
}

/// `e^{sign·2πi k/n}` with the angle reduced so that the quarter-turn
/// values come out exact.
fn twiddle(k: usize, n: usize, sign: f64) -> Complex64 {
    let k = k % n;
    if 4 * k == n {
        return Complex64::new(0.0, sign);
    }
    if 2 * k == n {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * k == 3 * n {
        return Complex64::new(0.0, -sign);
    }
    let theta = 2.0 * PI * k as f64 / n as f64;
    Complex64::new(theta.cos(), sign * theta.sin())
}

fn radix2(data: &mut [Complex64], dir: Direction) {
    let n = data.len();
    let bits = n.trailing_zeros();

    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            data.swap(i, j);
        }
    }

    let sign = dir.sign();
    let table: Vec<Complex64> = (0..n / 2).map(|k| twiddle(k, n, sign)).collect();

    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = table[k * stride];
                let u = data[start + k];
                let v = data[start + k + half] * w;
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
        len <<= 1;
    }
}

fn bluestein(data: &mut [Complex64], dir: Direction) {
    let n = data.len();
    let m = (2 * n - 1).next_power_of_two();
    let sign = dir.sign();

    // chirp[k] = e^{sign·πi k²/n}; k² is reduced mod 2n in integer arithmetic
    // to keep the angle small.
    let two_n = 2 * n as u128;
    let chirp: Vec<Complex64> = (0..n)
        .map(|k| {
            let k2 = ((k as u128 * k as u128) % two_n) as f64;
            let theta = PI * k2 / n as f64;
            Complex64::new(theta.cos(), sign * theta.sin())
        })
        .collect();

    let mut a = vec![Complex64::new(0.0, 0.0); m];
    for k in 0..n {
        a[k] = data[k] * chirp[k];
    }
    let mut b = vec![Complex64::new(0.0, 0.0); m];
    b[0] = chirp[0].conj();
    for k in 1..n {
        let c = chirp[k].conj();
        b[k] = c;
        b[m - k] = c;
    }

    radix2(&mut a, Direction::Forward);
    radix2(&mut b, Direction::Forward);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= *y;
    }
    radix2(&mut a, Direction::Inverse);
    let scale = 1.0 / m as f64;
    for k in 0..n {
        data[k] = a[k] * chirp[k] * scale;
    }
}


#[cfg(test)]
mod tests {
    use super::oracle::direct_dft;
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    fn random_vec(n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect()
    }

    #[test]
    fn constant_goes_to_dc() {
        let out = dft_forward(&[c(1.0); 4]);
        assert_eq!(out[0], c(4.0));
        for v in &out[1..] {
            assert!(v.norm() < 1e-15);
        }
    }

    #[test]
    fn impulse_is_flat() {
        let out = dft_forward(&[c(1.0), c(0.0), c(0.0), c(0.0)]);
        for v in &out {
            assert!((v - c(1.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn length_twelve_matches_direct_sum() {
        let x = random_vec(12, 7);
        let fast = dft_forward(&x);
        let slow = direct_dft(&x);
        assert!(max_abs_diff(&fast, &slow) < 1e-12);
    }

    #[test]
    fn mixed_lengths_match_direct_sum() {
        for n in [1, 2, 3, 5, 7, 8, 15, 16, 31, 64, 100, 127] {
            let x = random_vec(n, n as u64);
            let err = max_abs_diff(&dft_forward(&x), &direct_dft(&x));
            assert!(err < 1e-12 * (n as f64).max(1.0), "n = {n}: {err}");
        }
    }

    #[test]
    fn round_trips() {
        for n in [2, 3, 4, 12, 31, 1000, 1024, 1 << 16] {
            let x = random_vec(n, 99);
            let back = dft_inverse(&dft_forward(&x));
            let scale = x.iter().map(|v| v.norm()).fold(0.0, f64::max);
            assert!(max_abs_diff(&x, &back) <= 1e-12 * scale, "n = {n}");
        }
    }
}

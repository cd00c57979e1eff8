//! Plateau-based truncation of Chebyshev coefficient sequences.
//!
//! Sampled coefficients decay until they hit a noise floor set by rounding in
//! the samples and the transform. A fixed "last two coefficients below tol"
//! test fires or misses at random on that floor, so instead the monotone
//! envelope of `|a_k|` is scanned for the point where it flattens out, and
//! the series is cut just before it.

/// Returns the number of coefficients to keep, or `None` when no plateau
/// below `tol` is visible yet (the sequence needs more samples).
///
/// Sequences shorter than 17 are never judged resolved.
pub fn plateau_cutoff(coeffs: &[f64], tol: f64) -> Option<usize> {
    let n = coeffs.len();
    if tol >= 1.0 {
        return Some(1);
    }
    if n < 17 {
        return None;
    }

    let mut envelope = vec![0.0; n];
    envelope[n - 1] = coeffs[n - 1].abs();
    for j in (0..n - 1).rev() {
        envelope[j] = coeffs[j].abs().max(envelope[j + 1]);
    }
    if envelope[0] == 0.0 {
        return Some(1);
    }
    let top = envelope[0];
    for e in &mut envelope {
        *e /= top;
    }

    // 1-based indices below follow the usual statement of this rule
    let env = |i: usize| envelope[i - 1];
    let mut plateau_point = 0;
    let mut j2 = 0;
    for j in 2..=n {
        j2 = (1.25 * j as f64 + 5.0).round() as usize;
        if j2 > n {
            return None;
        }
        let e1 = env(j);
        let e2 = env(j2);
        let r = 3.0 * (1.0 - e1.ln() / tol.ln());
        if e1 == 0.0 || e2 / e1 > r {
            plateau_point = j - 1;
            break;
        }
    }
    if plateau_point == 0 {
        return None;
    }

    if env(plateau_point) == 0.0 {
        return Some(plateau_point);
    }

    let floor = tol.powf(7.0 / 6.0);
    let j3 = envelope.iter().filter(|&&e| e >= floor).count();
    let mut tail = envelope.clone();
    if j3 < j2 {
        j2 = j3 + 1;
        tail[j2 - 1] = floor;
    }
    let slope = -(1.0 / 3.0) * tol.log10();
    let mut best = f64::INFINITY;
    let mut d = 1;
    for i in 1..=j2 {
        let ramp = if j2 > 1 { slope * (i - 1) as f64 / (j2 - 1) as f64 } else { 0.0 };
        let cc = tail[i - 1].log10() + ramp;
        if cc < best {
            best = cc;
            d = i;
        }
    }
    Some(d.saturating_sub(1).max(1))
}

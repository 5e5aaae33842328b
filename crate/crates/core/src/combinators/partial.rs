//! Truncated partial-fraction expansion of `Re U'/U` over the poles `1/4 + it_p` and zeros
//! `3/4 + it_p` of `U`, assuming every `t_p` is simple.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::complexfn::ComplexValue;
use crate::error::{Error, Result};

/// The truncated sum and an estimate of the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialFraction {
    /// Real part is the truncated sum; imaginary part is zero by construction.
    pub value: ComplexValue,
    /// Magnitude estimate of the terms `p > P`, which are all negative inside the strip.
    pub tail_estimate: f64,
}

/// Positive contribution of the real zero at `s = 0` and pole at `s = 1`.
pub fn first_term(sigma: f64, t: f64) -> f64 {
    let t2 = t * t;
    (sigma * (1.0 - sigma) + t2) / ((sigma * sigma + t2) * ((1.0 - sigma).powi(2) + t2))
}

/// Contribution of the conjugate pair of zero/pole couples at ordinate `±t_p`.
pub fn pair_term(sigma: f64, t: f64, t_p: f64) -> f64 {
    let a = sigma - 0.25;
    let c = sigma - 0.75;
    let one = |b: f64| {
        let b2 = b * b;
        (a * c - b2) / ((a * a + b2) * (c * c + b2))
    };
    0.5 * (one(t - t_p) + one(t + t_p))
}

/// `Re U'/U` at `s` from the first `p` ordinates (all multiplicities one).
///
/// The tail uses the ordinate density `(1/π) log τ` and the leading `-1/(τ∓t)²` behaviour of
/// the omitted terms, integrated in closed form from the last included ordinate.
pub fn partialfrac_logderiv(s: ComplexValue, pole_ordinates: &[f64], p: usize) -> PartialFraction {
    let (sigma, t) = (s.re, s.im);
    let used = &pole_ordinates[..p.min(pole_ordinates.len())];
    let mut sum = first_term(sigma, t);
    for &tp in used {
        sum += pair_term(sigma, t, tp);
    }
    let tail_estimate = match used.last() {
        Some(&last) if last > t.abs() => tail_integral(last, t.abs()),
        _ => f64::INFINITY,
    };
    PartialFraction { value: ComplexValue::new(sum, 0.0), tail_estimate }
}

/// `(1/2π) ∫_A^∞ log τ [1/(τ-t)² + 1/(τ+t)²] dτ` for `A > t ≥ 0`.
fn tail_integral(a: f64, t: f64) -> f64 {
    let ln_a = a.ln();
    let (minus, plus) = if t > 0.0 {
        (ln_a / (a - t) + (a / (a - t)).ln() / t, ln_a / (a + t) + ((a + t) / a).ln() / t)
    } else {
        (ln_a / a + 1.0 / a, ln_a / a + 1.0 / a)
    };
    (minus + plus) / (2.0 * core::f64::consts::PI)
}

/// Smallest `t > 0` beyond which the `t_1` pair dominates the positive first term on
/// `σ = 3/4`, i.e. where `½[1/(¼+(t-t₁)²) + 1/(¼+(t+t₁)²)]` first exceeds
/// `(3/16+t²)/((9/16+t²)(1/16+t²))`.
pub fn dominance_threshold(t1: f64) -> Result<f64> {
    let first = |t: f64| {
        let t2 = t * t;
        (3.0 / 16.0 + t2) / ((9.0 / 16.0 + t2) * (1.0 / 16.0 + t2))
    };
    let pair = |t: f64| 0.5 * (1.0 / (0.25 + (t - t1).powi(2)) + 1.0 / (0.25 + (t + t1).powi(2)));
    let g = |t: f64| pair(t) - first(t);
    let step = 1e-2;
    let mut lo = step;
    if g(lo) > 0.0 {
        return Err(Error::NoConvergence("pair term dominates from the start"));
    }
    while lo < t1 {
        let hi = lo + step;
        if g(hi) > 0.0 {
            let b = crate::roots::refine(g, lo, hi, g(lo), g(hi), 1e-10, 1e-13)?;
            return Ok(b.mid());
        }
        lo = hi;
    }
    Err(Error::NoConvergence("no dominance crossing below t1"))
}

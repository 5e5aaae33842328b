//! Closed-form large-`t` estimators for `U`, `V` and `W`.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::complexfn::ComplexValue;

use core::f64::consts::PI;

/// Which estimator to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Asymptotic {
    /// `√(π/s)(1 + 3/(8s))(1 + 4^{-s} + 2·9^{-s})`.
    ULead,
    /// `1 + √(2/t)(1 - i√π)`.
    VLead,
    /// `-i + √(2/t)(1 - i√π)`.
    WLead,
    /// `-i + (1-i)√(2π/t) + 2π/t + (1+i)(π + σ/2)√(2π/t³)`.
    WF12,
    /// `1 + √(2/t)` (real).
    AbsV,
    /// `-√(2π/t)` (real).
    ArgV,
}

/// Evaluate a closed-form estimator at `s = σ + it`.
///
/// `VLead`, `WLead` and `AbsV` carry the coefficient `√(2/t)` for the real part of the
/// correction. Expanding `V ≈ 1 + 2U` with the leading `U ≈ √(π/s)` instead gives
/// `√(2π/t)`, which is what `WF12` and `ArgV` use; the two groups therefore differ by a
/// factor `√π` in that coefficient, and the exact values follow the `√(2π/t)` group.
pub fn asymptotics(s: ComplexValue, which: Asymptotic) -> ComplexValue {
    let (sigma, t) = (s.re, s.im);
    let i = ComplexValue::i();
    let r = (2.0 / t).sqrt();
    let c = ComplexValue::new(1.0, -PI.sqrt());
    match which {
        Asymptotic::ULead => {
            let four = (-s * 4f64.ln()).exp();
            let nine = (-s * 9f64.ln()).exp();
            (ComplexValue::new(PI, 0.0) / s).sqrt() * (s.inv() * 0.375 + 1.0) * (four + nine * 2.0 + 1.0)
        }
        Asymptotic::VLead => c * r + 1.0,
        Asymptotic::WLead => c * r - i,
        Asymptotic::WF12 => {
            let q = (2.0 * PI / t).sqrt();
            -i + ComplexValue::new(1.0, -1.0) * q + 2.0 * PI / t + ComplexValue::new(1.0, 1.0) * (PI + sigma / 2.0) * q / t
        }
        Asymptotic::AbsV => ComplexValue::new(1.0 + r, 0.0),
        Asymptotic::ArgV => ComplexValue::new(-(2.0 * PI / t).sqrt(), 0.0),
    }
}

//! `log Γ` and `ψ` by upward recurrence followed by the asymptotic series.
//!
//! The recurrence `log Γ(z) = log Γ(z+m) - Σ log(z+k)` uses principal logarithms of each
//! factor. Off the negative real axis this reproduces the standard principal branch of
//! `log Γ` (cut along `(-∞, 0]`), which is continuous in `t` along any vertical line; on the
//! cut the value is the limit from above.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::bernoulli::{DIGAMMA_COEFF, STIRLING_COEFF};
use super::{ComplexValue, EvalResult};

const STIRLING_TERMS: usize = 8;
const SHIFT_RADIUS: f64 = 12.0;
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

pub(crate) fn is_gamma_pole(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// Number of unit shifts that bring `z` to `Re ≥ 0` and `|z| ≥ 12`.
fn shift_count(z: ComplexValue) -> usize {
    let mut m = if z.re < 0.0 { (-z.re).ceil() as usize } else { 0 };
    loop {
        let w = ComplexValue::new(z.re + m as f64, z.im);
        if w.norm() >= SHIFT_RADIUS {
            return m;
        }
        m += 1;
    }
}

/// Principal `log Γ(z)` for `z` not a pole, with an absolute error estimate.
pub(crate) fn ln_gamma_with_err(z: ComplexValue) -> (ComplexValue, f64) {
    let m = shift_count(z);
    let mut shift = ComplexValue::new(0.0, 0.0);
    let mut scale = 0.0;
    for k in 0..m {
        let l = (z + k as f64).ln();
        scale += l.norm();
        shift += l;
    }
    let w = z + m as f64;
    let ln_w = w.ln();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = ComplexValue::new(STIRLING_COEFF[STIRLING_TERMS - 1], 0.0);
    for k in (0..STIRLING_TERMS - 1).rev() {
        series = series * inv2 + STIRLING_COEFF[k];
    }
    series *= inv;
    let main = (w - 0.5) * ln_w - w + HALF_LN_TWO_PI;
    scale += main.norm() + w.norm();
    let truncation = STIRLING_COEFF[STIRLING_TERMS].abs() * inv.norm().powi(2 * STIRLING_TERMS as i32 + 1);
    (main + series - shift, 4.0 * f64::EPSILON * scale + 512.0 * truncation)
}

#[cfg(test)]
pub(crate) fn ln_gamma(z: ComplexValue) -> ComplexValue {
    ln_gamma_with_err(z).0
}

/// Principal branch of `log Γ(z)`.
///
/// Non-positive integers return a flagged pole instead of an error.
pub fn log_gamma(z: ComplexValue) -> EvalResult {
    if is_gamma_pole(z) {
        return EvalResult::pole();
    }
    let (value, err) = ln_gamma_with_err(z);
    EvalResult::new(value, err)
}

pub(crate) fn digamma_with_err(z: ComplexValue) -> (ComplexValue, f64) {
    let m = shift_count(z);
    let mut shift = ComplexValue::new(0.0, 0.0);
    let mut scale = 0.0;
    for k in 0..m {
        let r = (z + k as f64).inv();
        scale += r.norm();
        shift += r;
    }
    let w = z + m as f64;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = ComplexValue::new(DIGAMMA_COEFF[STIRLING_TERMS - 1], 0.0);
    for k in (0..STIRLING_TERMS - 1).rev() {
        series = series * inv2 + DIGAMMA_COEFF[k];
    }
    series *= inv2;
    let main = w.ln() - inv * 0.5;
    scale += main.norm();
    let truncation = DIGAMMA_COEFF[STIRLING_TERMS].abs() * inv.norm().powi(2 * STIRLING_TERMS as i32 + 2);
    (main - series - shift, 4.0 * f64::EPSILON * scale + 512.0 * truncation)
}

pub(crate) fn psi(z: ComplexValue) -> ComplexValue {
    digamma_with_err(z).0
}

/// Digamma function `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: ComplexValue) -> EvalResult {
    if is_gamma_pole(z) {
        return EvalResult::pole();
    }
    let (value, err) = digamma_with_err(z);
    EvalResult::new(value, err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn closed_forms() {
        assert!(log_gamma(c(1.0, 0.0)).value.norm() < 1e-14);
        assert!(log_gamma(c(2.0, 0.0)).value.norm() < 1e-14);
        let half = log_gamma(c(0.5, 0.0)).value;
        assert!((half.re - 0.572_364_942_924_700_1).abs() < 1e-14);
        assert_eq!(half.im, 0.0);
        let gamma_const = 0.577_215_664_901_532_9;
        assert!((digamma(c(1.0, 0.0)).value.re + gamma_const).abs() < 1e-14);
        assert!((digamma(c(2.0, 0.0)).value.re - (1.0 - gamma_const)).abs() < 1e-14);
    }

    #[test]
    fn poles_are_flagged() {
        for n in 0..5 {
            assert!(log_gamma(c(-(n as f64), 0.0)).at_pole);
            assert!(digamma(c(-(n as f64), 0.0)).at_pole);
        }
        assert!(!log_gamma(c(-1.0, 1e-9)).at_pole);
    }

    #[test]
    fn recurrence_holds() {
        for &(re, im) in &[(0.3, 0.7), (-2.2, 5.0), (4.0, -30.0), (0.25, 900.0)] {
            let z = c(re, im);
            let lhs = ln_gamma(z + 1.0);
            let rhs = ln_gamma(z) + z.ln();
            // same branch: the difference is exactly zero modulo rounding, not 2πi
            assert!((lhs - rhs).norm() < 1e-11 * (1.0 + lhs.norm()), "{z}");
            let dl = psi(z + 1.0) - psi(z) - z.inv();
            assert!(dl.norm() < 1e-12, "{z}");
        }
    }

    #[test]
    fn branch_is_continuous_along_vertical_lines() {
        let mut prev = ln_gamma(c(0.5, 0.0)).im;
        let mut t = 0.0;
        while t < 50.0 {
            t += 0.25;
            let cur = ln_gamma(c(0.5, t)).im;
            assert!((cur - prev).abs() < 1.0);
            prev = cur;
        }
    }
}

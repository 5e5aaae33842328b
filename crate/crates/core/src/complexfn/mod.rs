//! Special functions: `log Γ`, `ψ`, `ζ`, `ζ'`, and the completed zeta function in its
//! `ξ₁`, `ξ`, `log ξ₁` and `ξ₁'/ξ₁` forms.

mod bernoulli;
mod gamma;
mod xi;
mod zeta;

pub use gamma::{digamma, log_gamma};
pub use xi::{hardy_z, log_xi1_unreflected, riemann_siegel_theta, theta1, xi1, xi1_unreflected, XiVariant};
pub use zeta::{em_terms, zeta, zeta_em};

pub(crate) use xi::{log_xi1, log_xi_from_em, theta1_parts, LogXi};
pub(crate) use zeta::{EmSum, ZetaLattice};

/// The universal scalar, `re + i·im`.
pub type ComplexValue = num_complex::Complex64;

/// A function value together with an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: ComplexValue,
    pub est_abs_err: f64,
    /// Set when the point is a pole; `value` is then infinite.
    pub at_pole: bool,
}

impl EvalResult {
    pub fn new(value: ComplexValue, est_abs_err: f64) -> Self {
        Self { value, est_abs_err, at_pole: false }
    }

    pub fn pole() -> Self {
        Self { value: ComplexValue::new(f64::INFINITY, 0.0), est_abs_err: f64::INFINITY, at_pole: true }
    }

    /// Relative error estimate `est_abs_err / max(1, |value|)`.
    pub fn scaled_err(&self) -> f64 {
        self.est_abs_err / self.value.norm().max(1.0)
    }
}

/// Reduce an angle to `(-π, π]`.
pub(crate) fn principal_angle(x: f64) -> f64 {
    use core::f64::consts::PI;
    let mut r = x % (2.0 * PI);
    if r > PI {
        r -= 2.0 * PI;
    } else if r <= -PI {
        r += 2.0 * PI;
    }
    if !r.is_finite() {
        return x;
    }
    r
}

//! The completed zeta function `ξ₁(s) = π^{-s/2} Γ(s/2) ζ(s)` and relatives.
//!
//! Beyond `|Im s| ≈ 50` the value of `ξ₁` underflows quickly, so everything downstream works
//! with `log ξ₁`. Points with `Re s < 1/2` are mapped to `1 - s` by the functional equation
//! unless the caller asks for the unreflected route.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::gamma::{ln_gamma_with_err, psi};
use super::zeta::{em_sum, em_terms, em_terms_direct, EmSum};
use super::{principal_angle, ComplexValue, EvalResult};

const HALF_LN_PI: f64 = 0.572_364_942_924_700_1;

/// Which form of the completed zeta function to return from [`xi1`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiVariant {
    /// `ξ₁(s)`.
    Xi1,
    /// `ξ(s) = ½ s(s-1) ξ₁(s)`, entire.
    Xi,
    /// Principal `log ξ₁(s)`.
    LogXi1,
    /// `ξ₁'(s)/ξ₁(s)`.
    LogDerivXi1,
}

/// `log ξ₁` and its derivative at one point. `log` keeps the continuous `log Γ` branch in
/// its imaginary part (it is not reduced mod 2π).
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogXi {
    pub log: ComplexValue,
    pub dlog: ComplexValue,
    /// Absolute error of `log` (equivalently the relative error of `ξ₁`).
    pub err: f64,
    pub dlog_err: f64,
    pub pole: bool,
}

impl LogXi {
    fn pole() -> Self {
        let inf = ComplexValue::new(f64::INFINITY, 0.0);
        Self { log: inf, dlog: inf, err: f64::INFINITY, dlog_err: f64::INFINITY, pole: true }
    }

    /// Conversion for a point evaluated through `1 - s`.
    pub(crate) fn reflected(mut self) -> Self {
        self.dlog = -self.dlog;
        self
    }
}

/// `log ξ₁(w)` from a prepared Euler–Maclaurin sum at `w`.
pub(crate) fn log_xi_from_em(w: ComplexValue, em: &EmSum) -> LogXi {
    if w == ComplexValue::new(1.0, 0.0) || w == ComplexValue::new(0.0, 0.0) {
        return LogXi::pole();
    }
    let z = em.zeta(w);
    let zn = z.norm();
    let dz = em.zeta_prime(w);
    let (lg, lg_err) = ln_gamma_with_err(w * 0.5);
    let log = -w * HALF_LN_PI + lg + z.ln();
    let dlog = ComplexValue::new(-HALF_LN_PI, 0.0) + psi(w * 0.5) * 0.5 + dz / z;
    let rel = em.err / zn.max(f64::MIN_POSITIVE);
    LogXi {
        log,
        dlog,
        err: rel + lg_err + 2.0 * f64::EPSILON * log.norm(),
        dlog_err: rel * (1.0 + dz.norm() / zn.max(f64::MIN_POSITIVE)) + 1e-15 * dlog.norm(),
        pole: false,
    }
}

/// `log ξ₁(s)` with derivative. The symmetric route evaluates at `max(Re s, 1/2)` side.
pub(crate) fn log_xi1(s: ComplexValue, symmetric: bool) -> LogXi {
    if symmetric && s.re < 0.5 {
        let w = ComplexValue::new(1.0, 0.0) - s;
        let em = em_sum(w, em_terms(w.im));
        return log_xi_from_em(w, &em).reflected();
    }
    let em = em_sum(s, em_terms_direct(s));
    log_xi_from_em(s, &em)
}

/// `ξ(s) = ½ s(s-1) ξ₁(s)` through the regular product `(s-1) ζ(s)`.
fn xi_entire(s: ComplexValue) -> EvalResult {
    let w = if s.re < 0.5 { ComplexValue::new(1.0, 0.0) - s } else { s };
    let em = em_sum(w, em_terms(w.im));
    let reg = em.zeta_times_sm1(w);
    let (lg, lg_err) = ln_gamma_with_err(w * 0.5);
    let log = (w * 0.5).ln() + reg.ln() - w * HALF_LN_PI + lg;
    let value = log.exp();
    let rel = em.err * (w - 1.0).norm() / reg.norm().max(f64::MIN_POSITIVE) + lg_err + 2.0 * f64::EPSILON * log.norm();
    EvalResult::new(value, rel * value.norm())
}

/// The completed zeta function in the requested form.
///
/// `Xi1` and `LogXi1` flag poles at `s = 0, 1`; `Xi` is entire. Near zeros of `ζ` the error
/// estimate of the log forms grows without bound.
pub fn xi1(s: ComplexValue, variant: XiVariant) -> EvalResult {
    if variant == XiVariant::Xi {
        return xi_entire(s);
    }
    let lx = log_xi1(s, true);
    if lx.pole {
        return EvalResult::pole();
    }
    match variant {
        XiVariant::Xi1 => {
            let v = lx.log.exp();
            EvalResult::new(v, lx.err * v.norm())
        }
        XiVariant::LogXi1 => {
            let v = ComplexValue::new(lx.log.re, principal_angle(lx.log.im));
            EvalResult::new(v, lx.err)
        }
        XiVariant::LogDerivXi1 => EvalResult::new(lx.dlog, lx.dlog_err),
        XiVariant::Xi => unreachable!(),
    }
}

/// `ξ₁(s)` evaluated at `s` itself, without using the functional equation.
///
/// This is the independent side of the `ξ₁(s) = ξ₁(1-s)` identity checks.
pub fn xi1_unreflected(s: ComplexValue) -> EvalResult {
    let lx = log_xi1(s, false);
    if lx.pole {
        return EvalResult::pole();
    }
    let v = lx.log.exp();
    EvalResult::new(v, lx.err * v.norm())
}

/// Principal `log ξ₁(s)` evaluated at `s` itself; finite where `ξ₁` under- or overflows.
pub fn log_xi1_unreflected(s: ComplexValue) -> EvalResult {
    let lx = log_xi1(s, false);
    if lx.pole {
        return EvalResult::pole();
    }
    EvalResult::new(ComplexValue::new(lx.log.re, principal_angle(lx.log.im)), lx.err)
}

/// Continuous argument `θ₁(t) = arg ξ₁(1 + 2it)`, normalised so that `θ₁(0⁺) = -π/2`.
///
/// Built from the continuous branch of `Im log Γ(1/2 + it)` and the principal argument of
/// `ζ(1 + 2it)`; the latter stays inside `(-π/2, π/2)` except near `t = 0`, where it tends
/// to `-π/2`, and the phase tracker cross-checks this representation.
pub fn theta1(t: f64) -> f64 {
    if t == 0.0 {
        return -core::f64::consts::FRAC_PI_2;
    }
    let (smooth, arg_zeta) = theta1_parts(t);
    smooth + arg_zeta
}

/// The two pieces of `θ₁(t)`: the continuous `-t log π + Im log Γ(1/2 + it)` and the
/// principal `arg ζ(1 + 2it)`.
pub(crate) fn theta1_parts(t: f64) -> (f64, f64) {
    let w = ComplexValue::new(1.0, 2.0 * t);
    let em = em_sum(w, em_terms(w.im));
    let z = em.zeta(w);
    let lg = ln_gamma_with_err(ComplexValue::new(0.5, t)).0;
    (-t * 2.0 * HALF_LN_PI + lg.im, z.im.atan2(z.re))
}

/// Riemann–Siegel theta `ϑ(u) = Im log Γ(1/4 + iu/2) - (u/2) log π`.
pub fn riemann_siegel_theta(u: f64) -> f64 {
    ln_gamma_with_err(ComplexValue::new(0.25, 0.5 * u)).0.im - u * HALF_LN_PI
}

/// Hardy's function `Z(u) = e^{iϑ(u)} ζ(1/2 + iu)`, real for real `u`, with its error bound.
pub fn hardy_z(u: f64) -> (f64, f64) {
    let s = ComplexValue::new(0.5, u);
    let em = em_sum(s, em_terms(u));
    let z = em.zeta(s);
    let rot = ComplexValue::from_polar(1.0, riemann_siegel_theta(u));
    ((rot * z).re, em.err + 4.0 * f64::EPSILON * z.norm() * (1.0 + u.abs().ln().max(0.0)))
}

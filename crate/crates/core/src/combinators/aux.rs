#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::complexfn::{ComplexValue, EvalResult};

use super::ratio::{circle_mean, near_half, u_state, Route};

/// The auxiliary families built from `ξ₁(2s)` and `ξ₁(2-2s) = ξ₁(2s-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aux {
    /// `a₀(y,s) = ξ₁(2s) yˢ + ξ₁(2-2s) y^{1-s}`.
    A0,
    /// `I(T,s) = -ξ₁(2s) T^{s-1}/(s-1) + ξ₁(2-2s) T^{-s}/s`.
    ILs,
    /// `f(y,s) = (s-1)s(2s-1) ξ₁(2s) yˢ + s(1-s)(1-2s) ξ₁(2-2s) y^{1-s}`.
    FKi,
}

const ENTIRE_ZONE: f64 = 1e-3;

/// Evaluate one of the auxiliary functions; `y_or_t` is `y` for `A0`/`FKi` and `T` for `ILs`.
///
/// `a₀` and `I` have poles at `s = 0, 1` and are regular at `s = 1/2`; `f` is entire.
pub fn aux(s: ComplexValue, which: Aux, y_or_t: f64) -> EvalResult {
    let zero = ComplexValue::new(0.0, 0.0);
    let one = ComplexValue::new(1.0, 0.0);
    match which {
        Aux::FKi => {
            if s.norm() < ENTIRE_ZONE || (s - one).norm() < ENTIRE_ZONE {
                let mut err = 0.0f64;
                let v = circle_mean(s, |z| {
                    let r = f_ki(z, y_or_t);
                    err = err.max(r.est_abs_err);
                    r.value
                });
                return EvalResult::new(v, 2.0 * err);
            }
            f_ki(s, y_or_t)
        }
        _ if s == zero || s == one => EvalResult::pole(),
        _ if near_half(s) => {
            let mut err = 0.0f64;
            let v = circle_mean(s, |z| {
                let r = direct(z, which, y_or_t);
                err = err.max(r.est_abs_err);
                r.value
            });
            EvalResult::new(v, 2.0 * err)
        }
        _ => direct(s, which, y_or_t),
    }
}

fn f_ki(s: ComplexValue, y: f64) -> EvalResult {
    let a0 = if near_half(s) { aux(s, Aux::A0, y) } else { direct(s, Aux::A0, y) };
    let k = s * (s - 1.0) * (s * 2.0 - 1.0);
    EvalResult::new(k * a0.value, k.norm() * a0.est_abs_err)
}

fn direct(s: ComplexValue, which: Aux, p: f64) -> EvalResult {
    let st = u_state(s, Route::Symmetric);
    let ln_p = p.ln();
    let one = ComplexValue::new(1.0, 0.0);
    // everything is ξ₁(2s) times a bracket in U
    let (bracket, u_weight) = match which {
        Aux::A0 | Aux::FKi => {
            let g = ((one - s * 2.0) * ln_p).exp();
            let b = (s * ln_p).exp() * (one + st.u * g);
            (b, (st.u * g * (s * ln_p).exp()).norm())
        }
        Aux::ILs => {
            let x = -((s - 1.0) * ln_p).exp() / (s - 1.0);
            let y = st.u * (-s * ln_p).exp() / s;
            (x + y, y.norm())
        }
    };
    let scale = st.log_xi_2s.exp();
    let value = scale * bracket;
    let err = (value.norm() + scale.norm() * u_weight) * (st.rel_err + 4.0 * f64::EPSILON);
    EvalResult::new(value, err)
}

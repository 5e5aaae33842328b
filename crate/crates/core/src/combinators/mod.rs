//! Composite functions of `ξ₁(2s)` and `ξ₁(2s-1)`.
//!
//! Everything is routed through [`UState`], which carries `U = ξ₁(2s-1)/ξ₁(2s)` formed as
//! `exp(log ξ₁(2s-1) - log ξ₁(2s))` together with `U'/U`. This keeps the ratios at unit scale
//! where the individual `ξ₁` values under- or overflow.

mod asymptotics;
mod aux;
mod counterexample;
mod partial;
mod ratio;

pub use asymptotics::{asymptotics, Asymptotic};
pub use aux::{aux, Aux};
pub use counterexample::{counterexample, oa_state, Counterexample, CounterexampleSpec};
pub use partial::{dominance_threshold, first_term, pair_term, partialfrac_logderiv, PartialFraction};
pub use ratio::{t_pm, u_state, uvw, Route, Sign, UGrid, UState, Uvw};

pub(crate) use ratio::uvw_from_state;

use crate::complexfn::ComplexValue;

/// The constants of the `W`–`V` normal form
/// `(W - V₁)/(W - V₂) = V₃ (V - V₁)/(V - V₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalFormConstants {
    pub v1: ComplexValue,
    pub v2: ComplexValue,
    pub v3: ComplexValue,
}

/// `V₁ = √(2+√3) e^{-iπ/4}`, `V₂ = √(2-√3) e^{3iπ/4}`, `V₃ = -1/2 + (√3/2) i`.
pub const NORMAL_FORM: NormalFormConstants = NormalFormConstants {
    // √(2±√3)/√2 = (√3 ± 1)/2
    v1: ComplexValue::new(1.366_025_403_784_438_6, -1.366_025_403_784_438_6),
    v2: ComplexValue::new(-0.366_025_403_784_438_6, 0.366_025_403_784_438_6),
    v3: ComplexValue::new(-0.5, 0.866_025_403_784_438_6),
};

#[cfg(test)]
mod tests;

//! The off-axis family: `U` multiplied by rational factors that plant zeros at
//! `3/4 ± δ ± it*` and balancing poles at `1/4 ± δ ± it*`.

use alloc::vec::Vec;

use crate::complexfn::{ComplexValue, EvalResult};
use crate::error::{Error, Result};

use super::ratio::{u_state, uvw_from_state, Route, UState, Uvw, NEAR_POLE};

/// Parameters of the off-axis factor `F(s, δ, t*)` and any further factors `F(s, δ_q, t_q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleSpec {
    delta: f64,
    t_star: f64,
    extra_terms: Vec<(f64, f64)>,
}

impl CounterexampleSpec {
    /// Validates `0 < δ < 1/4` and `t* > 0` for the main term and every extra term.
    pub fn new(delta: f64, t_star: f64, extra_terms: Vec<(f64, f64)>) -> Result<Self> {
        for &(d, t) in core::iter::once(&(delta, t_star)).chain(extra_terms.iter()) {
            if !(d > 0.0 && d < 0.25) {
                return Err(Error::Domain("counterexample delta must lie in (0, 1/4)"));
            }
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::Domain("counterexample ordinate must be positive"));
            }
        }
        Ok(Self { delta, t_star, extra_terms })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn t_star(&self) -> f64 {
        self.t_star
    }

    pub fn extra_terms(&self) -> &[(f64, f64)] {
        &self.extra_terms
    }

    fn terms(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        core::iter::once((self.delta, self.t_star)).chain(self.extra_terms.iter().copied())
    }

    /// Planted zeros, four per term.
    pub fn zeros(&self) -> Vec<ComplexValue> {
        self.terms().flat_map(|(d, t)| corners(0.75, d, t)).collect()
    }

    /// Balancing poles, four per term.
    pub fn poles(&self) -> Vec<ComplexValue> {
        self.terms().flat_map(|(d, t)| corners(0.25, d, t)).collect()
    }

    /// `F(s)` for all terms, with `F'/F`; `None` at a pole.
    pub fn factor(&self, s: ComplexValue) -> Option<(ComplexValue, ComplexValue)> {
        let mut num = ComplexValue::new(1.0, 0.0);
        let mut den = ComplexValue::new(1.0, 0.0);
        let mut dlog = ComplexValue::new(0.0, 0.0);
        for (z, p) in self.zeros().into_iter().zip(self.poles()) {
            let a = s - z;
            let b = s - p;
            if b == ComplexValue::new(0.0, 0.0) {
                return None;
            }
            num *= a;
            den *= b;
            dlog += b.inv() * -1.0;
            if a != ComplexValue::new(0.0, 0.0) {
                dlog += a.inv();
            }
        }
        if den.norm() < NEAR_POLE * num.norm() {
            return None;
        }
        Some((num / den, dlog))
    }

    /// Multiply a `U` state by `F`.
    pub fn apply(&self, st: UState) -> UState {
        if st.pole {
            return st;
        }
        match self.factor(st.s) {
            Some((f, dlog)) => UState { u: st.u * f, dlog_u: st.dlog_u + dlog, ..st },
            None => {
                let inf = ComplexValue::new(f64::INFINITY, 0.0);
                UState { u: inf, dlog_u: inf, pole: true, ..st }
            }
        }
    }
}

fn corners(centre: f64, d: f64, t: f64) -> [ComplexValue; 4] {
    [
        ComplexValue::new(centre + d, t),
        ComplexValue::new(centre + d, -t),
        ComplexValue::new(centre - d, t),
        ComplexValue::new(centre - d, -t),
    ]
}

/// Member of the off-axis family to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counterexample {
    F,
    UOa,
    VOa,
    WOa,
}

/// `U` state of the off-axis variant at `s`.
pub fn oa_state(s: ComplexValue, spec: &CounterexampleSpec) -> UState {
    spec.apply(u_state(s, Route::Symmetric))
}

/// Evaluate `F`, `U_oa = U·F`, or its Möbius images `V_oa`, `W_oa`.
pub fn counterexample(s: ComplexValue, spec: &CounterexampleSpec, which: Counterexample) -> EvalResult {
    match which {
        Counterexample::F => match spec.factor(s) {
            Some((f, _)) => EvalResult::new(f, 8.0 * f64::EPSILON * f.norm()),
            None => EvalResult::pole(),
        },
        Counterexample::UOa => uvw_from_state(&oa_state(s, spec), Uvw::U),
        Counterexample::VOa => uvw_from_state(&oa_state(s, spec), Uvw::V),
        Counterexample::WOa => uvw_from_state(&oa_state(s, spec), Uvw::W),
    }
}

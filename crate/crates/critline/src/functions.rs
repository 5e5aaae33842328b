//! Name-addressed point evaluators shared by `eval` and the fixture checker.

use critline_core::combinators::{aux, counterexample, t_pm, uvw, Aux, Counterexample, CounterexampleSpec, Sign, Uvw};
use critline_core::complexfn::{digamma, log_gamma, theta1, xi1, zeta, XiVariant};
use critline_core::{ComplexValue, EvalResult};

use crate::error::{CliError, Result};

/// Off-axis parameters used when none are given.
pub const DEFAULT_DELTA: f64 = 0.05;
pub const DEFAULT_T_STAR: f64 = 418.85;

#[derive(Debug, Clone, PartialEq)]
pub enum PointFn {
    Zeta,
    ZetaPrime,
    LogGamma,
    Digamma,
    Xi1,
    Xi,
    LogXi1,
    LogDerivXi1,
    /// `θ₁(t)` at `t = Re s`.
    Theta1,
    Tplus,
    Tminus,
    U,
    V,
    W,
    Aux(Aux, f64),
    Oa(Counterexample, CounterexampleSpec),
}

pub const NAMES: &[&str] = &[
    "zeta", "zeta_prime", "log_gamma", "digamma", "xi1", "xi", "log_xi1", "logderiv_xi1", "theta1", "Tplus", "Tminus",
    "U", "V", "W", "a0", "I", "f", "F", "U_oa", "V_oa", "W_oa",
];

impl PointFn {
    /// `param` is `y` for `a0`/`f` and `T` for `I` (default 2). `spec` is used by the
    /// off-axis family (default δ = 0.05, t* = 418.85).
    pub fn parse(name: &str, param: Option<f64>, spec: Option<&CounterexampleSpec>) -> Result<Self> {
        let oa = |which| -> Result<Self> {
            let spec = match spec {
                Some(s) => s.clone(),
                None => CounterexampleSpec::new(DEFAULT_DELTA, DEFAULT_T_STAR, Vec::new())?,
            };
            Ok(PointFn::Oa(which, spec))
        };
        let p = param.unwrap_or(2.0);
        Ok(match name {
            "zeta" => PointFn::Zeta,
            "zeta_prime" => PointFn::ZetaPrime,
            "log_gamma" => PointFn::LogGamma,
            "digamma" => PointFn::Digamma,
            "xi1" => PointFn::Xi1,
            "xi" => PointFn::Xi,
            "log_xi1" => PointFn::LogXi1,
            "logderiv_xi1" => PointFn::LogDerivXi1,
            "theta1" => PointFn::Theta1,
            "Tplus" => PointFn::Tplus,
            "Tminus" => PointFn::Tminus,
            "U" => PointFn::U,
            "V" => PointFn::V,
            "W" => PointFn::W,
            "a0" => PointFn::Aux(Aux::A0, p),
            "I" => PointFn::Aux(Aux::ILs, p),
            "f" => PointFn::Aux(Aux::FKi, p),
            "F" => oa(Counterexample::F)?,
            "U_oa" => oa(Counterexample::UOa)?,
            "V_oa" => oa(Counterexample::VOa)?,
            "W_oa" => oa(Counterexample::WOa)?,
            _ => return Err(CliError::config("fn", format!("unknown function `{name}` (known: {})", NAMES.join(", ")))),
        })
    }

    pub fn eval(&self, s: ComplexValue) -> EvalResult {
        match self {
            PointFn::Zeta => zeta(s, 0),
            PointFn::ZetaPrime => zeta(s, 1),
            PointFn::LogGamma => log_gamma(s),
            PointFn::Digamma => digamma(s),
            PointFn::Xi1 => xi1(s, XiVariant::Xi1),
            PointFn::Xi => xi1(s, XiVariant::Xi),
            PointFn::LogXi1 => xi1(s, XiVariant::LogXi1),
            PointFn::LogDerivXi1 => xi1(s, XiVariant::LogDerivXi1),
            PointFn::Theta1 => EvalResult::new(ComplexValue::new(theta1(s.re), 0.0), 1e-12 * s.re.abs().max(1.0)),
            PointFn::Tplus => t_pm(s, Sign::Plus),
            PointFn::Tminus => t_pm(s, Sign::Minus),
            PointFn::U => uvw(s, Uvw::U),
            PointFn::V => uvw(s, Uvw::V),
            PointFn::W => uvw(s, Uvw::W),
            PointFn::Aux(which, p) => aux(s, *which, *p),
            PointFn::Oa(which, spec) => counterexample(s, spec, *which),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_parses() {
        for n in NAMES {
            PointFn::parse(n, None, None).unwrap();
        }
        assert!(PointFn::parse("nope", None, None).is_err());
    }

    #[test]
    fn w_at_half_is_minus_one() {
        let w = PointFn::parse("W", None, None).unwrap().eval(ComplexValue::new(0.5, 0.0)).value;
        assert!((w - ComplexValue::new(-1.0, 0.0)).norm() < 1e-12, "{w}");
    }
}

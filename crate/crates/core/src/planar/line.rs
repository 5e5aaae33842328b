#[cfg(not(feature = "std"))]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use super::grid::point_state;
use crate::combinators::CounterexampleSpec;
use crate::complexfn::{principal_angle as principal, ComplexValue};
use crate::error::{Error, Result};
use crate::roots::refine;

const MAX_DPHI: f64 = PI / 8.0;
const MIN_STEP: f64 = 1e-9;

/// Distinguished points of `V` on the critical line, located from the argument of `U`.
///
/// On `σ = 1/2`, `U = e^{iφ}` and `V = i cot(φ/2)`, so `V` vanishes at `φ ≡ π`, is infinite
/// at `φ ≡ 0`, and equals `±i` at `φ ≡ ±π/2`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LinePoints {
    pub v_zeros: Vec<f64>,
    pub v_poles: Vec<f64>,
    pub plus_i: Vec<f64>,
    pub minus_i: Vec<f64>,
}

impl LinePoints {
    /// The `V = ±i` points immediately below and above `t`, as `(below, above)`.
    pub fn neighbours_pm_i(&self, t: f64) -> (Option<f64>, Option<f64>) {
        let all = self.plus_i.iter().chain(self.minus_i.iter()).copied();
        let below = all.clone().filter(|&x| x < t).fold(None, |m: Option<f64>, x| Some(m.map_or(x, |m| m.max(x))));
        let above = all.filter(|&x| x > t).fold(None, |m: Option<f64>, x| Some(m.map_or(x, |m| m.min(x))));
        (below, above)
    }
}


fn arg_u(t: f64, spec: Option<&CounterexampleSpec>) -> f64 {
    point_state(ComplexValue::new(0.5, t), spec).u.arg()
}

/// Track `φ(t) = arg U(1/2 + it)` over `[t_lo, t_hi]` and refine every crossing of a
/// multiple of `π/2` to a `10⁻¹⁰` bracket.
pub fn line_points(t_lo: f64, t_hi: f64, spec: Option<&CounterexampleSpec>) -> Result<LinePoints> {
    if !(t_lo < t_hi) || t_lo < 0.0 || t_hi > 1050.0 {
        return Err(Error::Domain("line_points needs 0 <= t_lo < t_hi <= 1050"));
    }
    let mut out = LinePoints::default();
    let mut t = t_lo;
    let mut phi = arg_u(t, spec);
    let mut h: f64 = 0.01;
    while t < t_hi {
        let step = h.min(t_hi - t);
        let t_next = t + step;
        let raw = arg_u(t_next, spec);
        let d = principal(raw - phi);
        if d.abs() > MAX_DPHI && step > MIN_STEP {
            h = step * 0.5;
            continue;
        }
        if step <= MIN_STEP && d.abs() > MAX_DPHI {
            return Err(Error::StepUnderflow { at: t });
        }
        let phi_next = phi + d;
        let (a, b) = (phi.min(phi_next), phi.max(phi_next));
        let mut m = (a / FRAC_PI_2).floor() + 1.0;
        while m * FRAC_PI_2 <= b {
            let level = m * FRAC_PI_2;
            if level > a {
                let f = |x: f64| principal(arg_u(x, spec) - level);
                let (fa, fb) = (principal(phi - level), principal(phi_next - level));
                if let Ok(br) = refine(f, t, t_next, fa, fb, 1e-6, 1e-10) {
                    let x = br.mid();
                    match (m as i64).rem_euclid(4) {
                        0 => out.v_poles.push(x),
                        1 => out.plus_i.push(x),
                        2 => out.v_zeros.push(x),
                        _ => out.minus_i.push(x),
                    }
                }
            }
            m += 1.0;
        }
        t = t_next;
        phi = phi_next;
        if d.abs() < MAX_DPHI / 4.0 {
            h = (h * 1.5).min(0.1);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_zeros_are_tplus_zeros() {
        let lp = line_points(6.0, 12.0, None).unwrap();
        assert!((lp.v_zeros[0] - 6.974_68).abs() < 1e-4, "{:?}", lp);
        assert!((lp.v_poles[0] - 7.661_11).abs() < 1e-4, "{:?}", lp);
        let x = lp.v_zeros[0];
        let (lo, hi) = lp.neighbours_pm_i(x);
        assert!(lo.unwrap() < x && x < hi.unwrap());
    }
}

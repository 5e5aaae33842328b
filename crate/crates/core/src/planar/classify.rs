use core::cmp::Ordering;
use core::f64::consts::{FRAC_PI_2, PI};


use crate::combinators::{u_state, Route, UState};
use crate::complexfn::ComplexValue;
use crate::error::{Error, Result};

/// Distance from 1 inside which `|V|` or `|W|` counts as equal to 1.
const UNIT_TOL: f64 = 1e-9;
/// Angular distance from a quadrant boundary inside which either neighbour is accepted.
const BOUNDARY_TOL: f64 = 1e-6;

/// Quadrant of `arg U`, numbered counter-clockwise from `(0, π/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    Q1,
    Q2,
    Q3,
    Q4,
}

impl Quadrant {
    pub fn of_arg(a: f64) -> Self {
        if a >= 0.0 {
            if a < FRAC_PI_2 {
                Quadrant::Q1
            } else {
                Quadrant::Q2
            }
        } else if a < -FRAC_PI_2 {
            Quadrant::Q3
        } else {
            Quadrant::Q4
        }
    }

    /// The moduli pattern `(|V| vs 1, |W| vs 1)` that goes with the quadrant:
    /// `|V| > 1` exactly when `Re U > 0`, and `|W| < 1` exactly when `Im U > 0`.
    pub fn expected(self) -> (Ordering, Ordering) {
        match self {
            Quadrant::Q1 => (Ordering::Greater, Ordering::Less),
            Quadrant::Q2 => (Ordering::Less, Ordering::Less),
            Quadrant::Q3 => (Ordering::Less, Ordering::Greater),
            Quadrant::Q4 => (Ordering::Greater, Ordering::Greater),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Quadrant::Q1 => "Q1",
            Quadrant::Q2 => "Q2",
            Quadrant::Q3 => "Q3",
            Quadrant::Q4 => "Q4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrantClass {
    pub point: ComplexValue,
    pub quadrant: Quadrant,
    pub arg_u: f64,
    pub abs_v: f64,
    pub abs_w: f64,
    pub abs_v_vs_1: Ordering,
    pub abs_w_vs_1: Ordering,
    /// The moduli agree with the quadrant (boundary cases accept either side).
    pub consistent: bool,
}

fn cmp_one(x: f64) -> Ordering {
    if (x - 1.0).abs() <= UNIT_TOL {
        Ordering::Equal
    } else if x > 1.0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn matches(got: Ordering, want: Ordering, near_boundary: bool) -> bool {
    got == want || (near_boundary && got == Ordering::Equal)
}

/// Classify a precomputed state.
pub fn classify_state(st: &UState) -> Result<QuadrantClass> {
    if st.pole || !st.u.is_finite() || st.u.norm() == 0.0 {
        return Err(Error::Pole(st.s));
    }
    let arg_u = st.u.arg();
    let quadrant = Quadrant::of_arg(arg_u);
    let v = st.v();
    let w = st.w();
    if !v.is_finite() || !w.is_finite() {
        return Err(Error::Pole(st.s));
    }
    let (abs_v, abs_w) = (v.norm(), w.norm());
    let (cv, cw) = (cmp_one(abs_v), cmp_one(abs_w));
    let (ev, ew) = quadrant.expected();
    // |V| = 1 on Re U = 0 (arg = ±π/2), |W| = 1 on Im U = 0 (arg = 0, π)
    let near_v_edge = (arg_u.abs() - FRAC_PI_2).abs() < BOUNDARY_TOL;
    let near_w_edge = arg_u.abs() < BOUNDARY_TOL || (PI - arg_u.abs()) < BOUNDARY_TOL;
    let consistent = matches(cv, ev, near_v_edge) && matches(cw, ew, near_w_edge);
    Ok(QuadrantClass { point: st.s, quadrant, arg_u, abs_v, abs_w, abs_v_vs_1: cv, abs_w_vs_1: cw, consistent })
}

/// Quadrant of `arg U(s)` together with `|V|` and `|W|` relative to 1.
///
/// Zeros and poles of `U` have no quadrant and are reported as [`Error::Pole`].
pub fn classify(s: ComplexValue) -> Result<QuadrantClass> {
    classify_state(&u_state(s, Route::Symmetric))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrant_boundaries() {
        assert_eq!(Quadrant::of_arg(0.1), Quadrant::Q1);
        assert_eq!(Quadrant::of_arg(2.0), Quadrant::Q2);
        assert_eq!(Quadrant::of_arg(-2.0), Quadrant::Q3);
        assert_eq!(Quadrant::of_arg(-0.1), Quadrant::Q4);
    }

    #[test]
    fn table_holds_on_a_patch() {
        for k in 0..40 {
            let s = ComplexValue::new(-0.4 + 0.05 * k as f64, 100.0 + 0.37 * k as f64);
            let c = classify(s).unwrap();
            assert!(c.consistent, "{s}: {c:?}");
        }
    }

    #[test]
    fn far_right_is_quadrant_four() {
        // |U| is small to the right, so V ≈ 1 + 2U and both moduli tend to 1
        let c = classify(ComplexValue::new(2.5, 300.0)).unwrap();
        assert!(c.consistent);
    }
}

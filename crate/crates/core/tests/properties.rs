//! Property tests for the identities the function stack must satisfy everywhere.

use critline_core::combinators::{u_state, uvw, Route, Uvw, NORMAL_FORM};
use critline_core::complexfn::{log_xi1_unreflected, xi1, zeta, XiVariant};
use critline_core::counting::{winding_count, CountFn};
use critline_core::planar::Window;
use critline_core::ComplexValue;
use proptest::prelude::*;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

/// Distance between two logarithms, ignoring multiples of `2πi`.
fn log_gap(a: ComplexValue, b: ComplexValue) -> f64 {
    let d = a - b;
    let k = (d.im / (2.0 * PI)).round();
    c(d.re, d.im - 2.0 * PI * k).norm()
}

fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn functional_equation(sigma in -2.0f64..3.0, t in 0.5f64..1000.0) {
        let s = c(sigma, t);
        let a = log_xi1_unreflected(s).value;
        let b = log_xi1_unreflected(c(1.0 - sigma, -t)).value;
        prop_assert!(log_gap(a, b) < 1e-8, "{s}: {a} vs {b}");
    }

    #[test]
    fn schwarz_reflection(sigma in -2.0f64..3.0, t in 0.5f64..1000.0) {
        let a = xi1(c(sigma, t), XiVariant::LogXi1).value;
        let b = xi1(c(sigma, -t), XiVariant::LogXi1).value;
        prop_assert!(log_gap(a, b.conj()) < 1e-9);
    }

    #[test]
    fn w_reciprocal_under_reflection(sigma in -2.0f64..3.0, t in 0.5f64..1000.0) {
        let s = c(sigma, t);
        let a = u_state(s, Route::Direct).w();
        let b = u_state(c(1.0, 0.0) - s, Route::Direct).w();
        prop_assert!(rel(a * b, c(1.0, 0.0)) < 1e-8, "{s}: {}", a * b);
    }

    #[test]
    fn normal_forms(sigma in -2.0f64..3.0, t in 0.5f64..1000.0) {
        let s = c(sigma, t);
        let (u, v, w) = (uvw(s, Uvw::U).value, uvw(s, Uvw::V).value, uvw(s, Uvw::W).value);
        let one = c(1.0, 0.0);
        let lhs = (w - one) / (w + one);
        let rhs = c(0.0, 1.0) * (u - one) / (u + one);
        prop_assert!(rel(lhs, rhs) < 1e-8);
        let nf = NORMAL_FORM;
        let lhs = (w - nf.v1) / (w - nf.v2);
        let rhs = nf.v3 * (v - nf.v1) / (v - nf.v2);
        prop_assert!(rel(lhs, rhs) < 1e-8);
    }

    #[test]
    fn zeta_derivative_matches_differences(sigma in -2.0f64..3.0, t in 2.0f64..500.0) {
        let s = c(sigma, t);
        let h = c(1e-5, 0.0);
        let fd = (zeta(s + h, 0).value - zeta(s - h, 0).value) / (h * 2.0);
        let d = zeta(s, 1).value;
        prop_assert!((fd - d).norm() < 1e-6 * d.norm().max(1.0), "{s}: {d} vs {fd}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn winding_is_additive(t0 in 20.0f64..200.0, h1 in 1.0f64..6.0, h2 in 1.0f64..6.0) {
        let r = |a: f64, b: f64| Window::new(-1.0, 2.0, a, b).unwrap();
        let whole = winding_count(CountFn::Tplus, r(t0, t0 + h1 + h2), None);
        let lo = winding_count(CountFn::Tplus, r(t0, t0 + h1), None);
        let hi = winding_count(CountFn::Tplus, r(t0 + h1, t0 + h1 + h2), None);
        // a split that lands on a zero is nudged apart and may double-count; skip those
        if let (Ok(w), Ok(a), Ok(b)) = (whole, lo, hi) {
            if w.nudges == 0 && a.nudges == 0 && b.nudges == 0 {
                prop_assert_eq!(w.winding, a.winding + b.winding);
            }
        }
    }

    #[test]
    fn v_modulus_is_mirror_symmetric(sigma in -2.0f64..3.0, t in 1.0f64..1000.0) {
        let a = uvw(c(sigma, t), Uvw::V).value.norm();
        let b = uvw(c(1.0 - sigma, t), Uvw::V).value.norm();
        prop_assert!((a - b).abs() < 1e-9 * a.max(1.0));
    }
}

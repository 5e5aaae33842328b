use super::*;
use crate::complexfn::{theta1, xi1, XiVariant};
use crate::complexfn::ComplexValue;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[test]
fn t_plus_at_half_is_finite_constant() {
    let v = t_pm(c(0.5, 0.0), Sign::Plus);
    let expected = (EULER_GAMMA - (4.0 * core::f64::consts::PI).ln()) / 4.0;
    assert!((v.value.re - expected).abs() < 1e-10, "{}", v.value);
    assert!(v.value.im.abs() < 1e-12);
    assert!((v.value.re + 0.488_452_1).abs() < 1e-7);
}

#[test]
fn t_plus_residue_at_zero() {
    let s = c(1e-4, 0.0);
    let r = s * t_pm(s, Sign::Plus).value;
    assert!((r.re + 0.125).abs() < 1e-3, "{r}");
}

#[test]
fn t_minus_real_zero() {
    assert!(t_pm(c(3.91231, 0.0), Sign::Minus).value.norm() < 1e-4);
    assert!(t_pm(c(-2.91231, 0.0), Sign::Minus).value.norm() < 1e-4);
}

#[test]
fn t_pm_poles_and_parity() {
    assert!(t_pm(c(0.0, 0.0), Sign::Plus).at_pole);
    assert!(t_pm(c(1.0, 0.0), Sign::Plus).at_pole);
    assert!(t_pm(c(0.5, 0.0), Sign::Minus).at_pole);
    for &s in &[c(0.3, 4.0), c(-0.7, 11.0), c(1.9, 2.5)] {
        let r = c(1.0, 0.0) - s;
        let (p, pr) = (t_pm(s, Sign::Plus).value, t_pm(r, Sign::Plus).value);
        let (m, mr) = (t_pm(s, Sign::Minus).value, t_pm(r, Sign::Minus).value);
        assert!((p - pr).norm() < 1e-10 * p.norm().max(1e-300), "{s}");
        assert!((m + mr).norm() < 1e-10 * m.norm().max(1e-300), "{s}");
    }
}

#[test]
fn special_values_of_w() {
    let w = uvw(c(0.5, 0.0), Uvw::W).value;
    assert!((w + 1.0).norm() < 1e-10, "{w}");
    let w0 = uvw(c(0.0, 0.0), Uvw::W).value;
    assert!((w0 + ComplexValue::i()).norm() < 1e-12, "{w0}");
}

#[test]
fn u_reciprocal_under_reflection() {
    let s = c(0.6, 9.0);
    let a = uvw(s, Uvw::U).value;
    let b = uvw(c(1.0, 0.0) - s, Uvw::U).value;
    assert!((a * b - 1.0).norm() < 1e-9);
    let direct = u_state(s, Route::Direct).u * u_state(c(1.0, 0.0) - s, Route::Direct).u;
    assert!((direct - 1.0).norm() < 1e-9);
}

#[test]
fn v_on_critical_line_is_cot_of_theta() {
    let v = uvw(c(0.5, 10.0), Uvw::V).value;
    assert!(v.re.abs() < 1e-9 * v.norm());
    let expected = -1.0 / theta1(10.0).tan();
    assert!((v.im - expected).abs() < 1e-9 * v.norm(), "{v} vs {expected}");
}

#[test]
fn w_on_critical_line_is_tan() {
    for t in [3.0, 17.5, 250.0] {
        let w = uvw(c(0.5, t), Uvw::W).value;
        let expected = (theta1(t) + core::f64::consts::FRAC_PI_4).tan();
        assert!(w.im.abs() < 1e-9 * w.norm().max(1.0));
        assert!((w.re - expected).abs() < 1e-8 * expected.abs().max(1.0), "t={t}: {w} vs {expected}");
    }
}

#[test]
fn a0_at_unit_y_is_four_t_plus() {
    let s = c(0.4, 6.0);
    let a = aux(s, Aux::A0, 1.0).value;
    let t = t_pm(s, Sign::Plus).value * 4.0;
    assert!((a - t).norm() < 1e-9 * t.norm());
}

#[test]
fn f_ki_at_unit_y_is_the_cubic_times_sum() {
    let s = c(0.4, 6.0);
    let f = aux(s, Aux::FKi, 1.0).value;
    let k = s * (s - 1.0) * (s * 2.0 - 1.0);
    let sum = xi1(s * 2.0, XiVariant::Xi1).value + xi1(s * 2.0 - 1.0, XiVariant::Xi1).value;
    assert!((f - k * sum).norm() < 1e-9 * f.norm());
    // and not the difference
    let diff = xi1(s * 2.0, XiVariant::Xi1).value - xi1(s * 2.0 - 1.0, XiVariant::Xi1).value;
    assert!((f - k * diff).norm() > 1e-3 * f.norm());
}

#[test]
fn a0_limit_at_half() {
    let y: f64 = 3.0;
    let a = aux(c(0.5, 0.0), Aux::A0, y).value;
    let expected = y.sqrt() * (y.ln() + EULER_GAMMA - (4.0 * core::f64::consts::PI).ln());
    assert!((a.re - expected).abs() < 1e-9, "{a} vs {expected}");
}

#[test]
fn f_ki_is_entire_at_zero_and_one() {
    for s in [c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0)] {
        assert!(aux(s, Aux::FKi, 2.0).value.is_finite());
    }
    assert!(aux(c(0.0, 0.0), Aux::A0, 2.0).at_pole);
    assert!(aux(c(1.0, 0.0), Aux::ILs, 2.0).at_pole);
}

#[test]
fn i_ls_against_direct_formula() {
    let s = c(0.3, 7.0);
    let big_t: f64 = 5.0;
    let x2 = xi1(s * 2.0, XiVariant::Xi1).value;
    let x22 = xi1(c(2.0, 0.0) - s * 2.0, XiVariant::Xi1).value;
    let lt = big_t.ln();
    let expected = -x2 * ((s - 1.0) * lt).exp() / (s - 1.0) + x22 * (-s * lt).exp() / s;
    let got = aux(s, Aux::ILs, big_t).value;
    assert!((got - expected).norm() < 1e-9 * expected.norm());
}

#[test]
fn counterexample_factor() {
    let spec = CounterexampleSpec::new(0.05, 418.85, vec![]).unwrap();
    let z = counterexample(c(0.8, 418.85), &spec, Counterexample::F).value;
    assert!(z.norm() < 1e-12);
    assert!(counterexample(c(0.3, 418.85), &spec, Counterexample::F).at_pole);
    for &s in &[c(0.1, 3.0), c(0.6, 418.0), c(2.0, -5.0)] {
        let a = counterexample(s, &spec, Counterexample::F).value;
        let b = counterexample(c(1.0, 0.0) - s, &spec, Counterexample::F).value;
        assert!((a * b - 1.0).norm() < 1e-12);
    }
    assert!(CounterexampleSpec::new(0.25, 400.0, vec![]).is_err());
    assert!(CounterexampleSpec::new(0.1, 400.0, vec![(0.3, 10.0)]).is_err());
}

#[test]
fn dominance_threshold_value() {
    let t = dominance_threshold(7.067_362_6).unwrap();
    assert!((t - 4.08046).abs() < 1e-3, "{t}");
}

#[test]
fn normal_form_constants_match_definition() {
    let s3 = 3f64.sqrt();
    let v1 = ComplexValue::from_polar((2.0 + s3).sqrt(), -core::f64::consts::FRAC_PI_4);
    let v2 = ComplexValue::from_polar((2.0 - s3).sqrt(), 3.0 * core::f64::consts::FRAC_PI_4);
    assert!((NORMAL_FORM.v1 - v1).norm() < 1e-15);
    assert!((NORMAL_FORM.v2 - v2).norm() < 1e-15);
    assert!((NORMAL_FORM.v3 - c(-0.5, s3 / 2.0)).norm() < 1e-15);
}

#[test]
fn asymptotic_quadrant_and_coefficients() {
    let s = c(3.0, 400.0);
    let u = uvw(s, Uvw::U).value;
    assert!(u.re > 0.0 && u.im < 0.0);
    let u_lead = asymptotics(s, Asymptotic::ULead);
    assert!((u - u_lead).norm() < 0.02 * u.norm());
    let w = uvw(s, Uvw::W).value;
    let t = s.im;
    assert!((w - asymptotics(s, Asymptotic::WF12)).norm() < 5.0 / t);
    let v = uvw(s, Uvw::V).value;
    assert!((v.arg() - asymptotics(s, Asymptotic::ArgV).re).abs() < 5.0 / t);
    // the √(2/t) estimators miss the real part by the factor √π noted in the docs
    let ratio = (v.norm() - 1.0) / (asymptotics(s, Asymptotic::AbsV).re - 1.0);
    assert!((ratio - core::f64::consts::PI.sqrt()).abs() < 0.1 * ratio, "{ratio}");
    assert!((w.im - asymptotics(s, Asymptotic::WLead).im).abs() < 5.0 / t);
}

#[test]
fn derivative_chain_consistency() {
    let s = c(0.3, 40.0);
    let st = u_state(s, Route::Symmetric);
    let h = 1e-5;
    let num = |z: ComplexValue| u_state(z, Route::Symmetric);
    let dv = (num(s + h).v() - num(s - h).v()) / (2.0 * h);
    assert!((dv - st.v() * st.dlog_v()).norm() < 1e-6 * dv.norm().max(1.0));
    let dw = (num(s + h).w() - num(s - h).w()) / (2.0 * h);
    assert!((dw - st.w() * st.dlog_w()).norm() < 1e-6 * dw.norm().max(1.0));
}

#[test]
fn grid_rows_match_points() {
    let sigmas = vec![-0.7, 0.1, 0.25, 0.5, 0.6, 2.0];
    let grid = UGrid::new(sigmas.clone(), 500.0);
    for t in [0.0, 3.0, 417.2, -20.0] {
        for (st, &sg) in grid.row(t).iter().zip(&sigmas) {
            let p = u_state(c(sg, t), Route::Symmetric);
            if p.pole {
                assert!(st.pole);
                continue;
            }
            assert!((st.u - p.u).norm() < 1e-11 * p.u.norm().max(1e-300), "{sg} {t}: {} {}", st.u, p.u);
            if p.dlog_u.is_finite() {
                assert!((st.dlog_u - p.dlog_u).norm() < 1e-9 * p.dlog_u.norm().max(1.0));
            }
        }
    }
}

use super::*;
use crate::critline::{line_zeros, ordinates, FunctionId};
use crate::planar::Window;

fn rect(a: f64, b: f64, lo: f64, hi: f64) -> Window {
    Window::new(a, b, lo, hi).unwrap()
}

#[test]
fn tplus_census_near_the_origin() {
    // one zero at 6.97468, poles at 0 and 1
    let r = winding_count(CountFn::Tplus, rect(-1.0, 2.0, 0.0, 10.0), None).unwrap();
    assert_eq!(r.winding, -1);
    assert!(r.nudges >= 1);
}

#[test]
fn xi_two_s_counts_zeta_zeros_to_one_hundred() {
    let r = winding_count(CountFn::Xi1TwoS, rect(0.0, 0.5, 0.0, 50.0), None).unwrap();
    assert_eq!(r.winding, 29);
}

#[test]
fn u_winding_flips_under_reflection() {
    let r = rect(0.6, 1.3, 100.0, 104.0);
    let a = winding_count(CountFn::U, r, None).unwrap();
    let b = winding_count(CountFn::U, r.mirrored(), None).unwrap();
    assert_eq!(a.winding, -b.winding);
    assert!(a.winding > 0);
}

#[test]
fn counts_are_additive_and_nudge_stable() {
    let whole = winding_count(CountFn::Tplus, rect(-1.0, 2.0, 20.0, 60.0), None).unwrap();
    let lo = winding_count(CountFn::Tplus, rect(-1.0, 2.0, 20.0, 41.3), None).unwrap();
    let hi = winding_count(CountFn::Tplus, rect(-1.0, 2.0, 41.3, 60.0), None).unwrap();
    assert_eq!(whole.winding, lo.winding + hi.winding);
    let moved = winding_count(CountFn::Tplus, rect(-0.97, 1.95, 20.02, 59.97), None).unwrap();
    assert_eq!(moved.winding, whole.winding);
}

#[test]
fn strip_censuses_match_tables() {
    let tp = ordinates(&line_zeros(FunctionId::Tplus, 100.0).unwrap());
    let tm = ordinates(&line_zeros(FunctionId::Tminus, 100.0).unwrap());
    let a = winding_count(CountFn::Tplus, rect(-1.0, 2.0, 0.0, 100.0), None).unwrap();
    let b = winding_count(CountFn::Tminus, rect(-1.0, 2.0, 0.0, 100.0), None).unwrap();
    assert_eq!(a.winding, tp.len() as i64 - 2);
    assert_eq!(b.winding, tm.len() as i64 - 3);
}

#[test]
fn singular_boundary_without_room_to_nudge_fails() {
    // a σ-range too thin to survive inward nudges
    assert!(winding_count(CountFn::Tplus, rect(0.995, 1.005, 0.0, 1.0), None).is_err());
}

#[test]
fn main_terms() {
    assert!((main_term(1000.0, MainTerm::Xi1TwoS).unwrap() - 1516.1).abs() < 0.1);
    assert!((main_term(100.0, MainTerm::Xi1TwoS).unwrap() - 78.3).abs() < 0.1);
    assert_eq!(main_term(50.0, MainTerm::A0 { y: 1.0 }).unwrap(), main_term(50.0, MainTerm::Xi1TwoS).unwrap());
    assert!(main_term(1.0, MainTerm::Xi1TwoS).is_err());
    assert!(main_term(10.0, MainTerm::A0 { y: 0.5 }).is_err());
}

#[test]
fn tplus_count_at_one_hundred() {
    let r = count_compare(CountFn::Tplus, 100.0, None).unwrap();
    assert!(r.deviation.unwrap().abs() <= deviation_bound(100.0));
}

#[test]
fn a0_census_to_thirty() {
    let r = count_compare(CountFn::A0 { y: 2.0 }, 30.0, None).unwrap();
    assert!(r.deviation.unwrap().abs() <= 8.0, "{r:?}");
}

#[test]
fn y_star_threshold() {
    for y in [1.0, 4.0, 7.0] {
        assert!(y_star_scan(y).unwrap().is_empty(), "{y}");
    }
    for y in [7.2, 10.0, 20.0] {
        let z = y_star_scan(y).unwrap();
        assert_eq!(z.len(), 2, "{y}");
        assert!((z[0] + z[1] - 1.0).abs() < 1e-9);
    }
    let near = y_star_scan(Y_STAR + 1e-3).unwrap();
    let far = y_star_scan(7.2).unwrap();
    assert!(near[1] - near[0] < far[1] - far[0]);
    let (lo, hi) = bifurcation_bracket(7.0, 7.2, 1e-3).unwrap();
    assert!(lo <= Y_STAR + 1e-3 && hi >= Y_STAR - 1e-3);
}

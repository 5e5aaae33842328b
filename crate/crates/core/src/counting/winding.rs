use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::combinators::{oa_state, u_state, CounterexampleSpec, Route, UState};
use crate::complexfn::{principal_angle as principal, ComplexValue};
use crate::error::{Error, Result};
use crate::planar::Window;

const ACCEPT_STEP: f64 = PI / 4.0;
const INITIAL_SPACING: f64 = 0.02;
const MIN_SEGMENT: f64 = 1e-7;
const INTEGER_TOL: f64 = 0.05;
const CLEARANCE: f64 = 1e-3;
const NUDGE: f64 = 1e-2;
const MAX_NUDGES: usize = 5;

/// Functions whose zeros minus poles can be counted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CountFn {
    Tplus,
    Tminus,
    Xi1TwoS,
    U,
    V,
    W,
    A0 { y: f64 },
    /// `U·F` for the counterexample given to [`winding_count`].
    UOa,
}

impl CountFn {
    pub fn name(&self) -> &'static str {
        match self {
            CountFn::Tplus => "Tplus",
            CountFn::Tminus => "Tminus",
            CountFn::Xi1TwoS => "xi1_2s",
            CountFn::U => "U",
            CountFn::V => "V",
            CountFn::W => "W",
            CountFn::A0 { .. } => "a0_y",
            CountFn::UOa => "U_oa",
        }
    }

    /// Real-axis poles, which the boundary must keep clear of.
    pub fn real_poles(&self) -> &'static [f64] {
        match self {
            CountFn::Tplus | CountFn::A0 { .. } => &[0.0, 1.0],
            CountFn::Tminus => &[0.0, 0.5, 1.0],
            CountFn::Xi1TwoS => &[0.0, 0.5],
            CountFn::U | CountFn::V | CountFn::W | CountFn::UOa => &[0.0, 0.5, 1.0],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub fn_id: CountFn,
    /// Rectangle as requested.
    pub rect: Window,
    /// Rectangle actually integrated over, after nudges.
    pub used_rect: Window,
    pub nudges: usize,
    /// Zeros minus poles inside `used_rect`.
    pub winding: i64,
    pub raw_winding: f64,
    pub samples: usize,
    pub formula_value: Option<f64>,
    pub deviation: Option<f64>,
}


fn finite(st: &UState) -> bool {
    !st.pole && st.u.is_finite() && st.log_xi_2s.is_finite()
}

/// `arg f(s)`, assembled from logarithms so that nothing under- or overflows.
fn arg_of(f: CountFn, s: ComplexValue, spec: Option<&CounterexampleSpec>) -> Option<f64> {
    let one = ComplexValue::new(1.0, 0.0);
    let st = match f {
        CountFn::UOa => oa_state(s, spec?),
        _ => u_state(s, Route::Symmetric),
    };
    if !finite(&st) {
        return None;
    }
    let u = st.u;
    let a = match f {
        CountFn::Xi1TwoS => st.log_xi_2s.im,
        CountFn::Tplus => st.log_xi_2s.im + (one + u).arg(),
        CountFn::Tminus => st.log_xi_2s.im + (one - u).arg(),
        CountFn::U | CountFn::UOa => u.arg(),
        CountFn::V => ((one + u) / (one - u)).arg(),
        CountFn::W => st.w().arg(),
        CountFn::A0 { y } => {
            // a₀ = ξ₁(2s) yˢ (1 + U y^{1-2s})
            let ln_y = y.ln();
            let g = ((one - s * 2.0) * ln_y).exp();
            st.log_xi_2s.im + s.im * ln_y + (one + u * g).arg()
        }
    };
    a.is_finite().then_some(a)
}

fn side_change(
    f: CountFn,
    a: ComplexValue,
    b: ComplexValue,
    spec: Option<&CounterexampleSpec>,
) -> Result<(f64, usize)> {
    let n = (((b - a).norm() / INITIAL_SPACING).ceil() as usize).max(4);
    let at = |s: ComplexValue| arg_of(f, s, spec).ok_or(Error::BoundarySingularity { near: s });
    let mut total = 0.0;
    let mut samples = 1;
    let mut p = a;
    let mut ap = at(a)?;
    for k in 1..=n {
        let q = a + (b - a) * (k as f64 / n as f64);
        let aq = at(q)?;
        let mut stack: Vec<(ComplexValue, f64, ComplexValue, f64)> = alloc::vec![(p, ap, q, aq)];
        while let Some((x, ax, y, ay)) = stack.pop() {
            let d = principal(ay - ax);
            if d.abs() < ACCEPT_STEP {
                total += d;
                continue;
            }
            if (y - x).norm() < MIN_SEGMENT {
                return Err(Error::BoundarySingularity { near: (x + y) * 0.5 });
            }
            let m = (x + y) * 0.5;
            let am = at(m)?;
            samples += 1;
            // push the far half first so the near half is summed first
            stack.push((m, am, y, ay));
            stack.push((x, ax, m, am));
        }
        samples += 1;
        p = q;
        ap = aq;
    }
    Ok((total, samples))
}

fn boundary_change(f: CountFn, r: &Window, spec: Option<&CounterexampleSpec>) -> Result<(f64, usize)> {
    let corners = [
        ComplexValue::new(r.sigma_lo, r.t_lo),
        ComplexValue::new(r.sigma_hi, r.t_lo),
        ComplexValue::new(r.sigma_hi, r.t_hi),
        ComplexValue::new(r.sigma_lo, r.t_hi),
    ];
    let sides: Vec<(ComplexValue, ComplexValue)> = (0..4).map(|k| (corners[k], corners[(k + 1) % 4])).collect();
    let parts = eval_sides(f, &sides, spec);
    let mut total = 0.0;
    let mut samples = 0;
    for p in parts {
        let (d, n) = p?;
        total += d;
        samples += n;
    }
    Ok((total, samples))
}

#[cfg(feature = "parallel")]
fn eval_sides(f: CountFn, sides: &[(ComplexValue, ComplexValue)], spec: Option<&CounterexampleSpec>) -> Vec<Result<(f64, usize)>> {
    use rayon::prelude::*;
    sides.par_iter().map(|&(a, b)| side_change(f, a, b, spec)).collect()
}

#[cfg(not(feature = "parallel"))]
fn eval_sides(f: CountFn, sides: &[(ComplexValue, ComplexValue)], spec: Option<&CounterexampleSpec>) -> Vec<Result<(f64, usize)>> {
    sides.iter().map(|&(a, b)| side_change(f, a, b, spec)).collect()
}

fn clear_of_known_poles(f: CountFn, r: &Window, spec: Option<&CounterexampleSpec>) -> bool {
    let mut pts: Vec<ComplexValue> = f.real_poles().iter().map(|&x| ComplexValue::new(x, 0.0)).collect();
    if let (CountFn::UOa, Some(sp)) = (f, spec) {
        pts.extend(sp.zeros());
        pts.extend(sp.poles());
    }
    pts.iter().all(|p| {
        let dx = if p.re < r.sigma_lo { r.sigma_lo - p.re } else if p.re > r.sigma_hi { p.re - r.sigma_hi } else { 0.0 };
        let dy = if p.im < r.t_lo { r.t_lo - p.im } else if p.im > r.t_hi { p.im - r.t_hi } else { 0.0 };
        let outside = dx > 0.0 || dy > 0.0;
        let dist = if outside {
            (dx * dx + dy * dy).sqrt()
        } else {
            (p.re - r.sigma_lo).min(r.sigma_hi - p.re).min(p.im - r.t_lo).min(r.t_hi - p.im)
        };
        dist >= CLEARANCE
    })
}

/// The `k`-th nudge: `t` edges move outward and `σ` edges inward by `k·10⁻²`.
fn nudged(r: &Window, k: usize) -> Window {
    let d = NUDGE * k as f64;
    Window { sigma_lo: r.sigma_lo + d, sigma_hi: r.sigma_hi - d, t_lo: r.t_lo - d, t_hi: r.t_hi + d }
}

/// Zeros minus poles of `f` inside `rect`, by the argument principle.
///
/// The boundary is walked counter-clockwise and bisected until each step changes the
/// argument by less than `π/4`. If the boundary passes within `10⁻³` of a known pole, hits a
/// singularity, or the total is not within 0.05 of an integer, the rectangle is nudged
/// (`t` edges out, `σ` edges in, by `10⁻²` per retry) up to five times.
pub fn winding_count(f: CountFn, rect: Window, spec: Option<&CounterexampleSpec>) -> Result<CountReport> {
    rect.check_domain()?;
    if let CountFn::A0 { y } = f {
        if !(y > 0.0 && y.is_finite()) {
            return Err(Error::Domain("a0 needs y > 0"));
        }
    }
    if f == CountFn::UOa && spec.is_none() {
        return Err(Error::Domain("U_oa needs a counterexample spec"));
    }
    let mut last = Error::Domain("winding_count: no attempt made");
    for k in 0..=MAX_NUDGES {
        let r = nudged(&rect, k);
        if r.sigma_lo >= r.sigma_hi {
            break;
        }
        if !clear_of_known_poles(f, &r, spec) {
            last = Error::BoundarySingularity { near: ComplexValue::new(r.sigma_lo, r.t_lo) };
            continue;
        }
        match boundary_change(f, &r, spec) {
            Ok((total, samples)) => {
                let w = total / TAU;
                let rounded = w.round();
                if (w - rounded).abs() > INTEGER_TOL {
                    last = Error::NonIntegerWinding(w);
                    continue;
                }
                return Ok(CountReport {
                    fn_id: f,
                    rect,
                    used_rect: r,
                    nudges: k,
                    winding: rounded as i64,
                    raw_winding: w,
                    samples,
                    formula_value: None,
                    deviation: None,
                });
            }
            Err(e) => last = e,
        }
    }
    Err(last)
}

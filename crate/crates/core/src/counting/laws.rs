use alloc::vec::Vec;
use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::winding::{winding_count, CountFn, CountReport};
use crate::critline::{line_zeros, ordinates, FunctionId};
use crate::error::{Error, Result};
use crate::planar::Window;

/// Which distribution law [`main_term`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MainTerm {
    /// `N(ξ₁(2s), T) ≈ (T/π) log T − (T/π)(log π + 1)`.
    Xi1TwoS,
    /// The `ξ₁(2s)` law plus `(2/π)(log y) T`.
    A0 { y: f64 },
}

pub fn main_term(t: f64, which: MainTerm) -> Result<f64> {
    if !(t >= 2.0) {
        return Err(Error::Domain("main_term needs T >= 2"));
    }
    let base = t / PI * t.ln() - t / PI * (PI.ln() + 1.0);
    match which {
        MainTerm::Xi1TwoS => Ok(base),
        MainTerm::A0 { y } if y >= 1.0 => Ok(base + 2.0 / PI * y.ln() * t),
        MainTerm::A0 { .. } => Err(Error::Domain("a0 main term needs y >= 1")),
    }
}

/// Tolerance applied to `|count − main term|` for `T ≤ 1000`.
pub fn deviation_bound(t: f64) -> f64 {
    10.0 + 2.0 * t.ln()
}

/// σ-range used for winding censuses of `a₀`.
pub const A0_STRIP: (f64, f64) = (-2.0, 3.0);

/// Count zeros with `0 ≤ t ≤ T` and compare with the main term.
///
/// `T₊`, `T₋` and `ξ₁(2s)` are counted from critical-line tables (`table` may supply the
/// ordinates; otherwise they are computed). `a₀(y, ·)` is counted by winding over
/// `σ ∈ [-2, 3]`, adding back its poles at `s = 0, 1`.
pub fn count_compare(f: CountFn, t: f64, table: Option<&[f64]>) -> Result<CountReport> {
    let (count, rect, used, nudges, raw) = match f {
        CountFn::Tplus | CountFn::Tminus | CountFn::Xi1TwoS => {
            let n = match table {
                Some(ts) => ts.iter().filter(|&&x| x >= 0.0 && x <= t).count(),
                None => {
                    let fid = match f {
                        CountFn::Tplus => FunctionId::Tplus,
                        CountFn::Tminus => FunctionId::Tminus,
                        _ => FunctionId::ZetaLine,
                    };
                    ordinates(&line_zeros(fid, t)?).iter().filter(|&&x| x <= t).count()
                }
            };
            let r = Window { sigma_lo: 0.5, sigma_hi: 0.5, t_lo: 0.0, t_hi: t };
            (n as i64, r, r, 0, n as f64)
        }
        CountFn::A0 { .. } => {
            let rect = Window::new(A0_STRIP.0, A0_STRIP.1, 0.0, t)?;
            let w = winding_count(f, rect, None)?;
            let poles = f.real_poles().iter().filter(|&&x| x > w.used_rect.sigma_lo && x < w.used_rect.sigma_hi).count() as i64;
            let poles = if w.used_rect.t_lo < 0.0 { poles } else { 0 };
            (w.winding + poles, rect, w.used_rect, w.nudges, w.raw_winding + poles as f64)
        }
        _ => return Err(Error::Domain("count_compare supports Tplus, Tminus, xi1_2s and a0_y")),
    };
    let law = match f {
        CountFn::A0 { y } => MainTerm::A0 { y },
        _ => MainTerm::Xi1TwoS,
    };
    let formula = main_term(t, law)?;
    Ok(CountReport {
        fn_id: f,
        rect,
        used_rect: used,
        nudges,
        winding: count,
        raw_winding: raw,
        samples: 0,
        formula_value: Some(formula),
        deviation: Some(count as f64 - formula),
    })
}

/// Slope of `N(a₀(y,·), T) − N(ξ₁(2s), T)` in `T` over `[t_lo, t_hi]`, by least squares on
/// the censuses of `n` equal strips of `σ ∈ [-2, 3]`.
///
/// Returns `(slope, cumulative differences at the strip tops)`.
pub fn a0_excess_slope(y: f64, t_lo: f64, t_hi: f64, n: usize) -> Result<(f64, Vec<(f64, f64)>)> {
    if !(t_lo > 0.0 && t_lo < t_hi && n >= 2) {
        return Err(Error::Domain("a0_excess_slope needs 0 < t_lo < t_hi and n >= 2"));
    }
    let h = (t_hi - t_lo) / n as f64;
    let mut points = alloc::vec![(t_lo, 0.0)];
    let mut acc = 0.0;
    for k in 0..n {
        let r = Window::new(A0_STRIP.0, A0_STRIP.1, t_lo + h * k as f64, t_lo + h * (k + 1) as f64)?;
        let a = winding_count(CountFn::A0 { y }, r, None)?;
        let x = winding_count(CountFn::Xi1TwoS, r, None)?;
        acc += (a.winding - x.winding) as f64;
        points.push((r.t_hi, acc));
    }
    let m = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (num, den) = points.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + (x - mx) * (y - my), b + (x - mx) * (x - mx)));
    Ok((num / den, points))
}

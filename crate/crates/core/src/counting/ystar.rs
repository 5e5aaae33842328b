use alloc::vec::Vec;

use crate::combinators::{aux, Aux};
use crate::complexfn::ComplexValue;
use crate::error::{Error, Result};
use crate::roots::refine;

/// `4π e^{-γ}`.
pub const Y_STAR: f64 = 7.055_507_955_605_594;

const SCAN_POINTS: usize = 4000;
const EDGE: f64 = 1e-3;

fn a0_real(y: f64, sigma: f64) -> f64 {
    aux(ComplexValue::new(sigma, 0.0), Aux::A0, y).value.re
}

/// Real zeros of `a₀(y, σ)` with `0 < σ < 1`, ascending.
///
/// `a₀(y, ·)` is real and symmetric about `σ = 1/2` on the real axis, so only `(0, 1/2]`
/// is scanned and each zero is reported together with its mirror image.
pub fn y_star_scan(y: f64) -> Result<Vec<f64>> {
    if !(y >= 1.0 && y.is_finite()) {
        return Err(Error::Domain("y_star_scan needs y >= 1"));
    }
    let f = |x: f64| a0_real(y, x);
    let mut out = Vec::new();
    let (lo, hi) = (EDGE, 0.5);
    let h = (hi - lo) / SCAN_POINTS as f64;
    let mut a = lo;
    let mut fa = f(a);
    for k in 1..=SCAN_POINTS {
        let b = lo + h * k as f64;
        let fb = f(b);
        if (fa > 0.0) != (fb > 0.0) {
            let br = refine(f, a, b, fa, fb, 1e-9, 1e-13)?;
            out.push(br.mid());
        }
        a = b;
        fa = fb;
    }
    let mirrored: Vec<f64> = out.iter().rev().map(|x| 1.0 - x).filter(|x| *x > 0.5).collect();
    out.extend(mirrored);
    Ok(out)
}

/// Bisect on `y` for the onset of real zeros in `(0, 1)`, between `lo` (none) and `hi` (some).
pub fn bifurcation_bracket(mut lo: f64, mut hi: f64, width: f64) -> Result<(f64, f64)> {
    if !y_star_scan(lo)?.is_empty() || y_star_scan(hi)?.is_empty() {
        return Err(Error::Domain("bifurcation bracket must start with no zeros at lo and zeros at hi"));
    }
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if y_star_scan(mid)?.is_empty() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

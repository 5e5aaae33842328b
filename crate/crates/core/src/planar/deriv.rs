use alloc::vec::Vec;


use super::classify::{classify_state, Quadrant};
use super::grid::{point_state, state_grid, Window};
use crate::combinators::CounterexampleSpec;
use crate::complexfn::ComplexValue;
use crate::error::{Error, Result};

const SEED_GRID: usize = 64;
const RESIDUAL: f64 = 1e-8;
const MERGE: f64 = 1e-6;
const NEWTON_ITERS: usize = 40;
const DIFF_STEP: f64 = 1e-4;

/// A zero of `U'` (equivalently of `V'` and `W'`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeZero {
    pub location: ComplexValue,
    pub abs_v: f64,
    /// `|U'/U|` at the returned location.
    pub residual: f64,
    /// `None` when `U` is too close to a zero or pole to have an argument.
    pub quadrant: Option<Quadrant>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeZeroScan {
    pub window: Window,
    pub zeros: Vec<DerivativeZero>,
    pub seeds: usize,
    /// Seeds whose Newton iteration did not converge (or left the window).
    pub failed_seeds: usize,
}

/// Zeros of `U'` in `window` (height at most 5).
///
/// Seeds are the cells of a 64×64 lattice of `U'/U` on which both the real and imaginary
/// parts change sign. Each seed is polished by complex Newton on `U'/U`, with the derivative
/// of `U'/U` taken by a central difference, until `|U'/U| < 10⁻⁸`; results closer than
/// `10⁻⁶` are merged. Seeds that fail are counted, not reported as errors.
pub fn derivative_zeros(window: Window, spec: Option<&CounterexampleSpec>) -> Result<DerivativeZeroScan> {
    if window.height() > 5.0 {
        return Err(Error::Domain("derivative_zeros window height must be <= 5"));
    }
    let sg = state_grid(window, SEED_GRID, SEED_GRID, spec)?;
    let n = SEED_GRID;
    let f = |i: usize, j: usize| sg.states[j * n + i].dlog_u;
    let mut seeds = Vec::new();
    for j in 0..n - 1 {
        for i in 0..n - 1 {
            let c = [f(i, j), f(i + 1, j), f(i + 1, j + 1), f(i, j + 1)];
            if c.iter().any(|z| !z.is_finite()) {
                continue;
            }
            let re_change = c.iter().any(|z| z.re > 0.0) && c.iter().any(|z| z.re <= 0.0);
            let im_change = c.iter().any(|z| z.im > 0.0) && c.iter().any(|z| z.im <= 0.0);
            if re_change && im_change {
                seeds.push((sg.states[j * n + i].s + sg.states[(j + 1) * n + i + 1].s) * 0.5);
            }
        }
    }
    let cell = (window.width() / (n - 1) as f64).max(window.height() / (n - 1) as f64);
    let accept = Window { sigma_lo: window.sigma_lo - cell, sigma_hi: window.sigma_hi + cell, t_lo: window.t_lo - cell, t_hi: window.t_hi + cell };
    let results = polish_all(&seeds, spec, cell);
    let mut zeros: Vec<DerivativeZero> = Vec::new();
    let mut failed = 0;
    for r in results {
        match r {
            Some(z) if accept.contains(z.location) => {
                if !zeros.iter().any(|q| (q.location - z.location).norm() < MERGE) {
                    zeros.push(z);
                }
            }
            _ => failed += 1,
        }
    }
    zeros.sort_by(|a, b| a.location.im.total_cmp(&b.location.im).then(a.location.re.total_cmp(&b.location.re)));
    Ok(DerivativeZeroScan { window, zeros, seeds: seeds.len(), failed_seeds: failed })
}

#[cfg(feature = "parallel")]
fn polish_all(seeds: &[ComplexValue], spec: Option<&CounterexampleSpec>, cell: f64) -> Vec<Option<DerivativeZero>> {
    use rayon::prelude::*;
    seeds.par_iter().map(|&s| polish(s, spec, cell)).collect()
}

#[cfg(not(feature = "parallel"))]
fn polish_all(seeds: &[ComplexValue], spec: Option<&CounterexampleSpec>, cell: f64) -> Vec<Option<DerivativeZero>> {
    seeds.iter().map(|&s| polish(s, spec, cell)).collect()
}

fn dlog(s: ComplexValue, spec: Option<&CounterexampleSpec>) -> ComplexValue {
    point_state(s, spec).dlog_u
}

/// Newton on `U'/U` from `s`, steps capped at `4·cell`.
pub(crate) fn polish(mut s: ComplexValue, spec: Option<&CounterexampleSpec>, cell: f64) -> Option<DerivativeZero> {
    let h = ComplexValue::new(DIFF_STEP, 0.0);
    for _ in 0..NEWTON_ITERS {
        let st = point_state(s, spec);
        let g = st.dlog_u;
        if !g.is_finite() {
            return None;
        }
        if g.norm() < RESIDUAL {
            let quadrant = classify_state(&st).ok().map(|c| c.quadrant);
            return Some(DerivativeZero { location: s, abs_v: st.v().norm(), residual: g.norm(), quadrant });
        }
        let dg = (dlog(s + h, spec) - dlog(s - h, spec)) / (h * 2.0);
        let mut step = g / dg;
        if !step.is_finite() {
            return None;
        }
        let len = step.norm();
        if len > 4.0 * cell {
            step *= 4.0 * cell / len;
        }
        s -= step;
    }
    None
}

/// Zero of `F'/F` for the off-axis factor alone, by Newton from `seed`.
pub fn factor_derivative_zero(spec: &CounterexampleSpec, seed: ComplexValue) -> Result<ComplexValue> {
    let (zeros, poles) = (spec.zeros(), spec.poles());
    let mut s = seed;
    for _ in 0..NEWTON_ITERS {
        let mut g = ComplexValue::new(0.0, 0.0);
        let mut dg = ComplexValue::new(0.0, 0.0);
        for (&z, &p) in zeros.iter().zip(&poles) {
            let (a, b) = ((s - z).inv(), (s - p).inv());
            g += a - b;
            dg += b * b - a * a;
        }
        if !g.is_finite() {
            return Err(Error::Pole(s));
        }
        let mut step = g / dg;
        // the ordinate costs ~10⁻¹³ of absolute precision in each `s - z`
        if g.norm() < 1e-10 || step.norm() < 1e-13 {
            return Ok(s);
        }
        if step.norm() > 0.01 {
            step *= 0.01 / step.norm();
        }
        s -= step;
    }
    Err(Error::NoConvergence("factor derivative zero"))
}

//! Derivative-free refinement of bracketed real roots.

use crate::{Error, Result};

/// A root bracketed to the requested width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub evals: usize,
}

impl Bracket {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

fn same_sign(a: f64, b: f64) -> bool {
    (a > 0.0) == (b > 0.0)
}

/// Shrink a sign-change bracket `[lo, hi]` of `f`: bisection down to `bisect_width`, then
/// secant steps, each verified by a pair of probes `final_width` apart.
pub fn refine<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    mut f_hi: f64,
    bisect_width: f64,
    final_width: f64,
) -> Result<Bracket> {
    if !(lo < hi) || same_sign(f_lo, f_hi) && f_lo != 0.0 && f_hi != 0.0 {
        return Err(Error::Domain("refine: interval does not bracket a sign change"));
    }
    let mut evals = 0;
    if f_lo == 0.0 {
        return Ok(Bracket { lo, hi: lo, evals });
    }
    if f_hi == 0.0 {
        return Ok(Bracket { lo: hi, hi, evals });
    }
    while hi - lo > bisect_width {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        evals += 1;
        if fm == 0.0 {
            return Ok(Bracket { lo: mid, hi: mid, evals });
        }
        if same_sign(fm, f_lo) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    let h = 0.45 * final_width;
    for _ in 0..60 {
        if hi - lo < final_width {
            return Ok(Bracket { lo, hi, evals });
        }
        let mut x = hi - f_hi * (hi - lo) / (f_hi - f_lo);
        if !(x > lo && x < hi) {
            x = 0.5 * (lo + hi);
        }
        let a = (x - h).max(lo);
        let b = (x + h).min(hi);
        let fa = f(a);
        let fb = f(b);
        evals += 2;
        if !same_sign(fa, fb) || fa == 0.0 || fb == 0.0 {
            return Ok(Bracket { lo: a, hi: b, evals });
        }
        if same_sign(fa, f_lo) {
            lo = b;
            f_lo = fb;
        } else {
            hi = a;
            f_hi = fa;
        }
    }
    Err(Error::NoConvergence("bracket refinement"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_root_to_width() {
        let f = |x: f64| x * x * x - 2.0;
        let b = refine(f, 0.0, 3.0, f(0.0), f(3.0), 1e-6, 1e-8).unwrap();
        assert!(b.width() < 1e-8);
        assert!((b.mid() - 2f64.cbrt()).abs() < 1e-8);
        assert!(b.evals < 40);
    }

    #[test]
    fn rejects_non_bracket() {
        let f = |x: f64| x * x + 1.0;
        assert!(refine(f, -1.0, 1.0, 2.0, 2.0, 1e-6, 1e-8).is_err());
    }
}

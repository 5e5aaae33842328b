//! `U = ξ₁(2s-1)/ξ₁(2s)` with its log-derivative, and the Möbius images `V`, `W`, `T±`.

use alloc::vec::Vec;


use crate::complexfn::{log_xi1, log_xi_from_em, EmSum, LogXi, ZetaLattice};
use crate::complexfn::{ComplexValue, EvalResult};

/// Ratio below which a denominator is treated as vanishing relative to its numerator.
pub(crate) const NEAR_POLE: f64 = 1e-12;
/// Radius of the averaging circle used at removable singularities.
const MEAN_RADIUS: f64 = 0.05;
const MEAN_POINTS: usize = 16;
/// Distance from `s = 1/2` inside which the circle mean replaces direct evaluation.
const REMOVABLE_ZONE: f64 = 1e-3;

/// How `ξ₁` is evaluated at the two arguments `2s` and `2s-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Arguments left of `Re = 1/2` are reflected through the functional equation.
    #[default]
    Symmetric,
    /// Euler–Maclaurin at the argument itself; used to test identities that the
    /// functional equation would otherwise make automatic.
    Direct,
}

/// `U` at one point together with the data needed by `V`, `W` and derivative searches.
#[derive(Debug, Clone, Copy)]
pub struct UState {
    pub s: ComplexValue,
    pub u: ComplexValue,
    /// `U'/U = 2 L(2s-1) - 2 L(2s)` with `L = ξ₁'/ξ₁`.
    pub dlog_u: ComplexValue,
    /// `log ξ₁(2s)`; the imaginary part is not reduced.
    pub log_xi_2s: ComplexValue,
    /// Relative error estimate of `u`.
    pub rel_err: f64,
    pub dlog_err: f64,
    /// `U` is infinite here (a pole of `U`, including `s = 1`).
    pub pole: bool,
}

impl UState {
    fn from_logs(s: ComplexValue, a: LogXi, b: LogXi) -> Self {
        if a.pole && !b.pole {
            // ξ₁(2s) infinite: U vanishes (s = 0)
            let zero = ComplexValue::new(0.0, 0.0);
            return Self { s, u: zero, dlog_u: ComplexValue::new(f64::INFINITY, 0.0), log_xi_2s: a.log, rel_err: 0.0, dlog_err: f64::INFINITY, pole: false };
        }
        if b.pole || a.pole {
            let inf = ComplexValue::new(f64::INFINITY, 0.0);
            return Self { s, u: inf, dlog_u: inf, log_xi_2s: a.log, rel_err: f64::INFINITY, dlog_err: f64::INFINITY, pole: true };
        }
        let diff = b.log - a.log;
        let u = diff.exp();
        let dlog_u = (b.dlog - a.dlog) * 2.0;
        Self {
            s,
            u,
            dlog_u,
            log_xi_2s: a.log,
            rel_err: a.err + b.err + 2.0 * f64::EPSILON * diff.norm(),
            dlog_err: 2.0 * (a.dlog_err + b.dlog_err),
            pole: !u.is_finite(),
        }
    }

    pub fn v(&self) -> ComplexValue {
        if self.pole {
            return ComplexValue::new(-1.0, 0.0);
        }
        (self.u + 1.0) / (ComplexValue::new(1.0, 0.0) - self.u)
    }

    pub fn w(&self) -> ComplexValue {
        let i = ComplexValue::i();
        if self.pole {
            return i;
        }
        // W = (V - i)/(V + i) written in terms of U
        let one = ComplexValue::new(1.0, 0.0);
        ((one + self.u) - i * (one - self.u)) / ((one + self.u) + i * (one - self.u))
    }

    /// `V'/V = 2U'/(1-U²)`.
    pub fn dlog_v(&self) -> ComplexValue {
        let u = self.u;
        self.dlog_u * u * 2.0 / (ComplexValue::new(1.0, 0.0) - u * u)
    }

    /// `W'/W = V'·2i/(V²+1)`.
    pub fn dlog_w(&self) -> ComplexValue {
        let v = self.v();
        v * self.dlog_v() * ComplexValue::new(0.0, 2.0) / (v * v + 1.0)
    }

    /// `U'` itself.
    pub fn du(&self) -> ComplexValue {
        self.u * self.dlog_u
    }
}

fn log_xi_direct(w: ComplexValue) -> LogXi {
    log_xi1(w, false)
}

fn state_at(s: ComplexValue, route: Route) -> UState {
    let two_s = s * 2.0;
    let (a, b) = match route {
        Route::Symmetric => (log_xi1(two_s, true), log_xi1(two_s - 1.0, true)),
        Route::Direct => (log_xi_direct(two_s), log_xi_direct(two_s - 1.0)),
    };
    UState::from_logs(s, a, b)
}

/// Mean of an analytic function over a small circle about `s`, used at removable points.
pub(crate) fn circle_mean(s: ComplexValue, mut f: impl FnMut(ComplexValue) -> ComplexValue) -> ComplexValue {
    let mut acc = ComplexValue::new(0.0, 0.0);
    for k in 0..MEAN_POINTS {
        let phi = core::f64::consts::TAU * (k as f64 + 0.5) / MEAN_POINTS as f64;
        acc += f(s + ComplexValue::from_polar(MEAN_RADIUS, phi));
    }
    acc / MEAN_POINTS as f64
}

pub(crate) fn near_half(s: ComplexValue) -> bool {
    (s - 0.5).norm() < REMOVABLE_ZONE
}

/// `U(s)` and its log-derivative.
///
/// `U` is regular at `s = 1/2` (where both `ξ₁` arguments are poles and `U = -1`); there and
/// nearby the value comes from a circle mean.
pub fn u_state(s: ComplexValue, route: Route) -> UState {
    if !near_half(s) {
        return state_at(s, route);
    }
    let mut err = 0.0f64;
    let u = circle_mean(s, |z| {
        let st = state_at(z, route);
        err = err.max(st.rel_err);
        st.u
    });
    let du = circle_mean(s, |z| state_at(z, route).du());
    let centre_log = log_xi1(s * 2.0, true).log;
    UState { s, u, dlog_u: du / u, log_xi_2s: centre_log, rel_err: err * 4.0, dlog_err: err * 64.0, pole: false }
}

/// Which Möbius image of `U` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Uvw {
    U,
    V,
    W,
}

/// `U`, `V = (1+U)/(1-U)` or `W = (V-i)/(V+i)` at `s`.
///
/// A result is flagged as a pole when its denominator falls below `10⁻¹²` times its
/// numerator.
pub fn uvw(s: ComplexValue, which: Uvw) -> EvalResult {
    uvw_from_state(&u_state(s, Route::Symmetric), which)
}

pub(crate) fn uvw_from_state(st: &UState, which: Uvw) -> EvalResult {
    let one = ComplexValue::new(1.0, 0.0);
    let i = ComplexValue::i();
    match which {
        Uvw::U => {
            if st.pole || st.u.norm() * NEAR_POLE > 1.0 {
                return EvalResult::pole();
            }
            EvalResult::new(st.u, st.rel_err * st.u.norm())
        }
        Uvw::V => {
            if st.pole {
                return EvalResult::new(-one, 0.0);
            }
            let (num, den) = (one + st.u, one - st.u);
            if den.norm() < NEAR_POLE * num.norm() {
                return EvalResult::pole();
            }
            let v = num / den;
            let du = st.rel_err * st.u.norm();
            EvalResult::new(v, du * (1.0 + v.norm()) / den.norm() + f64::EPSILON * v.norm())
        }
        Uvw::W => {
            if st.pole {
                return EvalResult::new(i, 0.0);
            }
            let (num, den) = ((one + st.u) - i * (one - st.u), (one + st.u) + i * (one - st.u));
            if den.norm() < NEAR_POLE * num.norm() {
                return EvalResult::pole();
            }
            let w = num / den;
            let du = st.rel_err * st.u.norm();
            EvalResult::new(w, du * 2.0 * (1.0 + w.norm()) / den.norm() + f64::EPSILON * w.norm())
        }
    }
}

/// Sign selector for `T± = ¼[ξ₁(2s) ± ξ₁(2s-1)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `T±(s) = ¼[ξ₁(2s) ± ξ₁(2s-1)]`.
///
/// `T₊` has poles at `0, 1` and is regular at `1/2`; `T₋` has poles at `0, 1/2, 1`. Both are
/// formed as `¼ ξ₁(2s)(1 ± U)`, so for `|Im s|` beyond a few hundred the value underflows
/// while `U` and `V = T₊/T₋` remain well scaled.
pub fn t_pm(s: ComplexValue, sign: Sign) -> EvalResult {
    let zero = ComplexValue::new(0.0, 0.0);
    let half = ComplexValue::new(0.5, 0.0);
    let one = ComplexValue::new(1.0, 0.0);
    if s == zero || s == one || (sign == Sign::Minus && s == half) {
        return EvalResult::pole();
    }
    if sign == Sign::Plus && near_half(s) {
        let mut err = 0.0f64;
        let v = circle_mean(s, |z| {
            let r = t_pm(z, Sign::Plus);
            err = err.max(r.est_abs_err);
            r.value
        });
        return EvalResult::new(v, err * 2.0);
    }
    let a = log_xi1(s * 2.0, true);
    let b = log_xi1(s * 2.0 - 1.0, true);
    let xa = a.log.exp();
    let xb = b.log.exp();
    let value = match sign {
        Sign::Plus => (xa + xb) * 0.25,
        Sign::Minus => (xa - xb) * 0.25,
    };
    let err = 0.25 * (a.err * xa.norm() + b.err * xb.norm()) + f64::EPSILON * value.norm();
    EvalResult::new(value, err)
}

/// Batched `U` states on a rectangular lattice of points `σ_j + i t_k`.
///
/// Rows share one Euler–Maclaurin power table per distinct real part, which makes grid
/// scans far cheaper than point evaluations.
pub struct UGrid {
    sigmas: Vec<f64>,
    lattice: ZetaLattice,
    /// Column index into the lattice for `2s` and `2s-1` (after reflection), and whether each was reflected.
    cols: Vec<(usize, bool, usize, bool)>,
}

impl UGrid {
    pub fn new(sigmas: Vec<f64>, max_abs_t: f64) -> Self {
        let mut reals: Vec<f64> = Vec::new();
        let mut index_of = |x: f64| -> usize {
            if let Some(p) = reals.iter().position(|&r| r == x) {
                p
            } else {
                reals.push(x);
                reals.len() - 1
            }
        };
        let mut cols = Vec::with_capacity(sigmas.len());
        for &sigma in &sigmas {
            let (wa, ra) = reflect_real(2.0 * sigma);
            let (wb, rb) = reflect_real(2.0 * sigma - 1.0);
            cols.push((index_of(wa), ra, index_of(wb), rb));
        }
        let lattice = ZetaLattice::new(reals, 2.0 * max_abs_t.abs() + 1.0);
        Self { sigmas, lattice, cols }
    }

    pub fn sigmas(&self) -> &[f64] {
        &self.sigmas
    }

    /// States along the row `Im s = t`.
    ///
    /// Columns that fall within the removable zone around `s = 1/2`, or exactly on a pole of
    /// one of the `ξ₁` factors, fall back to point evaluation.
    pub fn row(&self, t: f64) -> Vec<UState> {
        let ems = self.lattice.row(2.0 * t);
        let xs = self.lattice.real_parts();
        self.sigmas
            .iter()
            .zip(&self.cols)
            .map(|(&sigma, &(ia, ra, ib, rb))| {
                let s = ComplexValue::new(sigma, t);
                if near_half(s) || is_xi_pole(s * 2.0) || is_xi_pole(s * 2.0 - 1.0) {
                    return u_state(s, Route::Symmetric);
                }
                let a = lattice_log_xi(ComplexValue::new(xs[ia], 2.0 * t), &ems[ia], ra);
                let b = lattice_log_xi(ComplexValue::new(xs[ib], 2.0 * t), &ems[ib], rb);
                UState::from_logs(s, a, b)
            })
            .collect()
    }
}

fn is_xi_pole(w: ComplexValue) -> bool {
    w.im == 0.0 && (w.re == 0.0 || w.re == 1.0)
}

/// Reflected real part: `x` if `x ≥ 1/2`, else `1 - x`.
fn reflect_real(x: f64) -> (f64, bool) {
    if x >= 0.5 {
        (x, false)
    } else {
        (1.0 - x, true)
    }
}

/// `log ξ₁` at `w = x + iy` (not reflected) or at `1 - conj(w)` (reflected), from a
/// lattice sum computed at `w`.
fn lattice_log_xi(w: ComplexValue, em: &EmSum, reflected: bool) -> LogXi {
    let lx = log_xi_from_em(w, em);
    if !reflected {
        return lx;
    }
    // ξ₁(1 - conj w) = ξ₁(conj w) = conj ξ₁(w); the derivative picks up a sign from 1 - z
    LogXi { log: lx.log.conj(), dlog: -lx.dlog.conj(), ..lx }
}

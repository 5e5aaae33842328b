use alloc::vec::Vec;

use crate::combinators::{CounterexampleSpec, UGrid, UState};
use crate::complexfn::ComplexValue;
use crate::error::{Error, Result};

/// Largest number of grid nodes accepted by [`grid_eval`].
pub const MAX_NODES: usize = 10_000_000;

/// An axis-aligned rectangle `σ_lo ≤ σ ≤ σ_hi`, `t_lo ≤ t ≤ t_hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub sigma_lo: f64,
    pub sigma_hi: f64,
    pub t_lo: f64,
    pub t_hi: f64,
}

impl Window {
    pub fn new(sigma_lo: f64, sigma_hi: f64, t_lo: f64, t_hi: f64) -> Result<Self> {
        let w = Self { sigma_lo, sigma_hi, t_lo, t_hi };
        if !(sigma_lo < sigma_hi && t_lo < t_hi) || ![sigma_lo, sigma_hi, t_lo, t_hi].iter().all(|x| x.is_finite()) {
            return Err(Error::Domain("window needs lo < hi on both axes"));
        }
        Ok(w)
    }

    pub fn width(&self) -> f64 {
        self.sigma_hi - self.sigma_lo
    }

    pub fn height(&self) -> f64 {
        self.t_hi - self.t_lo
    }

    pub fn contains(&self, s: ComplexValue) -> bool {
        s.re >= self.sigma_lo && s.re <= self.sigma_hi && s.im >= self.t_lo && s.im <= self.t_hi
    }

    /// The window grown by `frac` of its size on every side.
    pub fn expanded(&self, frac: f64) -> Self {
        let dx = frac * self.width();
        let dy = frac * self.height();
        Self { sigma_lo: self.sigma_lo - dx, sigma_hi: self.sigma_hi + dx, t_lo: self.t_lo - dy, t_hi: self.t_hi + dy }
    }

    /// Mirror image under `s → 1 - s̄` (reflection in the critical line).
    pub fn mirrored(&self) -> Self {
        Self { sigma_lo: 1.0 - self.sigma_hi, sigma_hi: 1.0 - self.sigma_lo, ..*self }
    }

    /// Checks that `U` on this window only needs `ξ₁` inside the evaluation domain
    /// `-6 ≤ Re ≤ 7`, `|Im| ≤ 2100`.
    pub fn check_domain(&self) -> Result<()> {
        if self.sigma_lo < -2.5 || self.sigma_hi > 3.5 || self.t_lo.abs().max(self.t_hi.abs()) > 1050.0 {
            return Err(Error::Domain("window leaves -2.5 <= sigma <= 3.5, |t| <= 1050"));
        }
        Ok(())
    }
}

/// Which function a [`GridField`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldFn {
    U,
    V,
    W,
    /// `U'/U`.
    DlogU,
}

/// Values of one function on an `nx × ny` lattice, stored row-major with `t` as the row.
///
/// The underlying `U` values are kept alongside so that `V`, `W` and quadrant data can be
/// derived from any field.
#[derive(Debug, Clone)]
pub struct GridField {
    pub window: Window,
    pub nx: usize,
    pub ny: usize,
    pub fn_id: FieldFn,
    pub values: Vec<ComplexValue>,
    pub u: Vec<ComplexValue>,
    /// Cells whose value is a pole (or whose `U` is).
    pub poles: Vec<bool>,
    pub spec: Option<CounterexampleSpec>,
}

impl GridField {
    pub fn sigma(&self, i: usize) -> f64 {
        lerp(self.window.sigma_lo, self.window.sigma_hi, i, self.nx)
    }

    pub fn t(&self, j: usize) -> f64 {
        lerp(self.window.t_lo, self.window.t_hi, j, self.ny)
    }

    pub fn point(&self, i: usize, j: usize) -> ComplexValue {
        ComplexValue::new(self.sigma(i), self.t(j))
    }

    pub fn at(&self, i: usize, j: usize) -> ComplexValue {
        self.values[j * self.nx + i]
    }
}

pub(crate) fn lerp(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if i + 1 == n {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

/// `U` states on a lattice, rows in `t`.
pub(crate) struct StateGrid {
    pub window: Window,
    pub nx: usize,
    pub ny: usize,
    pub states: Vec<UState>,
}

pub(crate) fn state_grid(window: Window, nx: usize, ny: usize, spec: Option<&CounterexampleSpec>) -> Result<StateGrid> {
    window.check_domain()?;
    if nx < 2 || ny < 2 {
        return Err(Error::Grid("grid needs at least two nodes per axis"));
    }
    if nx.saturating_mul(ny) > MAX_NODES {
        return Err(Error::Grid("grid exceeds 10^7 nodes"));
    }
    let sigmas: Vec<f64> = (0..nx).map(|i| lerp(window.sigma_lo, window.sigma_hi, i, nx)).collect();
    let ts: Vec<f64> = (0..ny).map(|j| lerp(window.t_lo, window.t_hi, j, ny)).collect();
    let grid = UGrid::new(sigmas, window.t_lo.abs().max(window.t_hi.abs()));
    let rows = eval_rows(&grid, &ts);
    let mut states = Vec::with_capacity(nx * ny);
    for row in rows {
        match spec {
            Some(sp) => states.extend(row.into_iter().map(|st| sp.apply(st))),
            None => states.extend(row),
        }
    }
    Ok(StateGrid { window, nx, ny, states })
}

#[cfg(feature = "parallel")]
fn eval_rows(grid: &UGrid, ts: &[f64]) -> Vec<Vec<UState>> {
    use rayon::prelude::*;
    ts.par_iter().map(|&t| grid.row(t)).collect()
}

#[cfg(not(feature = "parallel"))]
fn eval_rows(grid: &UGrid, ts: &[f64]) -> Vec<Vec<UState>> {
    ts.iter().map(|&t| grid.row(t)).collect()
}

/// Evaluate `U`, `V`, `W` or `U'/U` (of the off-axis variant when `spec` is given) on an
/// `nx × ny` lattice spanning `window`, corners included.
pub fn grid_eval(window: Window, nx: usize, ny: usize, fn_id: FieldFn, spec: Option<&CounterexampleSpec>) -> Result<GridField> {
    if nx < 16 || ny < 16 {
        return Err(Error::Grid("grid_eval needs nx, ny >= 16"));
    }
    let sg = state_grid(window, nx, ny, spec)?;
    Ok(field_from_states(&sg, fn_id, spec))
}

pub(crate) fn field_from_states(sg: &StateGrid, fn_id: FieldFn, spec: Option<&CounterexampleSpec>) -> GridField {
    use crate::combinators::Uvw;
    let mut values = Vec::with_capacity(sg.states.len());
    let mut poles = Vec::with_capacity(sg.states.len());
    let mut u = Vec::with_capacity(sg.states.len());
    for st in &sg.states {
        let (v, pole) = match fn_id {
            FieldFn::U => flagged(crate::combinators::uvw_from_state(st, Uvw::U)),
            FieldFn::V => flagged(crate::combinators::uvw_from_state(st, Uvw::V)),
            FieldFn::W => flagged(crate::combinators::uvw_from_state(st, Uvw::W)),
            FieldFn::DlogU => (st.dlog_u, st.pole || !st.dlog_u.is_finite()),
        };
        values.push(v);
        poles.push(pole || st.pole);
        u.push(st.u);
    }
    GridField { window: sg.window, nx: sg.nx, ny: sg.ny, fn_id, values, u, poles, spec: spec.cloned() }
}

fn flagged(r: crate::EvalResult) -> (ComplexValue, bool) {
    (r.value, r.at_pole)
}

/// `U` state of the plain (`spec = None`) or off-axis variant at one point.
pub(crate) fn point_state(s: ComplexValue, spec: Option<&CounterexampleSpec>) -> UState {
    match spec {
        Some(sp) => crate::combinators::oa_state(s, sp),
        None => crate::combinators::u_state(s, crate::combinators::Route::Symmetric),
    }
}

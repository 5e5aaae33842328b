//! Level curves of `|V|` and `|W|` by marching squares, projected onto the exact level set.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::grid::{lerp, point_state, GridField, Window};
use crate::combinators::{CounterexampleSpec, UState};
use crate::complexfn::{principal_angle as principal, ComplexValue};
use crate::error::{Error, Result};

const NEWTON_TOL: f64 = 1e-9;
const NEWTON_ITERS: usize = 30;
const CENSUS_DEPTH: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modulus {
    AbsV,
    AbsW,
}

impl Modulus {
    fn of_u(self, u: ComplexValue) -> ComplexValue {
        let one = ComplexValue::new(1.0, 0.0);
        let i = ComplexValue::i();
        if !u.is_finite() {
            return match self {
                Modulus::AbsV => -one,
                Modulus::AbsW => i,
            };
        }
        match self {
            Modulus::AbsV => (one + u) / (one - u),
            Modulus::AbsW => ((one + u) - i * (one - u)) / ((one + u) + i * (one - u)),
        }
    }

    fn value_and_dlog(self, st: &UState) -> (ComplexValue, ComplexValue) {
        match self {
            Modulus::AbsV => (st.v(), st.dlog_v()),
            Modulus::AbsW => (st.w(), st.dlog_w()),
        }
    }
}

/// One connected piece of `{|X| = level}`.
#[derive(Debug, Clone)]
pub struct Contour {
    pub level: f64,
    pub modulus: Modulus,
    pub vertices: Vec<ComplexValue>,
    /// The polyline returns to its start (and then repeats the first vertex at the end);
    /// open pieces end on the window boundary.
    pub closed: bool,
    /// Largest `|ln|X| - ln level|` over the vertices after projection.
    pub max_residual: f64,
    /// Vertices where the projection did not converge (left at their marching-squares position).
    pub unrefined: usize,
}

impl Contour {
    /// Even–odd point-in-polygon test; always `false` for open pieces.
    pub fn contains(&self, p: ComplexValue) -> bool {
        if !self.closed {
            return false;
        }
        let n = self.vertices.len();
        let mut inside = false;
        for k in 0..n {
            let a = self.vertices[k];
            let b = self.vertices[(k + 1) % n];
            if (a.im > p.im) != (b.im > p.im) {
                let x = a.re + (p.im - a.im) * (b.re - a.re) / (b.im - a.im);
                if p.re < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Shoelace area, positive for counter-clockwise vertex order.
    pub fn signed_area(&self) -> f64 {
        let n = self.vertices.len();
        let mut a = 0.0;
        for k in 0..n {
            let (p, q) = (self.vertices[k], self.vertices[(k + 1) % n]);
            a += p.re * q.im - q.re * p.im;
        }
        0.5 * a
    }

    fn segments(&self) -> impl Iterator<Item = (ComplexValue, ComplexValue)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Points where the polyline crosses `Re s = x`, projected back onto the level set.
    pub fn crossings(&self, x: f64, spec: Option<&CounterexampleSpec>) -> Vec<ComplexValue> {
        let mut out = Vec::new();
        for (a, b) in self.segments() {
            if (a.re >= x) != (b.re >= x) {
                let f = (x - a.re) / (b.re - a.re);
                let p = a + (b - a) * f;
                let q = project(p, self.modulus, self.level, spec, (b - a).norm().max(1e-3)).map_or(p, |r| r.0);
                out.push(q);
            }
        }
        out
    }

    /// Winding number of `arg V` along a closed piece: zeros minus poles of `V` enclosed.
    ///
    /// Edges whose end values differ in argument by more than `π/2` are bisected (with
    /// projection onto the level set) until the increments are unambiguous. Errors when the
    /// total is not within 0.05 of an integer.
    pub fn winding_of_v(&self, spec: Option<&CounterexampleSpec>) -> Result<i64> {
        if !self.closed {
            return Err(Error::Domain("winding needs a closed contour"));
        }
        let mut total = 0.0;
        for (a, b) in self.segments() {
            total += arg_increment(a, b, point_state(a, spec).v(), point_state(b, spec).v(), self, spec, 0);
        }
        // report for the counter-clockwise orientation
        let w = if self.signed_area() < 0.0 { -total / TAU } else { total / TAU };
        let r = w.round();
        if (w - r).abs() > 0.05 {
            return Err(Error::NonIntegerWinding(w));
        }
        Ok(r as i64)
    }

    /// `arg V` sampled at the vertices, unwrapped along the polyline.
    pub fn unwrapped_arg_v(&self, spec: Option<&CounterexampleSpec>) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::with_capacity(self.vertices.len());
        for &p in &self.vertices {
            let a = point_state(p, spec).v().arg();
            match out.last() {
                Some(&prev) => out.push(prev + principal(a - prev)),
                None => out.push(a),
            }
        }
        out
    }
}


fn arg_increment(
    a: ComplexValue,
    b: ComplexValue,
    va: ComplexValue,
    vb: ComplexValue,
    c: &Contour,
    spec: Option<&CounterexampleSpec>,
    depth: usize,
) -> f64 {
    let d = principal(vb.arg() - va.arg());
    if d.abs() <= PI / 2.0 || depth >= CENSUS_DEPTH {
        return d;
    }
    let mid = (a + b) * 0.5;
    let m = project(mid, c.modulus, c.level, spec, (b - a).norm()).map_or(mid, |r| r.0);
    let vm = point_state(m, spec).v();
    arg_increment(a, m, va, vm, c, spec, depth + 1) + arg_increment(m, b, vm, vb, c, spec, depth + 1)
}

/// Newton projection `s ← s - g/F'` with `g = ln|X(s)| - ln level` and `F = log X`.
/// Each step is capped at `max_step`. Returns the point and its final residual.
pub(crate) fn project(
    mut s: ComplexValue,
    modulus: Modulus,
    level: f64,
    spec: Option<&CounterexampleSpec>,
    max_step: f64,
) -> Option<(ComplexValue, f64)> {
    let ln_level = level.ln();
    for _ in 0..NEWTON_ITERS {
        let st = point_state(s, spec);
        let (x, dlog) = modulus.value_and_dlog(&st);
        if !x.is_finite() || !dlog.is_finite() || x.norm() == 0.0 {
            return None;
        }
        let g = x.norm().ln() - ln_level;
        if g.abs() < NEWTON_TOL {
            return Some((s, g.abs()));
        }
        let mut step = -(dlog.inv() * g);
        if !step.is_finite() {
            return None;
        }
        let len = step.norm();
        if len > max_step {
            step *= max_step / len;
        }
        s += step;
    }
    None
}

/// Extract the level set `|X| = level` (`X = V` or `W`) from a grid field.
///
/// Cells are contoured with marching squares on `ln|X| - ln level` (saddles are resolved by
/// the cell-centre average), edge crossings are chained into polylines, and each vertex is
/// projected onto the exact level set by Newton's method to `|g| < 10⁻⁹`.
pub fn extract_contours(field: &GridField, level: f64, modulus: Modulus) -> Result<Vec<Contour>> {
    if !(level > 0.0 && level.is_finite()) {
        return Err(Error::Domain("contour level must be positive"));
    }
    let (nx, ny) = (field.nx, field.ny);
    let ln_level = level.ln();
    let g: Vec<f64> = field
        .u
        .iter()
        .map(|&u| {
            let x = modulus.of_u(u);
            let v = x.norm().ln() - ln_level;
            if v.is_finite() {
                v
            } else {
                f64::NAN
            }
        })
        .collect();
    let chains = iso_lines(&g, nx, ny, field.window);
    let cell = (field.window.width() / (nx - 1) as f64).max(field.window.height() / (ny - 1) as f64);
    let spec = field.spec.as_ref();
    let project_all = |(raw, closed): (Vec<ComplexValue>, bool)| {
        let mut max_residual: f64 = 0.0;
        let mut unrefined = 0;
        let mut vertices: Vec<ComplexValue> = raw
            .into_iter()
            .map(|p| {
                match project(p, modulus, level, spec, cell) {
                    Some((q, r)) if (q - p).norm() < 2.0 * cell => {
                        max_residual = max_residual.max(r);
                        q
                    }
                    _ => {
                        unrefined += 1;
                        p
                    }
                }
            })
            .collect();
        if closed {
            vertices.push(vertices[0]);
        }
        Contour { level, modulus, vertices, closed, max_residual, unrefined }
    };
    Ok(map_chains(chains, project_all))
}

/// Zero set of a scalar lattice field by marching squares with linear interpolation.
///
/// `values` is row-major (`t` rows) over `window`, corners included; `NaN` marks cells to
/// skip. Saddle cells are resolved by the average of their corners. Returns polylines with
/// a flag telling whether each is closed.
pub fn iso_lines(values: &[f64], nx: usize, ny: usize, window: Window) -> Vec<(Vec<ComplexValue>, bool)> {
    assert!(nx >= 2 && ny >= 2 && values.len() == nx * ny, "iso_lines: lattice shape mismatch");
    let g = values;
    let point = |i: usize, j: usize| ComplexValue::new(lerp(window.sigma_lo, window.sigma_hi, i, nx), lerp(window.t_lo, window.t_hi, j, ny));
    let at = |i: usize, j: usize| g[j * nx + i];
    let h_edge = |i: usize, j: usize| 2 * (j * nx + i);
    let v_edge = |i: usize, j: usize| 2 * (j * nx + i) + 1;

    let mut points: BTreeMap<usize, ComplexValue> = BTreeMap::new();
    let mut segs: Vec<(usize, usize)> = Vec::new();
    let mut crossing = |id: usize, p0: ComplexValue, g0: f64, p1: ComplexValue, g1: f64| {
        points.entry(id).or_insert_with(|| {
            let f = g0 / (g0 - g1);
            p0 + (p1 - p0) * f
        });
        id
    };
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let c = [at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)];
            if c.iter().any(|x| x.is_nan()) {
                continue;
            }
            let pos = c.map(|x| x > 0.0);
            let p = [point(i, j), point(i + 1, j), point(i + 1, j + 1), point(i, j + 1)];
            // edges in cyclic order: bottom, right, top, left
            let ids = [h_edge(i, j), v_edge(i + 1, j), h_edge(i, j + 1), v_edge(i, j)];
            let mut cut = [None; 4];
            for e in 0..4 {
                let (a, b) = (e, (e + 1) % 4);
                if pos[a] != pos[b] {
                    cut[e] = Some(crossing(ids[e], p[a], c[a], p[b], c[b]));
                }
            }
            let live: Vec<usize> = cut.iter().flatten().copied().collect();
            match live.len() {
                2 => segs.push((live[0], live[1])),
                4 => {
                    let centre = 0.25 * (c[0] + c[1] + c[2] + c[3]) > 0.0;
                    let e = cut.map(|x| x.unwrap());
                    if centre == pos[0] {
                        segs.push((e[0], e[1]));
                        segs.push((e[2], e[3]));
                    } else {
                        segs.push((e[3], e[0]));
                        segs.push((e[1], e[2]));
                    }
                }
                _ => {}
            }
        }
    }

    let mut by_edge: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, &(a, b)) in segs.iter().enumerate() {
        by_edge.entry(a).or_default().push(k);
        by_edge.entry(b).or_default().push(k);
    }
    let next_seg = |edge: usize, from: usize| by_edge.get(&edge).and_then(|v| v.iter().copied().find(|&k| k != from));
    let other = |k: usize, edge: usize| if segs[k].0 == edge { segs[k].1 } else { segs[k].0 };

    let mut used = alloc::vec![false; segs.len()];
    let mut chains: Vec<(Vec<ComplexValue>, bool)> = Vec::new();
    for start in 0..segs.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (e0, e1) = segs[start];
        let mut forward = alloc::vec![e0, e1];
        let mut closed = false;
        let (mut edge, mut seg) = (e1, start);
        while let Some(k) = next_seg(edge, seg) {
            if k == start {
                closed = true;
                break;
            }
            if used[k] {
                break;
            }
            used[k] = true;
            edge = other(k, edge);
            seg = k;
            forward.push(edge);
        }
        if closed {
            forward.pop();
        } else {
            let mut backward = Vec::new();
            let (mut edge, mut seg) = (e0, start);
            while let Some(k) = next_seg(edge, seg) {
                if used[k] {
                    break;
                }
                used[k] = true;
                edge = other(k, edge);
                seg = k;
                backward.push(edge);
            }
            backward.reverse();
            backward.extend(forward);
            forward = backward;
        }
        chains.push((forward.iter().map(|e| points[e]).collect(), closed));
    }

    chains
}

#[cfg(feature = "parallel")]
fn map_chains<F>(chains: Vec<(Vec<ComplexValue>, bool)>, f: F) -> Vec<Contour>
where
    F: Fn((Vec<ComplexValue>, bool)) -> Contour + Sync + Send,
{
    use rayon::prelude::*;
    chains.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_chains<F>(chains: Vec<(Vec<ComplexValue>, bool)>, f: F) -> Vec<Contour>
where
    F: Fn((Vec<ComplexValue>, bool)) -> Contour,
{
    chains.into_iter().map(f).collect()
}

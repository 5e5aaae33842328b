//! Quadrant maps of `arg U` and per-zero topology reports.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::classify::{classify_state, Quadrant};
use super::deriv::DerivativeZero;
use super::grid::{state_grid, Window};
use super::props::{derivative_zeros_tall, survey, Verdict};
use crate::combinators::CounterexampleSpec;
use crate::complexfn::ComplexValue;
use crate::error::Result;

/// Resolution floor for connectivity decisions.
const MIN_NODES: usize = 256;

/// Quadrant label of `arg U` at each node of a lattice (`None` at zeros and poles of `U`).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadrantMap {
    pub window: Window,
    pub nx: usize,
    pub ny: usize,
    pub labels: Vec<Option<Quadrant>>,
    /// Nodes whose `|V|`, `|W|` disagree with the quadrant.
    pub inconsistent: usize,
}

pub fn quadrant_map(window: Window, nx: usize, ny: usize, spec: Option<&CounterexampleSpec>) -> Result<QuadrantMap> {
    let sg = state_grid(window, nx, ny, spec)?;
    Ok(map_from_states(&sg))
}

fn map_from_states(sg: &super::grid::StateGrid) -> QuadrantMap {
    let mut inconsistent = 0;
    let labels = sg
        .states
        .iter()
        .map(|st| match classify_state(st) {
            Ok(c) => {
                if !c.consistent {
                    inconsistent += 1;
                }
                Some(c.quadrant)
            }
            Err(_) => None,
        })
        .collect();
    QuadrantMap { window: sg.window, nx: sg.nx, ny: sg.ny, labels, inconsistent }
}

/// 8-connected components of the nodes satisfying `pred`.
#[derive(Debug, Clone)]
pub(crate) struct Components {
    pub id: Vec<Option<usize>>,
    pub touches_boundary: Vec<bool>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.touches_boundary.len()
    }
}

impl QuadrantMap {
    pub fn node(&self, s: ComplexValue) -> (usize, usize) {
        let fx = (s.re - self.window.sigma_lo) / self.window.width() * (self.nx - 1) as f64;
        let fy = (s.im - self.window.t_lo) / self.window.height() * (self.ny - 1) as f64;
        let clamp = |x: f64, n: usize| (x.round().max(0.0) as usize).min(n - 1);
        (clamp(fx, self.nx), clamp(fy, self.ny))
    }

    pub(crate) fn components(&self, pred: impl Fn(Quadrant) -> bool) -> Components {
        let (nx, ny) = (self.nx, self.ny);
        let mut id = alloc::vec![None; nx * ny];
        let mut touches_boundary = Vec::new();
        let mut stack = Vec::new();
        for start in 0..nx * ny {
            if id[start].is_some() || !self.labels[start].is_some_and(&pred) {
                continue;
            }
            let c = touches_boundary.len();
            touches_boundary.push(false);
            id[start] = Some(c);
            stack.push(start);
            while let Some(k) = stack.pop() {
                let (i, j) = ((k % nx) as i64, (k / nx) as i64);
                if i == 0 || j == 0 || i as usize == nx - 1 || j as usize == ny - 1 {
                    touches_boundary[c] = true;
                }
                for dj in -1..=1 {
                    for di in -1..=1 {
                        let (a, b) = (i + di, j + dj);
                        if a < 0 || b < 0 || a as usize >= nx || b as usize >= ny {
                            continue;
                        }
                        let q = b as usize * nx + a as usize;
                        if id[q].is_none() && self.labels[q].is_some_and(&pred) {
                            id[q] = Some(c);
                            stack.push(q);
                        }
                    }
                }
            }
        }
        Components { id, touches_boundary }
    }
}

/// Topology around one zero of `V` (a `T₊` zero) on the critical line.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTopology {
    pub t: f64,
    /// (a) a closed `|V| = 1` loop contains the zero.
    pub loop_closed: bool,
    /// (a) the loop's `arg V` winding is 1 and no other zero or pole of `V` on the line is inside.
    pub encloses_one_zero: bool,
    /// (b) points on the loop where `arg V ≡ 0` (zeros of `U`) and `≡ π` (poles of `U`).
    pub u_zeros_on_loop: usize,
    pub u_poles_on_loop: usize,
    /// (b) `arg V` is monotone along the loop with total sweep `2π`.
    pub monotone_sweep: bool,
    pub half_crossings: usize,
    /// Largest distance from a crossing to its `V = ±i` point.
    pub crossing_error: f64,
    /// (c) the `Q1 ∪ Q2` (`|W| < 1`) region at the neighbouring `W` zero is bounded in the window.
    pub companion_closed: bool,
    /// All of the Proposition-4 conditions hold for this zero.
    pub p4: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopologyReport {
    pub window: Window,
    pub survey_window: Window,
    pub nx: usize,
    pub ny: usize,
    pub zeros: Vec<ZeroTopology>,
    pub derivative_zeros: Vec<DerivativeZero>,
    /// (d) every derivative zero lies in the fourth quadrant.
    pub derivative_zeros_q4: bool,
    /// (e) 8-connected components of `Q4`; 1 means connected.
    pub q4_components: usize,
    /// (e) non-`Q4` components strictly inside the window (islands) and those clipped by it.
    pub islands: usize,
    pub clipped_regions: usize,
    pub table1_inconsistent: usize,
    pub p3: Verdict,
    pub p4: Verdict,
}

impl TopologyReport {
    pub fn q4_connected(&self) -> bool {
        self.q4_components == 1
    }

    pub fn p3_p4_agree(&self) -> bool {
        self.p3 == self.p4
    }
}

/// Topology of the `|V| = 1`, quadrant and derivative-zero structure on `window`
/// (plain variant unless `spec` is given).
pub fn topology_report(window: Window, spec: Option<&CounterexampleSpec>) -> Result<TopologyReport> {
    let s = survey(window, spec, MIN_NODES)?;
    let sw = s.window;
    let sg = state_grid(sw, s.field.nx, s.field.ny, spec)?;
    let qmap = map_from_states(&sg);
    let q4 = qmap.components(|q| q == Quadrant::Q4);
    let other = qmap.components(|q| q != Quadrant::Q4);
    let islands = other.touches_boundary.iter().filter(|b| !**b).count();
    let companions = qmap.components(|q| matches!(q, Quadrant::Q1 | Quadrant::Q2));

    let mut zeros = Vec::new();
    for zl in &s.loops {
        let mut zt = ZeroTopology {
            t: zl.t,
            loop_closed: zl.closed(),
            encloses_one_zero: zl.winding == Some(1) && zl.zeros_inside == 1 && zl.poles_inside == 0,
            u_zeros_on_loop: 0,
            u_poles_on_loop: 0,
            monotone_sweep: false,
            half_crossings: zl.crossings.len(),
            crossing_error: zl.crossing_error,
            companion_closed: false,
            p4: zl.holds(),
        };
        if let Some(k) = zl.contour {
            let args = s.contours[k].unwrapped_arg_v(spec);
            let (zs, ps) = multiples_of_pi(&args);
            zt.u_zeros_on_loop = zs;
            zt.u_poles_on_loop = ps;
            let incr: Vec<f64> = args.windows(2).map(|w| w[1] - w[0]).collect();
            let up = incr.iter().all(|&d| d >= -1e-9);
            let down = incr.iter().all(|&d| d <= 1e-9);
            let sweep = (args[args.len() - 1] - args[0]).abs();
            zt.monotone_sweep = (up || down) && (sweep - 2.0 * PI).abs() < 0.1;
        }
        // the W zero is the neighbouring V = +i point
        if let Some(tw) = nearest(&s.line.plus_i, zl.t) {
            let (i, j) = qmap.node(ComplexValue::new(0.5, tw));
            if let Some(c) = nearby_component(&qmap, &companions, i, j) {
                zt.companion_closed = !companions.touches_boundary[c];
            }
        }
        zeros.push(zt);
    }

    let dz = derivative_zeros_tall(window, spec)?;
    let p3 = if dz.is_empty() {
        Verdict::Inconclusive
    } else if dz.iter().all(|z| z.abs_v > 1.0) {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let p4 = if zeros.is_empty() || zeros.iter().any(|z| !z.loop_closed) {
        Verdict::Inconclusive
    } else if zeros.iter().all(|z| z.p4) && s.orphans.is_empty() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(TopologyReport {
        window,
        survey_window: sw,
        nx: qmap.nx,
        ny: qmap.ny,
        derivative_zeros_q4: dz.iter().all(|z| z.quadrant == Some(Quadrant::Q4)),
        derivative_zeros: dz,
        zeros,
        q4_components: q4.count(),
        islands,
        clipped_regions: other.count() - islands,
        table1_inconsistent: qmap.inconsistent,
        p3,
        p4,
    })
}

fn nearest(xs: &[f64], t: f64) -> Option<f64> {
    xs.iter().copied().min_by(|a, b| (a - t).abs().total_cmp(&(b - t).abs()))
}

fn nearby_component(map: &QuadrantMap, comps: &Components, i: usize, j: usize) -> Option<usize> {
    for r in 0..=2i64 {
        for dj in -r..=r {
            for di in -r..=r {
                let (a, b) = (i as i64 + di, j as i64 + dj);
                if a < 0 || b < 0 || a as usize >= map.nx || b as usize >= map.ny {
                    continue;
                }
                if let Some(c) = comps.id[b as usize * map.nx + a as usize] {
                    return Some(c);
                }
            }
        }
    }
    None
}

/// Number of crossings of even and odd multiples of `π` by an unwrapped argument sequence.
fn multiples_of_pi(args: &[f64]) -> (usize, usize) {
    let (mut even, mut odd) = (0, 0);
    for w in args.windows(2) {
        let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
        let mut k = (a / PI).floor() + 1.0;
        while k * PI <= b {
            if (k as i64).rem_euclid(2) == 0 {
                even += 1;
            } else {
                odd += 1;
            }
            k += 1.0;
        }
    }
    (even, odd)
}

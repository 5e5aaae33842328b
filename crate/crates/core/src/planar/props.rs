//! Propositions 2–4 on a finite window, and the shared `|V| = 1` loop survey.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use super::contour::{extract_contours, Contour, Modulus};
use super::deriv::{derivative_zeros, DerivativeZero};
use super::grid::{field_from_states, state_grid, FieldFn, GridField, Window};
use super::line::{line_points, LinePoints};
use crate::combinators::CounterexampleSpec;
use crate::complexfn::ComplexValue;
use crate::error::{Error, Result};

/// Critical-line crossings of a loop must lie this close to the `V = ±i` points.
pub(crate) const CROSSING_TOL: f64 = 1e-4;
const EXPANSION: f64 = 0.1;
const RETRIES: usize = 3;
const TARGET_CELL: f64 = 0.01;
const MAX_SIDE: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// A point that decides a verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub proposition: u8,
    pub location: ComplexValue,
    pub value: f64,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropositionReport {
    pub window: Window,
    /// Window actually contoured, after any expansions.
    pub survey_window: Window,
    pub derivative_zeros: Vec<(ComplexValue, f64)>,
    pub v_zeros: Vec<f64>,
    pub p2: Verdict,
    pub p3: Verdict,
    pub p4: Verdict,
    pub p3_p4_agree: bool,
    pub witnesses: Vec<Witness>,
}

/// The `|V| = 1` loop found around one zero of `V` on the critical line.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ZeroLoop {
    pub t: f64,
    pub contour: Option<usize>,
    pub winding: Option<i64>,
    pub zeros_inside: usize,
    pub poles_inside: usize,
    pub crossings: Vec<ComplexValue>,
    pub neighbours: (Option<f64>, Option<f64>),
    /// Largest distance from a crossing to its matched `V = ±i` point.
    pub crossing_error: f64,
}

impl ZeroLoop {
    pub fn closed(&self) -> bool {
        self.contour.is_some()
    }

    pub fn holds(&self) -> bool {
        self.closed()
            && self.winding == Some(1)
            && self.zeros_inside == 1
            && self.poles_inside == 0
            && self.crossings.len() == 2
            && self.crossing_error < CROSSING_TOL
    }
}

/// Everything known about `|V| = 1` on a window.
pub(crate) struct Survey {
    pub window: Window,
    pub field: GridField,
    pub line: LinePoints,
    pub contours: Vec<Contour>,
    pub loops: Vec<ZeroLoop>,
    /// Closed contours meeting the target window that contain no zero of `V` on the line.
    pub orphans: Vec<usize>,
    /// Zeros whose loop stayed open after all expansions.
    pub unresolved: usize,
}

fn side(len: f64, min_nodes: usize) -> usize {
    ((len / TARGET_CELL).ceil() as usize + 1).clamp(min_nodes, MAX_SIDE)
}

pub(crate) fn survey(target: Window, spec: Option<&CounterexampleSpec>, min_nodes: usize) -> Result<Survey> {
    let mut window = target;
    let mut attempt = 0;
    loop {
        let s = survey_once(target, window, spec, min_nodes)?;
        if s.unresolved == 0 || attempt == RETRIES {
            return Ok(s);
        }
        attempt += 1;
        window = window.expanded(EXPANSION);
        window.t_lo = window.t_lo.max(0.0);
        window.sigma_lo = window.sigma_lo.max(-2.5);
        window.sigma_hi = window.sigma_hi.min(3.5);
        window.t_hi = window.t_hi.min(1050.0);
    }
}

fn survey_once(target: Window, window: Window, spec: Option<&CounterexampleSpec>, min_nodes: usize) -> Result<Survey> {
    let (nx, ny) = (side(window.width(), min_nodes), side(window.height(), min_nodes));
    let sg = state_grid(window, nx, ny, spec)?;
    let field = field_from_states(&sg, FieldFn::V, spec);
    let contours: Vec<Contour> = extract_contours(&field, 1.0, Modulus::AbsV)?;
    let line = line_points(window.t_lo.max(0.0), window.t_hi, spec)?;
    let on_line = |t: f64| ComplexValue::new(0.5, t);
    let mut loops = Vec::new();
    let mut unresolved = 0;
    let crosses_line = target.sigma_lo < 0.5 && target.sigma_hi > 0.5;
    for &t in line.v_zeros.iter().filter(|&&t| crosses_line && t >= target.t_lo && t <= target.t_hi) {
        let z = on_line(t);
        let contour = contours
            .iter()
            .enumerate()
            .filter(|(_, c)| c.closed && c.contains(z))
            .min_by(|a, b| area(a.1).total_cmp(&area(b.1)))
            .map(|(k, _)| k);
        let neighbours = line.neighbours_pm_i(t);
        let mut zl = ZeroLoop { t, contour, winding: None, zeros_inside: 0, poles_inside: 0, crossings: Vec::new(), neighbours, crossing_error: f64::INFINITY };
        match contour {
            Some(k) => {
                let c = &contours[k];
                zl.winding = c.winding_of_v(spec).ok();
                zl.zeros_inside = line.v_zeros.iter().filter(|&&x| c.contains(on_line(x))).count();
                zl.poles_inside = line.v_poles.iter().filter(|&&x| c.contains(on_line(x))).count();
                zl.crossings = c.crossings(0.5, spec);
                zl.crossing_error = crossing_error(&zl.crossings, neighbours);
            }
            None => unresolved += 1,
        }
        loops.push(zl);
    }
    let orphans = contours
        .iter()
        .enumerate()
        .filter(|(_, c)| c.closed && c.vertices.iter().any(|&p| target.contains(p)))
        .filter(|(_, c)| !line.v_zeros.iter().any(|&x| c.contains(on_line(x))))
        .map(|(k, _)| k)
        .collect();
    Ok(Survey { window, field, line, contours, loops, orphans, unresolved })
}

fn area(c: &Contour) -> f64 {
    c.signed_area().abs()
}

fn crossing_error(crossings: &[ComplexValue], (lo, hi): (Option<f64>, Option<f64>)) -> f64 {
    let (Some(lo), Some(hi)) = (lo, hi) else { return f64::INFINITY };
    if crossings.len() != 2 {
        return f64::INFINITY;
    }
    let (a, b) = (ComplexValue::new(0.5, lo), ComplexValue::new(0.5, hi));
    let straight = (crossings[0] - a).norm().max((crossings[1] - b).norm());
    let swapped = (crossings[0] - b).norm().max((crossings[1] - a).norm());
    straight.min(swapped)
}

/// [`derivative_zeros`] over a window of any height, scanned in strips of height
/// at most 5; only zeros inside `window` itself are kept.
pub fn derivative_zeros_tall(window: Window, spec: Option<&CounterexampleSpec>) -> Result<Vec<DerivativeZero>> {
    let strips = (window.height() / 5.0).ceil().max(1.0) as usize;
    let h = window.height() / strips as f64;
    let mut out: Vec<DerivativeZero> = Vec::new();
    for k in 0..strips {
        let w = Window { t_lo: window.t_lo + h * k as f64, t_hi: window.t_lo + h * (k + 1) as f64, ..window };
        for z in derivative_zeros(w, spec)?.zeros {
            if window.contains(z.location) && !out.iter().any(|q| (q.location - z.location).norm() < 1e-6) {
                out.push(z);
            }
        }
    }
    Ok(out)
}

/// Check Propositions 2, 3 and 4 on `window` for the plain (`None`) or off-axis variant.
///
/// * P2: no zero of `U'` with `1/4 ≤ σ ≤ 3/4`.
/// * P3: `|V| > 1` at every zero of `U'`.
/// * P4: around each zero of `V` on the critical line, the `|V| = 1` contour is closed,
///   encloses that zero alone, and crosses `σ = 1/2` exactly twice, within `10⁻⁴` of the two
///   neighbouring points where `V = ±i`; and no closed `|V| = 1` contour lacks a zero.
///
/// When a loop leaves the window the window is grown by 10% per side, up to three times;
/// loops still open make P4 inconclusive. A window with no zeros of `U'` leaves P2 and P3
/// inconclusive.
pub fn check_propositions(window: Window, spec: Option<&CounterexampleSpec>) -> Result<PropositionReport> {
    window.check_domain()?;
    if window.t_lo < 0.0 {
        return Err(Error::Domain("check_propositions needs t_lo >= 0"));
    }
    let dz = derivative_zeros_tall(window, spec)?;
    let mut witnesses = Vec::new();

    let (p2, p3) = if dz.is_empty() {
        (Verdict::Inconclusive, Verdict::Inconclusive)
    } else {
        let mut p2 = Verdict::Holds;
        let mut p3 = Verdict::Holds;
        for z in &dz {
            if (0.25..=0.75).contains(&z.location.re) {
                p2 = Verdict::Fails;
                witnesses.push(Witness { proposition: 2, location: z.location, value: z.location.re, note: "derivative zero inside 1/4 <= sigma <= 3/4" });
            }
            if !(z.abs_v > 1.0) {
                p3 = Verdict::Fails;
                witnesses.push(Witness { proposition: 3, location: z.location, value: z.abs_v, note: "derivative zero with |V| <= 1" });
            }
        }
        (p2, p3)
    };

    let s = survey(window, spec, 64)?;
    let mut p4 = if s.loops.is_empty() { Verdict::Inconclusive } else { Verdict::Holds };
    for zl in &s.loops {
        let z = ComplexValue::new(0.5, zl.t);
        if !zl.closed() {
            if p4 == Verdict::Holds {
                p4 = Verdict::Inconclusive;
            }
            witnesses.push(Witness { proposition: 4, location: z, value: f64::NAN, note: "loop leaves the expanded window" });
        } else if !zl.holds() {
            p4 = Verdict::Fails;
            witnesses.push(Witness { proposition: 4, location: z, value: zl.crossing_error, note: "loop does not pass through the neighbouring V = +-i points" });
        }
    }
    for &k in &s.orphans {
        p4 = Verdict::Fails;
        let c = &s.contours[k];
        let centre = c.vertices.iter().fold(ComplexValue::new(0.0, 0.0), |a, &b| a + b) / c.vertices.len() as f64;
        witnesses.push(Witness { proposition: 4, location: centre, value: 1.0, note: "closed |V| = 1 contour encloses no zero of V" });
    }

    Ok(PropositionReport {
        window,
        survey_window: s.window,
        derivative_zeros: dz.iter().map(|z| (z.location, z.abs_v)).collect(),
        v_zeros: s.loops.iter().map(|l| l.t).collect(),
        p2,
        p3,
        p4,
        p3_p4_agree: p3 == p4,
        witnesses,
    })
}

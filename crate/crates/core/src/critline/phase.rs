//! Continuous tracking of `θ₁(t) = arg ξ₁(1 + 2it)`.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, TAU};

use crate::complexfn::theta1_parts;
use crate::error::{Error, Result};

/// Largest step taken along `t`; `θ₁' ≈ log(t/π) + O(1)` keeps a step this size well below
/// the unwrap limit through `t = 1050`.
pub const DEFAULT_MAX_STEP: f64 = 0.05;
const MIN_STEP: f64 = 1e-9;
/// Panel length used when the track is split for concurrent evaluation.
const PANEL: f64 = 64.0;

/// Sampled continuous representative of `θ₁` on an interval.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseTrack {
    samples: Vec<(f64, f64)>,
    max_step: f64,
}

fn wrap(x: f64) -> f64 {
    x - TAU * (x / TAU).round()
}

impl PhaseTrack {
    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn max_step(&self) -> f64 {
        self.max_step
    }

    pub fn t_range(&self) -> (f64, f64) {
        (self.samples[0].0, self.samples[self.samples.len() - 1].0)
    }

    /// `θ₁(t)` on the tracked branch, for any `t` in the tracked range.
    ///
    /// The point value is recomputed and moved by a multiple of `2π` onto the branch given by
    /// the interpolated samples.
    pub fn theta(&self, t: f64) -> f64 {
        let guide = self.interpolate(t);
        if t == 0.0 {
            return -FRAC_PI_2;
        }
        let (smooth, arg) = theta1_parts(t);
        let raw = smooth + arg;
        raw + TAU * ((guide - raw) / TAU).round()
    }

    /// Linear interpolation of the samples (clamped at the ends).
    pub fn interpolate(&self, t: f64) -> f64 {
        let k = self.samples.partition_point(|&(ts, _)| ts <= t);
        if k == 0 {
            return self.samples[0].1;
        }
        if k == self.samples.len() {
            return self.samples[k - 1].1;
        }
        let (t0, a) = self.samples[k - 1];
        let (t1, b) = self.samples[k];
        a + (b - a) * (t - t0) / (t1 - t0)
    }

    /// Mean slope `Δθ₁/Δt` over `[a, b]`.
    pub fn slope(&self, a: f64, b: f64) -> f64 {
        (self.theta(b) - self.theta(a)) / (b - a)
    }

    /// Second differences of `θ₁` on a uniform grid of spacing `h` over `[a, b]`: returns
    /// `(points checked, points with a negative second difference)`.
    ///
    /// This is a sampled convexity indicator, not a proof of convexity.
    pub fn convexity_report(&self, a: f64, b: f64, h: f64) -> (usize, usize) {
        let n = ((b - a) / h).floor() as usize;
        let vals: Vec<f64> = (0..=n).map(|k| self.theta(a + k as f64 * h)).collect();
        let mut negative = 0;
        for w in vals.windows(3) {
            if w[0] - 2.0 * w[1] + w[2] < 0.0 {
                negative += 1;
            }
        }
        (vals.len().saturating_sub(2), negative)
    }
}

/// Track `θ₁` over `[t_lo, t_hi]` with steps halved until every increment of `θ₁` (and of
/// the `arg ζ(1+2it)` part on its own) stays below `π/4`, half the unwrap limit.
pub fn track_phase(t_lo: f64, t_hi: f64) -> Result<PhaseTrack> {
    track_phase_with_step(t_lo, t_hi, DEFAULT_MAX_STEP)
}

/// As [`track_phase`] with an explicit maximum step.
pub fn track_phase_with_step(t_lo: f64, t_hi: f64, max_step: f64) -> Result<PhaseTrack> {
    if !(t_lo >= 0.0 && t_lo < t_hi && t_hi <= 1050.0) {
        return Err(Error::Domain("track_phase needs 0 <= t_lo < t_hi <= 1050"));
    }
    if !(max_step > 0.0) {
        return Err(Error::Domain("track_phase needs a positive step"));
    }
    let n_panels = ((t_hi - t_lo) / PANEL).ceil().max(1.0) as usize;
    let edges: Vec<f64> = (0..=n_panels)
        .map(|k| if k == n_panels { t_hi } else { t_lo + (t_hi - t_lo) * k as f64 / n_panels as f64 })
        .collect();
    let panels = run_panels(&edges, max_step)?;
    // stitch: each panel starts on the principal branch at its left edge
    let mut samples: Vec<(f64, f64)> = Vec::new();
    for panel in panels {
        let offset = match samples.last() {
            Some(&(_, prev)) => TAU * ((prev - panel[0].1) / TAU).round(),
            None => 0.0,
        };
        let skip = usize::from(!samples.is_empty());
        samples.extend(panel.into_iter().skip(skip).map(|(t, th)| (t, th + offset)));
    }
    Ok(PhaseTrack { samples, max_step })
}

#[cfg(feature = "parallel")]
fn run_panels(edges: &[f64], max_step: f64) -> Result<Vec<Vec<(f64, f64)>>> {
    use rayon::prelude::*;
    edges.par_windows(2).map(|w| track_panel(w[0], w[1], max_step)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_panels(edges: &[f64], max_step: f64) -> Result<Vec<Vec<(f64, f64)>>> {
    edges.windows(2).map(|w| track_panel(w[0], w[1], max_step)).collect()
}

fn parts(t: f64) -> (f64, f64) {
    if t == 0.0 {
        (0.0, -FRAC_PI_2)
    } else {
        theta1_parts(t)
    }
}

fn track_panel(a: f64, b: f64, max_step: f64) -> Result<Vec<(f64, f64)>> {
    let (smooth0, arg0) = parts(a);
    let mut out = alloc::vec![(a, smooth0 + arg0)];
    let mut t = a;
    let mut arg = arg0;
    let mut theta = smooth0 + arg0;
    let mut h = max_step;
    while t < b {
        let step = h.min(b - t);
        let next = if step == b - t { b } else { t + step };
        let (smooth, raw_arg) = parts(next);
        let arg_next = arg + wrap(raw_arg - arg);
        let theta_next = smooth + arg_next;
        if (arg_next - arg).abs() >= FRAC_PI_4 || (theta_next - theta).abs() >= FRAC_PI_4 {
            h *= 0.5;
            if h < MIN_STEP {
                return Err(Error::StepUnderflow { at: t });
            }
            continue;
        }
        t = next;
        arg = arg_next;
        theta = theta_next;
        out.push((t, theta));
        h = (h * 2.0).min(max_step);
    }
    Ok(out)
}

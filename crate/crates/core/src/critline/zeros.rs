//! Zero tables on the critical line.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use core::f64::consts::PI;

use crate::complexfn::{hardy_z, riemann_siegel_theta, zeta, ComplexValue};
use crate::error::{Error, Result};
use crate::roots::refine;

use super::phase::{track_phase, PhaseTrack};

/// Bisection width before switching to secant steps.
pub const BISECT_WIDTH: f64 = 1e-6;
/// Final bracket width of every refined zero.
pub const FINAL_WIDTH: f64 = 1e-8;

/// Which function a [`ZeroRecord`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionId {
    Tplus,
    Tminus,
    /// `ξ₁(2s - 1/2)` on `σ = 1/2`, i.e. `ζ(1/2 + 2it)`.
    ZetaLine,
    A0Y,
    UOffline,
}

impl FunctionId {
    pub const ALL: [FunctionId; 5] = [Self::Tplus, Self::Tminus, Self::ZetaLine, Self::A0Y, Self::UOffline];

    pub fn name(self) -> &'static str {
        match self {
            Self::Tplus => "Tplus",
            Self::Tminus => "Tminus",
            Self::ZetaLine => "zeta_line",
            Self::A0Y => "a0_y",
            Self::UOffline => "U_offline",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(name))
    }
}

/// A located zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroRecord {
    pub function_id: FunctionId,
    /// 1-based, consecutive in `t` within one function.
    pub index: usize,
    pub location: ComplexValue,
    /// Scale-free residual at the reported location.
    pub residual: f64,
    /// Width of the final bracket.
    pub width: f64,
}

impl ZeroRecord {
    pub fn t(&self) -> f64 {
        self.location.im
    }
}

/// Ordinates of a table, in order.
pub fn ordinates(records: &[ZeroRecord]) -> Vec<f64> {
    records.iter().map(ZeroRecord::t).collect()
}

/// Zeros of `T₊`, `T₋` or `ξ₁(2s - 1/2)` on the critical line with `0 < t ≤ t_max`.
///
/// `T₊` vanishes where `θ₁ ≡ π/2 (mod π)` and `T₋` where `θ₁ ≡ 0 (mod π)`; both are found as
/// level crossings of the tracked phase. Zeros of `ξ₁(2s - 1/2)` are sign changes of Hardy's
/// `Z(2t)`, cross-checked over every unit `t`-interval against the exact count
/// `N(u) = ϑ(u)/π + 1 + arg ζ(1/2 + iu)/π`.
pub fn line_zeros(function_id: FunctionId, t_max: f64) -> Result<Vec<ZeroRecord>> {
    if !(t_max > 0.0 && t_max <= 1000.0) {
        return Err(Error::Domain("line_zeros needs 0 < t_max <= 1000"));
    }
    match function_id {
        FunctionId::Tplus | FunctionId::Tminus => {
            let track = track_phase(0.0, t_max)?;
            phase_zeros(&track, function_id)
        }
        FunctionId::ZetaLine => zeta_line_zeros(t_max),
        _ => Err(Error::Domain("line_zeros supports Tplus, Tminus and zeta_line")),
    }
}

/// `T₊` or `T₋` zeros from an existing phase track.
pub fn phase_zeros(track: &PhaseTrack, function_id: FunctionId) -> Result<Vec<ZeroRecord>> {
    let offset = match function_id {
        FunctionId::Tplus => 0.5,
        FunctionId::Tminus => 0.0,
        _ => return Err(Error::Domain("phase_zeros supports Tplus and Tminus")),
    };
    // level index n ↦ θ₁ = (n + offset)π; crossings are counted with the level strictly
    // inside (lo, hi] so the starting value -π/2 at t = 0 is not a zero
    let level = |x: f64| (x / PI - offset).floor();
    let samples = track.samples();
    let mut out = Vec::new();
    for w in samples.windows(2) {
        let ((a, ta), (b, tb)) = (w[0], w[1]);
        let (la, lb) = (level(ta), level(tb));
        // θ₁(0) = -π/2 lies on a T₊ level, but s = 1/2 is a pole, not a zero
        if la == lb || a == 0.0 {
            continue;
        }
        if (la - lb).abs() > 1.0 {
            return Err(Error::StepUnderflow { at: a });
        }
        let n = la.max(lb);
        let target = (n + offset) * PI;
        let g = |t: f64| track.theta(t) - target;
        let br = refine(g, a, b, ta - target, tb - target, BISECT_WIDTH, FINAL_WIDTH)?;
        let t = br.mid();
        let th = track.theta(t);
        let residual = if offset == 0.0 { th.sin().abs() } else { th.cos().abs() };
        out.push(ZeroRecord {
            function_id,
            index: out.len() + 1,
            location: ComplexValue::new(0.5, t),
            residual,
            width: br.width(),
        });
    }
    check_phase_counts(track, &out, offset)?;
    Ok(out)
}

/// Missed-zero alarm for the phase-level zeros: over each unit interval where `θ₁` is
/// monotone, the number of records must equal the number of levels crossed.
fn check_phase_counts(track: &PhaseTrack, zeros: &[ZeroRecord], offset: f64) -> Result<()> {
    let (lo, hi) = track.t_range();
    let mut a = lo.max(7.0).ceil();
    while a < hi {
        let b = (a + 1.0).min(hi);
        let expected = ((track.theta(b) / PI - offset).floor() - (track.theta(a) / PI - offset).floor()) as i64;
        let found = zeros.iter().filter(|z| z.t() > a && z.t() <= b).count();
        if found as i64 != expected {
            return Err(Error::MissedZero { t_lo: a, t_hi: b, found, expected });
        }
        a = b;
    }
    Ok(())
}

fn scan_step(u: f64) -> f64 {
    let spacing = 2.0 * PI / (u.max(20.0) / (2.0 * PI)).ln();
    (0.2 * spacing).min(0.25)
}

/// Sign changes of `Z` on `(u_a, u_b]` sampled with a step `factor × scan_step`.
fn scan_z(u_a: f64, u_b: f64, factor: f64) -> Vec<(f64, f64, f64, f64)> {
    let mut out = Vec::new();
    let mut u = u_a;
    let mut z = hardy_z(u).0;
    while u < u_b {
        let next = (u + factor * scan_step(u)).min(u_b);
        let zn = hardy_z(next).0;
        if (z > 0.0) != (zn > 0.0) {
            out.push((u, next, z, zn));
        }
        u = next;
        z = zn;
    }
    out
}

/// Continuous `arg ζ(σ + iu)` from `σ = 3` down to `σ = 1/2` (for `S(u)`).
fn arg_zeta_half(u: f64) -> Result<f64> {
    let at = |sigma: f64| {
        let z = zeta(ComplexValue::new(sigma, u), 0).value;
        z.im.atan2(z.re)
    };
    let mut sigma = 3.0;
    let mut arg = at(sigma);
    let mut h = 0.1;
    while sigma > 0.5 {
        let next = (sigma - h).max(0.5);
        let raw = at(next);
        let d = raw - arg;
        let d = d - 2.0 * PI * (d / (2.0 * PI)).round();
        if d.abs() > PI / 4.0 {
            h *= 0.5;
            if h < 1e-9 {
                return Err(Error::StepUnderflow { at: u });
            }
            continue;
        }
        arg += d;
        sigma = next;
        h = (h * 2.0).min(0.1);
    }
    Ok(arg)
}

/// Exact zero count `N(u)` of `ζ(1/2 + iv)`, `0 < v ≤ u`, for `u` not an ordinate.
pub fn zeta_count(u: f64) -> Result<f64> {
    Ok(riemann_siegel_theta(u) / PI + 1.0 + arg_zeta_half(u)? / PI)
}

fn zeta_line_zeros(t_max: f64) -> Result<Vec<ZeroRecord>> {
    let u_max = 2.0 * t_max;
    // unit t-intervals are u-intervals of length 2
    let mut brackets: Vec<(f64, f64, f64, f64)> = Vec::new();
    let mut u_a = 0.0;
    let mut n_a = 0.0f64;
    while u_a < u_max {
        let mut u_b = (u_a + 2.0).min(u_max);
        // keep the count point away from ordinates
        let mut n_b = zeta_count(u_b)?;
        let mut tries = 0;
        while (n_b - n_b.round()).abs() > 0.1 && tries < 8 && u_b < u_max {
            u_b = (u_b + 0.013).min(u_max);
            n_b = zeta_count(u_b)?;
            tries += 1;
        }
        let expected = (n_b.round() - n_a.round()) as i64;
        let mut found = scan_z(u_a, u_b, 1.0);
        let mut factor = 1.0;
        while found.len() as i64 != expected && factor > 1.0 / 64.0 {
            factor /= 4.0;
            found = scan_z(u_a, u_b, factor);
        }
        if found.len() as i64 != expected && u_b < u_max {
            return Err(Error::MissedZero { t_lo: u_a / 2.0, t_hi: u_b / 2.0, found: found.len(), expected });
        }
        brackets.extend(found);
        u_a = u_b;
        n_a = n_b;
    }
    let mut out = Vec::with_capacity(brackets.len());
    for (a, b, za, zb) in brackets {
        let scale = za.abs().max(zb.abs());
        // refine in t so the bracket widths are measured in the table's coordinate
        let g = |t: f64| hardy_z(2.0 * t).0;
        let br = refine(g, a / 2.0, b / 2.0, za, zb, BISECT_WIDTH, FINAL_WIDTH)?;
        let t = br.mid();
        out.push(ZeroRecord {
            function_id: FunctionId::ZetaLine,
            index: out.len() + 1,
            location: ComplexValue::new(0.5, t),
            residual: hardy_z(2.0 * t).0.abs() / scale,
            width: br.width(),
        });
    }
    Ok(out)
}

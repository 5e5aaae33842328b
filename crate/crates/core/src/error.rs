use core::fmt;

use crate::ComplexValue;

pub type Result<T> = core::result::Result<T, Error>;

/// Failures reported by the numerical routines.
///
/// Poles are normally reported through [`crate::EvalResult::at_pole`] so that scans can
/// continue; the `Pole` variant is used only where a finite value is required.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A precondition on an argument was violated.
    Domain(&'static str),
    /// The function has a pole (or is indeterminate) at the given point.
    Pole(ComplexValue),
    /// Adaptive sampling needed a step below the allowed minimum.
    StepUnderflow { at: f64 },
    /// A zero count disagreed with the phase-increment prediction.
    MissedZero { t_lo: f64, t_hi: f64, found: usize, expected: i64 },
    /// A winding number was not within tolerance of an integer.
    NonIntegerWinding(f64),
    /// The rectangle boundary passes too close to a zero or pole, even after nudging.
    BoundarySingularity { near: ComplexValue },
    /// A zero table does not reach the requested index.
    InsufficientTable { needed: usize, available: usize },
    /// A grid request is too large or degenerate.
    Grid(&'static str),
    /// An iteration failed to converge.
    NoConvergence(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Pole(s) => write!(f, "pole at {} {:+}i", s.re, s.im),
            Error::StepUnderflow { at } => write!(f, "phase step underflow near t = {at}"),
            Error::MissedZero { t_lo, t_hi, found, expected } => write!(
                f,
                "missed-zero alarm on [{t_lo}, {t_hi}]: found {found}, phase predicts {expected}"
            ),
            Error::NonIntegerWinding(w) => write!(f, "winding {w} is not close to an integer"),
            Error::BoundarySingularity { near } => {
                write!(f, "singularity on contour boundary near {} {:+}i", near.re, near.im)
            }
            Error::InsufficientTable { needed, available } => {
                write!(f, "zero table has {available} entries, {needed} needed")
            }
            Error::Grid(msg) => write!(f, "grid error: {msg}"),
            Error::NoConvergence(what) => write!(f, "no convergence: {what}"),
        }
    }
}

impl core::error::Error for Error {}

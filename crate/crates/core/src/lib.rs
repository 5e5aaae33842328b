//! Numerical core for studying the completed zeta function `ξ₁(s) = π^{-s/2} Γ(s/2) ζ(s)`
//! and the critical-line combinations built from `ξ₁(2s)` and `ξ₁(2s-1)`.
//!
//! The crate is `no_std` compatible (it needs `alloc`). The default `std` and `parallel`
//! features switch the float backend to the platform libm and let grid scans run on rayon.
//!
//! Module map:
//!
//! * [`complexfn`]: `log Γ`, `ψ`, `ζ`, `ζ'` and the `ξ₁` variants.
//! * [`combinators`]: `T±`, `U`, `V`, `W`, the Lagarias–Suzuki and Ki auxiliaries, the
//!   off-axis counterexample family and the partial-fraction form of `Re U'/U`.
//! * [`critline`]: phase tracking of `θ₁(t) = arg ξ₁(1+2it)`, zero tables and the
//!   positional/translation experiments.
//! * [`planar`]: grid fields, equimodular contours, quadrant classification, derivative
//!   zeros, proposition checks and topology reports.
//! * [`counting`]: argument-principle censuses and main-term comparisons.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod combinators;
pub mod complexfn;
pub mod counting;
pub mod critline;
mod error;
pub mod planar;
pub mod roots;

pub use complexfn::{ComplexValue, EvalResult};
pub use error::{Error, Result};

/// Version tag stamped into cached tables and artifacts.
pub const CODE_VERSION: &str = concat!("critline-core/", env!("CARGO_PKG_VERSION"));

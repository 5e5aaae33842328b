//! The `s`-plane picture: grid fields, level curves of `|V|`, quadrant maps of `arg U`,
//! zeros of `U'`, and the checks built on them.
//!
//! Every routine accepts an optional [`CounterexampleSpec`](crate::combinators::CounterexampleSpec);
//! `None` means the plain `U = ξ₁(2s-1)/ξ₁(2s)` and `Some` the off-axis variant `U·F`.

mod classify;
mod contour;
mod deriv;
mod grid;
mod line;
mod props;
mod topology;

pub use classify::{classify, classify_state, Quadrant, QuadrantClass};
pub use contour::{extract_contours, iso_lines, Contour, Modulus};
pub use deriv::{derivative_zeros, factor_derivative_zero, DerivativeZero, DerivativeZeroScan};
pub use grid::{grid_eval, FieldFn, GridField, Window, MAX_NODES};
pub use line::{line_points, LinePoints};
pub use props::{check_propositions, derivative_zeros_tall, PropositionReport, Verdict, Witness};
pub use topology::{quadrant_map, topology_report, QuadrantMap, TopologyReport, ZeroTopology};

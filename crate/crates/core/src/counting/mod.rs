//! Argument-principle censuses and the zero-distribution laws they are compared with.

mod laws;
mod winding;
mod ystar;

pub use laws::{a0_excess_slope, count_compare, deviation_bound, main_term, MainTerm, A0_STRIP};
pub use winding::{winding_count, CountFn, CountReport};
pub use ystar::{bifurcation_bracket, y_star_scan, Y_STAR};

#[cfg(test)]
mod tests;

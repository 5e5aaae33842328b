//! The critical line: phase tracking of `θ₁`, zero tables, interlacing and the positional
//! experiments.

mod experiments;
mod phase;
mod zeros;

pub use experiments::{
    interlacing_check, positional_experiment, translation_scan, PositionalMode, PositionalReport, Violation,
    ZeroTables,
};
pub use phase::{track_phase, track_phase_with_step, PhaseTrack, DEFAULT_MAX_STEP};
pub use zeros::{line_zeros, ordinates, phase_zeros, zeta_count, FunctionId, ZeroRecord, BISECT_WIDTH, FINAL_WIDTH};

//! Interlacing and the positional/translation experiments between `T±` zeros and the zeros
//! of `ξ₁(2s - 1/2)`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::zeros::ZeroRecord;

/// One gap of a sorted table that does not contain exactly one zero of the other table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    /// `false` for a gap of the first table, `true` for a gap of the second.
    pub in_second: bool,
    /// Index of the lower zero of the gap, 1-based within its table.
    pub index: usize,
    pub t_lo: f64,
    pub t_hi: f64,
    /// Number of zeros of the other table strictly inside the gap.
    pub count: usize,
}

/// Gaps violating interlacing between two sorted tables.
///
/// Only gaps whose lower end is at or after the later of the two first zeros are examined,
/// and only while the other table extends past the gap.
pub fn interlacing_check(a: &[ZeroRecord], b: &[ZeroRecord]) -> Vec<Violation> {
    let ta: Vec<f64> = a.iter().map(ZeroRecord::t).collect();
    let tb: Vec<f64> = b.iter().map(ZeroRecord::t).collect();
    if ta.is_empty() || tb.is_empty() {
        return Vec::new();
    }
    let start = ta[0].max(tb[0]);
    let mut out = gaps(&ta, &tb, start, false);
    out.extend(gaps(&tb, &ta, start, true));
    out
}

fn gaps(x: &[f64], other: &[f64], start: f64, in_second: bool) -> Vec<Violation> {
    let last_other = other[other.len() - 1];
    let mut out = Vec::new();
    for (k, w) in x.windows(2).enumerate() {
        let (lo, hi) = (w[0], w[1]);
        if lo < start || hi > last_other {
            continue;
        }
        let first = other.partition_point(|&t| t <= lo);
        let count = other[first..].iter().take_while(|&&t| t < hi).count();
        if count != 1 {
            out.push(Violation { in_second, index: k + 1, t_lo: lo, t_hi: hi, count });
        }
    }
    out
}

/// The two positional questions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PositionalMode {
    /// Zeta-line zero `k` lies after `T₊` zero `k`.
    AfterTplus,
    /// Zeta-line zero `k` lies strictly between the `T₋` zeros bracketing position `k`.
    BetweenTminus,
}

/// Outcome of a positional experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionalReport {
    pub mode: PositionalMode,
    pub t0: f64,
    pub n_tested: usize,
    pub n_failures: usize,
    /// Sorted 1-based indices `k` of the zeta-line zeros that fail.
    pub failure_indices: Vec<usize>,
}

/// The three tables the experiments read.
#[derive(Debug, Clone, Copy)]
pub struct ZeroTables<'a> {
    pub tplus: &'a [ZeroRecord],
    pub tminus: &'a [ZeroRecord],
    pub zeta_line: &'a [ZeroRecord],
}

/// Run a positional experiment over `k = 1..=n` with the `T±` zeros translated by `t0`.
///
/// The translation is `s → s + it₀`, which moves every `T±` zero from `t` to `t - t₀`.
///
/// * `AfterTplus`: zeta-line zero `k` must lie above `T₊` zero `k`.
/// * `BetweenTminus`: zeta-line zero `k + 1` must lie strictly inside the gap between `T₋`
///   zeros `k` and `k + 1`; a failure is labelled by the gap index `k`. (The first zeta-line
///   zero lies below the first complex `T₋` zero and has no gap of its own.)
///
/// All indices are 1-based.
pub fn positional_experiment(n: usize, mode: PositionalMode, t0: f64, tables: ZeroTables<'_>) -> Result<PositionalReport> {
    let (need_zeta, need_t, have_t) = match mode {
        PositionalMode::AfterTplus => (n, n, tables.tplus.len()),
        PositionalMode::BetweenTminus => (n + 1, n + 1, tables.tminus.len()),
    };
    if need_zeta > tables.zeta_line.len() {
        return Err(Error::InsufficientTable { needed: need_zeta, available: tables.zeta_line.len() });
    }
    if need_t > have_t {
        return Err(Error::InsufficientTable { needed: need_t, available: have_t });
    }
    let mut failures = Vec::new();
    for k in 1..=n {
        let ok = match mode {
            PositionalMode::AfterTplus => tables.zeta_line[k - 1].t() > tables.tplus[k - 1].t() - t0,
            PositionalMode::BetweenTminus => {
                let z = tables.zeta_line[k].t();
                z > tables.tminus[k - 1].t() - t0 && z < tables.tminus[k].t() - t0
            }
        };
        if !ok {
            failures.push(k);
        }
    }
    Ok(PositionalReport { mode, t0, n_tested: n, n_failures: failures.len(), failure_indices: failures })
}

/// The longest contiguous run of grid values for which the `BetweenTminus` experiment has no
/// failures, as `(first, last)`; `None` if no grid value succeeds.
pub fn translation_scan(n: usize, t0_grid: &[f64], tables: ZeroTables<'_>) -> Result<Option<(f64, f64)>> {
    let mut best: Option<(usize, usize)> = None;
    let mut run_start: Option<usize> = None;
    for (i, &t0) in t0_grid.iter().enumerate() {
        let ok = positional_experiment(n, PositionalMode::BetweenTminus, t0, tables)?.n_failures == 0;
        match (ok, run_start) {
            (true, None) => run_start = Some(i),
            (false, Some(s)) => {
                best = longer(best, (s, i - 1));
                run_start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = run_start {
        best = longer(best, (s, t0_grid.len() - 1));
    }
    Ok(best.map(|(a, b)| (t0_grid[a], t0_grid[b])))
}

fn longer(best: Option<(usize, usize)>, cand: (usize, usize)) -> Option<(usize, usize)> {
    match best {
        Some(b) if b.1 - b.0 >= cand.1 - cand.0 => Some(b),
        _ => Some(cand),
    }
}

//! Oracle fixture files: CSV with columns `function,re_in,im_in,re_out,im_out,digits`.

use std::path::Path;

use critline_core::ComplexValue;

use crate::error::{CliError, Result};
use crate::functions::PointFn;

pub const COLUMNS: &str = "function,re_in,im_in,re_out,im_out,digits";

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureRow {
    pub function: String,
    pub input: ComplexValue,
    pub output: ComplexValue,
    pub digits: u32,
}

pub fn parse_fixtures(text: &str, origin: &str) -> Result<Vec<FixtureRow>> {
    let bad = |msg: String| CliError::Table { path: origin.to_string(), msg };
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes());
    let columns = reader.headers().map_err(|e| bad(e.to_string()))?.iter().collect::<Vec<_>>().join(",");
    if columns != COLUMNS {
        return Err(bad(format!("columns `{columns}`, expected `{COLUMNS}`")));
    }
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        let num = |i: usize| {
            let f = rec.get(i).unwrap_or("");
            f.parse::<f64>().map_err(|e| bad(format!("line {line}: `{f}`: {e}")))
        };
        let digits = rec.get(5).unwrap_or("").parse::<u32>().map_err(|e| bad(format!("line {line}: digits: {e}")))?;
        rows.push(FixtureRow {
            function: rec.get(0).unwrap_or("").to_string(),
            input: ComplexValue::new(num(1)?, num(2)?),
            output: ComplexValue::new(num(3)?, num(4)?),
            digits,
        });
    }
    Ok(rows)
}

pub fn read_fixtures(path: &Path) -> Result<Vec<FixtureRow>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_fixtures(&text, &path.display().to_string())
}

pub fn render_fixtures(rows: &[FixtureRow]) -> String {
    let mut out = format!("{COLUMNS}\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{},{},{}\n", r.function, r.input.re, r.input.im, r.output.re, r.output.im, r.digits));
    }
    out
}

/// Outcome of re-evaluating one fixture row.
#[derive(Debug, Clone)]
pub struct FixtureCheck {
    pub row: FixtureRow,
    /// `None` when the row's function has no point evaluator.
    pub got: Option<ComplexValue>,
    pub rel_err: f64,
}

/// Evaluate every row whose function name is a known point function.
pub fn check_fixtures(rows: &[FixtureRow]) -> Vec<FixtureCheck> {
    rows.iter()
        .map(|row| {
            let got = PointFn::parse(&row.function, None, None).ok().map(|f| f.eval(row.input).value);
            let rel_err = got.map_or(f64::NAN, |g| (g - row.output).norm() / row.output.norm().max(1.0));
            FixtureCheck { row: row.clone(), got, rel_err }
        })
        .collect()
}

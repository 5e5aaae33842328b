//! Zero-table CSV: a block of `# key = value` comment lines followed by
//! `function,index,t,residual,width`, one row per zero in increasing `t`.
//!
//! Floats are written in Rust's shortest round-trip form, so parsing a table and writing it
//! again reproduces the bytes exactly.

use std::fmt::Write as _;

use critline_core::critline::{FunctionId, ZeroRecord};
use critline_core::ComplexValue;
use sha2::{Digest, Sha256};

use crate::config::hex16;
use crate::error::{CliError, Result};

pub const COLUMNS: &str = "function,index,t,residual,width";

#[derive(Debug, Clone, PartialEq)]
pub struct TableHeader {
    pub function: FunctionId,
    pub t_max: f64,
    pub code_version: String,
    pub config_hash: String,
}

impl TableHeader {
    pub fn new(function: FunctionId, t_max: f64, code_version: &str) -> Self {
        Self { function, t_max, code_version: code_version.to_string(), config_hash: table_hash(function, t_max) }
    }
}

/// Hash of the settings a table depends on.
pub fn table_hash(function: FunctionId, t_max: f64) -> String {
    let mut h = Sha256::new();
    h.update(format!("function={}\nt_max={}\n", function.name(), t_max));
    hex16(&h.finalize())
}

pub fn render_table(header: &TableHeader, records: &[ZeroRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 8));
    out.push_str("# critline zero table\n");
    let _ = writeln!(out, "# function = {}", header.function.name());
    let _ = writeln!(out, "# t_max = {}", header.t_max);
    let _ = writeln!(out, "# code_version = {}", header.code_version);
    let _ = writeln!(out, "# config_hash = {}", header.config_hash);
    out.push_str(COLUMNS);
    out.push('\n');
    for r in records {
        let _ = writeln!(out, "{},{},{},{:e},{:e}", r.function_id.name(), r.index, r.t(), r.residual, r.width);
    }
    out
}

pub fn parse_table(text: &str, origin: &str) -> Result<(TableHeader, Vec<ZeroRecord>)> {
    let bad = |msg: String| CliError::Table { path: origin.to_string(), msg };
    let mut function = None;
    let mut t_max = None;
    let mut code_version = None;
    let mut config_hash = None;
    for line in text.lines().take_while(|l| l.starts_with('#')) {
        let Some((k, v)) = line[1..].split_once('=') else { continue };
        let v = v.trim();
        match k.trim() {
            "function" => function = FunctionId::from_name(v),
            "t_max" => t_max = v.parse::<f64>().ok(),
            "code_version" => code_version = Some(v.to_string()),
            "config_hash" => config_hash = Some(v.to_string()),
            _ => {}
        }
    }
    let header = TableHeader {
        function: function.ok_or_else(|| bad("missing or unknown `function` header".into()))?,
        t_max: t_max.ok_or_else(|| bad("missing `t_max` header".into()))?,
        code_version: code_version.ok_or_else(|| bad("missing `code_version` header".into()))?,
        config_hash: config_hash.ok_or_else(|| bad("missing `config_hash` header".into()))?,
    };

    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let columns = reader.headers().map_err(|e| bad(e.to_string()))?.iter().collect::<Vec<_>>().join(",");
    if columns != COLUMNS {
        return Err(bad(format!("columns `{columns}`, expected `{COLUMNS}`")));
    }
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| bad(e.to_string()))?;
        let line = row.position().map_or(0, |p| p.line());
        let field = |i: usize| row.get(i).unwrap_or("");
        let num = |i: usize| field(i).parse::<f64>().map_err(|e| bad(format!("line {line}: `{}`: {e}", field(i))));
        let function_id = FunctionId::from_name(field(0)).ok_or_else(|| bad(format!("line {line}: unknown function `{}`", field(0))))?;
        if function_id != header.function {
            return Err(bad(format!("line {line}: row function differs from header")));
        }
        let index = field(1).parse::<usize>().map_err(|e| bad(format!("line {line}: index: {e}")))?;
        if index != records.len() + 1 {
            return Err(bad(format!("line {line}: index {index} out of sequence")));
        }
        records.push(ZeroRecord {
            function_id,
            index,
            location: ComplexValue::new(0.5, num(2)?),
            residual: num(3)?,
            width: num(4)?,
        });
    }
    Ok((header, records))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(index: usize, t: f64) -> ZeroRecord {
        ZeroRecord { function_id: FunctionId::Tminus, index, location: ComplexValue::new(0.5, t), residual: 1e-12, width: 3e-9 }
    }

    #[test]
    fn render_parse_render_is_identity() {
        let header = TableHeader::new(FunctionId::Tminus, 10.0, "test/1");
        let text = render_table(&header, &[rec(1, 7.661_108_1), rec(2, 9.999_999_999_999_998)]);
        let (h, r) = parse_table(&text, "mem").unwrap();
        assert_eq!(h, header);
        assert_eq!(render_table(&h, &r), text);
    }

    #[test]
    fn rejects_gaps_and_bad_columns() {
        let header = TableHeader::new(FunctionId::Tminus, 10.0, "test/1");
        let text = render_table(&header, &[rec(1, 7.0), rec(3, 8.0)]);
        assert!(parse_table(&text, "mem").unwrap_err().to_string().contains("out of sequence"));
        let text = render_table(&header, &[]).replace(COLUMNS, "index,t");
        assert!(parse_table(&text, "mem").is_err());
    }
}

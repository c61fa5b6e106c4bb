//! The `.gyro` text format.
//!
//! ```text
//! # comments start with '#'
//! gyro 1
//! 4
//! 0 1 2 3
//! 1 2 3 0
//! 2 3 0 1
//! 3 0 1 2
//! ```
//!
//! ASCII with LF line endings. After comments are dropped the first line is
//! exactly `gyro 1`, the second the decimal order `n ≥ 1`, then `n` rows of
//! `n` space-separated entries in `0..n`; row `a` column `b` holds `a ⊕ b`.

use std::path::Path;

use crate::error::{GyroError, Result};
use crate::table::{Elem, GyroTable};

pub const HEADER: &str = "gyro 1";

/// Parse the raw rows without checking the axioms.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<Elem>>> {
    let bad = |msg: String| GyroError::Malformed(msg);
    if !text.is_ascii() {
        return Err(bad("file is not ASCII".into()));
    }
    if text.contains('\r') {
        return Err(bad("CR line endings are not allowed".into()));
    }
    let mut lines = text
        .split('\n')
        .enumerate()
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

    match lines.next() {
        Some((_, l)) if l == HEADER => {}
        Some((i, l)) => {
            return Err(bad(format!(
                "line {}: expected '{HEADER}', got '{l}'",
                i + 1
            )))
        }
        None => return Err(bad("missing header".into())),
    }
    let (i, order_line) = lines
        .next()
        .ok_or_else(|| bad("missing order line".into()))?;
    let n: usize = order_line
        .parse()
        .map_err(|_| bad(format!("line {}: bad order '{order_line}'", i + 1)))?;
    if n == 0 {
        return Err(bad("order must be at least 1".into()));
    }
    let mut rows = Vec::with_capacity(n);
    for (i, line) in lines.by_ref() {
        let row = line
            .split(' ')
            .map(|tok| {
                tok.parse::<Elem>()
                    .map_err(|_| bad(format!("line {}: bad entry '{tok}'", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(bad(format!(
                "line {}: expected {n} entries, got {}",
                i + 1,
                row.len()
            )));
        }
        if let Some(x) = row.iter().find(|&&x| x >= n) {
            return Err(bad(format!("line {}: entry {x} out of range", i + 1)));
        }
        rows.push(row);
        if rows.len() == n {
            break;
        }
    }
    if rows.len() != n {
        return Err(bad(format!("expected {n} rows, got {}", rows.len())));
    }
    if let Some((i, _)) = lines.next() {
        return Err(bad(format!("line {}: trailing content", i + 1)));
    }
    Ok(rows)
}

/// Parse and validate.
pub fn parse(text: &str) -> Result<GyroTable> {
    GyroTable::from_rows(&parse_rows(text)?)
}

pub fn read(path: &Path) -> Result<GyroTable> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GyroError::Malformed(format!("{}: {e}", path.display())))?;
    parse(&text)
}

/// Serialize, optionally with leading comment lines.
pub fn write(g: &GyroTable, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(&g.order().to_string());
    out.push('\n');
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

//! The generator-matrix text format.
//!
//! One row per line, each a string of `0`/`1` characters; every row has the
//! same length. Blank lines and lines whose first non-blank character is `#`
//! are ignored. Line numbers in errors are 1-based.

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

pub fn parse_matrix(text: &str) -> Result<Gf2Matrix> {
    let mut rows = Vec::new();
    let mut width: Option<(usize, usize)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = Gf2Vector::parse_bits(line).map_err(|e| Error::Parse {
            line: line_no,
            message: match e {
                Error::InvalidArgument(m) => m,
                other => other.to_string(),
            },
        })?;
        match width {
            None => width = Some((row.len(), line_no)),
            Some((w, first)) if w != row.len() => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!(
                        "row has length {}, but line {first} has length {w}",
                        row.len()
                    ),
                })
            }
            _ => {}
        }
        rows.push(row);
    }
    let n_cols = width.map_or(0, |(w, _)| w);
    Gf2Matrix::new(rows, n_cols)
}

pub fn format_matrix(m: &Gf2Matrix) -> String {
    m.to_text()
}

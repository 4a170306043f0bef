//! The `Q4CODE v1` text format.
//!
//! ```text
//! Q4CODE v1
//! N=2 GAMMA=1 DELTA=1
//! 02
//! 11
//! ```
//!
//! Rows are the canonical form, order-two rows first, one per line, LF
//! endings and no trailing whitespace.

use crate::code::QuaternaryCode;
use crate::error::{Error, Result};
use crate::gf4::Z4Vector;
use crate::matrix::GeneratorMatrix;

pub const HEADER: &str = "Q4CODE v1";

pub fn write_q4code(code: &QuaternaryCode) -> String {
    let mut out = format!("{HEADER}\n{}\n", code.code_type());
    for row in code.canonical().rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_type_line(line: &str) -> Result<(usize, usize, usize)> {
    let fields: Vec<&str> = line.split(' ').collect();
    let [n, g, d] = fields.as_slice() else {
        return Err(parse_error(2, "expected `N=<int> GAMMA=<int> DELTA=<int>`"));
    };
    let value = |field: &str, key: &str| -> Result<usize> {
        field
            .strip_prefix(key)
            .and_then(|v| v.strip_prefix('='))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| parse_error(2, format!("expected `{key}=<int>`, found `{field}`")))
    };
    Ok((value(n, "N")?, value(g, "GAMMA")?, value(d, "DELTA")?))
}

/// Parses a `Q4CODE v1` document and checks the declared type against the
/// rows. Rows need not be canonical.
pub fn read_q4code(text: &str) -> Result<QuaternaryCode> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    if lines.next() != Some(HEADER) {
        return Err(parse_error(1, format!("expected `{HEADER}`")));
    }
    let (n, gamma, delta) = parse_type_line(lines.next().unwrap_or(""))?;
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 3;
        if line.len() != n {
            return Err(parse_error(
                lineno,
                format!("row has {} symbols, expected {n}", line.len()),
            ));
        }
        let entries = line
            .bytes()
            .map(|b| match b {
                b'0'..=b'3' => Ok(b - b'0'),
                _ => Err(parse_error(
                    lineno,
                    format!("invalid symbol `{}`", b as char),
                )),
            })
            .collect::<Result<Vec<u8>>>()?;
        rows.push(Z4Vector::new(entries)?);
    }
    if rows.len() != gamma + delta {
        return Err(parse_error(
            rows.len() + 3,
            format!("expected {} rows, found {}", gamma + delta, rows.len()),
        ));
    }
    let code = QuaternaryCode::from_matrix(GeneratorMatrix::new(n, rows)?);
    if (code.gamma(), code.delta()) != (gamma, delta) {
        return Err(parse_error(
            2,
            format!(
                "declared GAMMA={gamma} DELTA={delta}, rows span GAMMA={} DELTA={}",
                code.gamma(),
                code.delta()
            ),
        ));
    }
    Ok(code)
}

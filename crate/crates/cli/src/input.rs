//! Parsing of matrices and parameter vectors.

use std::fs;
use std::str::FromStr;

use binhorn::linalg::IntMatrix;
use binhorn::Rat;
use num_bigint::BigInt;
use serde_json::Value;

/// Reads a matrix from a file, or parses the argument itself when it starts
/// with `[`. Text files hold one row per line with whitespace separated
/// integers; `#` starts a comment. JSON input is an array of rows.
pub fn read_matrix(arg: &str) -> Result<IntMatrix, String> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?
    };
    parse_matrix(&text).map_err(|e| format!("{arg}: {e}"))
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, String> {
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n");
    let rows = if body.trim_start().starts_with('[') {
        json_rows(&body)?
    } else {
        text_rows(&body)?
    };
    let cols = match rows.first() {
        Some(r) => r.len(),
        None => return Err("empty matrix".into()),
    };
    if cols == 0 {
        return Err("matrix rows are empty".into());
    }
    IntMatrix::from_rows(rows, cols).map_err(|e| e.to_string())
}

fn text_rows(body: &str) -> Result<Vec<Vec<BigInt>>, String> {
    body.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.split_whitespace()
                .map(|t| {
                    BigInt::from_str(t)
                        .map_err(|_| format!("line {}: `{t}` is not an integer", i + 1))
                })
                .collect()
        })
        .collect()
}

fn json_rows(body: &str) -> Result<Vec<Vec<BigInt>>, String> {
    let v: Value = serde_json::from_str(body).map_err(|e| format!("invalid JSON: {e}"))?;
    let rows = v.as_array().ok_or("expected an array of rows")?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| "expected each row to be an array".to_string())?
                .iter()
                .map(|x| match x {
                    Value::Number(n) if n.is_i64() || n.is_u64() => {
                        BigInt::from_str(&n.to_string()).map_err(|e| e.to_string())
                    }
                    Value::String(s) => {
                        BigInt::from_str(s).map_err(|_| format!("`{s}` is not an integer"))
                    }
                    other => Err(format!("`{other}` is not an integer")),
                })
                .collect()
        })
        .collect()
}

/// Parses `p/q` or `p`, rejecting zero denominators and anything else.
pub fn parse_rational(s: &str) -> Result<Rat, String> {
    let t = s.trim();
    let bad = || format!("`{t}` is not a rational number");
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(format!("`{t}` has a zero denominator"));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

/// Comma separated rationals; an empty string is the empty vector.
pub fn parse_vector(s: &str) -> Result<Vec<Rat>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

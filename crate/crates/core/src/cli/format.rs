//! The two matrix document formats.
//!
//! TEXT: rows separated by newlines or `;`, entries separated by whitespace.
//! Each entry is an integer (`-3`), a fraction (`2/3`) or a decimal (`0.5`,
//! converted exactly). Whitespace-only rows are skipped.
//!
//! STRUCTURED: a JSON object `{"rows": m, "cols": n, "data": [[...], ...]}`
//! whose entries are strings in the same entry grammar.
//!
//! A document whose first non-blank character is `{` is structured.

use std::fmt;
use std::path::PathBuf;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::rational::{parse_rational, Rational};

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Inline,
    File(PathBuf),
    Stdin,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Inline => write!(f, "<inline>"),
            Source::File(p) => write!(f, "{}", p.display()),
            Source::Stdin => write!(f, "<stdin>"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub source: Source,
    pub parsed: Matrix,
}

pub fn parse_matrix(text: &str) -> Result<Matrix, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_structured(text)
    } else {
        parse_text(text)
    }
}

fn parse_text(text: &str) -> Result<Matrix, ParseError> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut width: Option<usize> = None;

    for (line_idx, line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let mut offset = 0;
        for segment in line.split(';') {
            let seg_start = offset;
            offset += segment.len() + 1;
            let mut row = Vec::new();
            let mut row_col = None;
            for (pos, token) in tokens(segment) {
                let column = line[..seg_start + pos].chars().count() + 1;
                row_col.get_or_insert(column);
                let value = parse_rational(token)
                    .map_err(|e| ParseError::at(line_no, column, e.to_string()))?;
                row.push(value);
            }
            let Some(column) = row_col else { continue };
            match width {
                None => width = Some(row.len()),
                Some(w) if w != row.len() => {
                    return Err(ParseError::at(
                        line_no,
                        column,
                        format!("ragged rows: expected {w} entries, found {}", row.len()),
                    ));
                }
                Some(_) => {}
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Err(ParseError::at(1, 1, "empty matrix"));
    }
    Ok(Matrix::from_rows(rows).expect("rows checked rectangular and non-empty"))
}

/// Whitespace-separated tokens with their byte offsets.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = s;
    let mut base = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        base += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let out = (base, &trimmed[..end]);
        base += end;
        rest = &trimmed[end..];
        Some(out)
    })
}

fn parse_structured(text: &str) -> Result<Matrix, ParseError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| ParseError::at(e.line(), e.column(), format!("invalid JSON: {e}")))?;
    // positions inside a valid JSON document are not tracked per field
    let err = |msg: String| ParseError::at(1, 1, msg);
    let obj = value.as_object().ok_or_else(|| err("expected a JSON object".into()))?;
    let dim = |key: &str| -> Result<usize, ParseError> {
        obj.get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| err(format!("field `{key}` must be a non-negative integer")))
    };
    let (m, n) = (dim("rows")?, dim("cols")?);
    let data = obj
        .get("data")
        .and_then(Value::as_array)
        .ok_or_else(|| err("field `data` must be an array of rows".into()))?;
    if m == 0 || n == 0 || data.is_empty() {
        return Err(err("empty matrix".into()));
    }
    if data.len() != m {
        return Err(err(format!("`rows` is {m} but `data` has {} rows", data.len())));
    }
    let mut rows = Vec::with_capacity(m);
    for (i, row) in data.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| err(format!("data[{i}] must be an array")))?;
        if row.len() != n {
            return Err(err(format!("ragged rows: data[{i}] has {} entries, expected {n}", row.len())));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, v)| {
                let s = v
                    .as_str()
                    .ok_or_else(|| err(format!("data[{i}][{j}] must be a string")))?;
                parse_rational(s).map_err(|e| err(format!("data[{i}][{j}]: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(parsed);
    }
    Ok(Matrix::from_rows(rows).expect("rows checked rectangular and non-empty"))
}

pub fn to_text(m: &Matrix) -> String {
    m.to_string()
}

pub fn to_structured(m: &Matrix) -> Value {
    let data: Vec<Value> = m
        .row_iter()
        .map(|row| Value::Array(row.iter().map(|v| Value::String(v.to_string())).collect()))
        .collect();
    let mut obj = Map::new();
    obj.insert("rows".into(), json!(m.rows()));
    obj.insert("cols".into(), json!(m.cols()));
    obj.insert("data".into(), Value::Array(data));
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn text_examples() {
        assert_eq!(parse_matrix("1 2; 3 4").unwrap(), Matrix::from_ints(&[[1, 2], [3, 4]]));
        assert_eq!(
            parse_matrix("1/3 -1").unwrap(),
            Matrix::from_rows(vec![vec![frac(1, 3), int(-1)]]).unwrap()
        );
        assert_eq!(parse_matrix("0.5").unwrap(), Matrix::from_rows(vec![vec![frac(1, 2)]]).unwrap());
        assert_eq!(parse_matrix("1 2\n3 4\n").unwrap(), Matrix::from_ints(&[[1, 2], [3, 4]]));
        assert_eq!(parse_matrix("  1\t2 ;\n\n 3 4;").unwrap(), Matrix::from_ints(&[[1, 2], [3, 4]]));
    }

    #[test]
    fn text_errors_carry_positions() {
        let e = parse_matrix("1 2\n3").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        assert!(e.message.contains("ragged"));

        let e = parse_matrix("1 2; 3 x").unwrap_err();
        assert_eq!((e.line, e.column), (1, 8));

        let e = parse_matrix("1\n1/0").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        assert!(e.message.contains("zero denominator"));

        let e = parse_matrix("  \n ; ").unwrap_err();
        assert!(e.message.contains("empty"));
        assert!(parse_matrix("").is_err());
    }

    #[test]
    fn structured_examples() {
        let m = parse_matrix(r#"{"rows": 1, "cols": 2, "data": [["1/3", "-0.5"]]}"#).unwrap();
        assert_eq!(m, Matrix::from_rows(vec![vec![frac(1, 3), frac(-1, 2)]]).unwrap());
        assert_eq!(parse_matrix(&to_structured(&m).to_string()).unwrap(), m);
    }

    #[test]
    fn structured_errors() {
        for bad in [
            r#"{"rows": 1, "cols": 2, "data": [["1"]]}"#,
            r#"{"rows": 2, "cols": 1, "data": [["1"]]}"#,
            r#"{"rows": 1, "cols": 1, "data": [[1]]}"#,
            r#"{"rows": 1, "cols": 1, "data": [["1/0"]]}"#,
            r#"{"rows": 0, "cols": 0, "data": []}"#,
            r#"{"cols": 1, "data": [["1"]]}"#,
            r#"[1, 2]"#,
        ] {
            assert!(parse_matrix(bad).is_err(), "{bad}");
        }
        let e = parse_matrix("{\n  \"rows\": 1,\n  oops }").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn text_round_trip() {
        let m = Matrix::from_rows(vec![vec![frac(-7, 3), int(0), frac(1, 10)], vec![int(4), frac(5, 2), int(-1)]]).unwrap();
        assert_eq!(parse_matrix(&to_text(&m)).unwrap(), m);
    }
}

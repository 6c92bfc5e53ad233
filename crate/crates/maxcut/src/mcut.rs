//! Reader for the MCUT text format.
//!
//! Grammar: `#` starts a comment; the first non-comment line is `n m`;
//! then `m` lines `i j w` with `1 <= i < j <= n`. Unlisted pairs have
//! weight 0. A weight token parses as an integer when it has no decimal
//! point, otherwise as a real; the matrix is integer-exact iff every
//! weight value is integral.

use std::path::Path;

use crate::error::ParseError;
use crate::graph::{DynWeightMatrix, WeightMatrix};

#[derive(Debug, Clone, Copy)]
enum Value {
    Int(i64),
    Real(f64),
}

impl Value {
    fn as_f64(self) -> f64 {
        match self {
            Value::Int(v) => v as f64,
            Value::Real(v) => v,
        }
    }

    fn integral(self) -> Option<i64> {
        match self {
            Value::Int(v) => Some(v),
            Value::Real(v) => {
                (v.fract() == 0.0 && v.abs() <= 2f64.powi(53)).then_some(v as i64)
            }
        }
    }
}

/// Parse MCUT text into a weight matrix in the appropriate arithmetic mode.
pub fn parse_mcut(text: &str) -> Result<DynWeightMatrix, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, Value)> = Vec::new();
    let mut seen: Vec<bool> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => raw[..pos].trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 2 {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: "expected header `n m`".to_string(),
                    });
                }
                let n = parse_count(fields[0], line_no)?;
                let m = parse_count(fields[1], line_no)?;
                if n < 1 {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: "n must be at least 1".to_string(),
                    });
                }
                seen = vec![false; n * n];
                header = Some((n, m));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: format!("unexpected data after {m} edge lines"),
                    });
                }
                if fields.len() != 3 {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: "expected edge line `i j w`".to_string(),
                    });
                }
                let i = parse_count(fields[0], line_no)?;
                let j = parse_count(fields[1], line_no)?;
                if i < 1 || i > n || j < 1 || j > n {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: format!("vertex index out of range 1..={n}"),
                    });
                }
                if i >= j {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: format!("edge ({i}, {j}) requires i < j"),
                    });
                }
                if seen[(i - 1) * n + (j - 1)] {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: format!("duplicate edge ({i}, {j})"),
                    });
                }
                seen[(i - 1) * n + (j - 1)] = true;
                let weight = parse_weight(fields[2], line_no)?;
                edges.push((i - 1, j - 1, weight));
            }
        }
    }

    let (n, m) = header.ok_or(ParseError::Syntax {
        line: 0,
        message: "empty file: missing `n m` header".to_string(),
    })?;
    if edges.len() != m {
        return Err(ParseError::SectionLength { section: "edge list", expected: m, got: edges.len() });
    }

    let all_integral = edges.iter().all(|(_, _, v)| v.integral().is_some());
    if all_integral {
        let int_edges: Vec<(usize, usize, i64)> =
            edges.iter().map(|&(i, j, v)| (i, j, v.integral().unwrap())).collect();
        Ok(DynWeightMatrix::Int(WeightMatrix::from_edges(n, &int_edges)?))
    } else {
        let real_edges: Vec<(usize, usize, f64)> =
            edges.iter().map(|&(i, j, v)| (i, j, v.as_f64())).collect();
        Ok(DynWeightMatrix::Real(WeightMatrix::from_edges(n, &real_edges)?))
    }
}

/// Read and parse an `.mcut` file from disk.
pub fn parse_mcut_file(path: &Path) -> Result<DynWeightMatrix, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse_mcut(&text)
}

fn parse_count(token: &str, line_no: usize) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::BadToken { line: line_no, token: token.to_string() })
}

fn parse_weight(token: &str, line_no: usize) -> Result<Value, ParseError> {
    let bad = || ParseError::BadToken { line: line_no, token: token.to_string() };
    if token.contains(['.', 'e', 'E']) {
        let v: f64 = token.parse().map_err(|_| bad())?;
        if !v.is_finite() {
            return Err(bad());
        }
        Ok(Value::Real(v))
    } else {
        Ok(Value::Int(token.parse().map_err(|_| bad())?))
    }
}

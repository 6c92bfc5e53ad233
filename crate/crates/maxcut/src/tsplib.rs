//! TSPLIB-95 instance reader covering the subset the benchmark suite needs:
//! `EDGE_WEIGHT_TYPE: EXPLICIT` (all row-oriented formats plus FULL_MATRIX)
//! and `EUC_2D`. Anything else is an explicit error rather than a misparse.

use std::path::Path;

use crate::error::ParseError;
use crate::graph::WeightMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightType {
    Explicit,
    Euc2d,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightFormat {
    FullMatrix,
    UpperRow,
    LowerRow,
    UpperDiagRow,
    LowerDiagRow,
}

impl WeightFormat {
    /// Number of values the EDGE_WEIGHT_SECTION must hold for dimension `n`.
    pub fn expected_len(self, n: usize) -> usize {
        match self {
            WeightFormat::FullMatrix => n * n,
            WeightFormat::UpperRow | WeightFormat::LowerRow => n * (n - 1) / 2,
            WeightFormat::UpperDiagRow | WeightFormat::LowerDiagRow => n * (n + 1) / 2,
        }
    }
}

/// Structured view of a parsed `.tsp` file.
#[derive(Debug, Clone)]
pub struct TsplibInstance {
    pub name: String,
    pub dimension: usize,
    pub weight_type: WeightType,
    /// Present exactly for EXPLICIT instances.
    pub weight_format: Option<WeightFormat>,
    /// Present exactly for EUC_2D instances.
    pub coords: Option<Vec<(f64, f64)>>,
    /// Flat EDGE_WEIGHT_SECTION values in file order (EXPLICIT only).
    pub explicit_weights: Option<Vec<i64>>,
}

/// TSPLIB nearest-integer rule: `nint(x) = floor(x + 0.5)`.
pub fn nint(x: f64) -> i64 {
    (x + 0.5).floor() as i64
}

enum Section {
    Weights,
    Coords,
    Display,
}

struct RawHeader {
    name: Option<String>,
    dimension: Option<usize>,
    weight_type: Option<String>,
    weight_format: Option<String>,
}

/// Parse the contents of a `.tsp` file.
pub fn parse_tsplib(text: &str) -> Result<TsplibInstance, ParseError> {
    let mut header =
        RawHeader { name: None, dimension: None, weight_type: None, weight_format: None };
    let mut weights: Vec<i64> = Vec::new();
    let mut coords: Vec<Option<(f64, f64)>> = Vec::new();
    let mut section: Option<Section> = None;
    let mut remaining = 0usize; // values (weights) or rows (coords/display) left
    let mut saw_weights = false;
    let mut saw_coords = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.eq_ignore_ascii_case("EOF") {
            break;
        }

        if let Some(open) = &section {
            if remaining > 0 {
                match open {
                    Section::Weights => {
                        for token in line.split_whitespace() {
                            if remaining == 0 {
                                return Err(ParseError::SectionLength {
                                    section: "EDGE_WEIGHT_SECTION",
                                    expected: weights.len(),
                                    got: weights.len() + 1,
                                });
                            }
                            let value: i64 = token.parse().map_err(|_| ParseError::BadToken {
                                line: line_no,
                                token: token.to_string(),
                            })?;
                            weights.push(value);
                            remaining -= 1;
                        }
                    }
                    Section::Coords => {
                        let (index, x, y) = parse_coord_row(line, line_no)?;
                        if index == 0 || index > coords.len() {
                            return Err(ParseError::Syntax {
                                line: line_no,
                                message: format!("node index {index} out of range"),
                            });
                        }
                        if coords[index - 1].is_some() {
                            return Err(ParseError::Syntax {
                                line: line_no,
                                message: format!("duplicate coordinates for node {index}"),
                            });
                        }
                        coords[index - 1] = Some((x, y));
                        remaining -= 1;
                    }
                    Section::Display => {
                        parse_coord_row(line, line_no)?; // validated, then ignored
                        remaining -= 1;
                    }
                }
                if remaining == 0 {
                    section = None;
                }
                continue;
            }
        }

        if let Some((key, value)) = line.split_once(':') {
            let key = key.trim().to_ascii_uppercase();
            let value = value.trim();
            match key.as_str() {
                "NAME" => header.name = Some(value.to_string()),
                "DIMENSION" => {
                    let n: usize = value.parse().map_err(|_| ParseError::BadToken {
                        line: line_no,
                        token: value.to_string(),
                    })?;
                    header.dimension = Some(n);
                }
                "EDGE_WEIGHT_TYPE" => header.weight_type = Some(value.to_string()),
                "EDGE_WEIGHT_FORMAT" => header.weight_format = Some(value.to_string()),
                // TYPE, COMMENT, DISPLAY_DATA_TYPE, NODE_COORD_TYPE, ... are
                // irrelevant for the weight matrix.
                _ => {}
            }
            continue;
        }

        let marker = line.to_ascii_uppercase();
        match marker.as_str() {
            "EDGE_WEIGHT_SECTION" => {
                let n = header.dimension.ok_or(ParseError::MissingKeyword("DIMENSION"))?;
                let format = resolve_format(&header)?;
                remaining = format.expected_len(n);
                saw_weights = true;
                weights.reserve(remaining);
                section = if remaining > 0 { Some(Section::Weights) } else { None };
            }
            "NODE_COORD_SECTION" => {
                let n = header.dimension.ok_or(ParseError::MissingKeyword("DIMENSION"))?;
                coords = vec![None; n];
                remaining = n;
                saw_coords = true;
                section = if n > 0 { Some(Section::Coords) } else { None };
            }
            "DISPLAY_DATA_SECTION" => {
                let n = header.dimension.ok_or(ParseError::MissingKeyword("DIMENSION"))?;
                remaining = n;
                section = if n > 0 { Some(Section::Display) } else { None };
            }
            _ => {
                return Err(ParseError::Syntax {
                    line: line_no,
                    message: format!("unexpected line {line:?}"),
                });
            }
        }
    }

    if let Some(open) = section {
        let (section_name, expected, got) = match open {
            Section::Weights => {
                ("EDGE_WEIGHT_SECTION", weights.len() + remaining, weights.len())
            }
            Section::Coords => {
                let n = coords.len();
                ("NODE_COORD_SECTION", n, n - remaining)
            }
            Section::Display => ("DISPLAY_DATA_SECTION", remaining, 0),
        };
        return Err(ParseError::SectionLength { section: section_name, expected, got });
    }

    let dimension = header.dimension.ok_or(ParseError::MissingKeyword("DIMENSION"))?;
    let type_text =
        header.weight_type.clone().ok_or(ParseError::MissingKeyword("EDGE_WEIGHT_TYPE"))?;
    let weight_type = match type_text.to_ascii_uppercase().as_str() {
        "EXPLICIT" => WeightType::Explicit,
        "EUC_2D" => WeightType::Euc2d,
        _ => return Err(ParseError::UnsupportedWeightType(type_text)),
    };
    let name = header.name.clone().ok_or(ParseError::MissingKeyword("NAME"))?;

    match weight_type {
        WeightType::Explicit => {
            if !saw_weights {
                return Err(ParseError::MissingKeyword("EDGE_WEIGHT_SECTION"));
            }
            let format = resolve_format(&header)?;
            Ok(TsplibInstance {
                name,
                dimension,
                weight_type,
                weight_format: Some(format),
                coords: None,
                explicit_weights: Some(weights),
            })
        }
        WeightType::Euc2d => {
            if !saw_coords {
                return Err(ParseError::MissingKeyword("NODE_COORD_SECTION"));
            }
            let filled: Vec<(f64, f64)> = coords.iter().flatten().copied().collect();
            if filled.len() != dimension {
                return Err(ParseError::SectionLength {
                    section: "NODE_COORD_SECTION",
                    expected: dimension,
                    got: filled.len(),
                });
            }
            Ok(TsplibInstance {
                name,
                dimension,
                weight_type,
                weight_format: None,
                coords: Some(filled),
                explicit_weights: None,
            })
        }
    }
}

/// Read and parse a `.tsp` file from disk.
pub fn parse_tsplib_file(path: &Path) -> Result<TsplibInstance, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| ParseError::Io { path: path.display().to_string(), source })?;
    parse_tsplib(&text)
}

fn resolve_format(header: &RawHeader) -> Result<WeightFormat, ParseError> {
    let text = header.weight_format.as_deref().unwrap_or("");
    match text.to_ascii_uppercase().as_str() {
        "FULL_MATRIX" => Ok(WeightFormat::FullMatrix),
        "UPPER_ROW" => Ok(WeightFormat::UpperRow),
        "LOWER_ROW" => Ok(WeightFormat::LowerRow),
        "UPPER_DIAG_ROW" => Ok(WeightFormat::UpperDiagRow),
        "LOWER_DIAG_ROW" => Ok(WeightFormat::LowerDiagRow),
        _ => Err(ParseError::UnsupportedWeightFormat(text.to_string())),
    }
}

fn parse_coord_row(line: &str, line_no: usize) -> Result<(usize, f64, f64), ParseError> {
    let mut parts = line.split_whitespace();
    let bad = |token: &str| ParseError::BadToken { line: line_no, token: token.to_string() };
    let index_tok = parts.next().ok_or_else(|| bad(""))?;
    let x_tok = parts.next().ok_or_else(|| bad(""))?;
    let y_tok = parts.next().ok_or_else(|| bad(""))?;
    if parts.next().is_some() {
        return Err(ParseError::Syntax {
            line: line_no,
            message: "expected `index x y`".to_string(),
        });
    }
    let index: usize = index_tok.parse().map_err(|_| bad(index_tok))?;
    let x: f64 = x_tok.parse().map_err(|_| bad(x_tok))?;
    let y: f64 = y_tok.parse().map_err(|_| bad(y_tok))?;
    Ok((index, x, y))
}

impl TsplibInstance {
    /// Expand to a symmetric integer weight matrix. EXPLICIT listings are
    /// mirrored; EUC_2D distances are `nint` of the Euclidean distance, the
    /// TSPLIB rounding rule.
    pub fn to_weight_matrix(&self) -> Result<WeightMatrix<i64>, ParseError> {
        let n = self.dimension;
        match self.weight_type {
            WeightType::Explicit => {
                let format = self.weight_format.expect("EXPLICIT instances carry a format");
                let values = self.explicit_weights.as_ref().expect("EXPLICIT carries weights");
                let expected = format.expected_len(n);
                if values.len() != expected {
                    return Err(ParseError::SectionLength {
                        section: "EDGE_WEIGHT_SECTION",
                        expected,
                        got: values.len(),
                    });
                }
                let mut dense = vec![0i64; n * n];
                let mut it = values.iter().copied();
                let mut put = |i: usize, j: usize, v: i64| {
                    dense[i * n + j] = v;
                    dense[j * n + i] = v;
                };
                match format {
                    WeightFormat::FullMatrix => {
                        for i in 0..n {
                            for j in 0..n {
                                dense[i * n + j] = it.next().unwrap();
                            }
                        }
                    }
                    WeightFormat::UpperRow => {
                        for i in 0..n {
                            for j in (i + 1)..n {
                                put(i, j, it.next().unwrap());
                            }
                        }
                    }
                    WeightFormat::LowerRow => {
                        for i in 0..n {
                            for j in 0..i {
                                put(i, j, it.next().unwrap());
                            }
                        }
                    }
                    WeightFormat::UpperDiagRow => {
                        for i in 0..n {
                            for j in i..n {
                                put(i, j, it.next().unwrap());
                            }
                        }
                    }
                    WeightFormat::LowerDiagRow => {
                        for i in 0..n {
                            for j in 0..=i {
                                put(i, j, it.next().unwrap());
                            }
                        }
                    }
                }
                Ok(WeightMatrix::from_dense(n, dense)?)
            }
            WeightType::Euc2d => {
                let coords = self.coords.as_ref().expect("EUC_2D carries coordinates");
                if coords.len() != n {
                    return Err(ParseError::SectionLength {
                        section: "NODE_COORD_SECTION",
                        expected: n,
                        got: coords.len(),
                    });
                }
                let mut dense = vec![0i64; n * n];
                for i in 0..n {
                    for j in (i + 1)..n {
                        let dx = coords[i].0 - coords[j].0;
                        let dy = coords[i].1 - coords[j].1;
                        let d = nint((dx * dx + dy * dy).sqrt());
                        dense[i * n + j] = d;
                        dense[j * n + i] = d;
                    }
                }
                Ok(WeightMatrix::from_dense(n, dense)?)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TINY_LOWER_DIAG: &str = "NAME: tiny\n\
        TYPE: TSP\n\
        DIMENSION: 3\n\
        EDGE_WEIGHT_TYPE: EXPLICIT\n\
        EDGE_WEIGHT_FORMAT: LOWER_DIAG_ROW\n\
        EDGE_WEIGHT_SECTION\n\
        0 1 0 2 3 0\n\
        EOF\n";

    #[test]
    fn parses_lower_diag_row() {
        let inst = parse_tsplib(TINY_LOWER_DIAG).unwrap();
        assert_eq!(inst.name, "tiny");
        assert_eq!(inst.dimension, 3);
        assert_eq!(inst.weight_type, WeightType::Explicit);
        assert_eq!(inst.weight_format, Some(WeightFormat::LowerDiagRow));
        let m = inst.to_weight_matrix().unwrap();
        assert_eq!(m.weight(0, 1), 1);
        assert_eq!(m.weight(0, 2), 2);
        assert_eq!(m.weight(1, 2), 3);
        assert_eq!(m.total_weight(), 6);
    }

    #[test]
    fn parses_all_explicit_formats() {
        // The same triangle listed five ways.
        let cases = [
            ("FULL_MATRIX", "0 1 2 1 0 3 2 3 0"),
            ("UPPER_ROW", "1 2 3"),
            ("LOWER_ROW", "1 2 3"),
            ("UPPER_DIAG_ROW", "0 1 2 0 3 0"),
            ("LOWER_DIAG_ROW", "0 1 0 2 3 0"),
        ];
        for (format, data) in cases {
            let text = format!(
                "NAME: t\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
                 EDGE_WEIGHT_FORMAT: {format}\nEDGE_WEIGHT_SECTION\n{data}\nEOF\n"
            );
            let m = parse_tsplib(&text).unwrap().to_weight_matrix().unwrap();
            assert_eq!(m.weight(0, 1), 1, "{format}");
            assert_eq!(m.weight(0, 2), 2, "{format}");
            assert_eq!(m.weight(1, 2), 3, "{format}");
        }
    }

    #[test]
    fn lower_row_orientation() {
        // LOWER_ROW row i holds w(i, 0..i): entries (1,0), (2,0), (2,1).
        let text = "NAME: t\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
                    EDGE_WEIGHT_FORMAT: LOWER_ROW\nEDGE_WEIGHT_SECTION\n10 20 30\nEOF\n";
        let m = parse_tsplib(text).unwrap().to_weight_matrix().unwrap();
        assert_eq!(m.weight(1, 0), 10);
        assert_eq!(m.weight(2, 0), 20);
        assert_eq!(m.weight(2, 1), 30);
    }

    #[test]
    fn euc2d_three_four_five() {
        let text = "NAME: p\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EUC_2D\n\
                    NODE_COORD_SECTION\n1 0 0\n2 3 4\nEOF\n";
        let inst = parse_tsplib(text).unwrap();
        assert_eq!(inst.weight_type, WeightType::Euc2d);
        let m = inst.to_weight_matrix().unwrap();
        assert_eq!(m.weight(0, 1), 5);
    }

    #[test]
    fn nint_rounds_halves_up() {
        assert_eq!(nint(2.5), 3);
        assert_eq!(nint(2.4999), 2);
        assert_eq!(nint(0.5), 1);
        assert_eq!(nint(7.0), 7);
    }

    #[test]
    fn geo_is_rejected() {
        let text = "NAME: g\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\n\
                    NODE_COORD_SECTION\n1 0 0\n2 1 1\n3 2 2\nEOF\n";
        match parse_tsplib(text) {
            Err(ParseError::UnsupportedWeightType(t)) => assert_eq!(t, "GEO"),
            other => panic!("expected unsupported type, got {other:?}"),
        }
    }

    #[test]
    fn truncated_section_is_rejected() {
        let text = "NAME: t\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
                    EDGE_WEIGHT_FORMAT: LOWER_DIAG_ROW\nEDGE_WEIGHT_SECTION\n0 1 0 2\nEOF\n";
        assert!(matches!(parse_tsplib(text), Err(ParseError::SectionLength { .. })));
    }

    #[test]
    fn non_numeric_token_is_rejected() {
        let text = "NAME: t\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
                    EDGE_WEIGHT_FORMAT: LOWER_DIAG_ROW\nEDGE_WEIGHT_SECTION\n0 1 0 x 3 0\nEOF\n";
        assert!(matches!(parse_tsplib(text), Err(ParseError::BadToken { line: 6, .. })));
    }

    #[test]
    fn spaced_colons_are_accepted() {
        let text = "NAME : spaced\nDIMENSION : 2\nEDGE_WEIGHT_TYPE : EUC_2D\n\
                    NODE_COORD_SECTION\n1 0 0\n2 3 4\nEOF\n";
        let inst = parse_tsplib(text).unwrap();
        assert_eq!(inst.name, "spaced");
        assert_eq!(inst.dimension, 2);
    }

    #[test]
    fn display_data_is_parsed_and_ignored() {
        let text = "NAME: t\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
                    EDGE_WEIGHT_FORMAT: UPPER_ROW\nDISPLAY_DATA_TYPE: TWOD_DISPLAY\n\
                    EDGE_WEIGHT_SECTION\n42\nDISPLAY_DATA_SECTION\n1 0.5 0.5\n2 1.5 1.5\nEOF\n";
        let m = parse_tsplib(text).unwrap().to_weight_matrix().unwrap();
        assert_eq!(m.weight(0, 1), 42);
    }

    #[test]
    fn nonzero_diagonal_is_rejected() {
        let text = "NAME: t\nDIMENSION: 2\nEDGE_WEIGHT_TYPE: EXPLICIT\n\
                    EDGE_WEIGHT_FORMAT: LOWER_DIAG_ROW\nEDGE_WEIGHT_SECTION\n5 1 0\nEOF\n";
        assert!(parse_tsplib(text).unwrap().to_weight_matrix().is_err());
    }
}

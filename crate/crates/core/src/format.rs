//! Point-file formats.
//!
//! JSON: `{"dimension": n, "points": [[…], …]}` where each coordinate is a
//! JSON number, a fraction string `"p/q"` or a decimal string. Numbers are
//! read from their source text, so `0.1` means exactly `1/10`.
//!
//! CSV: one point per row, no header; the dimension is the column count.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::config::{Configuration, Point};
use crate::scalar::{canonical_string, parse_rational, ParseScalarError, Rational};
use crate::GeometryError;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("point {point}, coordinate {coord}: {source}")]
    Number {
        point: usize,
        coord: usize,
        source: ParseScalarError,
    },
    #[error("{0}")]
    Structure(String),
    #[error(transparent)]
    Shape(#[from] GeometryError),
}

impl FormatError {
    /// Wrong point count or point length, as opposed to unreadable input.
    pub fn is_dimension_mismatch(&self) -> bool {
        matches!(
            self,
            Self::Shape(
                GeometryError::PointCount { .. }
                    | GeometryError::PointLength { .. }
                    | GeometryError::ZeroDimension
            )
        )
    }
}

/// Serialized point set with canonical rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigFile {
    pub dimension: usize,
    pub points: Vec<Vec<String>>,
}

impl ConfigFile {
    pub fn from_points(dimension: usize, points: &[Point<Rational>]) -> Self {
        Self {
            dimension,
            points: points
                .iter()
                .map(|p| p.coords().iter().map(canonical_string).collect())
                .collect(),
        }
    }

    pub fn from_configuration(cfg: &Configuration<Rational>) -> Self {
        Self::from_points(cfg.dimension(), cfg.points())
    }

    pub fn to_point_set(&self) -> Result<PointSet, FormatError> {
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, row)| parse_row(i, row.iter().map(String::as_str)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PointSet {
            dimension: self.dimension,
            points,
        })
    }

    pub fn to_configuration(&self) -> Result<Configuration<Rational>, FormatError> {
        self.to_point_set()?.into_configuration()
    }
}

/// Parsed points plus their declared (JSON) or inferred (CSV) dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    pub dimension: usize,
    pub points: Vec<Point<Rational>>,
}

impl PointSet {
    /// `n + 2` points for the identity commands.
    pub fn into_configuration(self) -> Result<Configuration<Rational>, FormatError> {
        Ok(Configuration::with_dimension(self.dimension, self.points)?)
    }

    /// `n + 1` points forming a simplex.
    pub fn into_simplex(self) -> Result<Vec<Point<Rational>>, FormatError> {
        let n = self.dimension;
        if n == 0 {
            return Err(GeometryError::ZeroDimension.into());
        }
        if self.points.len() != n + 1 {
            return Err(GeometryError::PointCount {
                expected: n + 1,
                found: self.points.len(),
            }
            .into());
        }
        if let Some((index, p)) = self
            .points
            .iter()
            .enumerate()
            .find(|(_, p)| p.dimension() != n)
        {
            return Err(GeometryError::PointLength {
                index,
                expected: n,
                found: p.dimension(),
            }
            .into());
        }
        Ok(self.points)
    }
}

fn parse_row<'a>(
    point: usize,
    coords: impl Iterator<Item = &'a str>,
) -> Result<Point<Rational>, FormatError> {
    coords
        .enumerate()
        .map(|(coord, s)| {
            parse_rational(s).map_err(|source| FormatError::Number {
                point,
                coord,
                source,
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Point::new)
}

/// Parses the JSON point format.
pub fn parse_json(text: &str) -> Result<PointSet, FormatError> {
    let root: Value = serde_json::from_str(text)?;
    let obj = root
        .as_object()
        .ok_or_else(|| FormatError::Structure("top level must be an object".into()))?;
    let dimension = obj
        .get("dimension")
        .and_then(Value::as_u64)
        .ok_or_else(|| {
            FormatError::Structure("`dimension` must be a non-negative integer".into())
        })?;
    let rows = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| FormatError::Structure("`points` must be an array".into()))?;
    let mut points = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let coords = row
            .as_array()
            .ok_or_else(|| FormatError::Structure(format!("point {i} must be an array")))?;
        let texts = coords
            .iter()
            .enumerate()
            .map(|(j, v)| match v {
                Value::Number(n) => Ok(n.to_string()),
                Value::String(s) => Ok(s.clone()),
                _ => Err(FormatError::Structure(format!(
                    "point {i}, coordinate {j}: expected number or string"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        points.push(parse_row(i, texts.iter().map(String::as_str))?);
    }
    Ok(PointSet {
        dimension: dimension as usize,
        points,
    })
}

/// Parses the CSV point format.
pub fn parse_csv(text: &str) -> Result<PointSet, FormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        points.push(parse_row(i, record.iter())?);
    }
    let dimension = points
        .first()
        .map(|p| p.dimension())
        .ok_or_else(|| FormatError::Structure("no points".into()))?;
    Ok(PointSet { dimension, points })
}

/// Reads a point file, choosing CSV for `.csv` paths and JSON otherwise.
pub fn load(path: &Path) -> Result<PointSet, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv {
        parse_csv(&text)
    } else {
        parse_json(&text)
    }
}

/// Parses comma-separated coordinates such as `1/4,0.5`.
pub fn parse_coords(text: &str) -> Result<Point<Rational>, FormatError> {
    parse_row(0, text.split(','))
}

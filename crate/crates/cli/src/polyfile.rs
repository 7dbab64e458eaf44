//! Polygon files: `{"vertices": [[x, y], ...], "name": "..."}`.
//!
//! Coordinates are JSON integers, or decimal strings for values that do not
//! fit in 64 bits. The vertex list is open; a repeated closing vertex is
//! dropped with a warning.

use std::fmt::Write as _;
use std::str::FromStr;

use lattice_pick_core::{validate_polygon, LatticePoint, Polygon, PolygonError, VertexList};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonFile {
    pub polygon: Polygon,
    pub name: Option<String>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonFileError {
    #[error("not valid JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unexpected polygon file layout: {0}")]
    Layout(String),
    #[error("invalid polygon: {0}")]
    Invalid(#[from] PolygonError),
}

impl PolygonFileError {
    /// Parse and layout errors mean the file could not be read as a polygon
    /// at all; `Invalid` means it was read and the polygon was rejected.
    pub fn is_parse_error(&self) -> bool {
        !matches!(self, PolygonFileError::Invalid(_))
    }
}

fn coordinate(v: &Value, at: usize) -> Result<BigInt, PolygonFileError> {
    let bad = |what: &str| PolygonFileError::Layout(format!("vertex {at}: {what}"));
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.into())
            } else if let Some(u) = n.as_u64() {
                Ok(u.into())
            } else {
                Err(bad(&format!("{n} is not an integer in 64-bit range; write large values as strings")))
            }
        }
        Value::String(s) => {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad(&format!("{s:?} is not a decimal integer")));
            }
            Ok(BigInt::from_str(s).expect("checked decimal"))
        }
        other => Err(bad(&format!("expected an integer, got {other}"))),
    }
}

impl PolygonFile {
    pub fn parse(text: &str) -> Result<PolygonFile, PolygonFileError> {
        let root: Value = serde_json::from_str(text).map_err(|e| PolygonFileError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let Value::Object(obj) = root else {
            return Err(PolygonFileError::Layout("top level must be an object".into()));
        };
        if let Some(k) = obj.keys().find(|k| *k != "vertices" && *k != "name") {
            return Err(PolygonFileError::Layout(format!("unknown field {k:?}")));
        }
        let name = match obj.get("name") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(_) => return Err(PolygonFileError::Layout("name must be a string".into())),
        };
        let Some(Value::Array(raw)) = obj.get("vertices") else {
            return Err(PolygonFileError::Layout("missing vertices array".into()));
        };
        let mut vts = Vec::with_capacity(raw.len());
        for (i, v) in raw.iter().enumerate() {
            match v.as_array().map(Vec::as_slice) {
                Some([x, y]) => vts.push(LatticePoint::new(coordinate(x, i)?, coordinate(y, i)?)),
                _ => return Err(PolygonFileError::Layout(format!("vertex {i} must be an [x, y] pair"))),
            }
        }
        if vts.len() > 1 && vts.first() == vts.last() {
            log::warn!("dropping repeated closing vertex {}", vts[vts.len() - 1]);
            vts.pop();
        }
        let polygon = validate_polygon(VertexList::new(vts))?;
        Ok(PolygonFile { polygon, name })
    }

    pub fn to_json(&self) -> String {
        let mut s = String::from("{");
        if let Some(name) = &self.name {
            write!(s, "\"name\": {}, ", serde_json::to_string(name).expect("strings serialize")).unwrap();
        }
        s.push_str("\"vertices\": [");
        for (i, v) in self.polygon.vertices().iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            write!(s, "[{}, {}]", json_int(&v.x), json_int(&v.y)).unwrap();
        }
        s.push_str("]}\n");
        s
    }
}

fn json_int(v: &BigInt) -> String {
    match v.to_i64() {
        Some(i) => i.to_string(),
        None => format!("\"{v}\""),
    }
}

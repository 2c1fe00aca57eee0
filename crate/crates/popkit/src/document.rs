//! The polygon document: UTF-8 JSON with exact rational coordinate strings.
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "vertices": [["2", "0"], ["0", "3"], ["-1/2", "0"]],
//!   "metadata": { "name": "...", "provenance": "..." }
//! }
//! ```
//!
//! Encoding is canonical: fixed field order, reduced rationals with no
//! `/1` suffix on integers, two-space indentation and a trailing newline.

use popkit_core::{Point, Polygon, PolygonError, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT_VERSION: &str = "1";

fn default_version() -> String {
    FORMAT_VERSION.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonDocument {
    #[serde(default = "default_version")]
    pub format_version: String,
    pub vertices: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed document at {path}: {message}")]
    Malformed { path: String, message: String },
    #[error("unsupported format_version {0:?}")]
    UnsupportedVersion(String),
    #[error("malformed rational {value:?} at vertices[{index}][{coordinate}]")]
    BadRational {
        index: usize,
        coordinate: usize,
        value: String,
    },
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("zero-length edge at index {0}")]
    ZeroLengthEdge(usize),
}

impl DocumentError {
    /// Location of the offending field, relative to the document root.
    pub fn path(&self) -> String {
        match self {
            DocumentError::Malformed { path, .. } => path.clone(),
            DocumentError::UnsupportedVersion(_) => "format_version".into(),
            DocumentError::BadRational { index, coordinate, .. } => format!("vertices[{index}][{coordinate}]"),
            DocumentError::TooFewVertices(_) => "vertices".into(),
            DocumentError::ZeroLengthEdge(i) => format!("vertices[{i}]"),
        }
    }
}

impl PolygonDocument {
    pub fn from_polygon(polygon: &Polygon) -> Self {
        PolygonDocument {
            format_version: default_version(),
            vertices: polygon
                .vertices()
                .iter()
                .map(|p| [p.x.to_string(), p.y.to_string()])
                .collect(),
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: Option<Metadata>) -> Self {
        self.metadata = metadata;
        self
    }

    pub fn named(self, name: impl Into<String>, provenance: impl Into<String>) -> Self {
        self.with_metadata(Some(Metadata {
            name: Some(name.into()),
            provenance: Some(provenance.into()),
        }))
    }

    pub fn to_polygon(&self) -> Result<Polygon, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::UnsupportedVersion(self.format_version.clone()));
        }
        let mut points = Vec::with_capacity(self.vertices.len());
        for (index, pair) in self.vertices.iter().enumerate() {
            let mut coords = [Rational::zero(), Rational::zero()];
            for (coordinate, text) in pair.iter().enumerate() {
                coords[coordinate] = text.parse().map_err(|_| DocumentError::BadRational {
                    index,
                    coordinate,
                    value: text.clone(),
                })?;
            }
            let [x, y] = coords;
            points.push(Point::new(x, y));
        }
        Polygon::new(points).map_err(|e| match e {
            PolygonError::TooFewVertices(n) => DocumentError::TooFewVertices(n),
            PolygonError::ZeroLengthEdge(i) => DocumentError::ZeroLengthEdge(i),
            other => unreachable!("Polygon::new only reports shape errors, got {other}"),
        })
    }

    /// Re-encode with reduced rationals, keeping metadata.
    pub fn canonicalize(&self) -> Result<Self, DocumentError> {
        Ok(PolygonDocument::from_polygon(&self.to_polygon()?).with_metadata(self.metadata.clone()))
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut out = serde_json::to_vec_pretty(self).expect("document serializes");
        out.push(b'\n');
        out
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, DocumentError> {
        let de = &mut serde_json::Deserializer::from_slice(bytes);
        serde_path_to_error::deserialize(de).map_err(|e| DocumentError::Malformed {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })
    }
}

pub fn decode(bytes: &[u8]) -> Result<Polygon, DocumentError> {
    PolygonDocument::parse(bytes)?.to_polygon()
}

pub fn encode(polygon: &Polygon) -> Vec<u8> {
    PolygonDocument::from_polygon(polygon).encode()
}

//! The polygon file format.
//!
//! UTF-8 text. Lines whose first non-blank character is `#` are comments;
//! blank lines are skipped. Every other line is one vertex: eight
//! whitespace-separated rational tokens (`p/q` or integer `p`), the first
//! four the x-coordinate on the basis `1 √2 √3 √6`, the last four the
//! y-coordinate. Vertices appear in boundary order.
//!
//! ```text
//! # a 30-right triangle
//! 0 0 0 0  0 0 0 0
//! 0 0 1 0  0 0 0 0
//! 0 0 0 0  1 0 0 0
//! ```

use std::path::Path;

use thiserror::Error;

use crate::catalog::{Polygon, PolygonError};
use crate::geom::Point2;
use crate::scalar::ExtScalar;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid polygon: {0}")]
    Polygon(#[from] PolygonError),
}

/// Parse polygon text (the format above) into a validated polygon.
pub fn parse_polygon_str(text: &str) -> Result<Polygon, FileError> {
    let mut vertices = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 8 {
            return Err(FileError::Parse {
                line,
                message: format!("expected 8 rational tokens, found {}", tokens.len()),
            });
        }
        let x = ExtScalar::parse_tokens(&tokens[0..4]).map_err(|e| FileError::Parse {
            line,
            message: e.to_string(),
        })?;
        let y = ExtScalar::parse_tokens(&tokens[4..8]).map_err(|e| FileError::Parse {
            line,
            message: e.to_string(),
        })?;
        vertices.push(Point2::new(x, y));
    }
    Ok(Polygon::new(vertices)?)
}

/// Read and parse a polygon file from disk.
pub fn read_polygon_file(path: &Path) -> Result<Polygon, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_polygon_str(&text)
}

/// Serialize a polygon in the file format, one vertex per line.
pub fn polygon_to_string(polygon: &Polygon) -> String {
    let mut out = String::new();
    for v in polygon.vertices() {
        out.push_str(&v.x.to_tokens());
        out.push_str("  ");
        out.push_str(&v.y.to_tokens());
        out.push('\n');
    }
    out
}

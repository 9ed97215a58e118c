//! Exact text formats for relations and reports.
//!
//! A relation file is a JSON document
//! `{"space_dim": n, "pairs": [{"x": [...], "y": [...]}]}` with scalars as
//! two-element arrays `[re, im]` of rational strings (`"p"` or `"p/q"`,
//! `q > 0`, reduced). Serialization always emits the canonical graph basis
//! in ascending pivot order, so round trips are byte-identical.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::linalg::Vector;
use crate::relation::LinearRelation;
use crate::scalar::GaussianRational;

#[derive(Debug)]
pub enum IoError {
    Read { path: String, source: std::io::Error },
    /// Malformed JSON, scalars, or unknown fields; carries serde's
    /// line/column diagnostics.
    Parse { path: String, message: String },
    /// A pair's vector has the wrong length for the declared space_dim.
    VectorLength {
        path: String,
        pair_index: usize,
        field: &'static str,
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Read { path, source } => write!(f, "{path}: {source}"),
            IoError::Parse { path, message } => write!(f, "{path}: {message}"),
            IoError::VectorLength {
                path,
                pair_index,
                field,
                expected,
                found,
            } => write!(
                f,
                "{path}: pairs[{pair_index}].{field} has length {found}, expected {expected}"
            ),
        }
    }
}

impl std::error::Error for IoError {}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    x: Vec<GaussianRational>,
    y: Vec<GaussianRational>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationDoc {
    space_dim: usize,
    pairs: Vec<PairDoc>,
}

/// A parsed relation file: the canonical relation plus the raw generator
/// pairs exactly as written, for operations that must report the offending
/// input generator.
#[derive(Debug, Clone)]
pub struct ParsedRelation {
    pub relation: LinearRelation,
    pub raw_pairs: Vec<(Vector, Vector)>,
}

pub fn parse_relation_str(text: &str, path: &str) -> Result<ParsedRelation, IoError> {
    let doc: RelationDoc = serde_json::from_str(text).map_err(|e| IoError::Parse {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    let n = doc.space_dim;
    let mut raw_pairs = Vec::with_capacity(doc.pairs.len());
    for (k, pair) in doc.pairs.iter().enumerate() {
        for (field, v) in [("x", &pair.x), ("y", &pair.y)] {
            if v.len() != n {
                return Err(IoError::VectorLength {
                    path: path.to_string(),
                    pair_index: k,
                    field,
                    expected: n,
                    found: v.len(),
                });
            }
        }
        raw_pairs.push((Vector::new(pair.x.clone()), Vector::new(pair.y.clone())));
    }
    Ok(ParsedRelation {
        relation: LinearRelation::from_pairs(n, &raw_pairs),
        raw_pairs,
    })
}

pub fn parse_relation_file(path: &Path) -> Result<ParsedRelation, IoError> {
    let text = fs::read_to_string(path).map_err(|e| IoError::Read {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_relation_str(&text, &path.display().to_string())
}

fn relation_doc(rel: &LinearRelation) -> RelationDoc {
    let n = rel.space_dim();
    RelationDoc {
        space_dim: n,
        pairs: rel
            .graph()
            .basis()
            .iter()
            .map(|b| {
                let (x, y) = b.split_at(n);
                PairDoc {
                    x: x.entries().to_vec(),
                    y: y.entries().to_vec(),
                }
            })
            .collect(),
    }
}

/// Canonical serialization: the canonical graph basis in ascending pivot
/// order, pretty-printed with a trailing newline. Byte-exact across runs.
pub fn serialize_relation(rel: &LinearRelation) -> String {
    let mut s =
        serde_json::to_string_pretty(&relation_doc(rel)).expect("serialization cannot fail");
    s.push('\n');
    s
}

/// Pretty-prints any report value with a trailing newline.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_mult_by_i() {
        let text = r#"{"space_dim":1,"pairs":[{"x":[["1","0"]],"y":[["0","1"]]}]}"#;
        let parsed = parse_relation_str(text, "test").unwrap();
        assert_eq!(
            parsed.relation,
            LinearRelation::scalar_graph(1, &GaussianRational::i())
        );
    }

    #[test]
    fn empty_pairs_is_the_trivial_relation() {
        let text = r#"{"space_dim":2,"pairs":[]}"#;
        let parsed = parse_relation_str(text, "test").unwrap();
        assert_eq!(parsed.relation, LinearRelation::zero(2));
    }

    #[test]
    fn roundtrip_is_byte_identical() {
        let text = r#"{"space_dim":1,"pairs":[{"x":[["2","0"]],"y":[["0","2"]]}]}"#;
        let parsed = parse_relation_str(text, "test").unwrap();
        let out = serialize_relation(&parsed.relation);
        let reparsed = parse_relation_str(&out, "test").unwrap();
        assert_eq!(reparsed.relation, parsed.relation);
        assert_eq!(serialize_relation(&reparsed.relation), out);
        // the canonical form normalizes the generator (2, 2i) to (1, i)
        assert!(out.contains(r#""1""#));
    }

    #[test]
    fn serialization_of_adjoint_example() {
        // adjoint(mult-by-i) = mult-by-(−i): pairs encoding {(1, −i)}
        let rel = LinearRelation::scalar_graph(1, &GaussianRational::i()).adjoint();
        let out = serialize_relation(&rel);
        let expected = "{\n  \"space_dim\": 1,\n  \"pairs\": [\n    {\n      \"x\": [\n        [\n          \"1\",\n          \"0\"\n        ]\n      ],\n      \"y\": [\n        [\n          \"0\",\n          \"-1\"\n        ]\n      ]\n    }\n  ]\n}\n";
        assert_eq!(out, expected);
    }

    #[test]
    fn malformed_inputs_are_diagnosed() {
        // unknown field
        let text = r#"{"space_dim":1,"pairs":[],"extra":1}"#;
        assert!(matches!(
            parse_relation_str(text, "t"),
            Err(IoError::Parse { .. })
        ));
        // malformed scalar
        let text = r#"{"space_dim":1,"pairs":[{"x":[["1/0","0"]],"y":[["0","0"]]}]}"#;
        assert!(matches!(
            parse_relation_str(text, "t"),
            Err(IoError::Parse { .. })
        ));
        // wrong vector length
        let text = r#"{"space_dim":2,"pairs":[{"x":[["1","0"]],"y":[["0","0"],["0","0"]]}]}"#;
        let err = parse_relation_str(text, "t").unwrap_err();
        assert!(matches!(err, IoError::VectorLength { pair_index: 0, field: "x", .. }));
    }
}

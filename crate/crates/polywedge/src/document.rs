//! JSON documents describing polytopes, characteristic vectors, and
//! vertex sequences.
//!
//! A pair document looks like
//!
//! ```json
//! {
//!   "dim": 2,
//!   "facets": ["F1", "F2", "F3"],
//!   "vertices": [
//!     {"label": "v1", "facets": ["F2", "F3"]},
//!     {"label": "v2", "facets": ["F1", "F3"]},
//!     {"label": "v3", "facets": ["F1", "F2"]}
//!   ],
//!   "lambda": {"F1": [1, 0], "F2": [0, 1], "F3": [-1, -1]}
//! }
//! ```
//!
//! `lambda` is optional; commands that only need the combinatorics accept
//! documents without it. Integer entries are JSON numbers when they fit,
//! or decimal strings of arbitrary size. Unknown keys are rejected, and
//! every schema error carries the JSON path of the offending value.
//!
//! Serialization is canonical: object keys are sorted, and integers with
//! absolute value below 2^53 are emitted as JSON numbers, larger ones as
//! decimal strings. Parsing a canonical string and re-serializing
//! reproduces it byte for byte.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::Signed;
use serde_json::{Map, Value};

use crate::charpair::CharacteristicPair;
use crate::linalg::IntVector;
use crate::polytope::Polytope;
use crate::{Error, Result};

/// One vertex of a pair document: its label and the labels of the facets
/// through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexEntry {
    pub label: String,
    pub facets: Vec<String>,
}

/// Parsed form of a pair document. Facet order is the declaration order,
/// and `lambda`, when present, is aligned with `facets`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDocument {
    pub dim: usize,
    pub facets: Vec<String>,
    pub vertices: Vec<VertexEntry>,
    pub lambda: Option<Vec<IntVector>>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { path: path.into(), message: message.into() }
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn as_string(v: &Value, path: &str) -> Result<String> {
    v.as_str().map(str::to_owned).ok_or_else(|| schema(path, "expected a string"))
}

fn as_dim(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("{path}.{key}"), "missing required key"))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema(format!("{path}.{key}"), "unknown key"));
        }
    }
    Ok(())
}

/// Accepts a JSON integer or a decimal string of arbitrary size.
pub fn parse_bigint(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(x) = n.as_i64() {
                Ok(BigInt::from(x))
            } else if let Some(x) = n.as_u64() {
                Ok(BigInt::from(x))
            } else {
                Err(schema(path, "expected an integer, found a non-integral number"))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| schema(path, "expected a decimal integer string")),
        _ => Err(schema(path, "expected an integer or integer string")),
    }
}

/// JSON number when `|x| < 2^53`, decimal string otherwise.
pub fn encode_bigint(x: &BigInt) -> Value {
    let limit = BigInt::from(1u64 << 53);
    if x.abs() < limit {
        let as_i64 = i64::try_from(x.clone()).expect("|x| < 2^53 fits in i64");
        Value::from(as_i64)
    } else {
        Value::from(x.to_string())
    }
}

impl PairDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| schema("$", format!("invalid JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = as_object(value, "$")?;
        reject_unknown(obj, &["dim", "facets", "vertices", "lambda"], "$")?;

        let dim = as_dim(required(obj, "dim", "$")?, "$.dim")?;

        let facets_val = as_array(required(obj, "facets", "$")?, "$.facets")?;
        let mut facets = Vec::with_capacity(facets_val.len());
        for (i, f) in facets_val.iter().enumerate() {
            facets.push(as_string(f, &format!("$.facets[{i}]"))?);
        }

        let vertices_val = as_array(required(obj, "vertices", "$")?, "$.vertices")?;
        let mut vertices = Vec::with_capacity(vertices_val.len());
        for (i, entry) in vertices_val.iter().enumerate() {
            let path = format!("$.vertices[{i}]");
            let entry = as_object(entry, &path)?;
            reject_unknown(entry, &["label", "facets"], &path)?;
            let label = as_string(required(entry, "label", &path)?, &format!("{path}.label"))?;
            let facet_vals =
                as_array(required(entry, "facets", &path)?, &format!("{path}.facets"))?;
            let mut vertex_facets = Vec::with_capacity(facet_vals.len());
            for (j, f) in facet_vals.iter().enumerate() {
                vertex_facets.push(as_string(f, &format!("{path}.facets[{j}]"))?);
            }
            vertices.push(VertexEntry { label, facets: vertex_facets });
        }

        let lambda = match obj.get("lambda") {
            None => None,
            Some(lam_val) => {
                let lam_obj = as_object(lam_val, "$.lambda")?;
                for key in lam_obj.keys() {
                    if !facets.contains(key) {
                        return Err(schema(
                            format!("$.lambda.{key}"),
                            "not a declared facet label",
                        ));
                    }
                }
                let mut columns = Vec::with_capacity(facets.len());
                for f in &facets {
                    let path = format!("$.lambda.{f}");
                    let col_val = lam_obj
                        .get(f)
                        .ok_or_else(|| schema(&path, "missing vector for this facet"))?;
                    let col_arr = as_array(col_val, &path)?;
                    if col_arr.len() != dim {
                        return Err(schema(
                            &path,
                            format!("expected {dim} entries, found {}", col_arr.len()),
                        ));
                    }
                    let mut col = Vec::with_capacity(dim);
                    for (j, x) in col_arr.iter().enumerate() {
                        col.push(parse_bigint(x, &format!("{path}[{j}]"))?);
                    }
                    columns.push(col);
                }
                Some(columns)
            }
        };

        Ok(Self { dim, facets, vertices, lambda })
    }

    fn facet_index(&self, label: &str, path: &str) -> Result<usize> {
        self.facets
            .iter()
            .position(|f| f == label)
            .ok_or_else(|| schema(path, format!("unknown facet label {label:?}")))
    }

    /// Builds the polytope, checking labels resolve and vertex facet lists
    /// have no repeats. Structural validation happens in `Polytope::new`.
    pub fn to_polytope(&self) -> Result<Polytope> {
        let mut vertex_facets = Vec::with_capacity(self.vertices.len());
        let mut vertex_labels = Vec::with_capacity(self.vertices.len());
        for (i, entry) in self.vertices.iter().enumerate() {
            let path = format!("$.vertices[{i}].facets");
            let mut set = BTreeSet::new();
            for (j, f) in entry.facets.iter().enumerate() {
                let idx = self.facet_index(f, &format!("{path}[{j}]"))?;
                if !set.insert(idx) {
                    return Err(schema(format!("{path}[{j}]"), "repeated facet label"));
                }
            }
            vertex_labels.push(entry.label.clone());
            vertex_facets.push(set);
        }
        Polytope::new(self.dim, self.facets.clone(), vertex_labels, vertex_facets)
    }

    /// Builds the characteristic pair; requires `lambda`.
    pub fn to_pair(&self) -> Result<CharacteristicPair> {
        let lambda = self
            .lambda
            .clone()
            .ok_or_else(|| schema("$.lambda", "missing required key"))?;
        CharacteristicPair::new(self.to_polytope()?, lambda)
    }

    pub fn from_polytope(poly: &Polytope) -> Self {
        let vertices = (0..poly.vertex_count())
            .map(|v| VertexEntry {
                label: poly.vertex_label(v).to_owned(),
                facets: poly
                    .vertex_facet_set(v)
                    .iter()
                    .map(|&f| poly.facet_label(f).to_owned())
                    .collect(),
            })
            .collect();
        Self {
            dim: poly.dim(),
            facets: poly.facet_labels().to_vec(),
            vertices,
            lambda: None,
        }
    }

    pub fn from_pair(pair: &CharacteristicPair) -> Self {
        let mut doc = Self::from_polytope(pair.polytope());
        doc.lambda = Some(pair.lambda().to_vec());
        doc
    }

    pub fn to_value(&self) -> Value {
        let mut root = Map::new();
        root.insert("dim".into(), Value::from(self.dim as u64));
        root.insert(
            "facets".into(),
            Value::from(self.facets.iter().cloned().map(Value::from).collect::<Vec<_>>()),
        );
        root.insert(
            "vertices".into(),
            Value::from(
                self.vertices
                    .iter()
                    .map(|entry| {
                        let mut v = Map::new();
                        v.insert("label".into(), Value::from(entry.label.clone()));
                        v.insert(
                            "facets".into(),
                            Value::from(
                                entry.facets.iter().cloned().map(Value::from).collect::<Vec<_>>(),
                            ),
                        );
                        Value::from(v)
                    })
                    .collect::<Vec<_>>(),
            ),
        );
        if let Some(lambda) = &self.lambda {
            let mut lam = Map::new();
            for (f, col) in self.facets.iter().zip(lambda) {
                lam.insert(
                    f.clone(),
                    Value::from(col.iter().map(encode_bigint).collect::<Vec<_>>()),
                );
            }
            root.insert("lambda".into(), Value::from(lam));
        }
        Value::from(root)
    }

    /// Canonical text form: sorted keys, stable integer encoding.
    pub fn to_canonical_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("value serializes")
    }
}

/// Parses a sequence document `{"vertex_order": ["v1", ...]}` into the
/// list of vertex labels.
pub fn parse_vertex_order(text: &str) -> Result<Vec<String>> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| schema("$", format!("invalid JSON: {e}")))?;
    let obj = as_object(&value, "$")?;
    reject_unknown(obj, &["vertex_order"], "$")?;
    let arr = as_array(required(obj, "vertex_order", "$")?, "$.vertex_order")?;
    let mut labels = Vec::with_capacity(arr.len());
    for (i, v) in arr.iter().enumerate() {
        labels.push(as_string(v, &format!("$.vertex_order[{i}]"))?);
    }
    Ok(labels)
}

/// Serializes a vertex order as a sequence document.
pub fn vertex_order_to_string(labels: &[String]) -> String {
    let mut obj = Map::new();
    obj.insert(
        "vertex_order".into(),
        Value::from(labels.iter().cloned().map(Value::from).collect::<Vec<_>>()),
    );
    serde_json::to_string_pretty(&Value::from(obj)).expect("value serializes")
}

/// Resolves vertex labels against a polytope, requiring each label to
/// name a distinct vertex.
pub fn resolve_vertex_order(poly: &Polytope, labels: &[String]) -> Result<Vec<usize>> {
    let index: BTreeMap<&str, usize> = (0..poly.vertex_count())
        .map(|v| (poly.vertex_label(v), v))
        .collect();
    let mut out = Vec::with_capacity(labels.len());
    for (i, label) in labels.iter().enumerate() {
        let v = index.get(label.as_str()).copied().ok_or_else(|| {
            schema(format!("$.vertex_order[{i}]"), format!("unknown vertex label {label:?}"))
        })?;
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trips_the_prism_pair() {
        let pair = fixtures::prism_pair();
        let doc = PairDocument::from_pair(&pair);
        let text = doc.to_canonical_string();
        let back = PairDocument::parse(&text).unwrap();
        assert_eq!(doc, back);
        assert_eq!(text, back.to_canonical_string());

        let rebuilt = back.to_pair().unwrap();
        assert_eq!(rebuilt.orders(), pair.orders());
        assert_eq!(rebuilt.polytope().facet_labels(), pair.polytope().facet_labels());
    }

    #[test]
    fn reports_paths_for_schema_errors() {
        let missing_dim = r#"{"facets": [], "vertices": []}"#;
        let err = PairDocument::parse(missing_dim).unwrap_err();
        assert_eq!(err, Error::Schema { path: "$.dim".into(), message: "missing required key".into() });

        let bad_vertex = r#"{"dim": 1, "facets": ["a", "b"], "vertices": [{"label": "v", "facets": [3]}]}"#;
        let err = PairDocument::parse(bad_vertex).unwrap_err();
        match err {
            Error::Schema { path, .. } => assert_eq!(path, "$.vertices[0].facets[0]"),
            other => panic!("unexpected {other:?}"),
        }

        let unknown = r#"{"dim": 1, "facets": [], "vertices": [], "extra": 0}"#;
        let err = PairDocument::parse(unknown).unwrap_err();
        match err {
            Error::Schema { path, .. } => assert_eq!(path, "$.extra"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lambda_errors_name_the_facet() {
        let text = r#"{
            "dim": 1,
            "facets": ["a", "b"],
            "vertices": [
                {"label": "v1", "facets": ["a"]},
                {"label": "v2", "facets": ["b"]}
            ],
            "lambda": {"a": [1]}
        }"#;
        let err = PairDocument::parse(text).unwrap_err();
        match err {
            Error::Schema { path, .. } => assert_eq!(path, "$.lambda.b"),
            other => panic!("unexpected {other:?}"),
        }

        let wrong_len = r#"{
            "dim": 1,
            "facets": ["a", "b"],
            "vertices": [
                {"label": "v1", "facets": ["a"]},
                {"label": "v2", "facets": ["b"]}
            ],
            "lambda": {"a": [1], "b": [1, 2]}
        }"#;
        let err = PairDocument::parse(wrong_len).unwrap_err();
        match err {
            Error::Schema { path, .. } => assert_eq!(path, "$.lambda.b"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn big_integers_cross_the_number_string_boundary() {
        let small = BigInt::from((1i64 << 53) - 1);
        let big = BigInt::from(1i64 << 53);
        assert_eq!(encode_bigint(&small), Value::from((1i64 << 53) - 1));
        assert_eq!(encode_bigint(&big), Value::from("9007199254740992"));
        assert_eq!(encode_bigint(&-&big), Value::from("-9007199254740992"));

        let parsed = parse_bigint(&Value::from("123456789012345678901234567890"), "$").unwrap();
        assert_eq!(parsed.to_string(), "123456789012345678901234567890");
        assert!(parse_bigint(&Value::from(1.5), "$").is_err());
        assert!(parse_bigint(&Value::from("12.5"), "$").is_err());
        assert_eq!(parse_bigint(&Value::from(u64::MAX), "$").unwrap(), BigInt::from(u64::MAX));
    }

    #[test]
    fn condition_failures_surface_as_condition_errors() {
        let text = r#"{
            "dim": 2,
            "facets": ["F1", "F2", "F3"],
            "vertices": [
                {"label": "v1", "facets": ["F2", "F3"]},
                {"label": "v2", "facets": ["F1", "F3"]},
                {"label": "v3", "facets": ["F1", "F2"]}
            ],
            "lambda": {"F1": [1, 0], "F2": [2, 0], "F3": [0, 1]}
        }"#;
        let doc = PairDocument::parse(text).unwrap();
        let err = doc.to_pair().unwrap_err();
        assert_eq!(err, Error::Condition { vertex: "v3".into() });
    }

    #[test]
    fn vertex_order_documents() {
        let labels = vec!["v2".to_string(), "v1".to_string()];
        let text = vertex_order_to_string(&labels);
        assert_eq!(parse_vertex_order(&text).unwrap(), labels);

        let err = parse_vertex_order(r#"{"vertex_order": [1]}"#).unwrap_err();
        match err {
            Error::Schema { path, .. } => assert_eq!(path, "$.vertex_order[0]"),
            other => panic!("unexpected {other:?}"),
        }

        let poly = fixtures::pentagon();
        let order = resolve_vertex_order(
            &poly,
            &["v3".into(), "v1".into()],
        )
        .unwrap();
        assert_eq!(order, vec![2, 0]);
        assert!(resolve_vertex_order(&poly, &["nope".into()]).is_err());
    }
}

//! JSON documents for algebras and twisting maps.
//!
//! ```json
//! {"field": "Q" | {"gf": p}, "dim": n,
//!  "brackets": [{"i": 0, "j": 1, "v": ["0", "1/2", ...]}, ...],
//!  "sigma": [["1", "0"], ["0", "1"]]}
//! ```
//!
//! Pairs not listed have zero bracket; `sigma` is optional and row-major.

use serde_json::{json, Map, Value};

use crate::algebra::AnticommAlgebra;
use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Matrix, Scalar};
use crate::homlie::HomLie;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub algebra: AnticommAlgebra,
    pub sigma: Option<Matrix>,
}

impl AlgebraDocument {
    /// The document as a validated Hom-Lie algebra; fails without `sigma`.
    pub fn hom_lie(&self) -> Result<HomLie> {
        let sigma = self
            .sigma
            .clone()
            .ok_or_else(|| Error::parse("$.sigma", "a twisting map is required"))?;
        HomLie::new(self.algebra.clone(), sigma)
    }

    pub fn to_json(&self) -> Value {
        algebra_to_json(&self.algebra, self.sigma.as_ref())
    }

    /// Canonical text: sorted keys, brackets in `(i, j)` order, zero brackets omitted.
    pub fn to_canonical_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("json values serialize")
    }
}

pub fn field_to_json(field: FieldSpec) -> Value {
    match field {
        FieldSpec::Rationals => json!("Q"),
        FieldSpec::Prime(p) => json!({ "gf": p }),
    }
}

fn field_from_json(v: &Value) -> Result<FieldSpec> {
    match v {
        Value::String(s) if s == "Q" => Ok(FieldSpec::Rationals),
        Value::Object(m) => {
            let p = m
                .get("gf")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::parse("$.field.gf", "expected a positive integer"))?;
            if m.len() != 1 {
                return Err(Error::parse("$.field", "unexpected keys besides \"gf\""));
            }
            FieldSpec::prime(p).map_err(|e| Error::parse("$.field.gf", e.to_string()))
        }
        _ => Err(Error::parse("$.field", "expected \"Q\" or {\"gf\": p}")),
    }
}

fn scalars_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| scalars_to_json(r)).collect())
}

pub fn algebra_to_json(a: &AnticommAlgebra, sigma: Option<&Matrix>) -> Value {
    let brackets: Vec<Value> = a
        .constants()
        .iter()
        .map(|(&(i, j), v)| json!({ "i": i, "j": j, "v": scalars_to_json(v) }))
        .collect();
    let mut doc = Map::new();
    doc.insert("field".into(), field_to_json(a.field()));
    doc.insert("dim".into(), json!(a.dim()));
    doc.insert("brackets".into(), Value::Array(brackets));
    if let Some(s) = sigma {
        doc.insert("sigma".into(), matrix_to_json(s));
    }
    Value::Object(doc)
}

fn scalar_vector(field: FieldSpec, v: &Value, len: usize, path: &str) -> Result<Vec<Scalar>> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::parse(path, "expected an array of scalar strings"))?;
    if items.len() != len {
        return Err(Error::parse(path, format!("expected {len} entries, found {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let p = format!("{path}[{k}]");
            let text = x.as_str().ok_or_else(|| Error::parse(&p, "expected a scalar string"))?;
            field.parse_scalar(text).map_err(|e| Error::parse(&p, e.to_string()))
        })
        .collect()
}

fn index(obj: &Map<String, Value>, key: &str, path: &str, dim: usize) -> Result<usize> {
    let p = format!("{path}.{key}");
    let k = obj
        .get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse(&p, "expected a nonnegative integer"))? as usize;
    if k >= dim {
        return Err(Error::parse(&p, format!("index {k} out of range for dimension {dim}")));
    }
    Ok(k)
}

/// Parses a document; every error names the offending JSON path.
pub fn parse_algebra(text: &str) -> Result<AlgebraDocument> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", e.to_string()))?;
    let obj = root.as_object().ok_or_else(|| Error::parse("$", "expected an object"))?;
    for key in obj.keys() {
        if !["field", "dim", "brackets", "sigma"].contains(&key.as_str()) {
            return Err(Error::parse(format!("$.{key}"), "unknown key"));
        }
    }
    let field = field_from_json(obj.get("field").ok_or_else(|| Error::parse("$.field", "missing"))?)?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse("$.dim", "expected a nonnegative integer"))? as usize;
    let mut algebra = AnticommAlgebra::new(field, dim);
    let brackets = match obj.get("brackets") {
        None => &[][..],
        Some(b) => b
            .as_array()
            .ok_or_else(|| Error::parse("$.brackets", "expected an array"))?
            .as_slice(),
    };
    let mut seen = std::collections::BTreeSet::new();
    for (n, entry) in brackets.iter().enumerate() {
        let path = format!("$.brackets[{n}]");
        let e = entry
            .as_object()
            .ok_or_else(|| Error::parse(&path, "expected an object with i, j, v"))?;
        let i = index(e, "i", &path, dim)?;
        let j = index(e, "j", &path, dim)?;
        if i >= j {
            return Err(Error::parse(&path, format!("bracket ({i},{j}) needs i < j")));
        }
        if !seen.insert((i, j)) {
            return Err(Error::parse(&path, format!("bracket ({i},{j}) listed twice")));
        }
        let vpath = format!("{path}.v");
        let v = e.get("v").ok_or_else(|| Error::parse(&vpath, "missing"))?;
        let v = scalar_vector(field, v, dim, &vpath)
            .map_err(|err| match err {
                Error::Parse { path, message } => Error::parse(path, format!("bracket ({i},{j}): {message}")),
                other => other,
            })?;
        algebra.set_bracket(i, j, v)?;
    }
    let sigma = match obj.get("sigma") {
        None | Some(Value::Null) => None,
        Some(s) => {
            let rows = s
                .as_array()
                .ok_or_else(|| Error::parse("$.sigma", "expected an array of rows"))?;
            if rows.len() != dim {
                return Err(Error::parse("$.sigma", format!("expected {dim} rows, found {}", rows.len())));
            }
            let rows = rows
                .iter()
                .enumerate()
                .map(|(r, row)| scalar_vector(field, row, dim, &format!("$.sigma[{r}]")))
                .collect::<Result<Vec<_>>>()?;
            Some(if dim == 0 {
                Matrix::zeros(field, 0, 0)
            } else {
                Matrix::from_rows(field, rows)?
            })
        }
    };
    Ok(AlgebraDocument { algebra, sigma })
}

/// A bare square matrix document: an array of rows of scalar strings.
pub fn parse_matrix(text: &str, field: FieldSpec) -> Result<Matrix> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", e.to_string()))?;
    let root = match &root {
        Value::Object(m) if m.contains_key("theta") => m["theta"].clone(),
        other => other.clone(),
    };
    let rows = root.as_array().ok_or_else(|| Error::parse("$", "expected an array of rows"))?;
    let n = rows.len();
    let rows = rows
        .iter()
        .enumerate()
        .map(|(r, row)| scalar_vector(field, row, n, &format!("$[{r}]")))
        .collect::<Result<Vec<_>>>()?;
    if n == 0 {
        return Ok(Matrix::zeros(field, 0, 0));
    }
    Matrix::from_rows(field, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SO3: &str = r#"{"field":"Q","dim":3,"brackets":[
        {"i":0,"j":1,"v":["0","0","1"]},{"i":1,"j":2,"v":["1","0","0"]},{"i":0,"j":2,"v":["0","-1","0"]}]}"#;

    #[test]
    fn round_trip() {
        let doc = parse_algebra(SO3).unwrap();
        assert!(doc.algebra.is_lie());
        let text = doc.to_canonical_string();
        assert_eq!(parse_algebra(&text).unwrap(), doc);
        assert_eq!(parse_algebra(&text).unwrap().to_canonical_string(), text);
        assert!(text.starts_with(r#"{"brackets":[{"i":0,"j":1"#));
    }

    #[test]
    fn errors_name_their_path() {
        let bad_order = r#"{"field":"Q","dim":2,"brackets":[{"i":1,"j":0,"v":["0","1"]}]}"#;
        let e = parse_algebra(bad_order).unwrap_err();
        assert!(e.to_string().contains("$.brackets[0]"), "{e}");
        let short = r#"{"field":{"gf":5},"dim":2,"brackets":[{"i":0,"j":1,"v":["1"]}]}"#;
        let e = parse_algebra(short).unwrap_err().to_string();
        assert!(e.contains("$.brackets[0].v") && e.contains("(0,1)"), "{e}");
        let range = r#"{"field":"Q","dim":2,"brackets":[{"i":0,"j":2,"v":["0","1"]}]}"#;
        assert!(parse_algebra(range).unwrap_err().to_string().contains("$.brackets[0].j"));
        let scalar = r#"{"field":{"gf":5},"dim":2,"brackets":[{"i":0,"j":1,"v":["0","7"]}]}"#;
        assert!(parse_algebra(scalar).unwrap_err().to_string().contains("$.brackets[0].v[1]"));
        let field = r#"{"field":{"gf":4},"dim":1}"#;
        assert!(parse_algebra(field).unwrap_err().to_string().contains("$.field.gf"));
    }

    #[test]
    fn sigma_documents() {
        let text = r#"{"field":{"gf":3},"dim":2,"brackets":[{"i":0,"j":1,"v":["0","1"]}],"sigma":[["0","1"],["1","0"]]}"#;
        let doc = parse_algebra(text).unwrap();
        let h = doc.hom_lie().unwrap();
        assert_eq!(h.sigma().get(0, 1), &FieldSpec::Prime(3).one());
        let bad = r#"{"field":"Q","dim":2,"sigma":[["0","1"]]}"#;
        assert!(parse_algebra(bad).unwrap_err().to_string().contains("$.sigma"));
    }
}

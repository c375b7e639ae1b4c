//! The JSON structure-constant file format.
//!
//! Rationals are strings `"p/q"` or `"p"`; a field element is an array of `phi(N)` rational
//! strings (power-basis coefficients). Tensors are dense nested arrays: `mult[i][j][k]`,
//! `comult[i][j][k]`, and `antipode[i][j]` is the coefficient of `b_j` in `S(b_i)`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{HopfError, Result};
use crate::exactmath::matrix::Vector;
use crate::exactmath::{field_make, format_rational, parse_rational, CycloField, FieldElem, Matrix};
use crate::hopf::HopfAlgebraData;

/// Dense tensors are accepted up to this dimension.
pub const MAX_FILE_DIM: usize = 16;

pub type SerElem = Vec<String>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_irr_degrees: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpecFile {
    pub name: String,
    pub cyclotomic_order: u32,
    pub dim: usize,
    pub mult: Vec<Vec<Vec<SerElem>>>,
    pub unit: Vec<SerElem>,
    pub comult: Vec<Vec<Vec<SerElem>>>,
    pub counit: Vec<SerElem>,
    pub antipode: Vec<Vec<SerElem>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

pub fn serialize_elem(x: &FieldElem) -> SerElem {
    x.coeffs().iter().map(format_rational).collect()
}

pub fn parse_elem(field: &'static CycloField, s: &[String]) -> Result<FieldElem> {
    let coeffs = s
        .iter()
        .map(|c| {
            parse_rational(c).ok_or_else(|| HopfError::Malformed(format!("bad rational {c:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(field.from_coeffs(coeffs)?)
}

fn malformed(what: &str) -> HopfError {
    HopfError::Malformed(format!("{what} has the wrong shape"))
}

fn parse_vec(field: &'static CycloField, v: &[SerElem], n: usize, what: &str) -> Result<Vector> {
    if v.len() != n {
        return Err(malformed(what));
    }
    v.iter().map(|e| parse_elem(field, e)).collect()
}

fn parse_cube(field: &'static CycloField, t: &[Vec<Vec<SerElem>>], n: usize, what: &str) -> Result<Vec<FieldElem>> {
    if t.len() != n {
        return Err(malformed(what));
    }
    let mut out = Vec::with_capacity(n * n * n);
    for slab in t {
        if slab.len() != n {
            return Err(malformed(what));
        }
        for row in slab {
            out.extend(parse_vec(field, row, n, what)?);
        }
    }
    Ok(out)
}

impl AlgebraSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| HopfError::Malformed(format!("invalid JSON: {e}")))
    }

    /// Builds the structure constants. Axioms are not checked here.
    pub fn to_hopf(&self) -> Result<HopfAlgebraData> {
        let n = self.dim;
        if n == 0 || n > MAX_FILE_DIM {
            return Err(HopfError::TooLarge {
                dim: n,
                limit: MAX_FILE_DIM,
            });
        }
        let f = field_make(self.cyclotomic_order)?;
        let mult = parse_cube(f, &self.mult, n, "mult")?;
        let comult = parse_cube(f, &self.comult, n, "comult")?;
        let unit = parse_vec(f, &self.unit, n, "unit")?;
        let counit = parse_vec(f, &self.counit, n, "counit")?;
        if self.antipode.len() != n {
            return Err(malformed("antipode"));
        }
        let rows = self
            .antipode
            .iter()
            .map(|r| parse_vec(f, r, n, "antipode"))
            .collect::<Result<Vec<_>>>()?;
        let antipode = Matrix::from_rows(f, n, rows)?;
        HopfAlgebraData::new(self.name.clone(), f, n, mult, unit, comult, counit, antipode)
    }

    pub fn from_hopf(h: &HopfAlgebraData, metadata: Option<Metadata>) -> Self {
        let n = h.dim();
        let cube = |t: &[FieldElem]| -> Vec<Vec<Vec<SerElem>>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| serialize_elem(&t[(i * n + j) * n + k])).collect())
                        .collect()
                })
                .collect()
        };
        AlgebraSpecFile {
            name: h.name().to_string(),
            cyclotomic_order: h.field().order(),
            dim: n,
            mult: cube(h.mult_tensor()),
            unit: h.unit().iter().map(serialize_elem).collect(),
            comult: cube(h.comult_tensor()),
            counit: h.counit().iter().map(serialize_elem).collect(),
            antipode: (0..n)
                .map(|i| h.antipode().row(i).iter().map(serialize_elem).collect())
                .collect(),
            metadata,
        }
    }

    /// Canonical text: objects expanded, arrays of field elements kept on one line.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("spec file serializes");
        let mut out = String::new();
        write_value(&value, 0, &mut out);
        out.push('\n');
        out
    }
}

fn depth(v: &Value) -> usize {
    match v {
        Value::Array(a) => 1 + a.iter().map(depth).max().unwrap_or(0),
        _ => 0,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Object(map) => {
            out.push_str("{\n");
            let len = map.len();
            for (idx, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                write_value(val, indent + 1, out);
                if idx + 1 < len {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if depth(v) > 2 && !items.is_empty() => {
            out.push_str("[\n");
            for (idx, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                if idx + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&serde_json::to_string(other).expect("value")),
    }
}

/// Parses a file's text into structure constants.
pub fn parse_algebra(text: &str) -> Result<HopfAlgebraData> {
    AlgebraSpecFile::from_json(text)?.to_hopf()
}

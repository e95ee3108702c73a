//! JSON file formats for algebras, representations, deformations and
//! formal isomorphisms.
//!
//! Scalars are exact fraction strings. Sparse entries are index tuples
//! followed by a value; duplicates are rejected on load and entries are
//! written back sorted with zeros dropped, so a canonical file survives a
//! load/save cycle byte for byte.

use std::collections::BTreeSet;
use std::path::Path;

use hlysa_core::deformation::{Deformation, FormalIso};
use hlysa_core::graded::index_tuples;
use hlysa_core::scalar::{format_scalar, parse_scalar};
use hlysa_core::{GradedMap, HomLYSA, Matrix, MultiTensor, Parity, RepTriple, Scalar, SuperSpace};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: bad scalar {text:?}")]
    Scalar { field: String, text: String },
    #[error("{field}: index {index} out of range in entry {entry:?}")]
    Index {
        field: String,
        index: usize,
        entry: Vec<usize>,
    },
    #[error("{field}: duplicate entry {entry:?}")]
    Duplicate { field: String, entry: Vec<usize> },
    #[error("{field}: {message}")]
    Shape { field: String, message: String },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

fn invalid(field: &str, e: impl std::fmt::Display) -> FileError {
    FileError::Invalid {
        field: field.to_string(),
        message: e.to_string(),
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, FileError> {
    let text = std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

fn scalar(field: &str, text: &str) -> Result<Scalar, FileError> {
    parse_scalar(text).map_err(|_| FileError::Scalar {
        field: field.to_string(),
        text: text.to_string(),
    })
}

/// Sparse entry as read from disk: indices then a scalar string.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(transparent)]
pub struct Entry(pub Vec<Value>);

impl Entry {
    fn parse(&self, field: &str, arity: usize) -> Result<(Vec<usize>, Scalar), FileError> {
        let shape = || FileError::Shape {
            field: field.to_string(),
            message: format!("entry must be {arity} indices followed by a scalar string"),
        };
        if self.0.len() != arity + 1 {
            return Err(shape());
        }
        let idx = self.0[..arity]
            .iter()
            .map(|v| v.as_u64().map(|x| x as usize).ok_or_else(shape))
            .collect::<Result<Vec<_>, _>>()?;
        let text = self.0[arity].as_str().ok_or_else(shape)?;
        Ok((idx, scalar(field, text)?))
    }
}

/// Parses, range-checks and de-duplicates a list of sparse entries.
fn sparse(field: &str, entries: &[Entry], bounds: &[usize]) -> Result<Vec<(Vec<usize>, Scalar)>, FileError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        let (idx, v) = e.parse(field, bounds.len())?;
        for (&i, &b) in idx.iter().zip(bounds) {
            if i >= b {
                return Err(FileError::Index {
                    field: field.to_string(),
                    index: i,
                    entry: idx.clone(),
                });
            }
        }
        if !seen.insert(idx.clone()) {
            return Err(FileError::Duplicate {
                field: field.to_string(),
                entry: idx,
            });
        }
        out.push((idx, v));
    }
    Ok(out)
}

fn dense(field: &str, rows: &[Vec<String>], n: usize) -> Result<Matrix, FileError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(FileError::Shape {
            field: field.to_string(),
            message: format!("expected a {n} × {n} matrix"),
        });
    }
    let mut m = Matrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, text) in row.iter().enumerate() {
            m[(i, j)] = scalar(field, text)?;
        }
    }
    Ok(m)
}

fn tensor(field: &str, space: SuperSpace, arity: usize, entries: &[(Vec<usize>, Scalar)]) -> Result<MultiTensor, FileError> {
    MultiTensor::from_entries(
        space,
        arity,
        entries.iter().map(|(idx, v)| (&idx[..arity], idx[arity], v.clone())),
    )
    .map_err(|e| invalid(field, e))
}

fn dense_json(m: &Matrix) -> Vec<Value> {
    (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(|c| Value::String(format_scalar(c))).collect()))
        .collect()
}

fn entry_json(idx: &[usize], v: &Scalar) -> Value {
    let mut row: Vec<Value> = idx.iter().map(|&i| json!(i)).collect();
    row.push(Value::String(format_scalar(v)));
    Value::Array(row)
}

fn tensor_entries(t: &MultiTensor, prefix: &[usize]) -> Vec<Value> {
    t.entries()
        .into_iter()
        .map(|(mut idx, m, v)| {
            idx.push(m);
            let full: Vec<usize> = prefix.iter().copied().chain(idx).collect();
            entry_json(&full, &v)
        })
        .collect()
}

fn map_entries(m: &GradedMap, prefix: &[usize]) -> Vec<Value> {
    let mat = m.matrix();
    let mut out = Vec::new();
    for i in 0..mat.rows() {
        for j in 0..mat.cols() {
            let v = &mat[(i, j)];
            if !num::Zero::is_zero(v) {
                let full: Vec<usize> = prefix.iter().copied().chain([i, j]).collect();
                out.push(entry_json(&full, v));
            }
        }
    }
    out
}

/// Writes an object one key per line, with arrays of arrays laid out one
/// row per line. Keys keep the given order.
pub fn canonical_json(fields: &[(&str, Value)]) -> String {
    let mut out = String::from("{\n");
    for (k, (key, value)) in fields.iter().enumerate() {
        out.push_str(&format!("  {}: ", Value::String(key.to_string())));
        match value {
            Value::Array(rows) if rows.iter().all(Value::is_array) && !rows.is_empty() => {
                out.push_str("[\n");
                for (r, row) in rows.iter().enumerate() {
                    out.push_str("    ");
                    out.push_str(&row.to_string());
                    out.push_str(if r + 1 < rows.len() { ",\n" } else { "\n" });
                }
                out.push_str("  ]");
            }
            other => out.push_str(&other.to_string()),
        }
        out.push_str(if k + 1 < fields.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub description: Option<String>,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub alpha: Vec<Vec<String>>,
    #[serde(default)]
    pub bracket2: Vec<Entry>,
    #[serde(default)]
    pub bracket3: Vec<Entry>,
}

impl AlgebraFile {
    pub fn load(path: &Path) -> Result<Self, FileError> {
        read_json(path)
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn space(&self) -> SuperSpace {
        SuperSpace::new(self.even_dim, self.odd_dim)
    }

    pub fn to_algebra(&self) -> Result<HomLYSA, FileError> {
        let space = self.space();
        let n = space.dim();
        let alpha = GradedMap::endo(space, Parity::Even, dense("alpha", &self.alpha, n)?)
            .map_err(|e| invalid("alpha", e))?;
        let b2 = tensor("bracket2", space, 2, &sparse("bracket2", &self.bracket2, &[n; 3])?)?;
        let b3 = tensor("bracket3", space, 3, &sparse("bracket3", &self.bracket3, &[n; 4])?)?;
        HomLYSA::new(space, b2, b3, alpha).map_err(|e| invalid("algebra", e))
    }

    pub fn from_algebra(a: &HomLYSA, name: Option<&str>, description: Option<&str>) -> String {
        let mut fields = Vec::new();
        if let Some(n) = name {
            fields.push(("name", json!(n)));
        }
        if let Some(d) = description {
            fields.push(("description", json!(d)));
        }
        let s = a.space();
        fields.push(("even_dim", json!(s.even_dim)));
        fields.push(("odd_dim", json!(s.odd_dim)));
        fields.push(("alpha", Value::Array(dense_json(a.alpha().matrix()))));
        fields.push(("bracket2", Value::Array(tensor_entries(a.bracket2(), &[]))));
        fields.push(("bracket3", Value::Array(tensor_entries(a.bracket3(), &[]))));
        canonical_json(&fields)
    }

    /// The same file rewritten in canonical form.
    pub fn canonical(&self) -> Result<String, FileError> {
        Ok(Self::from_algebra(
            &self.to_algebra()?,
            self.name.as_deref(),
            self.description.as_deref(),
        ))
    }
}

/// `rho` entries are `[x, row, col, v]`: entry `(row, col)` of `ρ(e_x)`.
/// `d` and `theta` entries are `[x, y, row, col, v]`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    #[serde(default)]
    pub name: Option<String>,
    pub module_even_dim: usize,
    pub module_odd_dim: usize,
    pub beta: Vec<Vec<String>>,
    #[serde(default)]
    pub rho: Vec<Entry>,
    #[serde(default)]
    pub d: Vec<Entry>,
    #[serde(default)]
    pub theta: Vec<Entry>,
}

impl RepFile {
    pub fn load(path: &Path) -> Result<Self, FileError> {
        read_json(path)
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_rep(&self, base: SuperSpace) -> Result<RepTriple, FileError> {
        let module = SuperSpace::new(self.module_even_dim, self.module_odd_dim);
        let (n, m) = (base.dim(), module.dim());
        let beta = GradedMap::endo(module, Parity::Even, dense("beta", &self.beta, m)?)
            .map_err(|e| invalid("beta", e))?;
        let build = |field: &str, entries: &[(Vec<usize>, Scalar)], count: usize, lead: usize| {
            let mut mats = vec![Matrix::zeros(m, m); count];
            for (idx, v) in entries {
                let k = idx[..lead].iter().fold(0, |acc, &i| acc * n + i);
                mats[k][(idx[lead], idx[lead + 1])] = v.clone();
            }
            mats.into_iter()
                .enumerate()
                .map(|(k, mat)| {
                    let parity = if lead == 1 {
                        base.parity(k)
                    } else {
                        base.parity(k / n) + base.parity(k % n)
                    };
                    GradedMap::endo(module, parity, mat).map_err(|e| invalid(field, e))
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let rho = build("rho", &sparse("rho", &self.rho, &[n, m, m])?, n, 1)?;
        let d = build("d", &sparse("d", &self.d, &[n, n, m, m])?, n * n, 2)?;
        let theta = build("theta", &sparse("theta", &self.theta, &[n, n, m, m])?, n * n, 2)?;
        RepTriple::new(base, module, beta, rho, d, theta).map_err(|e| invalid("representation", e))
    }

    pub fn from_rep(r: &RepTriple, name: Option<&str>) -> String {
        let n = r.base().dim();
        let mut fields = Vec::new();
        if let Some(nm) = name {
            fields.push(("name", json!(nm)));
        }
        fields.push(("module_even_dim", json!(r.module().even_dim)));
        fields.push(("module_odd_dim", json!(r.module().odd_dim)));
        fields.push(("beta", Value::Array(dense_json(r.beta().matrix()))));
        fields.push(("rho", Value::Array((0..n).flat_map(|i| map_entries(r.rho(i), &[i])).collect())));
        let pairs = |f: &dyn Fn(usize, usize) -> Vec<Value>| -> Value {
            Value::Array(index_tuples(n, 2).flat_map(|t| f(t[0], t[1])).collect())
        };
        fields.push(("d", pairs(&|i, j| map_entries(r.d(i, j), &[i, j]))));
        fields.push(("theta", pairs(&|i, j| map_entries(r.theta(i, j), &[i, j]))));
        canonical_json(&fields)
    }
}

/// `f` entries are `[order, i, j, m, v]`, `g` entries `[order, i, j, k, m, v]`,
/// with `1 ≤ order ≤ N`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationFile {
    #[serde(default)]
    pub name: Option<String>,
    pub order: usize,
    #[serde(default)]
    pub f: Vec<Entry>,
    #[serde(default)]
    pub g: Vec<Entry>,
}

fn check_orders(field: &str, entries: &[(Vec<usize>, Scalar)]) -> Result<(), FileError> {
    match entries.iter().find(|(idx, _)| idx[0] == 0) {
        Some((idx, _)) => Err(FileError::Index {
            field: field.to_string(),
            index: 0,
            entry: idx.clone(),
        }),
        None => Ok(()),
    }
}

impl DeformationFile {
    pub fn load(path: &Path) -> Result<Self, FileError> {
        read_json(path)
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_deformation(&self, base: &HomLYSA) -> Result<Deformation, FileError> {
        let space = base.space();
        let n = space.dim();
        let big = self.order + 1;
        let f = sparse("f", &self.f, &[big, n, n, n])?;
        let g = sparse("g", &self.g, &[big, n, n, n, n])?;
        check_orders("f", &f)?;
        check_orders("g", &g)?;
        let per_order = |field: &str, entries: &[(Vec<usize>, Scalar)], arity: usize| {
            (1..=self.order)
                .map(|k| {
                    let sel: Vec<(Vec<usize>, Scalar)> = entries
                        .iter()
                        .filter(|(idx, _)| idx[0] == k)
                        .map(|(idx, v)| (idx[1..].to_vec(), v.clone()))
                        .collect();
                    tensor(&format!("{field}[{k}]"), space, arity, &sel)
                })
                .collect::<Result<Vec<_>, _>>()
        };
        let fs = per_order("f", &f, 2)?;
        let gs = per_order("g", &g, 3)?;
        Deformation::new(base.clone(), fs, gs).map_err(|e| invalid("deformation", e))
    }

    pub fn from_deformation(d: &Deformation, name: Option<&str>) -> String {
        let mut fields = Vec::new();
        if let Some(nm) = name {
            fields.push(("name", json!(nm)));
        }
        fields.push(("order", json!(d.order())));
        fields.push((
            "f",
            Value::Array((1..=d.order()).flat_map(|k| tensor_entries(d.f(k), &[k])).collect()),
        ));
        fields.push((
            "g",
            Value::Array((1..=d.order()).flat_map(|k| tensor_entries(d.g(k), &[k])).collect()),
        ));
        canonical_json(&fields)
    }
}

/// `phi` entries are `[order, row, col, v]` for `1 ≤ order ≤ N`; `φ_0 = id`
/// is implicit.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsoFile {
    #[serde(default)]
    pub name: Option<String>,
    pub order: usize,
    #[serde(default)]
    pub phi: Vec<Entry>,
}

impl IsoFile {
    pub fn load(path: &Path) -> Result<Self, FileError> {
        read_json(path)
    }

    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_iso(&self, base: &HomLYSA) -> Result<FormalIso, FileError> {
        let space = base.space();
        let n = space.dim();
        let entries = sparse("phi", &self.phi, &[self.order + 1, n, n])?;
        check_orders("phi", &entries)?;
        let mut mats = vec![Matrix::zeros(n, n); self.order];
        for (idx, v) in &entries {
            mats[idx[0] - 1][(idx[1], idx[2])] = v.clone();
        }
        let maps = mats
            .into_iter()
            .map(|m| GradedMap::endo(space, Parity::Even, m).map_err(|e| invalid("phi", e)))
            .collect::<Result<Vec<_>, _>>()?;
        FormalIso::new(base, maps).map_err(|e| invalid("phi", e))
    }

    pub fn from_iso(iso: &FormalIso, name: Option<&str>) -> String {
        let mut fields = Vec::new();
        if let Some(nm) = name {
            fields.push(("name", json!(nm)));
        }
        fields.push(("order", json!(iso.order())));
        fields.push((
            "phi",
            Value::Array((1..=iso.order()).flat_map(|k| map_entries(iso.coeff(k), &[k])).collect()),
        ));
        canonical_json(&fields)
    }
}

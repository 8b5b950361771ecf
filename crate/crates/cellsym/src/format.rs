//! The JSON presentation document: an algebra given by structure constants, plus an
//! optional trace and cell datum. Scalars are strings so rationals stay exact.

use cellsym_core::{
    Algebra, AlgebraError, CellDatum, CellError, Field, Instance, Involution, Matrix, Member, Scalar, TraceError,
    TraceForm,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("syntax error: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{location}: {message}")]
    Validation { location: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Validation {
        location: location.into(),
        message: message.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub field: String,
    pub basis: Vec<String>,
    /// `[i, j, k, r]`: `x_i x_j` has coefficient `r` on `x_k`.
    pub mult: Vec<(usize, usize, usize, String)>,
    pub degree: Vec<i64>,
    pub involution: InvolutionDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell: Option<CellDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum InvolutionDoc {
    /// `x_j* = x_{perm[j]}`.
    Permutation(Vec<usize>),
    /// Nonzero entries `[row, column, value]`; column `j` is the image of `x_j`.
    Matrix(Vec<(usize, usize, String)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDoc {
    pub lambdas: Vec<String>,
    /// `[a, b]` means cell `a` lies below cell `b`.
    pub less: Vec<(usize, usize)>,
    pub tableaux: Vec<Vec<MemberDoc>>,
    /// `[λ, S, T, basis index]`.
    pub map: Vec<(usize, usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberDoc {
    pub name: String,
    pub deg: i64,
}

/// Reads `q` or `f<p>` (case-insensitive).
pub fn parse_field(text: &str) -> Result<Field, String> {
    let t = text.trim().to_ascii_lowercase();
    if t == "q" {
        return Ok(Field::Rational);
    }
    let p = t
        .strip_prefix('f')
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| format!("unknown field {text:?}, expected q or f<prime>"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

pub fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "q".into(),
        Field::Prime(p) => format!("f{p}"),
    }
}

fn scalar(f: Field, text: &str, location: impl FnOnce() -> String) -> Result<Scalar, FormatError> {
    f.parse(text).map_err(|e| invalid(location(), e))
}

fn check_index(i: usize, n: usize, location: impl FnOnce() -> String) -> Result<(), FormatError> {
    if i >= n {
        return Err(invalid(location(), format!("index {i} out of range (dimension {n})")));
    }
    Ok(())
}

fn algebra_error(e: AlgebraError) -> FormatError {
    let location = match &e {
        AlgebraError::IndexOutOfRange { entry, .. } => format!("mult[{entry}]"),
        AlgebraError::LengthMismatch { what, .. } => what.to_string(),
        AlgebraError::BadInvolution(_) => "involution".into(),
        AlgebraError::NotGraded { .. } => "degree".into(),
        _ => "mult".into(),
    };
    invalid(location, e)
}

impl PresentationDocument {
    pub fn to_instance(&self) -> Result<Instance, FormatError> {
        let field = parse_field(&self.field).map_err(|m| invalid("field", m))?;
        let n = self.basis.len();
        let mut mult = Vec::with_capacity(self.mult.len());
        for (e, (i, j, k, r)) in self.mult.iter().enumerate() {
            for x in [i, j, k] {
                check_index(*x, n, || format!("mult[{e}]"))?;
            }
            mult.push((*i, *j, *k, scalar(field, r, || format!("mult[{e}][3]"))?));
        }
        let involution = match &self.involution {
            InvolutionDoc::Permutation(perm) => {
                for (e, &p) in perm.iter().enumerate() {
                    check_index(p, n, || format!("involution.permutation[{e}]"))?;
                }
                Involution::Permutation {
                    perm: perm.clone(),
                    signs: None,
                }
            }
            InvolutionDoc::Matrix(entries) => {
                let mut m = Matrix::zeros(field, n, n);
                for (e, (i, j, c)) in entries.iter().enumerate() {
                    check_index(*i, n, || format!("involution.matrix[{e}]"))?;
                    check_index(*j, n, || format!("involution.matrix[{e}]"))?;
                    m.set(*i, *j, scalar(field, c, || format!("involution.matrix[{e}][2]"))?);
                }
                Involution::Matrix(m)
            }
        };
        let algebra =
            Algebra::new(field, self.basis.clone(), mult, self.degree.clone(), involution).map_err(algebra_error)?;
        let mut inst = Instance::new(self.id.clone().unwrap_or_else(|| "unnamed".into()), algebra);
        if let Some(values) = &self.trace {
            let values = values
                .iter()
                .enumerate()
                .map(|(i, v)| scalar(field, v, || format!("trace[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let t = TraceForm::new(&inst.algebra, values).map_err(|e: TraceError| invalid("trace", e))?;
            inst = inst.with_trace(t);
        }
        if let Some(cell) = &self.cell {
            let tableaux = cell
                .tableaux
                .iter()
                .map(|ms| ms.iter().map(|m| Member::new(m.name.clone(), m.deg)).collect())
                .collect();
            let cd = CellDatum::new(n, cell.lambdas.clone(), cell.less.clone(), tableaux, cell.map.clone())
                .map_err(|e: CellError| invalid("cell", e))?;
            inst = inst.with_cell(cd);
        }
        Ok(inst)
    }

    /// Canonical document: structure constants sorted by `(i, j, k)`, the involution as a
    /// permutation whenever it is one, and cell map entries in `(λ, S, T)` order.
    pub fn from_instance(inst: &Instance) -> PresentationDocument {
        let alg = &inst.algebra;
        let n = alg.dim();
        let mut mult: Vec<_> = alg
            .structure_constants()
            .map(|(i, j, k, r)| (i, j, k, r.to_string()))
            .collect();
        mult.sort_by_key(|e| (e.0, e.1, e.2));
        let inv = alg.involution();
        let perm: Option<Vec<usize>> = (0..n)
            .map(|j| {
                let col: Vec<usize> = (0..n).filter(|&i| !inv.get(i, j).is_zero()).collect();
                (col.len() == 1 && inv.get(col[0], j).is_one()).then(|| col[0])
            })
            .collect();
        let involution = match perm {
            Some(p) => InvolutionDoc::Permutation(p),
            None => InvolutionDoc::Matrix(
                (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| !inv.get(i, j).is_zero())
                    .map(|(i, j)| (i, j, inv.get(i, j).to_string()))
                    .collect(),
            ),
        };
        let cell = inst.cell.as_ref().map(|cd| {
            let mut map: Vec<_> = cd.map_entries().collect();
            map.sort();
            CellDoc {
                lambdas: cd.lambdas().to_vec(),
                less: cd.less_pairs().to_vec(),
                tableaux: cd
                    .tableaux()
                    .iter()
                    .map(|ms| {
                        ms.iter()
                            .map(|m| MemberDoc {
                                name: m.name.clone(),
                                deg: m.deg,
                            })
                            .collect()
                    })
                    .collect(),
                map,
            }
        });
        PresentationDocument {
            id: Some(inst.id.clone()),
            field: field_name(alg.field()),
            basis: alg.labels().to_vec(),
            mult,
            degree: alg.degrees().to_vec(),
            involution,
            trace: inst.trace.as_ref().map(|t| t.values().iter().map(|v| v.to_string()).collect()),
            cell,
        }
    }
}

pub fn parse(text: &str) -> Result<Instance, FormatError> {
    let doc: PresentationDocument = serde_json::from_str(text)?;
    doc.to_instance()
}

pub fn serialize(inst: &Instance) -> String {
    let doc = PresentationDocument::from_instance(inst);
    let value = serde_json::to_value(&doc).expect("documents always serialize");
    let mut out = String::new();
    write_layered(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &serde_json::Value) -> bool {
    use serde_json::Value;
    let scalar = |x: &Value| !matches!(x, Value::Array(_) | Value::Object(_));
    match v {
        Value::Array(xs) => xs.iter().all(scalar),
        Value::Object(m) => m.values().all(scalar),
        _ => true,
    }
}

/// Indented JSON in which arrays and objects of scalars stay on one line, so that each
/// structure constant or cell map entry reads as a single row.
fn write_layered(v: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    if is_flat(v) {
        out.push_str(&v.to_string());
        return;
    }
    let pad = "  ".repeat(depth + 1);
    let (open, close) = if v.is_array() { ('[', ']') } else { ('{', '}') };
    out.push(open);
    let items: Vec<(Option<&String>, &Value)> = match v {
        Value::Array(xs) => xs.iter().map(|x| (None, x)).collect(),
        Value::Object(m) => m.iter().map(|(k, x)| (Some(k), x)).collect(),
        _ => unreachable!(),
    };
    for (i, (key, x)) in items.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        out.push_str(&pad);
        if let Some(k) = key {
            out.push_str(&Value::String((*k).clone()).to_string());
            out.push_str(": ");
        }
        write_layered(x, depth + 1, out);
    }
    out.push('\n');
    out.push_str(&"  ".repeat(depth));
    out.push(close);
}

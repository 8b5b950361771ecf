//! Constructors for the example families, each returning a full [`Instance`].

pub mod matrix;
pub mod path;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, AlgebraError, Involution};
use crate::cellular::{CellDatum, CellError, Member};
use crate::instance::Instance;
use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::trace::{TraceError, TraceForm};

pub use matrix::{matrix_algebra, MatrixCellSpec};
pub use path::{Arrow, PathAlgebra, PathError, QuiverPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    /// The characteristic divides `n + 1`.
    BadCharacteristic { p: u64, n: usize },
    BadSize { n: usize },
    BadPermutation,
    MixedFields,
    MixedTraceDegrees,
    MissingTrace,
    MissingCell,
    /// The degree-zero indicator trace differs from the matrix trace.
    TraceMismatch,
    Path(PathError),
    Algebra(AlgebraError),
    Cell(CellError),
    Trace(TraceError),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::BadCharacteristic { p, n } => {
                write!(f, "characteristic {p} divides n + 1 = {}", n + 1)
            }
            BuildError::BadSize { n } => write!(f, "size {n} is not allowed here"),
            BuildError::BadPermutation => write!(f, "not a permutation"),
            BuildError::MixedFields => write!(f, "summands live over different fields"),
            BuildError::MixedTraceDegrees => write!(f, "summand traces have different degrees"),
            BuildError::MissingTrace => write!(f, "a summand has no trace"),
            BuildError::MissingCell => write!(f, "a summand has no cell datum"),
            BuildError::TraceMismatch => write!(f, "degree-zero trace differs from the matrix trace"),
            BuildError::Path(e) => write!(f, "{e}"),
            BuildError::Algebra(e) => write!(f, "{e}"),
            BuildError::Cell(e) => write!(f, "{e}"),
            BuildError::Trace(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BuildError {}

fn labels(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `K[x]/(x²)` with `deg x = 2`, trace picking the coefficient of `x`, and the
/// two one-element cells `x < 1`.
pub fn dual_numbers(field: Field) -> Instance {
    let one = field.one();
    let mult = vec![(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one)];
    let id = Involution::Permutation {
        perm: vec![0, 1],
        signs: None,
    };
    let algebra = Algebra::new(field, labels(&["1", "x"]), mult, vec![0, 2], id).expect("dual numbers are valid");
    let cell = CellDatum::new(
        2,
        labels(&["l1", "l2"]),
        vec![(0, 1)],
        vec![vec![Member::new("a", 1)], vec![Member::new("b", 0)]],
        vec![(0, 0, 0, 1), (1, 0, 0, 0)],
    )
    .expect("dual numbers datum is well formed");
    let trace = TraceForm::new(&algebra, vec![field.zero(), field.one()]).expect("right length");
    Instance::new("dual-numbers", algebra).with_cell(cell).with_trace(trace)
}

/// The zigzag quiver presentation on `n` vertices: arrows `a_i: i → i+1` and
/// `a_i': i+1 → i` of degree 1, declared as `a1, a1', a2, a2', …`.
pub fn zigzag_presentation(field: Field, n: usize) -> QuiverPresentation {
    let a = |i: usize| 2 * (i - 1);
    let b = |i: usize| 2 * (i - 1) + 1;
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push(Arrow {
            source: i - 1,
            target: i,
            label: format!("a{i}"),
            degree: 1,
        });
        arrows.push(Arrow {
            source: i,
            target: i - 1,
            label: format!("a{i}'"),
            degree: 1,
        });
    }
    let mut relations = Vec::new();
    for i in 1..n.saturating_sub(1) {
        relations.push(vec![(field.one(), vec![b(i), a(i)]), (-field.one(), vec![a(i + 1), b(i + 1)])]);
        relations.push(vec![(field.one(), vec![a(i), a(i + 1)])]);
        relations.push(vec![(field.one(), vec![b(i + 1), b(i)])]);
    }
    QuiverPresentation {
        vertices: n,
        arrows,
        relations,
        max_length: Some(2),
        arrow_involution: Some((0..2 * (n - 1)).map(|x| x ^ 1).collect()),
    }
}

/// The graded symmetric zigzag algebra on `n ≥ 2` vertices with its chain of
/// `n + 1` cells and the trace that is 1 on every length-two loop.
pub fn zigzag(field: Field, n: usize) -> Result<Instance, BuildError> {
    if n < 2 {
        return Err(BuildError::BadSize { n });
    }
    let p = field.characteristic();
    if p != 0 && (n as u64 + 1).is_multiple_of(p) {
        return Err(BuildError::BadCharacteristic { p, n });
    }
    let q = zigzag_presentation(field, n);
    let pa = PathAlgebra::build(&q, field).map_err(BuildError::Path)?;
    let a = |i: usize| 2 * (i - 1);
    let b = |i: usize| 2 * (i - 1) + 1;
    let at = |arrows: &[usize]| pa.index_of(arrows).expect("path is a basis element");

    // cell 0 = {e1} on top, then the 2x2 blocks, then the bottom loop
    let mut lambdas = Vec::new();
    let mut tableaux = Vec::new();
    let mut map = Vec::new();
    lambdas.push("1".to_string());
    tableaux.push(vec![Member::new("1", 0)]);
    map.push((0, 0, 0, pa.vertex(0)));
    for k in 1..n {
        lambdas.push(format!("{}", k + 1));
        tableaux.push(vec![Member::new("1", 1), Member::new("2", 0)]);
        map.push((k, 0, 0, at(&[a(k), b(k)])));
        map.push((k, 0, 1, at(&[a(k)])));
        map.push((k, 1, 0, at(&[b(k)])));
        map.push((k, 1, 1, pa.vertex(k)));
    }
    lambdas.push(format!("{}", n + 1));
    tableaux.push(vec![Member::new("1", 1)]);
    map.push((n, 0, 0, at(&[b(n - 1), a(n - 1)])));
    let less = (0..n).map(|k| (k + 1, k)).collect();
    let cell = CellDatum::new(pa.dim(), lambdas, less, tableaux, map).map_err(BuildError::Cell)?;

    let alg = pa.algebra;
    let values = (0..alg.dim())
        .map(|i| if alg.degree(i) == 2 { field.one() } else { field.zero() })
        .collect();
    let trace = TraceForm::new(&alg, values).map_err(BuildError::Trace)?;
    Ok(Instance::new(format!("zigzag-n{n}"), alg).with_cell(cell).with_trace(trace))
}

/// Block-diagonal sum; cells of different summands are incomparable.
pub fn direct_sum(parts: &[Instance]) -> Result<Instance, BuildError> {
    let first = parts.first().ok_or(BuildError::BadSize { n: 0 })?;
    let field = first.algebra.field();
    if parts.iter().any(|p| p.algebra.field() != field) {
        return Err(BuildError::MixedFields);
    }
    let mut traces = Vec::new();
    let mut cells = Vec::new();
    for p in parts {
        traces.push(p.trace.as_ref().ok_or(BuildError::MissingTrace)?);
        cells.push(p.cell.as_ref().ok_or(BuildError::MissingCell)?);
    }
    let d = traces[0].degree();
    if d.is_none() || traces.iter().any(|t| t.degree() != d) {
        return Err(BuildError::MixedTraceDegrees);
    }
    if parts.len() == 1 {
        return Ok(first.clone());
    }

    let n: usize = parts.iter().map(|p| p.algebra.dim()).sum();
    let mut names = Vec::new();
    let mut mult = Vec::new();
    let mut degrees = Vec::new();
    let mut inv = Matrix::zeros(field, n, n);
    let mut values = Vec::new();
    let mut lambdas = Vec::new();
    let mut less = Vec::new();
    let mut tableaux = Vec::new();
    let mut map = Vec::new();
    let (mut off, mut loff) = (0, 0);
    for (b, p) in parts.iter().enumerate() {
        let alg = &p.algebra;
        let cd = cells[b];
        names.extend(alg.labels().iter().map(|l| format!("b{}:{l}", b + 1)));
        mult.extend(alg.structure_constants().map(|(i, j, k, r)| (i + off, j + off, k + off, r.clone())));
        degrees.extend_from_slice(alg.degrees());
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                inv.set(i + off, j + off, alg.involution().get(i, j).clone());
            }
        }
        values.extend_from_slice(traces[b].values());
        lambdas.extend(cd.lambdas().iter().map(|l| format!("b{}:{l}", b + 1)));
        less.extend(cd.less_pairs().iter().map(|&(x, y)| (x + loff, y + loff)));
        tableaux.extend_from_slice(cd.tableaux());
        map.extend(cd.map_entries().map(|(l, s, t, i)| (l + loff, s, t, i + off)));
        off += alg.dim();
        loff += cd.lambda_count();
    }
    let algebra = Algebra::new(field, names, mult, degrees, Involution::Matrix(inv)).map_err(BuildError::Algebra)?;
    let cell = CellDatum::new(n, lambdas, less, tableaux, map).map_err(BuildError::Cell)?;
    let trace = TraceForm::new(&algebra, values).map_err(BuildError::Trace)?;
    let id = parts.iter().map(|p| p.id.as_str()).collect::<Vec<_>>().join("+");
    Ok(Instance::new(id, algebra).with_cell(cell).with_trace(trace))
}

/// A trivially graded local algebra `K ⊕ M ⊕ Ks` with `M` four-dimensional,
/// `m m' = B(m, m') s` for the standard form `B`, and cells `{s} < M < {1}`.
/// The involution swaps `C12` and `C21`. With `twisted`, the trace is `τ((1 + C12) a)`,
/// which is symmetrizing but not `*`-invariant.
pub fn local_socle(field: Field, twisted: bool) -> Instance {
    let one = field.one();
    let mut mult = Vec::new();
    for j in 0..6 {
        mult.push((0, j, j, one.clone()));
        if j > 0 {
            mult.push((j, 0, j, one.clone()));
        }
    }
    for m in 1..5 {
        mult.push((m, m, 5, one.clone()));
    }
    let perm = vec![0, 1, 3, 2, 4, 5];
    let algebra = Algebra::new(
        field,
        labels(&["1", "C11", "C12", "C21", "C22", "s"]),
        mult,
        vec![0; 6],
        Involution::Permutation { perm, signs: None },
    )
    .expect("local socle algebra is valid");
    let cell = CellDatum::new(
        6,
        labels(&["bottom", "middle", "top"]),
        vec![(0, 1), (1, 2)],
        vec![
            vec![Member::new("s", 0)],
            vec![Member::new("1", 0), Member::new("2", 0)],
            vec![Member::new("1", 0)],
        ],
        vec![(0, 0, 0, 5), (1, 0, 0, 1), (1, 0, 1, 2), (1, 1, 0, 3), (1, 1, 1, 4), (2, 0, 0, 0)],
    )
    .expect("local socle datum is well formed");
    let mut values = vec![field.zero(); 6];
    values[5] = field.one();
    let mut trace = TraceForm::new(&algebra, values).expect("right length");
    let mut id = String::from("local-socle");
    if twisted {
        let mut z = algebra.identity().clone();
        z = z.add(&algebra.basis_element(2));
        trace = trace.twist(&algebra, &z).expect("1 + C12 is a central unit");
        id.push_str("-twisted");
    }
    Instance::new(id, algebra).with_cell(cell).with_trace(trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::validate_cell_datum;

    #[test]
    fn zigzag_dimensions() {
        for n in 2..=5 {
            let inst = zigzag(Field::Rational, n).unwrap();
            assert_eq!(inst.algebra.dim(), 4 * n - 2);
            assert_eq!(inst.algebra.degree_component(0).dim(), n);
            let r = validate_cell_datum(&inst.algebra, inst.cell.as_ref().unwrap());
            assert!(r.passed(), "{r:?}");
            let t = inst.trace.as_ref().unwrap();
            assert_eq!(t.degree(), Some(-2));
            t.check_symmetrizing(&inst.algebra).unwrap();
        }
    }

    #[test]
    fn zigzag_characteristic_guard() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(zigzag(f2, 3).unwrap_err(), BuildError::BadCharacteristic { p: 2, n: 3 });
        assert!(zigzag(f2, 2).is_ok());
        assert_eq!(zigzag(Field::Rational, 1).unwrap_err(), BuildError::BadSize { n: 1 });
    }

    #[test]
    fn zigzag_small_products() {
        let inst = zigzag(Field::Rational, 2).unwrap();
        let a = &inst.algebra;
        let i = |l: &str| a.index_of(l).unwrap();
        let prod = a.mul(&a.basis_element(i("a1")), &a.basis_element(i("a1'"))).unwrap();
        assert_eq!(prod, a.basis_element(i("a1a1'")));
        assert!(a.mul(&prod, &a.basis_element(i("a1"))).unwrap().is_zero());
    }

    #[test]
    fn dual_numbers_over_f2() {
        let inst = dual_numbers(Field::prime(2).unwrap());
        assert!(validate_cell_datum(&inst.algebra, inst.cell.as_ref().unwrap()).passed());
        inst.trace.unwrap().check_symmetrizing(&inst.algebra).unwrap();
    }

    #[test]
    fn direct_sum_guards() {
        let m2 = matrix_algebra(Field::Rational, &MatrixCellSpec::canonical(2)).unwrap();
        let m3 = matrix_algebra(Field::Rational, &MatrixCellSpec::canonical(3)).unwrap();
        let sum = direct_sum(&[m2.clone(), m3]).unwrap();
        assert_eq!(sum.algebra.dim(), 13);
        assert!(validate_cell_datum(&sum.algebra, sum.cell.as_ref().unwrap()).passed());
        assert_eq!(direct_sum(core::slice::from_ref(&m2)).unwrap(), m2);
        let e = dual_numbers(Field::Rational);
        assert_eq!(direct_sum(&[m2.clone(), e]).unwrap_err(), BuildError::MixedTraceDegrees);
        let f7 = matrix_algebra(Field::prime(7).unwrap(), &MatrixCellSpec::canonical(2)).unwrap();
        assert_eq!(direct_sum(&[m2, f7]).unwrap_err(), BuildError::MixedFields);
    }

    #[test]
    fn local_socle_traces() {
        let plain = local_socle(Field::Rational, false);
        let twisted = local_socle(Field::Rational, true);
        assert!(validate_cell_datum(&plain.algebra, plain.cell.as_ref().unwrap()).passed());
        let t = twisted.trace.as_ref().unwrap();
        assert_eq!(t.degree(), Some(0));
        assert!(t.values()[2].is_one() && t.values()[3].is_zero());
    }
}

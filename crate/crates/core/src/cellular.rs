//! Cell data: the poset of cells, tableaux with degrees, and the bijection to the basis.
//!
//! Most checks are written against a [`Family`], a basis of the algebra indexed by
//! the same `(λ, S, T)` triples. The cellular basis itself is one family; the dual
//! basis relabeled through the datum is another, cellular for the reversed order.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, Element};
use crate::linalg::Matrix;
use crate::report::{Report, Verdict};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub name: String,
    pub deg: i64,
}

impl Member {
    pub fn new(name: impl Into<String>, deg: i64) -> Member {
        Member { name: name.into(), deg }
    }
}

/// Position of a basis element in the cell datum: `C^λ_{S,T}` with `S`, `T` indices into `M(λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellIndex {
    pub lambda: usize,
    pub s: usize,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellError {
    NoCells,
    EmptyCell { lambda: usize },
    TableauxCount { expected: usize, found: usize },
    LambdaOutOfRange { lambda: usize },
    MemberOutOfRange { lambda: usize, member: usize },
    BasisOutOfRange { index: usize },
    Cycle { lambda: usize },
    /// Same `(λ, S, T)` listed twice.
    DuplicateTriple(CellIndex),
    /// Same basis index assigned twice.
    DuplicateBasis { index: usize },
    /// A basis index no triple maps to.
    Unmapped { index: usize },
    MissingTriple(CellIndex),
    /// Products of one cell do not determine a well-defined form.
    InconsistentPhi { lambda: usize, detail: String },
    NotABasis,
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for CellError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CellError::*;
        match self {
            NoCells => write!(f, "cell datum has no cells"),
            EmptyCell { lambda } => write!(f, "cell {lambda} has no members"),
            TableauxCount { expected, found } => {
                write!(f, "expected {expected} tableaux lists, found {found}")
            }
            LambdaOutOfRange { lambda } => write!(f, "cell index {lambda} out of range"),
            MemberOutOfRange { lambda, member } => {
                write!(f, "member {member} out of range for cell {lambda}")
            }
            BasisOutOfRange { index } => write!(f, "basis index {index} out of range"),
            Cycle { lambda } => write!(f, "order on cells has a cycle through {lambda}"),
            DuplicateTriple(c) => write!(f, "triple ({}, {}, {}) mapped twice", c.lambda, c.s, c.t),
            DuplicateBasis { index } => write!(f, "basis index {index} mapped twice"),
            Unmapped { index } => write!(f, "basis index {index} is not the image of any triple"),
            MissingTriple(c) => write!(f, "triple ({}, {}, {}) has no basis index", c.lambda, c.s, c.t),
            InconsistentPhi { lambda, detail } => {
                write!(f, "cell {lambda} has no well-defined bilinear form: {detail}")
            }
            NotABasis => write!(f, "family is not a basis"),
            DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for CellError {}

/// Poset of cells with their tableaux, plus the bijection `(λ, S, T) ↔ basis index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDatum {
    lambdas: Vec<String>,
    less_pairs: Vec<(usize, usize)>,
    /// `below[a][b]` iff `a < b` in the transitive closure.
    below: Vec<Vec<bool>>,
    tableaux: Vec<Vec<Member>>,
    index: Vec<Vec<Vec<usize>>>,
    cell_of: Vec<CellIndex>,
}

impl CellDatum {
    /// `less` holds strict pairs `(a, b)` meaning `a < b`; `map` holds `(λ, S, T, basis index)`.
    pub fn new(
        dim: usize,
        lambdas: Vec<String>,
        less: Vec<(usize, usize)>,
        tableaux: Vec<Vec<Member>>,
        map: Vec<(usize, usize, usize, usize)>,
    ) -> Result<CellDatum, CellError> {
        let k = lambdas.len();
        if k == 0 {
            return Err(CellError::NoCells);
        }
        if tableaux.len() != k {
            return Err(CellError::TableauxCount {
                expected: k,
                found: tableaux.len(),
            });
        }
        if let Some(lambda) = tableaux.iter().position(Vec::is_empty) {
            return Err(CellError::EmptyCell { lambda });
        }
        let mut below = vec![vec![false; k]; k];
        for &(a, b) in &less {
            for x in [a, b] {
                if x >= k {
                    return Err(CellError::LambdaOutOfRange { lambda: x });
                }
            }
            below[a][b] = true;
        }
        for m in 0..k {
            for a in 0..k {
                if below[a][m] {
                    let via = below[m].clone();
                    for (slot, &x) in below[a].iter_mut().zip(&via) {
                        *slot |= x;
                    }
                }
            }
        }
        if let Some(lambda) = (0..k).find(|&a| below[a][a]) {
            return Err(CellError::Cycle { lambda });
        }

        let mut index: Vec<Vec<Vec<usize>>> = tableaux
            .iter()
            .map(|m| vec![vec![usize::MAX; m.len()]; m.len()])
            .collect();
        let mut cell_of: Vec<Option<CellIndex>> = vec![None; dim];
        for (lambda, s, t, i) in map {
            if lambda >= k {
                return Err(CellError::LambdaOutOfRange { lambda });
            }
            let m = tableaux[lambda].len();
            for member in [s, t] {
                if member >= m {
                    return Err(CellError::MemberOutOfRange { lambda, member });
                }
            }
            if i >= dim {
                return Err(CellError::BasisOutOfRange { index: i });
            }
            let c = CellIndex { lambda, s, t };
            if index[lambda][s][t] != usize::MAX {
                return Err(CellError::DuplicateTriple(c));
            }
            if cell_of[i].is_some() {
                return Err(CellError::DuplicateBasis { index: i });
            }
            index[lambda][s][t] = i;
            cell_of[i] = Some(c);
        }
        for (lambda, rows) in index.iter().enumerate() {
            for (s, row) in rows.iter().enumerate() {
                if let Some(t) = row.iter().position(|&i| i == usize::MAX) {
                    return Err(CellError::MissingTriple(CellIndex { lambda, s, t }));
                }
            }
        }
        let cell_of = cell_of
            .into_iter()
            .enumerate()
            .map(|(index, c)| c.ok_or(CellError::Unmapped { index }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CellDatum {
            lambdas,
            less_pairs: less,
            below,
            tableaux,
            index,
            cell_of,
        })
    }

    pub fn dim(&self) -> usize {
        self.cell_of.len()
    }

    pub fn lambda_count(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[String] {
        &self.lambdas
    }

    pub fn lambda_index(&self, name: &str) -> Option<usize> {
        self.lambdas.iter().position(|l| l == name)
    }

    /// Strict pairs as supplied.
    pub fn less_pairs(&self) -> &[(usize, usize)] {
        &self.less_pairs
    }

    /// `a < b` in the transitive closure.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    pub fn tableaux(&self) -> &[Vec<Member>] {
        &self.tableaux
    }

    pub fn members(&self, lambda: usize) -> &[Member] {
        &self.tableaux[lambda]
    }

    pub fn index(&self, lambda: usize, s: usize, t: usize) -> usize {
        self.index[lambda][s][t]
    }

    pub fn cell_of(&self, i: usize) -> CellIndex {
        self.cell_of[i]
    }

    /// `(λ, S, T, basis index)` in `λ`, `S`, `T` order.
    pub fn map_entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        self.index.iter().enumerate().flat_map(|(l, rows)| {
            rows.iter()
                .enumerate()
                .flat_map(move |(s, row)| row.iter().enumerate().map(move |(t, &i)| (l, s, t, i)))
        })
    }

    pub fn label(&self, prefix: &str, i: usize) -> String {
        let c = self.cell_of[i];
        let m = &self.tableaux[c.lambda];
        format!("{prefix}^{}_{{{},{}}}", self.lambdas[c.lambda], m[c.s].name, m[c.t].name)
    }

    /// The same datum with `M(λ)` listed in a new order: new position `p` holds old member `perm[p]`.
    pub fn permute_members(&self, lambda: usize, perm: &[usize]) -> CellDatum {
        let mut out = self.clone();
        let old = &self.tableaux[lambda];
        out.tableaux[lambda] = perm.iter().map(|&p| old[p].clone()).collect();
        for (s, &ps) in perm.iter().enumerate() {
            for (t, &pt) in perm.iter().enumerate() {
                let i = self.index[lambda][ps][pt];
                out.index[lambda][s][t] = i;
                out.cell_of[i] = CellIndex { lambda, s, t };
            }
        }
        out
    }
}

/// A basis of the algebra indexed through a cell datum.
#[derive(Clone, Debug)]
pub struct Family {
    prefix: &'static str,
    /// `members[i]` is the member labeled by `cell_of(i)`.
    members: Vec<Element>,
    /// Row `i` extracts the coefficient of `members[i]`; `None` for the standard basis.
    coords: Option<Matrix>,
    /// Lower cells are the larger ones in the poset.
    reversed: bool,
}

impl Family {
    /// The cellular basis `C` itself.
    pub fn cellular(alg: &Algebra) -> Family {
        Family {
            prefix: "C",
            members: (0..alg.dim()).map(|i| alg.basis_element(i)).collect(),
            coords: None,
            reversed: false,
        }
    }

    /// An arbitrary basis; coordinates come from inverting the member matrix.
    pub fn new(alg: &Algebra, prefix: &'static str, members: Vec<Element>, reversed: bool) -> Result<Family, CellError> {
        let n = alg.dim();
        if members.len() != n {
            return Err(CellError::DimensionMismatch {
                expected: n,
                found: members.len(),
            });
        }
        let m = Matrix::from_fn(alg.field(), n, n, |i, j| members[j].get(i).clone());
        let coords = m.invert().map_err(|_| CellError::NotABasis)?;
        Ok(Family {
            prefix,
            members,
            coords: Some(coords),
            reversed,
        })
    }

    /// Supplies the coordinate functionals directly; the caller guarantees they are dual to `members`.
    pub fn with_coords(prefix: &'static str, members: Vec<Element>, coords: Matrix, reversed: bool) -> Family {
        Family {
            prefix,
            members,
            coords: Some(coords),
            reversed,
        }
    }

    pub fn prefix(&self) -> &'static str {
        self.prefix
    }

    pub fn member(&self, i: usize) -> &Element {
        &self.members[i]
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn coords(&self, v: &Element) -> Vec<Scalar> {
        match &self.coords {
            None => v.coeffs().to_vec(),
            Some(m) => m.mul_vector(v.coeffs()),
        }
    }

    /// `μ` lies strictly below `λ` in this family's order.
    pub fn lower(&self, cd: &CellDatum, mu: usize, lambda: usize) -> bool {
        if self.reversed {
            cd.less(lambda, mu)
        } else {
            cd.less(mu, lambda)
        }
    }

    fn label(&self, cd: &CellDatum, i: usize) -> String {
        cd.label(self.prefix, i)
    }
}

fn element_text(alg: &Algebra, v: &Element) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in v.support() {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if c.is_one() {
            out.push_str(alg.label(i));
        } else {
            out.push_str(&format!("({c}){}", alg.label(i)));
        }
    }
    out
}

pub fn describe(alg: &Algebra, v: &Element) -> String {
    element_text(alg, v)
}

/// `(F^λ_{S,T})* = F^λ_{T,S}` for every member.
pub fn check_family_involution(alg: &Algebra, cd: &CellDatum, fam: &Family) -> Result<(), String> {
    for i in 0..alg.dim() {
        let c = cd.cell_of(i);
        let j = cd.index(c.lambda, c.t, c.s);
        if alg.involute(fam.member(i)) != *fam.member(j) {
            return Err(format!("({})* != {}", fam.label(cd, i), fam.label(cd, j)));
        }
    }
    Ok(())
}

/// Left multiplication by each basis element acts on `F^λ_{S,T}` through
/// coefficients `r_a(S', S)` that ignore `T`, modulo lower cells.
pub fn check_family_left_action(alg: &Algebra, cd: &CellDatum, fam: &Family) -> Result<(), String> {
    for a in 0..alg.dim() {
        for lambda in 0..cd.lambda_count() {
            let m = cd.members(lambda).len();
            for s in 0..m {
                let mut reference: Option<Vec<Scalar>> = None;
                for t in 0..m {
                    let src = cd.index(lambda, s, t);
                    let prod = alg.left_mul_basis(a, fam.member(src));
                    let row = extract_column(cd, fam, &prod, lambda, t).map_err(|stray| {
                        format!(
                            "{} * {} has a term on {}",
                            alg.label(a),
                            fam.label(cd, src),
                            fam.label(cd, stray)
                        )
                    })?;
                    match &reference {
                        None => reference = Some(row),
                        Some(r) if *r != row => {
                            return Err(format!(
                                "coefficients of {} * {} depend on the column index",
                                alg.label(a),
                                fam.label(cd, src)
                            ))
                        }
                        Some(_) => {}
                    }
                }
            }
        }
    }
    Ok(())
}

/// Coefficients of `F^λ_{S', t}` in `v` by `S'`, after dropping lower cells.
/// Any other surviving term is returned as the error.
fn extract_column(cd: &CellDatum, fam: &Family, v: &Element, lambda: usize, t: usize) -> Result<Vec<Scalar>, usize> {
    let field = v.get(0).field();
    let mut row = vec![field.zero(); cd.members(lambda).len()];
    for (i, c) in fam.coords(v).into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let ci = cd.cell_of(i);
        if fam.lower(cd, ci.lambda, lambda) {
            continue;
        }
        if ci.lambda == lambda && ci.t == t {
            row[ci.s] = c;
        } else {
            return Err(i);
        }
    }
    Ok(row)
}

/// Every member is homogeneous of degree `f(S) + f(T)`, where `f[λ][S]` is given.
pub fn check_family_degrees(alg: &Algebra, cd: &CellDatum, fam: &Family, f: &[Vec<i64>]) -> Result<(), String> {
    for i in 0..alg.dim() {
        let c = cd.cell_of(i);
        let want = f[c.lambda][c.s] + f[c.lambda][c.t];
        match alg.homogeneous_degree(fam.member(i)) {
            Some(d) if d == want => {}
            Some(d) => return Err(format!("{} has degree {d}, expected {want}", fam.label(cd, i))),
            None => return Err(format!("{} is not homogeneous", fam.label(cd, i))),
        }
    }
    Ok(())
}

pub fn member_degrees(cd: &CellDatum) -> Vec<Vec<i64>> {
    cd.tableaux().iter().map(|m| m.iter().map(|x| x.deg).collect()).collect()
}

/// Checks the four cell-datum axioms exhaustively and reports each one.
pub fn validate_cell_datum(alg: &Algebra, cd: &CellDatum) -> Report {
    let mut report = Report::new("");
    if cd.dim() != alg.dim() {
        report.push(
            "cell-basis",
            "the triples (λ, S, T) index the basis bijectively",
            Verdict::Fail,
            format!("datum covers {} elements, algebra has {}", cd.dim(), alg.dim()),
        );
        return report;
    }
    report.push(
        "cell-basis",
        "the triples (λ, S, T) index the basis bijectively",
        Verdict::Pass,
        format!("{} basis elements in {} cells", alg.dim(), cd.lambda_count()),
    );
    let fam = Family::cellular(alg);
    let involution = alg
        .check_involution()
        .map_err(|e| format!("{e}"))
        .and_then(|_| check_family_involution(alg, cd, &fam))
        .map(|_| String::from("anti-involution swaps S and T"));
    report.record("cell-involution", "* is an anti-involution with (C_ST)* = C_TS", involution);
    report.record(
        "cell-left-action",
        "a C_ST is a combination of C_S'T modulo lower cells, independent of T",
        check_family_left_action(alg, cd, &fam).map(|_| String::from("all products checked")),
    );
    let degrees = alg
        .check_grading()
        .map_err(|e| format!("{e}"))
        .and_then(|_| check_family_degrees(alg, cd, &fam, &member_degrees(cd)))
        .map(|_| String::from("deg C_ST = deg S + deg T"));
    report.record("cell-degrees", "each C_ST is homogeneous of degree deg S + deg T", degrees);
    report
}

/// Coefficients of `C^λ_{S,T} C^μ_{U,V}` over all basis triples, unfiltered.
pub fn expand(alg: &Algebra, cd: &CellDatum, left: CellIndex, right: CellIndex) -> Vec<(CellIndex, Scalar)> {
    let i = cd.index(left.lambda, left.s, left.t);
    let j = cd.index(right.lambda, right.s, right.t);
    let mut out: Vec<(CellIndex, Scalar)> = alg
        .basis_product(i, j)
        .iter()
        .map(|(k, r)| (cd.cell_of(*k), r.clone()))
        .collect();
    out.sort_by_key(|(c, _)| *c);
    out
}

/// Gram matrix of cell `λ` for a family: `Φ(T, U)` is the coefficient of `F_SV` in
/// `F_ST F_UV` modulo lower cells, and must not depend on `(S, V)`.
pub fn family_gram(alg: &Algebra, cd: &CellDatum, fam: &Family, lambda: usize) -> Result<Matrix, CellError> {
    let m = cd.members(lambda).len();
    let field = alg.field();
    let mut phi: Vec<Option<Scalar>> = vec![None; m * m];
    for s in 0..m {
        for t in 0..m {
            let left = fam.member(cd.index(lambda, s, t));
            for u in 0..m {
                for v in 0..m {
                    let prod = alg.mul_unchecked(left, fam.member(cd.index(lambda, u, v)));
                    let mut value = field.zero();
                    for (k, c) in fam.coords(&prod).into_iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let ck = cd.cell_of(k);
                        if fam.lower(cd, ck.lambda, lambda) {
                            continue;
                        }
                        if ck.lambda == lambda && ck.s == s && ck.t == v {
                            value = c;
                        } else {
                            return Err(CellError::InconsistentPhi {
                                lambda,
                                detail: format!(
                                    "{} {} has a term on {}",
                                    fam.label(cd, cd.index(lambda, s, t)),
                                    fam.label(cd, cd.index(lambda, u, v)),
                                    fam.label(cd, k)
                                ),
                            });
                        }
                    }
                    match &phi[t * m + u] {
                        None => phi[t * m + u] = Some(value),
                        Some(p) if *p != value => {
                            return Err(CellError::InconsistentPhi {
                                lambda,
                                detail: format!(
                                    "coefficient for ({}, {}) depends on the outer indices",
                                    cd.members(lambda)[t].name,
                                    cd.members(lambda)[u].name
                                ),
                            })
                        }
                        Some(_) => {}
                    }
                }
            }
        }
    }
    Ok(Matrix::from_fn(field, m, m, |t, u| phi[t * m + u].clone().expect("filled")))
}

/// `G(λ)` for the cellular basis.
pub fn gram(alg: &Algebra, cd: &CellDatum, lambda: usize) -> Result<Matrix, CellError> {
    family_gram(alg, cd, &Family::cellular(alg), lambda)
}

/// The cell module `W(λ)`: `actions[a]` is the matrix `(r_{x_a}(S', S))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellModule {
    pub lambda: usize,
    pub actions: Vec<Matrix>,
}

impl CellModule {
    pub fn dim(&self) -> usize {
        self.actions.first().map_or(0, Matrix::rows)
    }

    /// Action matrix of an arbitrary element.
    pub fn act(&self, a: &Element) -> Matrix {
        let m = self.dim();
        let field = self.actions[0].field();
        let mut out = Matrix::zeros(field, m, m);
        for (i, c) in a.support() {
            for r in 0..m {
                for s in 0..m {
                    let v = self.actions[i].get(r, s);
                    if !v.is_zero() {
                        out.set(r, s, out.get(r, s) + &(c * v));
                    }
                }
            }
        }
        out
    }
}

pub fn cell_module(alg: &Algebra, cd: &CellDatum, lambda: usize) -> CellModule {
    let fam = Family::cellular(alg);
    let m = cd.members(lambda).len();
    let actions = (0..alg.dim())
        .map(|a| {
            let mut mat = Matrix::zeros(alg.field(), m, m);
            for s in 0..m {
                let prod = alg.left_mul_basis(a, fam.member(cd.index(lambda, s, 0)));
                for (k, c) in prod.support() {
                    let ck = cd.cell_of(k);
                    if ck.lambda == lambda && ck.t == 0 {
                        mat.set(ck.s, s, c.clone());
                    }
                }
            }
            mat
        })
        .collect();
    CellModule { lambda, actions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Involution;
    use crate::scalar::Field;
    use alloc::string::ToString;

    fn dual_numbers() -> (Algebra, CellDatum) {
        let q = Field::Rational;
        let mult = vec![(0, 0, 0, q.one()), (0, 1, 1, q.one()), (1, 0, 1, q.one())];
        let alg = Algebra::new(
            q,
            vec!["1".to_string(), "x".to_string()],
            mult,
            vec![0, 2],
            Involution::Permutation {
                perm: vec![0, 1],
                signs: None,
            },
        )
        .unwrap();
        let cd = CellDatum::new(
            2,
            vec!["l1".into(), "l2".into()],
            vec![(0, 1)],
            vec![vec![Member::new("a", 1)], vec![Member::new("b", 0)]],
            vec![(0, 0, 0, 1), (1, 0, 0, 0)],
        )
        .unwrap();
        (alg, cd)
    }

    #[test]
    fn dual_numbers_datum_is_valid() {
        let (alg, cd) = dual_numbers();
        let r = validate_cell_datum(&alg, &cd);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.entries.len(), 4);
    }

    #[test]
    fn dual_numbers_gram_and_module() {
        let (alg, cd) = dual_numbers();
        let q = Field::Rational;
        assert_eq!(gram(&alg, &cd, 0).unwrap(), Matrix::zeros(q, 1, 1));
        assert_eq!(gram(&alg, &cd, 1).unwrap(), Matrix::identity(q, 1));
        let w = cell_module(&alg, &cd, 1);
        assert_eq!(w.actions[0], Matrix::identity(q, 1));
        assert_eq!(w.actions[1], Matrix::zeros(q, 1, 1));
    }

    #[test]
    fn expansion_of_cells() {
        let (alg, cd) = dual_numbers();
        let one = CellIndex { lambda: 1, s: 0, t: 0 };
        let x = CellIndex { lambda: 0, s: 0, t: 0 };
        assert_eq!(expand(&alg, &cd, one, one), vec![(one, Field::Rational.one())]);
        assert!(expand(&alg, &cd, x, x).is_empty());
    }

    #[test]
    fn wrong_order_fails_left_action() {
        let (alg, _) = dual_numbers();
        // x placed above 1: x * 1 = x is fine but 1 * ... ; with 1 lowest, x * C(1) = x sits in a higher cell
        let cd = CellDatum::new(
            2,
            vec!["l1".into(), "l2".into()],
            vec![(1, 0)],
            vec![vec![Member::new("a", 1)], vec![Member::new("b", 0)]],
            vec![(0, 0, 0, 1), (1, 0, 0, 0)],
        )
        .unwrap();
        let r = validate_cell_datum(&alg, &cd);
        assert_eq!(r.get("cell-left-action").unwrap().verdict, Verdict::Fail);
        assert_eq!(r.get("cell-involution").unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn wrong_member_degree_fails() {
        let (alg, _) = dual_numbers();
        let cd = CellDatum::new(
            2,
            vec!["l1".into(), "l2".into()],
            vec![(0, 1)],
            vec![vec![Member::new("a", 2)], vec![Member::new("b", 0)]],
            vec![(0, 0, 0, 1), (1, 0, 0, 0)],
        )
        .unwrap();
        let r = validate_cell_datum(&alg, &cd);
        assert_eq!(r.get("cell-degrees").unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn datum_shape_errors() {
        let names = || vec!["a".to_string(), "b".to_string()];
        let one = || vec![vec![Member::new("s", 0)], vec![Member::new("s", 0)]];
        assert_eq!(
            CellDatum::new(2, names(), vec![(0, 1), (1, 0)], one(), vec![(0, 0, 0, 0), (1, 0, 0, 1)]),
            Err(CellError::Cycle { lambda: 0 })
        );
        assert_eq!(
            CellDatum::new(2, names(), vec![], one(), vec![(0, 0, 0, 0), (1, 0, 0, 0)]),
            Err(CellError::DuplicateBasis { index: 0 })
        );
        assert_eq!(
            CellDatum::new(2, names(), vec![], one(), vec![(0, 0, 0, 0)]),
            Err(CellError::MissingTriple(CellIndex { lambda: 1, s: 0, t: 0 }))
        );
        assert_eq!(
            CellDatum::new(3, names(), vec![], one(), vec![(0, 0, 0, 0), (1, 0, 0, 1)]),
            Err(CellError::Unmapped { index: 2 })
        );
        assert_eq!(
            CellDatum::new(2, names(), vec![], one(), vec![(0, 0, 1, 0)]),
            Err(CellError::MemberOutOfRange { lambda: 0, member: 1 })
        );
        assert_eq!(
            CellDatum::new(2, names(), vec![(0, 5)], one(), vec![]),
            Err(CellError::LambdaOutOfRange { lambda: 5 })
        );
    }

    #[test]
    fn closure_is_transitive() {
        let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let t = vec![vec![Member::new("s", 0)]; 3];
        let cd = CellDatum::new(3, names, vec![(0, 1), (1, 2)], t, vec![(0, 0, 0, 0), (1, 0, 0, 1), (2, 0, 0, 2)]).unwrap();
        assert!(cd.less(0, 2));
        assert!(!cd.less(2, 0));
        assert_eq!(cd.map_entries().count(), 3);
    }
}

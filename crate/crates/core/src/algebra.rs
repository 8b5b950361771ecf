//! Finite-dimensional unital graded algebras given by structure constants.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;

/// Coefficient vector of an algebra element in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coeffs: Vec<Scalar>) -> Element {
        Element(coeffs)
    }

    pub fn zero(field: Field, dim: usize) -> Element {
        Element(vec![field.zero(); dim])
    }

    pub fn unit(field: Field, dim: usize, i: usize) -> Element {
        let mut e = Element::zero(field, dim);
        e.0[i] = field.one();
        e
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Element) -> Element {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element(self.0.iter().map(|a| a * c).collect())
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl AsRef<[Scalar]> for Element {
    fn as_ref(&self) -> &[Scalar] {
        &self.0
    }
}

/// How the anti-involution is supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Involution {
    /// Column `j` is the image of `x_j`.
    Matrix(Matrix),
    /// `x_j* = sign_j · x_{perm[j]}`; missing signs mean `+1`.
    Permutation { perm: Vec<usize>, signs: Option<Vec<Scalar>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionFault {
    Shape,
    /// `(x_j*)* != x_j`.
    NotInvolutive { j: usize },
    NotDegreePreserving { j: usize },
    /// `(x_i x_j)* != x_j* x_i*`.
    NotAntiMultiplicative { i: usize, j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    Empty,
    LengthMismatch { what: &'static str, expected: usize, found: usize },
    IndexOutOfRange { entry: usize, index: usize },
    DuplicateEntry { i: usize, j: usize, k: usize },
    FieldMismatch { expected: Field, found: Field },
    NonAssociative { i: usize, j: usize, k: usize },
    NoIdentity,
    NotGraded { i: usize, j: usize, k: usize },
    BadInvolution(InvolutionFault),
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AlgebraError::*;
        match self {
            Empty => write!(f, "the zero algebra is not allowed"),
            LengthMismatch { what, expected, found } => {
                write!(f, "{what}: expected {expected} entries, found {found}")
            }
            IndexOutOfRange { entry, index } => write!(f, "entry {entry}: index {index} out of range"),
            DuplicateEntry { i, j, k } => write!(f, "duplicate structure constant ({i}, {j}, {k})"),
            FieldMismatch { expected, found } => write!(f, "scalar in {found}, expected {expected}"),
            NonAssociative { i, j, k } => write!(f, "(x{i} x{j}) x{k} != x{i} (x{j} x{k})"),
            NoIdentity => write!(f, "no identity element"),
            NotGraded { i, j, k } => write!(f, "x{i} x{j} has support on x{k} of the wrong degree"),
            BadInvolution(fault) => match fault {
                InvolutionFault::Shape => write!(f, "involution has the wrong shape"),
                InvolutionFault::NotInvolutive { j } => write!(f, "involution applied twice moves x{j}"),
                InvolutionFault::NotDegreePreserving { j } => write!(f, "involution changes the degree of x{j}"),
                InvolutionFault::NotAntiMultiplicative { i, j } => {
                    write!(f, "(x{i} x{j})* != x{j}* x{i}*")
                }
            },
            DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for AlgebraError {}

/// A finite-dimensional associative unital algebra with a homogeneous basis.
///
/// Invariants checked by [`Algebra::new`]: associativity on basis triples, existence
/// of a two-sided identity, `A_i A_j ⊆ A_{i+j}`, and that the involution is a
/// degree-preserving anti-automorphism of order two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    /// `table[i * n + j]` lists the nonzero `(k, r_ijk)` with `x_i x_j = Σ r_ijk x_k`.
    table: Vec<Vec<(usize, Scalar)>>,
    degrees: Vec<i64>,
    involution: Matrix,
    identity: Element,
}

impl Algebra {
    /// Builds and fully validates an algebra.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        mult: Vec<(usize, usize, usize, Scalar)>,
        degrees: Vec<i64>,
        involution: Involution,
    ) -> Result<Algebra, AlgebraError> {
        let alg = Algebra::assemble(field, labels, mult, degrees, involution)?;
        alg.check_grading()?;
        alg.check_involution()?;
        Ok(alg)
    }

    /// Checks the multiplication table only; the grading and the involution are taken
    /// on trust. Lets constructors produce candidate structures whose failure is
    /// reported later by cell-datum validation.
    pub fn assemble(
        field: Field,
        labels: Vec<String>,
        mult: Vec<(usize, usize, usize, Scalar)>,
        degrees: Vec<i64>,
        involution: Involution,
    ) -> Result<Algebra, AlgebraError> {
        let n = labels.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        if degrees.len() != n {
            return Err(AlgebraError::LengthMismatch {
                what: "degrees",
                expected: n,
                found: degrees.len(),
            });
        }
        let mut table: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
        for (entry, (i, j, k, r)) in mult.into_iter().enumerate() {
            for idx in [i, j, k] {
                if idx >= n {
                    return Err(AlgebraError::IndexOutOfRange { entry, index: idx });
                }
            }
            if r.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    expected: field,
                    found: r.field(),
                });
            }
            let slot = &mut table[i * n + j];
            if slot.iter().any(|(kk, _)| *kk == k) {
                return Err(AlgebraError::DuplicateEntry { i, j, k });
            }
            if !r.is_zero() {
                slot.push((k, r));
            }
        }
        for slot in &mut table {
            slot.sort_by_key(|(k, _)| *k);
        }
        let involution = involution_matrix(field, n, involution)?;
        let mut alg = Algebra {
            field,
            labels,
            table,
            degrees,
            involution,
            identity: Element::zero(field, n),
        };
        alg.check_associative()?;
        alg.identity = alg.find_identity()?;
        Ok(alg)
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.right_mul_basis_of_sparse(ij, k);
                    let jk = self.basis_product_element(j, k);
                    let right = self.left_mul_basis(i, &jk);
                    if left != right {
                        return Err(AlgebraError::NonAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn find_identity(&self) -> Result<Element, AlgebraError> {
        let n = self.dim();
        let f = self.field;
        // rows: (e x_i)_m = δ_im and (x_i e)_m = δ_im, unknowns e_k
        let mut a = Matrix::zeros(f, 2 * n * n, n);
        let mut b = Matrix::zeros(f, 2 * n * n, 1);
        for i in 0..n {
            for k in 0..n {
                for (m, r) in self.basis_product(k, i) {
                    a.set(i * n + m, k, r.clone());
                }
                for (m, r) in self.basis_product(i, k) {
                    a.set(n * n + i * n + m, k, r.clone());
                }
            }
            b.set(i * n + i, 0, f.one());
            b.set(n * n + i * n + i, 0, f.one());
        }
        match a.solve(&b) {
            Ok(x) => Ok(Element::new(x.column(0))),
            Err(LinalgError::NoSolution) => Err(AlgebraError::NoIdentity),
            Err(_) => Err(AlgebraError::NoIdentity),
        }
    }

    /// `A_i A_j ⊆ A_{i+j}` on the basis.
    pub fn check_grading(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for (k, _) in self.basis_product(i, j) {
                    if self.degrees[*k] != self.degrees[i] + self.degrees[j] {
                        return Err(AlgebraError::NotGraded { i, j, k: *k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Degree-preserving anti-automorphism of order two.
    pub fn check_involution(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        let bad = |fault| Err(AlgebraError::BadInvolution(fault));
        let sq = self.involution.mul(&self.involution).expect("square involution");
        for j in 0..n {
            if sq.column(j) != Element::unit(self.field, n, j).into_coeffs() {
                return bad(InvolutionFault::NotInvolutive { j });
            }
            for k in 0..n {
                if !self.involution.get(k, j).is_zero() && self.degrees[k] != self.degrees[j] {
                    return bad(InvolutionFault::NotDegreePreserving { j });
                }
            }
        }
        let images: Vec<Element> = (0..n).map(|j| Element::new(self.involution.column(j))).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.involute(&self.basis_product_element(i, j));
                let rhs = self.mul_unchecked(&images[j], &images[i]);
                if lhs != rhs {
                    return bad(InvolutionFault::NotAntiMultiplicative { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn involution(&self) -> &Matrix {
        &self.involution
    }

    pub fn identity(&self) -> &Element {
        &self.identity
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::unit(self.field, self.dim(), i)
    }

    pub fn scalar(&self, v: i64) -> Scalar {
        self.field.from_i64(v)
    }

    /// Nonzero `(k, r_ijk)`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map_or_else(|| self.field.zero(), |(_, r)| r.clone())
    }

    /// All nonzero structure constants in `(i, j, k)` order.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim();
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, slot)| slot.iter().map(move |(k, r)| (ij / n, ij % n, *k, r)))
    }

    pub fn basis_product_element(&self, i: usize, j: usize) -> Element {
        let mut e = self.zero();
        for (k, r) in self.basis_product(i, j) {
            e.0[*k] = r.clone();
        }
        e
    }

    fn right_mul_basis_of_sparse(&self, a: &[(usize, Scalar)], k: usize) -> Element {
        let mut out = self.zero();
        for (m, c) in a {
            for (p, r) in self.basis_product(*m, k) {
                out.0[*p] = &out.0[*p] + &(c * r);
            }
        }
        out
    }

    /// `x_i · a`.
    pub fn left_mul_basis(&self, i: usize, a: &Element) -> Element {
        let mut out = self.zero();
        for (j, c) in a.support() {
            for (k, r) in self.basis_product(i, j) {
                out.0[*k] = &out.0[*k] + &(c * r);
            }
        }
        out
    }

    /// `a · x_j`.
    pub fn right_mul_basis(&self, a: &Element, j: usize) -> Element {
        let mut out = self.zero();
        for (i, c) in a.support() {
            for (k, r) in self.basis_product(i, j) {
                out.0[*k] = &out.0[*k] + &(c * r);
            }
        }
        out
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.zero();
        let bs: Vec<(usize, &Scalar)> = b.support().collect();
        for (i, ca) in a.support() {
            for (j, cb) in &bs {
                let c = ca * *cb;
                for (k, r) in self.basis_product(i, *j) {
                    out.0[*k] = &out.0[*k] + &(&c * r);
                }
            }
        }
        out
    }

    fn check_element(&self, a: &Element) -> Result<(), AlgebraError> {
        if a.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: a.dim(),
            });
        }
        if let Some((_, c)) = a.support().find(|(_, c)| c.field() != self.field) {
            return Err(AlgebraError::FieldMismatch {
                expected: self.field,
                found: c.field(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure tensor.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    /// Product of several elements, left to right.
    pub fn product(&self, factors: &[&Element]) -> Element {
        factors
            .iter()
            .fold(self.identity.clone(), |acc, f| self.mul_unchecked(&acc, f))
    }

    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        self.mul_unchecked(a, b).sub(&self.mul_unchecked(b, a))
    }

    pub fn involute(&self, a: &Element) -> Element {
        Element::new(self.involution.mul_vector(a.coeffs()))
    }

    /// The degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self, a: &Element) -> Option<i64> {
        let mut degs = a.support().map(|(i, _)| self.degrees[i]);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Occurring degrees with the dimension of each component.
    pub fn components(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for d in &self.degrees {
            *out.entry(*d).or_insert(0) += 1;
        }
        out
    }

    /// `A_i`, the span of the basis vectors of degree `i`.
    pub fn degree_component(&self, i: i64) -> Subspace {
        Subspace::coordinate(
            self.field,
            self.dim(),
            (0..self.dim()).filter(|&k| self.degrees[k] == i),
        )
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.field, self.dim()))
            .expect("ambient dimensions agree")
    }

    /// `{a : ab = ba for all b in s}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace, AlgebraError> {
        let n = self.dim();
        if s.ambient_dim() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: s.ambient_dim(),
            });
        }
        let gens: Vec<Element> = s.basis_vectors().map(|v| Element::new(v.to_vec())).collect();
        if gens.is_empty() {
            return Ok(Subspace::full(self.field, n));
        }
        // column k holds [x_k, b] for each generator b, stacked
        let mut m = Matrix::zeros(self.field, n * gens.len(), n);
        for k in 0..n {
            let xk = self.basis_element(k);
            for (g, b) in gens.iter().enumerate() {
                let c = self.commutator(&xk, b);
                for (row, v) in c.support() {
                    m.set(g * n + row, k, v.clone());
                }
            }
        }
        Ok(Subspace::span(self.field, n, m.nullspace()))
    }

    pub fn is_central(&self, z: &Element) -> Option<usize> {
        (0..self.dim()).find(|&i| !self.commutator(z, &self.basis_element(i)).is_zero())
    }
}

fn involution_matrix(field: Field, n: usize, inv: Involution) -> Result<Matrix, AlgebraError> {
    let shape = Err(AlgebraError::BadInvolution(InvolutionFault::Shape));
    match inv {
        Involution::Matrix(m) => {
            if m.rows() != n || m.cols() != n {
                return shape;
            }
            if m.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    expected: field,
                    found: m.field(),
                });
            }
            Ok(m)
        }
        Involution::Permutation { perm, signs } => {
            if perm.len() != n || signs.as_ref().is_some_and(|s| s.len() != n) {
                return shape;
            }
            let mut m = Matrix::zeros(field, n, n);
            for (j, &p) in perm.iter().enumerate() {
                if p >= n {
                    return shape;
                }
                let s = signs.as_ref().map_or_else(|| field.one(), |s| s[j].clone());
                m.set(p, j, s);
            }
            Ok(m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn ident_perm(n: usize) -> Involution {
        Involution::Permutation {
            perm: (0..n).collect(),
            signs: None,
        }
    }

    fn dual_numbers() -> Algebra {
        let q = Field::Rational;
        let mult = vec![(0, 0, 0, q.one()), (0, 1, 1, q.one()), (1, 0, 1, q.one())];
        Algebra::new(q, labels(&["1", "x"]), mult, vec![0, 2], ident_perm(2)).unwrap()
    }

    /// M_2 via matrix units e11, e12, e21, e22.
    fn m2() -> Algebra {
        let q = Field::Rational;
        let mut mult = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        if b == c {
                            mult.push((2 * a + b, 2 * c + d, 2 * a + d, q.one()));
                        }
                    }
                }
            }
        }
        // transpose
        Algebra::new(
            q,
            labels(&["e11", "e12", "e21", "e22"]),
            mult,
            vec![0; 4],
            Involution::Permutation {
                perm: vec![0, 2, 1, 3],
                signs: None,
            },
        )
        .unwrap()
    }

    #[test]
    fn dual_numbers_identity_and_square() {
        let a = dual_numbers();
        assert_eq!(a.identity(), &a.basis_element(0));
        let x = a.basis_element(1);
        assert!(a.mul(&x, &x).unwrap().is_zero());
        assert_eq!(a.mul(a.identity(), &x).unwrap(), x);
    }

    #[test]
    fn matrix_units_identity() {
        let a = m2();
        let q = Field::Rational;
        let id = Element::new(vec![q.one(), q.zero(), q.zero(), q.one()]);
        assert_eq!(a.identity(), &id);
        assert_eq!(a.center().dim(), 1);
        assert!(a.center().contains_vector(id.coeffs()));
    }

    #[test]
    fn inconsistent_cube_is_nonassociative() {
        // x1 x1 = x2 and x2 x1 = 0 but x1 x2 = x1: (x1 x1) x1 = 0, x1 (x1 x1) = x1
        let q = Field::Rational;
        let mult = vec![
            (0, 0, 0, q.one()),
            (0, 1, 1, q.one()),
            (1, 0, 1, q.one()),
            (0, 2, 2, q.one()),
            (2, 0, 2, q.one()),
            (1, 1, 2, q.one()),
            (1, 2, 1, q.one()),
        ];
        let err = Algebra::new(q, labels(&["1", "a", "b"]), mult, vec![0; 3], ident_perm(3)).unwrap_err();
        assert!(matches!(err, AlgebraError::NonAssociative { .. }));
    }

    #[test]
    fn missing_identity_is_rejected() {
        let q = Field::Rational;
        let err = Algebra::new(q, labels(&["x"]), vec![], vec![0], ident_perm(1)).unwrap_err();
        assert_eq!(err, AlgebraError::NoIdentity);
    }

    #[test]
    fn ungraded_product_is_rejected() {
        let q = Field::Rational;
        let mult = vec![(0, 0, 0, q.one()), (0, 1, 1, q.one()), (1, 0, 1, q.one()), (1, 1, 1, q.zero())];
        let ok = Algebra::new(q, labels(&["1", "x"]), mult, vec![1, 2], ident_perm(2));
        assert!(matches!(ok, Err(AlgebraError::NotGraded { i: 0, j: 0, k: 0 })));
    }

    #[test]
    fn transpose_is_not_an_anti_automorphism_when_mislabeled() {
        let a = m2();
        let q = Field::Rational;
        let mult: Vec<_> = a.structure_constants().map(|(i, j, k, r)| (i, j, k, r.clone())).collect();
        // identity map on M_2 is an automorphism, not an anti-automorphism
        let err = Algebra::new(q, a.labels().to_vec(), mult, vec![0; 4], ident_perm(4)).unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::BadInvolution(InvolutionFault::NotAntiMultiplicative { .. })
        ));
    }

    #[test]
    fn index_out_of_range() {
        let q = Field::Rational;
        let err = Algebra::new(q, labels(&["1"]), vec![(0, 0, 1, q.one())], vec![0], ident_perm(1)).unwrap_err();
        assert_eq!(err, AlgebraError::IndexOutOfRange { entry: 0, index: 1 });
    }

    #[test]
    fn zero_algebra_rejected() {
        let err = Algebra::new(Field::Rational, vec![], vec![], vec![], ident_perm(0)).unwrap_err();
        assert_eq!(err, AlgebraError::Empty);
    }

    #[test]
    fn components_and_degree_spaces() {
        let a = dual_numbers();
        assert_eq!(a.degree_component(0), Subspace::coordinate(Field::Rational, 2, [0]));
        assert_eq!(a.degree_component(1).dim(), 0);
        let total: usize = a.components().values().sum();
        assert_eq!(total, a.dim());
    }

    #[test]
    fn centralizer_edge_cases() {
        let a = m2();
        let q = Field::Rational;
        assert_eq!(a.centralizer(&Subspace::zero(q, 4)).unwrap(), Subspace::full(q, 4));
        assert_eq!(a.centralizer(&Subspace::full(q, 4)).unwrap(), a.center());
        // diagonal matrices centralize themselves and nothing else
        let diag = Subspace::coordinate(q, 4, [0, 3]);
        assert_eq!(a.centralizer(&diag).unwrap(), diag);
        assert!(a.centralizer(&Subspace::zero(q, 3)).is_err());
        // commutative algebra: center is everything
        let d = dual_numbers();
        assert_eq!(d.center(), Subspace::full(q, 2));
    }

    #[test]
    fn mul_checks_dimension() {
        let a = dual_numbers();
        let bad = Element::zero(Field::Rational, 3);
        assert!(a.mul(&bad, a.identity()).is_err());
    }
}

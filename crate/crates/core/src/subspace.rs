//! Subspaces of `K^n` kept in canonical reduced echelon form.

use alloc::vec::Vec;

use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{Field, Scalar};

/// A subspace of `K^ambient`, stored as the nonzero rows of its reduced echelon basis.
///
/// Two subspaces are equal exactly when their canonical bases coincide, so the
/// derived `PartialEq` is set equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors (each of length `ambient`).
    pub fn span<I, V>(field: Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Scalar]>,
    {
        let rows: Vec<Vec<Scalar>> = vectors.into_iter().map(|v| v.as_ref().to_vec()).collect();
        Subspace::from_matrix(Matrix::from_rows(field, ambient, rows))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: Matrix) -> Subspace {
        let ambient = m.cols();
        let red = m.rref();
        let rows = (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(m.field(), ambient, rows),
            pivots: red.pivots,
        }
    }

    /// Span of the standard unit vectors with the given indices.
    pub fn coordinate(field: Field, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Subspace {
        let vectors: Vec<Vec<Scalar>> = indices
            .into_iter()
            .map(|i| {
                let mut v = alloc::vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace::span(field, ambient, vectors)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        self.basis.row_vectors()
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::ShapeMismatch {
                expected: (0, self.ambient),
                found: (0, other.ambient),
            });
        }
        Ok(())
    }

    /// Residue of `v` after reducing against the echelon basis.
    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x = &*x - &(&c * b);
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` with respect to the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis_vectors().all(|v| self.contains_vector(v)))
    }

    /// First basis vector of `other` not in `self`, if any.
    pub fn first_outside<'a>(&self, other: &'a Subspace) -> Result<Option<&'a [Scalar]>, LinalgError> {
        self.check(other)?;
        Ok(other.basis_vectors().find(|v| !self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(self == other)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        Ok(Subspace::span(
            self.field(),
            self.ambient,
            self.basis_vectors().chain(other.basis_vectors()),
        ))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        let (r, s) = (self.dim(), other.dim());
        if r == 0 || s == 0 {
            return Ok(Subspace::zero(self.field(), self.ambient));
        }
        // (a, b) with a·U = b·V  <=>  [U; -V]^T (a, b)^T = 0
        let f = self.field();
        let stacked = Matrix::from_fn(f, self.ambient, r + s, |i, j| {
            if j < r {
                self.basis.get(j, i).clone()
            } else {
                -other.basis.get(j - r, i)
            }
        });
        let vectors: Vec<Vec<Scalar>> = stacked
            .nullspace()
            .into_iter()
            .map(|coef| {
                let mut v = alloc::vec![f.zero(); self.ambient];
                for (j, c) in coef[..r].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, b) in v.iter_mut().zip(self.basis.row(j)) {
                        *x = &*x + &(c * b);
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(f, self.ambient, vectors))
    }
}

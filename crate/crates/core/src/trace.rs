//! Linear functionals on an algebra and the symmetrizing-trace checks.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, Element};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceError {
    LengthMismatch { expected: usize, found: usize },
    FieldMismatch,
    ZeroTrace,
    /// Nonzero on basis elements of two different degrees.
    NotHomogeneous { i: usize, j: usize },
    /// `τ(x_i x_j) != τ(x_j x_i)`.
    Asymmetric { i: usize, j: usize },
    Degenerate,
    NotCentral { i: usize },
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceError::LengthMismatch { expected, found } => {
                write!(f, "trace has {found} values, algebra has dimension {expected}")
            }
            TraceError::FieldMismatch => write!(f, "trace values live in a different field"),
            TraceError::ZeroTrace => write!(f, "trace is identically zero"),
            TraceError::NotHomogeneous { i, j } => {
                write!(f, "trace is nonzero on x{i} and x{j}, which have different degrees")
            }
            TraceError::Asymmetric { i, j } => write!(f, "tau(x{i} x{j}) != tau(x{j} x{i})"),
            TraceError::Degenerate => write!(f, "trace form is degenerate"),
            TraceError::NotCentral { i } => write!(f, "twisting element does not commute with x{i}"),
        }
    }
}

impl core::error::Error for TraceError {}

/// The values `τ(x_i)` of a linear functional on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    values: Vec<Scalar>,
    degree: Option<i64>,
}

impl TraceForm {
    pub fn new(alg: &Algebra, values: Vec<Scalar>) -> Result<TraceForm, TraceError> {
        if values.len() != alg.dim() {
            return Err(TraceError::LengthMismatch {
                expected: alg.dim(),
                found: values.len(),
            });
        }
        if values.iter().any(|v| v.field() != alg.field()) {
            return Err(TraceError::FieldMismatch);
        }
        let mut t = TraceForm { values, degree: None };
        t.degree = t.degree_in(alg).ok();
        Ok(t)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Homogeneity degree `d` when the form is homogeneous.
    pub fn degree(&self) -> Option<i64> {
        self.degree
    }

    /// The unique `d` with `τ` supported on `A_{-d}`.
    pub fn degree_in(&self, alg: &Algebra) -> Result<i64, TraceError> {
        let mut support = self.values.iter().enumerate().filter(|(_, v)| !v.is_zero());
        let (first, _) = support.next().ok_or(TraceError::ZeroTrace)?;
        let deg = alg.degree(first);
        if let Some((j, _)) = support.find(|(j, _)| alg.degree(*j) != deg) {
            return Err(TraceError::NotHomogeneous { i: first, j });
        }
        Ok(-deg)
    }

    pub fn eval(&self, a: &Element) -> Scalar {
        a.support()
            .fold(self.values[0].field().zero(), |acc, (i, c)| &acc + &(c * &self.values[i]))
    }

    /// `T_ij = τ(x_i x_j)`.
    pub fn gram(&self, alg: &Algebra) -> Matrix {
        let n = alg.dim();
        Matrix::from_fn(alg.field(), n, n, |i, j| {
            alg.basis_product(i, j)
                .iter()
                .fold(alg.field().zero(), |acc, (k, r)| &acc + &(r * &self.values[*k]))
        })
    }

    /// Symmetric on basis pairs and non-degenerate.
    pub fn check_symmetrizing(&self, alg: &Algebra) -> Result<(), TraceError> {
        let g = self.gram(alg);
        for i in 0..g.rows() {
            for j in i + 1..g.cols() {
                if g.get(i, j) != g.get(j, i) {
                    return Err(TraceError::Asymmetric { i, j });
                }
            }
        }
        if g.rank() < g.rows() {
            return Err(TraceError::Degenerate);
        }
        Ok(())
    }

    /// `τ_z(a) = τ(z a)` for central `z`.
    pub fn twist(&self, alg: &Algebra, z: &Element) -> Result<TraceForm, TraceError> {
        if z.dim() != alg.dim() {
            return Err(TraceError::LengthMismatch {
                expected: alg.dim(),
                found: z.dim(),
            });
        }
        if let Some(i) = alg.is_central(z) {
            return Err(TraceError::NotCentral { i });
        }
        let values = (0..alg.dim())
            .map(|i| self.eval(&alg.right_mul_basis(z, i)))
            .collect();
        let t = TraceForm::new(alg, values)?;
        if t.gram(alg).rank() < alg.dim() {
            return Err(TraceError::Degenerate);
        }
        Ok(t)
    }

    pub fn scaled(&self, c: &Scalar) -> TraceForm {
        TraceForm {
            values: self.values.iter().map(|v| v * c).collect(),
            degree: if c.is_zero() { None } else { self.degree },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Involution;
    use crate::scalar::Field;
    use alloc::string::ToString;
    use alloc::vec;

    fn dual_numbers(f: Field) -> Algebra {
        let mult = vec![(0, 0, 0, f.one()), (0, 1, 1, f.one()), (1, 0, 1, f.one())];
        Algebra::new(
            f,
            vec!["1".to_string(), "x".to_string()],
            mult,
            vec![0, 2],
            Involution::Permutation {
                perm: vec![0, 1],
                signs: None,
            },
        )
        .unwrap()
    }

    #[test]
    fn dual_numbers_trace_has_degree_minus_two() {
        let q = Field::Rational;
        let a = dual_numbers(q);
        let t = TraceForm::new(&a, vec![q.zero(), q.one()]).unwrap();
        assert_eq!(t.degree(), Some(-2));
        assert!(t.check_symmetrizing(&a).is_ok());
        assert_eq!(t.gram(&a), Matrix::from_rows(q, 2, vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]]));
    }

    #[test]
    fn unit_trace_is_degenerate() {
        let q = Field::Rational;
        let a = dual_numbers(q);
        let t = TraceForm::new(&a, vec![q.one(), q.zero()]).unwrap();
        assert_eq!(t.check_symmetrizing(&a), Err(TraceError::Degenerate));
        assert_eq!(t.degree(), Some(0));
    }

    #[test]
    fn zero_and_mixed_traces() {
        let q = Field::Rational;
        let a = dual_numbers(q);
        let z = TraceForm::new(&a, vec![q.zero(), q.zero()]).unwrap();
        assert_eq!(z.degree_in(&a), Err(TraceError::ZeroTrace));
        let m = TraceForm::new(&a, vec![q.one(), q.one()]).unwrap();
        assert_eq!(m.degree_in(&a), Err(TraceError::NotHomogeneous { i: 0, j: 1 }));
        assert_eq!(m.degree(), None);
        assert!(TraceForm::new(&a, vec![q.one()]).is_err());
    }

    #[test]
    fn twists() {
        let q = Field::Rational;
        let a = dual_numbers(q);
        let t = TraceForm::new(&a, vec![q.zero(), q.one()]).unwrap();
        assert_eq!(t.twist(&a, a.identity()).unwrap(), t);
        let three = a.identity().scale(&q.from_i64(3));
        assert_eq!(t.twist(&a, &three).unwrap().values(), &[q.zero(), q.from_i64(3)]);
        // 1 + x gives values (1, 1): symmetrizing, not homogeneous
        let z = Element::new(vec![q.one(), q.one()]);
        let tz = t.twist(&a, &z).unwrap();
        assert_eq!(tz.values(), &[q.one(), q.one()]);
        assert!(tz.check_symmetrizing(&a).is_ok());
        assert_eq!(tz.degree(), None);
        // x alone gives the zero form
        assert_eq!(t.twist(&a, &a.basis_element(1)), Err(TraceError::Degenerate));
    }
}

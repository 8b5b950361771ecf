//! Full matrix algebras with cellular bases relabeled by two permutations.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::BuildError;
use crate::algebra::{Algebra, Involution};
use crate::cellular::{CellDatum, Member};
use crate::instance::Instance;
use crate::scalar::Field;
use crate::trace::TraceForm;

/// `C_{a,b} = e_{σ₁⁻¹(a), σ₂⁻¹(b)}` with member degrees `deg`; indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCellSpec {
    pub n: usize,
    pub sigma1: Vec<usize>,
    pub sigma2: Vec<usize>,
    pub deg: Vec<i64>,
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = alloc::vec![false; n];
    p.len() == n && p.iter().all(|&x| x < n && !core::mem::replace(&mut seen[x], true))
}

impl MatrixCellSpec {
    /// Identity and reversal, with degrees `1, 2, …` on the first half, their
    /// negatives mirrored on the second half, and `0` in the middle for odd `n`.
    pub fn canonical(n: usize) -> MatrixCellSpec {
        let deg = (1..=n as i64)
            .map(|i| {
                let n = n as i64;
                if 2 * i <= n {
                    i
                } else if n % 2 == 1 && 2 * i == n + 1 {
                    0
                } else {
                    i - n - 1
                }
            })
            .collect();
        MatrixCellSpec {
            n,
            sigma1: (0..n).collect(),
            sigma2: (0..n).rev().collect(),
            deg,
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == MatrixCellSpec::canonical(self.n)
    }

    /// `σ = σ₁ σ₂⁻¹`.
    pub fn sigma(&self) -> Vec<usize> {
        let inv2 = inverse(&self.sigma2);
        (0..self.n).map(|i| self.sigma1[inv2[i]]).collect()
    }

    /// `σ² = id` and `deg(i) = −deg(σ(i))`.
    pub fn satisfies_criterion(&self) -> bool {
        let s = self.sigma();
        (0..self.n).all(|i| s[s[i]] == i && self.deg[i] == -self.deg[s[i]])
    }

    fn check(&self) -> Result<(), BuildError> {
        if self.n == 0 {
            return Err(BuildError::BadSize { n: 0 });
        }
        if !is_permutation(&self.sigma1, self.n) || !is_permutation(&self.sigma2, self.n) {
            return Err(BuildError::BadPermutation);
        }
        if self.deg.len() != self.n {
            return Err(BuildError::BadSize { n: self.deg.len() });
        }
        Ok(())
    }
}

/// `M_n` with basis labels `C(a,b)`. The involution `C_ab ↦ C_ba` and the grading are
/// installed without checks so that failing specs surface in cell-datum validation.
/// The canonical layout also gets the trace that is 1 on degree-zero basis elements.
pub fn matrix_algebra(field: Field, spec: &MatrixCellSpec) -> Result<Instance, BuildError> {
    spec.check()?;
    let n = spec.n;
    let sigma = spec.sigma();
    let idx = |a: usize, b: usize| a * n + b;
    let mut mult = Vec::new();
    for a in 0..n {
        for (b, &c) in sigma.iter().enumerate() {
            for d in 0..n {
                mult.push((idx(a, b), idx(c, d), idx(a, d), field.one()));
            }
        }
    }
    let labels: Vec<String> = (0..n * n).map(|i| format!("C({},{})", i / n + 1, i % n + 1)).collect();
    let degrees = (0..n * n).map(|i| spec.deg[i / n] + spec.deg[i % n]).collect();
    let perm = (0..n * n).map(|i| idx(i % n, i / n)).collect();
    let algebra = Algebra::assemble(field, labels, mult, degrees, Involution::Permutation { perm, signs: None })
        .map_err(BuildError::Algebra)?;

    let members = (0..n).map(|i| Member::new(format!("{}", i + 1), spec.deg[i])).collect();
    let map = (0..n).flat_map(|s| (0..n).map(move |t| (0, s, t, idx(s, t)))).collect();
    let cell = CellDatum::new(n * n, alloc::vec!["cell".into()], alloc::vec![], alloc::vec![members], map)
        .map_err(BuildError::Cell)?;

    let id = if spec.is_canonical() {
        format!("matrix-n{n}")
    } else {
        format!("matrix-n{n}-relabeled")
    };
    let mut inst = Instance::new(id, algebra).with_cell(cell);
    if spec.is_canonical() {
        let alg = &inst.algebra;
        let (inv1, inv2) = (inverse(&spec.sigma1), inverse(&spec.sigma2));
        let values: Vec<_> = (0..n * n)
            .map(|i| if alg.degree(i) == 0 { field.one() } else { field.zero() })
            .collect();
        let matrix_trace = (0..n * n).all(|i| (inv1[i / n] == inv2[i % n]) == values[i].is_one());
        if !matrix_trace {
            return Err(BuildError::TraceMismatch);
        }
        let t = TraceForm::new(alg, values).map_err(BuildError::Trace)?;
        inst = inst.with_trace(t);
    }
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::validate_cell_datum;
    use alloc::vec;

    #[test]
    fn canonical_degrees() {
        assert_eq!(MatrixCellSpec::canonical(2).deg, vec![1, -1]);
        assert_eq!(MatrixCellSpec::canonical(3).deg, vec![1, 0, -1]);
        assert_eq!(MatrixCellSpec::canonical(4).deg, vec![1, 2, -2, -1]);
        assert_eq!(MatrixCellSpec::canonical(5).deg, vec![1, 2, 0, -2, -1]);
        for n in 1..7 {
            assert!(MatrixCellSpec::canonical(n).satisfies_criterion());
        }
    }

    #[test]
    fn canonical_product_rule() {
        let inst = matrix_algebra(Field::Rational, &MatrixCellSpec::canonical(3)).unwrap();
        let a = &inst.algebra;
        // C_ij C_kl = [k = n - j + 1] C_il (1-based)
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let want = if k == 2 - j { Some(i * 3 + l) } else { None };
                        let got: Vec<usize> = a.basis_product(i * 3 + j, k * 3 + l).iter().map(|x| x.0).collect();
                        assert_eq!(got, want.into_iter().collect::<Vec<_>>());
                    }
                }
            }
        }
        assert!(validate_cell_datum(a, inst.cell.as_ref().unwrap()).passed());
        assert_eq!(inst.trace.as_ref().unwrap().degree(), Some(0));
    }

    #[test]
    fn non_involutive_sigma_fails_validation() {
        let spec = MatrixCellSpec {
            n: 3,
            sigma1: vec![1, 2, 0],
            sigma2: vec![0, 1, 2],
            deg: vec![0, 0, 0],
        };
        assert!(!spec.satisfies_criterion());
        let inst = matrix_algebra(Field::Rational, &spec).unwrap();
        assert!(inst.trace.is_none());
        assert!(!validate_cell_datum(&inst.algebra, inst.cell.as_ref().unwrap()).passed());
    }

    #[test]
    fn bad_permutation_rejected() {
        let spec = MatrixCellSpec {
            n: 2,
            sigma1: vec![0, 0],
            sigma2: vec![0, 1],
            deg: vec![0, 0],
        };
        assert_eq!(matrix_algebra(Field::Rational, &spec).unwrap_err(), BuildError::BadPermutation);
    }
}

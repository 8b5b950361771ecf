//! The dual basis of a symmetrizing trace and everything read off from it.
//!
//! Conventions: `y_j` is the `j`-th column of the inverse trace Gram matrix, so
//! `τ(x_i y_j) = δ_ij`. Through a cell datum, `D^λ_{U,V}` is the dual vector of
//! `C^λ_{V,U}`; this transposition makes `τ(C^λ_{S,T} D^μ_{U,V})` equal to
//! `δ_λμ δ_SV δ_TU`. The coefficient of `y_j` in any `v` is `τ(x_j v)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, Element};
use crate::cellular::{self, CellDatum, CellError, Family};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::trace::{TraceError, TraceForm};

#[derive(Clone, Debug)]
pub struct DualBasis {
    trace: TraceForm,
    /// Trace Gram matrix `T_ij = τ(x_i x_j)`.
    gram: Matrix,
    /// Column `j` is `y_j`.
    matrix: Matrix,
    ys: Vec<Element>,
}

impl DualBasis {
    pub fn new(alg: &Algebra, trace: &TraceForm) -> Result<DualBasis, TraceError> {
        trace.check_symmetrizing(alg)?;
        let gram = trace.gram(alg);
        let matrix = gram.invert().map_err(|_| TraceError::Degenerate)?;
        let ys = (0..alg.dim()).map(|j| Element::new(matrix.column(j))).collect();
        Ok(DualBasis {
            trace: trace.clone(),
            gram,
            matrix,
            ys,
        })
    }

    pub fn trace(&self) -> &TraceForm {
        &self.trace
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn trace_gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn y(&self, j: usize) -> &Element {
        &self.ys[j]
    }

    pub fn ys(&self) -> &[Element] {
        &self.ys
    }

    /// Coefficients of `v` in the dual basis.
    pub fn dual_coords(&self, v: &Element) -> Vec<Scalar> {
        self.gram.mul_vector(v.coeffs())
    }

    /// The relabeled family `D^λ_{S,T} = y_{idx(λ,T,S)}`, lower cells being the larger ones.
    pub fn d_family(&self, cd: &CellDatum) -> Family {
        let n = self.ys.len();
        let src: Vec<usize> = (0..n)
            .map(|i| {
                let c = cd.cell_of(i);
                cd.index(c.lambda, c.t, c.s)
            })
            .collect();
        let members = src.iter().map(|&j| self.ys[j].clone()).collect();
        let coords = Matrix::from_fn(self.gram.field(), n, n, |i, k| self.gram.get(src[i], k).clone());
        Family::with_coords("D", members, coords, true)
    }
}

/// `G'(λ)`: the Gram matrix of the D-family.
pub fn dual_gram(alg: &Algebra, cd: &CellDatum, db: &DualBasis, lambda: usize) -> Result<Matrix, CellError> {
    cellular::family_gram(alg, cd, &db.d_family(cd), lambda)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KError {
    Gram(CellError),
    /// `G(λ) G'(λ)` is not a scalar matrix.
    NotScalarMultiple { lambda: usize, product: Matrix },
    /// `(C_SS D_SS)^2 != k C_SS D_SS`.
    IdempotencyMismatch { lambda: usize, member: usize },
}

impl fmt::Display for KError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KError::Gram(e) => write!(f, "{e}"),
            KError::NotScalarMultiple { lambda, product } => {
                write!(f, "G G' for cell {lambda} is {product}, not scalar")
            }
            KError::IdempotencyMismatch { lambda, member } => {
                write!(f, "(C_SS D_SS)^2 != k C_SS D_SS for cell {lambda}, member {member}")
            }
        }
    }
}

impl core::error::Error for KError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellConstants {
    pub gram: Matrix,
    pub dual_gram: Matrix,
    pub k: Scalar,
}

/// `C^λ_{S,S} D^λ_{S,S}`.
pub fn diagonal_product(alg: &Algebra, cd: &CellDatum, d: &Family, lambda: usize, s: usize) -> Element {
    let i = cd.index(lambda, s, s);
    alg.left_mul_basis(i, d.member(i))
}

/// `k_λ` for every cell, from `G G' = kE` and re-derived from `(C_SS D_SS)^2 = k C_SS D_SS`.
pub fn k_lambda(alg: &Algebra, cd: &CellDatum, db: &DualBasis) -> Result<Vec<CellConstants>, KError> {
    let d = db.d_family(cd);
    let c = Family::cellular(alg);
    (0..cd.lambda_count())
        .map(|lambda| {
            let g = cellular::family_gram(alg, cd, &c, lambda).map_err(KError::Gram)?;
            let gp = cellular::family_gram(alg, cd, &d, lambda).map_err(KError::Gram)?;
            let product = g.mul(&gp).expect("square matrices of one size");
            let k = product
                .scalar_multiple_of_identity()
                .ok_or(KError::NotScalarMultiple { lambda, product })?;
            for s in 0..cd.members(lambda).len() {
                let u = diagonal_product(alg, cd, &d, lambda, s);
                if alg.mul_unchecked(&u, &u) != u.scale(&k) {
                    return Err(KError::IdempotencyMismatch { lambda, member: s });
                }
            }
            Ok(CellConstants {
                gram: g,
                dual_gram: gp,
                k,
            })
        })
        .collect()
}

/// `e_λ = Σ_S C_SS D_SS`.
pub fn e_elements(alg: &Algebra, cd: &CellDatum, db: &DualBasis) -> Vec<Element> {
    let d = db.d_family(cd);
    (0..cd.lambda_count())
        .map(|lambda| {
            (0..cd.members(lambda).len()).fold(alg.zero(), |acc, s| acc.add(&diagonal_product(alg, cd, &d, lambda, s)))
        })
        .collect()
}

/// `e_{λ,c} = Σ_{deg S = c} C_SS D_SS`, keyed by `(λ, c)` for occurring member degrees.
pub fn graded_e_elements(alg: &Algebra, cd: &CellDatum, db: &DualBasis) -> BTreeMap<(usize, i64), Element> {
    let d = db.d_family(cd);
    let mut out: BTreeMap<(usize, i64), Element> = BTreeMap::new();
    for lambda in 0..cd.lambda_count() {
        for (s, m) in cd.members(lambda).iter().enumerate() {
            let u = diagonal_product(alg, cd, &d, lambda, s);
            let slot = out.entry((lambda, m.deg)).or_insert_with(|| alg.zero());
            *slot = slot.add(&u);
        }
    }
    out
}

/// Outcome of the dual-cellularity test: the parity-and-symmetry criterion and the direct check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualCellular {
    pub d: i64,
    /// `d` even and `τ(a*) = τ(a)` on the basis.
    pub criterion: bool,
    pub criterion_detail: String,
    /// The D-family satisfies the four cell-datum axioms for the reversed order.
    pub direct: Result<(), String>,
}

impl DualCellular {
    pub fn agree(&self) -> bool {
        self.criterion == self.direct.is_ok()
    }
}

/// `None` when the trace is not homogeneous.
pub fn check_dual_cellular(alg: &Algebra, cd: &CellDatum, db: &DualBasis) -> Option<DualCellular> {
    let d = db.trace().degree()?;
    let tau = db.trace();
    let asym = (0..alg.dim()).find(|&i| tau.eval(&alg.involute(&alg.basis_element(i))) != tau.values()[i]);
    let criterion = d % 2 == 0 && asym.is_none();
    let criterion_detail = match (d % 2 == 0, asym) {
        (false, _) => format!("d = {d} is odd"),
        (true, Some(i)) => format!("tau({}*) != tau({})", alg.label(i), alg.label(i)),
        (true, None) => format!("d = {d} is even and tau is *-invariant"),
    };
    let fam = db.d_family(cd);
    let direct = direct_dual_test(alg, cd, &fam, d);
    Some(DualCellular {
        d,
        criterion,
        criterion_detail,
        direct,
    })
}

fn direct_dual_test(alg: &Algebra, cd: &CellDatum, fam: &Family, d: i64) -> Result<(), String> {
    cellular::check_family_involution(alg, cd, fam)?;
    cellular::check_family_left_action(alg, cd, fam)?;
    if d % 2 != 0 {
        // D_SS would need even degree 2 codeg(S), but its degree is -d - 2 deg S
        let i = cd.index(0, 0, 0);
        return Err(format!("{} has odd degree", cd.label("D", i)));
    }
    let codeg: Vec<Vec<i64>> = cd
        .tableaux()
        .iter()
        .map(|m| m.iter().map(|x| -x.deg - d / 2).collect())
        .collect();
    cellular::check_family_degrees(alg, cd, fam, &codeg)
}

/// Products `x_i y_j` and `y_i x_j` for all pairs, computed once.
pub struct DualProducts {
    n: usize,
    xy: Vec<Element>,
    yx: Vec<Element>,
}

impl DualProducts {
    pub fn new(alg: &Algebra, db: &DualBasis) -> DualProducts {
        let n = alg.dim();
        let mut xy = Vec::with_capacity(n * n);
        let mut yx = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                xy.push(alg.left_mul_basis(i, db.y(j)));
                yx.push(alg.right_mul_basis(db.y(i), j));
            }
        }
        DualProducts { n, xy, yx }
    }

    /// `x_i y_j`.
    pub fn xy(&self, i: usize, j: usize) -> &Element {
        &self.xy[i * self.n + j]
    }

    /// `y_i x_j`.
    pub fn yx(&self, i: usize, j: usize) -> &Element {
        &self.yx[i * self.n + j]
    }
}

/// `x_i y_j = Σ_k r_kij y_k` and `y_i x_j = Σ_k r_jki y_k` for all pairs.
pub fn check_dual_mult_rules(alg: &Algebra, db: &DualBasis, p: &DualProducts) -> Result<String, String> {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let left = db.dual_coords(p.xy(i, j));
            let right = db.dual_coords(p.yx(i, j));
            for k in 0..n {
                if left[k] != alg.structure_constant(k, i, j) {
                    return Err(format!("x_{i} y_{j}: coefficient of y_{k} is {}", left[k]));
                }
                if right[k] != alg.structure_constant(j, k, i) {
                    return Err(format!("y_{i} x_{j}: coefficient of y_{k} is {}", right[k]));
                }
            }
        }
    }
    Ok(format!("{} pairs checked", n * n))
}

/// `τ(x_i y_j) = δ_ij`.
pub fn check_pairing(alg: &Algebra, db: &DualBasis, p: &DualProducts) -> Result<String, String> {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let v = db.trace().eval(p.xy(i, j));
            let want = if i == j { alg.field().one() } else { alg.field().zero() };
            if v != want {
                return Err(format!("tau(x_{i} y_{j}) = {v}"));
            }
        }
    }
    Ok(format!("{n}x{n} pairing is the identity"))
}

/// `deg x_i + deg y_i = -d`, each `y_i` homogeneous.
pub fn check_dual_degrees(alg: &Algebra, db: &DualBasis, d: i64) -> Result<String, String> {
    for i in 0..alg.dim() {
        match alg.homogeneous_degree(db.y(i)) {
            Some(e) if alg.degree(i) + e == -d => {}
            Some(e) => return Err(format!("deg {} + deg y = {} + {e} != {}", alg.label(i), alg.degree(i), -d)),
            None => return Err(format!("dual of {} is not homogeneous", alg.label(i))),
        }
    }
    Ok(format!("all sums equal {}", -d))
}

/// Identities relating products of the C- and D-families, each checked over all index tuples.
pub struct CellDualChecks<'a> {
    alg: &'a Algebra,
    cd: &'a CellDatum,
    db: &'a DualBasis,
    p: &'a DualProducts,
    /// `src[i]`: the `y` index of the D-member labeled by basis index `i`.
    src: Vec<usize>,
}

impl<'a> CellDualChecks<'a> {
    pub fn new(alg: &'a Algebra, cd: &'a CellDatum, db: &'a DualBasis, p: &'a DualProducts) -> Self {
        let src = (0..alg.dim())
            .map(|i| {
                let c = cd.cell_of(i);
                cd.index(c.lambda, c.t, c.s)
            })
            .collect();
        CellDualChecks { alg, cd, db, p, src }
    }

    /// `C_i D_j`, both indexed by basis position.
    fn cd_prod(&self, i: usize, j: usize) -> &Element {
        self.p.xy(i, self.src[j])
    }

    /// `D_j C_i`.
    fn dc_prod(&self, j: usize, i: usize) -> &Element {
        self.p.yx(self.src[j], i)
    }

    /// Coefficient of `D_k` in `v`.
    fn d_coords(&self, v: &Element) -> Vec<Scalar> {
        let c = self.db.dual_coords(v);
        (0..c.len()).map(|k| c[self.src[k]].clone()).collect()
    }

    fn name(&self, prefix: &str, i: usize) -> String {
        self.cd.label(prefix, i)
    }

    fn transposed(&self, i: usize) -> usize {
        self.src[i]
    }

    /// `D^μ_{U,V} C^λ_{S,T} = Σ r_{(S,T,λ),(Y,X,ε),(V,U,μ)} D^ε_{X,Y}`.
    pub fn expand_left(&self) -> Result<String, String> {
        let n = self.alg.dim();
        for j in 0..n {
            for i in 0..n {
                let coords = self.d_coords(self.dc_prod(j, i));
                for (k, c) in coords.iter().enumerate() {
                    let want = self.alg.structure_constant(i, self.transposed(k), self.transposed(j));
                    if *c != want {
                        return Err(format!(
                            "{} {}: coefficient of {} is {c}, expected {want}",
                            self.name("D", j),
                            self.name("C", i),
                            self.name("D", k)
                        ));
                    }
                }
            }
        }
        Ok(format!("{} products expanded", n * n))
    }

    /// `C^λ_{S,T} D^μ_{U,V} = Σ r_{(Y,X,ε),(S,T,λ),(V,U,μ)} D^ε_{X,Y}`.
    pub fn expand_right(&self) -> Result<String, String> {
        let n = self.alg.dim();
        for i in 0..n {
            for j in 0..n {
                let coords = self.d_coords(self.cd_prod(i, j));
                for (k, c) in coords.iter().enumerate() {
                    let want = self.alg.structure_constant(self.transposed(k), i, self.transposed(j));
                    if *c != want {
                        return Err(format!(
                            "{} {}: coefficient of {} is {c}, expected {want}",
                            self.name("C", i),
                            self.name("D", j),
                            self.name("D", k)
                        ));
                    }
                }
            }
        }
        Ok(format!("{} products expanded", n * n))
    }

    /// `C_ST D_TQ` does not depend on `T`.
    pub fn telescope_right(&self) -> Result<String, String> {
        let cd = self.cd;
        let mut count = 0usize;
        for lambda in 0..cd.lambda_count() {
            let m = cd.members(lambda).len();
            for s in 0..m {
                for q in 0..m {
                    let first = self.cd_prod(cd.index(lambda, s, 0), cd.index(lambda, 0, q));
                    for t in 1..m {
                        count += 1;
                        if self.cd_prod(cd.index(lambda, s, t), cd.index(lambda, t, q)) != first {
                            return Err(format!(
                                "{} {} differs from the first member's product",
                                self.name("C", cd.index(lambda, s, t)),
                                self.name("D", cd.index(lambda, t, q))
                            ));
                        }
                    }
                }
            }
        }
        Ok(format!("{count} comparisons"))
    }

    /// `D_TS C_SQ` does not depend on `S`.
    pub fn telescope_left(&self) -> Result<String, String> {
        let cd = self.cd;
        let mut count = 0usize;
        for lambda in 0..cd.lambda_count() {
            let m = cd.members(lambda).len();
            for t in 0..m {
                for q in 0..m {
                    let first = self.dc_prod(cd.index(lambda, t, 0), cd.index(lambda, 0, q));
                    for s in 1..m {
                        count += 1;
                        if self.dc_prod(cd.index(lambda, t, s), cd.index(lambda, s, q)) != first {
                            return Err(format!(
                                "{} {} differs from the first member's product",
                                self.name("D", cd.index(lambda, t, s)),
                                self.name("C", cd.index(lambda, s, q))
                            ));
                        }
                    }
                }
            }
        }
        Ok(format!("{count} comparisons"))
    }

    /// Products within one cell vanish when the inner indices differ.
    pub fn vanish_index(&self, right: bool) -> Result<String, String> {
        let cd = self.cd;
        let mut count = 0usize;
        for lambda in 0..cd.lambda_count() {
            let m = cd.members(lambda).len();
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        for e in 0..m {
                            if right && b != c {
                                // C_ab D_ce
                                let (i, j) = (cd.index(lambda, a, b), cd.index(lambda, c, e));
                                count += 1;
                                if !self.cd_prod(i, j).is_zero() {
                                    return Err(format!("{} {} != 0", self.name("C", i), self.name("D", j)));
                                }
                            }
                            if !right && b != c {
                                // D_ab C_ce
                                let (j, i) = (cd.index(lambda, a, b), cd.index(lambda, c, e));
                                count += 1;
                                if !self.dc_prod(j, i).is_zero() {
                                    return Err(format!("{} {} != 0", self.name("D", j), self.name("C", i)));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(format!("{count} products vanish"))
    }

    /// Products of `C^λ` and `D^μ` vanish when `μ` is not `≤ λ`.
    pub fn vanish_order(&self, right: bool) -> Result<String, String> {
        let n = self.alg.dim();
        let mut count = 0usize;
        for i in 0..n {
            let lambda = self.cd.cell_of(i).lambda;
            for j in 0..n {
                let mu = self.cd.cell_of(j).lambda;
                if mu == lambda || self.cd.less(mu, lambda) {
                    continue;
                }
                count += 1;
                let prod = if right { self.cd_prod(i, j) } else { self.dc_prod(j, i) };
                if !prod.is_zero() {
                    let (a, b) = if right {
                        (self.name("C", i), self.name("D", j))
                    } else {
                        (self.name("D", j), self.name("C", i))
                    };
                    return Err(format!("{a} {b} != 0"));
                }
            }
        }
        Ok(format!("{count} products vanish"))
    }
}

/// `e_{λ,c} e_{μ,c'} = δ_λμ δ_cc' k_λ e_{λ,c}`.
pub fn check_graded_idempotents(
    alg: &Algebra,
    e: &BTreeMap<(usize, i64), Element>,
    k: &[Scalar],
) -> Result<String, String> {
    for (a, ea) in e {
        for (b, eb) in e {
            let prod = alg.mul_unchecked(ea, eb);
            let want = if a == b { ea.scale(&k[a.0]) } else { alg.zero() };
            if prod != want {
                return Err(format!("e_({},{}) e_({},{}) has the wrong value", a.0, a.1, b.0, b.1));
            }
        }
    }
    Ok(format!("{} elements, {} products", e.len(), e.len() * e.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Involution;
    use crate::cellular::Member;
    use crate::scalar::Field;
    use alloc::string::ToString;
    use alloc::vec;

    fn dual_numbers() -> (Algebra, CellDatum, TraceForm) {
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
        let t = TraceForm::new(&alg, vec![q.zero(), q.one()]).unwrap();
        (alg, cd, t)
    }

    #[test]
    fn dual_of_one_and_x() {
        let (alg, _, t) = dual_numbers();
        let db = DualBasis::new(&alg, &t).unwrap();
        assert_eq!(db.y(0), &alg.basis_element(1));
        assert_eq!(db.y(1), &alg.basis_element(0));
    }

    #[test]
    fn constants_for_dual_numbers() {
        let (alg, cd, t) = dual_numbers();
        let q = Field::Rational;
        let db = DualBasis::new(&alg, &t).unwrap();
        let ks = k_lambda(&alg, &cd, &db).unwrap();
        assert!(ks.iter().all(|c| c.k.is_zero()));
        assert_eq!(dual_gram(&alg, &cd, &db, 1).unwrap(), Matrix::zeros(q, 1, 1));
        let e = e_elements(&alg, &cd, &db);
        assert_eq!(e[1], alg.basis_element(1));
        let dc = check_dual_cellular(&alg, &cd, &db).unwrap();
        assert!(dc.criterion && dc.direct.is_ok());
    }

    #[test]
    fn identities_hold_for_dual_numbers() {
        let (alg, cd, t) = dual_numbers();
        let db = DualBasis::new(&alg, &t).unwrap();
        let p = DualProducts::new(&alg, &db);
        check_dual_mult_rules(&alg, &db, &p).unwrap();
        check_pairing(&alg, &db, &p).unwrap();
        check_dual_degrees(&alg, &db, -2).unwrap();
        let c = CellDualChecks::new(&alg, &cd, &db, &p);
        for r in [
            c.expand_left(),
            c.expand_right(),
            c.telescope_left(),
            c.telescope_right(),
            c.vanish_index(true),
            c.vanish_index(false),
            c.vanish_order(true),
            c.vanish_order(false),
        ] {
            r.unwrap();
        }
    }

    #[test]
    fn degenerate_trace_has_no_dual() {
        let (alg, _, _) = dual_numbers();
        let q = Field::Rational;
        let t = TraceForm::new(&alg, vec![q.one(), q.zero()]).unwrap();
        assert_eq!(DualBasis::new(&alg, &t).unwrap_err(), TraceError::Degenerate);
    }
}

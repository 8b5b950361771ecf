//! The Higman ideal, its degree-wise pieces, the ideals spanned by the `e`
//! elements, and the semisimplicity tests built on them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Element};
use crate::cellular::CellDatum;
use crate::dual::{self, CellConstants, DualBasis};
use crate::linalg::Matrix;
use crate::report::{Report, Verdict};
use crate::subspace::Subspace;

/// Generator `Σ_{i in idx} x_i x_j y_i` for each basis element `x_j`.
fn higman_generators(alg: &Algebra, db: &DualBasis, idx: &[usize]) -> Vec<Element> {
    (0..alg.dim())
        .map(|j| {
            idx.iter().fold(alg.zero(), |acc, &i| {
                let xij = alg.basis_product_element(i, j);
                acc.add(&alg.mul_unchecked(&xij, db.y(i)))
            })
        })
        .collect()
}

/// `H(A)`, the image of `a ↦ Σ_i x_i a y_i`.
pub fn higman(alg: &Algebra, db: &DualBasis) -> Subspace {
    let all: Vec<usize> = (0..alg.dim()).collect();
    Subspace::span(alg.field(), alg.dim(), higman_generators(alg, db, &all))
}

/// `H_c(A)` for every occurring degree `c`, and their sum.
pub fn higman_graded(alg: &Algebra, db: &DualBasis) -> (BTreeMap<i64, Subspace>, Subspace) {
    let mut pieces = BTreeMap::new();
    let mut total = Subspace::zero(alg.field(), alg.dim());
    for &c in alg.components().keys() {
        let idx: Vec<usize> = (0..alg.dim()).filter(|&i| alg.degree(i) == c).collect();
        let h = Subspace::span(alg.field(), alg.dim(), higman_generators(alg, db, &idx));
        total = total.sum(&h).expect("same ambient space");
        pieces.insert(c, h);
    }
    (pieces, total)
}

/// `L(A)` and `L_gr(A)`.
pub fn l_ideals(alg: &Algebra, cd: &CellDatum, db: &DualBasis) -> (Subspace, Subspace) {
    let e = dual::e_elements(alg, cd, db);
    let eg = dual::graded_e_elements(alg, cd, db);
    (
        Subspace::span(alg.field(), alg.dim(), e),
        Subspace::span(alg.field(), alg.dim(), eg.values()),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFamily {
    pub h: Subspace,
    pub h_c: BTreeMap<i64, Subspace>,
    pub h_gr: Subspace,
    pub l: Subspace,
    pub l_gr: Subspace,
    pub z: Subspace,
    pub a0: Subspace,
    pub z_a0: Subspace,
}

impl IdealFamily {
    pub fn compute(alg: &Algebra, cd: &CellDatum, db: &DualBasis) -> IdealFamily {
        let (h_c, h_gr) = higman_graded(alg, db);
        let (l, l_gr) = l_ideals(alg, cd, db);
        let a0 = alg.degree_component(0);
        let z_a0 = alg.centralizer(&a0).expect("same ambient space");
        IdealFamily {
            h: higman(alg, db),
            h_c,
            h_gr,
            l,
            l_gr,
            z: alg.center(),
            a0,
            z_a0,
        }
    }
}

/// `small ⊆ big`, with a witness naming the first escaping vector.
pub fn containment(alg: &Algebra, small: (&str, &Subspace), big: (&str, &Subspace)) -> Result<String, String> {
    match big.1.first_outside(small.1).expect("same ambient space") {
        None => Ok(format!("dim {} = {} <= dim {} = {}", small.0, small.1.dim(), big.0, big.1.dim())),
        Some(v) => Err(format!(
            "{} not in {}",
            crate::cellular::describe(alg, &Element::new(v.to_vec())),
            big.0
        )),
    }
}

fn skip_unless_nonzero(d: Option<i64>) -> Option<Verdict> {
    match d {
        None => Some(Verdict::Skipped("hypothesis homogeneous trace not met".into())),
        Some(0) => Some(Verdict::Skipped("hypothesis d ≠ 0 not met".into())),
        Some(_) => None,
    }
}

/// Containments and dimension bounds among the ideals, one entry per claim.
pub fn ideal_report(alg: &Algebra, fam: &IdealFamily, d: Option<i64>) -> Report {
    let mut r = Report::new("");
    r.record("higman-central", "H(A) lies in the center", containment(alg, ("H", &fam.h), ("Z", &fam.z)));
    r.record("l-ideal-central", "L(A) lies in the center", containment(alg, ("L", &fam.l), ("Z", &fam.z)));
    r.record("higman-in-l", "H(A) lies in L(A)", containment(alg, ("H", &fam.h), ("L", &fam.l)));
    match skip_unless_nonzero(d) {
        Some(v) => {
            r.push("higman-in-top-degree", TOP_DEGREE, v.clone(), "");
            r.push("higman-dim-bound", DIM_BOUND, v, "");
        }
        None => {
            let d = d.expect("checked above");
            let top = alg.degree_component(-d);
            let chain = containment(alg, ("H", &fam.h), ("L", &fam.l))
                .and_then(|a| containment(alg, ("L", &fam.l), ("A_-d", &top)).map(|b| format!("{a}; {b}")));
            r.record("higman-in-top-degree", TOP_DEGREE, chain);
            let (h, a0) = (fam.h.dim(), fam.a0.dim());
            let w = format!("dim H = {h}, dim A_0 = {a0}");
            r.push("higman-dim-bound", DIM_BOUND, Verdict::from_bool(h <= a0), w);
        }
    }
    match d {
        None => r.push(
            "graded-chain",
            GRADED_CHAIN,
            Verdict::Skipped("hypothesis homogeneous trace not met".into()),
            "",
        ),
        Some(_) => {
            let chain = containment(alg, ("H_gr", &fam.h_gr), ("L_gr", &fam.l_gr)).and_then(|a| {
                containment(alg, ("L_gr", &fam.l_gr), ("Z_A(A_0)", &fam.z_a0)).map(|b| format!("{a}; {b}"))
            });
            r.record("graded-chain", GRADED_CHAIN, chain);
        }
    }
    match skip_unless_nonzero(d) {
        Some(v) => r.push("graded-strict", GRADED_STRICT, v, ""),
        None => {
            let (l, z) = (fam.l_gr.dim(), fam.z_a0.dim());
            let ok = fam.z_a0.contains(&fam.l_gr).expect("same ambient space") && l < z;
            r.push(
                "graded-strict",
                GRADED_STRICT,
                Verdict::from_bool(ok),
                format!("dim L_gr = {l}, dim Z_A(A_0) = {z}"),
            );
        }
    }
    r
}

const TOP_DEGREE: &str = "if d != 0 then H(A) ⊆ L(A) ⊆ A_{-d}";
const DIM_BOUND: &str = "if d != 0 then dim H(A) <= dim A_0";
const GRADED_CHAIN: &str = "H_gr(A) ⊆ L_gr(A) ⊆ Z_A(A_0)";
const GRADED_STRICT: &str = "if d != 0 then L_gr(A) is strictly smaller than Z_A(A_0)";

/// Rank of the regular-representation trace form `(a, b) ↦ Tr(L_{ab})`.
///
/// In characteristic zero its radical is the Jacobson radical, so full rank means semisimple.
pub fn regular_trace_rank(alg: &Algebra) -> usize {
    let n = alg.dim();
    let f = alg.field();
    // Tr(L_{x_k}) = Σ_m r_{k m m}
    let tr: Vec<_> = (0..n).map(|k| (0..n).fold(f.zero(), |acc, m| &acc + &alg.structure_constant(k, m, m))).collect();
    Matrix::from_fn(f, n, n, |i, j| {
        alg.basis_product(i, j).iter().fold(f.zero(), |acc, (k, r)| &acc + &(r * &tr[*k]))
    })
    .rank()
}

/// The independent semisimplicity tests and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleVerdict {
    /// Every cell form `G(λ)` is non-degenerate.
    pub cell_forms_nondegenerate: bool,
    pub k_nonzero: bool,
    /// `{C^λ_{S,T} D^λ_{T,T}}` is a basis.
    pub products_span: bool,
    /// `L_gr(A) = Z_A(A_0)`.
    pub centralizer_equal: bool,
    /// Regular trace form check, characteristic zero only.
    pub regular_trace: Option<bool>,
}

impl SemisimpleVerdict {
    pub fn criteria(&self) -> [bool; 4] {
        [
            self.cell_forms_nondegenerate,
            self.k_nonzero,
            self.products_span,
            self.centralizer_equal,
        ]
    }

    pub fn agree(&self) -> bool {
        let c = self.criteria();
        c.iter().all(|&b| b == c[0]) && self.regular_trace.is_none_or(|b| b == c[0])
    }

    pub fn semisimple(&self) -> bool {
        self.k_nonzero
    }

    pub fn summary(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut s = format!(
            "cell forms non-degenerate: {}, all k nonzero: {}, C D products span: {}, L_gr = Z_A(A_0): {}",
            yes(self.cell_forms_nondegenerate),
            yes(self.k_nonzero),
            yes(self.products_span),
            yes(self.centralizer_equal)
        );
        if let Some(b) = self.regular_trace {
            s.push_str(&format!(", regular trace form non-degenerate: {}", yes(b)));
        }
        s
    }
}

pub fn semisimple_verdict(
    alg: &Algebra,
    cd: &CellDatum,
    db: &DualBasis,
    constants: &[CellConstants],
    fam: &IdealFamily,
) -> SemisimpleVerdict {
    let d = db.d_family(cd);
    let products: Vec<Element> = (0..alg.dim())
        .map(|i| {
            let c = cd.cell_of(i);
            alg.left_mul_basis(i, d.member(cd.index(c.lambda, c.t, c.t)))
        })
        .collect();
    SemisimpleVerdict {
        cell_forms_nondegenerate: constants.iter().all(|c| c.gram.rank() == c.gram.rows()),
        k_nonzero: constants.iter().all(|c| !c.k.is_zero()),
        products_span: Subspace::span(alg.field(), alg.dim(), products).dim() == alg.dim(),
        centralizer_equal: fam.l_gr == fam.z_a0,
        regular_trace: (alg.field().characteristic() == 0).then(|| regular_trace_rank(alg) == alg.dim()),
    }
}

//! Quotients of path algebras by homogeneous relations.
//!
//! Paths compose left to right: `ab` means "first `a`, then `b`", so `ab` is nonzero
//! only when `a` ends where `b` starts. Relations become rewriting rules whose
//! leading term is the largest path in (length, lexicographic by arrow declaration
//! index) order; that order is compatible with concatenation, so reduction terminates.
//! Irreducible paths form the basis once every overlap of leading terms resolves,
//! which is checked before the algebra is assembled.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::{Algebra, AlgebraError, Involution};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
    pub degree: i64,
}

/// A formal linear combination of nontrivial paths, each a list of arrow indices.
pub type Relation = Vec<(Scalar, Vec<usize>)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    /// Paths longer than this vanish.
    pub max_length: Option<usize>,
    /// Arrow `a` maps to `arrow_involution[a]`, reversing the direction of paths.
    pub arrow_involution: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    BadArrow { arrow: usize },
    /// A relation term is not a composable path of at least one arrow.
    BadPath { relation: usize },
    InhomogeneousRelation { relation: usize },
    InfiniteDimensional { bound: usize },
    /// An overlap of two leading terms reduces to different normal forms.
    NotConfluent { word: String },
    BadInvolution,
    Algebra(AlgebraError),
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::BadArrow { arrow } => write!(f, "arrow {arrow} has an endpoint out of range"),
            PathError::BadPath { relation } => write!(f, "relation {relation} contains an invalid path"),
            PathError::InhomogeneousRelation { relation } => {
                write!(f, "relation {relation} mixes degrees or endpoints")
            }
            PathError::InfiniteDimensional { bound } => {
                write!(f, "irreducible paths of length {bound} exist; quotient looks infinite-dimensional")
            }
            PathError::NotConfluent { word } => write!(f, "rewriting is not confluent on {word}"),
            PathError::BadInvolution => write!(f, "arrow involution is not a reversing bijection"),
            PathError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PathError {}

/// Paths longer than this are never enumerated.
const LENGTH_BOUND: usize = 64;
const BASIS_BOUND: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Ord for Path {
    fn cmp(&self, other: &Path) -> Ordering {
        (self.arrows.len(), &self.arrows, self.source).cmp(&(other.arrows.len(), &other.arrows, other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Path) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
struct Rule {
    lead: Vec<usize>,
    tail: Vec<(Scalar, Vec<usize>)>,
}

type Combo = BTreeMap<Path, Scalar>;

struct Rewriter<'a> {
    q: &'a QuiverPresentation,
    field: Field,
    rules: Vec<Rule>,
}

fn find(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&p| hay[p..p + needle.len()] == *needle)
}

impl Rewriter<'_> {
    fn path(&self, arrows: Vec<usize>) -> Path {
        Path {
            source: self.q.arrows[arrows[0]].source,
            target: self.q.arrows[*arrows.last().expect("nonempty")].target,
            arrows,
        }
    }

    fn too_long(&self, p: &Path) -> bool {
        self.q.max_length.is_some_and(|m| p.arrows.len() > m)
    }

    fn add(&self, combo: &mut Combo, p: Path, c: Scalar) {
        if c.is_zero() || self.too_long(&p) {
            return;
        }
        let sum = combo.get(&p).map_or_else(|| c.clone(), |old| old + &c);
        if sum.is_zero() {
            combo.remove(&p);
        } else {
            combo.insert(p, sum);
        }
    }

    /// Replaces the occurrence of rule `r` at position `pos` in `p`.
    fn apply(&self, p: &Path, r: &Rule, pos: usize, coeff: &Scalar, out: &mut Combo) {
        for (c, t) in &r.tail {
            let mut arrows = p.arrows[..pos].to_vec();
            arrows.extend_from_slice(t);
            arrows.extend_from_slice(&p.arrows[pos + r.lead.len()..]);
            self.add(out, self.path(arrows), coeff * c);
        }
    }

    fn reducible(&self, p: &Path) -> Option<(usize, usize)> {
        self.rules
            .iter()
            .enumerate()
            .find_map(|(i, r)| find(&p.arrows, &r.lead).map(|pos| (i, pos)))
    }

    fn normal_form(&self, mut combo: Combo) -> Combo {
        loop {
            let hit = combo
                .iter()
                .rev()
                .find_map(|(p, c)| self.reducible(p).map(|h| (p.clone(), c.clone(), h)));
            let Some((p, c, (ri, pos))) = hit else {
                return combo;
            };
            combo.remove(&p);
            self.apply(&p, &self.rules[ri], pos, &c, &mut combo);
        }
    }

    fn check_overlaps(&self) -> Result<(), PathError> {
        for (ai, a) in self.rules.iter().enumerate() {
            for (bi, b) in self.rules.iter().enumerate() {
                let mut words: Vec<(Vec<usize>, usize)> = Vec::new();
                // suffix of a equals prefix of b
                for k in 1..a.lead.len().min(b.lead.len()) {
                    if a.lead[a.lead.len() - k..] == b.lead[..k] {
                        let mut w = a.lead.clone();
                        w.extend_from_slice(&b.lead[k..]);
                        words.push((w, a.lead.len() - k));
                    }
                }
                // b inside a
                if ai != bi {
                    if let Some(pos) = find(&a.lead, &b.lead) {
                        words.push((a.lead.clone(), pos));
                    }
                }
                for (w, bpos) in words {
                    if !self.composable(&w) {
                        continue;
                    }
                    let p = self.path(w);
                    let one = self.field.one();
                    let mut via_a = Combo::new();
                    self.apply(&p, a, 0, &one, &mut via_a);
                    let mut via_b = Combo::new();
                    self.apply(&p, b, bpos, &one, &mut via_b);
                    if self.normal_form(via_a) != self.normal_form(via_b) {
                        return Err(PathError::NotConfluent {
                            word: self.word_label(&p.arrows),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn composable(&self, arrows: &[usize]) -> bool {
        arrows
            .windows(2)
            .all(|w| self.q.arrows[w[0]].target == self.q.arrows[w[1]].source)
    }

    fn word_label(&self, arrows: &[usize]) -> String {
        arrows.iter().map(|&a| self.q.arrows[a].label.as_str()).collect()
    }
}

/// A path algebra quotient together with the paths labeling its basis.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub algebra: Algebra,
    /// `(source, arrows)` of each basis path; empty arrows mean the trivial path at `source`.
    basis: Vec<(usize, Vec<usize>)>,
    presentation: QuiverPresentation,
    rules: Vec<Rule>,
}

impl PathAlgebra {
    pub fn build(q: &QuiverPresentation, field: Field) -> Result<PathAlgebra, PathError> {
        for (i, a) in q.arrows.iter().enumerate() {
            if a.source >= q.vertices || a.target >= q.vertices {
                return Err(PathError::BadArrow { arrow: i });
            }
        }
        let rw = Rewriter {
            q,
            field,
            rules: make_rules(q)?,
        };
        rw.check_overlaps()?;

        let mut basis: Vec<(usize, Vec<usize>)> = (0..q.vertices).map(|v| (v, Vec::new())).collect();
        let mut frontier: Vec<Path> = Vec::new();
        for a in 0..q.arrows.len() {
            let p = rw.path(vec![a]);
            if !rw.too_long(&p) && rw.reducible(&p).is_none() {
                frontier.push(p);
            }
        }
        let mut len = 1;
        while !frontier.is_empty() {
            if len > LENGTH_BOUND || basis.len() + frontier.len() > BASIS_BOUND {
                return Err(PathError::InfiniteDimensional { bound: len });
            }
            let mut next = Vec::new();
            for p in &frontier {
                for (a, arrow) in q.arrows.iter().enumerate() {
                    if arrow.source != p.target {
                        continue;
                    }
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    let np = rw.path(arrows);
                    if !rw.too_long(&np) && rw.reducible(&np).is_none() {
                        next.push(np);
                    }
                }
            }
            basis.extend(frontier.into_iter().map(|p| (p.source, p.arrows)));
            frontier = next;
            len += 1;
        }

        let n = basis.len();
        let lookup: BTreeMap<(usize, Vec<usize>), usize> =
            basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let coords = |combo: &Combo| -> Vec<(usize, Scalar)> {
            combo
                .iter()
                .map(|(p, c)| (lookup[&(p.source, p.arrows.clone())], c.clone()))
                .collect()
        };
        let target = |b: &(usize, Vec<usize>)| b.1.last().map_or(b.0, |&a| q.arrows[a].target);

        let mut mult = Vec::new();
        for (i, bi) in basis.iter().enumerate() {
            for (j, bj) in basis.iter().enumerate() {
                if target(bi) != bj.0 {
                    continue;
                }
                if bi.1.is_empty() {
                    mult.push((i, j, j, field.one()));
                    continue;
                }
                if bj.1.is_empty() {
                    mult.push((i, j, i, field.one()));
                    continue;
                }
                let mut arrows = bi.1.clone();
                arrows.extend_from_slice(&bj.1);
                let mut combo = Combo::new();
                rw.add(&mut combo, rw.path(arrows), field.one());
                for (k, c) in coords(&rw.normal_form(combo)) {
                    mult.push((i, j, k, c));
                }
            }
        }

        let labels: Vec<String> = basis
            .iter()
            .map(|(v, arrows)| {
                if arrows.is_empty() {
                    format!("e{}", v + 1)
                } else {
                    rw.word_label(arrows)
                }
            })
            .collect();
        let degrees = basis
            .iter()
            .map(|(_, arrows)| arrows.iter().map(|&a| q.arrows[a].degree).sum())
            .collect();

        let involution = match &q.arrow_involution {
            None => Involution::Permutation {
                perm: (0..n).collect(),
                signs: None,
            },
            Some(inv) => {
                if inv.len() != q.arrows.len()
                    || inv.iter().enumerate().any(|(a, &b)| {
                        b >= q.arrows.len() || q.arrows[b].source != q.arrows[a].target || q.arrows[b].target != q.arrows[a].source
                    })
                {
                    return Err(PathError::BadInvolution);
                }
                let mut m = Matrix::zeros(field, n, n);
                for (j, (_, arrows)) in basis.iter().enumerate() {
                    if arrows.is_empty() {
                        m.set(j, j, field.one());
                        continue;
                    }
                    let rev: Vec<usize> = arrows.iter().rev().map(|&a| inv[a]).collect();
                    let mut combo = Combo::new();
                    rw.add(&mut combo, rw.path(rev), field.one());
                    for (k, c) in coords(&rw.normal_form(combo)) {
                        m.set(k, j, c);
                    }
                }
                Involution::Matrix(m)
            }
        };
        let algebra = Algebra::new(field, labels, mult, degrees, involution).map_err(PathError::Algebra)?;
        let rules = rw.rules;
        Ok(PathAlgebra {
            algebra,
            basis,
            presentation: q.clone(),
            rules,
        })
    }

    pub fn vertex(&self, v: usize) -> usize {
        self.basis
            .iter()
            .position(|(s, a)| *s == v && a.is_empty())
            .expect("every vertex is a basis path")
    }

    /// Basis index of a path whose normal form is a single basis path with coefficient 1.
    pub fn index_of(&self, arrows: &[usize]) -> Option<usize> {
        let rw = Rewriter {
            q: &self.presentation,
            field: self.algebra.field(),
            rules: self.rules.clone(),
        };
        if arrows.is_empty() || arrows.iter().any(|&a| a >= self.presentation.arrows.len()) || !rw.composable(arrows) {
            return None;
        }
        let mut combo = Combo::new();
        rw.add(&mut combo, rw.path(arrows.to_vec()), rw.field.one());
        let nf = rw.normal_form(combo);
        let mut it = nf.iter();
        match (it.next(), it.next()) {
            (Some((p, c)), None) if c.is_one() => self
                .basis
                .iter()
                .position(|(s, a)| *s == p.source && *a == p.arrows),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Orients each relation so its largest path is rewritten into the others.
fn make_rules(q: &QuiverPresentation) -> Result<Vec<Rule>, PathError> {
    let composable = |arrows: &[usize]| {
        arrows.iter().all(|&a| a < q.arrows.len())
            && arrows.windows(2).all(|w| q.arrows[w[0]].target == q.arrows[w[1]].source)
    };
    let ends = |p: &[usize]| (q.arrows[p[0]].source, q.arrows[p[p.len() - 1]].target);
    let deg = |p: &[usize]| p.iter().map(|&a| q.arrows[a].degree).sum::<i64>();
    let mut rules = Vec::new();
    for (ri, rel) in q.relations.iter().enumerate() {
        if rel.iter().any(|(_, p)| p.is_empty() || !composable(p)) {
            return Err(PathError::BadPath { relation: ri });
        }
        let mut terms: Vec<(Scalar, Vec<usize>)> = rel.iter().filter(|(c, _)| !c.is_zero()).cloned().collect();
        let Some((_, first)) = terms.first().cloned() else {
            continue;
        };
        if terms.iter().any(|(_, p)| deg(p) != deg(&first) || ends(p) != ends(&first)) {
            return Err(PathError::InhomogeneousRelation { relation: ri });
        }
        terms.sort_by(|x, y| (y.1.len(), &y.1).cmp(&(x.1.len(), &x.1)));
        let (lc, lead) = terms.remove(0);
        let inv = lc.inv().expect("nonzero leading coefficient");
        let tail = terms.into_iter().map(|(c, p)| (-(&c * &inv), p)).collect();
        rules.push(Rule { lead, tail });
    }
    Ok(rules)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn arrow(s: usize, t: usize, label: &str, degree: i64) -> Arrow {
        Arrow {
            source: s,
            target: t,
            label: label.to_string(),
            degree,
        }
    }

    #[test]
    fn single_vertex_is_the_field() {
        let q = QuiverPresentation {
            vertices: 1,
            arrows: vec![],
            relations: vec![],
            max_length: None,
            arrow_involution: None,
        };
        let pa = PathAlgebra::build(&q, Field::Rational).unwrap();
        assert_eq!(pa.dim(), 1);
        assert_eq!(pa.algebra.identity(), &pa.algebra.basis_element(0));
    }

    #[test]
    fn loop_with_square_zero() {
        let f = Field::Rational;
        let q = QuiverPresentation {
            vertices: 1,
            arrows: vec![arrow(0, 0, "x", 2)],
            relations: vec![vec![(f.one(), vec![0, 0])]],
            max_length: None,
            arrow_involution: Some(vec![0]),
        };
        let pa = PathAlgebra::build(&q, f).unwrap();
        assert_eq!(pa.algebra.labels(), &["e1".to_string(), "x".to_string()]);
        assert_eq!(pa.algebra.degrees(), &[0, 2]);
        let x = pa.algebra.basis_element(1);
        assert!(pa.algebra.mul(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn free_loop_is_infinite() {
        let q = QuiverPresentation {
            vertices: 1,
            arrows: vec![arrow(0, 0, "x", 1)],
            relations: vec![],
            max_length: None,
            arrow_involution: None,
        };
        assert!(matches!(
            PathAlgebra::build(&q, Field::Rational),
            Err(PathError::InfiniteDimensional { .. })
        ));
    }

    #[test]
    fn inhomogeneous_relation_rejected() {
        let f = Field::Rational;
        let q = QuiverPresentation {
            vertices: 1,
            arrows: vec![arrow(0, 0, "x", 1)],
            relations: vec![vec![(f.one(), vec![0, 0]), (f.one(), vec![0])]],
            max_length: None,
            arrow_involution: None,
        };
        assert_eq!(
            PathAlgebra::build(&q, f).unwrap_err(),
            PathError::InhomogeneousRelation { relation: 0 }
        );
    }

    #[test]
    fn non_composable_relation_rejected() {
        let f = Field::Rational;
        let q = QuiverPresentation {
            vertices: 2,
            arrows: vec![arrow(0, 1, "a", 1)],
            relations: vec![vec![(f.one(), vec![0, 0])]],
            max_length: None,
            arrow_involution: None,
        };
        assert_eq!(PathAlgebra::build(&q, f).unwrap_err(), PathError::BadPath { relation: 0 });
    }

    #[test]
    fn commuting_loops_truncated() {
        // K[x, y]/(xy - yx, paths of length 3): basis 1, x, y, x^2, xy, y^2
        let f = Field::Rational;
        let q = QuiverPresentation {
            vertices: 1,
            arrows: vec![arrow(0, 0, "x", 1), arrow(0, 0, "y", 1)],
            relations: vec![vec![(f.one(), vec![1, 0]), (-f.one(), vec![0, 1])]],
            max_length: Some(2),
            arrow_involution: None,
        };
        let pa = PathAlgebra::build(&q, f).unwrap();
        assert_eq!(pa.dim(), 6);
        assert_eq!(pa.index_of(&[1, 0]), pa.index_of(&[0, 1]));
        assert_eq!(pa.algebra.center().dim(), 6);
    }
}

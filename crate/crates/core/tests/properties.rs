use cellsym_core::builders::{self, MatrixCellSpec};
use cellsym_core::cellular::{self, validate_cell_datum};
use cellsym_core::{Element, Field, Instance};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn matrix_spec() -> impl Strategy<Value = MatrixCellSpec> {
    (2usize..=4).prop_flat_map(|n| {
        (permutation(n), permutation(n), proptest::collection::vec(-2i64..=2, n)).prop_map(
            move |(sigma1, sigma2, deg)| MatrixCellSpec {
                n,
                sigma1,
                sigma2,
                deg,
            },
        )
    })
}

/// Specs that satisfy the criterion by construction: pick an involution and antisymmetric degrees.
fn good_matrix_spec() -> impl Strategy<Value = MatrixCellSpec> {
    (2usize..=4).prop_flat_map(|n| {
        (permutation(n), permutation(n), proptest::collection::vec(-2i64..=2, n)).prop_map(
            move |(order, sigma2, raw)| {
                // pair off order[0]<->order[1], order[2]<->order[3], ...; an odd leftover is fixed
                let mut sigma = vec![0; n];
                let mut deg = vec![0; n];
                for pair in order.chunks(2) {
                    match pair {
                        [a, b] => {
                            sigma[*a] = *b;
                            sigma[*b] = *a;
                            deg[*a] = raw[*a];
                            deg[*b] = -raw[*a];
                        }
                        [a] => sigma[*a] = *a,
                        _ => unreachable!(),
                    }
                }
                let sigma1 = (0..n).map(|i| sigma[sigma2[i]]).collect();
                MatrixCellSpec {
                    n,
                    sigma1,
                    sigma2,
                    deg,
                }
            },
        )
    })
}

fn small_element(dim: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-2i64..=2, dim)
}

fn element(f: Field, v: &[i64]) -> Element {
    Element::new(v.iter().map(|&x| f.from_i64(x)).collect())
}

fn zigzag3() -> Instance {
    builders::zigzag(Field::Rational, 3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_validation_matches_criterion(spec in matrix_spec()) {
        let inst = builders::matrix_algebra(Field::Rational, &spec).unwrap();
        let valid = validate_cell_datum(&inst.algebra, inst.cell.as_ref().unwrap()).passed();
        prop_assert_eq!(valid, spec.satisfies_criterion());
    }

    #[test]
    fn constructed_good_specs_validate(spec in good_matrix_spec()) {
        prop_assert!(spec.satisfies_criterion());
        let inst = builders::matrix_algebra(Field::prime(5).unwrap(), &spec).unwrap();
        prop_assert!(validate_cell_datum(&inst.algebra, inst.cell.as_ref().unwrap()).passed());
    }

    #[test]
    fn gram_determinant_ignores_member_order((n, perm) in (2usize..=5).prop_flat_map(|n| (Just(n), permutation(n)))) {
        let inst = builders::matrix_algebra(Field::Rational, &MatrixCellSpec::canonical(n)).unwrap();
        let cd = inst.cell.as_ref().unwrap();
        let permuted = cd.permute_members(0, &perm);
        let g = cellular::gram(&inst.algebra, cd, 0).unwrap();
        let h = cellular::gram(&inst.algebra, &permuted, 0).unwrap();
        prop_assert_eq!(g.determinant().unwrap(), h.determinant().unwrap());
    }

    #[test]
    fn cell_modules_are_modules(a in small_element(10), b in small_element(10), lambda in 0usize..4) {
        let inst = zigzag3();
        let alg = &inst.algebra;
        let w = cellular::cell_module(alg, inst.cell.as_ref().unwrap(), lambda);
        let (a, b) = (element(alg.field(), &a), element(alg.field(), &b));
        let ab = alg.mul(&a, &b).unwrap();
        prop_assert_eq!(w.act(&ab), w.act(&a).mul(&w.act(&b)).unwrap());
        prop_assert_eq!(w.act(alg.identity()), cellsym_core::Matrix::identity(alg.field(), w.dim()));
    }

    #[test]
    fn twisting_by_a_central_unit_keeps_the_higman_ideal(c in 1i64..=5, s in -3i64..=3) {
        let inst = zigzag3();
        let alg = &inst.algebra;
        let db = cellsym_core::DualBasis::new(alg, inst.trace.as_ref().unwrap()).unwrap();
        let socle = alg.basis_element(alg.index_of("a1a1'").unwrap());
        let z = alg.identity().scale(&alg.scalar(c)).add(&socle.scale(&alg.scalar(s)));
        let t = db.trace().twist(alg, &z).unwrap();
        let other = cellsym_core::DualBasis::new(alg, &t).unwrap();
        prop_assert_eq!(
            cellsym_core::ideals::higman(alg, &other),
            cellsym_core::ideals::higman(alg, &db)
        );
    }
}

#[test]
fn reports_are_deterministic() {
    let inst = zigzag3();
    assert_eq!(cellsym_core::verify_all(&inst), cellsym_core::verify_all(&inst.clone()));
}

//! Every builder output survives serialize -> parse, and the verifier cannot tell the copies apart.

use cellsym::format::{parse, serialize};
use cellsym_core::builders::{self, MatrixCellSpec};
use cellsym_core::{verify_all, Field, Instance};

fn all_builds() -> Vec<Instance> {
    let f7 = Field::prime(7).unwrap();
    let mut out = Vec::new();
    for field in [Field::Rational, f7] {
        out.push(builders::dual_numbers(field));
        for n in 2..=5 {
            if let Ok(z) = builders::zigzag(field, n) {
                out.push(z);
            }
            out.push(builders::matrix_algebra(field, &MatrixCellSpec::canonical(n)).unwrap());
        }
        let blocks: Vec<_> = [1, 2, 3]
            .iter()
            .map(|&k| builders::matrix_algebra(field, &MatrixCellSpec::canonical(k)).unwrap())
            .collect();
        out.push(builders::direct_sum(&blocks).unwrap());
        out.push(builders::local_socle(field, false));
        out.push(builders::local_socle(field, true));
    }
    out
}

#[test]
fn builder_outputs_round_trip() {
    for inst in all_builds() {
        let text = serialize(&inst);
        let back = parse(&text).unwrap_or_else(|e| panic!("{}: {e}", inst.id));
        assert_eq!(back, inst, "{}", inst.id);
        assert_eq!(serialize(&back), text, "{}", inst.id);
        assert_eq!(verify_all(&back), verify_all(&inst), "{}", inst.id);
    }
}

#[test]
fn zigzag_over_f7_skips_n_equal_6_only() {
    let f7 = Field::prime(7).unwrap();
    assert!(builders::zigzag(f7, 6).is_err());
    assert!(builders::zigzag(f7, 5).is_ok());
}

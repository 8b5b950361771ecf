//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
//! Run with `cargo test -p cellsym --test acceptance`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cellsym::format::serialize;
use cellsym_core::builders::{self, MatrixCellSpec};
use cellsym_core::cellular::validate_cell_datum;
use cellsym_core::dual::{self, DualBasis};
use cellsym_core::ideals::{self, IdealFamily, SemisimpleVerdict};
use cellsym_core::{verify_all, Algebra, CellDatum, Field, Instance, Subspace, Verdict};

type Outcome = Result<String, String>;

/// A named check with an optional wall-clock budget.
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn parts(inst: &Instance) -> Result<(&Algebra, &CellDatum, DualBasis), String> {
    let alg = &inst.algebra;
    let cd = inst.cell.as_ref().ok_or("no cell datum")?;
    let t = inst.trace.as_ref().ok_or("no trace")?;
    let db = DualBasis::new(alg, t).map_err(|e| e.to_string())?;
    Ok((alg, cd, db))
}

fn within(h: &Subspace, big: &Subspace) -> Result<bool, String> {
    big.contains(h).map_err(|e| e.to_string())
}

fn verdict(alg: &Algebra, cd: &CellDatum, db: &DualBasis, fam: &IdealFamily) -> Result<SemisimpleVerdict, String> {
    let k = dual::k_lambda(alg, cd, db).map_err(|e| e.to_string())?;
    Ok(ideals::semisimple_verdict(alg, cd, db, &k, fam))
}

fn zigzags() -> Vec<Instance> {
    (2..=5).map(|n| builders::zigzag(Field::Rational, n).unwrap()).collect()
}

fn matrices() -> Vec<Instance> {
    let mut out = Vec::new();
    for field in [Field::Rational, Field::prime(7).unwrap()] {
        for n in 2..=5 {
            out.push(builders::matrix_algebra(field, &MatrixCellSpec::canonical(n)).unwrap());
        }
    }
    out
}

fn dual_numbers_pipeline() -> Outcome {
    let inst = builders::dual_numbers(Field::Rational);
    let (alg, cd, db) = parts(&inst)?;
    let (one, x) = (alg.basis_element(0), alg.basis_element(1));
    ensure(db.y(0) == &x && db.y(1) == &one, || "dual basis is not {x, 1}".into())?;
    ensure(db.trace().degree() == Some(-2), || format!("trace degree {:?}", db.trace().degree()))?;
    let k = dual::k_lambda(alg, cd, &db).map_err(|e| e.to_string())?;
    ensure(k.len() == 2 && k.iter().all(|c| c.k.is_zero()), || "some k is nonzero".into())?;
    let fam = IdealFamily::compute(alg, cd, &db);
    let span_x = Subspace::coordinate(alg.field(), 2, [1]);
    ensure(fam.h == span_x && fam.l == span_x && fam.l_gr == span_x, || "H, L, L_gr are not span{x}".into())?;
    ensure(within(&fam.h, &alg.degree_component(2))?, || "H is not inside A_2".into())?;
    ensure(fam.h.dim() == 1 && fam.a0.dim() == 1, || "dimension count".into())?;
    let v = verdict(alg, cd, &db, &fam)?;
    ensure(v.criteria() == [false; 4] && v.agree(), || v.summary())?;
    Ok("y = {x, 1}, d = -2, k = 0, 0, H = L = L_gr = span{x}, not semisimple (4/4 agree)".into())
}

fn zigzag_family() -> Outcome {
    let mut dims = Vec::new();
    for inst in zigzags() {
        let n = (inst.algebra.dim() + 2) / 4;
        let (alg, cd, db) = parts(&inst)?;
        ensure(alg.dim() == 4 * n - 2, || format!("n = {n}: dim A = {}", alg.dim()))?;
        ensure(db.trace().degree() == Some(-2), || format!("n = {n}: trace degree"))?;
        let r = validate_cell_datum(alg, cd);
        ensure(r.passed(), || format!("n = {n}: cell datum invalid"))?;
        let k = dual::k_lambda(alg, cd, &db).map_err(|e| e.to_string())?;
        ensure(k.iter().all(|c| c.k.is_zero()), || format!("n = {n}: some k is nonzero"))?;
        let fam = IdealFamily::compute(alg, cd, &db);
        ensure(within(&fam.h, &alg.degree_component(2))?, || format!("n = {n}: H not inside A_2"))?;
        ensure(fam.a0.dim() == n && fam.h.dim() <= n, || format!("n = {n}: dim H = {}", fam.h.dim()))?;
        ensure(
            within(&fam.h_gr, &fam.l_gr)? && within(&fam.l_gr, &fam.z_a0)?,
            || format!("n = {n}: H_gr ⊆ L_gr ⊆ Z_A(A_0) fails"),
        )?;
        // a second symmetrizing trace: twist by 1 + (loop at the first vertex)
        let z = alg.identity().add(&alg.basis_element(alg.index_of("a1a1'").ok_or("no loop")?));
        let other = DualBasis::new(alg, &db.trace().twist(alg, &z).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let h2 = ideals::higman(alg, &other);
        ensure(h2 == fam.h, || format!("n = {n}: H moves under the twist"))?;
        dims.push((n, fam.h.dim()));
    }
    ensure(dims.iter().all(|&(n, h)| h == n), || format!("dim H not stable relative to n: {dims:?}"))?;
    let shown: Vec<String> = dims.iter().map(|(n, h)| format!("n={n}: dim H={h} (stated {n})")).collect();
    Ok(format!("{}; same under a twisted trace", shown.join(", ")))
}

fn matrix_family() -> Outcome {
    for inst in matrices() {
        let (alg, cd, db) = parts(&inst)?;
        let n = cd.members(0).len();
        let tag = format!("{} n = {n}", inst.id);
        ensure(validate_cell_datum(alg, cd).passed(), || format!("{tag}: invalid"))?;
        ensure(db.trace().degree() == Some(0), || format!("{tag}: trace degree"))?;
        // C_ab is the matrix unit e_{σ1⁻¹a, σ2⁻¹b}; its matrix trace is 1 exactly on the diagonal
        let spec = MatrixCellSpec::canonical(n);
        let pos = |p: &[usize], a: usize| p.iter().position(|&x| x == a).unwrap();
        for a in 0..n {
            for b in 0..n {
                let diagonal = pos(&spec.sigma1, a) == pos(&spec.sigma2, b);
                let v = &db.trace().values()[cd.index(0, a, b)];
                ensure(v.is_one() == diagonal && (diagonal || v.is_zero()), || {
                    format!("{tag}: τ(C_{a}{b}) = {v} differs from the matrix trace")
                })?;
            }
        }
        let k = dual::k_lambda(alg, cd, &db).map_err(|e| e.to_string())?;
        ensure(k.len() == 1 && k[0].k.is_one(), || format!("{tag}: k != 1"))?;
        ensure(dual::e_elements(alg, cd, &db) == vec![alg.identity().clone()], || format!("{tag}: e != 1"))?;
        let fam = IdealFamily::compute(alg, cd, &db);
        let diag = Subspace::span(
            alg.field(),
            n * n,
            (0..n).map(|i| alg.basis_element(cd.index(0, spec.sigma1[i], spec.sigma2[i]))),
        );
        ensure(fam.l == Subspace::span(alg.field(), n * n, [alg.identity()]), || format!("{tag}: L"))?;
        ensure(fam.l_gr == diag && fam.z_a0 == diag && diag.dim() == n, || format!("{tag}: L_gr, Z_A(A_0)"))?;
        let v = verdict(alg, cd, &db, &fam)?;
        ensure(v.criteria() == [true; 4], || format!("{tag}: {}", v.summary()))?;
    }
    Ok("n = 2..5 over Q and F7: valid, d = 0, τ = matrix trace, k = 1, e = 1, L = span{1}, L_gr = Z_A(A_0) = diagonal, semisimple 4/4".into())
}

fn random_spec(rng: &mut ChaCha8Rng) -> MatrixCellSpec {
    let n = rng.gen_range(2..=4);
    let mut sigma1: Vec<usize> = (0..n).collect();
    let mut sigma2: Vec<usize> = (0..n).collect();
    sigma1.shuffle(rng);
    sigma2.shuffle(rng);
    let deg = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
    MatrixCellSpec { n, sigma1, sigma2, deg }
}

/// Pairs off a random order into an involution σ and makes degrees antisymmetric along it.
fn good_spec(rng: &mut ChaCha8Rng) -> MatrixCellSpec {
    let n = rng.gen_range(2..=4);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut sigma = vec![0; n];
    let mut deg = vec![0; n];
    for pair in order.chunks(2) {
        if let [a, b] = pair {
            sigma[*a] = *b;
            sigma[*b] = *a;
            deg[*a] = rng.gen_range(-2..=2);
            deg[*b] = -deg[*a];
        } else {
            sigma[pair[0]] = pair[0];
        }
    }
    let mut sigma2: Vec<usize> = (0..n).collect();
    sigma2.shuffle(rng);
    let sigma1 = (0..n).map(|i| sigma[sigma2[i]]).collect();
    MatrixCellSpec { n, sigma1, sigma2, deg }
}

fn matrix_criterion_sweep() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut valid, mut invalid) = (0, 0);
    for i in 0..200 {
        let spec = if i % 2 == 0 { good_spec(&mut rng) } else { random_spec(&mut rng) };
        let inst = builders::matrix_algebra(Field::Rational, &spec).map_err(|e| e.to_string())?;
        let passed = validate_cell_datum(&inst.algebra, inst.cell.as_ref().unwrap()).passed();
        ensure(passed == spec.satisfies_criterion(), || format!("mismatch on {spec:?}"))?;
        if passed {
            valid += 1;
        } else {
            invalid += 1;
        }
    }
    ensure(valid >= 20 && invalid >= 20, || format!("coverage {valid} valid / {invalid} invalid"))?;
    Ok(format!("200 specs agree with the criterion: {valid} valid, {invalid} invalid"))
}

const IDENTITY_CLAIMS: &[&str] = &[
    "dual-mult-rules",
    "cell-dual-expand-left",
    "cell-dual-expand-right",
    "cell-dual-telescope-right",
    "cell-dual-telescope-left",
    "cell-dual-vanish-index-right",
    "cell-dual-vanish-index-left",
    "cell-dual-vanish-order-right",
    "cell-dual-vanish-order-left",
    "dual-degree-sum",
    "gram-dual-product-scalar",
    "diag-idempotency",
    "graded-idempotent-products",
];

fn identity_suites() -> Outcome {
    let mut instances = vec![builders::dual_numbers(Field::Rational)];
    instances.extend(zigzags());
    instances.extend(matrices());
    let mut passes = 0;
    let mut skips = Vec::new();
    for inst in &instances {
        let r = verify_all(inst);
        for id in IDENTITY_CLAIMS {
            let e = r.get(id).ok_or_else(|| format!("{id} missing from the report"))?;
            match &e.verdict {
                Verdict::Pass => passes += 1,
                Verdict::Fail => return Err(format!("{}: {id}: {}", inst.id, e.witness)),
                Verdict::Skipped(why) => skips.push(format!("{}:{id} ({why})", inst.id)),
            }
        }
    }
    // every identity must actually be exercised somewhere
    for id in IDENTITY_CLAIMS {
        let everywhere = instances.len();
        let skipped = skips.iter().filter(|s| s.contains(&format!(":{id} "))).count();
        ensure(skipped < everywhere, || format!("{id} never ran"))?;
    }
    Ok(format!(
        "{} instances, {passes} identity checks passed, 0 failed, {} skipped by hypothesis",
        instances.len(),
        skips.len()
    ))
}

fn higman_trace_independence() -> Outcome {
    for inst in zigzags() {
        let (alg, _, db) = parts(&inst)?;
        let z = alg.basis_element(alg.index_of("a1a1'").ok_or("no loop")?);
        ensure(alg.is_central(&z).is_none(), || "z is not central".into())?;
        ensure(alg.mul(&z, &z).map_err(|e| e.to_string())?.is_zero(), || "z is not nilpotent".into())?;
        let t = db.trace().twist(alg, &alg.identity().add(&z)).map_err(|e| e.to_string())?;
        ensure(&t != db.trace(), || "the twist did not change τ".into())?;
        let other = DualBasis::new(alg, &t).map_err(|e| e.to_string())?;
        ensure(ideals::higman(alg, &other) == ideals::higman(alg, &db), || format!("{}: H differs", inst.id))?;
    }
    Ok("zigzag n = 2..5: H(τ) = H(τ twisted by 1 + z), z = a1a1' central with z² = 0".into())
}

fn dual_cellularity_agreement() -> Outcome {
    let mut instances = vec![builders::dual_numbers(Field::Rational)];
    instances.extend(zigzags());
    let mut shown = Vec::new();
    for inst in &instances {
        let (alg, cd, db) = parts(inst)?;
        let dc = dual::check_dual_cellular(alg, cd, &db).ok_or("trace not homogeneous")?;
        ensure(dc.agree(), || format!("{}: criterion {} vs direct {:?}", inst.id, dc.criterion, dc.direct))?;
        shown.push(format!("{} {}", inst.id, if dc.criterion { "yes" } else { "no" }));
    }
    Ok(format!("criterion and direct test agree: {}", shown.join(", ")))
}

fn verify_json_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let docs = [
        builders::dual_numbers(Field::Rational),
        builders::zigzag(Field::Rational, 4).unwrap(),
        builders::matrix_algebra(Field::prime(7).unwrap(), &MatrixCellSpec::canonical(3)).unwrap(),
    ];
    for inst in &docs {
        let path = dir.path().join(format!("{}.json", inst.id));
        std::fs::write(&path, serialize(inst)).map_err(|e| e.to_string())?;
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_cellsym"))
                .args(["--json", "verify"])
                .arg(&path)
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure(a.status.success() && b.status.success(), || format!("{}: verify failed", inst.id))?;
        ensure(a.stdout == b.stdout, || format!("{}: outputs differ", inst.id))?;
    }
    Ok(format!("{} documents, byte-identical `verify --json` output", docs.len()))
}

fn main() -> ExitCode {
    let checks: &[Criterion] = &[
        ("AC1 dual numbers pipeline", dual_numbers_pipeline, Some(Duration::from_secs(1))),
        ("AC2 zigzag family", zigzag_family, Some(Duration::from_secs(10))),
        ("AC3 canonical matrix algebras", matrix_family, Some(Duration::from_secs(5))),
        ("AC4 matrix cell datum criterion sweep", matrix_criterion_sweep, None),
        ("AC5 identity suites", identity_suites, None),
        ("AC6 Higman ideal under a nilpotent twist", higman_trace_independence, None),
        ("AC7 dual cellularity criterion", dual_cellularity_agreement, None),
        ("AC8 verify --json determinism", verify_json_determinism, None),
    ];
    let mut failed = 0;
    for (name, check, limit) in checks {
        let start = Instant::now();
        let mut outcome = check();
        let took = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, limit) {
            if took > *limit {
                outcome = Err(format!("took {took:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS  {name}  [{took:.2?}]  {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  [{took:.2?}]  {why}");
            }
        }
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

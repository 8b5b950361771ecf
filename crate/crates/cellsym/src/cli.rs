//! Command-line front end. Exit codes: 0 success, 1 a checked claim failed, 2 bad input.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cellsym_core::builders::{self, MatrixCellSpec};
use cellsym_core::cellular::{self, validate_cell_datum, Family};
use cellsym_core::dual::{self, DualBasis};
use cellsym_core::ideals::{self, IdealFamily};
use cellsym_core::{verify_all, verify_claim, Algebra, CellDatum, Element, Instance, Report, Subspace};

use crate::format::{self, parse_field};
use crate::render;

#[derive(Parser, Debug)]
#[command(name = "cellsym", version, about = "Exact checks on graded symmetric cellular algebras")]
pub struct Cli {
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate the cell datum and the trace
    Check { file: PathBuf },
    /// Print the dual basis of the trace
    Dual { file: PathBuf },
    /// Print G(λ), G'(λ), det G(λ) and k_λ for every cell
    Gram { file: PathBuf },
    /// Print k_λ for every cell
    Klambda { file: PathBuf },
    /// Print bases of H(A), each H_c(A) and H_gr(A)
    Higman { file: PathBuf },
    /// Report containments among the ideals H, L, their graded versions and the centralizer of A_0
    Ideals { file: PathBuf },
    /// Run the semisimplicity tests and compare them
    Semisimple { file: PathBuf },
    /// Evaluate every registered claim, or just one
    Verify {
        file: PathBuf,
        #[arg(long)]
        claim: Option<String>,
    },
    /// Write a built example as a presentation document
    Example {
        #[arg(long, value_enum)]
        name: ExampleName,
        /// Size parameter for e36 and matn
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// q or f<p>
        #[arg(long, default_value = "q")]
        field: String,
        /// Comma-separated matrix sizes for sum
        #[arg(long, default_value = "2,3")]
        parts: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleName {
    /// Dual numbers with deg x = 2
    E31,
    /// Zigzag algebra on n vertices
    E36,
    /// Full matrix algebra with the canonical graded cellular basis
    Matn,
    /// Direct sum of canonical matrix algebras
    Sum,
}

/// What a successful run prints and whether every check passed.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

/// Input problems; reported on stderr with exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

fn input<E: std::fmt::Display>(e: E) -> InputError {
    InputError(e.to_string())
}

fn load(path: &PathBuf) -> Result<Instance, InputError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(input)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?
    };
    format::parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn need_trace(inst: &Instance) -> Result<DualBasis, InputError> {
    let t = inst.trace.as_ref().ok_or_else(|| InputError("this command needs a trace".into()))?;
    DualBasis::new(&inst.algebra, t).map_err(|e| InputError(format!("trace is not symmetrizing: {e}")))
}

fn need_cell(inst: &Instance) -> Result<&CellDatum, InputError> {
    let cd = inst.cell.as_ref().ok_or_else(|| InputError("this command needs a cell datum".into()))?;
    let r = validate_cell_datum(&inst.algebra, cd);
    let failure = r.failures().next().map(|e| format!("cell datum is invalid: {}: {}", e.id, e.witness));
    match failure {
        None => Ok(cd),
        Some(msg) => Err(InputError(msg)),
    }
}

fn emit(json_mode: bool, value: serde_json::Value, text: String, ok: bool) -> Output {
    let text = if json_mode {
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    } else {
        text
    };
    Output { text, ok }
}

fn subspace_basis(alg: &Algebra, s: &Subspace) -> Vec<String> {
    s.basis_vectors()
        .map(|v| cellular::describe(alg, &Element::new(v.to_vec())))
        .collect()
}

pub fn run(cli: &Cli) -> Result<Output, InputError> {
    let j = cli.json;
    match &cli.command {
        Command::Check { file } => {
            let inst = load(file)?;
            let alg = &inst.algebra;
            let mut r = Report::new(inst.id.clone());
            r.push(
                "algebra",
                "associative, unital, graded, with a degree-preserving anti-involution",
                cellsym_core::Verdict::Pass,
                format!("dimension {}", alg.dim()),
            );
            if let Some(cd) = &inst.cell {
                r.extend(validate_cell_datum(alg, cd));
            }
            if let Some(t) = &inst.trace {
                r.record(
                    "trace",
                    "τ is a symmetrizing trace",
                    t.check_symmetrizing(alg)
                        .map(|_| match t.degree() {
                            Some(d) => format!("homogeneous of degree {d}"),
                            None => "not homogeneous".into(),
                        })
                        .map_err(|e| e.to_string()),
                );
            }
            Ok(emit(j, render::report_json(&r), render::report_text(&r), r.passed()))
        }
        Command::Dual { file } => {
            let inst = load(file)?;
            let alg = &inst.algebra;
            let db = need_trace(&inst)?;
            let rows: Vec<(String, String)> = (0..alg.dim())
                .map(|i| (alg.label(i).to_string(), cellular::describe(alg, db.y(i))))
                .collect();
            let w = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
            let mut text = String::new();
            for (x, y) in &rows {
                writeln!(text, "{x:w$}  ->  {y}").unwrap();
            }
            let value = json!({
                "instance": inst.id,
                "dual": rows.iter().map(|(x, y)| json!({"x": x, "y": y})).collect::<Vec<_>>(),
            });
            Ok(emit(j, value, text, true))
        }
        Command::Gram { file } => {
            let inst = load(file)?;
            let alg = &inst.algebra;
            let cd = need_cell(&inst)?;
            let db = need_trace(&inst)?;
            let d = db.d_family(cd);
            let c = Family::cellular(alg);
            let mut text = String::new();
            let mut cells = Vec::new();
            let mut ok = true;
            for l in 0..cd.lambda_count() {
                let name = &cd.lambdas()[l];
                let g = cellular::family_gram(alg, cd, &c, l).map_err(input)?;
                let gp = cellular::family_gram(alg, cd, &d, l).map_err(input)?;
                let det = g.determinant().expect("square");
                let k = g.mul(&gp).expect("same size").scalar_multiple_of_identity();
                ok &= k.is_some();
                let k_text = k.map_or_else(|| "G G' is not scalar".to_string(), |k| k.to_string());
                writeln!(text, "cell {name}\n  G =\n{}  G' =\n{}  det G = {det}\n  k = {k_text}",
                    render::matrix_text(&g, "    "), render::matrix_text(&gp, "    ")).unwrap();
                cells.push(json!({
                    "lambda": name,
                    "gram": render::matrix_rows(&g),
                    "dual_gram": render::matrix_rows(&gp),
                    "det": det.to_string(),
                    "k": k_text,
                }));
            }
            Ok(emit(j, json!({"instance": inst.id, "cells": cells}), text, ok))
        }
        Command::Klambda { file } => {
            let inst = load(file)?;
            let alg = &inst.algebra;
            let cd = need_cell(&inst)?;
            let db = need_trace(&inst)?;
            match dual::k_lambda(alg, cd, &db) {
                Ok(ks) => {
                    let pairs: Vec<(String, String)> = ks
                        .iter()
                        .enumerate()
                        .map(|(l, c)| (cd.lambdas()[l].clone(), c.k.to_string()))
                        .collect();
                    let text = pairs.iter().map(|(l, k)| format!("k({l}) = {k}\n")).collect();
                    let value = json!({
                        "instance": inst.id,
                        "k": pairs.iter().map(|(l, k)| json!({"lambda": l, "k": k})).collect::<Vec<_>>(),
                    });
                    Ok(emit(j, value, text, true))
                }
                Err(e) => Ok(emit(
                    j,
                    json!({"instance": inst.id, "error": e.to_string()}),
                    format!("{e}\n"),
                    false,
                )),
            }
        }
        Command::Higman { file } => {
            let inst = load(file)?;
            let alg = &inst.algebra;
            let db = need_trace(&inst)?;
            let h = ideals::higman(alg, &db);
            let (pieces, total) = ideals::higman_graded(alg, &db);
            let mut text = format!("H: dim {}\n", h.dim());
            for b in subspace_basis(alg, &h) {
                writeln!(text, "  {b}").unwrap();
            }
            let mut graded = Vec::new();
            for (c, s) in &pieces {
                writeln!(text, "H_{c}: dim {}", s.dim()).unwrap();
                for b in subspace_basis(alg, s) {
                    writeln!(text, "  {b}").unwrap();
                }
                graded.push(json!({"degree": c, "dim": s.dim(), "basis": subspace_basis(alg, s)}));
            }
            writeln!(text, "H_gr: dim {}", total.dim()).unwrap();
            for b in subspace_basis(alg, &total) {
                writeln!(text, "  {b}").unwrap();
            }
            let value = json!({
                "instance": inst.id,
                "h": {"dim": h.dim(), "basis": subspace_basis(alg, &h)},
                "h_c": graded,
                "h_gr": {"dim": total.dim(), "basis": subspace_basis(alg, &total)},
            });
            Ok(emit(j, value, text, true))
        }
        Command::Ideals { file } => {
            let inst = load(file)?;
            let alg = &inst.algebra;
            let cd = need_cell(&inst)?;
            let db = need_trace(&inst)?;
            let fam = IdealFamily::compute(alg, cd, &db);
            let mut r = ideals::ideal_report(alg, &fam, db.trace().degree());
            r.instance = inst.id.clone();
            let dims = [
                ("H", fam.h.dim()),
                ("H_gr", fam.h_gr.dim()),
                ("L", fam.l.dim()),
                ("L_gr", fam.l_gr.dim()),
                ("Z", fam.z.dim()),
                ("A_0", fam.a0.dim()),
                ("Z_A(A_0)", fam.z_a0.dim()),
            ];
            let mut text = String::new();
            for (name, d) in dims {
                writeln!(text, "dim {name} = {d}").unwrap();
            }
            text.push_str(&render::report_text(&r));
            let mut value = render::report_json(&r);
            value["dims"] = dims.iter().map(|(n, d)| (n.to_string(), json!(d))).collect();
            Ok(emit(j, value, text, r.passed()))
        }
        Command::Semisimple { file } => {
            let inst = load(file)?;
            let alg = &inst.algebra;
            let cd = need_cell(&inst)?;
            let db = need_trace(&inst)?;
            let k = dual::k_lambda(alg, cd, &db).map_err(input)?;
            let fam = IdealFamily::compute(alg, cd, &db);
            let v = ideals::semisimple_verdict(alg, cd, &db, &k, &fam);
            let crit = v.criteria();
            // the regular-trace check is extra evidence in characteristic 0 and is listed in the summary line
            let total = crit.len();
            let agreeing = crit.iter().filter(|&&b| b == v.semisimple()).count();
            let head = format!(
                "semisimple: {} ({agreeing}/{total} criteria agree)",
                if v.semisimple() { "yes" } else { "no" }
            );
            let value = json!({
                "instance": inst.id,
                "semisimple": v.semisimple(),
                "agree": v.agree(),
                "cell_forms_nondegenerate": v.cell_forms_nondegenerate,
                "k_nonzero": v.k_nonzero,
                "products_span": v.products_span,
                "centralizer_equal": v.centralizer_equal,
                "regular_trace": v.regular_trace,
            });
            Ok(emit(j, value, format!("{head}\n{}\n", v.summary()), v.agree()))
        }
        Command::Verify { file, claim } => {
            let inst = load(file)?;
            match claim {
                Some(id) => {
                    let e = verify_claim(&inst, id).map_err(input)?;
                    let ok = e.verdict != cellsym_core::Verdict::Fail;
                    let mut r = Report::new(inst.id.clone());
                    r.entries.push(e.clone());
                    Ok(emit(j, render::entry_json(&e), render::report_text(&r), ok))
                }
                None => {
                    let r = verify_all(&inst);
                    Ok(emit(j, render::report_json(&r), render::report_text(&r), r.passed()))
                }
            }
        }
        Command::Example { name, n, field, parts } => {
            let f = parse_field(field).map_err(InputError)?;
            let inst = match name {
                ExampleName::E31 => builders::dual_numbers(f),
                ExampleName::E36 => builders::zigzag(f, *n).map_err(input)?,
                ExampleName::Matn => {
                    if *n == 0 {
                        return Err(InputError("matrix size must be at least 1".into()));
                    }
                    builders::matrix_algebra(f, &MatrixCellSpec::canonical(*n)).map_err(input)?
                }
                ExampleName::Sum => {
                    let sizes = parts
                        .split(',')
                        .map(|s| s.trim().parse::<usize>().ok().filter(|&k| k > 0))
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| InputError(format!("bad --parts {parts:?}, expected sizes like 2,3")))?;
                    let blocks = sizes
                        .iter()
                        .map(|&k| builders::matrix_algebra(f, &MatrixCellSpec::canonical(k)))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(input)?;
                    builders::direct_sum(&blocks).map_err(input)?
                }
            };
            Ok(Output {
                text: format::serialize(&inst),
                ok: true,
            })
        }
    }
}

//! Text and JSON renderings of reports and the small tables the CLI prints.

use cellsym_core::{Entry, Matrix, Report, Verdict};
use serde::Serialize;

#[derive(Serialize)]
struct EntryDoc<'a> {
    id: &'a str,
    statement: &'a str,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    witness: &'a str,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    instance: &'a str,
    passed: bool,
    entries: Vec<EntryDoc<'a>>,
}

fn entry_doc(e: &Entry) -> EntryDoc<'_> {
    EntryDoc {
        id: &e.id,
        statement: &e.statement,
        verdict: e.verdict.label(),
        reason: match &e.verdict {
            Verdict::Skipped(r) => Some(r),
            _ => None,
        },
        witness: &e.witness,
    }
}

pub fn report_json(r: &Report) -> serde_json::Value {
    serde_json::to_value(ReportDoc {
        instance: &r.instance,
        passed: r.passed(),
        entries: r.entries.iter().map(entry_doc).collect(),
    })
    .expect("reports always serialize")
}

pub fn entry_json(e: &Entry) -> serde_json::Value {
    serde_json::to_value(entry_doc(e)).expect("entries always serialize")
}

/// One line per entry with the id and verdict columns padded to a common width.
pub fn report_text(r: &Report) -> String {
    let id_w = r.entries.iter().map(|e| e.id.chars().count()).max().unwrap_or(0);
    let v_w = r.entries.iter().map(|e| e.verdict.label().len()).max().unwrap_or(0);
    let mut out = format!("instance: {}\n", r.instance);
    for e in &r.entries {
        let detail = match &e.verdict {
            Verdict::Skipped(reason) => reason.as_str(),
            _ => e.witness.as_str(),
        };
        let line = format!("{:id_w$}  {:v_w$}  {}", e.id, e.verdict.label(), detail);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let (pass, fail, skip) = r.entries.iter().fold((0, 0, 0), |(p, f, s), e| match e.verdict {
        Verdict::Pass => (p + 1, f, s),
        Verdict::Fail => (p, f + 1, s),
        Verdict::Skipped(_) => (p, f, s + 1),
    });
    out.push_str(&format!("{pass} passed, {fail} failed, {skip} skipped\n"));
    out
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

/// Right-aligned columns, rows on separate lines with a leading indent.
pub fn matrix_text(m: &Matrix, indent: &str) -> String {
    let rows = matrix_rows(m);
    let w = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|s| format!("{s:>w$}")).collect();
            format!("{indent}[{}]\n", cells.join(" "))
        })
        .collect()
}

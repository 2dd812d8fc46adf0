//! Text, CSV and JSON renderings of reports.

use oddmagic_core::{
    CancellationWitness, EnumerationResult, MagicReport, MonoidCheckReport, Square, TableARow,
};
use serde::Serialize;

use crate::document::Format;

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn join(values: &[i128]) -> String {
    values
        .iter()
        .map(i128::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn magic_report(s: &Square, r: &MagicReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("order: {}\n", s.order()));
    out.push_str(&format!("base: {}\n", r.base));
    out.push_str(&format!("sr: {}\n", join(&r.sums.row_sums)));
    out.push_str(&format!("sc: {}\n", join(&r.sums.col_sums)));
    out.push_str(&format!("sltdd: {}\n", r.sums.main_diagonal));
    out.push_str(&format!("slbud: {}\n", r.sums.anti_diagonal));
    out.push_str(&format!("entries: {}\n", pass(r.entries_ok)));
    out.push_str(&format!("rows: {}\n", pass(r.rows_ok)));
    out.push_str(&format!("columns: {}\n", pass(r.columns_ok)));
    out.push_str(&format!("main diagonal: {}\n", pass(r.main_diagonal_ok)));
    out.push_str(&format!("anti-diagonal: {}\n", pass(r.anti_diagonal_ok)));
    match r.magic_constant {
        Some(c) => out.push_str(&format!("constant: {c}\n")),
        None => out.push_str("constant: none\n"),
    }
    if r.is_magic() {
        out.push_str("result: magic\n");
    } else {
        out.push_str(&format!("result: not magic: {}\n", r.failures().join("; ")));
    }
    out
}

#[derive(Serialize)]
struct TableRecord {
    n: usize,
    n2: usize,
    case: &'static str,
    sr: Option<i64>,
    sc: Option<i64>,
    sltdd: i64,
    slbud: i64,
    sltdd_flagged: bool,
    slbud_flagged: bool,
}

impl From<&TableARow> for TableRecord {
    fn from(r: &TableARow) -> Self {
        TableRecord {
            n: r.n,
            n2: r.n * r.n,
            case: r.case.label(),
            sr: r.row_sum.map(|v| v as i64),
            sc: r.col_sum.map(|v| v as i64),
            sltdd: r.main_diagonal as i64,
            slbud: r.anti_diagonal as i64,
            sltdd_flagged: r.main_flagged,
            slbud_flagged: r.anti_flagged,
        }
    }
}

const HEADINGS: [&str; 7] = ["n", "n^2", "case", "sr", "sc", "sltdd", "slbud"];

pub fn table_a(rows: &[TableARow], format: Format) -> String {
    match format {
        Format::Json => {
            let records: Vec<TableRecord> = rows.iter().map(TableRecord::from).collect();
            let mut out = serde_json::to_string_pretty(&records).expect("table rows serialize");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut out = String::from("n,n2,case,sr,sc,sltdd,slbud,flagged\n");
            for r in rows {
                let rec = TableRecord::from(r);
                let flagged: Vec<&str> =
                    [(rec.sltdd_flagged, "sltdd"), (rec.slbud_flagged, "slbud")]
                        .into_iter()
                        .filter_map(|(f, name)| f.then_some(name))
                        .collect();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    rec.n,
                    rec.n2,
                    rec.case,
                    opt(rec.sr),
                    opt(rec.sc),
                    rec.sltdd,
                    rec.slbud,
                    flagged.join(" ")
                ));
            }
            out
        }
        Format::Ascii => ascii_table(rows),
    }
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn ascii_table(rows: &[TableARow]) -> String {
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            let mark = |v: i128, f: bool| if f { format!("{v}*") } else { v.to_string() };
            [
                r.n.to_string(),
                (r.n * r.n).to_string(),
                r.case.label().to_string(),
                opt(r.row_sum.map(|v| v as i64)),
                opt(r.col_sum.map(|v| v as i64)),
                mark(r.main_diagonal, r.main_flagged),
                mark(r.anti_diagonal, r.anti_flagged),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = HEADINGS.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |values: &[&str]| -> String {
        let parts: Vec<String> = values
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (v, &w))| {
                if i == 2 {
                    format!("{v:<w$}")
                } else {
                    format!("{v:>w$}")
                }
            })
            .collect();
        format!("| {} |\n", parts.join(" | "))
    };
    let rule = {
        let parts: Vec<String> = widths.iter().map(|&w| "-".repeat(w + 2)).collect();
        format!("+{}+\n", parts.join("+"))
    };

    let mut out = rule.clone();
    out.push_str(&line(&HEADINGS));
    out.push_str(&rule);
    let mut last_n = None;
    for (r, row) in rows.iter().zip(&cells) {
        if last_n.is_some_and(|n| n != r.n) {
            out.push_str(&rule);
        }
        last_n = Some(r.n);
        let refs: Vec<&str> = row.iter().map(String::as_str).collect();
        out.push_str(&line(&refs));
    }
    out.push_str(&rule);
    if rows.iter().any(|r| r.main_flagged || r.anti_flagged) {
        out.push_str("* diagonal sum breaks the pattern expected for its case\n");
    }
    out
}

fn compact(s: &Square) -> String {
    let rows: Vec<String> = s
        .rows()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(i64::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn enumeration(r: &EnumerationResult) -> String {
    let mut out = format!("count={}\n", r.count());
    for s in &r.found {
        let cells: Vec<String> = s.entries().iter().map(i64::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn left_search(w: &CancellationWitness, header: &str) -> String {
    let mut out = format!("{header}\n");
    match &w.instance {
        Some([a, b, c]) if w.counterexample_found() => {
            out.push_str(&format!(
                "left-cancellation counterexample after {} cases\n",
                w.cases_checked
            ));
            out.push_str(&format!("A ({0}x{0}): {1}\n", a.order(), compact(a)));
            out.push_str(&format!("B ({0}x{0}): {1}\n", b.order(), compact(b)));
            out.push_str(&format!("C ({0}x{0}): {1}\n", c.order(), compact(c)));
        }
        _ => out.push_str(&format!(
            "no counterexample in range ({} cases)\n",
            w.cases_checked
        )),
    }
    out
}

pub fn monoid_check(r: &MonoidCheckReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("squares: {}\n", r.squares));
    out.push_str(&format!("identity failures: {}\n", r.identity_failures));
    out.push_str(&format!(
        "associativity failures: {} of {} triples\n",
        r.associativity_failures, r.associativity_triples
    ));
    out.push_str(&format!(
        "right-cancellation counterexamples: {}\n",
        r.right_counterexamples
    ));
    out.push_str(&format!(
        "left-cancellation counterexamples: {}\n",
        r.left_counterexamples
    ));
    for [a, b, c] in &r.left_witnesses {
        out.push_str(&format!(
            "  A={} B={} C={}\n",
            compact(a),
            compact(b),
            compact(c)
        ));
    }
    out
}

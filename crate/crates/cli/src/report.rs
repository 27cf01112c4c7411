//! Benchmark report rendering (CSV, markdown, JSON) and CSV parsing.

use coneproj::copositivity::{BenchmarkReport, BenchmarkRow, Group};
use coneproj::solvers::Algorithm;
use serde::Serialize;

use crate::numfmt::fmt_f64;

pub const CSV_HEADER: &str = "size,group,algorithm,success,avg_iter";

pub fn to_csv(report: &BenchmarkReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &report.rows {
        let avg = r.avg_iter.map(fmt_f64).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{avg}\n",
            r.size,
            r.group.label(),
            r.algorithm,
            r.success
        ));
    }
    out
}

pub fn parse_csv(text: &str) -> Result<BenchmarkReport, String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == CSV_HEADER => {}
        _ => return Err(format!("missing header `{CSV_HEADER}`")),
    }
    let mut rows = Vec::new();
    for (k, line) in lines.enumerate() {
        let bad = |what: &str| format!("line {}: invalid {what}", k + 2);
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 5 {
            return Err(bad("field count"));
        }
        let avg_iter = match fields[4] {
            "" => None,
            s => Some(s.parse().map_err(|_| bad("avg_iter"))?),
        };
        rows.push(BenchmarkRow {
            size: fields[0].parse().map_err(|_| bad("size"))?,
            group: Group::from_label(fields[1]).ok_or_else(|| bad("group"))?,
            algorithm: fields[2].parse().map_err(|_| bad("algorithm"))?,
            success: fields[3].parse().map_err(|_| bad("success"))?,
            avg_iter,
        });
    }
    Ok(BenchmarkReport { rows })
}

fn display_name(a: Algorithm) -> &'static str {
    match a {
        Algorithm::Fista => "FISTA",
        Algorithm::Pgm => "PGM",
        Algorithm::Lange => "Lange",
        Algorithm::LiPong => "Li-Pong",
        Algorithm::Dr => "DR",
    }
}

/// One row per (size, group) with a success and average-iteration column
/// per algorithm, preceded by `note` as a paragraph.
pub fn to_markdown(report: &BenchmarkReport, algorithms: &[Algorithm], note: &str) -> String {
    let mut out = String::new();
    if !note.is_empty() {
        out.push_str(note);
        out.push_str("\n\n");
    }
    out.push_str("| Size | Copositive |");
    for &a in algorithms {
        let name = display_name(a);
        out.push_str(&format!(" {name} succ | {name} avg iter |"));
    }
    out.push_str("\n|---|---|");
    out.push_str(&"---|---|".repeat(algorithms.len()));
    out.push('\n');

    let mut keys: Vec<(usize, Group)> = Vec::new();
    for r in &report.rows {
        if !keys.contains(&(r.size, r.group)) {
            keys.push((r.size, r.group));
        }
    }
    for (size, group) in keys {
        let yes = if group.is_copositive() { "Yes" } else { "No" };
        out.push_str(&format!("| {size}x{size} | {yes} |"));
        for &a in algorithms {
            match report
                .rows
                .iter()
                .find(|r| r.size == size && r.group == group && r.algorithm == a)
            {
                Some(r) => {
                    let avg = r.avg_iter.map(|v| format!("{v:.1}")).unwrap_or("-".into());
                    out.push_str(&format!(" {} | {avg} |", r.success));
                }
                None => out.push_str(" - | - |"),
            }
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    size: usize,
    group: &'a str,
    algorithm: &'a str,
    success: usize,
    avg_iter: Option<f64>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    rows: Vec<JsonRow<'a>>,
}

pub fn to_json(report: &BenchmarkReport) -> String {
    let doc = JsonReport {
        rows: report
            .rows
            .iter()
            .map(|r| JsonRow {
                size: r.size,
                group: r.group.label(),
                algorithm: r.algorithm.id(),
                success: r.success,
                avg_iter: r.avg_iter,
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

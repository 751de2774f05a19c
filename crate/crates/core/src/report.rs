//! Text renderings: analysis reports, census tables and Graphviz export.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::{AnalysisReport, Property};
use crate::census::{CensusRow, ImplicationReport, MinimalResult};
use crate::codim::CodimResult;
use crate::poset::SpectralPoset;

/// Schema identifier carried by every report document.
pub const REPORT_SCHEMA: &str = "biequi.report/1";
pub const CENSUS_SCHEMA: &str = "biequi.census/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// `key: value` lines.
    #[default]
    Text,
    /// JSON.
    Structured,
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    schema: &'static str,
    space: &'a str,
    points: usize,
    report: &'a AnalysisReport,
    codim: &'a CodimResult,
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Renders a classification together with the codimension-function result.
/// Field order is fixed.
pub fn emit_report(name: &str, poset: &SpectralPoset, report: &AnalysisReport, codim: &CodimResult, format: Format) -> String {
    if format == Format::Structured {
        let doc = ReportDocument { schema: REPORT_SCHEMA, space: name, points: poset.len(), report, codim };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    writeln!(out, "schema: {REPORT_SCHEMA}").unwrap();
    writeln!(out, "space: {name}").unwrap();
    writeln!(out, "points: {}", poset.len()).unwrap();
    writeln!(out, "dimension: {}", report.dimension).unwrap();
    writeln!(out, "maximal_chain_lengths: {}", join(&report.maximal_chain_lengths)).unwrap();
    for p in Property::ALL {
        writeln!(out, "{}: {}", p.name(), yes(report.get(p))).unwrap();
    }
    if report.noetherian_violations.is_empty() {
        writeln!(out, "noetherian_violations: none").unwrap();
    } else {
        let pairs: Vec<String> = report.noetherian_violations.iter().map(|(a, b)| format!("{a} < {b}")).collect();
        writeln!(out, "noetherian_violations: {}", pairs.join("; ")).unwrap();
    }
    if report.witnesses.is_empty() {
        writeln!(out, "witnesses: none").unwrap();
    } else {
        writeln!(out, "witnesses:").unwrap();
        for w in &report.witnesses {
            writeln!(out, "  {}: {w}", w.property()).unwrap();
        }
    }
    match codim {
        CodimResult::Assignment(values) => {
            writeln!(out, "codim_function:").unwrap();
            for (point, v) in values {
                writeln!(out, "  {point}: {v}").unwrap();
            }
        }
        CodimResult::Certificate(cert) => {
            writeln!(out, "codim_function: none").unwrap();
            writeln!(out, "certificate: {cert}").unwrap();
        }
    }
    out
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph of the Hasse diagram, drawn bottom to top. Infinite
/// families are drawn with a double border and a `∞` label.
pub fn emit_hasse_dot(name: &str, poset: &SpectralPoset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", dot_quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, p) in poset.points().iter().enumerate() {
        if poset.is_infinite(i) {
            writeln!(out, "  {} [label={}, peripheries=2];", dot_quote(p), dot_quote(&format!("{p} ∞"))).unwrap();
        } else {
            writeln!(out, "  {};", dot_quote(p)).unwrap();
        }
    }
    for (lo, up) in poset.covers() {
        writeln!(out, "  {} -> {};", dot_quote(lo), dot_quote(up)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct CensusDocument<'a> {
    schema: &'static str,
    n: usize,
    classes: usize,
    properties: Vec<&'static str>,
    rows: Vec<CensusJsonRow<'a>>,
}

#[derive(Serialize)]
struct CensusJsonRow<'a> {
    dimension: usize,
    properties: &'a [bool],
    count: usize,
}

pub fn emit_census(n: usize, rows: &[CensusRow], format: Format) -> String {
    let total: usize = rows.iter().map(|r| r.count).sum();
    if format == Format::Structured {
        let doc = CensusDocument {
            schema: CENSUS_SCHEMA,
            n,
            classes: total,
            properties: Property::CENSUS.iter().map(|p| p.name()).collect(),
            rows: rows
                .iter()
                .map(|r| CensusJsonRow { dimension: r.dimension, properties: &r.property_vector, count: r.count })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("census serializes");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    write!(out, "{:>2} {:>3}", "n", "dim").unwrap();
    for p in Property::CENSUS {
        write!(out, " {:>7}", p.abbrev()).unwrap();
    }
    writeln!(out, " {:>7}", "count").unwrap();
    for r in rows {
        write!(out, "{:>2} {:>3}", r.n_points, r.dimension).unwrap();
        for &b in &r.property_vector {
            write!(out, " {:>7}", if b { "T" } else { "F" }).unwrap();
        }
        writeln!(out, " {:>7}", r.count).unwrap();
    }
    writeln!(out, "total: {total} isomorphism classes").unwrap();
    out
}

pub fn emit_implications(report: &ImplicationReport) -> String {
    let mut out = String::new();
    writeln!(out, "n = {}: {} posets checked", report.n, report.posets_checked).unwrap();
    for s in &report.statements {
        let status = if s.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "  {status} {} ({} violations): {}", s.name, s.violations, s.description).unwrap();
        if let Some(p) = &s.first_violation {
            writeln!(out, "       first violation: {p:?}").unwrap();
        }
    }
    out
}

pub fn emit_minimal(result: Option<&MinimalResult>, cap: usize) -> String {
    let mut out = String::new();
    match result {
        None => writeln!(out, "none with at most {cap} points").unwrap(),
        Some(m) => {
            writeln!(out, "# minimal size: {}", m.n).unwrap();
            writeln!(out, "# classes at that size: {}", m.all_witnesses.len()).unwrap();
            out.push_str(&crate::dsl::render("WITNESS", &m.witness));
        }
    }
    out
}

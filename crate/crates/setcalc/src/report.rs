//! Text and JSON rendering.
//!
//! JSON output carries exact rationals as strings and leaves out timings, so
//! identical inputs give byte-identical reports.

use serde::Serialize;
use setcalc_core::subcalc::SubdiffResult;
use setcalc_core::verifier::{CheckReport, Comparison, Verdict};
use setcalc_core::{PolySet, Polyhedron, RatVec};

use crate::run::{NormalCones, OracleRow, Outcome};

#[derive(Serialize)]
pub struct PieceJson {
    pub vertices: Vec<Vec<String>>,
    pub rays: Vec<Vec<String>>,
    pub lines: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct SetJson {
    pub dim: usize,
    pub text: String,
    pub pieces: Vec<PieceJson>,
}

fn coords(v: &RatVec) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn piece_json(p: &Polyhedron) -> PieceJson {
    PieceJson {
        vertices: p.vertices().iter().map(coords).collect(),
        rays: p.rays().iter().map(coords).collect(),
        lines: p.lines().iter().map(coords).collect(),
    }
}

pub fn set_json(s: &PolySet) -> SetJson {
    SetJson { dim: s.dim(), text: set_text(s), pieces: s.pieces().iter().map(piece_json).collect() }
}

/// Human-readable form; finite subsets of the line print as `{a, b}`.
pub fn set_text(s: &PolySet) -> String {
    let singletons: Option<Vec<_>> = s
        .pieces()
        .iter()
        .map(|p| (s.dim() == 1 && p.vertices().len() == 1 && p.rays().is_empty() && p.lines().is_empty()).then(|| p.vertices()[0][0].clone()))
        .collect();
    match singletons {
        Some(mut pts) if pts.len() > 1 => {
            pts.sort();
            let inner: Vec<String> = pts.iter().map(ToString::to_string).collect();
            format!("{{{}}}", inner.join(", "))
        }
        _ => s.to_string(),
    }
}

#[derive(Serialize)]
struct ComparisonJson {
    label: String,
    verdict: &'static str,
    lhs: SetJson,
    rhs: SetJson,
    witnesses: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct HypothesisJson {
    name: String,
    status: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct CheckJson {
    index: usize,
    kind: &'static str,
    arguments: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    passed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conclusion_guaranteed: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    hypotheses: Vec<HypothesisJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    comparisons: Vec<ComparisonJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
    errors: usize,
}

#[derive(Serialize)]
struct ChecksJson {
    checks: Vec<CheckJson>,
    summary: Summary,
}

fn comparison_json(c: &Comparison) -> ComparisonJson {
    ComparisonJson {
        label: c.label.clone(),
        verdict: c.verdict.as_str(),
        lhs: set_json(&c.lhs),
        rhs: set_json(&c.rhs),
        witnesses: c.witnesses.iter().map(coords).collect(),
    }
}

fn check_json(o: &Outcome) -> CheckJson {
    let mut out = CheckJson {
        index: o.index,
        kind: o.spec.kind(),
        arguments: o.spec.describe(),
        error: None,
        verdict: None,
        passed: None,
        conclusion_guaranteed: None,
        hypotheses: Vec::new(),
        comparisons: Vec::new(),
        notes: Vec::new(),
    };
    match &o.result {
        Err(e) => out.error = Some(e.to_string()),
        Ok(r) => {
            out.verdict = Some(r.verdict().as_str());
            out.passed = Some(r.passed());
            out.conclusion_guaranteed = Some(r.conclusion_guaranteed());
            out.hypotheses = r
                .hypotheses
                .iter()
                .map(|h| HypothesisJson { name: h.name.clone(), status: h.status.as_str(), detail: h.detail.clone() })
                .collect();
            out.comparisons = r.comparisons.iter().map(comparison_json).collect();
            out.notes = r.notes.clone();
        }
    }
    out
}

fn summary(outcomes: &[Outcome]) -> Summary {
    let errors = outcomes.iter().filter(|o| o.result.is_err()).count();
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    Summary { total: outcomes.len(), passed, failed: outcomes.len() - passed - errors, errors }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn checks_json(outcomes: &[Outcome]) -> String {
    to_json(&ChecksJson { checks: outcomes.iter().map(check_json).collect(), summary: summary(outcomes) })
}

/// One-line verdict such as `equality-holds, LHS=RHS=[-1, 1]`.
pub fn verdict_line(c: &Comparison) -> String {
    let (l, r) = (set_text(&c.lhs), set_text(&c.rhs));
    let witness = c.witnesses.first().map(ToString::to_string).unwrap_or_default();
    match c.verdict {
        Verdict::EqualityHolds => format!("equality-holds, LHS=RHS={l}"),
        Verdict::InclusionHolds => format!("inclusion-holds, LHS={l} ⊊ RHS={r}, witness {witness} ∈ RHS∖LHS"),
        Verdict::InclusionFails => format!("inclusion-fails, LHS={l} ⊄ RHS={r}, witness {witness} ∈ LHS∖RHS"),
        Verdict::Vacuous => format!("vacuous, LHS=∅, RHS={r}"),
    }
}

/// Left-aligned columns, measured in characters.
fn table(header: &[&str], rows: &[Vec<String>], indent: &str) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut out = String::from(indent);
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            out.push_str(cell);
            if i + 1 < cells.len() {
                out.push_str(&" ".repeat(w - cell.chars().count() + 2));
            }
        }
        out.push('\n');
        out
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn report_text(r: &CheckReport) -> String {
    let mut out = format!("  {}\n", verdict_line(&r.comparisons[0]));
    let rows: Vec<Vec<String>> = r
        .comparisons
        .iter()
        .map(|c| {
            let w = c.witnesses.first().map(ToString::to_string).unwrap_or_else(|| "-".into());
            vec![c.label.clone(), c.verdict.as_str().into(), set_text(&c.lhs), set_text(&c.rhs), w]
        })
        .collect();
    out.push_str(&table(&["comparison", "verdict", "LHS", "RHS", "witness"], &rows, "  "));
    if !r.hypotheses.is_empty() {
        let rows: Vec<Vec<String>> =
            r.hypotheses.iter().map(|h| vec![h.name.clone(), h.status.as_str().into(), h.detail.clone()]).collect();
        out.push_str(&table(&["hypothesis", "status", "detail"], &rows, "  "));
    }
    for n in &r.notes {
        out.push_str(&format!("  note: {n}\n"));
    }
    if let Some(t) = r.elapsed {
        out.push_str(&format!("  time: {:.1} ms\n", t.as_secs_f64() * 1e3));
    }
    out
}

pub fn checks_text(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        out.push_str(&format!("[{}] {} ({})\n", o.index + 1, o.spec.kind(), o.spec.describe()));
        match &o.result {
            Ok(r) => out.push_str(&report_text(r)),
            Err(e) => out.push_str(&format!("  error: {e}\n")),
        }
    }
    let s = summary(outcomes);
    out.push_str(&format!("{} checks: {} passed, {} failed, {} errors\n", s.total, s.passed, s.failed, s.errors));
    out
}

#[derive(Serialize)]
struct NormalConesJson {
    set: String,
    point: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regular: Option<SetJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    limiting: Option<SetJson>,
}

pub fn normal_cones_json(set: &str, point: &RatVec, cones: &NormalCones, regular: bool, limiting: bool) -> String {
    to_json(&NormalConesJson {
        set: set.into(),
        point: coords(point),
        regular: regular.then(|| set_json(&cones.regular)),
        limiting: limiting.then(|| set_json(&cones.limiting)),
    })
}

pub fn normal_cones_text(cones: &NormalCones, regular: bool, limiting: bool) -> String {
    let mut out = String::new();
    if regular {
        out.push_str(&format!("regular:  {}\n", set_text(&cones.regular)));
    }
    if limiting {
        out.push_str(&format!("limiting: {}\n", set_text(&cones.limiting)));
    }
    out
}

#[derive(Serialize)]
struct SubdiffJson {
    map: String,
    cone: String,
    point: Vec<String>,
    kind: &'static str,
    degenerate_order: bool,
    set: SetJson,
}

pub fn subdiff_json(map: &str, cone: &str, point: &RatVec, kind: &'static str, r: &SubdiffResult) -> String {
    to_json(&SubdiffJson {
        map: map.into(),
        cone: cone.into(),
        point: coords(point),
        kind,
        degenerate_order: r.degenerate_order,
        set: set_json(&r.set),
    })
}

pub fn subdiff_text(r: &SubdiffResult) -> String {
    let mut out = format!("{}\n", set_text(&r.set));
    if r.degenerate_order {
        out.push_str("note: trivial ordering cone, the dual constraint on z* is vacuous\n");
    }
    out
}

#[derive(Serialize)]
struct OracleJson {
    set: String,
    point: String,
    exact: SetJson,
    sound: bool,
    non_members: Vec<Vec<String>>,
    generators: usize,
    covered: usize,
}

pub fn oracle_json(rows: &[OracleRow]) -> String {
    let rows: Vec<OracleJson> = rows
        .iter()
        .map(|r| OracleJson {
            set: r.set.clone(),
            point: r.point.clone(),
            exact: set_json(&r.exact),
            sound: r.comparison.sound(),
            non_members: r.comparison.non_members.iter().map(coords).collect(),
            generators: r.comparison.generators,
            covered: r.comparison.covered,
        })
        .collect();
    to_json(&rows)
}

pub fn oracle_text(rows: &[OracleRow]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.set.clone(),
                r.point.clone(),
                set_text(&r.exact),
                if r.comparison.sound() { "yes".into() } else { format!("no ({})", r.comparison.non_members[0]) },
                format!("{}/{}", r.comparison.covered, r.comparison.generators),
                format!("{:.1} ms", r.elapsed.as_secs_f64() * 1e3),
            ]
        })
        .collect();
    table(&["set", "point", "limiting normal cone", "sound", "covered", "time"], &body, "")
}

//! Executable sum and chain rules.
//!
//! Every check computes both sides of a calculus rule exactly, classifies
//! the hypotheses it can decide, and returns a [`CheckReport`]. A violated
//! hypothesis never short-circuits a check: both sides are still computed
//! and the report is marked as not guaranteed by the theorem.

mod chain;
mod sum;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use crate::error::Result;
use crate::exactgeom::{Constraint, Polyhedron, RatVec, Rational};
use crate::polyset::{refine, PolySet};
use crate::setmap::PolyMap;

pub use chain::{
    check_chain_finite_dim_qc, check_chain_rule, check_epi_chain_identity, check_single_valued_chain,
    check_wellposed_chain,
};
pub use sum::{
    check_epi_sum_identity, check_indicator_identity, check_qualification_sum, check_restricted_sum,
    check_sum_rule,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HypothesisStatus {
    Verified,
    Violated,
    /// Supported by a sufficient-condition test that is not a certificate.
    Heuristic,
    /// Automatic in finite dimensions for closed polyhedral data.
    AssumedFiniteDim,
}

impl HypothesisStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            HypothesisStatus::Verified => "verified",
            HypothesisStatus::Violated => "violated",
            HypothesisStatus::Heuristic => "heuristic",
            HypothesisStatus::AssumedFiniteDim => "assumed-finite-dim",
        }
    }
}

impl fmt::Display for HypothesisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
    pub detail: String,
}

impl Hypothesis {
    pub fn new(name: &str, status: HypothesisStatus, detail: impl Into<String>) -> Self {
        Hypothesis { name: name.into(), status, detail: detail.into() }
    }

    fn finite_dim(name: &str) -> Self {
        Hypothesis::new(name, HypothesisStatus::AssumedFiniteDim, "automatic for closed polyhedral data")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    InclusionHolds,
    EqualityHolds,
    InclusionFails,
    /// The left-hand side is empty.
    Vacuous,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::InclusionHolds => "inclusion-holds",
            Verdict::EqualityHolds => "equality-holds",
            Verdict::InclusionFails => "inclusion-fails",
            Verdict::Vacuous => "vacuous",
        }
    }

    pub fn holds(self) -> bool {
        self != Verdict::InclusionFails
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One tested inclusion `lhs ⊆ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub lhs: PolySet,
    pub rhs: PolySet,
    pub verdict: Verdict,
    /// A point of `lhs ∖ rhs` when the inclusion fails, or of `rhs ∖ lhs` when it is strict.
    pub witnesses: Vec<RatVec>,
}

impl Comparison {
    pub fn new(label: &str, lhs: PolySet, rhs: PolySet) -> Result<Comparison> {
        let (verdict, witnesses) = if let Some(w) = lhs.uncovered_point(&rhs)? {
            (Verdict::InclusionFails, alloc::vec![w])
        } else if lhs.is_empty() {
            (Verdict::Vacuous, Vec::new())
        } else if let Some(w) = rhs.uncovered_point(&lhs)? {
            (Verdict::InclusionHolds, alloc::vec![w])
        } else {
            (Verdict::EqualityHolds, Vec::new())
        };
        Ok(Comparison { label: label.into(), lhs, rhs, verdict, witnesses })
    }
}

pub const NOT_GUARANTEED: &str = "conclusion not guaranteed by the theorem";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_id: String,
    pub hypotheses: Vec<Hypothesis>,
    /// The main inclusion first, then any companion inclusions (singular, regular, reverse).
    pub comparisons: Vec<Comparison>,
    pub notes: Vec<String>,
    /// Wall-clock time, filled in by callers that have a clock.
    pub elapsed: Option<Duration>,
}

impl CheckReport {
    fn new(check_id: &str, hypotheses: Vec<Hypothesis>, comparisons: Vec<Comparison>) -> Self {
        CheckReport { check_id: check_id.into(), hypotheses, comparisons, notes: Vec::new(), elapsed: None }
    }

    /// Adds the standard flag when some hypothesis is violated.
    fn finalize(mut self) -> Self {
        if !self.conclusion_guaranteed() {
            self.notes.push(NOT_GUARANTEED.into());
        }
        self
    }

    fn primary(&self) -> &Comparison {
        &self.comparisons[0]
    }

    pub fn lhs(&self) -> &PolySet {
        &self.primary().lhs
    }

    pub fn rhs(&self) -> &PolySet {
        &self.primary().rhs
    }

    pub fn verdict(&self) -> Verdict {
        self.primary().verdict
    }

    pub fn witnesses(&self) -> &[RatVec] {
        &self.primary().witnesses
    }

    pub fn comparison(&self, label: &str) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.label == label)
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }

    /// No hypothesis was found violated.
    pub fn conclusion_guaranteed(&self) -> bool {
        self.hypotheses.iter().all(|h| h.status != HypothesisStatus::Violated)
    }

    /// True iff no tested inclusion failed.
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.verdict.holds())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualificationStatus {
    pub intersects_trivially: bool,
    pub witness: Option<RatVec>,
}

impl QualificationStatus {
    /// Tests `a ∩ b = {0}` for two cone unions.
    pub fn of_cones(a: &PolySet, b: &PolySet) -> Result<Self> {
        let witness = a.intersect(b)?.nonzero_point();
        Ok(QualificationStatus { intersects_trivially: witness.is_none(), witness })
    }

    fn hypothesis(&self, name: &str) -> Hypothesis {
        match &self.witness {
            None => Hypothesis::new(name, HypothesisStatus::Verified, "trivial intersection"),
            Some(w) => Hypothesis::new(name, HypothesisStatus::Violated, alloc::format!("common nonzero element {w}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemicompactStatus {
    VerifiedBounded,
    Unknown,
    Vacuous,
}

impl SemicompactStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SemicompactStatus::VerifiedBounded => "verified-bounded",
            SemicompactStatus::Unknown => "unknown",
            SemicompactStatus::Vacuous => "vacuous",
        }
    }

    fn hypothesis(self, name: &str) -> Hypothesis {
        let status = match self {
            SemicompactStatus::VerifiedBounded => HypothesisStatus::Verified,
            _ => HypothesisStatus::Heuristic,
        };
        Hypothesis::new(name, status, self.as_str())
    }
}

/// Inner semicompactness via uniform boundedness of `aux` over the unit box around `point`.
pub fn inner_semicompact_heuristic(aux: &PolyMap, point: &[Rational]) -> Result<SemicompactStatus> {
    crate::error::check_dim(aux.dom_dim(), point.len())?;
    if aux.eval(point)?.is_empty() {
        return Ok(SemicompactStatus::Vacuous);
    }
    let radius = Rational::from_integer(1.into());
    let cube = Polyhedron::cube(&RatVec(point.to_vec()), &radius);
    let window = cube.product(&Polyhedron::universe(aux.rng_dim()));
    let local = aux.graph().intersect_polyhedron(&window)?;
    Ok(if local.pieces().iter().all(Polyhedron::is_bounded) {
        SemicompactStatus::VerifiedBounded
    } else {
        SemicompactStatus::Unknown
    })
}

/// Constraints of the graph pieces with the coordinates in `fixed` frozen,
/// rewritten over `free` and placed at `target` inside a `target_dim`-space.
fn sliced_cuts(
    graph: &PolySet,
    fixed: &[(usize, Rational)],
    free: &[usize],
    target_dim: usize,
    target: &[usize],
) -> Vec<Constraint> {
    let mut out = Vec::new();
    for p in graph.pieces() {
        for c in p.all_halfspaces() {
            let mut offset = c.offset.clone();
            for (i, v) in fixed {
                offset -= &c.normal[*i] * v;
            }
            let mut normal = RatVec::zeros(target_dim);
            for (&f, &t) in free.iter().zip(target) {
                normal[t] = c.normal[f].clone();
            }
            if !normal.is_zero() {
                out.push(Constraint::new(normal, offset));
            }
        }
    }
    out
}

/// Relative-interior representatives of every cell into which `cuts` divide the pieces of `s`.
fn stratum_points(s: &PolySet, cuts: &[Constraint]) -> Result<Vec<RatVec>> {
    let mut out = BTreeSet::new();
    for p in s.pieces() {
        for cell in refine(p, cuts) {
            out.insert(cell.relint_point()?);
        }
    }
    Ok(out.into_iter().collect())
}

fn fixed_coords(start: usize, values: &[Rational]) -> Vec<(usize, Rational)> {
    values.iter().cloned().enumerate().map(|(j, v)| (start + j, v)).collect()
}

fn range(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

/// Forward and reverse inclusions of a claimed set identity.
/// Forward and reverse inclusions of a set identity. Two empty sides are equal, not vacuous.
fn identity_comparisons(lhs: PolySet, rhs: PolySet) -> Result<Vec<Comparison>> {
    let both_empty = lhs.is_empty() && rhs.is_empty();
    let mut out = alloc::vec![Comparison::new("forward", lhs.clone(), rhs.clone())?, Comparison::new("reverse", rhs, lhs)?];
    if both_empty {
        for c in &mut out {
            c.verdict = Verdict::EqualityHolds;
        }
    }
    Ok(out)
}

fn union_all(dim: usize, sets: Vec<PolySet>) -> Result<PolySet> {
    Ok(PolySet::union_all(dim, sets)?.coalesced())
}

//! Sum rules, the epigraphical sum identity, indicator maps and restrictions.

use alloc::format;
use alloc::vec::Vec;

use super::*;
use crate::error::Error;
use crate::subcalc::{is_epiregular, singular_subdiff, subdiff, ConeKind};
use crate::setmap::OrderCone;
use crate::varcone::{frechet_normal_cone, is_normally_regular, limiting_normal_cone};

const LIM: ConeKind = ConeKind::Limiting;

/// `∂∞F₁(x̄, z̄₁) ∩ (-∂∞F₂(x̄, z̄₂)) = {0}`.
pub fn check_qualification_sum(
    f1: &PolyMap,
    f2: &PolyMap,
    theta: &OrderCone,
    x: &[Rational],
    z1: &[Rational],
    z2: &[Rational],
) -> Result<QualificationStatus> {
    let k1 = singular_subdiff(f1, theta, x, z1, LIM)?.set;
    let k2 = singular_subdiff(f2, theta, x, z2, LIM)?.set;
    QualificationStatus::of_cones(&k1, &k2.negated())
}

/// Plain and singular sum rules in union form over the decomposition set `S_E(x̄, z̄)`.
pub fn check_sum_rule(
    f1: &PolyMap,
    f2: &PolyMap,
    theta: &OrderCone,
    x: &[Rational],
    z: &[Rational],
) -> Result<CheckReport> {
    let sum = f1.sum(f2)?;
    if !sum.epi(theta)?.on_graph(x, z) {
        return Err(Error::PointNotInEpigraph);
    }
    let (n, m) = (f1.dom_dim(), f1.rng_dim());
    let s_e = PolyMap::s_e_map(f1, f2, theta)?;
    let point = crate::setmap::concat(x, z);
    let split = s_e.eval(&point)?;
    let fixed = fixed_coords(0, x);
    let mut cuts = sliced_cuts(f1.epi(theta)?.graph(), &fixed, &range(n, m), 2 * m, &range(0, m));
    cuts.extend(sliced_cuts(f2.epi(theta)?.graph(), &fixed, &range(n, m), 2 * m, &range(m, m)));
    let points = stratum_points(&split, &cuts)?;

    let mut plain = Vec::with_capacity(points.len());
    let mut singular = Vec::with_capacity(points.len());
    let mut qualification = Hypothesis::new("qualification", HypothesisStatus::Verified, "trivial intersection");
    for p in &points {
        let (z1, z2) = p.split_at(m);
        let a1 = subdiff(f1, theta, x, z1, LIM)?.set;
        let a2 = subdiff(f2, theta, x, z2, LIM)?.set;
        plain.push(a1.minkowski_sum(&a2)?);
        let s1 = singular_subdiff(f1, theta, x, z1, LIM)?.set;
        let s2 = singular_subdiff(f2, theta, x, z2, LIM)?.set;
        singular.push(s1.minkowski_sum(&s2)?);
        let q = QualificationStatus::of_cones(&s1, &s2.negated())?;
        if let (Some(w), HypothesisStatus::Verified) = (&q.witness, qualification.status) {
            qualification = Hypothesis::new(
                "qualification",
                HypothesisStatus::Violated,
                format!("common nonzero element {w} at (z1, z2) = {p}"),
            );
        }
    }
    let lhs = subdiff(&sum, theta, x, z, LIM)?.set;
    let lhs_sing = singular_subdiff(&sum, theta, x, z, LIM)?.set;
    let comparisons = alloc::vec![
        Comparison::new("plain", lhs, union_all(n, plain)?)?,
        Comparison::new("singular", lhs_sing, union_all(n, singular)?)?,
    ];
    let hypotheses = alloc::vec![
        qualification,
        Hypothesis::finite_dim("epiclosedness"),
        Hypothesis::finite_dim("PSNEC"),
        inner_semicompact_heuristic(&s_e, &point)?.hypothesis("inner semicompactness of S_E"),
    ];
    let mut report = CheckReport::new("sum_rule", hypotheses, comparisons);
    report.notes.push(format!("decomposition points: {}", points.len()));
    Ok(report.finalize())
}

/// Graph-level identity `E_{F₁+F₂,Θ} = E_{F₁,Θ} + E_{F₂,Θ}`.
pub fn check_epi_sum_identity(f1: &PolyMap, f2: &PolyMap, theta: &OrderCone) -> Result<CheckReport> {
    let lhs = f1.sum(f2)?.epi(theta)?.graph().clone();
    let rhs = f1.epi(theta)?.sum(&f2.epi(theta)?)?.graph().clone();
    Ok(CheckReport::new("epi_sum_identity", Vec::new(), identity_comparisons(lhs, rhs)?).finalize())
}

/// The singular subdifferential of the indicator map equals the limiting normal cone.
pub fn check_indicator_identity(omega: &PolySet, theta: &OrderCone, x: &[Rational]) -> Result<CheckReport> {
    crate::error::check_dim(omega.dim(), x.len())?;
    if !omega.member(x) {
        return Err(Error::PointNotInSet);
    }
    let ind = PolyMap::indicator(omega, theta.dim());
    let lhs = singular_subdiff(&ind, theta, x, &RatVec::zeros(theta.dim()), LIM)?.set;
    let rhs = limiting_normal_cone(omega, x)?.into_set();
    Ok(CheckReport::new("indicator_identity", Vec::new(), identity_comparisons(lhs, rhs)?).finalize())
}

/// Restricted sum rule for `F_Ω = F + Δ(·; Ω)`, with the regular reverse
/// inclusion and, under regularity of both data, the equality branch.
pub fn check_restricted_sum(
    f: &PolyMap,
    omega: &PolySet,
    theta: &OrderCone,
    x: &[Rational],
    z: &[Rational],
) -> Result<CheckReport> {
    if !f.epi(theta)?.on_graph(x, z) {
        return Err(Error::PointNotInEpigraph);
    }
    crate::error::check_dim(f.dom_dim(), omega.dim())?;
    if !omega.member(x) {
        return Err(Error::PointNotInSet);
    }
    let restricted = f.restrict(omega)?;
    let n_lim = limiting_normal_cone(omega, x)?.into_set();
    let n_reg = PolySet::from(frechet_normal_cone(omega, x)?);

    let sing_f = singular_subdiff(f, theta, x, z, LIM)?.set;
    let qualification = QualificationStatus::of_cones(&sing_f, &n_lim.negated())?.hypothesis("qualification");

    let lhs = subdiff(&restricted, theta, x, z, LIM)?.set;
    let rhs = subdiff(f, theta, x, z, LIM)?.set.minkowski_sum(&n_lim)?;
    let lhs_sing = singular_subdiff(&restricted, theta, x, z, LIM)?.set;
    let rhs_sing = sing_f.minkowski_sum(&n_lim)?;
    let reg_sum = subdiff(f, theta, x, z, ConeKind::Regular)?.set.minkowski_sum(&n_reg)?;
    let reg_restricted = subdiff(&restricted, theta, x, z, ConeKind::Regular)?.set;

    let mut comparisons = alloc::vec![
        Comparison::new("plain", lhs.clone(), rhs.clone())?,
        Comparison::new("singular", lhs_sing, rhs_sing)?,
        Comparison::new("regular", reg_sum, reg_restricted)?,
    ];
    let mut notes = Vec::new();
    let f_regular = is_epiregular(f, theta, x, z)?;
    let omega_regular = is_normally_regular(omega, x)?;
    if f_regular && omega_regular {
        comparisons.push(Comparison::new("equality", rhs, lhs)?);
        let e = restricted.epi(theta)?;
        let pair = crate::varcone::normal_cones(e.graph(), &crate::setmap::concat(x, z))?;
        comparisons.push(Comparison::new("epiregularity of F_Ω", pair.limiting.into_set(), PolySet::from(pair.regular))?);
        notes.push("equality branch applied".into());
    } else {
        let why = match (f_regular, omega_regular) {
            (false, false) => "F is not N-epiregular and Ω is not normally regular",
            (false, true) => "F is not N-epiregular",
            _ => "Ω is not normally regular",
        };
        notes.push(format!("equality branch skipped: {why}"));
    }
    let hypotheses = alloc::vec![
        qualification,
        Hypothesis::finite_dim("epiclosedness"),
        Hypothesis::finite_dim("PSNEC"),
    ];
    let mut report = CheckReport::new("restricted_sum", hypotheses, comparisons);
    report.notes = notes;
    Ok(report.finalize())
}

//! Chain rules for `F ∘ G` and their qualification conditions.

use alloc::format;
use alloc::vec::Vec;

use super::*;
use crate::error::Error;
use crate::setmap::OrderCone;
use crate::subcalc::{
    coderivative, coderivative_graph, coderivative_image, is_ell, is_epiregular, is_metrically_regular,
    singular_subdiff, subdiff, ConeKind,
};

const LIM: ConeKind = ConeKind::Limiting;

const QUALIFICATION_NOTE: &str =
    "qualification tested in coderivative form on the epigraphical multifunctions: D*E_F(ȳ,z̄)(0) ∩ -D*E_G⁻¹(ȳ,x̄)(0)";

/// `ker D*E(x̄, ȳ) = {y* : 0 ∈ D*E(x̄, ȳ)(y*)}`.
fn coderivative_kernel(e: &PolyMap, x: &[Rational], y: &[Rational]) -> Result<PolySet> {
    // The graph cone stores (x*, -y*).
    let cone = coderivative_graph(e, x, y, LIM)?.into_set();
    let fixed: Vec<(usize, Rational)> = (0..e.dom_dim()).map(|i| (i, Rational::from_integer(0.into()))).collect();
    Ok(cone.slice(&fixed).negated())
}

/// Every `y* ∈ Y*` that appears with a unit multiplier in `∂F(ȳ, z̄)`.
fn certified_duals(f: &PolyMap, theta2: &OrderCone, y: &[Rational], z: &[Rational]) -> Result<PolySet> {
    let r = subdiff(f, theta2, y, z, LIM)?;
    r.unit_pairs.project(&range(0, f.dom_dim()))
}

/// Chain-rule right-hand side at one intermediate point.
fn chain_rhs(
    eg: &PolyMap,
    f: &PolyMap,
    theta2: &OrderCone,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<PolySet> {
    coderivative_image(eg, x, y, &certified_duals(f, theta2, y, z)?, LIM)
}

/// `∂∞F(ȳ, z̄) ∩ ker ∂∞G(x̄, ȳ) = {0}`, with the kernel taken on `E_{G,Θ₁}`.
pub fn check_chain_finite_dim_qc(
    g: &PolyMap,
    f: &PolyMap,
    theta1: &OrderCone,
    theta2: &OrderCone,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<QualificationStatus> {
    let eg = g.epi(theta1)?;
    if !eg.on_graph(x, y) {
        return Err(Error::PointNotInEpigraph);
    }
    let sing_f = singular_subdiff(f, theta2, y, z, LIM)?.set;
    QualificationStatus::of_cones(&sing_f, &coderivative_kernel(&eg, x, y)?)
}

/// Graph-level identity `E_{F,Θ₂} ∘ E_{G,Θ₁} = E_{F∘G,Θ₂}`.
///
/// The reverse inclusion always holds; the forward one can fail when `F` is
/// not monotone with respect to `Θ₁`.
pub fn check_epi_chain_identity(
    g: &PolyMap,
    f: &PolyMap,
    theta1: &OrderCone,
    theta2: &OrderCone,
) -> Result<CheckReport> {
    let lhs = f.epi(theta2)?.compose(&g.epi(theta1)?)?.graph().clone();
    let rhs = f.compose(g)?.epi(theta2)?.graph().clone();
    Ok(CheckReport::new("epi_chain_identity", Vec::new(), identity_comparisons(lhs, rhs)?).finalize())
}

/// Plain and singular chain rules in union form over `H(x̄, z̄)`.
pub fn check_chain_rule(
    g: &PolyMap,
    f: &PolyMap,
    theta1: &OrderCone,
    theta2: &OrderCone,
    x: &[Rational],
    z: &[Rational],
) -> Result<CheckReport> {
    let comp = f.compose(g)?;
    if !comp.epi(theta2)?.on_graph(x, z) {
        return Err(Error::PointNotInEpigraph);
    }
    let (n, k) = (g.dom_dim(), g.rng_dim());
    let eg = g.epi(theta1)?;
    let eg_inv = eg.inverse();
    let h = PolyMap::h_map(g, f, theta1, theta2)?;
    let point = crate::setmap::concat(x, z);
    let middle = h.eval(&point)?;
    let mut cuts = sliced_cuts(eg.graph(), &fixed_coords(0, x), &range(n, k), k, &range(0, k));
    cuts.extend(sliced_cuts(f.epi(theta2)?.graph(), &fixed_coords(k, z), &range(0, k), k, &range(0, k)));
    let points = stratum_points(&middle, &cuts)?;

    let mut plain = Vec::with_capacity(points.len());
    let mut singular = Vec::with_capacity(points.len());
    let mut qualification = Hypothesis::new("qualification", HypothesisStatus::Verified, "trivial intersection");
    for y in &points {
        plain.push(chain_rhs(&eg, f, theta2, x, y, z)?);
        let sing_f = singular_subdiff(f, theta2, y, z, LIM)?.set;
        singular.push(coderivative_image(&eg, x, y, &sing_f, LIM)?);
        let inv = coderivative(&eg_inv, y, x, &RatVec::zeros(n), LIM)?;
        let q = QualificationStatus::of_cones(&sing_f, &inv.negated())?;
        if let (Some(w), HypothesisStatus::Verified) = (&q.witness, qualification.status) {
            qualification = Hypothesis::new(
                "qualification",
                HypothesisStatus::Violated,
                format!("common nonzero element {w} at ȳ = {y}"),
            );
        }
    }
    let lhs = subdiff(&comp, theta2, x, z, LIM)?.set;
    let lhs_sing = singular_subdiff(&comp, theta2, x, z, LIM)?.set;
    let comparisons = alloc::vec![
        Comparison::new("plain", lhs, union_all(n, plain)?)?,
        Comparison::new("singular", lhs_sing, union_all(n, singular)?)?,
    ];
    let identity = check_epi_chain_identity(g, f, theta1, theta2)?;
    let identity_hyp = if identity.passed() {
        Hypothesis::new("epigraphical composition identity", HypothesisStatus::Verified, "graph equality")
    } else {
        let w = &identity.witnesses()[0];
        Hypothesis::new(
            "epigraphical composition identity",
            HypothesisStatus::Violated,
            format!("({w}) lies in gph E_F∘E_G but not in gph E_(F∘G)"),
        )
    };
    let hypotheses = alloc::vec![
        qualification,
        identity_hyp,
        Hypothesis::finite_dim("epiclosedness"),
        Hypothesis::finite_dim("PSNEC"),
        inner_semicompact_heuristic(&h, &point)?.hypothesis("inner semicompactness of H"),
    ];
    let mut report = CheckReport::new("chain_rule", hypotheses, comparisons);
    report.notes.push(format!("intermediate points: {}", points.len()));
    report.notes.push(QUALIFICATION_NOTE.into());
    Ok(report.finalize())
}

/// Chain rule for single-valued inner mappings, asserting equality when
/// `F` is N-epiregular and `g` is affine or an N-regular 1D piecewise-linear map.
pub fn check_single_valued_chain(
    g: &PolyMap,
    f: &PolyMap,
    theta1: &OrderCone,
    theta2: &OrderCone,
    x: &[Rational],
    z: &[Rational],
) -> Result<CheckReport> {
    if !g.is_single_valued() {
        return Err(Error::NotSingleValued);
    }
    let mut report = check_chain_rule(g, f, theta1, theta2, x, z)?;
    report.check_id = "single_valued_chain".into();
    report.notes.retain(|n| n != NOT_GUARANTEED);
    let value = g.eval(x)?;
    let y = value.pieces()[0].vertices()[0].clone();
    let n = g.dom_dim();
    let affine = g.graph().len() == 1 && g.graph().pieces()[0].dimension() == Some(n) && g.domain().set_equal(&PolySet::universe(n))?;
    let branch = if affine {
        Some("g affine")
    } else if n == 1 && g.rng_dim() == 1 && is_epiregular(g, theta1, x, &y)? {
        Some("g piecewise linear and N-regular")
    } else {
        None
    };
    let f_regular = is_epiregular(f, theta2, &y, z)?;
    match (branch, f_regular) {
        (Some(why), true) => {
            let rhs = chain_rhs(&g.epi(theta1)?, f, theta2, x, &y, z)?;
            report.comparisons.push(Comparison::new("equality", rhs, report.lhs().clone())?);
            report.notes.push(format!("equality branch applied: {why}, F N-epiregular"));
        }
        (None, _) => report.notes.push("equality branch skipped: g is neither affine nor N-regular".into()),
        (_, false) => report.notes.push("equality branch skipped: F is not N-epiregular".into()),
    }
    Ok(report.finalize())
}

/// Chain rule whose qualification is implied by ELL of `F` or metric regularity of `E_{G,Θ₁}`.
pub fn check_wellposed_chain(
    g: &PolyMap,
    f: &PolyMap,
    theta1: &OrderCone,
    theta2: &OrderCone,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<CheckReport> {
    let ell = is_ell(f, theta2, y, z)?;
    let regular = is_metrically_regular(&g.epi(theta1)?, x, y)?;
    let mut report = check_chain_rule(g, f, theta1, theta2, x, z)?;
    report.check_id = "wellposed_chain".into();
    report.notes.retain(|n| n != NOT_GUARANTEED);
    let reason = match (ell, regular) {
        (true, true) => Some("F is ELL and E_G is metrically regular"),
        (true, false) => Some("F is ELL"),
        (false, true) => Some("E_G is metrically regular"),
        (false, false) => None,
    };
    match reason {
        Some(why) => {
            if let Some(h) = report.hypotheses.iter_mut().find(|h| h.name == "qualification") {
                let explicit = h.status;
                *h = Hypothesis::new(
                    "qualification",
                    HypothesisStatus::Verified,
                    format!("implied by well-posedness: {why} (explicit test: {explicit})"),
                );
            }
        }
        None => report.notes.push("neither well-posedness criterion holds; explicit qualification used".into()),
    }
    Ok(report.finalize())
}

//! Coderivatives, ordered subdifferentials and well-posedness tests.
//!
//! In finite dimensions the normal and mixed coderivatives coincide, so one
//! limiting kind is implemented and the other names are aliases for it.
//! The normalization `‖z*‖ = 1` uses the sum-norm, split into one polyhedral
//! piece per sign pattern of `z*`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactgeom::{Constraint, Polyhedron, RatMatrix, RatVec, Rational};
use crate::polyset::{ConeUnion, PolySet};
use crate::setmap::{concat, OrderCone, PolyMap};
use crate::varcone::{frechet_normal_cone, limiting_normal_cone};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConeKind {
    Regular,
    Limiting,
}

impl ConeKind {
    /// Limiting (normal) constructions.
    pub const NORMAL: ConeKind = ConeKind::Limiting;
    /// Mixed constructions coincide with normal ones in finite dimensions.
    pub const MIXED: ConeKind = ConeKind::Limiting;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubdiffKind {
    Regular,
    Limiting,
    SingularRegular,
    SingularLimiting,
}

impl SubdiffKind {
    pub fn cone_kind(self) -> ConeKind {
        match self {
            SubdiffKind::Regular | SubdiffKind::SingularRegular => ConeKind::Regular,
            SubdiffKind::Limiting | SubdiffKind::SingularLimiting => ConeKind::Limiting,
        }
    }

    pub fn is_singular(self) -> bool {
        matches!(self, SubdiffKind::SingularRegular | SubdiffKind::SingularLimiting)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdiffResult {
    /// The subdifferential as a subset of `X*`.
    pub set: PolySet,
    /// All certificates `(x*, z*)` with `x* ∈ D*E(x̄,z̄)(z*)` and `-z* ∈ N(0; Θ)`.
    pub pairs: PolySet,
    /// The normalized slice of `pairs` (`‖z*‖₁ = 1`, or `z* = 0` for singular kinds).
    pub unit_pairs: PolySet,
    pub kind: SubdiffKind,
    /// Set when `Θ = {0}`, so the dual constraint on `z*` is vacuous.
    pub degenerate_order: bool,
}

/// Normal cone (regular or limiting) to a set at a point, as a cone union.
pub fn normal_cone(s: &PolySet, x: &[Rational], kind: ConeKind) -> Result<ConeUnion> {
    match kind {
        ConeKind::Regular => Ok(ConeUnion::new(PolySet::from(frechet_normal_cone(s, x)?))?),
        ConeKind::Limiting => limiting_normal_cone(s, x),
    }
}

/// `N((x̄, z̄); gph F)`, from which every coderivative value is a slice.
pub fn coderivative_graph(f: &PolyMap, x: &[Rational], z: &[Rational], kind: ConeKind) -> Result<ConeUnion> {
    if !f.on_graph(x, z) {
        return Err(Error::PointNotOnGraph);
    }
    normal_cone(f.graph(), &concat(x, z), kind)
}

/// Diagonal map negating the coordinates `start..start + len`.
fn negate_block(dim: usize, start: usize, len: usize) -> RatMatrix {
    let rows = (0..dim)
        .map(|i| {
            let e = RatVec::unit(dim, i);
            if (start..start + len).contains(&i) {
                e.neg()
            } else {
                e
            }
        })
        .collect();
    RatMatrix::new(rows, dim)
}

/// `{(x*, z*) : (x*, -z*) ∈ N((x̄,z̄); gph F)}`.
fn dual_pairs(f: &PolyMap, x: &[Rational], z: &[Rational], kind: ConeKind) -> Result<PolySet> {
    let n = coderivative_graph(f, x, z, kind)?;
    let dim = f.dom_dim() + f.rng_dim();
    n.as_set().affine_image(&negate_block(dim, f.dom_dim(), f.rng_dim()), &RatVec::zeros(dim))
}

/// `D*F(x̄, z̄)(z*)`.
pub fn coderivative(
    f: &PolyMap,
    x: &[Rational],
    z: &[Rational],
    z_star: &[Rational],
    kind: ConeKind,
) -> Result<PolySet> {
    crate::error::check_dim(f.rng_dim(), z_star.len())?;
    let pairs = dual_pairs(f, x, z, kind)?;
    let n = f.dom_dim();
    let fixed: Vec<(usize, Rational)> = z_star.iter().cloned().enumerate().map(|(j, v)| (n + j, v)).collect();
    Ok(pairs.slice(&fixed))
}

/// `⋃_{z* ∈ duals} D*F(x̄, z̄)(z*)`.
pub fn coderivative_image(
    f: &PolyMap,
    x: &[Rational],
    z: &[Rational],
    duals: &PolySet,
    kind: ConeKind,
) -> Result<PolySet> {
    crate::error::check_dim(f.rng_dim(), duals.dim())?;
    let pairs = dual_pairs(f, x, z, kind)?;
    let n = f.dom_dim();
    let cylinder = duals.lift(n + f.rng_dim(), &(n..n + f.rng_dim()).collect::<Vec<_>>());
    pairs.intersect(&cylinder)?.project(&(0..n).collect::<Vec<_>>())
}

/// The unit sphere of the sum-norm on `Z*`, lifted to `X* × Z*`, one piece per sign pattern.
fn unit_sphere_pieces(n: usize, m: usize) -> PolySet {
    let total = n + m;
    let mut pieces = Vec::with_capacity(1 << m);
    for mask in 0..(1usize << m) {
        let sign = |j: usize| if mask & (1 << j) != 0 { -Rational::one() } else { Rational::one() };
        let mut sum = RatVec::zeros(total);
        let mut ineqs = Vec::with_capacity(m);
        for j in 0..m {
            sum[n + j] = sign(j);
            let mut orth = RatVec::zeros(total);
            orth[n + j] = -sign(j);
            ineqs.push(Constraint::new(orth, Rational::zero()));
        }
        pieces.push(Polyhedron::from_hrep(total, ineqs, alloc::vec![Constraint::new(sum, Rational::one())]));
    }
    PolySet::new(total, pieces)
}

/// Ordered subdifferentials of `F` at `(x̄, z̄) ∈ epi_Θ F`.
pub fn subdiff_of_kind(
    f: &PolyMap,
    theta: &OrderCone,
    x: &[Rational],
    z: &[Rational],
    kind: SubdiffKind,
) -> Result<SubdiffResult> {
    crate::error::check_dim(f.rng_dim(), theta.dim())?;
    let e = f.epi(theta)?;
    if !e.on_graph(x, z) {
        return Err(Error::PointNotInEpigraph);
    }
    let (n, m) = (f.dom_dim(), f.rng_dim());
    let raw = dual_pairs(&e, x, z, kind.cone_kind())?;
    let dual_order = theta.polar().negated();
    let pairs = raw.intersect(&PolySet::universe(n).product(&PolySet::from(dual_order)))?;
    let x_coords: Vec<usize> = (0..n).collect();
    let unit_pairs = if kind.is_singular() {
        let zero_eqs: Vec<Constraint> = (0..m)
            .map(|j| Constraint::new(RatVec::unit(n + m, n + j), Rational::zero()))
            .collect();
        pairs.constrained(&[], &zero_eqs)
    } else {
        pairs.intersect(&unit_sphere_pieces(n, m))?
    };
    let set = unit_pairs.project(&x_coords)?.coalesced();
    Ok(SubdiffResult { set, pairs, unit_pairs, kind, degenerate_order: theta.is_trivial() })
}

/// `∂_Θ F(x̄, z̄)` (regular) or `∂_{N,Θ} F(x̄, z̄)` (limiting).
pub fn subdiff(f: &PolyMap, theta: &OrderCone, x: &[Rational], z: &[Rational], kind: ConeKind) -> Result<SubdiffResult> {
    let k = match kind {
        ConeKind::Regular => SubdiffKind::Regular,
        ConeKind::Limiting => SubdiffKind::Limiting,
    };
    subdiff_of_kind(f, theta, x, z, k)
}

/// `∂∞_Θ F(x̄, z̄) = D*E_{F,Θ}(x̄, z̄)(0)`.
pub fn singular_subdiff(
    f: &PolyMap,
    theta: &OrderCone,
    x: &[Rational],
    z: &[Rational],
    kind: ConeKind,
) -> Result<SubdiffResult> {
    let k = match kind {
        ConeKind::Regular => SubdiffKind::SingularRegular,
        ConeKind::Limiting => SubdiffKind::SingularLimiting,
    };
    subdiff_of_kind(f, theta, x, z, k)
}

/// Coderivative criterion: `D*F(x̄, z̄)(0) = {0}`.
pub fn is_lipschitz_like(f: &PolyMap, x: &[Rational], z: &[Rational]) -> Result<bool> {
    let zero = RatVec::zeros(f.rng_dim());
    Ok(coderivative(f, x, z, &zero, ConeKind::Limiting)?.is_origin())
}

/// Metric regularity of `G` at `(x̄, ȳ)`, i.e. the Lipschitz-like property of `G⁻¹` at `(ȳ, x̄)`.
pub fn is_metrically_regular(g: &PolyMap, x: &[Rational], y: &[Rational]) -> Result<bool> {
    is_lipschitz_like(&g.inverse(), y, x)
}

/// Epigraphical Lipschitz-like property: the limiting singular subdifferential is `{0}`.
pub fn is_ell(f: &PolyMap, theta: &OrderCone, x: &[Rational], z: &[Rational]) -> Result<bool> {
    Ok(singular_subdiff(f, theta, x, z, ConeKind::Limiting)?.set.is_origin())
}

/// N-epiregularity: regular and limiting normal cones to `epi_Θ F` coincide.
pub fn is_epiregular(f: &PolyMap, theta: &OrderCone, x: &[Rational], z: &[Rational]) -> Result<bool> {
    let e = f.epi(theta)?;
    if !e.on_graph(x, z) {
        return Err(Error::PointNotInEpigraph);
    }
    let reg = coderivative_graph(&e, x, z, ConeKind::Regular)?;
    let lim = coderivative_graph(&e, x, z, ConeKind::Limiting)?;
    reg.set_equal(&lim)
}

/// Graphical regularity of `F` itself at a point of its graph.
pub fn is_graphically_regular(f: &PolyMap, x: &[Rational], z: &[Rational]) -> Result<bool> {
    let reg = coderivative_graph(f, x, z, ConeKind::Regular)?;
    let lim = coderivative_graph(f, x, z, ConeKind::Limiting)?;
    reg.set_equal(&lim)
}

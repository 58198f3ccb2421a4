//! Set-valued mappings represented by polyhedral graphs.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{Constraint, Polyhedron, RatMatrix, RatVec, Rational, Side};
use crate::polyset::PolySet;

/// An ordering cone `Θ`: `z₁ ⪯ z₂` iff `z₂ - z₁ ∈ Θ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderCone {
    cone: Polyhedron,
}

impl OrderCone {
    pub fn new(cone: Polyhedron) -> Result<Self> {
        if !cone.is_cone() {
            return Err(Error::NotACone);
        }
        Ok(OrderCone { cone })
    }

    /// The nonnegative orthant of dimension `dim`.
    pub fn nonnegative(dim: usize) -> Self {
        let rays = (0..dim).map(|i| RatVec::unit(dim, i)).collect();
        OrderCone { cone: Polyhedron::cone(dim, rays, Vec::new()) }
    }

    /// The trivial cone `{0}` (equality ordering).
    pub fn trivial(dim: usize) -> Self {
        OrderCone { cone: Polyhedron::point(RatVec::zeros(dim)) }
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn cone(&self) -> &Polyhedron {
        &self.cone
    }

    pub fn is_trivial(&self) -> bool {
        self.cone.is_origin()
    }

    /// `N(0; Θ)`, the polar cone.
    pub fn polar(&self) -> Polyhedron {
        self.cone.polar_cone().expect("order cones are cones")
    }
}

/// A mapping `F: X ⇉ Z` given by its closed graph in `X × Z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyMap {
    dom_dim: usize,
    rng_dim: usize,
    graph: PolySet,
}

impl PolyMap {
    pub fn new(dom_dim: usize, rng_dim: usize, graph: PolySet) -> Result<Self> {
        check_dim(dom_dim + rng_dim, graph.dim())?;
        Ok(PolyMap { dom_dim, rng_dim, graph })
    }

    pub fn from_pieces(dom_dim: usize, rng_dim: usize, pieces: Vec<Polyhedron>) -> Result<Self> {
        for p in &pieces {
            check_dim(dom_dim + rng_dim, p.dim())?;
        }
        Ok(PolyMap { dom_dim, rng_dim, graph: PolySet::new(dom_dim + rng_dim, pieces) })
    }

    /// `x ↦ {A x + b}`.
    pub fn affine(a: &RatMatrix, b: &RatVec) -> Result<Self> {
        check_dim(a.nrows(), b.dim())?;
        let (n, m) = (a.cols, a.nrows());
        let eqs = (0..m)
            .map(|i| {
                let mut normal = a.rows[i].neg().0;
                normal.extend((0..m).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }));
                Constraint::new(RatVec(normal), b[i].clone())
            })
            .collect();
        let graph = Polyhedron::from_hrep(n + m, Vec::new(), eqs);
        PolyMap::new(n, m, PolySet::from(graph))
    }

    pub fn identity(dim: usize) -> Self {
        PolyMap::affine(&RatMatrix::identity(dim), &RatVec::zeros(dim)).expect("square identity")
    }

    /// `x ↦ {0}` on all of `X`.
    pub fn zero(dom_dim: usize, rng_dim: usize) -> Self {
        let a = RatMatrix::new((0..rng_dim).map(|_| RatVec::zeros(dom_dim)).collect(), dom_dim);
        PolyMap::affine(&a, &RatVec::zeros(rng_dim)).expect("consistent shapes")
    }

    /// The indicator mapping `Δ(·; Ω)`: `{0}` on `Ω`, empty elsewhere.
    pub fn indicator(omega: &PolySet, rng_dim: usize) -> Self {
        let graph = omega.product(&PolySet::origin(rng_dim));
        PolyMap { dom_dim: omega.dim(), rng_dim, graph }
    }

    pub fn dom_dim(&self) -> usize {
        self.dom_dim
    }

    pub fn rng_dim(&self) -> usize {
        self.rng_dim
    }

    pub fn graph(&self) -> &PolySet {
        &self.graph
    }

    fn x_coords(&self) -> Vec<usize> {
        (0..self.dom_dim).collect()
    }

    fn z_coords(&self) -> Vec<usize> {
        (self.dom_dim..self.dom_dim + self.rng_dim).collect()
    }

    pub fn on_graph(&self, x: &[Rational], z: &[Rational]) -> bool {
        x.len() == self.dom_dim && z.len() == self.rng_dim && self.graph.member(&concat(x, z))
    }

    /// `F(x)`.
    pub fn eval(&self, x: &[Rational]) -> Result<PolySet> {
        check_dim(self.dom_dim, x.len())?;
        let fixed: Vec<(usize, Rational)> = x.iter().cloned().enumerate().collect();
        Ok(self.graph.slice(&fixed))
    }

    pub fn inverse(&self) -> PolyMap {
        let mut order = self.z_coords();
        order.extend(self.x_coords());
        PolyMap { dom_dim: self.rng_dim, rng_dim: self.dom_dim, graph: self.graph.permuted(&order) }
    }

    pub fn domain(&self) -> PolySet {
        self.graph.project(&self.x_coords()).expect("coordinates in range")
    }

    /// `ker F = {x : 0 ∈ F(x)}`.
    pub fn kernel(&self) -> PolySet {
        let fixed: Vec<(usize, Rational)> = self.z_coords().into_iter().map(|i| (i, Rational::zero())).collect();
        self.graph.slice(&fixed)
    }

    /// `F₁ + F₂`, by projecting the lifted set `{(x, z₁, z₂)}` onto `(x, z₁ + z₂)`.
    pub fn sum(&self, other: &PolyMap) -> Result<PolyMap> {
        check_dim(self.dom_dim, other.dom_dim)?;
        check_dim(self.rng_dim, other.rng_dim)?;
        let (n, m) = (self.dom_dim, self.rng_dim);
        let total = n + 2 * m;
        let first: Vec<usize> = (0..n + m).collect();
        let second: Vec<usize> = (0..n).chain(n + m..total).collect();
        let lifted = self.graph.lift(total, &first).intersect(&other.graph.lift(total, &second))?;
        let mut rows: Vec<RatVec> = (0..n).map(|i| RatVec::unit(total, i)).collect();
        for j in 0..m {
            rows.push(RatVec::unit(total, n + j).add(&RatVec::unit(total, n + m + j)));
        }
        let graph = lifted.affine_image(&RatMatrix::new(rows, total), &RatVec::zeros(n + m))?;
        PolyMap::new(n, m, graph)
    }

    /// `F ∘ G` for `G = inner: X ⇉ Y` and `F = self: Y ⇉ Z`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        check_dim(inner.rng_dim, self.dom_dim)?;
        let (n, k, m) = (inner.dom_dim, inner.rng_dim, self.rng_dim);
        let total = n + k + m;
        let g_pos: Vec<usize> = (0..n + k).collect();
        let f_pos: Vec<usize> = (n..total).collect();
        let lifted = inner.graph.lift(total, &g_pos).intersect(&self.graph.lift(total, &f_pos))?;
        let keep: Vec<usize> = (0..n).chain(n + k..total).collect();
        PolyMap::new(n, m, lifted.project(&keep)?)
    }

    /// `F_Ω = F + Δ(·; Ω)`: the graph cut down to `Ω × Z`.
    pub fn restrict(&self, omega: &PolySet) -> Result<PolyMap> {
        check_dim(self.dom_dim, omega.dim())?;
        let cylinder = omega.lift(self.dom_dim + self.rng_dim, &self.x_coords());
        PolyMap::new(self.dom_dim, self.rng_dim, self.graph.intersect(&cylinder)?)
    }

    /// The epigraphical multifunction `E_{F,Θ}(x) = F(x) + Θ`.
    pub fn epi(&self, theta: &OrderCone) -> Result<PolyMap> {
        check_dim(self.rng_dim, theta.dim())?;
        let shift = PolySet::origin(self.dom_dim).product(&PolySet::from(theta.cone().clone()));
        PolyMap::new(self.dom_dim, self.rng_dim, self.graph.minkowski_sum(&shift)?)
    }

    /// True iff every value `F(x)` has at most one point.
    ///
    /// A convex piece is single-valued iff its equations determine `z` from
    /// `x`; two pieces agree on their common domain iff the lifted set
    /// `{(x, z₁, z₂)}` lies in `z₁ = z₂`.
    pub fn is_single_valued(&self) -> bool {
        let (n, m) = (self.dom_dim, self.rng_dim);
        let pieces = self.graph.pieces();
        for p in pieces {
            let z_block: Vec<Vec<Rational>> = p.eqs().iter().map(|c| c.normal[n..].to_vec()).collect();
            if crate::exactgeom::rank(&z_block, m) < m {
                return false;
            }
        }
        let total = n + 2 * m;
        let first: Vec<usize> = (0..n + m).collect();
        let second: Vec<usize> = (0..n).chain(n + m..total).collect();
        for (i, p) in pieces.iter().enumerate() {
            for q in &pieces[i + 1..] {
                let both = p.lift(total, &first).intersect(&q.lift(total, &second)).expect("same dimension");
                if both.is_empty() {
                    continue;
                }
                for j in 0..m {
                    let mut normal = RatVec::zeros(total);
                    normal[n + j] = Rational::from_integer(1.into());
                    normal[n + m + j] = Rational::from_integer((-1).into());
                    if both.side_of(&Constraint::new(normal, Rational::zero())) != Side::On {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The auxiliary mapping `S_E: (x, z) ↦ {(z₁, z₂) : z₁ ∈ E_{F₁,Θ}(x), z₂ ∈ E_{F₂,Θ}(x), z = z₁ + z₂}`.
    pub fn s_e_map(f1: &PolyMap, f2: &PolyMap, theta: &OrderCone) -> Result<PolyMap> {
        check_dim(f1.dom_dim, f2.dom_dim)?;
        check_dim(f1.rng_dim, f2.rng_dim)?;
        let (e1, e2) = (f1.epi(theta)?, f2.epi(theta)?);
        let (n, m) = (f1.dom_dim, f1.rng_dim);
        // coordinates: x | z | z1 | z2
        let total = n + 3 * m;
        let p1: Vec<usize> = (0..n).chain(n + m..n + 2 * m).collect();
        let p2: Vec<usize> = (0..n).chain(n + 2 * m..total).collect();
        let sum_eqs: Vec<Constraint> = (0..m)
            .map(|j| {
                let mut normal = RatVec::zeros(total);
                normal[n + j] = Rational::from_integer((-1).into());
                normal[n + m + j] = Rational::from_integer(1.into());
                normal[n + 2 * m + j] = Rational::from_integer(1.into());
                Constraint::new(normal, Rational::zero())
            })
            .collect();
        let graph = e1.graph.lift(total, &p1).intersect(&e2.graph.lift(total, &p2))?.constrained(&[], &sum_eqs);
        PolyMap::new(n + m, 2 * m, graph)
    }

    pub fn s_e_eval(
        f1: &PolyMap,
        f2: &PolyMap,
        theta: &OrderCone,
        x: &[Rational],
        z: &[Rational],
    ) -> Result<PolySet> {
        PolyMap::s_e_map(f1, f2, theta)?.eval(&concat(x, z))
    }

    /// The auxiliary mapping `H: (x, z) ↦ E_{G,Θ₁}(x) ∩ (E_{F,Θ₂})⁻¹(z)`.
    pub fn h_map(g: &PolyMap, f: &PolyMap, theta1: &OrderCone, theta2: &OrderCone) -> Result<PolyMap> {
        check_dim(g.rng_dim, f.dom_dim)?;
        let (eg, ef) = (g.epi(theta1)?, f.epi(theta2)?);
        let (n, k, m) = (g.dom_dim, g.rng_dim, f.rng_dim);
        // coordinates: x | z | y
        let total = n + m + k;
        let pg: Vec<usize> = (0..n).chain(n + m..total).collect();
        let pf: Vec<usize> = (n + m..total).chain(n..n + m).collect();
        let graph = eg.graph.lift(total, &pg).intersect(&ef.graph.lift(total, &pf))?;
        PolyMap::new(n + m, k, graph)
    }

    pub fn h_eval(
        g: &PolyMap,
        f: &PolyMap,
        theta1: &OrderCone,
        theta2: &OrderCone,
        x: &[Rational],
        z: &[Rational],
    ) -> Result<PolySet> {
        PolyMap::h_map(g, f, theta1, theta2)?.eval(&concat(x, z))
    }
}

pub(crate) fn concat(x: &[Rational], z: &[Rational]) -> RatVec {
    let mut v = x.to_vec();
    v.extend_from_slice(z);
    RatVec(v)
}

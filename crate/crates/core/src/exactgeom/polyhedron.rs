use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dd::{dd_cone, IntVec};
use super::linalg::{reduce_modulo, rref};
use super::vector::{dot, primitive_direction, scale_to_integers, RatMatrix, RatVec, Rational};
use crate::error::{check_dim, Error, Result};

/// `⟨normal, x⟩ <= offset` as an inequality, `⟨normal, x⟩ = offset` as an equation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constraint {
    pub normal: RatVec,
    pub offset: Rational,
}

impl Constraint {
    pub fn new(normal: RatVec, offset: Rational) -> Self {
        Constraint { normal, offset }
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Self {
        Constraint::new(RatVec::from_i64(normal), Rational::from_integer(BigInt::from(offset)))
    }

    /// `⟨normal, x⟩ - offset`; nonpositive means satisfied as an inequality.
    pub fn slack(&self, x: &[Rational]) -> Rational {
        self.normal.dot(x) - &self.offset
    }

    pub fn negated(&self) -> Constraint {
        Constraint::new(self.normal.neg(), -&self.offset)
    }

    fn homogenized(&self) -> IntVec {
        let mut coords = self.normal.0.clone();
        coords.push(-&self.offset);
        scale_to_integers(&coords)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HRep {
    pub eqs: Vec<Constraint>,
    pub ineqs: Vec<Constraint>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VRep {
    pub vertices: Vec<RatVec>,
    pub rays: Vec<RatVec>,
    pub lines: Vec<RatVec>,
}

/// A closed convex polyhedron carrying both representations in canonical form.
///
/// Canonical form: equations are the integer-scaled RREF basis of the affine
/// hull, inequalities are the facets reduced modulo the equations and scaled
/// to coprime integers; generators are reduced modulo the lineality space.
/// Two polyhedra are equal as point sets iff they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polyhedron {
    dim: usize,
    empty: bool,
    hrep: HRep,
    vrep: VRep,
}

impl Polyhedron {
    pub fn empty(dim: usize) -> Self {
        Polyhedron {
            dim,
            empty: true,
            hrep: HRep {
                eqs: Vec::new(),
                ineqs: vec![Constraint::new(RatVec::zeros(dim), -Rational::one())],
            },
            vrep: VRep::default(),
        }
    }

    pub fn universe(dim: usize) -> Self {
        Polyhedron::from_vrep(
            dim,
            vec![RatVec::zeros(dim)],
            Vec::new(),
            (0..dim).map(|i| RatVec::unit(dim, i)).collect(),
        )
    }

    pub fn point(p: RatVec) -> Self {
        let dim = p.dim();
        Polyhedron::from_vrep(dim, vec![p], Vec::new(), Vec::new())
    }

    /// Cone with apex at the origin generated by `rays` and `lines`.
    pub fn cone(dim: usize, rays: Vec<RatVec>, lines: Vec<RatVec>) -> Self {
        Polyhedron::from_vrep(dim, vec![RatVec::zeros(dim)], rays, lines)
    }

    /// The box `center + [-radius, radius]^n`.
    pub fn cube(center: &RatVec, radius: &Rational) -> Self {
        let dim = center.dim();
        let mut ineqs = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            let e = RatVec::unit(dim, i);
            ineqs.push(Constraint::new(e.clone(), &center[i] + radius));
            ineqs.push(Constraint::new(e.neg(), radius - &center[i]));
        }
        Polyhedron::from_hrep(dim, ineqs, Vec::new())
    }

    pub fn from_hrep(dim: usize, ineqs: Vec<Constraint>, eqs: Vec<Constraint>) -> Self {
        debug_assert!(ineqs.iter().chain(&eqs).all(|c| c.normal.dim() == dim));
        match vrep_from_hrep(dim, &ineqs, &eqs) {
            None => Polyhedron::empty(dim),
            Some(vrep) => {
                let hrep = hrep_from_vrep(dim, &vrep);
                Polyhedron { dim, empty: false, hrep, vrep }
            }
        }
    }

    /// Builds `conv(vertices) + cone(rays) + span(lines)`; no vertices means empty.
    pub fn from_vrep(
        dim: usize,
        vertices: Vec<RatVec>,
        rays: Vec<RatVec>,
        lines: Vec<RatVec>,
    ) -> Self {
        debug_assert!(vertices.iter().chain(&rays).chain(&lines).all(|v| v.dim() == dim));
        if vertices.is_empty() {
            return Polyhedron::empty(dim);
        }
        let raw = VRep { vertices, rays, lines };
        let hrep = hrep_from_vrep(dim, &raw);
        let vrep = vrep_from_hrep(dim, &hrep.ineqs, &hrep.eqs)
            .expect("nonempty generator set yields a nonempty polyhedron");
        Polyhedron { dim, empty: false, hrep, vrep }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn vrep(&self) -> &VRep {
        &self.vrep
    }

    pub fn ineqs(&self) -> &[Constraint] {
        if self.empty {
            &[]
        } else {
            &self.hrep.ineqs
        }
    }

    pub fn eqs(&self) -> &[Constraint] {
        &self.hrep.eqs
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vrep.vertices
    }

    pub fn rays(&self) -> &[RatVec] {
        &self.vrep.rays
    }

    pub fn lines(&self) -> &[RatVec] {
        &self.vrep.lines
    }

    /// Every constraint as an inequality (equations contribute both signs).
    pub fn all_halfspaces(&self) -> Vec<Constraint> {
        let mut out: Vec<Constraint> = self.ineqs().to_vec();
        for e in self.eqs() {
            out.push(e.clone());
            out.push(e.negated());
        }
        out
    }

    /// Affine dimension; `None` for the empty set.
    pub fn dimension(&self) -> Option<usize> {
        if self.empty {
            None
        } else {
            Some(self.dim - self.hrep.eqs.len())
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.vrep.rays.is_empty() && self.vrep.lines.is_empty()
    }

    /// True iff the set is a nonempty cone with apex at the origin.
    pub fn is_cone(&self) -> bool {
        !self.empty && self.hrep.eqs.iter().chain(&self.hrep.ineqs).all(|c| c.offset.is_zero())
    }

    pub fn is_origin(&self) -> bool {
        self.is_bounded() && self.vrep.vertices.len() == 1 && self.vrep.vertices[0].is_zero()
    }

    pub fn is_universe(&self) -> bool {
        !self.empty && self.hrep.eqs.is_empty() && self.hrep.ineqs.is_empty()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        if self.empty {
            return false;
        }
        debug_assert_eq!(x.len(), self.dim);
        self.hrep.ineqs.iter().all(|c| !c.slack(x).is_positive())
            && self.hrep.eqs.iter().all(|c| c.slack(x).is_zero())
    }

    /// Is `direction` in the recession cone?
    pub fn recedes_along(&self, direction: &[Rational]) -> bool {
        self.hrep.ineqs.iter().all(|c| !dot(&c.normal, direction).is_positive())
            && self.hrep.eqs.iter().all(|c| dot(&c.normal, direction).is_zero())
    }

    /// `other ⊆ self`, decided on the generators of `other`.
    pub fn contains_polyhedron(&self, other: &Polyhedron) -> bool {
        if other.empty {
            return true;
        }
        if self.empty {
            return false;
        }
        other.vrep.vertices.iter().all(|v| self.contains(v))
            && other.vrep.rays.iter().all(|r| self.recedes_along(r))
            && other.vrep.lines.iter().all(|l| {
                self.hrep.ineqs.iter().chain(&self.hrep.eqs).all(|c| dot(&c.normal, l).is_zero())
            })
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        check_dim(self.dim, other.dim)?;
        if self.empty || other.empty {
            return Ok(Polyhedron::empty(self.dim));
        }
        let mut ineqs = self.hrep.ineqs.clone();
        ineqs.extend(other.hrep.ineqs.iter().cloned());
        let mut eqs = self.hrep.eqs.clone();
        eqs.extend(other.hrep.eqs.iter().cloned());
        Ok(Polyhedron::from_hrep(self.dim, ineqs, eqs))
    }

    /// Adds constraints to the current description.
    pub fn constrained(&self, ineqs: &[Constraint], eqs: &[Constraint]) -> Polyhedron {
        if self.empty {
            return self.clone();
        }
        let mut all_ineqs = self.hrep.ineqs.clone();
        all_ineqs.extend_from_slice(ineqs);
        let mut all_eqs = self.hrep.eqs.clone();
        all_eqs.extend_from_slice(eqs);
        Polyhedron::from_hrep(self.dim, all_ineqs, all_eqs)
    }

    /// Exact Minkowski sum via pairwise vertex sums and merged directions.
    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Polyhedron> {
        check_dim(self.dim, other.dim)?;
        if self.empty || other.empty {
            return Ok(Polyhedron::empty(self.dim));
        }
        let mut vertices = Vec::new();
        for v in &self.vrep.vertices {
            for w in &other.vrep.vertices {
                vertices.push(v.add(w));
            }
        }
        let rays = self.vrep.rays.iter().chain(&other.vrep.rays).cloned().collect();
        let lines = self.vrep.lines.iter().chain(&other.vrep.lines).cloned().collect();
        Ok(Polyhedron::from_vrep(self.dim, vertices, rays, lines))
    }

    /// Image under `x ↦ A x + b`.
    pub fn affine_image(&self, a: &RatMatrix, b: &RatVec) -> Result<Polyhedron> {
        check_dim(self.dim, a.cols)?;
        check_dim(a.nrows(), b.dim())?;
        let m = a.nrows();
        if self.empty {
            return Ok(Polyhedron::empty(m));
        }
        let vertices = self.vrep.vertices.iter().map(|v| a.apply(v).add(b)).collect();
        let rays = self.vrep.rays.iter().map(|r| a.apply(r)).collect();
        let lines = self.vrep.lines.iter().map(|l| a.apply(l)).collect();
        Ok(Polyhedron::from_vrep(m, vertices, rays, lines))
    }

    /// Point in the relative interior: vertex barycenter plus the sum of all rays.
    pub fn relint_point(&self) -> Result<RatVec> {
        if self.empty {
            return Err(Error::EmptyInput);
        }
        let n = Rational::from_integer(BigInt::from(self.vrep.vertices.len()));
        let mut p = RatVec::zeros(self.dim);
        for v in &self.vrep.vertices {
            p = p.add(v);
        }
        p = p.scale(&n.recip());
        for r in &self.vrep.rays {
            p = p.add(r);
        }
        Ok(p)
    }

    pub fn recession_cone(&self) -> Polyhedron {
        if self.empty {
            return Polyhedron::empty(self.dim);
        }
        Polyhedron::cone(self.dim, self.vrep.rays.clone(), self.vrep.lines.clone())
    }

    /// `{v : ⟨v, d⟩ <= 0 for all d in self}` for a cone with apex at the origin.
    pub fn polar_cone(&self) -> Result<Polyhedron> {
        if !self.is_cone() {
            return Err(Error::NotACone);
        }
        let ineqs = self
            .vrep
            .rays
            .iter()
            .map(|r| Constraint::new(r.clone(), Rational::zero()))
            .collect();
        let eqs = self
            .vrep
            .lines
            .iter()
            .map(|l| Constraint::new(l.clone(), Rational::zero()))
            .collect();
        Ok(Polyhedron::from_hrep(self.dim, ineqs, eqs))
    }

    /// Point reflection `-P`.
    pub fn negated(&self) -> Polyhedron {
        if self.empty {
            return self.clone();
        }
        let flip = |c: &Constraint| Constraint::new(c.normal.neg(), c.offset.clone());
        Polyhedron::from_hrep(
            self.dim,
            self.hrep.ineqs.iter().map(flip).collect(),
            self.hrep.eqs.iter().map(flip).collect(),
        )
    }

    pub fn translated(&self, shift: &RatVec) -> Polyhedron {
        if self.empty {
            return self.clone();
        }
        let mv = |c: &Constraint| Constraint::new(c.normal.clone(), &c.offset + c.normal.dot(shift));
        Polyhedron::from_hrep(
            self.dim,
            self.hrep.ineqs.iter().map(mv).collect(),
            self.hrep.eqs.iter().map(mv).collect(),
        )
    }

    /// Embeds into a `new_dim`-space: coordinate `i` goes to `positions[i]`,
    /// the remaining coordinates are free.
    pub fn lift(&self, new_dim: usize, positions: &[usize]) -> Polyhedron {
        debug_assert_eq!(positions.len(), self.dim);
        if self.empty {
            return Polyhedron::empty(new_dim);
        }
        let place = |c: &Constraint| {
            let mut normal = RatVec::zeros(new_dim);
            for (i, &p) in positions.iter().enumerate() {
                normal[p] = c.normal[i].clone();
            }
            Constraint::new(normal, c.offset.clone())
        };
        Polyhedron::from_hrep(
            new_dim,
            self.hrep.ineqs.iter().map(place).collect(),
            self.hrep.eqs.iter().map(place).collect(),
        )
    }

    /// Cartesian product `self × other`.
    pub fn product(&self, other: &Polyhedron) -> Polyhedron {
        let n = self.dim + other.dim;
        let first: Vec<usize> = (0..self.dim).collect();
        let second: Vec<usize> = (self.dim..n).collect();
        self.lift(n, &first)
            .intersect(&other.lift(n, &second))
            .expect("lifted factors share the product dimension")
    }

    /// Reorders coordinates: new coordinate `i` is old coordinate `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Polyhedron {
        debug_assert_eq!(order.len(), self.dim);
        let mut positions = vec![0; self.dim];
        for (new, &old) in order.iter().enumerate() {
            positions[old] = new;
        }
        self.lift(self.dim, &positions)
    }

    /// Fixes the listed coordinates and returns the slice over the remaining
    /// coordinates (in increasing order).
    pub fn slice(&self, fixed: &[(usize, Rational)]) -> Polyhedron {
        let fixed_idx: Vec<usize> = fixed.iter().map(|(i, _)| *i).collect();
        let keep: Vec<usize> = (0..self.dim).filter(|i| !fixed_idx.contains(i)).collect();
        if self.empty {
            return Polyhedron::empty(keep.len());
        }
        let substitute = |c: &Constraint| {
            let mut offset = c.offset.clone();
            for (i, value) in fixed {
                offset -= &c.normal[*i] * value;
            }
            Constraint::new(c.normal.select(&keep), offset)
        };
        Polyhedron::from_hrep(
            keep.len(),
            self.hrep.ineqs.iter().map(substitute).collect(),
            self.hrep.eqs.iter().map(substitute).collect(),
        )
    }

    /// Infimum and supremum of `⟨a, x⟩` over the set; `None` marks an infinite bound.
    pub fn linear_range(&self, a: &[Rational]) -> Option<(Option<Rational>, Option<Rational>)> {
        if self.empty {
            return None;
        }
        let mut lo_inf = self.vrep.lines.iter().any(|l| !dot(a, l).is_zero());
        let mut hi_inf = lo_inf;
        for r in &self.vrep.rays {
            let d = dot(a, r);
            if d.is_positive() {
                hi_inf = true;
            } else if d.is_negative() {
                lo_inf = true;
            }
        }
        let values: Vec<Rational> = self.vrep.vertices.iter().map(|v| dot(a, v)).collect();
        let lo = values.iter().min().cloned().filter(|_| !lo_inf);
        let hi = values.iter().max().cloned().filter(|_| !hi_inf);
        Some((lo, hi))
    }

    /// Where `⟨c.normal, x⟩ - c.offset` can take values on the set.
    pub fn side_of(&self, c: &Constraint) -> Side {
        let Some((lo, hi)) = self.linear_range(&c.normal) else {
            return Side::Empty;
        };
        let below = lo.as_ref().is_none_or(|l| *l < c.offset);
        let above = hi.as_ref().is_none_or(|h| *h > c.offset);
        match (below, above) {
            (true, true) => Side::Cuts,
            (true, false) => Side::Below,
            (false, true) => Side::Above,
            (false, false) => Side::On,
        }
    }

    /// Tangent cone at a point of the set: the active constraints, homogenized.
    pub fn tangent_cone(&self, x: &[Rational]) -> Result<Polyhedron> {
        if !self.contains(x) {
            return Err(Error::PointNotInSet);
        }
        let homog = |c: &Constraint| Constraint::new(c.normal.clone(), Rational::zero());
        let ineqs = self.hrep.ineqs.iter().filter(|c| c.slack(x).is_zero()).map(homog).collect();
        let eqs = self.hrep.eqs.iter().map(homog).collect();
        Ok(Polyhedron::from_hrep(self.dim, ineqs, eqs))
    }

    /// Normal cone of convex analysis at a point of the set.
    pub fn normal_cone(&self, x: &[Rational]) -> Result<Polyhedron> {
        if !self.contains(x) {
            return Err(Error::PointNotInSet);
        }
        let rays = self
            .hrep
            .ineqs
            .iter()
            .filter(|c| c.slack(x).is_zero())
            .map(|c| c.normal.clone())
            .collect();
        let lines = self.hrep.eqs.iter().map(|c| c.normal.clone()).collect();
        Ok(Polyhedron::cone(self.dim, rays, lines))
    }
}

/// Position of a set relative to a hyperplane `⟨a, x⟩ = b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Empty,
    /// Entirely inside the hyperplane.
    On,
    /// `⟨a, x⟩ <= b` everywhere, with strict inequality somewhere.
    Below,
    /// `⟨a, x⟩ >= b` everywhere, with strict inequality somewhere.
    Above,
    /// Points strictly on both sides.
    Cuts,
}

impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            return f.write_str("∅");
        }
        if self.dim == 1 {
            let (lo, hi) = self.linear_range(&[Rational::one()]).expect("nonempty");
            return match (lo, hi) {
                (Some(a), Some(b)) if a == b => write!(f, "{{{a}}}"),
                (Some(a), Some(b)) => write!(f, "[{a}, {b}]"),
                (Some(a), None) => write!(f, "[{a}, inf)"),
                (None, Some(b)) => write!(f, "(-inf, {b}]"),
                (None, None) => f.write_str("(-inf, inf)"),
            };
        }
        f.write_str("conv{")?;
        for (i, v) in self.vrep.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")?;
        if !self.vrep.rays.is_empty() {
            f.write_str(" + cone{")?;
            for (i, r) in self.vrep.rays.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{r}")?;
            }
            f.write_str("}")?;
        }
        if !self.vrep.lines.is_empty() {
            f.write_str(" + span{")?;
            for (i, l) in self.vrep.lines.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

fn to_rational(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

/// H → V through the homogenized cone `{(x,t) : a·x <= b t, c·x = d t, t >= 0}`.
fn vrep_from_hrep(dim: usize, ineqs: &[Constraint], eqs: &[Constraint]) -> Option<VRep> {
    let mut ineq_rows: Vec<IntVec> = ineqs.iter().map(Constraint::homogenized).collect();
    let mut t_nonneg = vec![BigInt::zero(); dim + 1];
    t_nonneg[dim] = BigInt::from(-1);
    ineq_rows.push(t_nonneg);
    let eq_rows: Vec<IntVec> = eqs.iter().map(Constraint::homogenized).collect();
    let gens = dd_cone(dim + 1, &eq_rows, &ineq_rows);

    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for g in gens.rays {
        let t = g[dim].clone();
        let coords = to_rational(&g[..dim]);
        if t.is_zero() {
            rays.push(RatVec(coords));
        } else {
            debug_assert!(t.is_positive());
            let t = Rational::from_integer(t);
            vertices.push(RatVec(coords.into_iter().map(|c| c / &t).collect()));
        }
    }
    if vertices.is_empty() {
        return None;
    }
    let lines = gens.lines.iter().map(|l| RatVec(to_rational(&l[..dim]))).collect();
    Some(canonical_vrep(dim, vertices, rays, lines))
}

fn canonical_vrep(dim: usize, vertices: Vec<RatVec>, rays: Vec<RatVec>, lines: Vec<RatVec>) -> VRep {
    let (basis, pivots) = rref(lines.into_iter().map(|l| l.0).collect(), dim);
    let lines: Vec<RatVec> = basis.iter().map(|row| primitive_direction(row)).collect();
    let mut rays: Vec<RatVec> = rays
        .into_iter()
        .filter_map(|mut r| {
            reduce_modulo(&mut r.0, &basis, &pivots);
            (!r.is_zero()).then(|| primitive_direction(&r))
        })
        .collect();
    rays.sort();
    rays.dedup();
    let mut vertices: Vec<RatVec> = vertices
        .into_iter()
        .map(|mut v| {
            reduce_modulo(&mut v.0, &basis, &pivots);
            v
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    VRep { vertices, rays, lines }
}

/// V → H by running the double description on the polar of the
/// homogenized cone generated by `(v, 1)`, `(r, 0)` and `±(l, 0)`.
fn hrep_from_vrep(dim: usize, v: &VRep) -> HRep {
    let lift = |p: &RatVec, t: i64| {
        let mut coords = p.0.clone();
        coords.push(Rational::from_integer(BigInt::from(t)));
        scale_to_integers(&coords)
    };
    let mut ineq_rows: Vec<IntVec> = v.vertices.iter().map(|p| lift(p, 1)).collect();
    ineq_rows.extend(v.rays.iter().map(|r| lift(r, 0)));
    let eq_rows: Vec<IntVec> = v.lines.iter().map(|l| lift(l, 0)).collect();
    let gens = dd_cone(dim + 1, &eq_rows, &ineq_rows);

    // Polar element (α, γ) encodes α·x + γ t <= 0, i.e. α·x <= -γ.
    let as_row = |g: &IntVec| -> Vec<Rational> {
        let mut row = to_rational(g);
        row[dim] = -&row[dim];
        row
    };
    let (eq_basis, pivots) = rref(gens.lines.iter().map(as_row).collect(), dim + 1);
    debug_assert!(pivots.iter().all(|&p| p < dim), "inconsistent affine hull");
    let to_constraint = |row: &[Rational]| {
        let ints = scale_to_integers(row);
        let mut coords = to_rational(&ints);
        let offset = coords.pop().expect("homogenized row");
        Constraint::new(RatVec(coords), offset)
    };
    let eqs: Vec<Constraint> = eq_basis.iter().map(|row| to_constraint(row)).collect();
    let mut ineqs: Vec<Constraint> = gens
        .rays
        .iter()
        .filter_map(|g| {
            let mut row = as_row(g);
            reduce_modulo(&mut row, &eq_basis, &pivots);
            if row[..dim].iter().all(Zero::is_zero) {
                None
            } else {
                Some(to_constraint(&row))
            }
        })
        .collect();
    ineqs.sort();
    ineqs.dedup();
    HRep { eqs, ineqs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{int, rat};

    fn v(c: &[i64]) -> RatVec {
        RatVec::from_i64(c)
    }

    fn unit_square() -> Polyhedron {
        Polyhedron::from_hrep(
            2,
            vec![
                Constraint::from_i64(&[1, 0], 1),
                Constraint::from_i64(&[-1, 0], 0),
                Constraint::from_i64(&[0, 1], 1),
                Constraint::from_i64(&[0, -1], 0),
            ],
            vec![],
        )
    }

    #[test]
    fn square_vertices() {
        let sq = unit_square();
        assert_eq!(sq.vertices(), &[v(&[0, 0]), v(&[0, 1]), v(&[1, 0]), v(&[1, 1])]);
        assert!(sq.rays().is_empty() && sq.lines().is_empty());
        assert_eq!(sq.dimension(), Some(2));
    }

    #[test]
    fn quadrant_from_generators() {
        let q = Polyhedron::cone(2, vec![v(&[1, 0]), v(&[0, 1])], vec![]);
        assert_eq!(
            q.ineqs(),
            &[Constraint::from_i64(&[-1, 0], 0), Constraint::from_i64(&[0, -1], 0)]
        );
        assert!(q.is_cone());
    }

    #[test]
    fn redundant_inequality_removed() {
        let p = Polyhedron::from_hrep(
            2,
            vec![
                Constraint::from_i64(&[1, 1], 1),
                Constraint::from_i64(&[-1, 0], 0),
                Constraint::from_i64(&[0, -1], 0),
                Constraint::from_i64(&[1, -1], 1),
            ],
            vec![],
        );
        assert_eq!(p.vertices(), &[v(&[0, 0]), v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(p.ineqs().len(), 3);
    }

    #[test]
    fn infeasible_is_empty_not_error() {
        let p = Polyhedron::from_hrep(
            1,
            vec![Constraint::from_i64(&[1], 1), Constraint::from_i64(&[-1], -2)],
            vec![],
        );
        assert!(p.is_empty());
        assert_eq!(p, Polyhedron::empty(1));
    }

    #[test]
    fn representations_are_canonical() {
        let a = Polyhedron::from_hrep(
            2,
            vec![Constraint::from_i64(&[2, 0], 2), Constraint::from_i64(&[-3, 0], 0)],
            vec![Constraint::from_i64(&[2, 2], 2)],
        );
        let b = Polyhedron::from_vrep(2, vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 0])], vec![], vec![]);
        assert_eq!(a, b);
    }

    #[test]
    fn lines_reduce_vertices() {
        let strip = Polyhedron::from_hrep(
            2,
            vec![Constraint::from_i64(&[0, 1], 1), Constraint::from_i64(&[0, -1], 0)],
            vec![],
        );
        assert_eq!(strip.lines(), &[v(&[1, 0])]);
        assert_eq!(strip.vertices(), &[v(&[0, 0]), v(&[0, 1])]);
        let shifted = Polyhedron::from_vrep(2, vec![v(&[5, 0]), v(&[-2, 1])], vec![], vec![v(&[3, 0])]);
        assert_eq!(strip, shifted);
    }

    #[test]
    fn universe_and_point() {
        let u = Polyhedron::universe(3);
        assert!(u.is_universe());
        assert_eq!(u.dimension(), Some(3));
        let p = Polyhedron::point(RatVec(vec![int(1, 2), rat(-3)]));
        assert_eq!(p.dimension(), Some(0));
        assert!(p.contains(&[int(1, 2), rat(-3)]));
        assert!(!p.contains(&[rat(0), rat(-3)]));
    }

    #[test]
    fn polar_examples() {
        let quadrant = Polyhedron::cone(2, vec![v(&[1, 0]), v(&[0, 1])], vec![]);
        let neg = Polyhedron::cone(2, vec![v(&[-1, 0]), v(&[0, -1])], vec![]);
        assert_eq!(quadrant.polar_cone().unwrap(), neg);
        let origin = Polyhedron::point(RatVec::zeros(2));
        assert_eq!(origin.polar_cone().unwrap(), Polyhedron::universe(2));
        let wedge = Polyhedron::cone(2, vec![v(&[1, 0]), v(&[1, 1])], vec![]);
        // (1,-1) pairs positively with (1,0); the polar is spanned by (0,-1) and (-1,1).
        let expected = Polyhedron::cone(2, vec![v(&[0, -1]), v(&[-1, 1])], vec![]);
        assert_eq!(wedge.polar_cone().unwrap(), expected);
        assert_eq!(unit_square().polar_cone(), Err(Error::NotACone));
    }

    #[test]
    fn minkowski_examples() {
        let seg = |a: i64, b: i64| Polyhedron::from_vrep(1, vec![v(&[a]), v(&[b])], vec![], vec![]);
        assert_eq!(seg(0, 1).minkowski_sum(&seg(0, 1)).unwrap(), seg(0, 2));
        let sx = Polyhedron::from_vrep(2, vec![v(&[0, 0]), v(&[1, 0])], vec![], vec![]);
        let sy = Polyhedron::from_vrep(2, vec![v(&[0, 0]), v(&[0, 1])], vec![], vec![]);
        assert_eq!(sx.minkowski_sum(&sy).unwrap(), unit_square());
        let quadrant = Polyhedron::cone(2, vec![v(&[1, 0]), v(&[0, 1])], vec![]);
        let origin = Polyhedron::point(RatVec::zeros(2));
        assert_eq!(origin.minkowski_sum(&quadrant).unwrap(), quadrant);
    }

    #[test]
    fn relint_and_contains() {
        let seg = Polyhedron::from_vrep(1, vec![v(&[0]), v(&[1])], vec![], vec![]);
        assert_eq!(seg.relint_point().unwrap(), RatVec(vec![int(1, 2)]));
        let quadrant = Polyhedron::cone(2, vec![v(&[1, 0]), v(&[0, 1])], vec![]);
        assert!(quadrant.contains(&v(&[1, 1])));
        assert!(!quadrant.contains(&v(&[-1, 0])));
        assert_eq!(Polyhedron::empty(2).relint_point(), Err(Error::EmptyInput));
        let left = Polyhedron::from_hrep(1, vec![Constraint::from_i64(&[1], 1)], vec![]);
        let right = Polyhedron::from_hrep(1, vec![Constraint::from_i64(&[-1], -2)], vec![]);
        assert!(left.intersect(&right).unwrap().is_empty());
    }

    #[test]
    fn slice_lift_and_permute() {
        let tri = Polyhedron::from_vrep(2, vec![v(&[0, 0]), v(&[2, 0]), v(&[0, 2])], vec![], vec![]);
        let at_one = tri.slice(&[(0, rat(1))]);
        assert_eq!(at_one, Polyhedron::from_vrep(1, vec![v(&[0]), v(&[1])], vec![], vec![]));
        let swapped = tri.permuted(&[1, 0]);
        assert_eq!(swapped, tri);
        let lifted = Polyhedron::point(v(&[3])).lift(2, &[1]);
        assert!(lifted.contains(&v(&[-7, 3])));
        assert_eq!(lifted.lines(), &[v(&[1, 0])]);
    }
}

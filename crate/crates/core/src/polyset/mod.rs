//! Finite unions of closed convex polyhedra.

mod arrangement;
mod subset;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{Constraint, Polyhedron, RatMatrix, RatVec, Rational};

pub use arrangement::{arrangement_cells, refine, ArrangementCell};

/// A closed set `∪ pieces`, kept in canonical form: no empty pieces, no
/// piece contained in another single piece, pieces sorted.
///
/// Structural equality implies set equality but not conversely; use
/// [`PolySet::set_equal`] for the latter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolySet {
    dim: usize,
    pieces: Vec<Polyhedron>,
}

impl PolySet {
    pub fn new(dim: usize, pieces: Vec<Polyhedron>) -> Self {
        debug_assert!(pieces.iter().all(|p| p.dim() == dim));
        let mut pieces: Vec<Polyhedron> = pieces.into_iter().filter(|p| !p.is_empty()).collect();
        pieces.sort();
        pieces.dedup();
        let mut kept: Vec<Polyhedron> = Vec::with_capacity(pieces.len());
        for (i, p) in pieces.iter().enumerate() {
            let covered = pieces
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && q.contains_polyhedron(p));
            if !covered {
                kept.push(p.clone());
            }
        }
        PolySet { dim, pieces: kept }
    }

    pub fn empty(dim: usize) -> Self {
        PolySet { dim, pieces: Vec::new() }
    }

    pub fn universe(dim: usize) -> Self {
        PolySet::from(Polyhedron::universe(dim))
    }

    pub fn origin(dim: usize) -> Self {
        PolySet::from(Polyhedron::point(RatVec::zeros(dim)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[Polyhedron] {
        &self.pieces
    }

    pub fn into_pieces(self) -> Vec<Polyhedron> {
        self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn member(&self, x: &[Rational]) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    /// True iff the set is exactly `{0}`.
    pub fn is_origin(&self) -> bool {
        self.pieces.len() == 1 && self.pieces[0].is_origin()
    }

    /// True iff every piece is a cone with apex at the origin.
    pub fn is_conic(&self) -> bool {
        self.pieces.iter().all(Polyhedron::is_cone)
    }

    /// Some point of the set other than the origin, if there is one.
    pub fn nonzero_point(&self) -> Option<RatVec> {
        for p in &self.pieces {
            if let Some(v) = p.vertices().iter().find(|v| !v.is_zero()) {
                return Some(v.clone());
            }
            let base = &p.vertices()[0];
            if let Some(d) = p.rays().iter().chain(p.lines()).next() {
                return Some(base.add(d));
            }
        }
        None
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &PolySet) -> Result<bool> {
        Ok(self.uncovered_point(other)?.is_none())
    }

    /// A point of `self` outside `other`, or `None` when `self ⊆ other`.
    pub fn uncovered_point(&self, other: &PolySet) -> Result<Option<RatVec>> {
        check_dim(self.dim, other.dim)?;
        Ok(subset::uncovered_point(&self.pieces, &other.pieces))
    }

    pub fn set_equal(&self, other: &PolySet) -> Result<bool> {
        if self == other {
            return Ok(true);
        }
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    pub fn union(&self, other: &PolySet) -> Result<PolySet> {
        check_dim(self.dim, other.dim)?;
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        Ok(PolySet::new(self.dim, pieces))
    }

    pub fn union_all<I: IntoIterator<Item = PolySet>>(dim: usize, sets: I) -> Result<PolySet> {
        let mut pieces = Vec::new();
        for s in sets {
            check_dim(dim, s.dim)?;
            pieces.extend(s.pieces);
        }
        Ok(PolySet::new(dim, pieces))
    }

    fn pairwise<F>(&self, other: &PolySet, dim: usize, op: F) -> Result<PolySet>
    where
        F: Fn(&Polyhedron, &Polyhedron) -> Result<Polyhedron>,
    {
        let mut pieces = Vec::with_capacity(self.pieces.len() * other.pieces.len());
        for p in &self.pieces {
            for q in &other.pieces {
                pieces.push(op(p, q)?);
            }
        }
        Ok(PolySet::new(dim, pieces))
    }

    pub fn minkowski_sum(&self, other: &PolySet) -> Result<PolySet> {
        check_dim(self.dim, other.dim)?;
        self.pairwise(other, self.dim, Polyhedron::minkowski_sum)
    }

    pub fn intersect(&self, other: &PolySet) -> Result<PolySet> {
        check_dim(self.dim, other.dim)?;
        self.pairwise(other, self.dim, Polyhedron::intersect)
    }

    pub fn intersect_polyhedron(&self, p: &Polyhedron) -> Result<PolySet> {
        self.intersect(&PolySet::from(p.clone()))
    }

    /// Cartesian product `self × other`.
    pub fn product(&self, other: &PolySet) -> PolySet {
        self.pairwise(other, self.dim + other.dim, |p, q| Ok(p.product(q)))
            .expect("product cannot fail")
    }

    pub fn project(&self, keep: &[usize]) -> Result<PolySet> {
        if let Some(&bad) = keep.iter().find(|&&k| k >= self.dim) {
            return Err(Error::InvalidArgument(alloc::format!(
                "coordinate {bad} out of range for dimension {}",
                self.dim
            )));
        }
        Ok(self.map_pieces(keep.len(), |p| p.project(keep)))
    }

    pub fn affine_image(&self, a: &RatMatrix, b: &RatVec) -> Result<PolySet> {
        let mut pieces = Vec::with_capacity(self.pieces.len());
        for p in &self.pieces {
            pieces.push(p.affine_image(a, b)?);
        }
        Ok(PolySet::new(a.nrows(), pieces))
    }

    pub fn negated(&self) -> PolySet {
        self.map_pieces(self.dim, Polyhedron::negated)
    }

    pub fn translated(&self, shift: &RatVec) -> PolySet {
        self.map_pieces(self.dim, |p| p.translated(shift))
    }

    pub fn lift(&self, new_dim: usize, positions: &[usize]) -> PolySet {
        self.map_pieces(new_dim, |p| p.lift(new_dim, positions))
    }

    pub fn permuted(&self, order: &[usize]) -> PolySet {
        self.map_pieces(self.dim, |p| p.permuted(order))
    }

    /// Fixes coordinates, see [`Polyhedron::slice`].
    pub fn slice(&self, fixed: &[(usize, Rational)]) -> PolySet {
        self.map_pieces(self.dim - fixed.len(), |p| p.slice(fixed))
    }

    /// Adds the same constraints to every piece.
    pub fn constrained(&self, ineqs: &[Constraint], eqs: &[Constraint]) -> PolySet {
        self.map_pieces(self.dim, |p| p.constrained(ineqs, eqs))
    }

    pub fn map_pieces<F: Fn(&Polyhedron) -> Polyhedron>(&self, dim: usize, f: F) -> PolySet {
        PolySet::new(dim, self.pieces.iter().map(f).collect())
    }

    /// Merges pairs of pieces whose union is already convex. The point set
    /// is unchanged; only the description gets shorter.
    pub fn coalesced(&self) -> PolySet {
        let mut pieces = self.pieces.clone();
        'outer: loop {
            for i in 0..pieces.len() {
                for j in i + 1..pieces.len() {
                    let hull = convex_hull(&pieces[i], &pieces[j]);
                    let pair = PolySet::new(self.dim, alloc::vec![pieces[i].clone(), pieces[j].clone()]);
                    let merged = subset::uncovered_point(core::slice::from_ref(&hull), &pair.pieces).is_none();
                    if merged {
                        pieces.swap_remove(j);
                        pieces[i] = hull;
                        pieces = PolySet::new(self.dim, pieces).pieces;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        PolySet::new(self.dim, pieces)
    }
}

fn convex_hull(p: &Polyhedron, q: &Polyhedron) -> Polyhedron {
    let gather = |f: fn(&Polyhedron) -> &[RatVec]| f(p).iter().chain(f(q)).cloned().collect();
    Polyhedron::from_vrep(p.dim(), gather(Polyhedron::vertices), gather(Polyhedron::rays), gather(Polyhedron::lines))
}

impl From<Polyhedron> for PolySet {
    fn from(p: Polyhedron) -> Self {
        let dim = p.dim();
        PolySet::new(dim, alloc::vec![p])
    }
}

impl fmt::Display for PolySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return f.write_str("∅");
        }
        let mut pieces = self.pieces.clone();
        if self.dim == 1 {
            let key = |p: &Polyhedron| p.linear_range(&[Rational::from_integer(1.into())]);
            pieces.sort_by_key(|p| key(p).map(|(lo, hi)| (lo.is_some(), lo, hi)));
        }
        for (i, p) in pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A finite union of polyhedral convex cones with apex at the origin.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConeUnion(PolySet);

impl ConeUnion {
    pub fn new(set: PolySet) -> Result<Self> {
        if set.is_empty() || !set.is_conic() {
            return Err(Error::NotACone);
        }
        Ok(ConeUnion(set))
    }

    pub fn from_cones(dim: usize, cones: Vec<Polyhedron>) -> Result<Self> {
        ConeUnion::new(PolySet::new(dim, cones))
    }

    pub fn origin(dim: usize) -> Self {
        ConeUnion(PolySet::origin(dim))
    }

    pub fn as_set(&self) -> &PolySet {
        &self.0
    }

    pub fn into_set(self) -> PolySet {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn pieces(&self) -> &[Polyhedron] {
        self.0.pieces()
    }

    pub fn member(&self, x: &[Rational]) -> bool {
        self.0.member(x)
    }

    pub fn is_origin(&self) -> bool {
        self.0.is_origin()
    }

    pub fn set_equal(&self, other: &ConeUnion) -> Result<bool> {
        self.0.set_equal(&other.0)
    }
}

impl fmt::Display for ConeUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

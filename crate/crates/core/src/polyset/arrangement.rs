//! Arrangement refinement and local cells around a point.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::PolySet;
use crate::error::{Error, Result};
use crate::exactgeom::{scale_to_integers, Constraint, Polyhedron, RatVec, Rational, Side};

/// A relatively open cell of the local arrangement at an anchor point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrangementCell {
    /// Closure of the cell's direction cone, so the cell is `anchor + relint(cone)` near the anchor.
    pub cone: Polyhedron,
    /// A direction in the relative interior of `cone`.
    pub direction: RatVec,
    /// Closure of the cell intersected with the active pieces: `(anchor + cone) ∩ ⋂ P_j`.
    pub region: Polyhedron,
    /// Indices of the pieces containing the cell near the anchor.
    pub active: Vec<usize>,
}

/// `c` scaled to coprime integers with the first nonzero normal coordinate positive.
fn normalized_hyperplane(c: &Constraint) -> Option<Constraint> {
    if c.normal.is_zero() {
        return None;
    }
    let mut coords = c.normal.0.clone();
    coords.push(c.offset.clone());
    let mut ints = scale_to_integers(&coords);
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        ints.iter_mut().for_each(|x| *x = -&*x);
    }
    let mut coords: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
    let offset = coords.pop().expect("nonempty");
    Some(Constraint::new(RatVec(coords), offset))
}

/// Closures of the nonempty cells into which `hyperplanes`, together with
/// the polyhedron's own inequalities, cut `p`. Each cell is a relatively
/// open polyhedron equal to the relative interior of its closure.
pub fn refine(p: &Polyhedron, hyperplanes: &[Constraint]) -> Vec<Polyhedron> {
    if p.is_empty() {
        return Vec::new();
    }
    let all: BTreeSet<Constraint> = p
        .ineqs()
        .iter()
        .chain(hyperplanes)
        .filter_map(normalized_hyperplane)
        .collect();
    let all: Vec<Constraint> = all.into_iter().collect();

    let mut out: BTreeSet<Polyhedron> = BTreeSet::new();
    // (closure, strict constraints as `⟨a,x⟩ < b`, next hyperplane)
    let mut stack: Vec<(Polyhedron, Vec<Constraint>, usize)> = alloc::vec![(p.clone(), Vec::new(), 0)];
    while let Some((cl, strict, k)) = stack.pop() {
        if k == all.len() {
            out.insert(cl);
            continue;
        }
        let h = &all[k];
        let below = h.clone();
        let above = h.negated();
        let mut push = |cell: Polyhedron, extra: Option<&Constraint>| {
            if cell.is_empty() {
                return;
            }
            let mut strict = strict.clone();
            strict.extend(extra.cloned());
            if strict.iter().all(|s| cell.side_of(s) != Side::On) {
                stack.push((cell, strict, k + 1));
            }
        };
        match cl.side_of(h) {
            Side::Empty => {}
            Side::On => push(cl.clone(), None),
            Side::Below => {
                push(cl.constrained(&[], core::slice::from_ref(h)), None);
                push(cl.clone(), Some(&below));
            }
            Side::Above => {
                push(cl.constrained(&[], core::slice::from_ref(h)), None);
                push(cl.clone(), Some(&above));
            }
            Side::Cuts => {
                push(cl.constrained(&[], core::slice::from_ref(h)), None);
                push(cl.constrained(core::slice::from_ref(&below), &[]), Some(&below));
                push(cl.constrained(core::slice::from_ref(&above), &[]), Some(&above));
            }
        }
    }
    let mut cells: Vec<Polyhedron> = out.into_iter().collect();
    cells.sort_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| a.cmp(b)));
    cells
}

/// Cells of the common refinement of the pieces' faces near `anchor`.
///
/// Near the anchor each piece coincides with `anchor` plus its tangent
/// cone, so the refinement is computed on tangent cones using every facet
/// hyperplane of every active tangent cone. Pieces not containing the
/// anchor are irrelevant near it.
pub fn arrangement_cells(s: &PolySet, anchor: &[Rational]) -> Result<Vec<ArrangementCell>> {
    let active: Vec<usize> = (0..s.len()).filter(|&i| s.pieces()[i].contains(anchor)).collect();
    if active.is_empty() {
        return Err(Error::PointNotInSet);
    }
    let tangents: Vec<(usize, Polyhedron)> = active
        .iter()
        .map(|&i| (i, s.pieces()[i].tangent_cone(anchor).expect("anchor in piece")))
        .collect();
    let hyperplanes: Vec<Constraint> = tangents
        .iter()
        .flat_map(|(_, t)| t.ineqs().iter().chain(t.eqs()).cloned())
        .collect();
    let mut closures: BTreeSet<Polyhedron> = BTreeSet::new();
    for (_, t) in &tangents {
        closures.extend(refine(t, &hyperplanes));
    }
    let base = RatVec(anchor.to_vec());
    let mut cells: Vec<ArrangementCell> = closures
        .into_iter()
        .map(|cone| {
            let direction = cone.relint_point().expect("cells are nonempty");
            let active: Vec<usize> = tangents
                .iter()
                .filter(|(_, t)| t.contains(&direction))
                .map(|(i, _)| *i)
                .collect();
            let mut region = cone.translated(&base);
            for &i in &active {
                region = region.intersect(&s.pieces()[i]).expect("same dimension");
            }
            ArrangementCell { cone, direction, region, active }
        })
        .collect();
    cells.sort_by(|a, b| a.cone.dimension().cmp(&b.cone.dimension()).then_with(|| a.cone.cmp(&b.cone)));
    Ok(cells)
}

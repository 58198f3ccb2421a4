//! Tangent cones and regular/limiting normal cones to finite unions of polyhedra.
//!
//! A finite union of polyhedra coincides near any of its points with the
//! point plus the union of tangent cones of the pieces through it. The
//! regular normal cone is the polar of that union. The limiting normal cone
//! is the outer limit of regular normal cones at nearby points; those are
//! constant on the relatively open cells of the local arrangement, so the
//! outer limit is a finite union over cells.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactgeom::{Polyhedron, Rational};
use crate::polyset::{arrangement_cells, ConeUnion, PolySet};

/// Regular and limiting normal cones at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePair {
    pub regular: Polyhedron,
    pub limiting: ConeUnion,
}

fn active_pieces<'a>(s: &'a PolySet, x: &[Rational]) -> Result<Vec<&'a Polyhedron>> {
    let active: Vec<&Polyhedron> = s.pieces().iter().filter(|p| p.contains(x)).collect();
    if active.is_empty() {
        Err(Error::PointNotInSet)
    } else {
        Ok(active)
    }
}

pub fn tangent_cone(s: &PolySet, x: &[Rational]) -> Result<ConeUnion> {
    let cones = active_pieces(s, x)?
        .into_iter()
        .map(|p| p.tangent_cone(x))
        .collect::<Result<Vec<_>>>()?;
    ConeUnion::from_cones(s.dim(), cones)
}

/// `N̂(x; s)`: the intersection of the convex normal cones of the active pieces.
pub fn frechet_normal_cone(s: &PolySet, x: &[Rational]) -> Result<Polyhedron> {
    let mut out: Option<Polyhedron> = None;
    for p in active_pieces(s, x)? {
        let n = p.normal_cone(x)?;
        out = Some(match out {
            None => n,
            Some(acc) => acc.intersect(&n)?,
        });
    }
    Ok(out.expect("at least one active piece"))
}

/// `N(x̄; s)` as the union over local arrangement cells of the regular
/// normal cone at a representative of each cell.
pub fn limiting_normal_cone(s: &PolySet, x: &[Rational]) -> Result<ConeUnion> {
    let cells = arrangement_cells(s, x)?;
    let mut cones = Vec::with_capacity(cells.len());
    for cell in &cells {
        let mut acc: Option<Polyhedron> = None;
        for &i in &cell.active {
            let t = s.pieces()[i].tangent_cone(x)?;
            let n = t.normal_cone(&cell.direction)?;
            acc = Some(match acc {
                None => n,
                Some(a) => a.intersect(&n)?,
            });
        }
        cones.push(acc.expect("cells lie in some piece"));
    }
    ConeUnion::from_cones(s.dim(), cones)
}

pub fn normal_cones(s: &PolySet, x: &[Rational]) -> Result<ConePair> {
    Ok(ConePair { regular: frechet_normal_cone(s, x)?, limiting: limiting_normal_cone(s, x)? })
}

/// Normal regularity: the regular and limiting normal cones coincide.
pub fn is_normally_regular(s: &PolySet, x: &[Rational]) -> Result<bool> {
    let pair = normal_cones(s, x)?;
    PolySet::from(pair.regular).set_equal(pair.limiting.as_set())
}

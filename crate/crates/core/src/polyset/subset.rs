//! Containment of a polyhedron in a union by region splitting.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactgeom::{Constraint, Polyhedron, RatVec, Rational, Side};

/// A point of `∪ a` not covered by `∪ b`, or `None` if `∪ a ⊆ ∪ b`.
pub(super) fn uncovered_point(a: &[Polyhedron], b: &[Polyhedron]) -> Option<RatVec> {
    a.iter().find_map(|p| uncovered_in_region(p.clone(), b))
}

/// Only pieces meeting `region` in a set of full relative dimension matter:
/// the others are nowhere dense in it. If one of them contains the region we
/// are done; otherwise one of its constraints cuts the region in two.
fn uncovered_in_region(region: Polyhedron, b: &[Polyhedron]) -> Option<RatVec> {
    if region.is_empty() {
        return None;
    }
    let mut stack = alloc::vec![region];
    while let Some(r) = stack.pop() {
        let rdim = r.dimension();
        let mut cut: Option<Constraint> = None;
        let mut covered = false;
        for q in b {
            if q.contains_polyhedron(&r) {
                covered = true;
                break;
            }
            if cut.is_some() {
                continue;
            }
            let meet = r.intersect(q).expect("same dimension");
            if meet.dimension() != rdim {
                continue;
            }
            cut = q
                .all_halfspaces()
                .into_iter()
                .find(|h| r.side_of(h) == Side::Cuts);
            debug_assert!(cut.is_some(), "a fat piece not containing the region must cut it");
        }
        if covered {
            continue;
        }
        match cut {
            Some(h) => {
                // Inner half first on the stack so the outer half is explored first.
                stack.push(r.constrained(core::slice::from_ref(&h), &[]));
                stack.push(r.constrained(&[h.negated()], &[]));
            }
            None => return Some(witness(&r, b)),
        }
    }
    None
}

/// A point of `r` avoiding every piece of `b`, assuming each piece meets `r`
/// in a set of lower relative dimension.
///
/// Vertices are tried first. After that, points on the curve
/// `p + Σ t^(i+1) d_i` for a relative-interior point `p` and spanning
/// directions `d_i` are tried with `t = 1/(m k)`. Each thin piece lies in a
/// hyperplane that meets the curve at finitely many parameters, so the
/// search ends.
fn witness(r: &Polyhedron, b: &[Polyhedron]) -> RatVec {
    let avoids = |x: &RatVec| !b.iter().any(|q| q.contains(x));
    if let Some(v) = r.vertices().iter().rev().find(|v| avoids(v)) {
        return v.clone();
    }
    let p = r.relint_point().expect("nonempty region");
    let mut dirs: Vec<RatVec> = r.vertices().iter().map(|v| v.sub(&p)).collect();
    dirs.extend(r.rays().iter().cloned());
    dirs.extend(r.lines().iter().cloned());
    let m = BigInt::from(dirs.len().max(1));
    let mut k = BigInt::one();
    loop {
        let t = Rational::new(BigInt::one(), &m * &k);
        let mut power = t.clone();
        let mut x = p.clone();
        for d in &dirs {
            x = x.add(&d.scale(&power));
            power *= &t;
        }
        if avoids(&x) {
            debug_assert!(r.contains(&x));
            return x;
        }
        k += 1;
    }
}

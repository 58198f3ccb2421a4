use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::polyhedron::Polyhedron;

impl Polyhedron {
    /// All nonempty faces, `self` included, ordered by dimension and then canonically.
    ///
    /// Faces are reached by repeatedly turning one more inequality into an
    /// equation, starting from the polyhedron itself.
    pub fn faces(&self) -> Vec<Polyhedron> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut seen: BTreeSet<Polyhedron> = BTreeSet::new();
        let mut stack = alloc::vec![self.clone()];
        seen.insert(self.clone());
        while let Some(face) = stack.pop() {
            for c in face.ineqs() {
                let facet = face.constrained(&[], core::slice::from_ref(c));
                if !facet.is_empty() && seen.insert(facet.clone()) {
                    stack.push(facet);
                }
            }
        }
        let mut out: Vec<Polyhedron> = seen.into_iter().collect();
        out.sort_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| a.cmp(b)));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{Constraint, RatVec};
    use alloc::vec;

    fn v(c: &[i64]) -> RatVec {
        RatVec::from_i64(c)
    }

    #[test]
    fn segment_has_three_faces() {
        let seg = Polyhedron::from_vrep(1, vec![v(&[0]), v(&[1])], vec![], vec![]);
        let faces = seg.faces();
        assert_eq!(faces.len(), 3);
        assert_eq!(faces[0], Polyhedron::point(v(&[0])));
        assert_eq!(faces[2], seg);
    }

    #[test]
    fn square_has_nine_faces() {
        let sq = Polyhedron::cube(&v(&[0, 0]), &crate::exactgeom::rat(1));
        let faces = sq.faces();
        assert_eq!(faces.len(), 9);
        let by_dim: Vec<usize> = (0..3).map(|d| faces.iter().filter(|f| f.dimension() == Some(d)).count()).collect();
        assert_eq!(by_dim, vec![4, 4, 1]);
    }

    #[test]
    fn quadrant_has_four_faces() {
        let q = Polyhedron::from_hrep(
            2,
            vec![Constraint::from_i64(&[-1, 0], 0), Constraint::from_i64(&[0, -1], 0)],
            vec![],
        );
        assert_eq!(q.faces().len(), 4);
    }

    #[test]
    fn halfplane_and_space() {
        let h = Polyhedron::from_hrep(2, vec![Constraint::from_i64(&[1, 1], 0)], vec![]);
        assert_eq!(h.faces().len(), 2);
        assert_eq!(Polyhedron::universe(2).faces().len(), 1);
    }
}

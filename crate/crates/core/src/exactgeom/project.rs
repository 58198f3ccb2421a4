//! Fourier–Motzkin projection.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::polyhedron::{Constraint, Polyhedron};
use super::vector::{RatVec, Rational};

/// Rows above this count trigger a redundancy pass between eliminations.
const PRUNE_THRESHOLD: usize = 24;

impl Polyhedron {
    /// Projection onto the coordinates in `keep` (in the given order).
    pub fn project(&self, keep: &[usize]) -> Polyhedron {
        if self.is_empty() {
            return Polyhedron::empty(keep.len());
        }
        let dim = self.dim();
        let mut ineqs: Vec<Constraint> = self.ineqs().to_vec();
        let mut eqs: Vec<Constraint> = self.eqs().to_vec();
        for j in (0..dim).filter(|j| !keep.contains(j)) {
            if let Some(k) = eqs.iter().position(|e| !e.normal[j].is_zero()) {
                let pivot = eqs.swap_remove(k);
                for row in ineqs.iter_mut().chain(eqs.iter_mut()) {
                    eliminate_with(row, &pivot, j);
                }
            } else {
                ineqs = fourier_motzkin_step(ineqs, j);
            }
            if ineqs.len() > PRUNE_THRESHOLD {
                let pruned = Polyhedron::from_hrep(dim, ineqs, eqs);
                ineqs = pruned.ineqs().to_vec();
                eqs = pruned.eqs().to_vec();
            }
        }
        let restrict = |c: &Constraint| Constraint::new(c.normal.select(keep), c.offset.clone());
        Polyhedron::from_hrep(
            keep.len(),
            ineqs.iter().map(restrict).collect(),
            eqs.iter().map(restrict).collect(),
        )
    }
}

/// Subtracts a multiple of `pivot` so that coefficient `j` of `row` vanishes.
fn eliminate_with(row: &mut Constraint, pivot: &Constraint, j: usize) {
    if row.normal[j].is_zero() {
        return;
    }
    let factor = &row.normal[j] / &pivot.normal[j];
    row.normal = row.normal.sub(&pivot.normal.scale(&factor));
    row.offset -= &pivot.offset * &factor;
}

fn fourier_motzkin_step(ineqs: Vec<Constraint>, j: usize) -> Vec<Constraint> {
    let (mut out, mut pos, mut neg) = (Vec::new(), Vec::new(), Vec::new());
    for c in ineqs {
        if c.normal[j].is_positive() {
            pos.push(c);
        } else if c.normal[j].is_negative() {
            neg.push(c);
        } else {
            out.push(c);
        }
    }
    for p in &pos {
        for n in &neg {
            let (a, b) = (&p.normal[j], -&n.normal[j]);
            let normal: RatVec = p.normal.scale(&b).add(&n.normal.scale(a));
            let offset: Rational = &p.offset * &b + &n.offset * a;
            out.push(Constraint::new(normal, offset));
        }
    }
    out
}

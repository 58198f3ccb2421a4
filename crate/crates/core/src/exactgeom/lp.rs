//! Exact phase-one simplex, used as an independent membership test on generators.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::polyhedron::Polyhedron;
use super::vector::Rational;

/// Finds `x >= 0` with `A x = b`, or `None` if the system is infeasible.
///
/// Tableau simplex on the auxiliary problem with Bland's rule, so it
/// terminates on degenerate inputs.
pub fn feasible_nonneg(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    debug_assert_eq!(b.len(), m);
    let width = n + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut t: Vec<Rational> = Vec::with_capacity(width);
        t.extend(row.iter().map(|c| if flip { -c } else { c.clone() }));
        t.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        t.push(if flip { -rhs } else { rhs.clone() });
        tab.push(t);
    }
    // Objective row: minimize the sum of artificials, in reduced form.
    let mut obj = alloc::vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    tab.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| tab[m][j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][width - 1] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            break;
        };
        pivot(&mut tab, r, enter);
        basis[r] = enter;
    }

    if !tab[m][width - 1].is_zero() {
        return None;
    }
    let mut x = alloc::vec![Rational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = tab[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<Rational>], r: usize, c: usize) {
    let inv = tab[r][c].recip();
    for v in tab[r].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i != r && !row[c].is_zero() {
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
    }
}

impl Polyhedron {
    /// Membership decided from the V-representation alone: is `x` a convex
    /// combination of vertices plus a conic combination of rays and lines?
    pub fn contains_by_generators(&self, x: &[Rational]) -> bool {
        if self.is_empty() {
            return false;
        }
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = self
            .vertices()
            .iter()
            .map(|v| {
                let mut c = v.0.clone();
                c.push(Rational::one());
                c
            })
            .chain(self.rays().iter().map(|r| {
                let mut c = r.0.clone();
                c.push(Rational::zero());
                c
            }))
            .chain(self.lines().iter().flat_map(|l| {
                let mut plus = l.0.clone();
                plus.push(Rational::zero());
                let minus = plus.iter().map(|c| -c).collect();
                [plus, minus]
            }))
            .collect();
        let a: Vec<Vec<Rational>> = (0..=n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let mut b: Vec<Rational> = x.to_vec();
        b.push(Rational::one());
        feasible_nonneg(&a, &b).is_some()
    }
}

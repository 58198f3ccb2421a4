use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::vector::Rational;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
///
/// The result is unique for a given row space, which is what makes it usable
/// as a canonical basis for lineality spaces and equation systems.
pub fn rref(mut rows: Vec<Vec<Rational>>, ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for c in rows[r].iter_mut() {
            *c *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (c, p) in row.iter_mut().zip(&pivot_row) {
                    *c -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    debug_assert!(rows.iter().zip(&pivots).all(|(row, &p)| row[p].is_one()));
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).1.len()
}

/// Subtracts multiples of the echelon rows so that every pivot column of
/// `v` becomes zero. With an RREF basis this gives a unique representative
/// of `v` modulo the row space.
pub(crate) fn reduce_modulo(v: &mut [Rational], basis: &[Vec<Rational>], pivots: &[usize]) {
    for (row, &p) in basis.iter().zip(pivots) {
        if !v[p].is_zero() {
            let factor = v[p].clone();
            for (c, b) in v.iter_mut().zip(row) {
                *c -= &factor * b;
            }
        }
    }
}

//! Double description method over the integers.
//!
//! Computes a lineality basis and the extreme rays of a homogeneous cone
//! `{y : A y <= 0, C y = 0}`. Rays are kept as primitive integer vectors, so
//! coefficient growth stays bounded by the data.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::vector::primitive;

pub(crate) type IntVec = Vec<BigInt>;

#[derive(Debug, Default)]
pub(crate) struct ConeGenerators {
    pub lines: Vec<IntVec>,
    pub rays: Vec<IntVec>,
}

/// Fixed-width bitset over inequality indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(bits: usize) -> Self {
        ZeroSet(vec![0; bits.div_ceil(64).max(1)])
    }

    fn with_prefix(bits: usize, upto: usize) -> Self {
        let mut z = Self::new(bits);
        for i in 0..upto {
            z.insert(i);
        }
        z
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn contains_all(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `p * u + q * v`, made primitive.
fn combine(p: &BigInt, u: &[BigInt], q: &BigInt, v: &[BigInt]) -> IntVec {
    primitive(u.iter().zip(v).map(|(a, b)| p * a + q * b).collect())
}

pub(crate) fn dd_cone(dim: usize, eqs: &[IntVec], ineqs: &[IntVec]) -> ConeGenerators {
    let nbits = ineqs.len();
    let mut lines: Vec<IntVec> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<(IntVec, ZeroSet)> = Vec::new();

    let constraints = eqs
        .iter()
        .map(|a| (a, None))
        .chain(ineqs.iter().enumerate().map(|(j, a)| (a, Some(j))));

    for (a, ineq_index) in constraints {
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        let line_dots: Vec<BigInt> = lines.iter().map(|l| dot(a, l)).collect();
        if let Some(pivot) = line_dots.iter().position(|d| !d.is_zero()) {
            let l0 = lines[pivot].clone();
            let d0 = line_dots[pivot].clone();
            let mut new_lines = Vec::with_capacity(lines.len() - 1);
            for (i, (l, d)) in lines.iter().zip(&line_dots).enumerate() {
                if i == pivot {
                    continue;
                }
                if d.is_zero() {
                    new_lines.push(l.clone());
                } else {
                    new_lines.push(combine(&d0, l, &-d, &l0));
                }
            }
            // Shift every ray along l0 onto the hyperplane, keeping its direction.
            let sign = if d0.is_negative() { BigInt::from(-1) } else { BigInt::from(1) };
            let abs_d0 = d0.abs();
            for (r, z) in rays.iter_mut() {
                let rd = dot(a, r);
                if !rd.is_zero() {
                    *r = combine(&abs_d0, r, &-(&sign * &rd), &l0);
                }
                if let Some(j) = ineq_index {
                    z.insert(j);
                }
            }
            if let Some(j) = ineq_index {
                let dir: IntVec = l0.iter().map(|c| -(&sign * c)).collect();
                rays.push((primitive(dir), ZeroSet::with_prefix(nbits, j)));
            }
            lines = new_lines;
            continue;
        }

        let dots: Vec<BigInt> = rays.iter().map(|(r, _)| dot(a, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_negative()).collect();
        if pos.is_empty() && (ineq_index.is_some() || neg.is_empty()) {
            if let Some(j) = ineq_index {
                for (i, (_, z)) in rays.iter_mut().enumerate() {
                    if dots[i].is_zero() {
                        z.insert(j);
                    }
                }
            }
            continue;
        }

        let mut next: Vec<(IntVec, ZeroSet)> = Vec::new();
        for (i, (r, z)) in rays.iter().enumerate() {
            if dots[i].is_zero() {
                let mut z = z.clone();
                if let Some(j) = ineq_index {
                    z.insert(j);
                }
                next.push((r.clone(), z));
            } else if dots[i].is_negative() && ineq_index.is_some() {
                next.push((r.clone(), z.clone()));
            }
        }
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.intersect(&rays[q].1);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, (_, zk))| k == p || k == q || !zk.contains_all(&common));
                if !adjacent {
                    continue;
                }
                let new_ray = combine(&dots[p], &rays[q].0, &-&dots[q], &rays[p].0);
                let mut z = common;
                if let Some(j) = ineq_index {
                    z.insert(j);
                }
                next.push((new_ray, z));
            }
        }
        rays = next;
    }

    ConeGenerators {
        lines,
        rays: rays.into_iter().map(|(r, _)| r).collect(),
    }
}

//! Brute-force sampling references for normal cones in dimension at most three.
//!
//! Candidate normals are rational points of the sum-norm unit sphere. A
//! candidate `v` is a regular normal at `p` when `⟨v, d⟩ ≤ 0` for every
//! generator `d` of `cone(P - p)` over the pieces `P` through `p`, which is
//! an exact test because those generators span the tangent cone. Limiting
//! normals are collected as the union of regular normals over a rational grid.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{scale_to_integers, RatVec, Rational};
use crate::polyset::{ConeUnion, PolySet};

pub const MAX_DIM: usize = 3;

/// Largest entry of the small integer directions added to the sphere grid.
const SMALL_DIRECTION: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleGrid {
    pub center: RatVec,
    pub radius: Rational,
    pub resolution: usize,
}

impl SampleGrid {
    pub fn new(center: RatVec, radius: Rational, resolution: usize) -> Result<Self> {
        if resolution < 3 {
            return Err(Error::InvalidArgument(alloc::format!("grid resolution {resolution} is below 3")));
        }
        if !radius.is_positive() {
            return Err(Error::InvalidArgument("grid radius must be positive".into()));
        }
        Ok(SampleGrid { center, radius, resolution })
    }

    /// A grid around `x` small enough that every face of `s` it meets passes through `x`.
    ///
    /// The radius is half the smallest sup-norm distance from `x` to an
    /// inactive facet of a piece through `x` or to a piece missing `x`,
    /// capped at one.
    pub fn local(s: &PolySet, x: &[Rational], resolution: usize) -> Result<Self> {
        check_dim(s.dim(), x.len())?;
        let one = Rational::from_integer(BigInt::from(1));
        let mut radius = one.clone();
        for p in s.pieces() {
            let gaps = p.ineqs().iter().map(|c| (c, false)).chain(p.eqs().iter().map(|c| (c, true)));
            let inside = p.contains(x);
            let mut separation: Option<Rational> = None;
            for (c, is_eq) in gaps {
                let norm = c.normal.l1_norm();
                let slack = c.slack(x);
                let gap = if is_eq { slack.abs() } else if inside { -slack } else { slack };
                if !gap.is_positive() {
                    continue;
                }
                let d = gap / norm;
                if inside {
                    radius = radius.min(d);
                } else if separation.as_ref().is_none_or(|s| &d > s) {
                    separation = Some(d);
                }
            }
            if let Some(d) = separation {
                radius = radius.min(d);
            }
        }
        SampleGrid::new(RatVec(x.to_vec()), radius / Rational::from_integer(BigInt::from(2)), resolution)
    }

    /// All points `center + (k₁, …, k_n)·radius/resolution` with `|kᵢ| ≤ resolution`.
    pub fn points(&self) -> Vec<RatVec> {
        let r = self.resolution as i64;
        let step = &self.radius / Rational::from_integer(BigInt::from(r));
        let mut out = alloc::vec![self.center.clone()];
        for i in 0..self.center.dim() {
            let mut next = Vec::with_capacity(out.len() * (2 * self.resolution + 1));
            for p in &out {
                for k in -r..=r {
                    let mut q = p.clone();
                    q[i] += &step * Rational::from_integer(BigInt::from(k));
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }
}

/// Integer vectors with sum-norm `dirs`, plus every nonzero vector with
/// entries in `[-3, 3]`, as primitive representatives of distinct rays.
fn candidate_directions(dim: usize, dirs: usize) -> Vec<Vec<i64>> {
    fn sphere(dim: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() + 1 == dim {
            for last in if budget == 0 { alloc::vec![0] } else { alloc::vec![budget, -budget] } {
                prefix.push(last);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        for k in -budget..=budget {
            prefix.push(k);
            sphere(dim, budget - k.abs(), prefix, out);
            prefix.pop();
        }
    }
    fn cube(dim: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == dim {
            if prefix.iter().any(|&c| c != 0) {
                out.push(prefix.clone());
            }
            return;
        }
        for k in -SMALL_DIRECTION..=SMALL_DIRECTION {
            prefix.push(k);
            cube(dim, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    sphere(dim, dirs.max(1) as i64, &mut Vec::new(), &mut raw);
    cube(dim, &mut Vec::new(), &mut raw);
    let primitive: BTreeSet<Vec<i64>> = raw
        .into_iter()
        .map(|v| {
            let g = v.iter().fold(0i64, |acc, &c| num_integer::gcd(acc, c));
            v.into_iter().map(|c| c / g).collect()
        })
        .collect();
    primitive.into_iter().collect()
}

fn to_unit(v: &[i64]) -> RatVec {
    let norm: i64 = v.iter().map(|c| c.abs()).sum();
    v.iter().map(|&c| Rational::new(BigInt::from(c), BigInt::from(norm))).collect()
}

/// A tangent generator as small integers when possible.
enum Generator {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

impl Generator {
    fn new(coords: &[Rational]) -> Self {
        let ints = scale_to_integers(coords);
        match ints.iter().map(|c| c.to_i64().map(i128::from)).collect::<Option<Vec<_>>>() {
            Some(small) => Generator::Small(small),
            None => Generator::Big(ints),
        }
    }

    fn pairs_nonpositively(&self, v: &[i64]) -> bool {
        match self {
            Generator::Small(g) => g.iter().zip(v).map(|(a, &b)| a * i128::from(b)).sum::<i128>() <= 0,
            Generator::Big(g) => {
                let dot = g.iter().zip(v).fold(BigInt::zero(), |acc, (a, &b)| acc + a * BigInt::from(b));
                !dot.is_positive()
            }
        }
    }
}

/// Generators of the tangent cone to `s` at `p`, taken from the V-representations of the pieces through `p`.
fn tangent_generators(s: &PolySet, p: &[Rational]) -> Vec<Generator> {
    let mut out = Vec::new();
    for piece in s.pieces().iter().filter(|q| q.contains(p)) {
        for v in piece.vertices() {
            let d: Vec<Rational> = v.iter().zip(p).map(|(a, b)| a - b).collect();
            if d.iter().any(|c| !c.is_zero()) {
                out.push(Generator::new(&d));
            }
        }
        for r in piece.rays() {
            out.push(Generator::new(r));
        }
        for l in piece.lines() {
            out.push(Generator::new(l));
            out.push(Generator::new(&l.neg()));
        }
    }
    out
}

fn check_oracle_dim(s: &PolySet, x: &[Rational]) -> Result<()> {
    check_dim(s.dim(), x.len())?;
    if s.dim() > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim: s.dim(), max: MAX_DIM });
    }
    if !s.member(x) {
        return Err(Error::PointNotInSet);
    }
    Ok(())
}

fn accepted(generators: &[Generator], candidates: &[Vec<i64>]) -> Vec<usize> {
    (0..candidates.len())
        .filter(|&i| generators.iter().all(|g| g.pairs_nonpositively(&candidates[i])))
        .collect()
}

/// Sampled regular normals at `x`: the origin plus every accepted unit candidate.
pub fn sampled_frechet_cone(s: &PolySet, x: &[Rational], dirs: usize) -> Result<Vec<RatVec>> {
    check_oracle_dim(s, x)?;
    let candidates = candidate_directions(s.dim(), dirs);
    let mut out = alloc::vec![RatVec::zeros(s.dim())];
    out.extend(accepted(&tangent_generators(s, x), &candidates).into_iter().map(|i| to_unit(&candidates[i])));
    Ok(out)
}

/// Union of sampled regular normals over the grid points lying in `s`.
pub fn sampled_limiting_cone(s: &PolySet, x: &[Rational], grid: &SampleGrid, dirs: usize) -> Result<Vec<RatVec>> {
    check_oracle_dim(s, x)?;
    check_dim(s.dim(), grid.center.dim())?;
    let candidates = candidate_directions(s.dim(), dirs);
    let mut hit = alloc::vec![false; candidates.len()];
    for p in grid.points() {
        if !s.member(&p) {
            continue;
        }
        let gens = tangent_generators(s, &p);
        for (i, h) in hit.iter_mut().enumerate() {
            if !*h && gens.iter().all(|g| g.pairs_nonpositively(&candidates[i])) {
                *h = true;
            }
        }
    }
    let mut out = alloc::vec![RatVec::zeros(s.dim())];
    out.extend(hit.iter().enumerate().filter(|(_, &h)| h).map(|(i, _)| to_unit(&candidates[i])));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleComparison {
    /// Sampled vectors that are not members of the exact cone.
    pub non_members: Vec<RatVec>,
    /// Unit generators of the exact cone.
    pub generators: usize,
    /// Generators within `1/resolution` (sum-norm) of an accepted sample.
    pub covered: usize,
}

impl OracleComparison {
    pub fn sound(&self) -> bool {
        self.non_members.is_empty()
    }

    /// Covered fraction of exact generators, `1` when there are none.
    pub fn coverage(&self) -> f64 {
        if self.generators == 0 {
            1.0
        } else {
            self.covered as f64 / self.generators as f64
        }
    }
}

/// Two-sided comparison of an exact cone union with sampled normals.
pub fn compare_cones(exact: &ConeUnion, sampled: &[RatVec], resolution: usize) -> Result<OracleComparison> {
    for v in sampled {
        check_dim(exact.dim(), v.dim())?;
    }
    let non_members: Vec<RatVec> = sampled.iter().filter(|v| !exact.member(v)).cloned().collect();
    let mut gens = BTreeSet::new();
    for p in exact.pieces() {
        for r in p.rays() {
            gens.insert(r.l1_normalized());
        }
        for l in p.lines() {
            gens.insert(l.l1_normalized());
            gens.insert(l.neg().l1_normalized());
        }
    }
    let tol = Rational::new(BigInt::from(1), BigInt::from(resolution.max(1)));
    let covered = gens
        .iter()
        .filter(|g| sampled.iter().any(|s| !s.is_zero() && s.sub(g).l1_norm() <= tol))
        .count();
    Ok(OracleComparison { non_members, generators: gens.len(), covered })
}

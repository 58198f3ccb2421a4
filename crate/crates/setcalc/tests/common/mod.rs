//! Seeded generators for random piecewise-polyhedral data.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use setcalc_core::exactgeom::{int, rat};
use setcalc_core::{Constraint, OrderCone, PolyMap, PolySet, Polyhedron, RatVec};

pub type Rng8 = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng8 {
    rand::SeedableRng::seed_from_u64(seed)
}

fn small_row(rng: &mut Rng8, dim: usize, bound: i64) -> Vec<i64> {
    loop {
        let row: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
        if row.iter().any(|&c| c != 0) {
            return row;
        }
    }
}

pub fn constraint(rng: &mut Rng8, dim: usize) -> Constraint {
    let row = small_row(rng, dim, 3);
    Constraint::from_i64(&row, rng.gen_range(-2..=2))
}

/// Nonempty polyhedron with up to four inequalities and, rarely, one equation.
pub fn polyhedron(rng: &mut Rng8, dim: usize) -> Polyhedron {
    loop {
        let ineqs = (0..rng.gen_range(1..=4)).map(|_| constraint(rng, dim)).collect();
        let eqs = if rng.gen_bool(0.15) { vec![constraint(rng, dim)] } else { Vec::new() };
        let p = Polyhedron::from_hrep(dim, ineqs, eqs);
        if !p.is_empty() {
            return p;
        }
    }
}

pub fn polyset(rng: &mut Rng8, dim: usize, max_pieces: usize) -> PolySet {
    let n = rng.gen_range(1..=max_pieces);
    PolySet::new(dim, (0..n).map(|_| polyhedron(rng, dim)).collect())
}

/// The relative-interior point of a random face of a random piece.
pub fn face_point(rng: &mut Rng8, s: &PolySet) -> RatVec {
    let piece = s.pieces().choose(rng).expect("nonempty set");
    let faces = piece.faces();
    faces.choose(rng).unwrap().relint_point().unwrap()
}

/// Continuous piecewise-linear `f: R -> R` with kinks at two or three integers.
pub fn pl_function(rng: &mut Rng8) -> PolyMap {
    let mut kinks: Vec<i64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(-2..=2)).collect();
    kinks.sort_unstable();
    kinks.dedup();
    let slopes: Vec<i64> = (0..=kinks.len()).map(|_| rng.gen_range(-2..=2)).collect();
    let mut value = rng.gen_range(-2..=2) - slopes[0] * kinks[0];
    let mut pieces = Vec::new();
    for (i, &a) in slopes.iter().enumerate() {
        // z = a x + value on [kinks[i-1], kinks[i]]
        let mut ineqs = Vec::new();
        if i > 0 {
            ineqs.push(Constraint::from_i64(&[-1, 0], -kinks[i - 1]));
        }
        if i < kinks.len() {
            ineqs.push(Constraint::from_i64(&[1, 0], kinks[i]));
        }
        pieces.push(Polyhedron::from_hrep(2, ineqs, vec![Constraint::from_i64(&[a, -1], -value)]));
        if i < kinks.len() {
            value += (a - slopes[i + 1]) * kinks[i];
        }
    }
    PolyMap::from_pieces(1, 1, pieces).unwrap()
}

/// A map `R^dom ⇉ R^rng`: a random piecewise-linear function when both are 1, else a random graph.
pub fn map(rng: &mut Rng8, dom: usize, rng_dim: usize) -> PolyMap {
    if dom == 1 && rng_dim == 1 && rng.gen_bool(0.4) {
        pl_function(rng)
    } else {
        PolyMap::new(dom, rng_dim, polyset(rng, dom + rng_dim, 2)).unwrap()
    }
}

pub fn order_cone(rng: &mut Rng8, dim: usize) -> OrderCone {
    match rng.gen_range(0..4) {
        0 => OrderCone::trivial(dim),
        1 => OrderCone::nonnegative(dim),
        2 => OrderCone::new(Polyhedron::cone(dim, (0..dim).map(|i| RatVec::unit(dim, i).neg()).collect(), Vec::new()))
            .unwrap(),
        _ => {
            let rays = (0..rng.gen_range(1..=dim)).map(|_| RatVec::from_i64(&small_row(rng, dim, 2))).collect();
            OrderCone::new(Polyhedron::cone(dim, rays, Vec::new())).unwrap_or_else(|_| OrderCone::nonnegative(dim))
        }
    }
}

pub fn interval(lo: i64, hi: i64) -> PolySet {
    PolySet::from(Polyhedron::from_vrep(1, vec![RatVec::from_i64(&[lo]), RatVec::from_i64(&[hi])], Vec::new(), Vec::new()))
}

pub fn points_1d(values: &[i64]) -> PolySet {
    PolySet::new(1, values.iter().map(|&v| Polyhedron::point(RatVec::from_i64(&[v]))).collect())
}

pub fn origin(dim: usize) -> PolySet {
    PolySet::from(Polyhedron::point(RatVec::zeros(dim)))
}

pub fn half(n: i64) -> setcalc_core::Rational {
    int(n, 2)
}

pub fn whole(n: i64) -> setcalc_core::Rational {
    rat(n)
}

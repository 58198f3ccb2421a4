//! Strategies for small random polyhedral data.
#![allow(dead_code)]

use proptest::prelude::*;
use setcalc_core::exactgeom::{int, rat};
use setcalc_core::{Constraint, PolyMap, PolySet, Polyhedron, RatVec, Rational};

pub fn constraint(dim: usize) -> impl Strategy<Value = Constraint> {
    (prop::collection::vec(-3i64..=3, dim), -3i64..=3).prop_map(|(a, b)| Constraint::from_i64(&a, b))
}

/// Nonempty polyhedron cut out by up to four inequalities and at most one equation.
pub fn polyhedron(dim: usize) -> impl Strategy<Value = Polyhedron> {
    (
        prop::collection::vec(constraint(dim), 0..=4),
        prop::option::weighted(0.2, constraint(dim)),
    )
        .prop_map(move |(ineqs, eq)| Polyhedron::from_hrep(dim, ineqs, eq.into_iter().collect()))
        .prop_filter("nonempty", |p| !p.is_empty())
}

/// Polytope inside the box `[-3, 3]^dim`.
pub fn polytope(dim: usize) -> impl Strategy<Value = Polyhedron> {
    polyhedron(dim).prop_map(move |p| p.intersect(&Polyhedron::cube(&RatVec::zeros(dim), &rat(3))).unwrap())
        .prop_filter("nonempty", |p| !p.is_empty())
}

/// Cone with apex at the origin generated by up to three small integer rays.
pub fn cone(dim: usize) -> impl Strategy<Value = Polyhedron> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 0..=3)
        .prop_map(move |rays| Polyhedron::cone(dim, rays.iter().map(|r| RatVec::from_i64(r)).collect(), Vec::new()))
}

pub fn polyset(dim: usize) -> impl Strategy<Value = PolySet> {
    prop::collection::vec(polyhedron(dim), 1..=3).prop_map(move |pieces| PolySet::new(dim, pieces))
}

/// A set together with a point on it: the relative-interior point of one of its faces.
pub fn set_and_point(dim: usize) -> impl Strategy<Value = (PolySet, RatVec)> {
    (polyset(dim), any::<prop::sample::Index>(), any::<prop::sample::Index>()).prop_map(|(s, i, j)| {
        let piece = i.get(s.pieces());
        let faces = piece.faces();
        let x = j.get(&faces).relint_point().unwrap();
        (s, x)
    })
}

/// A mapping `R ⇉ R` with a random polyhedral graph, plus a point of the graph.
pub fn map_1d_with_point() -> impl Strategy<Value = (PolyMap, RatVec)> {
    set_and_point(2).prop_map(|(g, p)| (PolyMap::new(1, 1, g).unwrap(), p))
}

/// Continuous piecewise-linear `f: R -> R` with a kink at 0, slopes `l` (left) and `r` (right).
pub fn kink(l: i64, r: i64) -> PolyMap {
    PolyMap::from_pieces(
        1,
        1,
        vec![
            Polyhedron::from_hrep(2, vec![Constraint::from_i64(&[1, 0], 0)], vec![Constraint::from_i64(&[l, -1], 0)]),
            Polyhedron::from_hrep(2, vec![Constraint::from_i64(&[-1, 0], 0)], vec![Constraint::from_i64(&[r, -1], 0)]),
        ],
    )
    .unwrap()
}

pub fn interval(lo: Rational, hi: Rational) -> PolySet {
    PolySet::from(Polyhedron::from_vrep(1, vec![RatVec(vec![lo]), RatVec(vec![hi])], Vec::new(), Vec::new()))
}

pub fn point(c: &[i64]) -> RatVec {
    RatVec::from_i64(c)
}

pub fn half(n: i64) -> Rational {
    int(n, 2)
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

/// One deterministic draw from a strategy.
pub fn draw<S: Strategy>(s: &S, runner: &mut proptest::test_runner::TestRunner) -> S::Value {
    use proptest::strategy::ValueTree;
    s.new_tree(runner).unwrap().current()
}

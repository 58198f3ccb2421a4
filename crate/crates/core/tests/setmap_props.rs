mod common;

use common::*;
use proptest::prelude::*;
use setcalc_core::exactgeom::int;
use setcalc_core::{OrderCone, PolyMap, PolySet, Polyhedron, RatVec};

fn graph_map(s: PolySet) -> PolyMap {
    PolyMap::new(1, 1, s).unwrap()
}

fn order(kind: u8) -> OrderCone {
    match kind {
        0 => OrderCone::trivial(1),
        1 => OrderCone::nonnegative(1),
        2 => OrderCone::new(Polyhedron::cone(1, vec![RatVec::from_i64(&[-1])], Vec::new())).unwrap(),
        _ => OrderCone::new(Polyhedron::universe(1)).unwrap(),
    }
}

/// `⋃_{Q ⊆ G(x)} {z : ∃ y ∈ Q, (y, z) ∈ P}` evaluated piece by piece.
fn composed_value(f: &PolyMap, g: &PolyMap, x: &RatVec) -> PolySet {
    let gx = g.eval(x).unwrap();
    let mut parts = Vec::new();
    for q in gx.pieces() {
        for p in f.graph().pieces() {
            let lifted = q.product(&Polyhedron::universe(1));
            let meet = p.intersect(&lifted).unwrap();
            if !meet.is_empty() {
                parts.push(PolySet::from(meet.project(&[1])));
            }
        }
    }
    PolySet::union_all(1, parts).unwrap()
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn epigraph_of_sum_is_sum_of_epigraphs(a in polyset(2), b in polyset(2), kind in 0u8..4) {
        let (f1, f2, theta) = (graph_map(a), graph_map(b), order(kind));
        let lhs = f1.sum(&f2).unwrap().epi(&theta).unwrap();
        let rhs = f1.epi(&theta).unwrap().sum(&f2.epi(&theta).unwrap()).unwrap();
        prop_assert!(lhs.graph().set_equal(rhs.graph()).unwrap());
    }

    #[test]
    fn inverse_swaps_blocks(a in polyset(3)) {
        let f = PolyMap::new(2, 1, a).unwrap();
        prop_assert_eq!(f.inverse().inverse(), f.clone());
        prop_assert!(f.inverse().graph().set_equal(&f.graph().permuted(&[2, 0, 1])).unwrap()
            || f.inverse().graph().set_equal(&f.graph().permuted(&[1, 2, 0])).unwrap());
    }

    #[test]
    fn sum_evaluates_pointwise(a in polyset(2), b in polyset(2), k in -6i64..=6) {
        let (f1, f2) = (graph_map(a), graph_map(b));
        let x = [int(k, 2)];
        let lhs = f1.sum(&f2).unwrap().eval(&x).unwrap();
        let rhs = f1.eval(&x).unwrap().minkowski_sum(&f2.eval(&x).unwrap()).unwrap();
        prop_assert!(lhs.set_equal(&rhs).unwrap());
    }

    #[test]
    fn composition_matches_elimination(a in polyset(2), b in polyset(2), k in -6i64..=6) {
        let (f, g) = (graph_map(a), graph_map(b));
        let x = RatVec(vec![int(k, 2)]);
        let comp = f.compose(&g).unwrap().eval(&x).unwrap();
        prop_assert!(comp.set_equal(&composed_value(&f, &g, &x)).unwrap());
        // Sampled direction: F(y) ⊆ (F∘G)(x) for sampled y ∈ G(x).
        for q in g.eval(&x).unwrap().pieces() {
            for v in q.vertices() {
                prop_assert!(f.eval(v).unwrap().is_subset(&comp).unwrap());
            }
        }
    }
}

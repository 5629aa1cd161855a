mod common;

use num_bigint::BigUint;
use zdigraph::autsearch::{automorphism_generators, automorphism_group, ColoredDigraph};
use zdigraph::transitivity::k_arc_orbits;

#[test]
fn corpus_is_large_enough() {
    assert!(common::small_corpus().len() >= 50);
}

#[test]
fn group_orders_match_brute_force() {
    for (name, g) in common::small_corpus() {
        let expected = common::brute_force_automorphisms(&g).len();
        let group = automorphism_group(&g, Default::default()).unwrap();
        assert_eq!(group.order(), BigUint::from(expected), "{name}");
        for p in group.generators() {
            assert!(g.is_automorphism(p), "{name}: {p}");
        }
    }
}

#[test]
fn arc_orbit_counts_match_brute_force() {
    for (name, g) in common::small_corpus() {
        if g.vertex_count() > 6 {
            continue;
        }
        let all = common::brute_force_automorphisms(&g);
        let group = automorphism_group(&g, Default::default()).unwrap();
        for k in 0..=3 {
            assert_eq!(
                k_arc_orbits(&g, &group, k).unwrap().count,
                common::brute_force_arc_orbit_count(&g, &all, k),
                "{name}, k = {k}"
            );
        }
    }
}

#[test]
fn coloured_orders_match_brute_force() {
    for (name, g) in common::small_corpus() {
        let n = g.vertex_count();
        let colors: Vec<u32> = (0..n).map(|v| (v % 2) as u32).collect();
        let expected = common::brute_force_automorphisms(&g)
            .into_iter()
            .filter(|p| (0..n).all(|v| colors[p.image(v)] == colors[v]))
            .count();
        let colored = ColoredDigraph::new(g, colors).unwrap();
        let group = automorphism_generators(&colored, Default::default()).unwrap();
        assert_eq!(group.order(), BigUint::from(expected), "{name}");
    }
}

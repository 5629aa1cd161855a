//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zdigraph::constructions::{
    cdc, cdhc, complete_digraph, complete_with_loops, directed_cycle, directed_path, theta_cycle,
    undirected,
};
use zdigraph::digraph::Digraph;
use zdigraph::perm::Permutation;

/// Every automorphism, found by extending partial maps one vertex at a time
/// and rejecting as soon as an arc or non-arc among mapped vertices breaks.
pub fn brute_force_automorphisms(g: &Digraph) -> Vec<Permutation> {
    fn extend(g: &Digraph, image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = g.vertex_count();
        let v = image.len();
        if v == n {
            out.push(Permutation::new(image.clone()).unwrap());
            return;
        }
        for w in 0..n {
            if used[w] {
                continue;
            }
            let consistent = (0..=v).all(|u| {
                let iu = if u == v { w } else { image[u] };
                g.has_arc(u, v) == g.has_arc(iu, w) && g.has_arc(v, u) == g.has_arc(w, iu)
            });
            if consistent {
                used[w] = true;
                image.push(w);
                extend(g, image, used, out);
                image.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; g.vertex_count()];
    extend(g, &mut Vec::new(), &mut used, &mut out);
    out
}

/// Number of orbits of an explicit element list on k-arcs.
pub fn brute_force_arc_orbit_count(g: &Digraph, elements: &[Permutation], k: usize) -> usize {
    let arcs: Vec<Vec<usize>> = g.k_arcs(k).collect();
    let mut seen = std::collections::HashSet::new();
    let mut count = 0;
    for a in &arcs {
        if seen.contains(a) {
            continue;
        }
        count += 1;
        for p in elements {
            seen.insert(p.apply_tuple(a));
        }
    }
    count
}

/// All elements of the group generated by `gens`, by closure under right
/// multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, density: f64, loops: bool) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if (u != v || loops) && rng.gen_bool(density) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// Named digraphs on at most eight vertices.
pub fn small_corpus() -> Vec<(String, Digraph)> {
    let mut corpus: Vec<(String, Digraph)> = Vec::new();
    let mut add = |name: String, g: Digraph| {
        assert!(g.vertex_count() <= 8, "{name}");
        corpus.push((name, g));
    };
    add("single vertex".into(), Digraph::new(1, []).unwrap());
    add("single loop".into(), Digraph::new(1, [(0, 0)]).unwrap());
    add("digon".into(), Digraph::new(2, [(0, 1), (1, 0)]).unwrap());
    add("arc".into(), Digraph::new(2, [(0, 1)]).unwrap());
    add("two isolated".into(), Digraph::new(2, []).unwrap());
    for n in 2..=8 {
        add(format!("directed cycle {n}"), directed_cycle(n).unwrap());
        add(format!("directed path {n}"), directed_path(n).unwrap());
    }
    for n in 3..=8 {
        add(format!("theta {n}"), theta_cycle(n).unwrap());
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        add(
            format!("undirected cycle {n}"),
            undirected(n, &edges).unwrap(),
        );
    }
    for d in 2..=8 {
        add(format!("complete {d}"), complete_digraph(d).unwrap());
    }
    for v in 1..=3 {
        add(
            format!("complete with loops {v}"),
            complete_with_loops(v).unwrap(),
        );
    }
    add("cdhc theta 3".into(), cdhc(&theta_cycle(3).unwrap()).graph);
    add("cdhc theta 4".into(), cdhc(&theta_cycle(4).unwrap()).graph);
    add(
        "cdhc complete 3".into(),
        cdhc(&complete_digraph(3).unwrap()).graph,
    );
    add(
        "cdhc complete 4".into(),
        cdhc(&complete_digraph(4).unwrap()).graph,
    );
    add("cdc cycle 3".into(), cdc(&directed_cycle(3).unwrap()).graph);
    add("cdc cycle 4".into(), cdc(&directed_cycle(4).unwrap()).graph);
    add("cdc digon".into(), cdc(&complete_digraph(2).unwrap()).graph);
    add(
        "star 5".into(),
        undirected(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
    );
    add(
        "transitive tournament 4".into(),
        Digraph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap(),
    );
    add(
        "cube".into(),
        undirected(
            8,
            &[
                (0, 1),
                (1, 3),
                (3, 2),
                (2, 0),
                (4, 5),
                (5, 7),
                (7, 6),
                (6, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap(),
    );
    add(
        "petersen minus two".into(),
        undirected(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (5, 7),
                (6, 5),
            ],
        )
        .unwrap(),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..20 {
        let n = rng.gen_range(3..=8);
        let density = rng.gen_range(0.15..0.6);
        let loops = i % 3 == 0;
        add(
            format!("random {i}"),
            random_digraph(&mut rng, n, density, loops),
        );
    }
    corpus
}

pub mod fibre {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use zdigraph::autsearch::{automorphism_generators, automorphism_group, ColoredDigraph};
    use zdigraph::constructions::{
        complete_digraph, complete_with_loops, coordinate_automorphism, directed_cycle,
        fibre_product, shift_automorphism, theta_cycle, translation_magnitude, z_quotient, ZLayout,
    };
    use zdigraph::digraph::{Digraph, LeveledDigraph};
    use zdigraph::perm::Permutation;

    fn random_window(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> LeveledDigraph {
        let mut levels = Vec::new();
        let mut by_level = Vec::new();
        for level in lo..=hi {
            let size = rng.gen_range(1..=3);
            by_level.push((levels.len()..levels.len() + size).collect::<Vec<_>>());
            levels.extend(std::iter::repeat_n(level, size));
        }
        let mut arcs = Vec::new();
        for pair in by_level.windows(2) {
            for &u in &pair[0] {
                for &v in &pair[1] {
                    if rng.gen_bool(0.6) {
                        arcs.push((u, v));
                    }
                }
            }
        }
        LeveledDigraph::new(Digraph::new(levels.len(), arcs).unwrap(), levels, None).unwrap()
    }

    fn random_element(rng: &mut ChaCha8Rng, gens: &[Permutation], degree: usize) -> Permutation {
        let mut p = Permutation::identity(degree);
        for _ in 0..rng.gen_range(0..4) {
            if gens.is_empty() {
                break;
            }
            p = p.compose(&gens[rng.gen_range(0..gens.len())]).unwrap();
        }
        p
    }

    fn check_product(
        left: &LeveledDigraph,
        right: &LeveledDigraph,
        pairs: &[(Permutation, Permutation)],
    ) -> Result<(), String> {
        let fp = fibre_product(left, right).map_err(|e| e.to_string())?;
        let g = fp.graph.graph();
        if !g.is_morphism_to(left.graph(), &fp.left_projection) {
            return Err("left projection is not a morphism".into());
        }
        if !g.is_morphism_to(right.graph(), &fp.right_projection) {
            return Err("right projection is not a morphism".into());
        }
        // componentwise arcs are all present
        let mut expected = 0;
        for &(v, w) in &fp.pairs {
            expected += left.graph().out_valency(v) * right.graph().out_valency(w);
        }
        if expected != g.arc_count() {
            return Err(format!("{} arcs, expected {expected}", g.arc_count()));
        }
        for (g1, g2) in pairs {
            let m1 = translation_magnitude(g1, left);
            let m2 = translation_magnitude(g2, right);
            if m1.is_none() || m1 != m2 {
                return Err(format!("test pair has magnitudes {m1:?} and {m2:?}"));
            }
            let induced = fp.induced(g1, g2).map_err(|e| e.to_string())?;
            if !g.is_automorphism(&induced) {
                return Err(format!("induced map {induced} is not an automorphism"));
            }
        }
        Ok(())
    }

    /// Two random level windows; automorphism pairs preserve levels.
    pub fn window_case(seed: u64) -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lo = rng.gen_range(-2..=1);
        let hi = lo + rng.gen_range(1..=3);
        let shift = rng.gen_range(0..=1);
        let left = random_window(&mut rng, lo, hi);
        let right = random_window(&mut rng, lo + shift, hi + shift);
        let level_group = |g: &LeveledDigraph| {
            let colors = g.levels().iter().map(|&l| (l - lo + 2) as u32).collect();
            let colored = ColoredDigraph::new(g.graph().clone(), colors).unwrap();
            automorphism_generators(&colored, Default::default()).unwrap()
        };
        let (gl, gr) = (level_group(&left), level_group(&right));
        let (nl, nr) = (left.graph().vertex_count(), right.graph().vertex_count());
        let mut pairs = vec![(Permutation::identity(nl), Permutation::identity(nr))];
        for _ in 0..4 {
            pairs.push((
                random_element(&mut rng, gl.generators(), nl),
                random_element(&mut rng, gr.generators(), nr),
            ));
        }
        check_product(&left, &right, &pairs)
    }

    /// Two cyclic quotients with the same modulus; pairs combine equal powers
    /// of the shift with lifted base automorphisms.
    pub fn quotient_case(seed: u64) -> Result<(), String> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bases = [
            theta_cycle(3).unwrap(),
            complete_digraph(3).unwrap(),
            directed_cycle(3).unwrap(),
            complete_with_loops(2).unwrap(),
            complete_digraph(2).unwrap(),
        ];
        let k1 = rng.gen_range(1..=2);
        let k2 = rng.gen_range(1..=2);
        let q = if k1 == 2 || k2 == 2 {
            2 * rng.gen_range(1..=2)
        } else {
            rng.gen_range(2..=4)
        };
        let d1 = &bases[rng.gen_range(0..bases.len())];
        let d2 = &bases[rng.gen_range(0..bases.len())];
        let a = z_quotient(d1, k1, q).map_err(|e| e.to_string())?;
        let b = z_quotient(d2, k2, q).map_err(|e| e.to_string())?;
        let lift = |rng: &mut ChaCha8Rng, zq: &zdigraph::constructions::ZQuotient| {
            let base = automorphism_group(zq.delta(), Default::default()).unwrap();
            let g = random_element(rng, base.generators(), zq.delta().vertex_count());
            let j = rng.gen_range(0..zq.k());
            coordinate_automorphism(zq, &g, j).unwrap()
        };
        let (sa, sb) = (
            shift_automorphism(&a).unwrap(),
            shift_automorphism(&b).unwrap(),
        );
        let mut pairs = Vec::new();
        for _ in 0..4 {
            let power = rng.gen_range(0..q as i64);
            let ga = sa.pow(power).compose(&lift(&mut rng, &a)).unwrap();
            let gb = lift(&mut rng, &b).compose(&sb.pow(power)).unwrap();
            pairs.push((ga, gb));
        }
        check_product(a.leveled(), b.leveled(), &pairs)?;
        // unequal magnitudes leave the product
        let fp = fibre_product(a.leveled(), b.leveled()).unwrap();
        if fp
            .induced(&sa, &Permutation::identity(b.graph().vertex_count()))
            .is_ok()
        {
            return Err("shift paired with identity was accepted".into());
        }
        Ok(())
    }
}

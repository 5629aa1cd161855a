//! Finite digraphs over dense vertex indices.
//!
//! Loops and antiparallel arc pairs are allowed. Both adjacency directions are
//! stored as sorted lists so that neighbour queries cost time proportional to
//! the valency and arc membership is a binary search.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    arc_count: usize,
}

impl Digraph {
    /// Builds a digraph, collapsing duplicate arcs.
    pub fn new<I>(vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::EmptyDigraph);
        }
        let mut out = vec![Vec::new(); vertex_count];
        let mut inn = vec![Vec::new(); vertex_count];
        for (u, v) in arcs {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::ArcOutOfRange {
                    u,
                    v,
                    n: vertex_count,
                });
            }
            out[u].push(v);
            inn[v].push(u);
        }
        let mut arc_count = 0;
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        for list in &out {
            arc_count += list.len();
        }
        Ok(Digraph {
            out,
            inn,
            arc_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_valency(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_valency(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.out.len() && self.out[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u, v)))
    }

    /// The common out-valency, if every vertex has the same one.
    pub fn constant_out_valency(&self) -> Option<usize> {
        let d = self.out[0].len();
        self.out.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> Result<bool> {
        // vertex_count >= 1 is guaranteed by construction
        Ok(self.weak_components().len() == 1)
    }

    /// Vertex sets of the components of the underlying undirected graph,
    /// each sorted, ordered by smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.out[u].iter().chain(self.inn[u].iter()) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Bipartiteness of the underlying undirected graph; a loop rules it out.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &w in self.out[u].iter().chain(self.inn[u].iter()) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Partition of the arcs into alternets.
    pub fn alternets(&self) -> AlternetPartition {
        let arcs: Vec<(usize, usize)> = self.arcs().collect();
        let index_of =
            |u: usize, v: usize| -> usize { arcs.binary_search(&(u, v)).expect("arc present") };
        let mut uf = UnionFind::new(arcs.len());
        for u in 0..self.vertex_count() {
            if let Some((&first, rest)) = self.out[u].split_first() {
                let a = index_of(u, first);
                for &w in rest {
                    uf.union(a, index_of(u, w));
                }
            }
            if let Some((&first, rest)) = self.inn[u].split_first() {
                let a = index_of(first, u);
                for &w in rest {
                    uf.union(a, index_of(w, u));
                }
            }
        }
        // classes keyed by their smallest arc, which is the first one met
        let mut class_of_root = vec![usize::MAX; arcs.len()];
        let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
        for (i, &arc) in arcs.iter().enumerate() {
            let r = uf.find(i);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[class_of_root[r]].push(arc);
        }
        let classes = classes
            .into_iter()
            .map(|arcs| {
                let mut vertices: Vec<usize> = arcs.iter().flat_map(|&(u, v)| [u, v]).collect();
                vertices.sort_unstable();
                vertices.dedup();
                Alternet { vertices, arcs }
            })
            .collect();
        AlternetPartition { classes }
    }

    /// Streams every k-arc (directed walk with k steps) in lexicographic order.
    pub fn k_arcs(&self, k: usize) -> KArcs<'_> {
        KArcs::new(self, k)
    }

    /// Number of k-arcs, counted by dynamic programming over walk lengths.
    pub fn count_k_arcs(&self, k: usize) -> u128 {
        let mut walks = vec![1u128; self.vertex_count()];
        for _ in 0..k {
            walks = (0..self.vertex_count())
                .map(|v| self.out[v].iter().map(|&w| walks[w]).sum())
                .collect();
        }
        walks.iter().sum()
    }

    /// True if the permutation maps the arc set onto itself.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count()
            && self
                .arcs()
                .all(|(u, v)| self.has_arc(p.image(u), p.image(v)))
    }

    /// True if `map` sends every arc of `self` to an arc of `target`.
    pub fn is_morphism_to(&self, target: &Digraph, map: &[usize]) -> bool {
        map.len() == self.vertex_count()
            && map.iter().all(|&x| x < target.vertex_count())
            && self.arcs().all(|(u, v)| target.has_arc(map[u], map[v]))
    }

    /// The digraph with vertices renamed by `p` (vertex v becomes v^p).
    pub fn relabel(&self, p: &Permutation) -> Result<Digraph> {
        if p.degree() != self.vertex_count() {
            return Err(Error::DegreeMismatch {
                expected: self.vertex_count(),
                found: p.degree(),
            });
        }
        Digraph::new(
            self.vertex_count(),
            self.arcs().map(|(u, v)| (p.image(u), p.image(v))),
        )
    }

    pub fn to_json(&self) -> DigraphJson {
        DigraphJson {
            n: self.vertex_count(),
            arcs: self.arcs().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &DigraphJson) -> Result<Self> {
        Digraph::new(json.n, json.arcs.iter().map(|a| (a[0], a[1])))
    }

    /// Graphviz rendering, one `->` edge per arc. With `collapse_antiparallel`
    /// each pair u->v, v->u becomes a single `dir=both` edge.
    pub fn to_dot(&self, labels: Option<&[String]>, collapse_antiparallel: bool) -> String {
        let mut s = String::from("digraph G {\n");
        if let Some(labels) = labels {
            for (v, label) in labels.iter().enumerate() {
                let _ = writeln!(s, "  {v} [label=\"{label}\"];");
            }
        }
        for (u, v) in self.arcs() {
            if collapse_antiparallel && u != v && self.has_arc(v, u) {
                if u < v {
                    let _ = writeln!(s, "  {u} -> {v} [dir=both];");
                }
                continue;
            }
            let _ = writeln!(s, "  {u} -> {v};");
        }
        s.push_str("}\n");
        s
    }
}

/// Wire form `{"n": int, "arcs": [[u,v],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}

/// A class of the reachability relation together with the subdigraph it spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternet {
    pub vertices: Vec<usize>,
    pub arcs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternetPartition {
    /// Ordered by smallest arc.
    pub classes: Vec<Alternet>,
}

/// Depth-first lexicographic stream of k-arcs.
pub struct KArcs<'a> {
    g: &'a Digraph,
    k: usize,
    walk: Vec<usize>,
    // next out-neighbour position to try at each depth
    cursor: Vec<usize>,
    next_start: usize,
}

impl<'a> KArcs<'a> {
    fn new(g: &'a Digraph, k: usize) -> Self {
        KArcs {
            g,
            k,
            walk: Vec::with_capacity(k + 1),
            cursor: Vec::with_capacity(k + 1),
            next_start: 0,
        }
    }
}

impl Iterator for KArcs<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            if self.walk.is_empty() {
                if self.next_start >= self.g.vertex_count() {
                    return None;
                }
                self.walk.push(self.next_start);
                self.cursor.push(0);
                self.next_start += 1;
                if self.k == 0 {
                    let arc = self.walk.clone();
                    self.walk.clear();
                    self.cursor.clear();
                    return Some(arc);
                }
                continue;
            }
            let depth = self.walk.len() - 1;
            let tail = self.walk[depth];
            let nbrs = self.g.out_neighbors(tail);
            let pos = self.cursor[depth];
            if pos >= nbrs.len() {
                self.walk.pop();
                self.cursor.pop();
                continue;
            }
            self.cursor[depth] += 1;
            self.walk.push(nbrs[pos]);
            self.cursor.push(0);
            if self.walk.len() == self.k + 1 {
                let arc = self.walk.clone();
                self.walk.pop();
                self.cursor.pop();
                return Some(arc);
            }
        }
    }
}

/// A digraph together with a level map witnessing Property Z, either on the
/// integers (`modulus == None`, window semantics) or on Z_m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeveledDigraph {
    graph: Digraph,
    levels: Vec<i64>,
    modulus: Option<u64>,
}

impl LeveledDigraph {
    pub fn new(graph: Digraph, levels: Vec<i64>, modulus: Option<u64>) -> Result<Self> {
        if levels.len() != graph.vertex_count() {
            return Err(Error::DegreeMismatch {
                expected: graph.vertex_count(),
                found: levels.len(),
            });
        }
        if modulus == Some(0) {
            return Err(Error::InvalidParameter("modulus must be positive".into()));
        }
        if let Some((u, v)) = level_map_violation(&graph, &levels, modulus) {
            return Err(Error::LevelViolation { u, v });
        }
        let levels = match modulus {
            Some(m) => levels.iter().map(|l| l.rem_euclid(m as i64)).collect(),
            None => levels,
        };
        Ok(LeveledDigraph {
            graph,
            levels,
            modulus,
        })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    pub fn level(&self, v: usize) -> i64 {
        self.levels[v]
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    /// Vertices at the given level (reduced modulo m for cyclic levels).
    pub fn fiber(&self, level: i64) -> Vec<usize> {
        let level = match self.modulus {
            Some(m) => level.rem_euclid(m as i64),
            None => level,
        };
        (0..self.levels.len())
            .filter(|&v| self.levels[v] == level)
            .collect()
    }

    /// Smallest and largest level present.
    pub fn level_range(&self) -> (i64, i64) {
        let lo = *self.levels.iter().min().unwrap();
        let hi = *self.levels.iter().max().unwrap();
        (lo, hi)
    }
}

/// One arc that fails to raise the level by exactly one, if any.
pub fn level_map_violation(
    g: &Digraph,
    levels: &[i64],
    modulus: Option<u64>,
) -> Option<(usize, usize)> {
    if levels.len() != g.vertex_count() {
        return g.arcs().next().or(Some((0, 0)));
    }
    g.arcs().find(|&(u, v)| match modulus {
        Some(m) => (levels[v] - levels[u] - 1).rem_euclid(m as i64) != 0,
        None => levels[v] != levels[u] + 1,
    })
}

pub fn check_level_map(g: &Digraph, levels: &[i64], modulus: Option<u64>) -> bool {
    level_map_violation(g, levels, modulus).is_none()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if two distinct classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn theta3() -> Digraph {
        Digraph::new(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn build_small_digraphs() {
        let c = cycle(3);
        assert_eq!(c.arc_count(), 3);
        assert!((0..3).all(|v| c.in_valency(v) == 1 && c.out_valency(v) == 1));

        let l = Digraph::new(1, [(0, 0)]).unwrap();
        assert_eq!((l.in_valency(0), l.out_valency(0)), (1, 1));

        let digon = Digraph::new(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(digon.arc_count(), 2);
        assert!(digon.has_arc(0, 1) && digon.has_arc(1, 0));
    }

    #[test]
    fn rejects_bad_input() {
        match Digraph::new(2, [(0, 1), (1, 2)]) {
            Err(Error::ArcOutOfRange { u: 1, v: 2, n: 2 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Digraph::new(0, std::iter::empty()),
            Err(Error::EmptyDigraph)
        ));
    }

    #[test]
    fn connectivity() {
        assert!(cycle(3).is_connected().unwrap());
        assert!(!Digraph::new(2, []).unwrap().is_connected().unwrap());
        // CDHC of the digon: (0,0)->(1,1) and (1,0)->(0,1), indices x + 2*side
        let g = Digraph::new(4, [(0, 3), (1, 2)]).unwrap();
        assert!(!g.is_connected().unwrap());
        assert_eq!(g.weak_components().len(), 2);
    }

    #[test]
    fn bipartiteness() {
        assert!(Digraph::new(2, [(0, 1), (1, 0)]).unwrap().is_bipartite());
        assert!(!theta3().is_bipartite());
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(3).is_bipartite());
    }

    #[test]
    fn alternets_of_small_graphs() {
        let p = cycle(3).alternets();
        assert_eq!(p.classes.len(), 3);
        assert!(p.classes.iter().all(|c| c.arcs.len() == 1));
        assert_eq!(p.classes[0].arcs, vec![(0, 1)]);

        let k3 = Digraph::new(
            3,
            (0..3).flat_map(|u| (0..3).filter(move |&v| v != u).map(move |v| (u, v))),
        )
        .unwrap();
        let p = k3.alternets();
        assert_eq!(p.classes.len(), 1);
        assert_eq!(p.classes[0].arcs.len(), 6);
    }

    #[test]
    fn k_arc_stream() {
        let arcs: Vec<_> = cycle(3).k_arcs(2).collect();
        assert_eq!(arcs, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);

        let t = theta3();
        let ones: Vec<_> = t.k_arcs(1).collect();
        assert_eq!(ones.len(), 6);
        assert_eq!(t.count_k_arcs(1), 6);

        let zeros: Vec<_> = t.k_arcs(0).collect();
        assert_eq!(zeros, vec![vec![0], vec![1], vec![2]]);

        let twos: Vec<_> = t.k_arcs(2).collect();
        let mut sorted = twos.clone();
        sorted.sort();
        assert_eq!(twos, sorted);
        assert_eq!(twos.len() as u128, t.count_k_arcs(2));
        // walks repeat vertices through loops
        assert!(twos.contains(&vec![0, 0, 0]));
    }

    #[test]
    fn level_maps() {
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(check_level_map(&path, &[0, 1, 2], None));
        assert!(!check_level_map(&path, &[0, 2, 3], None));
        assert_eq!(level_map_violation(&path, &[0, 2, 3], None), Some((0, 1)));
        assert!(!check_level_map(&theta3(), &[0, 1, 2], None));
        assert!(!check_level_map(&theta3(), &[0, 1, 2], Some(3)));
        assert!(check_level_map(&cycle(3), &[0, 1, 2], Some(3)));

        let leveled = LeveledDigraph::new(cycle(3), vec![3, 4, 5], Some(3)).unwrap();
        assert_eq!(leveled.levels(), &[0, 1, 2]);
        assert_eq!(leveled.fiber(4), vec![1]);
        assert!(matches!(
            LeveledDigraph::new(cycle(3), vec![0, 1, 2], None),
            Err(Error::LevelViolation { u: 2, v: 0 })
        ));
    }

    #[test]
    fn dot_output() {
        let digon = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            digon.to_dot(None, false),
            "digraph G {\n  0 -> 1;\n  1 -> 0;\n}\n"
        );
        assert_eq!(
            digon.to_dot(None, true),
            "digraph G {\n  0 -> 1 [dir=both];\n}\n"
        );
        let l = Digraph::new(1, [(0, 0)]).unwrap();
        assert!(l.to_dot(None, true).contains("0 -> 0;"));
    }

    #[test]
    fn json_round_trip() {
        let t = theta3();
        let text = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"n":3,"arcs":[[0,0],[0,1],[1,1],[1,2],[2,0],[2,2]]}"#
        );
        let back: DigraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Digraph::from_json(&back).unwrap(), t);
    }
}

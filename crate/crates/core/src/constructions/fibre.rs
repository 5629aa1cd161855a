//! Direct fibre products of leveled digraphs, translation magnitudes, and the
//! truncated trees whose product gives finite Diestel-Leader windows.

use std::collections::HashMap;

use crate::digraph::{Digraph, LeveledDigraph};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Level-synchronised product: vertices are pairs with equal level, arcs are
/// componentwise.
#[derive(Clone, Debug)]
pub struct FibreProduct {
    pub graph: LeveledDigraph,
    /// Vertex `i` of the product is the pair `pairs[i]`.
    pub pairs: Vec<(usize, usize)>,
    pub left_projection: Vec<usize>,
    pub right_projection: Vec<usize>,
    index: HashMap<(usize, usize), usize>,
}

impl FibreProduct {
    pub fn vertex(&self, left: usize, right: usize) -> Option<usize> {
        self.index.get(&(left, right)).copied()
    }

    /// The map `(v, w) -> (v^g1, w^g2)`. Fails when the pair set is not
    /// preserved, which happens when the two magnitudes differ.
    pub fn induced(&self, g1: &Permutation, g2: &Permutation) -> Result<Permutation> {
        let images = self
            .pairs
            .iter()
            .map(|&(v, w)| {
                if v >= g1.degree() || w >= g2.degree() {
                    return Err(Error::DegreeMismatch {
                        expected: v.max(w) + 1,
                        found: g1.degree().min(g2.degree()),
                    });
                }
                self.vertex(g1.image(v), g2.image(w))
                    .ok_or_else(|| Error::IncompatibleLevels("pair map leaves the product".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Permutation::from_images_unchecked(images))
    }

    pub fn labels(&self) -> Vec<Vec<i64>> {
        self.pairs
            .iter()
            .enumerate()
            .map(|(i, &(v, w))| vec![self.graph.level(i), v as i64, w as i64])
            .collect()
    }
}

pub fn fibre_product(g1: &LeveledDigraph, g2: &LeveledDigraph) -> Result<FibreProduct> {
    if g1.modulus() != g2.modulus() {
        return Err(Error::IncompatibleLevels(format!(
            "moduli {:?} and {:?} differ",
            g1.modulus(),
            g2.modulus()
        )));
    }
    let mut by_level: HashMap<i64, Vec<usize>> = HashMap::new();
    for w in 0..g2.graph().vertex_count() {
        by_level.entry(g2.level(w)).or_default().push(w);
    }
    let mut pairs = Vec::new();
    for v in 0..g1.graph().vertex_count() {
        if let Some(ws) = by_level.get(&g1.level(v)) {
            pairs.extend(ws.iter().map(|&w| (v, w)));
        }
    }
    if pairs.is_empty() {
        return Err(Error::IncompatibleLevels(
            "level ranges do not overlap".into(),
        ));
    }
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut arcs = Vec::new();
    for (i, &(v, w)) in pairs.iter().enumerate() {
        for &v2 in g1.graph().out_neighbors(v) {
            for &w2 in g2.graph().out_neighbors(w) {
                arcs.push((i, index[&(v2, w2)]));
            }
        }
    }
    let graph = Digraph::new(pairs.len(), arcs)?;
    let levels = pairs.iter().map(|&(v, _)| g1.level(v)).collect();
    let graph = LeveledDigraph::new(graph, levels, g1.modulus())?;
    let left_projection: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let right_projection: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    if !graph.graph().is_morphism_to(g1.graph(), &left_projection)
        || !graph.graph().is_morphism_to(g2.graph(), &right_projection)
    {
        return Err(Error::IncompatibleLevels(
            "projection is not a morphism".into(),
        ));
    }
    Ok(FibreProduct {
        graph,
        pairs,
        left_projection,
        right_projection,
        index,
    })
}

/// The constant `l` with `level(v^g) = level(v) + l` for all `v` (reduced into
/// `0..m` for cyclic levels), or `None` if the shift is not constant.
pub fn translation_magnitude(g: &Permutation, leveled: &LeveledDigraph) -> Option<i64> {
    let n = leveled.graph().vertex_count();
    if g.degree() != n {
        return None;
    }
    let diff = |v: usize| {
        let d = leveled.level(g.image(v)) - leveled.level(v);
        match leveled.modulus() {
            Some(m) => d.rem_euclid(m as i64),
            None => d,
        }
    };
    let l = diff(0);
    (1..n).all(|v| diff(v) == l).then_some(l)
}

/// Levels `0..=depth` of the rooted tree with in-valency 1 and out-valency `p`.
pub fn out_tree_window(p: usize, depth: usize) -> Result<LeveledDigraph> {
    if p < 1 {
        return Err(Error::InvalidParameter(
            "out-valency must be positive".into(),
        ));
    }
    let mut levels = vec![0i64];
    let mut arcs = Vec::new();
    let mut frontier = vec![0usize];
    for level in 1..=depth {
        let mut next = Vec::with_capacity(frontier.len() * p);
        for &parent in &frontier {
            for _ in 0..p {
                let child = levels.len();
                levels.push(level as i64);
                arcs.push((parent, child));
                next.push(child);
            }
        }
        frontier = next;
    }
    LeveledDigraph::new(Digraph::new(levels.len(), arcs)?, levels, None)
}

/// Levels `0..=depth` of the tree with in-valency `q` and out-valency 1,
/// truncated below a single top vertex at level `depth`.
pub fn in_tree_window(q: usize, depth: usize) -> Result<LeveledDigraph> {
    if q < 1 {
        return Err(Error::InvalidParameter(
            "in-valency must be positive".into(),
        ));
    }
    // build top-down, then the arcs point upwards
    let tree = out_tree_window(q, depth)?;
    let n = tree.graph().vertex_count();
    let levels = tree.levels().iter().map(|&l| depth as i64 - l).collect();
    let arcs = tree.graph().arcs().map(|(u, v)| (v, u));
    LeveledDigraph::new(Digraph::new(n, arcs)?, levels, None)
}

/// Finite window of the digraph whose underlying graph is `DL(p, q)`.
pub fn diestel_leader_window(p: usize, q: usize, depth: usize) -> Result<FibreProduct> {
    fibre_product(&out_tree_window(p, depth)?, &in_tree_window(q, depth)?)
}

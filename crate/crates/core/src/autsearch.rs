//! Automorphism groups of vertex-coloured digraphs by individualisation and
//! refinement.
//!
//! The search follows the leftmost path of the search tree down to a discrete
//! partition. Walking back up that path, each level determines the orbit of the
//! individualised vertex under the pointwise stabiliser of the vertices fixed
//! above it: a candidate is either already reached by the generators found so
//! far, or its subtree is searched exhaustively for a leaf equivalent to the
//! first leaf. The generators collected this way generate the full group.
//!
//! Loops are stripped from the adjacency used for refinement and folded into
//! the initial colouring instead.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub type OrderedPartition = Vec<Vec<usize>>;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug)]
pub struct ColoredDigraph {
    graph: Digraph,
    colors: Vec<u32>,
}

impl ColoredDigraph {
    pub fn new(graph: Digraph, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != graph.vertex_count() {
            return Err(Error::DegreeMismatch {
                expected: graph.vertex_count(),
                found: colors.len(),
            });
        }
        Ok(ColoredDigraph { graph, colors })
    }

    pub fn uncolored(graph: Digraph) -> Self {
        let colors = vec![0; graph.vertex_count()];
        ColoredDigraph { graph, colors }
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Colour- and arc-preservation check for a candidate automorphism.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.graph.vertex_count()
            && (0..p.degree()).all(|v| self.colors[p.image(v)] == self.colors[v])
            && self.graph.is_automorphism(p)
    }

    /// Partition by (colour, loop bit), cells ordered by that key.
    pub fn initial_partition(&self) -> OrderedPartition {
        let mut keyed: Vec<((u32, bool), usize)> = (0..self.graph.vertex_count())
            .map(|v| ((self.colors[v], self.graph.has_loop(v)), v))
            .collect();
        keyed.sort_unstable();
        let mut cells: OrderedPartition = Vec::new();
        let mut last = None;
        for (key, v) in keyed {
            if last != Some(key) {
                cells.push(Vec::new());
                last = Some(key);
            }
            cells.last_mut().unwrap().push(v);
        }
        cells
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Equitable refinement of `partition` with respect to loop-free adjacency.
pub fn refine_partition(g: &ColoredDigraph, partition: &[Vec<usize>]) -> OrderedPartition {
    let refiner = Refiner::new(g);
    refiner.refine(partition.to_vec()).0
}

/// Generators of the full colour-preserving automorphism group.
pub fn automorphism_generators(g: &ColoredDigraph, options: SearchOptions) -> Result<PermGroup> {
    let mut search = Search {
        g,
        refiner: Refiner::new(g),
        nodes: 0,
        budget: options.node_budget,
        path: Vec::new(),
        first_leaf: Vec::new(),
    };
    let gens = search.run()?;
    for gen in &gens {
        debug_assert!(g.is_automorphism(gen));
    }
    PermGroup::new(g.graph.vertex_count(), gens)
}

/// Shorthand for the automorphism group of an uncoloured digraph.
pub fn automorphism_group(g: &Digraph, options: SearchOptions) -> Result<PermGroup> {
    automorphism_generators(&ColoredDigraph::uncolored(g.clone()), options)
}

struct Refiner {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

type Signature = Vec<(u32, u32, u32)>;

impl Refiner {
    fn new(g: &ColoredDigraph) -> Self {
        let n = g.graph.vertex_count();
        let strip = |v: usize, list: &[usize]| -> Vec<usize> {
            list.iter().copied().filter(|&w| w != v).collect()
        };
        Refiner {
            out: (0..n).map(|v| strip(v, g.graph.out_neighbors(v))).collect(),
            inn: (0..n).map(|v| strip(v, g.graph.in_neighbors(v))).collect(),
        }
    }

    fn signature(&self, v: usize, cell_of: &[u32], scratch: &mut Vec<(u32, u8)>) -> Signature {
        scratch.clear();
        scratch.extend(self.out[v].iter().map(|&w| (cell_of[w], 0)));
        scratch.extend(self.inn[v].iter().map(|&w| (cell_of[w], 1)));
        scratch.sort_unstable();
        let mut sig: Signature = Vec::new();
        for &(c, dir) in scratch.iter() {
            match sig.last_mut() {
                Some(last) if last.0 == c => {}
                _ => sig.push((c, 0, 0)),
            }
            let last = sig.last_mut().unwrap();
            if dir == 0 {
                last.1 += 1;
            } else {
                last.2 += 1;
            }
        }
        sig
    }

    /// Returns the refined partition and a hash of the splitting trace. Both
    /// are equivariant: relabelling the input relabels the output cells and
    /// leaves the trace unchanged.
    fn refine(&self, mut cells: OrderedPartition) -> (OrderedPartition, u64) {
        let n = self.out.len();
        let mut cell_of = vec![0u32; n];
        let mut trace = DefaultHasher::new();
        let mut scratch = Vec::new();
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = i as u32;
                }
            }
            let mut changed = false;
            let mut next: OrderedPartition = Vec::with_capacity(cells.len());
            for (i, cell) in cells.iter().enumerate() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Signature, usize)> = cell
                    .iter()
                    .map(|&v| (self.signature(v, &cell_of, &mut scratch), v))
                    .collect();
                keyed.sort_unstable();
                if keyed.first().map(|k| &k.0) == keyed.last().map(|k| &k.0) {
                    next.push(cell.clone());
                    continue;
                }
                changed = true;
                i.hash(&mut trace);
                let mut start = 0;
                while start < keyed.len() {
                    let mut end = start + 1;
                    while end < keyed.len() && keyed[end].0 == keyed[start].0 {
                        end += 1;
                    }
                    keyed[start].0.hash(&mut trace);
                    (end - start).hash(&mut trace);
                    next.push(keyed[start..end].iter().map(|k| k.1).collect());
                    start = end;
                }
            }
            cells = next;
            if !changed {
                break;
            }
        }
        (cells, trace.finish())
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Invariant {
    sizes: Vec<usize>,
    trace: u64,
}

struct PathNode {
    partition: OrderedPartition,
    invariant: Invariant,
    // target cell index and individualised vertex, absent on the leaf
    target: Option<(usize, usize)>,
}

struct Search<'a> {
    g: &'a ColoredDigraph,
    refiner: Refiner,
    nodes: u64,
    budget: u64,
    path: Vec<PathNode>,
    first_leaf: Vec<usize>,
}

fn target_cell(partition: &OrderedPartition) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, c) in partition.iter().enumerate() {
        if c.len() > 1 && best.is_none_or(|b| c.len() > partition[b].len()) {
            best = Some(i);
        }
    }
    best
}

fn individualize(partition: &OrderedPartition, cell: usize, v: usize) -> OrderedPartition {
    let mut out = Vec::with_capacity(partition.len() + 1);
    out.extend_from_slice(&partition[..cell]);
    out.push(vec![v]);
    out.push(
        partition[cell]
            .iter()
            .copied()
            .filter(|&w| w != v)
            .collect(),
    );
    out.extend_from_slice(&partition[cell + 1..]);
    out
}

impl Search<'_> {
    fn refine(&mut self, cells: OrderedPartition) -> Result<(OrderedPartition, Invariant)> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        let (cells, trace) = self.refiner.refine(cells);
        let sizes = cells.iter().map(|c| c.len()).collect();
        Ok((cells, Invariant { sizes, trace }))
    }

    fn run(&mut self) -> Result<Vec<Permutation>> {
        let (mut partition, mut invariant) = self.refine(self.g.initial_partition())?;
        loop {
            match target_cell(&partition) {
                None => {
                    self.first_leaf = partition.iter().map(|c| c[0]).collect();
                    self.path.push(PathNode {
                        partition,
                        invariant,
                        target: None,
                    });
                    break;
                }
                Some(t) => {
                    let v = partition[t][0];
                    let (child, child_inv) = self.refine(individualize(&partition, t, v))?;
                    self.path.push(PathNode {
                        partition,
                        invariant,
                        target: Some((t, v)),
                    });
                    partition = child;
                    invariant = child_inv;
                }
            }
        }

        let n = self.g.graph.vertex_count();
        let mut gens: Vec<Permutation> = Vec::new();
        for depth in (0..self.path.len() - 1).rev() {
            let (t, v) = self.path[depth].target.unwrap();
            let cell = self.path[depth].partition[t].clone();
            let mut in_orbit = orbit_mask(n, v, &gens);
            for &w in &cell {
                if in_orbit[w] {
                    continue;
                }
                let start = individualize(&self.path[depth].partition, t, w);
                let (child, inv) = self.refine(start)?;
                if inv != self.path[depth + 1].invariant {
                    continue;
                }
                if let Some(gamma) = self.find_equivalent_leaf(child, depth + 1)? {
                    gens.push(gamma);
                    in_orbit = orbit_mask(n, v, &gens);
                }
            }
        }
        Ok(gens)
    }

    /// Depth-first search below a node whose invariant already matches the
    /// first path at `depth`.
    fn find_equivalent_leaf(
        &mut self,
        partition: OrderedPartition,
        depth: usize,
    ) -> Result<Option<Permutation>> {
        let Some(t) = target_cell(&partition) else {
            let mut images = vec![0; self.first_leaf.len()];
            for (c, cell) in partition.iter().enumerate() {
                images[self.first_leaf[c]] = cell[0];
            }
            let gamma = Permutation::from_images_unchecked(images);
            return Ok(self.g.is_automorphism(&gamma).then_some(gamma));
        };
        for &w in &partition[t] {
            let (child, inv) = self.refine(individualize(&partition, t, w))?;
            if inv != self.path[depth + 1].invariant {
                continue;
            }
            if let Some(gamma) = self.find_equivalent_leaf(child, depth + 1)? {
                return Ok(Some(gamma));
            }
        }
        Ok(None)
    }
}

fn orbit_mask(n: usize, v: usize, gens: &[Permutation]) -> Vec<bool> {
    let mut mask = vec![false; n];
    mask[v] = true;
    let mut stack = vec![v];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.image(x);
            if !mask[y] {
                mask[y] = true;
                stack.push(y);
            }
        }
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn digraph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, arcs.iter().copied()).unwrap()
    }

    fn order(g: &Digraph) -> BigUint {
        automorphism_group(g, SearchOptions::default())
            .unwrap()
            .order()
    }

    #[test]
    fn refinement_examples() {
        let c3 = ColoredDigraph::uncolored(digraph(3, &[(0, 1), (1, 2), (2, 0)]));
        let unit = vec![vec![0, 1, 2]];
        assert_eq!(refine_partition(&c3, &unit), unit);

        let path = ColoredDigraph::uncolored(digraph(3, &[(0, 1), (1, 2)]));
        let refined = refine_partition(&path, &[vec![0, 1, 2]]);
        assert_eq!(refined.len(), 3);
        assert!(refined.iter().all(|c| c.len() == 1));

        let singletons = vec![vec![2], vec![0], vec![1]];
        assert_eq!(refine_partition(&path, &singletons), singletons);
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(
            order(&digraph(3, &[(0, 1), (1, 2), (2, 0)])),
            BigUint::from(3u32)
        );
        let k3 = digraph(3, &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]);
        assert_eq!(order(&k3), BigUint::from(6u32));
        assert_eq!(order(&digraph(4, &[])), BigUint::from(24u32));
        assert_eq!(order(&digraph(3, &[(0, 1), (1, 2)])), BigUint::from(1u32));
        // a loop breaks the symmetry of the digon
        assert_eq!(order(&digraph(2, &[(0, 1), (1, 0)])), BigUint::from(2u32));
        assert_eq!(
            order(&digraph(2, &[(0, 1), (1, 0), (0, 0)])),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn colours_restrict_the_group() {
        let empty = digraph(4, &[]);
        let g = ColoredDigraph::new(empty, vec![0, 0, 1, 1]).unwrap();
        let group = automorphism_generators(&g, SearchOptions::default()).unwrap();
        assert_eq!(group.order(), BigUint::from(4u32));
        assert!(group.generators().iter().all(|p| g.is_automorphism(p)));
    }

    #[test]
    fn budget_is_enforced() {
        let empty = digraph(6, &[]);
        let err = automorphism_group(&empty, SearchOptions { node_budget: 3 }).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn output_is_deterministic() {
        let g = digraph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]);
        let a = automorphism_group(&g, SearchOptions::default()).unwrap();
        let b = automorphism_group(&g, SearchOptions::default()).unwrap();
        assert_eq!(a.generators(), b.generators());
    }
}

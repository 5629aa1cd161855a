//! Base digraphs and the families built from them.
//!
//! * small inputs: [`theta_cycle`], [`complete_digraph`], cycles, paths and
//!   undirected graphs read as symmetric digraphs;
//! * the double covers [`cdc`] and [`cdhc`];
//! * cyclic quotients and finite windows of the level-coordinate construction
//!   (`zgraph`), the shift-register form it is isomorphic to, and the
//!   tuple graphs `C_r(v, m)`;
//! * automorphisms lifted from the base digraph (`lifts`);
//! * direct fibre products of leveled digraphs (`fibre`).

mod fibre;
mod lifts;
mod zgraph;

pub use fibre::{
    diestel_leader_window, fibre_product, in_tree_window, out_tree_window, translation_magnitude,
    FibreProduct,
};
pub use lifts::{
    coordinate_automorphism, family_automorphism, psi_coordinate_automorphism, shift_automorphism,
    PsiGroup,
};
pub use zgraph::{
    praeger_tuple_graph, shift_register_quotient, shift_register_window, theta_isomorphism,
    z_quotient, z_window, ZCodec, ZLayout, ZQuotient, ZWindow,
};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Directed n-cycle with a loop at every vertex.
pub fn theta_cycle(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "theta cycle needs n >= 3, got {n}"
        )));
    }
    Digraph::new(n, (0..n).flat_map(|i| [(i, i), (i, (i + 1) % n)]))
}

/// All arcs (v, w) with v != w.
pub fn complete_digraph(d: usize) -> Result<Digraph> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "complete digraph needs d >= 2, got {d}"
        )));
    }
    Digraph::new(
        d,
        (0..d).flat_map(|v| (0..d).filter(move |&w| w != v).map(move |w| (v, w))),
    )
}

/// Complete digraph with a loop at every vertex (every ordered pair is an arc).
pub fn complete_with_loops(v: usize) -> Result<Digraph> {
    if v == 0 {
        return Err(Error::EmptyDigraph);
    }
    Digraph::new(v, (0..v).flat_map(|x| (0..v).map(move |y| (x, y))))
}

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn directed_path(n: usize) -> Result<Digraph> {
    Digraph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// An undirected graph read as a digraph: every edge becomes two arcs.
pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Digraph> {
    Digraph::new(n, edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]))
}

/// A double cover of a base digraph on `V x Z_2`; vertex `(x, side)` has index
/// `x + side * |V|`.
#[derive(Clone, Debug)]
pub struct DoubleCover {
    pub graph: Digraph,
    base_order: usize,
}

impl DoubleCover {
    pub fn vertex(&self, x: usize, side: usize) -> usize {
        x + side * self.base_order
    }

    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v % self.base_order, v / self.base_order)
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// Side of each vertex, usable as a colouring.
    pub fn sides(&self) -> Vec<u32> {
        (0..2 * self.base_order)
            .map(|v| (v / self.base_order) as u32)
            .collect()
    }

    pub fn labels(&self) -> Vec<Vec<i64>> {
        (0..2 * self.base_order)
            .map(|v| {
                let (x, s) = self.decode(v);
                vec![x as i64, s as i64]
            })
            .collect()
    }
}

/// Canonical double cover: arcs ((x,0),(y,1)) and ((x,1),(y,0)) per arc (x,y).
pub fn cdc(delta: &Digraph) -> DoubleCover {
    let n = delta.vertex_count();
    let graph = Digraph::new(
        2 * n,
        delta.arcs().flat_map(|(x, y)| [(x, y + n), (x + n, y)]),
    )
    .expect("indices stay below 2n");
    DoubleCover {
        graph,
        base_order: n,
    }
}

/// Canonical double half-cover: only the arcs ((x,0),(y,1)).
pub fn cdhc(delta: &Digraph) -> DoubleCover {
    let n = delta.vertex_count();
    let graph =
        Digraph::new(2 * n, delta.arcs().map(|(x, y)| (x, y + n))).expect("indices stay below 2n");
    DoubleCover {
        graph,
        base_order: n,
    }
}

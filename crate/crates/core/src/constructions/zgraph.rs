//! The level-coordinate digraph on `Z x V^k`, realised as a cyclic quotient
//! (levels in `Z_q`) or as a finite window of consecutive levels.
//!
//! A vertex `(i; x_0, ..., x_{k-1})` has arcs to every `(i+1; y)` where `y`
//! agrees with `x` except in coordinate `i mod k`, which moves along an arc of
//! the base digraph.

use log::warn;

use crate::digraph::{Digraph, LeveledDigraph};
use crate::error::{Error, Result};
use crate::perm::Permutation;

const MAX_VERTICES: usize = 1 << 26;

/// Bijection between `levels x V^k` and flat indices. Coordinate 0 is the most
/// significant digit, so index order is lexicographic in `(level, x_0, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZCodec {
    base: usize,
    k: usize,
    lo: i64,
    level_count: usize,
    fiber_size: usize,
}

impl ZCodec {
    pub fn new(base: usize, k: usize, lo: i64, level_count: usize) -> Result<Self> {
        let too_big =
            || Error::InvalidParameter("vertex count overflows the supported size".into());
        let fiber_size = base.checked_pow(k as u32).ok_or_else(too_big)?;
        let total = fiber_size.checked_mul(level_count).ok_or_else(too_big)?;
        if total > MAX_VERTICES {
            return Err(too_big());
        }
        Ok(ZCodec {
            base,
            k,
            lo,
            level_count,
            fiber_size,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.fiber_size * self.level_count
    }

    pub fn fiber_size(&self) -> usize {
        self.fiber_size
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Weight of coordinate `j` in the tuple code.
    fn weight(&self, j: usize) -> usize {
        self.base.pow((self.k - 1 - j) as u32)
    }

    /// `level` must lie in the codec's range (already reduced for quotients).
    pub fn encode(&self, level: i64, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.k);
        let offset = (level - self.lo) as usize;
        debug_assert!(offset < self.level_count);
        let code = coords.iter().fold(0, |acc, &x| acc * self.base + x);
        offset * self.fiber_size + code
    }

    pub fn decode(&self, index: usize) -> (i64, Vec<usize>) {
        let level = self.lo + (index / self.fiber_size) as i64;
        let mut code = index % self.fiber_size;
        let mut coords = vec![0; self.k];
        for j in (0..self.k).rev() {
            coords[j] = code % self.base;
            code /= self.base;
        }
        (level, coords)
    }

    pub fn level_of(&self, index: usize) -> i64 {
        self.lo + (index / self.fiber_size) as i64
    }

    /// Vertex labels `[level, x_0, ..., x_{k-1}]`.
    pub fn labels(&self) -> Vec<Vec<i64>> {
        (0..self.vertex_count())
            .map(|v| {
                let (level, coords) = self.decode(v);
                std::iter::once(level)
                    .chain(coords.into_iter().map(|x| x as i64))
                    .collect()
            })
            .collect()
    }
}

/// Shared access to quotients and windows.
pub trait ZLayout {
    fn delta(&self) -> &Digraph;
    fn k(&self) -> usize;
    fn codec(&self) -> &ZCodec;
    fn leveled(&self) -> &LeveledDigraph;

    fn graph(&self) -> &Digraph {
        self.leveled().graph()
    }
}

/// Cyclic quotient of the infinite construction by `<s^q>`, levels in `Z_q`.
#[derive(Clone, Debug)]
pub struct ZQuotient {
    delta: Digraph,
    k: usize,
    q: usize,
    codec: ZCodec,
    graph: LeveledDigraph,
}

impl ZQuotient {
    pub fn q(&self) -> usize {
        self.q
    }
}

impl ZLayout for ZQuotient {
    fn delta(&self) -> &Digraph {
        &self.delta
    }
    fn k(&self) -> usize {
        self.k
    }
    fn codec(&self) -> &ZCodec {
        &self.codec
    }
    fn leveled(&self) -> &LeveledDigraph {
        &self.graph
    }
}

/// The levels `lo..=hi` of the infinite construction, without wraparound.
#[derive(Clone, Debug)]
pub struct ZWindow {
    delta: Digraph,
    k: usize,
    lo: i64,
    hi: i64,
    codec: ZCodec,
    graph: LeveledDigraph,
}

impl ZWindow {
    pub fn lo(&self) -> i64 {
        self.lo
    }
    pub fn hi(&self) -> i64 {
        self.hi
    }
}

impl ZLayout for ZWindow {
    fn delta(&self) -> &Digraph {
        &self.delta
    }
    fn k(&self) -> usize {
        self.k
    }
    fn codec(&self) -> &ZCodec {
        &self.codec
    }
    fn leveled(&self) -> &LeveledDigraph {
        &self.graph
    }
}

/// Arcs leaving `(level; coords)` under the coordinate rule, as flat indices.
/// `next_level` is the already-reduced level of the heads.
fn coordinate_rule_arcs(
    codec: &ZCodec,
    delta: &Digraph,
    level: i64,
    next_level: i64,
    index: usize,
    arcs: &mut Vec<(usize, usize)>,
) {
    let k = codec.k;
    let c = level.rem_euclid(k as i64) as usize;
    let code = index % codec.fiber_size;
    let weight = codec.weight(c);
    let x_c = (code / weight) % codec.base;
    let head_base = codec.encode(next_level, &vec![0; k]) + code - x_c * weight;
    for &w in delta.out_neighbors(x_c) {
        arcs.push((index, head_base + w * weight));
    }
}

pub fn z_quotient(delta: &Digraph, k: usize, q: usize) -> Result<ZQuotient> {
    if k == 0 || q == 0 {
        return Err(Error::InvalidParameter("k and q must be positive".into()));
    }
    if !q.is_multiple_of(k) {
        return Err(Error::InvalidParameter(format!(
            "k = {k} does not divide q = {q}"
        )));
    }
    if q < k + 2 {
        warn!(
            "q = {q} < k + 2 = {}: levels 0..=k+1 do not embed in the quotient",
            k + 2
        );
    }
    let codec = ZCodec::new(delta.vertex_count(), k, 0, q)?;
    let mut arcs = Vec::new();
    for v in 0..codec.vertex_count() {
        let level = codec.level_of(v);
        let next = (level + 1).rem_euclid(q as i64);
        coordinate_rule_arcs(&codec, delta, level, next, v, &mut arcs);
    }
    let levels = (0..codec.vertex_count())
        .map(|v| codec.level_of(v))
        .collect();
    let graph = Digraph::new(codec.vertex_count(), arcs)?;
    let graph = LeveledDigraph::new(graph, levels, Some(q as u64))?;
    Ok(ZQuotient {
        delta: delta.clone(),
        k,
        q,
        codec,
        graph,
    })
}

pub fn z_window(delta: &Digraph, k: usize, lo: i64, hi: i64) -> Result<ZWindow> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if lo > hi {
        return Err(Error::InvalidParameter(format!(
            "empty window [{lo}, {hi}]"
        )));
    }
    let codec = ZCodec::new(delta.vertex_count(), k, lo, (hi - lo + 1) as usize)?;
    let mut arcs = Vec::new();
    for v in 0..codec.vertex_count() {
        let level = codec.level_of(v);
        if level < hi {
            coordinate_rule_arcs(&codec, delta, level, level + 1, v, &mut arcs);
        }
    }
    let levels = (0..codec.vertex_count())
        .map(|v| codec.level_of(v))
        .collect();
    let graph = Digraph::new(codec.vertex_count(), arcs)?;
    let graph = LeveledDigraph::new(graph, levels, None)?;
    Ok(ZWindow {
        delta: delta.clone(),
        k,
        lo,
        hi,
        codec,
        graph,
    })
}

/// Shift-register arcs `(i; x_0..x_{k-1}) -> (i+1; y, x_0, .., x_{k-2})` with
/// `(x_{k-1}, y)` an arc of the base digraph.
fn shift_register_arcs(
    codec: &ZCodec,
    delta: &Digraph,
    next_level: i64,
    index: usize,
    arcs: &mut Vec<(usize, usize)>,
) {
    let code = index % codec.fiber_size;
    let last = code % codec.base;
    let shifted = code / codec.base;
    let head_base = codec.encode(next_level, &vec![0; codec.k]) + shifted;
    let top = codec.weight(0);
    for &y in delta.out_neighbors(last) {
        arcs.push((index, head_base + y * top));
    }
}

/// Shift-register digraph on `Z_modulus x V^k`, using the same vertex codec as
/// [`z_quotient`]. No divisibility between `k` and `modulus` is needed.
pub fn shift_register_quotient(
    delta: &Digraph,
    k: usize,
    modulus: usize,
) -> Result<LeveledDigraph> {
    if k == 0 || modulus == 0 {
        return Err(Error::InvalidParameter(
            "k and modulus must be positive".into(),
        ));
    }
    let codec = ZCodec::new(delta.vertex_count(), k, 0, modulus)?;
    let mut arcs = Vec::new();
    for v in 0..codec.vertex_count() {
        let next = (codec.level_of(v) + 1).rem_euclid(modulus as i64);
        shift_register_arcs(&codec, delta, next, v, &mut arcs);
    }
    let levels = (0..codec.vertex_count())
        .map(|v| codec.level_of(v))
        .collect();
    let graph = Digraph::new(codec.vertex_count(), arcs)?;
    LeveledDigraph::new(graph, levels, Some(modulus as u64))
}

/// Shift-register digraph on the levels `lo..=hi`, codec as in [`z_window`].
pub fn shift_register_window(
    delta: &Digraph,
    k: usize,
    lo: i64,
    hi: i64,
) -> Result<LeveledDigraph> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if lo > hi {
        return Err(Error::InvalidParameter(format!(
            "empty window [{lo}, {hi}]"
        )));
    }
    let codec = ZCodec::new(delta.vertex_count(), k, lo, (hi - lo + 1) as usize)?;
    let mut arcs = Vec::new();
    for v in 0..codec.vertex_count() {
        let level = codec.level_of(v);
        if level < hi {
            shift_register_arcs(&codec, delta, level + 1, v, &mut arcs);
        }
    }
    let levels = (0..codec.vertex_count())
        .map(|v| codec.level_of(v))
        .collect();
    let graph = Digraph::new(codec.vertex_count(), arcs)?;
    LeveledDigraph::new(graph, levels, None)
}

/// The tuple digraph `C_r(v, m)`: vertices `Z_r x Z_v^m`, arcs
/// `(i; x_1..x_m) -> (i+1; y, x_1..x_{m-1})` for every `y`.
pub fn praeger_tuple_graph(r: usize, v: usize, m: usize) -> Result<LeveledDigraph> {
    if r < 1 || v < 2 || m < 1 {
        return Err(Error::InvalidParameter(format!(
            "tuple graph needs r >= 1, v >= 2, m >= 1 (got r={r}, v={v}, m={m})"
        )));
    }
    shift_register_quotient(&super::complete_with_loops(v)?, m, r)
}

/// The vertex bijection taking the coordinate-rule digraph onto the
/// shift-register digraph on the same vertex set. With `i' = i mod k`, the
/// tuple `(x_0, .., x_{k-1})` becomes `(x_{i'-1}, .., x_0, x_{k-1}, .., x_{i'})`.
/// It is an involution.
pub fn theta_isomorphism<L: ZLayout>(spec: &L) -> Permutation {
    let codec = spec.codec();
    let k = spec.k() as i64;
    let images = (0..codec.vertex_count())
        .map(|v| {
            let (level, coords) = codec.decode(v);
            let split = level.rem_euclid(k) as usize;
            let mut image: Vec<usize> = coords[..split].iter().rev().copied().collect();
            image.extend(coords[split..].iter().rev());
            codec.encode(level, &image)
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

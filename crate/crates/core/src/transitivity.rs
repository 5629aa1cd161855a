//! Orbits of automorphism groups on k-arcs, sharpness verdicts, fibre
//! stabilisers, and ball growth of the infinite level-coordinate digraph over
//! the two-way infinite theta cycle.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use crate::autsearch::{automorphism_group, SearchOptions};
use crate::digraph::{Digraph, LeveledDigraph, UnionFind};
use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// Ceiling on the number of k-arcs held in memory at once.
pub const DEFAULT_ARC_LIMIT: usize = 20_000_000;

/// Ceiling on the number of ball vertices kept by [`growth_ball`].
pub const DEFAULT_BALL_LIMIT: usize = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcOrbits {
    pub k: usize,
    /// Number of k-arcs in the digraph.
    pub total: usize,
    pub count: usize,
    /// Lexicographically least k-arc of each orbit, in increasing order.
    pub representatives: Vec<Vec<usize>>,
}

pub fn k_arc_orbits(g: &Digraph, group: &PermGroup, k: usize) -> Result<ArcOrbits> {
    k_arc_orbits_limited(g, group, k, DEFAULT_ARC_LIMIT)
}

pub fn k_arc_orbits_limited(
    g: &Digraph,
    group: &PermGroup,
    k: usize,
    limit: usize,
) -> Result<ArcOrbits> {
    if group.degree() != g.vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: g.vertex_count(),
            found: group.degree(),
        });
    }
    let total = g.count_k_arcs(k);
    if total > limit as u128 {
        return Err(Error::MemoryGuard { limit });
    }
    let total = total as usize;
    if total == 0 {
        log::warn!("digraph has no {k}-arcs");
        return Ok(ArcOrbits {
            k,
            total: 0,
            count: 0,
            representatives: Vec::new(),
        });
    }
    // packed rows of k + 1 vertices, already sorted since the stream is
    // lexicographic
    let width = k + 1;
    let mut packed = Vec::with_capacity(total * width);
    for arc in g.k_arcs(k) {
        packed.extend_from_slice(&arc);
    }
    let row = |i: usize| &packed[i * width..(i + 1) * width];
    let find_row = |target: &[usize]| -> usize {
        let (mut lo, mut hi) = (0, total);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if row(mid) < target {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        debug_assert_eq!(row(lo), target);
        lo
    };
    let mut uf = UnionFind::new(total);
    let mut image = vec![0; width];
    for p in group.generators() {
        for i in 0..total {
            for (slot, &v) in image.iter_mut().zip(row(i)) {
                *slot = p.image(v);
            }
            uf.union(i, find_row(&image));
        }
    }
    let mut seen = HashSet::new();
    let mut representatives = Vec::new();
    for i in 0..total {
        if seen.insert(uf.find(i)) {
            representatives.push(row(i).to_vec());
        }
    }
    Ok(ArcOrbits {
        k,
        total,
        count: representatives.len(),
        representatives,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityProfile {
    pub vertex_count: usize,
    pub arc_count: usize,
    /// Decimal string; group orders overflow machine integers quickly.
    pub group_order: String,
    pub generator_count: usize,
    pub k_max: usize,
    /// Entry `k` is the number of orbits on k-arcs.
    pub orbit_counts: Vec<usize>,
    /// Largest `k <= k_max` such that the group is transitive on j-arcs for
    /// every `j <= k`.
    pub sharp_k: Option<usize>,
    /// Set when the count at `sharp_k + 1` was computed and exceeds one.
    pub not_transitive_above: bool,
}

impl TransitivityProfile {
    pub fn is_k_arc_transitive(&self, k: usize) -> bool {
        self.sharp_k.is_some_and(|s| s >= k)
    }

    /// Transitive on k-arcs and, within the computed range, not on (k+1)-arcs.
    pub fn is_sharply(&self, k: usize) -> bool {
        self.sharp_k == Some(k) && self.not_transitive_above
    }
}

pub fn transitivity_profile(
    g: &Digraph,
    k_max: usize,
    options: SearchOptions,
) -> Result<TransitivityProfile> {
    let group = automorphism_group(g, options)?;
    profile_with_group(g, &group, k_max)
}

pub fn profile_with_group(
    g: &Digraph,
    group: &PermGroup,
    k_max: usize,
) -> Result<TransitivityProfile> {
    let orbit_counts = (0..=k_max)
        .map(|k| k_arc_orbits(g, group, k).map(|o| o.count))
        .collect::<Result<Vec<_>>>()?;
    let transitive_prefix = orbit_counts.iter().take_while(|&&c| c == 1).count();
    let sharp_k = transitive_prefix.checked_sub(1);
    let not_transitive_above = orbit_counts.get(transitive_prefix).is_some_and(|&c| c > 1);
    Ok(TransitivityProfile {
        vertex_count: g.vertex_count(),
        arc_count: g.arc_count(),
        group_order: group.order().to_string(),
        generator_count: group.generators().len(),
        k_max,
        orbit_counts,
        sharp_k,
        not_transitive_above,
    })
}

/// Whether the pointwise stabiliser of the fibre at `level` is trivial.
pub fn fiber_stabilizer_triviality(
    g: &LeveledDigraph,
    group: &PermGroup,
    level: i64,
) -> Result<bool> {
    let fiber = g.fiber(level);
    if fiber.is_empty() {
        return Err(Error::InvalidParameter(format!(
            "level {level} has no vertices"
        )));
    }
    Ok(group.pointwise_stabilizer_order(&fiber)? == BigUint::from(1u32))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthSequence {
    pub k: usize,
    /// `values[n]` is the number of vertices within undirected distance `n`
    /// of the origin.
    pub values: Vec<u64>,
    pub degree_estimate: Option<f64>,
}

impl GrowthSequence {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,b\n");
        for (n, b) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{b}\n"));
        }
        out
    }
}

pub fn growth_ball(k: usize, n_max: usize) -> Result<GrowthSequence> {
    growth_ball_limited(k, n_max, DEFAULT_BALL_LIMIT)
}

/// Breadth-first ball sizes around `(0; 0, .., 0)` in the digraph on
/// `Z x Z^k` where `(i; x)` has out-neighbours at level `i + 1` with
/// coordinate `i mod k` unchanged or increased by one.
pub fn growth_ball_limited(k: usize, n_max: usize, limit: usize) -> Result<GrowthSequence> {
    if k == 0 {
        return Err(Error::InvalidParameter("growth needs k >= 1".into()));
    }
    let origin = vec![0i64; k + 1];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([origin.clone()]);
    let mut frontier = vec![origin];
    let mut values = vec![1u64];
    for _ in 0..n_max {
        let mut next = Vec::new();
        for v in &frontier {
            let level = v[0];
            let out_coord = 1 + level.rem_euclid(k as i64) as usize;
            let in_coord = 1 + (level - 1).rem_euclid(k as i64) as usize;
            for step in [0, 1] {
                let mut up = v.clone();
                up[0] += 1;
                up[out_coord] += step;
                let mut down = v.clone();
                down[0] -= 1;
                down[in_coord] -= step;
                for w in [up, down] {
                    if !seen.contains(&w) {
                        seen.insert(w.clone());
                        next.push(w);
                    }
                }
            }
        }
        if seen.len() > limit {
            return Err(Error::MemoryGuard { limit });
        }
        values.push(seen.len() as u64);
        frontier = next;
    }
    let degree_estimate = growth_degree_estimate(&values).ok();
    Ok(GrowthSequence {
        k,
        values,
        degree_estimate,
    })
}

/// Least-squares slope of `ln b_n` against `ln(n + 1)` over the top half of
/// the sequence.
pub fn growth_degree_estimate(values: &[u64]) -> Result<f64> {
    const NEEDED: usize = 8;
    if values.len() < NEEDED {
        return Err(Error::TooFewValues {
            needed: NEEDED,
            found: values.len(),
        });
    }
    let start = values.len() / 2;
    let points: Vec<(f64, f64)> = (start..values.len())
        .map(|n| (((n + 1) as f64).ln(), (values[n] as f64).ln()))
        .collect();
    let m = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    Ok(sxy / sxx)
}

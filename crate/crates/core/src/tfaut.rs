//! Two-fold automorphisms: pairs `(g, h)` of vertex permutations with
//! `(u, v)` an arc iff `(u^g, v^h)` is an arc.
//!
//! They correspond to side-preserving automorphisms of the canonical double
//! half-cover, which is how [`tf_from_cdhc`] computes them.

use serde::{Deserialize, Serialize};

use crate::autsearch::{
    automorphism_generators, automorphism_group, ColoredDigraph, SearchOptions,
};
use crate::constructions::{cdhc, PsiGroup};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::perm::{BlockSystem, PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TfPair {
    pub first: Permutation,
    pub second: Permutation,
}

impl TfPair {
    /// `(x, 0) -> (x^first, 0)` and `(x, 1) -> (x^second, 1)`, with the double
    /// cover's numbering `x + side * n`.
    pub fn to_cdhc_permutation(&self) -> Permutation {
        let n = self.first.degree();
        let images = (0..n)
            .map(|x| self.first.image(x))
            .chain((0..n).map(|x| self.second.image(x) + n))
            .collect();
        Permutation::from_images_unchecked(images)
    }

    /// Inverse of [`TfPair::to_cdhc_permutation`]; `None` if `p` swaps sides.
    pub fn from_cdhc_permutation(p: &Permutation) -> Option<TfPair> {
        let n = p.degree() / 2;
        let first: Vec<usize> = (0..n).map(|x| p.image(x)).collect();
        let second: Vec<usize> = (n..2 * n).map(|x| p.image(x).wrapping_sub(n)).collect();
        if first.iter().any(|&y| y >= n) || second.iter().any(|&y| y >= n) {
            return None;
        }
        Some(TfPair {
            first: Permutation::from_images_unchecked(first),
            second: Permutation::from_images_unchecked(second),
        })
    }
}

pub fn is_tf_pair(delta: &Digraph, g: &Permutation, h: &Permutation) -> Result<bool> {
    let n = delta.vertex_count();
    for p in [g, h] {
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: p.degree(),
            });
        }
    }
    // both maps are bijections, so arcs into arcs gives the equivalence
    Ok(delta
        .arcs()
        .all(|(u, v)| delta.has_arc(g.image(u), h.image(v))))
}

/// Generators of the two-fold automorphism group, read off the automorphisms
/// of the double half-cover with its sides coloured apart.
pub fn tf_from_cdhc(delta: &Digraph) -> Result<Vec<TfPair>> {
    Ok(tf_group(delta)?
        .generators()
        .iter()
        .map(|p| TfPair::from_cdhc_permutation(p).expect("sides are coloured apart"))
        .collect())
}

/// The two-fold automorphism group acting on the `2n` vertices of the double
/// half-cover.
pub fn tf_group(delta: &Digraph) -> Result<PermGroup> {
    tf_group_with(delta, SearchOptions::default())
}

pub fn tf_group_with(delta: &Digraph, options: SearchOptions) -> Result<PermGroup> {
    if let Some(v) =
        (0..delta.vertex_count()).find(|&v| delta.out_valency(v) + delta.in_valency(v) == 0)
    {
        return Err(Error::IsolatedVertex { vertex: v });
    }
    let cover = cdhc(delta);
    let colored = ColoredDigraph::new(cover.graph.clone(), cover.sides())?;
    automorphism_generators(&colored, options)
}

/// Whether `(g, psi(g))` is a two-fold automorphism for every `g` in `H`.
pub fn is_psi_stable(delta: &Digraph, h: &PsiGroup) -> Result<bool> {
    for (i, g) in h.elements().iter().enumerate() {
        if !is_tf_pair(delta, g, h.element(h.psi(i)))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `H` acts transitively on arcs by `(x, y) -> (x^g, y^psi(g))`.
/// Returns `false` when `H` is not psi-stable.
pub fn is_psi_arc_transitive(delta: &Digraph, h: &PsiGroup) -> Result<bool> {
    if !is_psi_stable(delta, h)? {
        return Ok(false);
    }
    // psi is a homomorphism, so this is a group action on arcs and one orbit
    // decides transitivity
    let Some((x, y)) = delta.arcs().next() else {
        return Ok(true);
    };
    let mut reached = std::collections::HashSet::new();
    for (i, g) in h.elements().iter().enumerate() {
        reached.insert((g.image(x), h.element(h.psi(i)).image(y)));
    }
    Ok(reached.len() == delta.arc_count())
}

/// The dihedral group of order `2n` on `Z_n`, listed as `a^0..a^{n-1}` then
/// `b a^0..b a^{n-1}` where `x^a = x + 1` and `x^b = -x`, with `psi` fixing
/// every `a^i` and sending `b a^i` to `b a^{i+1}`.
pub fn dihedral_theta_group(n: usize) -> Result<PsiGroup> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "dihedral group needs n >= 3, got {n}"
        )));
    }
    let rotations = (0..n).map(|i| (0..n).map(|x| (x + i) % n).collect::<Vec<_>>());
    let reflections = (0..n).map(|i| (0..n).map(|x| (n - x + i) % n).collect::<Vec<_>>());
    let elements = rotations
        .chain(reflections)
        .map(Permutation::new)
        .collect::<Result<Vec<_>>>()?;
    let psi = (0..n).chain((0..n).map(|i| n + (i + 1) % n)).collect();
    PsiGroup::new(n, elements, psi)
}

/// Whether every pair `{(x, 0), (x, 1)}` is a block of imprimitivity of the
/// automorphism group of the double half-cover.
pub fn is_stable(delta: &Digraph) -> Result<bool> {
    is_stable_with(delta, SearchOptions::default())
}

pub fn is_stable_with(delta: &Digraph, options: SearchOptions) -> Result<bool> {
    let n = delta.vertex_count();
    let cover = cdhc(delta);
    let group = automorphism_group(&cover.graph, options)?;
    if group.is_transitive() {
        for x in 0..n {
            let block = group.minimal_block(&[x, x + n])?;
            if block.blocks.iter().any(|b| b.len() > 2) {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    // every pair is a block iff the pairing is invariant under the generators
    let pairs = BlockSystem {
        blocks: (0..n).map(|x| vec![x, x + n]).collect(),
    };
    Ok(pairs.is_invariant_under(group.generators()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_digraph, directed_cycle, theta_cycle};
    use num_bigint::BigUint;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn theta_pairs() {
        let t3 = theta_cycle(3).unwrap();
        let b = perm(&[0, 2, 1]);
        let ba = perm(&[1, 0, 2]);
        assert!(is_tf_pair(&t3, &b, &ba).unwrap());
        assert!(!is_tf_pair(&t3, &b, &b).unwrap());
        let a = perm(&[1, 2, 0]);
        assert!(is_tf_pair(&t3, &a, &a).unwrap());
        assert!(is_tf_pair(&t3, &b, &perm(&[0, 1])).is_err());
    }

    #[test]
    fn tf_generators_are_sound() {
        for delta in [
            theta_cycle(3).unwrap(),
            theta_cycle(4).unwrap(),
            complete_digraph(3).unwrap(),
            directed_cycle(3).unwrap(),
        ] {
            for pair in tf_from_cdhc(&delta).unwrap() {
                assert!(is_tf_pair(&delta, &pair.first, &pair.second).unwrap());
            }
        }
    }

    #[test]
    fn theta_tf_group_contains_dihedral_pairs() {
        let t3 = theta_cycle(3).unwrap();
        let group = tf_group(&t3).unwrap();
        let h = dihedral_theta_group(3).unwrap();
        for (i, g) in h.elements().iter().enumerate() {
            let pair = TfPair {
                first: g.clone(),
                second: h.element(h.psi(i)).clone(),
            };
            assert!(group.is_member(&pair.to_cdhc_permutation()).unwrap());
        }
        // CDHC of the theta cycle is an oriented 6-cycle
        assert_eq!(group.order(), BigUint::from(6u32));
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Digraph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            tf_from_cdhc(&g),
            Err(Error::IsolatedVertex { vertex: 2 })
        ));
    }

    #[test]
    fn dihedral_groups() {
        for n in 3..=6 {
            let h = dihedral_theta_group(n).unwrap();
            assert_eq!(h.len(), 2 * n);
            assert_eq!(h.psi_order(), n);
            let theta = theta_cycle(n).unwrap();
            assert!(is_psi_stable(&theta, &h).unwrap());
            assert!(is_psi_arc_transitive(&theta, &h).unwrap());
        }
        assert!(dihedral_theta_group(2).is_err());
    }

    #[test]
    fn identity_psi_cases() {
        let t3 = theta_cycle(3).unwrap();
        let h = dihedral_theta_group(3).unwrap();
        let plain = PsiGroup::with_identity_psi(3, h.elements().to_vec()).unwrap();
        assert!(!is_psi_stable(&t3, &plain).unwrap());

        let trivial = PsiGroup::with_identity_psi(3, vec![Permutation::identity(3)]).unwrap();
        assert!(is_psi_stable(&t3, &trivial).unwrap());
        assert!(!is_psi_arc_transitive(&t3, &trivial).unwrap());

        let k3 = complete_digraph(3).unwrap();
        let s3 = PsiGroup::with_identity_psi(3, h.elements().to_vec()).unwrap();
        assert!(is_psi_stable(&k3, &s3).unwrap());
        assert!(is_psi_arc_transitive(&k3, &s3).unwrap());
    }

    #[test]
    fn stability() {
        for d in 3..=5 {
            assert!(is_stable(&complete_digraph(d).unwrap()).unwrap());
        }
        assert!(!is_stable(&theta_cycle(3).unwrap()).unwrap());
    }

    #[test]
    fn stable_means_side_stabilizer_trivial() {
        let k3 = complete_digraph(3).unwrap();
        let group = automorphism_group(&cdhc(&k3).graph, SearchOptions::default()).unwrap();
        assert_eq!(
            group.pointwise_stabilizer_order(&[0, 1, 2]).unwrap(),
            BigUint::from(1u32)
        );
    }
}

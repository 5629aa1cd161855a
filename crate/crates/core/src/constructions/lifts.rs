//! Automorphisms of quotients and windows lifted from the base digraph: the
//! level shift `s`, coordinate maps `[g]_j`, their psi-twisted versions
//! `[g]_{j,psi}`, and maps built from families of two-fold automorphisms.
//!
//! Every constructor checks arc preservation of its result before returning.

use std::collections::{BTreeMap, HashMap};

use super::zgraph::{ZLayout, ZQuotient, ZWindow};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tfaut::{is_psi_stable, is_tf_pair};

/// A finite group `H` of permutations of the base vertices, stored as an
/// explicit element list, together with an automorphism `psi` of `H` given as
/// an index map.
#[derive(Clone, Debug)]
pub struct PsiGroup {
    degree: usize,
    elements: Vec<Permutation>,
    psi: Vec<usize>,
    index: HashMap<Permutation, usize>,
    identity: usize,
}

impl PsiGroup {
    /// Validates closure of the element list and that `psi` is a group
    /// automorphism.
    pub fn new(degree: usize, elements: Vec<Permutation>, psi: Vec<usize>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidPsi("element list is empty".into()));
        }
        let mut index = HashMap::new();
        for (i, g) in elements.iter().enumerate() {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            if index.insert(g.clone(), i).is_some() {
                return Err(Error::InvalidPsi(format!("element {i} is repeated")));
            }
        }
        let identity = *index
            .get(&Permutation::identity(degree))
            .ok_or_else(|| Error::InvalidPsi("identity missing".into()))?;
        let len = elements.len();
        let mut product = vec![0; len * len];
        for (a, ga) in elements.iter().enumerate() {
            for (b, gb) in elements.iter().enumerate() {
                product[a * len + b] = *index
                    .get(&ga.then(gb))
                    .ok_or_else(|| Error::InvalidPsi(format!("not closed: {a} * {b}")))?;
            }
        }
        if psi.len() != len {
            return Err(Error::InvalidPsi(format!(
                "psi has {} entries for {len} elements",
                psi.len()
            )));
        }
        let mut hit = vec![false; len];
        for &p in &psi {
            if p >= len || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidPsi("psi is not a bijection".into()));
            }
        }
        for a in 0..len {
            for b in 0..len {
                if psi[product[a * len + b]] != product[psi[a] * len + psi[b]] {
                    return Err(Error::InvalidPsi(format!(
                        "psi is not multiplicative on ({a}, {b})"
                    )));
                }
            }
        }
        Ok(PsiGroup {
            degree,
            elements,
            psi,
            index,
            identity,
        })
    }

    /// `H` with `psi` the identity map.
    pub fn with_identity_psi(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let psi = (0..elements.len()).collect();
        PsiGroup::new(degree, elements, psi)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn psi_map(&self) -> &[usize] {
        &self.psi
    }

    /// Index of `psi(g)`.
    pub fn psi(&self, g: usize) -> usize {
        self.psi[g]
    }

    /// Length of the psi-orbit of element `g`.
    pub fn psi_period(&self, g: usize) -> usize {
        let mut x = self.psi[g];
        let mut period = 1;
        while x != g {
            x = self.psi[x];
            period += 1;
        }
        period
    }

    /// Order of psi as an automorphism of `H`.
    pub fn psi_order(&self) -> usize {
        (0..self.len()).fold(1, |acc, g| {
            let p = self.psi_period(g);
            acc / gcd(acc, p) * p
        })
    }

    /// Index of `g^(psi^t)` for any integer `t`.
    pub fn psi_power(&self, g: usize, t: i64) -> usize {
        let period = self.psi_period(g) as i64;
        let steps = t.rem_euclid(period);
        (0..steps).fold(g, |x, _| self.psi[x])
    }

    /// Wire form: `{"elements": [[..],..], "psi": [..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "elements": self.elements, "psi": self.psi })
    }

    pub fn from_json(degree: usize, value: &serde_json::Value) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Wire {
            elements: Vec<Permutation>,
            psi: Vec<usize>,
        }
        let wire: Wire = serde_json::from_value(value.clone())?;
        PsiGroup::new(degree, wire.elements, wire.psi)
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn verified<L: ZLayout>(spec: &L, p: Permutation, what: &str) -> Result<Permutation> {
    if spec.graph().is_automorphism(&p) {
        Ok(p)
    } else {
        Err(Error::NotAnAutomorphism(format!(
            "{what} does not preserve arcs"
        )))
    }
}

fn check_coordinate(k: usize, j: usize) -> Result<()> {
    if j >= k {
        return Err(Error::InvalidParameter(format!(
            "coordinate {j} out of range 0..{k}"
        )));
    }
    Ok(())
}

fn check_base_perm(delta: &Digraph, g: &Permutation) -> Result<()> {
    if g.degree() != delta.vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: delta.vertex_count(),
            found: g.degree(),
        });
    }
    Ok(())
}

/// `(i; x_0, .., x_{k-1}) -> (i+1; x_{k-1}, x_0, .., x_{k-2})`.
pub fn shift_automorphism(spec: &ZQuotient) -> Result<Permutation> {
    let codec = spec.codec();
    let q = spec.q() as i64;
    let images = (0..codec.vertex_count())
        .map(|v| {
            let (level, mut coords) = codec.decode(v);
            coords.rotate_right(1);
            codec.encode((level + 1).rem_euclid(q), &coords)
        })
        .collect();
    verified(spec, Permutation::from_images_unchecked(images), "shift")
}

/// `[g]_j`: apply `g` to coordinate `j` of every vertex. `g` must be an
/// automorphism of the base digraph.
pub fn coordinate_automorphism<L: ZLayout>(
    spec: &L,
    g: &Permutation,
    j: usize,
) -> Result<Permutation> {
    check_coordinate(spec.k(), j)?;
    check_base_perm(spec.delta(), g)?;
    if !spec.delta().is_automorphism(g) {
        return Err(Error::NotAnAutomorphism(format!(
            "{g} is not an automorphism of the base digraph"
        )));
    }
    let codec = spec.codec();
    let images = (0..codec.vertex_count())
        .map(|v| {
            let (level, mut coords) = codec.decode(v);
            coords[j] = g.image(coords[j]);
            codec.encode(level, &coords)
        })
        .collect();
    verified(
        spec,
        Permutation::from_images_unchecked(images),
        "coordinate map",
    )
}

/// The block index `t = floor((i - j + k - 1) / k)` used by the twisted lifts.
pub fn block_index(level: i64, j: usize, k: usize) -> i64 {
    (level - j as i64 + k as i64 - 1).div_euclid(k as i64)
}

/// `[g]_{j,psi}` on a quotient: coordinate `j` at level `i` is moved by
/// `g^(psi^t)` with `t` the block index of `i`. Well defined only when the
/// psi-period of `g` divides `q / k`.
pub fn psi_coordinate_automorphism(
    spec: &ZQuotient,
    h: &PsiGroup,
    g: usize,
    j: usize,
) -> Result<Permutation> {
    let k = spec.k();
    check_coordinate(k, j)?;
    if h.degree() != spec.delta().vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: spec.delta().vertex_count(),
            found: h.degree(),
        });
    }
    if g >= h.len() {
        return Err(Error::InvalidParameter(format!(
            "element index {g} out of range 0..{}",
            h.len()
        )));
    }
    if !is_psi_stable(spec.delta(), h)? {
        return Err(Error::NotPsiStable);
    }
    let blocks = spec.q() / k;
    let period = h.psi_period(g);
    if !blocks.is_multiple_of(period) {
        return Err(Error::IllDefinedLift {
            element: g,
            period,
            blocks,
        });
    }
    let codec = spec.codec();
    let images = (0..codec.vertex_count())
        .map(|v| {
            let (level, mut coords) = codec.decode(v);
            let twisted = h.element(h.psi_power(g, block_index(level, j, k)));
            coords[j] = twisted.image(coords[j]);
            codec.encode(level, &coords)
        })
        .collect();
    verified(
        spec,
        Permutation::from_images_unchecked(images),
        "psi-twisted coordinate map",
    )
}

/// `[g]_j` for a family `t -> g_t` on a window: coordinate `j` at level `i`
/// is moved by `g_t` with `t` the block index of `i`. Each consecutive pair
/// `(g_t, g_{t+1})` met by the window must be a two-fold automorphism.
pub fn family_automorphism(
    spec: &ZWindow,
    family: &BTreeMap<i64, Permutation>,
    j: usize,
) -> Result<Permutation> {
    let k = spec.k();
    check_coordinate(k, j)?;
    let t_lo = block_index(spec.lo(), j, k);
    let t_hi = block_index(spec.hi(), j, k);
    for t in t_lo..=t_hi {
        let g = family.get(&t).ok_or(Error::MissingFamilyMember { t })?;
        check_base_perm(spec.delta(), g)?;
    }
    for t in t_lo..t_hi {
        if !is_tf_pair(spec.delta(), &family[&t], &family[&(t + 1)])? {
            return Err(Error::NotTfPair { t });
        }
    }
    let codec = spec.codec();
    let images = (0..codec.vertex_count())
        .map(|v| {
            let (level, mut coords) = codec.decode(v);
            let g = &family[&block_index(level, j, k)];
            coords[j] = g.image(coords[j]);
            codec.encode(level, &coords)
        })
        .collect();
    verified(
        spec,
        Permutation::from_images_unchecked(images),
        "family map",
    )
}

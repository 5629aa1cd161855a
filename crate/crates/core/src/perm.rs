//! Permutations and finitely generated permutation groups.
//!
//! Points are acted on from the right: `x^p` is `p.image(x)` and
//! `p.compose(&q)` applies `p` first, so `x^(pq) = (x^p)^q`.
//!
//! Group order, membership and pointwise stabilisers come from a stabiliser
//! chain built with Knuth's deterministic variant of Schreier-Sims. The chain
//! uses every point as a base point (optionally starting with a caller-chosen
//! prefix), which keeps the bookkeeping simple for the small degrees this crate
//! works with.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::digraph::UnionFind;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.images
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation { degree: n });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(Error::NotAPermutation { degree });
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Same as [`compose`](Self::compose) for callers that already know the
    /// degrees agree.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// `other^self`, that is `self^-1 other self` read left to right.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        self.inverse().then(other).then(self)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(x, &y)| x != y)
    }

    /// Element order, as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer_lcm(acc, c.len() as u64))
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Componentwise action on a tuple of points.
    pub fn apply_tuple(&self, tuple: &[usize]) -> Vec<usize> {
        tuple.iter().map(|&x| self.images[x]).collect()
    }
}

fn num_integer_lcm(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A partition of the domain into blocks of imprimitivity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    /// Blocks sorted internally and ordered by smallest point.
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn block_of(&self, point: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&point).is_ok())
            .map(|b| b.as_slice())
    }

    /// True if every permutation maps every block onto a block.
    pub fn is_invariant_under(&self, gens: &[Permutation]) -> bool {
        let Some(degree) = gens.first().map(|g| g.degree()) else {
            return true;
        };
        let mut label = vec![usize::MAX; degree];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                label[x] = i;
            }
        }
        gens.iter().all(|g| {
            self.blocks.iter().all(|b| {
                let target = label[g.image(b[0])];
                b.iter().all(|&x| label[g.image(x)] == target)
            })
        })
    }
}

/// A permutation group given by generators.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    /// Identity generators are pruned.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    /// Orbit of a single point, sorted.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// Orbit of a tuple under the componentwise action.
    pub fn orbit_of_tuple(&self, tuple: &[usize]) -> Result<BTreeSet<Vec<usize>>> {
        for &x in tuple {
            self.check_point(x)?;
        }
        let mut orbit = BTreeSet::from([tuple.to_vec()]);
        let mut queue = VecDeque::from([tuple.to_vec()]);
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let image = g.apply_tuple(&t);
                if orbit.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        Ok(orbit)
    }

    /// All orbits on points, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for x in 0..self.degree {
                uf.union(x, g.image(x));
            }
        }
        let mut index = HashMap::new();
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.degree {
            let r = uf.find(x);
            let i = *index.entry(r).or_insert_with(|| {
                orbits.push(Vec::new());
                orbits.len() - 1
            });
            orbits[i].push(x);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    pub fn order(&self) -> BigUint {
        self.chain().order_from(0)
    }

    pub fn is_member(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    /// Order of the subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer_order(&self, points: &[usize]) -> Result<BigUint> {
        let mut prefix = Vec::new();
        for &x in points {
            self.check_point(x)?;
            if !prefix.contains(&x) {
                prefix.push(x);
            }
        }
        let chain = StabChain::build(self.degree, &self.generators, &prefix);
        Ok(chain.order_from(prefix.len()))
    }

    /// Finest block system in which all seed points share a block.
    pub fn minimal_block(&self, seed: &[usize]) -> Result<BlockSystem> {
        for &x in seed {
            self.check_point(x)?;
        }
        let orbit = self.orbit(*seed.first().unwrap_or(&0))?;
        if orbit.len() != self.degree {
            return Err(Error::NotTransitive {
                orbit: orbit.len(),
                degree: self.degree,
            });
        }
        let mut uf = UnionFind::new(self.degree);
        let mut pending: VecDeque<(usize, usize)> = VecDeque::new();
        if let Some((&first, rest)) = seed.split_first() {
            for &x in rest {
                if uf.union(first, x) {
                    pending.push_back((first, x));
                }
            }
        }
        while let Some((a, b)) = pending.pop_front() {
            for g in &self.generators {
                let (ga, gb) = (g.image(a), g.image(b));
                if uf.union(ga, gb) {
                    pending.push_back((ga, gb));
                }
            }
        }
        let mut index = HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.degree {
            let r = uf.find(x);
            let i = *index.entry(r).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[i].push(x);
        }
        Ok(BlockSystem { blocks })
    }

    /// Wire form: list of image arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.generators).expect("image arrays serialise")
    }

    pub fn from_json(degree: usize, value: &serde_json::Value) -> Result<Self> {
        let gens: Vec<Permutation> = serde_json::from_value(value.clone())?;
        PermGroup::new(degree, gens)
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.degree {
            return Err(Error::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        Ok(())
    }
}

impl Serialize for PermGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(s)
    }
}

/// One level of the stabiliser chain.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    // coset representatives in discovery order: (point j, sigma with base^sigma = j)
    reps: Vec<(usize, Permutation)>,
    rep_index: HashMap<usize, usize>,
}

impl Level {
    fn rep(&self, j: usize) -> Option<&Permutation> {
        self.rep_index.get(&j).map(|&i| &self.reps[i].1)
    }
}

#[derive(Clone, Debug)]
struct StabChain {
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> StabChain {
        let mut base: Vec<usize> = prefix.to_vec();
        let mut in_prefix = vec![false; degree];
        for &x in prefix {
            in_prefix[x] = true;
        }
        base.extend((0..degree).filter(|&x| !in_prefix[x]));
        let levels = base
            .into_iter()
            .map(|b| {
                let mut rep_index = HashMap::new();
                rep_index.insert(b, 0);
                Level {
                    base: b,
                    gens: Vec::new(),
                    reps: vec![(b, Permutation::identity(degree))],
                    rep_index,
                }
            })
            .collect();
        let mut chain = StabChain { levels };
        for g in gens {
            chain.add(0, g.clone());
        }
        chain
    }

    /// Sifts `p` from level `l`; returns the residue and the level where
    /// sifting stopped (`levels.len()` if it passed every level).
    fn sift(&self, l: usize, mut p: Permutation) -> (Permutation, usize) {
        for (m, level) in self.levels.iter().enumerate().skip(l) {
            let j = p.image(level.base);
            match level.rep(j) {
                Some(sigma) => p = p.then(&sigma.inverse()),
                None => return (p, m),
            }
        }
        let end = self.levels.len();
        (p, end)
    }

    fn contains(&self, p: &Permutation) -> bool {
        let (residue, stop) = self.sift(0, p.clone());
        stop == self.levels.len() && residue.is_identity()
    }

    // Knuth's procedures A, B, C.
    fn add(&mut self, l: usize, p: Permutation) {
        if l >= self.levels.len() {
            return;
        }
        let (residue, stop) = self.sift(l, p.clone());
        if stop == self.levels.len() && residue.is_identity() {
            return;
        }
        self.extend_level(l, p);
    }

    fn extend_level(&mut self, l: usize, p: Permutation) {
        self.levels[l].gens.push(p.clone());
        let snapshot: Vec<Permutation> =
            self.levels[l].reps.iter().map(|(_, s)| s.clone()).collect();
        for sigma in snapshot {
            self.close(l, sigma.then(&p));
        }
    }

    fn close(&mut self, l: usize, tau: Permutation) {
        let j = tau.image(self.levels[l].base);
        if let Some(sigma) = self.levels[l].rep(j) {
            let reduced = tau.then(&sigma.inverse());
            self.add(l + 1, reduced);
        } else {
            let level = &mut self.levels[l];
            level.rep_index.insert(j, level.reps.len());
            level.reps.push((j, tau.clone()));
            let gens = level.gens.clone();
            for g in gens {
                self.close(l, tau.then(&g));
            }
        }
    }

    fn order_from(&self, l: usize) -> BigUint {
        self.levels
            .iter()
            .skip(l)
            .fold(BigUint::one(), |acc, level| {
                acc * BigUint::from(level.reps.len())
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn composition_follows_exponent_convention() {
        let t = cyc(2, &[0, 1]);
        assert!(t.compose(&t).unwrap().is_identity());

        // x^a = x + 1, x^b = -x on Z_3
        let a = p(&[1, 2, 0]);
        let b = p(&[0, 2, 1]);
        assert_eq!(a.compose(&b).unwrap().images(), &[2, 1, 0]);
        assert_eq!(a.compose(&Permutation::identity(3)).unwrap(), a);
        assert!(matches!(
            a.compose(&t),
            Err(Error::DegreeMismatch {
                expected: 3,
                found: 2
            })
        ));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
        let q: Permutation = serde_json::from_str("[1,0,2]").unwrap();
        assert_eq!(q, cyc(3, &[0, 1]));
    }

    #[test]
    fn powers_and_orders() {
        let c = cyc(5, &[0, 1, 2, 3, 4]);
        assert_eq!(c.order(), 5);
        assert!(c.pow(5).is_identity());
        assert_eq!(c.pow(-1), c.inverse());
        let q = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(format!("{q}"), "(0 1)(2 3 4)");
    }

    #[test]
    fn orbits() {
        let g = PermGroup::new(3, vec![cyc(3, &[0, 1, 2])]).unwrap();
        assert_eq!(g.orbit(0).unwrap(), vec![0, 1, 2]);

        let h = PermGroup::new(2, vec![cyc(2, &[0, 1])]).unwrap();
        let o = h.orbit_of_tuple(&[0, 1]).unwrap();
        assert_eq!(
            o.into_iter().collect::<Vec<_>>(),
            vec![vec![0, 1], vec![1, 0]]
        );

        let d = PermGroup::new(3, vec![p(&[1, 2, 0]), p(&[0, 2, 1])]).unwrap();
        assert_eq!(d.orbit(0).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn group_orders() {
        let c3 = PermGroup::new(3, vec![cyc(3, &[0, 1, 2])]).unwrap();
        assert_eq!(c3.order(), BigUint::from(3u32));
        let d3 = PermGroup::new(3, vec![p(&[1, 2, 0]), p(&[0, 2, 1])]).unwrap();
        assert_eq!(d3.order(), BigUint::from(6u32));
        assert_eq!(PermGroup::trivial(4).order(), BigUint::one());
        let s6 = PermGroup::new(6, vec![cyc(6, &[0, 1]), cyc(6, &[0, 1, 2, 3, 4, 5])]).unwrap();
        assert_eq!(s6.order(), BigUint::from(720u32));
        let a5 = PermGroup::new(5, vec![cyc(5, &[0, 1, 2]), cyc(5, &[0, 1, 2, 3, 4])]).unwrap();
        assert_eq!(a5.order(), BigUint::from(60u32));
    }

    #[test]
    fn membership() {
        let a = p(&[1, 2, 0]);
        let b = p(&[0, 2, 1]);
        let c3 = PermGroup::new(3, vec![a.clone()]).unwrap();
        assert!(c3.is_member(&Permutation::identity(3)).unwrap());
        assert!(!c3.is_member(&cyc(3, &[0, 1])).unwrap());
        let d3 = PermGroup::new(3, vec![a, b.clone()]).unwrap();
        assert!(d3.is_member(&b).unwrap());
        assert!(d3.is_member(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn minimal_blocks() {
        let c4 = PermGroup::new(4, vec![cyc(4, &[0, 1, 2, 3])]).unwrap();
        assert_eq!(
            c4.minimal_block(&[0, 2]).unwrap().blocks,
            vec![vec![0, 2], vec![1, 3]]
        );
        let c3 = PermGroup::new(3, vec![cyc(3, &[0, 1, 2])]).unwrap();
        assert_eq!(
            c3.minimal_block(&[0, 1]).unwrap().blocks,
            vec![vec![0, 1, 2]]
        );
        assert_eq!(
            c4.minimal_block(&[0, 1, 2, 3]).unwrap().blocks,
            vec![vec![0, 1, 2, 3]]
        );
        let intransitive = PermGroup::new(3, vec![cyc(3, &[0, 1])]).unwrap();
        assert!(matches!(
            intransitive.minimal_block(&[0, 1]),
            Err(Error::NotTransitive {
                orbit: 2,
                degree: 3
            })
        ));
    }

    #[test]
    fn pointwise_stabilizers() {
        let g = PermGroup::new(2, vec![cyc(2, &[0, 1])]).unwrap();
        assert_eq!(g.pointwise_stabilizer_order(&[0]).unwrap(), BigUint::one());
        let s3 = PermGroup::new(3, vec![cyc(3, &[0, 1]), cyc(3, &[0, 1, 2])]).unwrap();
        assert_eq!(
            s3.pointwise_stabilizer_order(&[0]).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            s3.pointwise_stabilizer_order(&[]).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            s3.pointwise_stabilizer_order(&[2, 1]).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn group_json() {
        let g = PermGroup::new(3, vec![cyc(3, &[0, 1, 2]), Permutation::identity(3)]).unwrap();
        assert_eq!(g.generators().len(), 1);
        let v = g.to_json();
        assert_eq!(v.to_string(), "[[1,2,0]]");
        let back = PermGroup::from_json(3, &v).unwrap();
        assert_eq!(back.generators(), g.generators());
    }
}

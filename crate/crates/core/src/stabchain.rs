//! Deterministic Schreier–Sims stabilizer chains and the [`PermGroup`] type.
//!
//! A chain for `G` with base `(b_0, …, b_{m-1})` stores, for every level `l`,
//! the strong generators fixing `b_0, …, b_{l-1}`, the orbit of `b_l` under
//! them, and a transversal `u_β` with `b_l^{u_β} = β`. The group order is the
//! product of the orbit lengths.
//!
//! Construction follows the classic level-by-level scheme: every Schreier
//! generator `u_β s u_{β^s}^{-1}` of level `l` is sifted through the deeper
//! levels and any non-trivial residue becomes a new strong generator. A
//! preferred base is honoured verbatim, redundant points included, so that
//! level `l` of the chain is always the stabilizer of the first `l` preferred
//! points.

use std::collections::VecDeque;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest degree accepted by chain construction unless overridden.
pub const DEFAULT_MAX_DEGREE: usize = 5000;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
    inverses: Vec<Option<Permutation>>,
    /// `checked[i]` = number of generators whose Schreier generator at
    /// `orbit[i]` is known to sift to the identity.
    checked: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverses = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        inverses[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
            inverses,
            checked: vec![0],
        }
    }

    fn extend_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            for g in &self.gens {
                let img = g.apply(beta);
                if self.transversal[img].is_none() {
                    let u = self.transversal[beta].as_ref().unwrap().compose_unchecked(g);
                    self.inverses[img] = Some(u.inverse());
                    self.transversal[img] = Some(u);
                    self.orbit.push(img);
                    self.checked.push(0);
                }
            }
            i += 1;
        }
    }
}

/// A base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a chain whose base starts with `preferred_base` (in order).
    ///
    /// When `known_order` is given, construction stops as soon as the
    /// product of orbit lengths reaches it.
    pub fn build(
        degree: usize,
        generators: &[Permutation],
        preferred_base: &[usize],
        known_order: Option<&BigUint>,
    ) -> Result<Self> {
        Self::build_with_limit(degree, generators, preferred_base, known_order, DEFAULT_MAX_DEGREE)
    }

    pub fn build_with_limit(
        degree: usize,
        generators: &[Permutation],
        preferred_base: &[usize],
        known_order: Option<&BigUint>,
        max_degree: usize,
    ) -> Result<Self> {
        if degree > max_degree {
            return Err(Error::DegreeTooLarge { degree, max: max_degree });
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let mut chain = StabilizerChain { degree, levels: Vec::new() };
        let mut used = vec![false; degree];
        for &b in preferred_base {
            if b >= degree {
                return Err(Error::PointOutOfRange { point: b, degree });
            }
            if !used[b] {
                used[b] = true;
                chain.levels.push(Level::new(b, degree));
            }
        }
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let p = g.support()[0];
                chain.levels.push(Level::new(p, degree));
            }
        }
        for g in &gens {
            for level in chain.levels.iter_mut() {
                level.gens.push(g.clone());
                if g.apply(level.base_point) != level.base_point {
                    break;
                }
            }
        }
        for level in chain.levels.iter_mut() {
            level.extend_orbit();
        }
        chain.complete(known_order);
        Ok(chain)
    }

    fn complete(&mut self, known_order: Option<&BigUint>) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            if let Some(target) = known_order {
                if &self.order() == target {
                    return;
                }
            }
            match self.check_level(i as usize) {
                None => i -= 1,
                Some(j) => i = j as isize,
            }
        }
    }

    /// Verifies the Schreier generators of level `i`. Returns the deepest
    /// level that received a new strong generator, if any.
    fn check_level(&mut self, i: usize) -> Option<usize> {
        let mut oi = 0;
        while oi < self.levels[i].orbit.len() {
            while self.levels[i].checked[oi] < self.levels[i].gens.len() {
                let level = &self.levels[i];
                let gi = level.checked[oi];
                let beta = level.orbit[oi];
                let s = &level.gens[gi];
                let img = s.apply(beta);
                let schreier = level.transversal[beta]
                    .as_ref()
                    .unwrap()
                    .compose_unchecked(s)
                    .compose_unchecked(level.inverses[img].as_ref().unwrap());
                let (j, h) = self.sift_from(schreier, i + 1);
                if h.is_identity() {
                    self.levels[i].checked[oi] += 1;
                    continue;
                }
                if j == self.levels.len() {
                    let p = h.support()[0];
                    self.levels.push(Level::new(p, self.degree));
                }
                for l in i + 1..=j {
                    self.levels[l].gens.push(h.clone());
                    self.levels[l].extend_orbit();
                }
                return Some(j);
            }
            oi += 1;
        }
        None
    }

    fn sift_from(&self, mut g: Permutation, from: usize) -> (usize, Permutation) {
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let beta = g.apply(level.base_point);
            match &level.inverses[beta] {
                Some(inv) => g = g.compose_unchecked(inv),
                None => return (l, g),
            }
        }
        (self.levels.len(), g)
    }

    /// Sifts `g` through the whole chain, returning the level where it
    /// stopped and the residue.
    pub fn sift(&self, g: &Permutation) -> (usize, Permutation) {
        self.sift_from(g.clone(), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).1.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Orbit of the base point of `level` under the level stabilizer.
    pub fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn transversal_element(&self, level: usize, point: usize) -> Option<&Permutation> {
        self.levels[level].transversal[point].as_ref()
    }

    /// Strong generators of the stabilizer of the first `level` base points.
    /// For `level == depth()` this is empty (the trivial group).
    pub fn stabilizer_generators(&self, level: usize) -> &[Permutation] {
        if level >= self.levels.len() {
            &[]
        } else {
            &self.levels[level].gens
        }
    }

    /// All strong generators, without repetition.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// The chain of the stabilizer of the first `level` base points.
    pub fn suffix(&self, level: usize) -> StabilizerChain {
        StabilizerChain {
            degree: self.degree,
            levels: self.levels[level.min(self.levels.len())..].to_vec(),
        }
    }

    /// Adds a generator to an existing chain, keeping it complete.
    pub fn add_generator(&mut self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: g.degree() });
        }
        let (j, h) = self.sift(g);
        if h.is_identity() {
            return Ok(false);
        }
        if j == self.levels.len() {
            let p = h.support()[0];
            self.levels.push(Level::new(p, self.degree));
        }
        for l in 0..=j {
            self.levels[l].gens.push(h.clone());
            self.levels[l].extend_orbit();
        }
        let mut i = j as isize;
        while i >= 0 {
            match self.check_level(i as usize) {
                None => i -= 1,
                Some(k) => i = k as isize,
            }
        }
        Ok(true)
    }

    /// Every element, in the order of the chain factorisation. Intended for
    /// small groups only.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for x in &out {
                for &beta in &level.orbit {
                    next.push(x.compose_unchecked(level.transversal[beta].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out
    }
}

/// A permutation group given by generators, with a lazily built chain.
///
/// The generator list is kept verbatim (identities and repeats included) so
/// that induced actions can match generators positionally.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    known_order: Option<BigUint>,
    chain: OnceLock<StabilizerChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            known_order: None,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            known_order: Some(BigUint::one()),
            chain: OnceLock::new(),
        }
    }

    /// Parses one generator per string in 1-based cycle notation.
    pub fn from_cycles(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    /// Attaches a known order; chain construction may stop early once the
    /// chain reaches it.
    pub fn with_known_order(mut self, order: BigUint) -> Self {
        self.known_order = Some(order);
        self
    }

    pub(crate) fn from_chain(generators: Vec<Permutation>, chain: StabilizerChain) -> Self {
        let lock = OnceLock::new();
        let degree = chain.degree();
        let order = chain.order();
        let _ = lock.set(chain);
        PermGroup {
            degree,
            generators,
            known_order: Some(order),
            chain: lock,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The cached chain, built on first use. Concurrent first calls agree
    /// because construction is deterministic.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| {
            StabilizerChain::build(self.degree, &self.generators, &[], self.known_order.as_ref())
                .expect("generator degrees validated at construction")
        })
    }

    pub fn try_chain(&self) -> Result<&StabilizerChain> {
        if self.degree > DEFAULT_MAX_DEGREE {
            return Err(Error::DegreeTooLarge { degree: self.degree, max: DEFAULT_MAX_DEGREE });
        }
        Ok(self.chain())
    }

    /// A fresh chain whose base begins with `base`.
    pub fn chain_with_base(&self, base: &[usize]) -> Result<StabilizerChain> {
        let gens = if let Some(c) = self.chain.get() {
            c.strong_generators()
        } else {
            self.generators.clone()
        };
        StabilizerChain::build(self.degree, &gens, base, Some(&self.order()))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: p.degree() });
        }
        Ok(self.chain().contains(p))
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `G_{pts[0], pts[1], …}` with its chain already attached.
    pub fn pointwise_stabilizer(&self, pts: &[usize]) -> Result<PermGroup> {
        if pts.is_empty() {
            return Ok(self.clone());
        }
        let chain = self.chain_with_base(pts)?;
        let mut distinct = Vec::new();
        for &p in pts {
            if !distinct.contains(&p) {
                distinct.push(p);
            }
        }
        let suffix = chain.suffix(distinct.len());
        let gens = chain.stabilizer_generators(distinct.len()).to_vec();
        Ok(PermGroup::from_chain(gens, suffix))
    }

    /// Some `g ∈ G` with `src^g = dst` (entrywise), or `None`.
    ///
    /// The witness is canonical: the chain based at `src` determines it.
    pub fn tuple_transporter(&self, src: &[usize], dst: &[usize]) -> Result<Option<Permutation>> {
        if src.len() != dst.len() {
            return Err(Error::InvalidArgument("tuples of different length".into()));
        }
        for &p in src.iter().chain(dst) {
            if p >= self.degree {
                return Err(Error::PointOutOfRange { point: p, degree: self.degree });
            }
        }
        for i in 0..src.len() {
            for j in 0..i {
                if src[i] == src[j] {
                    return Err(Error::InvalidArgument("source tuple must be injective".into()));
                }
                if dst[i] == dst[j] {
                    return Ok(None);
                }
            }
        }
        let chain = self.chain_with_base(src)?;
        let mut x = Permutation::identity(self.degree);
        let mut x_inv = x.clone();
        for (l, &d) in dst.iter().enumerate() {
            let target = x_inv.apply(d);
            match chain.transversal_element(l, target) {
                None => return Ok(None),
                Some(u) => {
                    x = u.compose_unchecked(&x);
                    x_inv = x.inverse();
                }
            }
        }
        Ok(Some(x))
    }

    /// Orbits on points, each sorted, listed by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut orbit = orbit_of(self.degree, &self.generators, point);
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// All elements. Fails above `bound`.
    pub fn elements(&self, bound: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(bound) {
            return Err(Error::OrderTooLarge { order: order.to_string(), bound });
        }
        Ok(self.chain().elements())
    }

    /// Symmetric group on `0..n` restricted to the points of `orbits`:
    /// the direct product of the symmetric groups on each orbit.
    pub fn direct_product_of_symmetric(degree: usize, orbits: &[Vec<usize>]) -> PermGroup {
        let mut gens = Vec::new();
        let mut order = BigUint::one();
        for orbit in orbits {
            if orbit.len() < 2 {
                continue;
            }
            for i in 1..=orbit.len() {
                order *= BigUint::from(i);
            }
            let mut images: Vec<usize> = (0..degree).collect();
            for (i, &p) in orbit.iter().enumerate() {
                images[p] = orbit[(i + 1) % orbit.len()];
            }
            gens.push(Permutation::from_images_unchecked(images));
            let mut images: Vec<usize> = (0..degree).collect();
            images.swap(orbit[0], orbit[1]);
            gens.push(Permutation::from_images_unchecked(images));
        }
        PermGroup::new(degree, gens).unwrap().with_known_order(order)
    }
}

pub(crate) fn orbit_of(degree: usize, gens: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut queue = VecDeque::from([point]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                orbit.push(q);
                queue.push_back(q);
            }
        }
    }
    orbit
}

pub(crate) fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if seen[p] {
            continue;
        }
        let mut orbit = orbit_of(degree, gens, p);
        for &q in &orbit {
            seen[q] = true;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(n, gens).unwrap()
    }

    fn a5() -> PermGroup {
        group(5, &["(1 2 3)", "(1 2 3 4 5)"])
    }

    /// Breadth-first closure of the generators: an order oracle that does
    /// not touch the chain.
    fn brute_force_order(g: &PermGroup) -> usize {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(g.degree());
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for s in g.generators() {
                let y = &x * s;
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn orders_of_small_groups() {
        assert_eq!(a5().order(), BigUint::from(60u32));
        assert_eq!(group(6, &["(1 2)", "(1 2 3 4 5 6)"]).order(), BigUint::from(720u32));
        assert_eq!(PermGroup::trivial(5).order(), BigUint::one());
        assert_eq!(PermGroup::trivial(5).chain().depth(), 0);
    }

    #[test]
    fn chain_order_matches_enumeration() {
        for g in [
            a5(),
            group(6, &["(1 2)(3 4)", "(1 3 5)(2 4 6)"]),
            group(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]),
            group(8, &["(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)", "(1 3)"]),
        ] {
            let n = brute_force_order(&g);
            assert_eq!(g.order(), BigUint::from(n));
            assert_eq!(g.chain().elements().len(), n);
        }
    }

    #[test]
    fn preferred_base_is_respected() {
        let g = a5();
        let c = g.chain_with_base(&[4, 2]).unwrap();
        assert_eq!(&c.base()[..2], &[4, 2]);
        assert_eq!(c.order(), BigUint::from(60u32));
        // A full preferred base keeps redundant levels.
        let c = g.chain_with_base(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.base(), vec![0, 1, 2, 3, 4]);
        assert_eq!(c.orbit(3).len(), 1);
    }

    #[test]
    fn membership() {
        let g = a5();
        assert!(!g.contains(&Permutation::parse_cycles("(1 2)", 5).unwrap()).unwrap());
        assert!(g.contains(&Permutation::parse_cycles("(1 2 3)", 5).unwrap()).unwrap());
        assert!(g.contains(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn transporter_examples() {
        let c3 = group(3, &["(1 2 3)"]);
        assert!(c3.tuple_transporter(&[0, 1], &[0, 2]).unwrap().is_none());
        let g = a5();
        let t = g.tuple_transporter(&[0, 1], &[1, 0]).unwrap().unwrap();
        assert_eq!((t.apply(0), t.apply(1)), (1, 0));
        assert!(g.contains(&t).unwrap());
        assert!(g.tuple_transporter(&[0, 1], &[2, 2]).unwrap().is_none());
        assert!(g.tuple_transporter(&[0, 0], &[1, 2]).is_err());
        // A_5 is not 4-transitive.
        assert!(g.tuple_transporter(&[0, 1, 2, 3], &[0, 1, 2, 4]).unwrap().is_none());
    }

    #[test]
    fn pointwise_stabilizers() {
        let g = a5();
        assert!(g.pointwise_stabilizer(&[0, 1, 2]).unwrap().order().is_one());
        assert_eq!(g.pointwise_stabilizer(&[3]).unwrap().order(), BigUint::from(12u32));
        let s4 = group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(s4.pointwise_stabilizer(&[]).unwrap().order(), BigUint::from(24u32));
    }

    #[test]
    fn add_generator_grows_the_chain() {
        let mut c = a5().chain().clone();
        assert!(c.add_generator(&Permutation::parse_cycles("(1 2)", 5).unwrap()).unwrap());
        assert_eq!(c.order(), BigUint::from(120u32));
        assert!(!c.add_generator(&Permutation::parse_cycles("(4 5)", 5).unwrap()).unwrap());
    }

    #[test]
    fn known_order_terminates_early_and_correctly() {
        let g = PermGroup::direct_product_of_symmetric(9, &[vec![0, 1, 2, 3], vec![5, 6, 7, 8]]);
        assert_eq!(g.order(), BigUint::from(576u32));
        assert!(g.contains(&Permutation::parse_cycles("(6 9)", 9).unwrap()).unwrap());
        assert!(!g.contains(&Permutation::parse_cycles("(4 5)", 9).unwrap()).unwrap());
    }

    #[test]
    fn degree_guard() {
        let g = Permutation::identity(10);
        assert!(matches!(
            StabilizerChain::build_with_limit(10, &[g], &[], None, 5),
            Err(Error::DegreeTooLarge { .. })
        ));
    }
}

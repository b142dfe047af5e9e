//! Block systems of transitive actions.
//!
//! The finest block system containing a given set of points in one block is
//! found with the union–find closure due to Atkinson: merge the seeds, then
//! keep merging the images of every merged pair under every generator until
//! nothing changes.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::actions::{quotient_action, ActionInstance};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A partition of `0..degree` into blocks, each sorted, listed by least
/// element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    #[serde(skip)]
    block_of: Vec<usize>,
}

impl BlockSystem {
    pub fn new(degree: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        let mut block_of = vec![usize::MAX; degree];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
            for &p in b {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if block_of[p] != usize::MAX {
                    return Err(Error::InvalidArgument(format!("point {} in two blocks", p + 1)));
                }
                block_of[p] = i;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::InvalidArgument("blocks do not cover the domain".into()));
        }
        Ok(BlockSystem { blocks, block_of })
    }

    pub fn singletons(degree: usize) -> Self {
        BlockSystem::new(degree, (0..degree).map(|p| vec![p]).collect()).unwrap()
    }

    pub fn universal(degree: usize) -> Self {
        BlockSystem::new(degree, vec![(0..degree).collect()]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.block_of[point]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Size of the block containing point 0 (all blocks have this size in
    /// the transitive case).
    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, |b| b.len())
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.degree()
    }

    pub fn is_universal(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Every generator maps every block onto a block.
    pub fn is_invariant(&self, gens: &[Permutation]) -> bool {
        gens.iter().all(|g| {
            g.degree() == self.degree()
                && self.blocks.iter().all(|b| {
                    let target = self.block_of[g.apply(b[0])];
                    b.iter().all(|&p| self.block_of[g.apply(p)] == target)
                })
        })
    }

    /// Block-by-block printout with 1-based points.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| crate::actions::set_label(b))
            .collect();
        parts.join(" ")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Finest invariant partition with all `seeds` in one block.
pub(crate) fn block_system_from_seeds(degree: usize, gens: &[Permutation], seeds: &[usize]) -> BlockSystem {
    let mut uf = UnionFind::new(degree);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    if let Some((&first, rest)) = seeds.split_first() {
        for &s in rest {
            if uf.union(first, s) {
                queue.push((first, s));
            }
        }
    }
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let (x, y) = (g.apply(a), g.apply(b));
            let (rx, ry) = (uf.find(x), uf.find(y));
            if rx != ry {
                uf.union(rx, ry);
                queue.push((rx, ry));
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); degree];
    for p in 0..degree {
        let r = uf.find(p);
        blocks[r].push(p);
    }
    BlockSystem::new(degree, blocks.into_iter().filter(|b| !b.is_empty()).collect()).unwrap()
}

/// The minimal block system with `seed.0` and `seed.1` in one block.
pub fn minimal_block_system(action: &ActionInstance, seed: (usize, usize)) -> Result<BlockSystem> {
    let n = action.degree();
    if seed.0 >= n || seed.1 >= n {
        return Err(Error::PointOutOfRange { point: seed.0.max(seed.1), degree: n });
    }
    if seed.0 == seed.1 {
        return Err(Error::InvalidArgument("seed points must be distinct".into()));
    }
    if !action.is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(block_system_from_seeds(n, action.group.generators(), &[seed.0, seed.1]))
}

/// Transitive with no block system other than the two trivial ones. The
/// one-point domain counts as primitive.
pub fn is_primitive(action: &ActionInstance) -> bool {
    let n = action.degree();
    if n <= 1 {
        return true;
    }
    if !action.is_transitive() {
        return false;
    }
    let gens = action.group.generators();
    (1..n).all(|b| block_system_from_seeds(n, gens, &[0, b]).is_universal())
}

/// Every invariant partition of a transitive action, trivial ones included,
/// ordered by block size and then by blocks.
pub fn all_block_systems(action: &ActionInstance) -> Result<Vec<BlockSystem>> {
    let n = action.degree();
    if !action.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let gens = action.group.generators();
    // Blocks containing 0 form a lattice generated by joins of the minimal
    // blocks of pairs {0, x}.
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut systems: Vec<BlockSystem> = Vec::new();
    let start = BlockSystem::singletons(n);
    seen.insert(BTreeSet::from([0]));
    systems.push(start);
    let mut frontier = vec![vec![0usize]];
    while let Some(block) = frontier.pop() {
        for x in 0..n {
            if block.contains(&x) {
                continue;
            }
            let mut seeds = block.clone();
            seeds.push(x);
            let sys = block_system_from_seeds(n, gens, &seeds);
            let b0: BTreeSet<usize> = sys.blocks()[0].iter().copied().collect();
            if seen.insert(b0) {
                frontier.push(sys.blocks()[0].clone());
                systems.push(sys);
            }
        }
    }
    systems.sort_by(|a, b| a.block_size().cmp(&b.block_size()).then_with(|| a.blocks.cmp(&b.blocks)));
    Ok(systems)
}

/// Invariant partitions with more than one block whose quotient action is
/// primitive. The singleton partition is included exactly when the action
/// itself is primitive.
pub fn maximal_block_systems(action: &ActionInstance) -> Result<Vec<BlockSystem>> {
    if action.degree() < 2 {
        return Err(Error::InvalidArgument("domain needs at least two points".into()));
    }
    let mut out = Vec::new();
    for sys in all_block_systems(action)? {
        if sys.is_universal() {
            continue;
        }
        let quotient = quotient_action(action, &sys)?;
        if is_primitive(&quotient) {
            out.push(sys);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::ksubsets_action;
    use crate::stabchain::PermGroup;

    fn action(n: usize, gens: &[&str]) -> ActionInstance {
        ActionInstance::natural("G", PermGroup::from_cycles(n, gens).unwrap())
    }

    fn d8() -> ActionInstance {
        action(4, &["(1 2 3 4)", "(1 3)"])
    }

    fn c6() -> ActionInstance {
        action(6, &["(1 2 3 4 5 6)"])
    }

    /// Every partition of `0..n`, by restricted growth strings.
    fn all_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        fn rec(i: usize, n: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
            if i == n {
                let k = labels.iter().max().map_or(0, |m| m + 1);
                let mut parts = vec![Vec::new(); k];
                for (p, &l) in labels.iter().enumerate() {
                    parts[l].push(p);
                }
                out.push(parts);
                return;
            }
            let k = labels.iter().max().map_or(0, |m| m + 1);
            for l in 0..=k {
                labels.push(l);
                rec(i + 1, n, labels, out);
                labels.pop();
            }
        }
        rec(0, n, &mut Vec::new(), &mut out);
        out
    }

    /// Exhaustive oracle: invariant partitions among all partitions.
    fn invariant_partitions(a: &ActionInstance) -> Vec<BlockSystem> {
        let mut v: Vec<BlockSystem> = all_partitions(a.degree())
            .into_iter()
            .map(|p| BlockSystem::new(a.degree(), p).unwrap())
            .filter(|s| s.is_invariant(a.group.generators()))
            .collect();
        v.sort_by(|x, y| x.block_size().cmp(&y.block_size()).then_with(|| x.blocks.cmp(&y.blocks)));
        v
    }

    #[test]
    fn minimal_blocks() {
        let s = minimal_block_system(&d8(), (0, 2)).unwrap();
        assert_eq!(s.blocks(), &[vec![0, 2], vec![1, 3]]);
        let s = minimal_block_system(&c6(), (0, 2)).unwrap();
        assert_eq!(s.blocks(), &[vec![0, 2, 4], vec![1, 3, 5]]);
        let a5 = action(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        for b in 1..5 {
            assert!(minimal_block_system(&a5, (0, b)).unwrap().is_universal());
        }
        let intrans = action(3, &["(1 2)"]);
        assert_eq!(minimal_block_system(&intrans, (0, 1)), Err(Error::NotTransitive));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&action(4, &["(1 2)", "(1 2 3 4)"])));
        assert!(!is_primitive(&d8()));
        let a5 = action(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert!(is_primitive(&ksubsets_action(&a5, 2).unwrap()));
        assert!(is_primitive(&action(1, &[])));
        assert!(!is_primitive(&action(3, &["(1 2)"])));
    }

    #[test]
    fn block_lattice_matches_exhaustive_enumeration() {
        for a in [d8(), c6(), action(6, &["(1 2 3 4 5 6)", "(2 6)(3 5)"]), action(8, &["(1 2 3 4)(5 6 7 8)", "(1 5)(2 6)(3 7)(4 8)"])] {
            assert_eq!(all_block_systems(&a).unwrap(), invariant_partitions(&a));
        }
    }

    #[test]
    fn maximal_systems() {
        let a5 = action(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        assert_eq!(maximal_block_systems(&a5).unwrap(), vec![BlockSystem::singletons(5)]);

        let m = maximal_block_systems(&c6()).unwrap();
        let sizes: Vec<usize> = m.iter().map(|s| s.block_size()).collect();
        assert_eq!(sizes, vec![2, 3]);

        // The square has a single non-trivial system, the two diagonals.
        let m = maximal_block_systems(&d8()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].blocks(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn invariance_check() {
        let s = BlockSystem::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!s.is_invariant(d8().group.generators()));
        assert!(BlockSystem::new(4, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(BlockSystem::new(4, vec![vec![0, 1]]).is_err());
    }
}

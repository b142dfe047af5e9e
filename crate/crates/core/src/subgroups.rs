//! Subgroups of small groups up to conjugacy, and a simplicity test.
//!
//! Elements are numbered once; a subgroup is a bitset over the numbering.
//! Starting from the trivial group, every class representative `R` is
//! extended by one element `x` at a time, one `x` per double coset `RxR`.
//! Every subgroup arises this way from a conjugate of a smaller one, so one
//! representative per class is reached. Each new class is recorded with all
//! its conjugates so later duplicates are recognised by lookup.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stabchain::PermGroup;

/// Largest group order accepted by default.
pub const DEFAULT_ORDER_BOUND: u64 = 3000;

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| wi * 64 + b)
        })
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
}

/// A group with all elements numbered and a multiplication table.
struct Table {
    elements: Vec<Permutation>,
    mul: Vec<u16>,
    /// `conj[i][x]` = index of `g_i^{-1} x g_i` for generator `g_i`.
    conj: Vec<Vec<u16>>,
}

impl Table {
    fn new(group: &PermGroup, bound: u64) -> Result<Self> {
        let bound = bound.min(u16::MAX as u64);
        let elements = group.elements(bound)?;
        let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let n = elements.len();
        let mut mul = vec![0u16; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * n + j] = index[&a.compose_unchecked(b)] as u16;
            }
        }
        let conj = group
            .generators()
            .iter()
            .map(|g| {
                let inv = g.inverse();
                elements
                    .iter()
                    .map(|x| index[&inv.compose_unchecked(x).compose_unchecked(g)] as u16)
                    .collect()
            })
            .collect();
        Ok(Table { elements, mul, conj })
    }

    fn len(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b] as usize
    }

    fn identity(&self) -> usize {
        self.elements.iter().position(|e| e.is_identity()).unwrap()
    }

    /// The subgroup generated by `gens`.
    fn closure(&self, gens: &[usize]) -> Bits {
        let mut bits = Bits::new(self.len());
        let id = self.identity();
        bits.set(id);
        let mut queue = vec![id];
        while let Some(y) = queue.pop() {
            for &s in gens {
                let z = self.mul(y, s);
                if !bits.get(z) {
                    bits.set(z);
                    queue.push(z);
                }
            }
        }
        bits
    }

    fn conjugate(&self, set: &Bits, gen: usize) -> Bits {
        let mut out = Bits::new(self.len());
        for x in set.iter() {
            out.set(self.conj[gen][x] as usize);
        }
        out
    }

    /// All conjugates of `set`, found by conjugating with the generators.
    fn conjugacy_class(&self, set: &Bits) -> Vec<Bits> {
        let mut seen: HashSet<Bits> = HashSet::from([set.clone()]);
        let mut out = vec![set.clone()];
        let mut i = 0;
        while i < out.len() {
            for g in 0..self.conj.len() {
                let c = self.conjugate(&out[i], g);
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
            i += 1;
        }
        out
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub group: PermGroup,
    pub order: u64,
    /// Number of conjugates.
    pub class_size: usize,
    /// The normal core is trivial, so the coset action is faithful.
    pub core_free: bool,
}

/// One representative of every conjugacy class of subgroups, sorted by
/// order (ties kept in discovery order). Refuses groups above `bound`.
pub fn subgroups_up_to_conjugacy(group: &PermGroup, bound: u64, budget: &Budget) -> Result<Vec<SubgroupClass>> {
    let order = group.order();
    if order > BigUint::from(bound) {
        return Err(Error::OrderTooLarge { order: order.to_string(), bound });
    }
    let table = Table::new(group, bound)?;
    let n = table.len();
    let mut meter = budget.meter();
    let mut known: HashSet<Bits> = HashSet::new();
    let mut reps: Vec<(Bits, Vec<usize>, usize, bool)> = Vec::new();

    let record = |bits: Bits, gens: Vec<usize>, known: &mut HashSet<Bits>, reps: &mut Vec<_>| {
        let class = table.conjugacy_class(&bits);
        let mut core = bits.clone();
        for c in &class {
            core = core.and(c);
        }
        let core_free = core.count() == 1;
        let size = class.len();
        known.extend(class);
        reps.push((bits, gens, size, core_free));
    };

    let trivial = table.closure(&[]);
    record(trivial, Vec::new(), &mut known, &mut reps);
    let mut i = 0;
    while i < reps.len() {
        let (r, gens) = (reps[i].0.clone(), reps[i].1.clone());
        let members: Vec<usize> = r.iter().collect();
        let mut covered = r.clone();
        for x in 0..n {
            if covered.get(x) {
                continue;
            }
            meter.tick()?;
            for &a in &members {
                let ax = table.mul(a, x);
                for &b in &members {
                    covered.set(table.mul(ax, b));
                }
            }
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let s = table.closure(&next_gens);
            if !known.contains(&s) {
                record(s, next_gens, &mut known, &mut reps);
            }
        }
        i += 1;
    }

    let mut out: Vec<SubgroupClass> = reps
        .into_iter()
        .map(|(bits, gens, class_size, core_free)| {
            let order = bits.count() as u64;
            let g = PermGroup::new(
                group.degree(),
                gens.iter().map(|&i| table.elements[i].clone()).collect(),
            )
            .expect("elements share the degree")
            .with_known_order(BigUint::from(order));
            SubgroupClass { group: g, order, class_size, core_free }
        })
        .collect();
    out.sort_by_key(|c| c.order);
    Ok(out)
}

/// Whether the group is non-abelian and simple: the normal closure of every
/// element is trivial or everything. Refuses groups above `bound`.
pub fn is_nonabelian_simple(group: &PermGroup, bound: u64) -> Result<bool> {
    let gens = group.generators();
    let abelian = gens.iter().all(|a| gens.iter().all(|b| a * b == b * a));
    if abelian {
        return Ok(false);
    }
    let order = group.order();
    let elements = group.elements(bound)?;
    let mut seen: HashSet<Permutation> = HashSet::new();
    for x in &elements {
        if x.is_identity() || seen.contains(x) {
            continue;
        }
        let mut class = vec![x.clone()];
        seen.insert(x.clone());
        let mut i = 0;
        while i < class.len() {
            for g in gens {
                let c = class[i].conjugate_by(g);
                if seen.insert(c.clone()) {
                    class.push(c);
                }
            }
            i += 1;
        }
        let closure = PermGroup::new(group.degree(), class)?;
        if closure.order() != order {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, cyclic, symmetric};

    fn orders(g: &PermGroup) -> Vec<u64> {
        subgroups_up_to_conjugacy(g, DEFAULT_ORDER_BOUND, &Budget::UNLIMITED)
            .unwrap()
            .iter()
            .map(|c| c.order)
            .collect()
    }

    #[test]
    fn class_counts() {
        assert_eq!(orders(&alternating(5)), vec![1, 2, 3, 4, 5, 6, 10, 12, 60]);
        assert_eq!(orders(&symmetric(3)), vec![1, 2, 3, 6]);
        assert_eq!(orders(&alternating(4)), vec![1, 2, 3, 4, 12]);
        assert_eq!(orders(&symmetric(4)).len(), 11);
        assert_eq!(orders(&cyclic(12)), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn class_sizes_and_cores() {
        let cl = subgroups_up_to_conjugacy(&alternating(4), 3000, &Budget::UNLIMITED).unwrap();
        let summary: Vec<(u64, usize, bool)> = cl.iter().map(|c| (c.order, c.class_size, c.core_free)).collect();
        assert_eq!(
            summary,
            vec![(1, 1, true), (2, 3, true), (3, 4, true), (4, 1, false), (12, 1, false)]
        );
    }

    #[test]
    fn refuses_large_groups() {
        assert!(matches!(
            subgroups_up_to_conjugacy(&symmetric(7), 3000, &Budget::UNLIMITED),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn simplicity() {
        assert!(is_nonabelian_simple(&alternating(5), 3000).unwrap());
        assert!(!is_nonabelian_simple(&symmetric(5), 3000).unwrap());
        assert!(!is_nonabelian_simple(&alternating(4), 3000).unwrap());
        assert!(!is_nonabelian_simple(&cyclic(5), 3000).unwrap());
    }
}

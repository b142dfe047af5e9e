//! Group actions on labelled domains and the constructions used to induce
//! new actions from old ones.
//!
//! Every [`ActionInstance`] keeps the generators of its group in the same
//! positions as the abstract group it came from, so two actions of the same
//! group can be combined generator by generator (see [`union`]).

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::blocks::BlockSystem;
use crate::error::{Error, Result};
use crate::perm::{Domain, Permutation};
use crate::stabchain::PermGroup;

/// How an action was constructed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Natural,
    Ksubsets { k: usize },
    Partitions { a: usize, b: usize },
    Cosets { subgroup_order: String },
    Blocks { blocks: usize, block_size: usize },
    Restriction { size: usize },
    Union { parts: Vec<Provenance> },
    Projective { n: usize, q: usize },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Natural => write!(f, "natural"),
            Provenance::Ksubsets { k } => write!(f, "ksubsets:{k}"),
            Provenance::Partitions { a, b } => write!(f, "partitions:{a}x{b}"),
            Provenance::Cosets { subgroup_order } => write!(f, "cosets:|H|={subgroup_order}"),
            Provenance::Blocks { blocks, block_size } => write!(f, "blocks:{blocks}x{block_size}"),
            Provenance::Restriction { size } => write!(f, "restriction:{size}"),
            Provenance::Union { parts } => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "union({})", s.join(" + "))
            }
            Provenance::Projective { n, q } => write!(f, "projective:{n},{q}"),
        }
    }
}

/// A group acting on a labelled domain.
///
/// `group` is the permutation image on the domain; `source_order` is the
/// order of the abstract group the action came from. The action is faithful
/// exactly when the two orders agree.
#[derive(Clone, Debug)]
pub struct ActionInstance {
    pub name: String,
    pub group: PermGroup,
    pub domain: Domain,
    pub provenance: Provenance,
    pub source_order: BigUint,
}

impl ActionInstance {
    /// The natural action of a permutation group on `1..=n`.
    pub fn natural(name: impl Into<String>, group: PermGroup) -> Self {
        let source_order = group.order();
        ActionInstance {
            name: name.into(),
            domain: Domain::natural(group.degree()),
            group,
            provenance: Provenance::Natural,
            source_order,
        }
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    /// Order of the kernel of the action.
    pub fn kernel_order(&self) -> BigUint {
        &self.source_order / self.group.order()
    }

    pub fn is_faithful(&self) -> bool {
        self.group.order() == self.source_order
    }

    pub fn is_transitive(&self) -> bool {
        self.group.is_transitive()
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        self.group.orbits()
    }

    /// Short description, e.g. `A5 on ksubsets:2 (degree 10)`.
    pub fn describe(&self) -> String {
        format!("{} on {} (degree {})", self.name, self.provenance, self.degree())
    }

    fn derived(&self, group: PermGroup, domain: Domain, provenance: Provenance) -> ActionInstance {
        ActionInstance {
            name: self.name.clone(),
            group,
            domain,
            provenance,
            source_order: self.source_order.clone(),
        }
    }
}

/// Induces the action of `gens` on `objects`, where `act` computes the image
/// of an object under one generator. Objects must be closed under `act`.
pub(crate) fn induce<T, F>(objects: &[T], gens: &[Permutation], act: F) -> Result<Vec<Permutation>>
where
    T: Hash + Eq,
    F: Fn(&T, &Permutation) -> T,
{
    let index: HashMap<&T, usize> = objects.iter().enumerate().map(|(i, o)| (o, i)).collect();
    gens.iter()
        .map(|g| {
            let images = objects
                .iter()
                .map(|o| {
                    index
                        .get(&act(o, g))
                        .copied()
                        .ok_or_else(|| Error::InvalidArgument("object set is not invariant".into()))
                })
                .collect::<Result<Vec<usize>>>()?;
            Permutation::from_images(images)
        })
        .collect()
}

pub(crate) fn set_label(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(|p| (p + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// The action on `k`-subsets induced from an action on points.
pub fn ksubsets_action(base: &ActionInstance, k: usize) -> Result<ActionInstance> {
    let n = base.degree();
    if k == 0 || 2 * k > n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={}", n / 2)));
    }
    let subsets = k_subsets(n, k);
    let gens = induce(&subsets, base.group.generators(), |s, g| {
        let mut t: Vec<usize> = s.iter().map(|&p| g.apply(p)).collect();
        t.sort_unstable();
        t
    })?;
    let labels = subsets.iter().map(|s| set_label(s)).collect();
    Ok(base.derived(
        PermGroup::new(subsets.len(), gens)?,
        Domain::new(labels)?,
        Provenance::Ksubsets { k },
    ))
}

/// All partitions of `0..a*b` into `b` parts of size `a`. Parts are sorted
/// and listed by least element.
pub fn uniform_partitions(a: usize, b: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(a: usize, free: &[usize], parts: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&first, rest)) = free.split_first() else {
            out.push(parts.clone());
            return;
        };
        for pick in k_subsets(rest.len(), a - 1) {
            let mut part = vec![first];
            part.extend(pick.iter().map(|&i| rest[i]));
            let remaining: Vec<usize> =
                rest.iter().enumerate().filter(|(i, _)| !pick.contains(i)).map(|(_, &x)| x).collect();
            parts.push(part);
            rec(a, &remaining, parts, out);
            parts.pop();
        }
    }
    if a == 0 {
        return Vec::new();
    }
    let free: Vec<usize> = (0..a * b).collect();
    let mut out = Vec::new();
    rec(a, &free, &mut Vec::new(), &mut out);
    out
}

/// The action on partitions into `b` parts of size `a`.
pub fn partitions_action(base: &ActionInstance, a: usize, b: usize) -> Result<ActionInstance> {
    let n = base.degree();
    if a < 2 || b < 2 || a * b != n {
        return Err(Error::InvalidArgument(format!(
            "need n = a*b with a, b >= 2; got n = {n}, a = {a}, b = {b}"
        )));
    }
    let parts = uniform_partitions(a, b);
    let gens = induce(&parts, base.group.generators(), |p, g| {
        let mut q: Vec<Vec<usize>> = p
            .iter()
            .map(|part| {
                let mut s: Vec<usize> = part.iter().map(|&x| g.apply(x)).collect();
                s.sort_unstable();
                s
            })
            .collect();
        q.sort_unstable();
        q
    })?;
    let labels = parts
        .iter()
        .map(|p| {
            let inner: Vec<String> = p.iter().map(|s| set_label(s)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    Ok(base.derived(
        PermGroup::new(parts.len(), gens)?,
        Domain::new(labels)?,
        Provenance::Partitions { a, b },
    ))
}

/// The action on the blocks of an invariant partition.
pub fn quotient_action(base: &ActionInstance, system: &BlockSystem) -> Result<ActionInstance> {
    if system.degree() != base.degree() {
        return Err(Error::DegreeMismatch { left: base.degree(), right: system.degree() });
    }
    if !system.is_invariant(base.group.generators()) {
        return Err(Error::NotInvariant);
    }
    let gens = base
        .group
        .generators()
        .iter()
        .map(|g| {
            let images = system
                .blocks()
                .iter()
                .map(|block| system.block_of(g.apply(block[0])))
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = system
        .blocks()
        .iter()
        .map(|b| {
            let inner: Vec<&str> = b.iter().map(|&p| base.domain.label(p)).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    Ok(base.derived(
        PermGroup::new(system.num_blocks(), gens)?,
        Domain::new(labels)?,
        Provenance::Blocks {
            blocks: system.num_blocks(),
            block_size: system.block_size(),
        },
    ))
}

/// The action on an invariant subset, relabelled as `0..|subset|` in
/// increasing order of the original points.
pub fn restriction(base: &ActionInstance, subset: &[usize]) -> Result<ActionInstance> {
    let n = base.degree();
    let mut pts = subset.to_vec();
    pts.sort_unstable();
    pts.dedup();
    let mut position = vec![usize::MAX; n];
    for (i, &p) in pts.iter().enumerate() {
        if p >= n {
            return Err(Error::PointOutOfRange { point: p, degree: n });
        }
        position[p] = i;
    }
    let gens = base
        .group
        .generators()
        .iter()
        .map(|g| {
            let images = pts
                .iter()
                .map(|&p| {
                    let q = position[g.apply(p)];
                    if q == usize::MAX {
                        Err(Error::SubsetNotInvariant)
                    } else {
                        Ok(q)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = pts.iter().map(|&p| base.domain.label(p).to_string()).collect();
    Ok(base.derived(
        PermGroup::new(pts.len(), gens)?,
        Domain::new(labels)?,
        Provenance::Restriction { size: pts.len() },
    ))
}

/// Disjoint union of actions of one abstract group: generator `i` of the
/// result acts as generator `i` of every summand.
pub fn union(parts: &[ActionInstance]) -> Result<ActionInstance> {
    let first = parts
        .first()
        .ok_or_else(|| Error::InvalidArgument("union of no actions".into()))?;
    let ngens = first.group.generators().len();
    for p in parts {
        if p.group.generators().len() != ngens {
            return Err(Error::InvalidArgument(
                "summands have different numbers of generators".into(),
            ));
        }
        if p.source_order != first.source_order {
            return Err(Error::InvalidArgument("summands come from groups of different orders".into()));
        }
    }
    let degree: usize = parts.iter().map(|p| p.degree()).sum();
    let mut gens = Vec::with_capacity(ngens);
    for i in 0..ngens {
        let mut images = Vec::with_capacity(degree);
        let mut offset = 0;
        for p in parts {
            let g = &p.group.generators()[i];
            images.extend(g.images().iter().map(|&x| x + offset));
            offset += p.degree();
        }
        gens.push(Permutation::from_images(images)?);
    }
    let mut labels = Vec::with_capacity(degree);
    for (i, p) in parts.iter().enumerate() {
        labels.extend(p.domain.labels().iter().map(|l| format!("{}:{}", i + 1, l)));
    }
    Ok(ActionInstance {
        name: first.name.clone(),
        group: PermGroup::new(degree, gens)?,
        domain: Domain::new(labels)?,
        provenance: Provenance::Union {
            parts: parts.iter().map(|p| p.provenance.clone()).collect(),
        },
        source_order: first.source_order.clone(),
    })
}

/// Canonical representative of the right coset `H x`: the element of `H x`
/// whose images of `base` are lexicographically least. `hchain` must be a
/// chain for `H` based at `base`.
fn coset_key(hchain: &crate::stabchain::StabilizerChain, base: &[usize], x: &Permutation) -> Vec<usize> {
    let mut cur = x.clone();
    for (l, _) in base.iter().enumerate() {
        if l >= hchain.depth() {
            break;
        }
        let best = hchain
            .orbit(l)
            .iter()
            .copied()
            .min_by_key(|&g| cur.apply(g))
            .expect("orbit is non-empty");
        let u = hchain.transversal_element(l, best).unwrap();
        cur = u.compose_unchecked(&cur);
    }
    base.iter().map(|&b| cur.apply(b)).collect()
}

/// The action of `G` on the right cosets of a subgroup `H` by right
/// multiplication. Point 0 is the coset `H` itself.
pub fn coset_action(name: &str, group: &PermGroup, subgroup: &PermGroup) -> Result<ActionInstance> {
    for (index, h) in subgroup.generators().iter().enumerate() {
        if !group.contains(h)? {
            return Err(Error::NotSubgroup { index });
        }
    }
    let base = group.chain().base();
    let hchain = subgroup.chain_with_base(&base)?;
    let identity = Permutation::identity(group.degree());
    let mut reps = vec![identity.clone()];
    let mut keys: HashMap<Vec<usize>, usize> = HashMap::new();
    keys.insert(coset_key(&hchain, &base, &identity), 0);
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); group.generators().len()];
    let mut i = 0;
    while i < reps.len() {
        for (gi, g) in group.generators().iter().enumerate() {
            let y = reps[i].compose_unchecked(g);
            let key = coset_key(&hchain, &base, &y);
            let next = keys.len();
            let j = *keys.entry(key).or_insert_with(|| {
                reps.push(y);
                next
            });
            images[gi].push(j);
        }
        i += 1;
    }
    let gens = images
        .into_iter()
        .map(Permutation::from_images)
        .collect::<Result<Vec<_>>>()?;
    let labels = (0..reps.len()).map(|i| format!("Hx{}", i + 1)).collect();
    Ok(ActionInstance {
        name: name.to_string(),
        group: PermGroup::new(reps.len(), gens)?,
        domain: Domain::new(labels)?,
        provenance: Provenance::Cosets {
            subgroup_order: subgroup.order().to_string(),
        },
        source_order: group.order(),
    })
}

/// Whether two transitive actions of the same abstract group are
/// equivalent: some point stabilizer of one equals a point stabilizer of
/// the other.
pub fn actions_equivalent(a: &ActionInstance, b: &ActionInstance) -> Result<bool> {
    if !a.is_transitive() || !b.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if a.degree() != b.degree() {
        return Ok(false);
    }
    let joint = union(&[a.clone(), b.clone()])?;
    let stab = joint.group.pointwise_stabilizer(&[0])?;
    let fixed = (a.degree()..joint.degree())
        .any(|p| stab.generators().iter().all(|g| g.apply(p) == p));
    Ok(fixed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn action(name: &str, n: usize, gens: &[&str]) -> ActionInstance {
        ActionInstance::natural(name, PermGroup::from_cycles(n, gens).unwrap())
    }

    fn a5() -> ActionInstance {
        action("A5", 5, &["(1 2 3)", "(1 2 3 4 5)"])
    }

    fn s_n(n: usize) -> ActionInstance {
        let cycle: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let c = format!("({})", cycle.join(" "));
        action(&format!("S{n}"), n, &["(1 2)", &c])
    }

    #[test]
    fn subset_degrees() {
        assert_eq!(ksubsets_action(&s_n(5), 2).unwrap().degree(), 10);
        assert_eq!(ksubsets_action(&s_n(6), 3).unwrap().degree(), 20);
        assert!(ksubsets_action(&s_n(5), 3).is_err());
        assert!(ksubsets_action(&s_n(5), 0).is_err());
        let a = ksubsets_action(&a5(), 2).unwrap();
        assert_eq!(a.domain.label(0), "{1,2}");
        assert!(a.is_faithful());
    }

    #[test]
    fn partition_degrees() {
        assert_eq!(partitions_action(&s_n(6), 2, 3).unwrap().degree(), 15);
        assert_eq!(partitions_action(&s_n(6), 3, 2).unwrap().degree(), 10);
        assert!(partitions_action(&s_n(6), 4, 2).is_err());
        assert!(partitions_action(&s_n(6), 6, 1).is_err());
    }

    #[test]
    fn coset_actions() {
        let g = a5().group;
        let a4 = g.pointwise_stabilizer(&[4]).unwrap();
        let act = coset_action("A5", &g, &a4).unwrap();
        assert_eq!(act.degree(), 5);
        assert_eq!(act.order(), BigUint::from(60u32));
        assert_eq!(act.group.pointwise_stabilizer(&[0]).unwrap().order(), BigUint::from(12u32));

        let c5 = PermGroup::from_cycles(5, &["(1 2 3 4 5)"]).unwrap();
        let act = coset_action("A5", &g, &c5).unwrap();
        assert_eq!(act.degree(), 12);
        assert!(act.is_transitive() && act.is_faithful());

        let s3 = PermGroup::from_cycles(3, &["(1 2)", "(1 2 3)"]).unwrap();
        let a3 = PermGroup::from_cycles(3, &["(1 2 3)"]).unwrap();
        let act = coset_action("S3", &s3, &a3).unwrap();
        assert_eq!(act.degree(), 2);
        assert!(!act.is_faithful());
        assert_eq!(act.kernel_order(), BigUint::from(3u32));

        let odd = PermGroup::from_cycles(5, &["(1 2)"]).unwrap();
        assert!(matches!(coset_action("A5", &g, &odd), Err(Error::NotSubgroup { index: 0 })));
    }

    #[test]
    fn unions_and_restrictions() {
        let a = a5();
        let pairs = ksubsets_action(&a, 2).unwrap();
        let u = union(&[a.clone(), a.clone()]).unwrap();
        assert_eq!(u.degree(), 10);
        assert_eq!(u.orbits().len(), 2);
        let u = union(&[a.clone(), pairs.clone()]).unwrap();
        let sizes: Vec<usize> = u.orbits().iter().map(|o| o.len()).collect();
        assert_eq!(sizes, vec![5, 10]);
        let back = restriction(&u, &(5..15).collect::<Vec<_>>()).unwrap();
        assert_eq!(back.group.generators(), pairs.group.generators());
        assert!(matches!(restriction(&u, &[0, 1]), Err(Error::SubsetNotInvariant)));
        let c = action("C3", 3, &["(1 2 3)"]);
        assert!(union(&[a, c]).is_err());
    }

    #[test]
    fn equivalence_of_actions() {
        let a = a5();
        assert!(actions_equivalent(&a, &a).unwrap());
        let g = a.group.clone();
        let a4 = g.pointwise_stabilizer(&[0]).unwrap();
        let cos = coset_action("A5", &g, &a4).unwrap();
        assert!(actions_equivalent(&a, &cos).unwrap());
        // Degree-6 action on cosets of D10 is not equivalent to the natural one.
        let d10 = PermGroup::from_cycles(5, &["(1 2 3 4 5)", "(2 5)(3 4)"]).unwrap();
        let six = coset_action("A5", &g, &d10).unwrap();
        assert!(!actions_equivalent(&a, &six).unwrap());
    }

    #[test]
    fn partition_enumeration_counts() {
        assert_eq!(uniform_partitions(2, 3).len(), 15);
        assert_eq!(uniform_partitions(3, 2).len(), 10);
        assert_eq!(uniform_partitions(2, 4).len(), 105);
    }
}

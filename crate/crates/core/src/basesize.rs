//! Minimal bases: exact branch-and-bound, greedy bounds and explicit
//! constructions for subset and partition actions.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::actions::{k_subsets, ksubsets_action, partitions_action, ActionInstance};
use crate::bignum::ceil_log;
use crate::budget::Budget;
use crate::catalog::{alternating, symmetric};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stabchain::{orbits_of, PermGroup, StabilizerChain};

/// A base together with how much is known about its minimality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseRecord {
    pub size: usize,
    /// 0-based points; their pointwise stabilizer is trivial.
    pub witness: Vec<usize>,
    /// Minimality has been proved.
    pub exhaustive: bool,
    /// The witness is the lexicographically least minimal base among
    /// orbit-representative sequences.
    pub canonical: bool,
    pub nodes: u64,
}

/// Least `r` with `maxorbit^r ≥ |G|`, a lower bound for every base.
pub fn information_bound(group: &PermGroup) -> usize {
    let order = group.order();
    if order.is_one() {
        return 0;
    }
    let maxorb = group.orbits().iter().map(|o| o.len()).max().unwrap_or(1);
    ceil_log(&order, maxorb)
}

/// Repeatedly fixes the least point of a longest orbit of the current
/// stabilizer.
pub fn greedy_base(action: &ActionInstance) -> Result<BaseRecord> {
    if !action.is_faithful() {
        return Err(Error::NotFaithful);
    }
    Ok(greedy_for_group(&action.group))
}

pub(crate) fn greedy_for_group(group: &PermGroup) -> BaseRecord {
    let n = group.degree();
    let mut gens: Vec<Permutation> = group.chain().strong_generators();
    let mut order = group.order();
    let mut witness = Vec::new();
    while !order.is_one() {
        let orbits = orbits_of(n, &gens);
        let best = orbits
            .iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .unwrap();
        let p = best[0];
        let len = best.len();
        let chain = StabilizerChain::build(n, &gens, &[p], Some(&order)).expect("degree checked");
        gens = chain.stabilizer_generators(1).to_vec();
        order /= BigUint::from(len);
        witness.push(p);
    }
    let exhaustive = witness.len() == information_bound(group);
    BaseRecord {
        size: witness.len(),
        witness,
        exhaustive,
        canonical: false,
        nodes: 0,
    }
}

struct Search {
    degree: usize,
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    exceeded: AtomicBool,
    best: AtomicUsize,
    witness: Mutex<Option<Vec<usize>>>,
    lower: usize,
}

impl Search {
    fn tick(&self) -> bool {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(max) = self.budget.max_nodes {
            if used > max {
                self.exceeded.store(true, Ordering::Relaxed);
            }
        }
        if used & 0xff == 0 {
            if let Some(limit) = self.budget.max_duration {
                if self.start.elapsed() > limit {
                    self.exceeded.store(true, Ordering::Relaxed);
                }
            }
        }
        !self.exceeded.load(Ordering::Relaxed)
    }

    fn done(&self) -> bool {
        self.exceeded.load(Ordering::Relaxed) || self.best.load(Ordering::Relaxed) <= self.lower
    }

    fn offer(&self, prefix: &[usize]) {
        let mut w = self.witness.lock().unwrap();
        let better = match w.as_ref() {
            None => true,
            Some(cur) => prefix.len() < cur.len() || (prefix.len() == cur.len() && prefix < cur.as_slice()),
        };
        if better {
            *w = Some(prefix.to_vec());
            self.best.fetch_min(prefix.len(), Ordering::Relaxed);
        }
    }

    /// Candidate points at a node, or `None` if the node is pruned.
    fn candidates(&self, gens: &[Permutation], order: &BigUint, depth: usize) -> Option<Vec<usize>> {
        let best = self.best.load(Ordering::Relaxed);
        if depth + 1 >= best {
            return None;
        }
        let orbits = orbits_of(self.degree, gens);
        let maxorb = orbits.iter().map(|o| o.len()).max().unwrap_or(1);
        let remaining = best - 1 - depth;
        if ceil_log(order, maxorb) > remaining {
            return None;
        }
        Some(orbits.iter().filter(|o| o.len() > 1).map(|o| o[0]).collect())
    }

    fn child(&self, gens: &[Permutation], order: &BigUint, p: usize) -> (Vec<Permutation>, BigUint) {
        let chain = StabilizerChain::build(self.degree, gens, &[p], Some(order)).expect("degree checked");
        let len = chain.orbit(0).len();
        (chain.stabilizer_generators(1).to_vec(), order / BigUint::from(len))
    }

    fn dfs(&self, gens: &[Permutation], order: &BigUint, prefix: &mut Vec<usize>) {
        if self.done() || !self.tick() {
            return;
        }
        if order.is_one() {
            self.offer(prefix);
            return;
        }
        let Some(cands) = self.candidates(gens, order, prefix.len()) else {
            return;
        };
        for p in cands {
            if self.done() {
                return;
            }
            let (g, o) = self.child(gens, order, p);
            prefix.push(p);
            self.dfs(&g, &o, prefix);
            prefix.pop();
        }
    }
}

/// Minimal base size by depth-first search over orbit representatives of
/// successive point stabilizers.
///
/// With `workers > 1` the top-level branches run in parallel; the size is
/// still exact but the witness is only "a" minimal base. When the budget
/// runs out the greedy record is returned with `exhaustive = false`.
pub fn exact_base_size(action: &ActionInstance, budget: &Budget, workers: usize) -> Result<BaseRecord> {
    if !action.is_faithful() {
        return Err(Error::NotFaithful);
    }
    Ok(exact_for_group(&action.group, budget, workers))
}

pub(crate) fn exact_for_group(group: &PermGroup, budget: &Budget, workers: usize) -> BaseRecord {
    let greedy = greedy_for_group(group);
    if greedy.size == 0 {
        return BaseRecord { exhaustive: true, canonical: true, ..greedy };
    }
    let search = Search {
        degree: group.degree(),
        budget: *budget,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        exceeded: AtomicBool::new(false),
        best: AtomicUsize::new(greedy.size + 1),
        witness: Mutex::new(None),
        lower: information_bound(group),
    };
    let gens = group.chain().strong_generators();
    let order = group.order();
    if workers <= 1 {
        search.dfs(&gens, &order, &mut Vec::new());
    } else if search.tick() {
        if let Some(cands) = search.candidates(&gens, &order, 0) {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("thread pool");
            pool.install(|| {
                cands.par_iter().for_each(|&p| {
                    if search.done() {
                        return;
                    }
                    let (g, o) = search.child(&gens, &order, p);
                    search.dfs(&g, &o, &mut vec![p]);
                })
            });
        }
    }
    let nodes = search.nodes.load(Ordering::Relaxed);
    let exceeded = search.exceeded.load(Ordering::Relaxed);
    let witness = search.witness.into_inner().unwrap();
    match witness {
        Some(w) if !exceeded || w.len() == search.lower => BaseRecord {
            size: w.len(),
            witness: w,
            exhaustive: true,
            canonical: workers <= 1,
            nodes,
        },
        Some(w) => BaseRecord {
            size: w.len(),
            witness: w,
            exhaustive: false,
            canonical: false,
            nodes,
        },
        None if exceeded => BaseRecord { nodes, ..greedy },
        // Nothing beat greedy + 1, so the greedy base is minimal.
        _ => BaseRecord {
            exhaustive: true,
            nodes,
            ..greedy
        },
    }
}

/// The explicit family of 2-subsets whose pointwise stabilizer in `S_n` is
/// trivial. Pairs are 1-based.
pub fn halasi_pairs(n: usize) -> Result<Vec<[usize; 2]>> {
    if n < 5 {
        return Err(Error::InvalidArgument(format!("n = {n} is below 5")));
    }
    let m = n / 3;
    let mut pairs = Vec::new();
    for j in 0..m {
        pairs.push([3 * j + 1, 3 * j + 2]);
        pairs.push([3 * j + 2, 3 * j + 3]);
    }
    if n % 3 == 2 {
        pairs.push([1, n]);
    }
    Ok(pairs)
}

/// Outcome of checking [`halasi_pairs`] against the 2-subset action.
#[derive(Clone, Debug, Serialize)]
pub struct HalasiCheck {
    pub n: usize,
    pub pairs: Vec<[usize; 2]>,
    pub size: usize,
    pub stabilizer_trivial: bool,
}

pub fn halasi_base(n: usize) -> Result<HalasiCheck> {
    let pairs = halasi_pairs(n)?;
    let sym = ActionInstance::natural(format!("S{n}"), symmetric(n));
    let action = ksubsets_action(&sym, 2)?;
    let subsets = k_subsets(n, 2);
    let points: Vec<usize> = pairs
        .iter()
        .map(|[a, b]| subsets.iter().position(|s| s == &[a - 1, b - 1]).unwrap())
        .collect();
    let stab = action.group.pointwise_stabilizer(&points)?;
    Ok(HalasiCheck {
        n,
        size: pairs.len(),
        pairs,
        stabilizer_trivial: stab.order().is_one(),
    })
}

/// Exact base sizes of `S_n` and `A_n` on partitions into `b` parts of size
/// `a`, compared with the `n − 2` bound and its equality cases.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionBaseCheck {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub symmetric: usize,
    pub alternating: usize,
    pub bound: usize,
    /// Equality `b(S_n) = n − 2` is expected exactly for `(a, b)` equal to
    /// `(2, 3)` or `(3, 2)`.
    pub equality_expected: bool,
    pub consistent: bool,
}

pub fn partition_base_check(n: usize, a: usize, b: usize, budget: &Budget) -> Result<PartitionBaseCheck> {
    if a < 2 || b < 2 || a * b != n || n > 8 {
        return Err(Error::InvalidArgument(format!(
            "need n = a·b ≤ 8 with a, b ≥ 2, got n={n} a={a} b={b}"
        )));
    }
    let sym = ActionInstance::natural(format!("S{n}"), symmetric(n));
    let alt = ActionInstance::natural(format!("A{n}"), alternating(n));
    let s = exact_base_size(&partitions_action(&sym, a, b)?, budget, 1)?;
    let t = exact_base_size(&partitions_action(&alt, a, b)?, budget, 1)?;
    let bound = n - 2;
    let equality_expected = (a, b) == (2, 3) || (a, b) == (3, 2);
    let consistent = s.exhaustive
        && t.exhaustive
        && s.size <= bound
        && t.size < bound
        && (s.size == bound) == equality_expected;
    Ok(PartitionBaseCheck {
        n,
        a,
        b,
        symmetric: s.size,
        alternating: t.size,
        bound,
        equality_expected,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: usize, gens: &[&str]) -> ActionInstance {
        ActionInstance::natural("G", PermGroup::from_cycles(n, gens).unwrap())
    }

    /// Smallest base by trying every point sequence of increasing length.
    fn brute_force_base(g: &PermGroup) -> usize {
        let n = g.degree();
        for r in 0..=n {
            let mut found = false;
            let mut idx = vec![0usize; r];
            'outer: loop {
                if g.pointwise_stabilizer(&idx).unwrap().order().is_one() {
                    found = true;
                    break;
                }
                let mut i = r;
                loop {
                    if i == 0 {
                        break 'outer;
                    }
                    i -= 1;
                    idx[i] += 1;
                    if idx[i] < n {
                        break;
                    }
                    idx[i] = 0;
                }
            }
            if found {
                return r;
            }
        }
        unreachable!()
    }

    #[test]
    fn small_cases_match_brute_force() {
        let cases = [
            nat(5, &["(1 2 3)", "(1 2 3 4 5)"]),
            nat(4, &["(1 2 3 4)", "(1 3)"]),
            nat(6, &["(1 2 3 4 5 6)"]),
            nat(6, &["(1 2)(3 4)", "(1 3)(2 4)", "(5 6)"]),
            nat(1, &[]),
        ];
        for a in &cases {
            let exact = exact_base_size(a, &Budget::UNLIMITED, 1).unwrap();
            assert!(exact.exhaustive);
            assert_eq!(exact.size, brute_force_base(&a.group));
            let stab = a.group.pointwise_stabilizer(&exact.witness).unwrap();
            assert!(stab.order().is_one());
            assert!(greedy_base(a).unwrap().size >= exact.size);
        }
    }

    #[test]
    fn a5_natural() {
        let r = exact_base_size(&nat(5, &["(1 2 3)", "(1 2 3 4 5)"]), &Budget::UNLIMITED, 1).unwrap();
        assert_eq!((r.size, r.witness.clone()), (3, vec![0, 1, 2]));
        assert!(r.canonical);
    }

    #[test]
    fn parallel_agrees_on_size() {
        let s6 = ActionInstance::natural("S6", symmetric(6));
        let a = ksubsets_action(&s6, 2).unwrap();
        let seq = exact_base_size(&a, &Budget::UNLIMITED, 1).unwrap();
        let par = exact_base_size(&a, &Budget::UNLIMITED, 4).unwrap();
        assert_eq!(seq.size, 4);
        assert_eq!(par.size, 4);
        assert!(!par.canonical);
    }

    #[test]
    fn budget_falls_back_to_greedy() {
        let s6 = ActionInstance::natural("S6", symmetric(6));
        let a = ksubsets_action(&s6, 2).unwrap();
        let r = exact_base_size(&a, &Budget::nodes(1), 1).unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.size, greedy_base(&a).unwrap().size);
    }

    #[test]
    fn halasi_examples() {
        let c = halasi_base(6).unwrap();
        assert_eq!(c.pairs, vec![[1, 2], [2, 3], [4, 5], [5, 6]]);
        assert!(c.stabilizer_trivial);
        let c = halasi_base(5).unwrap();
        assert_eq!(c.pairs, vec![[1, 2], [2, 3], [1, 5]]);
        assert_eq!(halasi_base(8).unwrap().size, 5);
        assert!(halasi_base(4).is_err());
    }

    #[test]
    fn not_faithful_is_rejected() {
        let g = PermGroup::from_cycles(3, &["(1 2 3)", "(1 2)"]).unwrap();
        let sub = PermGroup::from_cycles(3, &["(1 2 3)"]).unwrap();
        let a = crate::actions::coset_action("S3", &g, &sub).unwrap();
        assert_eq!(exact_base_size(&a, &Budget::UNLIMITED, 1), Err(Error::NotFaithful));
    }
}

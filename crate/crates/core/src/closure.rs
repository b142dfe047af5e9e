//! Wielandt `k`-closures by backtrack search.
//!
//! `h ∈ Sym(Ω)` lies in `G^{(k)}` iff every injective tuple of length at
//! most `k` is mapped into its `G`-orbit. Reordering a tuple reorders its
//! image the same way, so it is enough to test each subset of size at most
//! `k` once, listed in increasing order. The search builds `h` point by
//! point in the order `0, 1, …, n−1`; assigning `x ↦ c` only needs the
//! subsets whose largest element is `x`, and those are tested by comparing
//! canonical representatives of the domain tuple and of its image.
//!
//! The result is built Sims-style. Let `K` be the group generated by `G` and
//! the closure elements found so far, kept as a chain with base
//! `0, 1, …, n−1`. Levels are handled from the deepest up. At level `i` the
//! search looks for `h` fixing `0, …, i−1` with `i^h = γ` for each `γ`
//! outside the current `K`-orbit of `i`; a failure rules out the whole
//! orbit of `γ` under the level stabilizer of `K`, a success extends `K`.
//! Inside one search only images that are least in their left coset of the
//! deeper stabilizer are explored.
//!
//! Whenever a subset of at most `k − 1` assigned points has trivial
//! stabilizer in `G`, the remaining images are forced and `h` lies in `G`,
//! so that branch cannot produce a new element.

use std::time::Duration;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::actions::{actions_equivalent, restriction, ActionInstance};
use crate::basesize::{exact_for_group, greedy_for_group};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stabchain::{orbit_of, PermGroup, StabilizerChain};
use crate::subgroups::{is_nonabelian_simple, subgroups_up_to_conjugacy, DEFAULT_ORDER_BOUND};
use crate::tuples::{TupleCanonizer, TupleState};

/// How a closure was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClosureMethod {
    /// `k = 1`: the symmetric groups on the orbits.
    Orbitwise,
    /// The group is `degree`-transitive with `degree ≥ k`.
    Transitive { degree: usize },
    Search,
}

#[derive(Clone, Debug)]
pub struct Closure {
    pub group: PermGroup,
    /// Elements found by the search, sorted by images.
    pub found: Vec<Permutation>,
    pub method: ClosureMethod,
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, thiserror::Error)]
pub enum ClosureError {
    /// The search ran out of budget. `partial` is generated by `G` and the
    /// elements found so far: a subgroup of the closure, not the closure.
    #[error("{reason}; partial subgroup of order {order} is only a lower bound")]
    Budget {
        partial: Box<PermGroup>,
        order: BigUint,
        nodes: u64,
        reason: String,
    },
    #[error(transparent)]
    Failed(#[from] Error),
}

impl ClosureError {
    pub fn is_budget(&self) -> bool {
        matches!(self, ClosureError::Budget { .. }) || matches!(self, ClosureError::Failed(Error::BudgetExceeded(_)))
    }
}

/// `G^{(k)}` on the domain of `action`.
pub fn k_closure(action: &ActionInstance, k: usize, budget: &Budget) -> std::result::Result<Closure, ClosureError> {
    let mut meter = budget.meter();
    closure_of_group(&action.group, k, &mut meter)
}

pub(crate) fn closure_of_group(
    group: &PermGroup,
    k: usize,
    meter: &mut Meter,
) -> std::result::Result<Closure, ClosureError> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()).into());
    }
    let start_nodes = meter.nodes_used();
    let start = meter.elapsed();
    let n = group.degree();
    let done = |group: PermGroup, found, method, meter: &Meter| Closure {
        group,
        found,
        method,
        nodes: meter.nodes_used() - start_nodes,
        elapsed: meter.elapsed().saturating_sub(start),
    };
    if k == 1 {
        let g = PermGroup::direct_product_of_symmetric(n, &group.orbits());
        return Ok(done(g, Vec::new(), ClosureMethod::Orbitwise, meter));
    }
    group.try_chain()?;
    let mut canon = TupleCanonizer::new(group);
    if group.is_transitive() {
        let m = canon.transitivity_degree(k);
        if m >= k {
            let g = PermGroup::direct_product_of_symmetric(n, &[(0..n).collect()]);
            return Ok(done(g, Vec::new(), ClosureMethod::Transitive { degree: m }, meter));
        }
    }
    let mut search = Search::new(group, k.min(n), canon)?;
    let result = search.run(meter);
    let mut found = search.found;
    found.sort_by(|a, b| a.images().cmp(b.images()));
    let mut gens = group.generators().to_vec();
    gens.extend(found.iter().cloned());
    let order = search.chain.order();
    let closure = PermGroup::new(n, gens)?.with_known_order(order.clone());
    match result {
        Ok(()) => Ok(done(closure, found, ClosureMethod::Search, meter)),
        Err(Error::BudgetExceeded(reason)) => Err(ClosureError::Budget {
            partial: Box::new(closure),
            order,
            nodes: meter.nodes_used() - start_nodes,
            reason,
        }),
        Err(e) => Err(e.into()),
    }
}

struct Search {
    n: usize,
    canon: TupleCanonizer,
    img: Vec<TupleState>,
    /// `checks[x]`: subsets `T ⊆ {0..x−1}` with `|T| < k`, paired with the
    /// representative point of `T ∪ {x}`; shortest subsets first.
    checks: Vec<Vec<(u32, usize)>>,
    /// `extends[x]`: `(T, T ∪ {x})` for `|T| < k − 1`.
    extends: Vec<Vec<(u32, u32)>>,
    /// Some subset of `{0..x}` with fewer than `k` points has trivial
    /// stabilizer.
    forced: Vec<bool>,
    chain: StabilizerChain,
    found: Vec<Permutation>,
    h: Vec<usize>,
    used: Vec<bool>,
    lex: Vec<Vec<usize>>,
}

impl Search {
    fn new(group: &PermGroup, k: usize, mut canon: TupleCanonizer) -> Result<Self> {
        let n = group.degree();
        let root = canon.root();
        let mut dom = vec![root];
        let mut size = vec![0usize];
        let mut checks = vec![Vec::new(); n];
        let mut extends = vec![Vec::new(); n];
        let mut forced = vec![false; n];
        for x in 0..n {
            let current = dom.len();
            let mut list: Vec<(usize, u32, usize)> = Vec::new();
            for t in 0..current {
                if size[t] < k {
                    list.push((size[t], t as u32, canon.peek(&dom[t], x)));
                }
                if size[t] + 1 < k {
                    let (_, st) = canon.step(&dom[t], x);
                    if st.is_trivial() {
                        forced[x] = true;
                    }
                    extends[x].push((t as u32, dom.len() as u32));
                    dom.push(st);
                    size.push(size[t] + 1);
                }
            }
            list.sort_by_key(|&(s, t, _)| (s, t));
            checks[x] = list.into_iter().map(|(_, t, r)| (t, r)).collect();
            if x > 0 && forced[x - 1] {
                forced[x] = true;
            }
        }
        let base: Vec<usize> = (0..n).collect();
        let chain = group.chain_with_base(&base)?;
        Ok(Search {
            n,
            img: dom,
            canon,
            checks,
            extends,
            forced,
            chain,
            found: Vec::new(),
            h: (0..n).collect(),
            used: vec![false; n],
            lex: vec![Vec::new(); n],
        })
    }

    fn run(&mut self, meter: &mut Meter) -> Result<()> {
        let n = self.n;
        for i in (0..n).rev() {
            if self.forced[i] {
                continue;
            }
            self.prepare_level(i);
            let mut excluded = vec![false; n];
            for gamma in i + 1..n {
                if excluded[gamma] || self.chain.orbit(i).contains(&gamma) {
                    continue;
                }
                if self.search_level(i, gamma, meter)? {
                    let h = Permutation::from_images(self.h.clone())?;
                    debug_assert!(!self.chain.contains(&h));
                    self.chain.add_generator(&h)?;
                    self.found.push(h);
                } else {
                    let gens = self.chain.stabilizer_generators(i);
                    for p in orbit_of(n, gens, gamma) {
                        excluded[p] = true;
                    }
                }
            }
        }
        Ok(())
    }

    /// Lex-least pruning data: `lex[x]` lists the `d ∈ (i, x)` with `x` in
    /// the orbit of `d` under the stabilizer of `0..d−1` in `K`.
    fn prepare_level(&mut self, i: usize) {
        for l in self.lex.iter_mut() {
            l.clear();
        }
        for d in i + 1..self.n {
            for &x in self.chain.orbit(d) {
                if x != d {
                    self.lex[x].push(d);
                }
            }
        }
        for x in 0..i {
            self.h[x] = x;
        }
    }

    fn search_level(&mut self, i: usize, gamma: usize, meter: &mut Meter) -> Result<bool> {
        self.used.iter_mut().for_each(|u| *u = false);
        for x in 0..i {
            self.used[x] = true;
        }
        meter.tick()?;
        if !self.admissible(i, gamma) {
            return Ok(false);
        }
        self.assign(i, gamma);
        let ok = self.dfs(i + 1, meter)?;
        self.used[gamma] = false;
        Ok(ok)
    }

    fn admissible(&self, x: usize, c: usize) -> bool {
        self.checks[x]
            .iter()
            .all(|&(t, rep)| self.canon.peek(&self.img[t as usize], c) == rep)
    }

    fn assign(&mut self, x: usize, c: usize) {
        self.h[x] = c;
        self.used[c] = true;
        for idx in 0..self.extends[x].len() {
            let (t, new) = self.extends[x][idx];
            let (_, st) = self.canon.step(&self.img[t as usize], c);
            self.img[new as usize] = st;
        }
    }

    fn dfs(&mut self, x: usize, meter: &mut Meter) -> Result<bool> {
        if x == self.n {
            return Ok(true);
        }
        meter.tick()?;
        if self.forced[x] {
            return Ok(false);
        }
        let floor = self.lex[x].iter().map(|&d| self.h[d]).max();
        for c in 0..self.n {
            if self.used[c] || floor.is_some_and(|f| c < f) {
                continue;
            }
            if !self.admissible(x, c) {
                continue;
            }
            self.assign(x, c);
            if self.dfs(x + 1, meter)? {
                return Ok(true);
            }
            self.used[c] = false;
        }
        Ok(false)
    }
}

/// One row of a closure spectrum.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub k: usize,
    #[serde(serialize_with = "crate::bignum::serialize")]
    pub order: BigUint,
    pub generators: Vec<String>,
    pub method: ClosureMethod,
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Orders of `G^{(1)} ≥ G^{(2)} ≥ …` for one action.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub action: String,
    pub degree: usize,
    #[serde(serialize_with = "crate::bignum::serialize")]
    pub group_order: BigUint,
    pub k_max: usize,
    pub entries: Vec<SpectrumEntry>,
    /// Least `k` with `G^{(k)} = G`, when reached.
    pub minimal_k: Option<usize>,
    /// Set when the budget ran out before `minimal_k` was reached.
    pub incomplete: Option<String>,
}

/// Computes `G^{(k)}` for `k = 1, 2, …` until it equals `G` or `k = k_max`.
/// Without `k_max` the limit is one more than the exact base size.
pub fn closure_spectrum(action: &ActionInstance, k_max: Option<usize>, budget: &Budget) -> Result<ClosureReport> {
    let group = &action.group;
    let k_max = match k_max {
        Some(k) => k.max(1),
        None => exact_for_group(group, &Budget::UNLIMITED, 1).size + 1,
    };
    let order = group.order();
    let mut meter = budget.meter();
    let mut report = ClosureReport {
        action: action.describe(),
        degree: action.degree(),
        group_order: order.clone(),
        k_max,
        entries: Vec::new(),
        minimal_k: None,
        incomplete: None,
    };
    for k in 1..=k_max {
        match closure_of_group(group, k, &mut meter) {
            Ok(c) => {
                let o = c.group.order();
                let reached = o == order;
                report.entries.push(SpectrumEntry {
                    k,
                    order: o,
                    generators: c.group.generators().iter().map(|g| g.to_cycle_string()).collect(),
                    method: c.method,
                    nodes: c.nodes,
                    elapsed: c.elapsed,
                });
                if reached {
                    report.minimal_k = Some(k);
                    break;
                }
            }
            Err(e) if e.is_budget() => {
                report.incomplete = Some(e.to_string());
                break;
            }
            Err(ClosureError::Failed(e)) => return Err(e),
            Err(e) => return Err(Error::Validation(e.to_string())),
        }
    }
    Ok(report)
}

/// One faithful transitive action considered by [`k_trans`].
#[derive(Clone, Debug, Serialize)]
pub struct KTransEntry {
    pub subgroup_order: u64,
    pub degree: usize,
    /// Minimal closure number, computed exactly.
    pub exact: Option<usize>,
    /// Greedy base size plus one, an upper bound for the closure number.
    pub bound: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KTrans {
    pub k: usize,
    /// Every bounded action's bound is at most `k`; otherwise `k` is only
    /// a lower bound.
    pub certified: bool,
    pub entries: Vec<KTransEntry>,
}

/// The largest minimal closure number over the faithful transitive actions
/// of `group`: exact up to `degree_bound`, bounded by a greedy base above.
pub fn k_trans(group: &PermGroup, degree_bound: usize, budget: &Budget) -> Result<KTrans> {
    let classes = subgroups_up_to_conjugacy(group, DEFAULT_ORDER_BOUND, budget)?;
    let order = group.order();
    let mut entries = Vec::new();
    for class in classes.iter().filter(|c| c.core_free) {
        let index = &order / BigUint::from(class.order);
        let degree = usize::try_from(&index).map_err(|_| Error::InvalidArgument("index too large".into()))?;
        if degree <= 1 {
            continue;
        }
        if degree <= degree_bound {
            let action = crate::actions::coset_action("G", group, &class.group)?;
            let report = closure_spectrum(&action, None, budget)?;
            if let Some(reason) = report.incomplete {
                return Err(Error::BudgetExceeded(reason));
            }
            entries.push(KTransEntry {
                subgroup_order: class.order,
                degree,
                exact: report.minimal_k,
                bound: None,
            });
        } else {
            let action = crate::actions::coset_action("G", group, &class.group)?;
            let b = greedy_for_group(&action.group).size;
            entries.push(KTransEntry {
                subgroup_order: class.order,
                degree,
                exact: None,
                bound: Some(b + 1),
            });
        }
    }
    let k = entries.iter().filter_map(|e| e.exact).max().unwrap_or(1);
    let certified = entries.iter().filter_map(|e| e.bound).all(|b| b <= k);
    Ok(KTrans { k, certified, entries })
}

/// Result of testing an ordered pair of orbits.
#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub from: usize,
    pub to: usize,
    /// 0-based point of orbit `from` whose stabilizer was tested.
    pub point: usize,
    /// The stabilizer is transitive on orbit `to`, so the hypothesis fails.
    pub transitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IntransitiveVerdict {
    Certified,
    HypothesisFails { from: usize, to: usize },
    PerOrbitClosureFails { orbit: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct IntransitiveReport {
    pub verdict: IntransitiveVerdict,
    pub orbit_sizes: Vec<usize>,
    pub pairs: Vec<PairCheck>,
    pub pairwise_equivalent: bool,
    /// `|G^{(k)}|` on each orbit (only the first when the orbit actions are
    /// pairwise equivalent).
    pub orbit_closure_orders: Vec<String>,
    /// `|G^{(k)}|` on the whole domain, computed directly when the verdict
    /// is not `Certified`.
    pub direct_order: Option<String>,
}

/// Decides `G^{(k)} = G` for an intransitive action of a non-abelian simple
/// group from its orbits, without the global search when possible.
pub fn intransitive_certificate(action: &ActionInstance, k: usize, budget: &Budget) -> Result<IntransitiveReport> {
    let group = &action.group;
    if !is_nonabelian_simple(group, 100_000)? {
        return Err(Error::Hypothesis("the group is not non-abelian simple".into()));
    }
    let orbits = action.orbits();
    if orbits.len() < 2 {
        return Err(Error::Hypothesis("the action is transitive".into()));
    }
    let order = group.order();
    let parts = orbits
        .iter()
        .map(|o| restriction(action, o))
        .collect::<Result<Vec<_>>>()?;
    if parts.iter().any(|p| p.group.order() != order) {
        return Err(Error::Hypothesis("some orbit action is not faithful".into()));
    }
    let mut pairs = Vec::new();
    for (i, from) in orbits.iter().enumerate() {
        let stab = group.pointwise_stabilizer(&[from[0]])?;
        for (j, to) in orbits.iter().enumerate() {
            if i == j {
                continue;
            }
            let reach = orbit_of(group.degree(), stab.generators(), to[0]);
            pairs.push(PairCheck {
                from: i,
                to: j,
                point: from[0],
                transitive: reach.len() == to.len(),
            });
        }
    }
    let mut pairwise_equivalent = true;
    for p in &parts[1..] {
        if !actions_equivalent(&parts[0], p)? {
            pairwise_equivalent = false;
        }
    }
    let mut report = IntransitiveReport {
        verdict: IntransitiveVerdict::Certified,
        orbit_sizes: orbits.iter().map(|o| o.len()).collect(),
        pairs,
        pairwise_equivalent,
        orbit_closure_orders: Vec::new(),
        direct_order: None,
    };
    let closure_order = |a: &ActionInstance| -> Result<BigUint> {
        match k_closure(a, k, budget) {
            Ok(c) => Ok(c.group.order()),
            Err(ClosureError::Failed(e)) => Err(e),
            Err(e) => Err(Error::BudgetExceeded(e.to_string())),
        }
    };
    if let Some(p) = report.pairs.iter().find(|p| p.transitive) {
        report.verdict = IntransitiveVerdict::HypothesisFails { from: p.from, to: p.to };
    } else {
        let todo = if pairwise_equivalent { &parts[..1] } else { &parts[..] };
        for (i, part) in todo.iter().enumerate() {
            let o = closure_order(part)?;
            let ok = o == order;
            report.orbit_closure_orders.push(o.to_string());
            if !ok {
                report.verdict = IntransitiveVerdict::PerOrbitClosureFails { orbit: i };
                break;
            }
        }
    }
    if report.verdict != IntransitiveVerdict::Certified {
        report.direct_order = Some(closure_order(action)?.to_string());
    }
    Ok(report)
}

/// Facts about a group that are taken from the literature rather than
/// computed.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct AttestedFacts {
    /// The outer automorphism group is trivial.
    pub out_trivial: bool,
    /// The group is a maximal subgroup of `Alt(Ω)`.
    pub maximal_in_alt: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaStatus {
    Confirmed,
    PredictedUnconfirmed,
    Refuted,
    HypothesesNotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub k: usize,
    pub transitivity: usize,
    pub attested: AttestedFacts,
    pub missing: Vec<String>,
    pub status: LemmaStatus,
    /// `|G^{(k+1)}|`, when computed.
    pub upper_order: Option<String>,
    /// `|G^{(k)}|`, when computed.
    pub lower_order: Option<String>,
    /// A permutation in `G^{(k)}` outside `G`, in 1-based cycle notation.
    pub witness: Option<String>,
}

/// Checks the hypotheses under which a `k`- but not `(k+1)`-transitive
/// group satisfies `G^{(k+1)} = G ≠ G^{(k)}`, then confirms both by search.
pub fn complete_lemma_check(
    action: &ActionInstance,
    k: usize,
    facts: AttestedFacts,
    budget: &Budget,
) -> Result<LemmaReport> {
    let group = &action.group;
    let n = group.degree();
    let transitivity = if group.is_transitive() {
        TupleCanonizer::new(group).transitivity_degree(k + 1)
    } else {
        0
    };
    let half_sym = (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i)) / 2u32;
    let mut missing = Vec::new();
    if transitivity < k {
        missing.push(format!("not {k}-transitive"));
    }
    if transitivity > k {
        missing.push(format!("{}-transitive", k + 1));
    }
    if group.order() >= half_sym {
        missing.push("contains the alternating group".into());
    }
    if !facts.out_trivial {
        missing.push("trivial outer automorphism group not attested".into());
    }
    if !facts.maximal_in_alt {
        missing.push("maximality in the alternating group not attested".into());
    }
    let mut report = LemmaReport {
        k,
        transitivity,
        attested: facts,
        missing,
        status: LemmaStatus::HypothesesNotApplicable,
        upper_order: None,
        lower_order: None,
        witness: None,
    };
    if !report.missing.is_empty() {
        return Ok(report);
    }
    let sym = half_sym * 2u32;
    let mut confirmed = true;
    let mut refuted = false;
    match k_closure(action, k + 1, budget) {
        Ok(c) => {
            let o = c.group.order();
            refuted |= o != group.order();
            report.upper_order = Some(o.to_string());
        }
        Err(e) if e.is_budget() => confirmed = false,
        Err(ClosureError::Failed(e)) => return Err(e),
        Err(e) => return Err(Error::Validation(e.to_string())),
    }
    match k_closure(action, k, budget) {
        Ok(c) => {
            let o = c.group.order();
            refuted |= o != sym;
            report.lower_order = Some(o.to_string());
            report.witness = c
                .group
                .generators()
                .iter()
                .find(|g| !group.chain().contains(g))
                .map(|g| g.to_cycle_string());
        }
        Err(e) if e.is_budget() => confirmed = false,
        Err(ClosureError::Failed(e)) => return Err(e),
        Err(e) => return Err(Error::Validation(e.to_string())),
    }
    report.status = if refuted {
        LemmaStatus::Refuted
    } else if confirmed {
        LemmaStatus::Confirmed
    } else {
        LemmaStatus::PredictedUnconfirmed
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{alternating, cyclic, dihedral, symmetric};
    use crate::oracle::closure_by_filtration;

    fn nat(g: PermGroup) -> ActionInstance {
        ActionInstance::natural("G", g)
    }

    fn order(a: &ActionInstance, k: usize) -> u64 {
        let c = k_closure(a, k, &Budget::UNLIMITED).unwrap();
        u64::try_from(c.group.order()).unwrap()
    }

    #[test]
    fn alternating_five() {
        let a = nat(alternating(5));
        assert_eq!(order(&a, 3), 120);
        assert_eq!(order(&a, 4), 60);
        let s = closure_spectrum(&a, None, &Budget::UNLIMITED).unwrap();
        let orders: Vec<String> = s.entries.iter().map(|e| e.order.to_string()).collect();
        assert_eq!(orders, ["120", "120", "120", "60"]);
        assert_eq!(s.minimal_k, Some(4));
    }

    #[test]
    fn small_examples() {
        assert_eq!(order(&nat(cyclic(3)), 2), 3);
        let g = PermGroup::from_cycles(4, &["(1 2)(3 4)"]).unwrap();
        assert_eq!(order(&nat(g), 2), 2);
        let s = closure_spectrum(&nat(cyclic(2)), None, &Budget::UNLIMITED).unwrap();
        assert_eq!(s.minimal_k, Some(1));
        let s = closure_spectrum(&nat(dihedral(4).unwrap()), None, &Budget::UNLIMITED).unwrap();
        assert_eq!(s.minimal_k, Some(2));
    }

    #[test]
    fn agrees_with_filtration() {
        let groups = [
            alternating(4),
            dihedral(5).unwrap(),
            cyclic(6),
            PermGroup::from_cycles(6, &["(1 2)(3 4)", "(5 6)"]).unwrap(),
            PermGroup::from_cycles(6, &["(1 2 3)(4 5 6)", "(1 4)(2 5)(3 6)"]).unwrap(),
            PermGroup::from_cycles(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]).unwrap(),
            symmetric(3),
        ];
        for g in groups {
            let a = nat(g.clone());
            for k in 1..=4 {
                let expected = closure_by_filtration(g.degree(), g.generators(), k).unwrap().len() as u64;
                assert_eq!(order(&a, k), expected, "{a:?} k={k}");
            }
        }
    }

    #[test]
    fn budget_error_carries_partial_group() {
        let g = PermGroup::from_cycles(6, &["(1 2)(3 4)", "(5 6)"]).unwrap();
        match k_closure(&nat(g.clone()), 2, &Budget::nodes(2)) {
            Err(ClosureError::Budget { partial, .. }) => {
                assert!(partial.contains_group(&g).unwrap());
            }
            other => panic!("expected a budget error, got {other:?}"),
        }
    }

    #[test]
    fn k_trans_of_small_groups() {
        let kt = k_trans(&alternating(5), 12, &Budget::UNLIMITED).unwrap();
        assert_eq!(kt.k, 4);
        assert!(kt.certified);
        let kt = k_trans(&symmetric(3), 6, &Budget::UNLIMITED).unwrap();
        assert!(kt.certified);
        let degrees: Vec<usize> = kt.entries.iter().map(|e| e.degree).collect();
        assert_eq!(degrees, vec![6, 3]);
    }
}

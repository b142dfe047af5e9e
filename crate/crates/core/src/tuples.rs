//! Canonical representatives for orbits of a group on injective tuples.
//!
//! The canonizer walks a trie of stabilizers: the node for a representative
//! tuple `r` holds the orbits of `G_r` on points together with, for each
//! point, an element of `G_r` moving it to the least point of its orbit.
//! Extending a tuple by one point is then a table lookup plus one product.
//! Two injective tuples lie in the same `G`-orbit iff their step-by-step
//! representatives agree.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::perm::Permutation;
use crate::stabchain::{orbits_of, PermGroup, StabilizerChain};

/// Node id shared by every tuple whose stabilizer is trivial.
pub const TRIVIAL: u32 = 0;

struct Node {
    gens: Vec<Permutation>,
    order: BigUint,
    orbit_min: Vec<usize>,
    /// `to_min[p]` maps `p` to `orbit_min[p]`; `None` when `p` is already minimal.
    to_min: Vec<Option<Permutation>>,
    children: HashMap<usize, u32>,
}

/// Position of a partially canonized tuple: the trie node of its
/// representative and an element `u ∈ G` mapping the tuple onto it.
#[derive(Clone, Debug)]
pub struct TupleState {
    pub node: u32,
    pub u: Permutation,
}

impl TupleState {
    #[inline]
    pub fn is_trivial(&self) -> bool {
        self.node == TRIVIAL
    }
}

pub struct TupleCanonizer {
    degree: usize,
    nodes: Vec<Option<Node>>,
}

impl TupleCanonizer {
    pub fn new(group: &PermGroup) -> Self {
        let degree = group.degree();
        let mut c = TupleCanonizer {
            degree,
            nodes: vec![None],
        };
        let gens = group.chain().strong_generators();
        if !gens.is_empty() {
            let node = c.make_node(gens, group.order());
            c.nodes.push(Some(node));
        }
        c
    }

    fn make_node(&self, gens: Vec<Permutation>, order: BigUint) -> Node {
        let n = self.degree;
        let mut orbit_min: Vec<usize> = (0..n).collect();
        let mut to_min: Vec<Option<Permutation>> = vec![None; n];
        for orbit in orbits_of(n, &gens) {
            let min = orbit[0];
            // Schreier tree from `min`; store inverses of the tree words.
            let mut word: Vec<Option<Permutation>> = vec![None; n];
            word[min] = Some(Permutation::identity(n));
            let mut queue = vec![min];
            let mut head = 0;
            while head < queue.len() {
                let p = queue[head];
                head += 1;
                for g in &gens {
                    let q = g.apply(p);
                    if word[q].is_none() {
                        word[q] = Some(word[p].as_ref().unwrap().compose_unchecked(g));
                        queue.push(q);
                    }
                }
            }
            for &p in &orbit {
                orbit_min[p] = min;
                if p != min {
                    to_min[p] = Some(word[p].as_ref().unwrap().inverse());
                }
            }
        }
        Node {
            gens,
            order,
            orbit_min,
            to_min,
            children: HashMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// State of the empty tuple.
    pub fn root(&self) -> TupleState {
        TupleState {
            node: if self.nodes.len() > 1 { 1 } else { TRIVIAL },
            u: Permutation::identity(self.degree),
        }
    }

    /// Least point of the orbit of `p` under the stabilizer at `node`.
    #[inline]
    pub fn orbit_min(&self, node: u32, p: usize) -> usize {
        if node == TRIVIAL {
            p
        } else {
            self.nodes[node as usize].as_ref().unwrap().orbit_min[p]
        }
    }

    /// Representative point obtained when `state` is extended by `x`.
    #[inline]
    pub fn peek(&self, state: &TupleState, x: usize) -> usize {
        self.orbit_min(state.node, state.u.apply(x))
    }

    /// Extends the tuple by `x`; returns the representative point and the
    /// new state.
    pub fn step(&mut self, state: &TupleState, x: usize) -> (usize, TupleState) {
        let p = state.u.apply(x);
        if state.node == TRIVIAL {
            return (
                p,
                TupleState {
                    node: TRIVIAL,
                    u: state.u.clone(),
                },
            );
        }
        let idx = state.node as usize;
        let node = self.nodes[idx].as_ref().unwrap();
        let m = node.orbit_min[p];
        let u = match &node.to_min[p] {
            Some(t) => state.u.compose_unchecked(t),
            None => state.u.clone(),
        };
        let child = self.child(idx, m);
        (m, TupleState { node: child, u })
    }

    fn child(&mut self, idx: usize, m: usize) -> u32 {
        if let Some(&c) = self.nodes[idx].as_ref().unwrap().children.get(&m) {
            return c;
        }
        let (gens, order) = {
            let node = self.nodes[idx].as_ref().unwrap();
            (node.gens.clone(), node.order.clone())
        };
        let chain = StabilizerChain::build(self.degree, &gens, &[m], Some(&order))
            .expect("degree already validated");
        let stab = chain.stabilizer_generators(1).to_vec();
        let id = if stab.is_empty() {
            TRIVIAL
        } else {
            let node = self.make_node(stab, chain.suffix(1).order());
            self.nodes.push(Some(node));
            (self.nodes.len() - 1) as u32
        };
        self.nodes[idx].as_mut().unwrap().children.insert(m, id);
        id
    }

    /// Canonical representative of an injective tuple.
    pub fn canonical(&mut self, tuple: &[usize]) -> Vec<usize> {
        let mut state = self.root();
        let mut rep = Vec::with_capacity(tuple.len());
        for &x in tuple {
            let (m, next) = self.step(&state, x);
            rep.push(m);
            state = next;
        }
        rep
    }

    /// Whether two injective tuples lie in the same orbit.
    pub fn same_orbit(&mut self, a: &[usize], b: &[usize]) -> bool {
        a.len() == b.len() && self.canonical(a) == self.canonical(b)
    }

    /// Largest `m ≤ limit` such that the group is transitive on injective
    /// `m`-tuples.
    pub fn transitivity_degree(&mut self, limit: usize) -> usize {
        let n = self.degree;
        let mut state = self.root();
        let mut rep: Vec<usize> = Vec::new();
        for m in 1..=limit.min(n) {
            let mut mins = (0..n)
                .filter(|p| !rep.contains(p))
                .map(|p| self.orbit_min(state.node, p));
            let first = mins.next();
            let single = match first {
                None => false,
                Some(f) => mins.all(|x| x == f),
            };
            if !single {
                return m - 1;
            }
            let x = first.unwrap();
            let (_, next) = self.step(&state, x);
            rep.push(x);
            state = next;
        }
        limit.min(n)
    }

    /// Number of orbits on injective `m`-tuples.
    pub fn orbit_count(&mut self, m: usize) -> u128 {
        let root = self.root();
        self.count_from(&root, &mut Vec::new(), m)
    }

    fn count_from(&mut self, state: &TupleState, rep: &mut Vec<usize>, remaining: usize) -> u128 {
        if remaining == 0 {
            return 1;
        }
        let free = self.degree - rep.len();
        if free < remaining {
            return 0;
        }
        if state.node == TRIVIAL {
            return (0..remaining).map(|i| (free - i) as u128).product();
        }
        let mut reps: Vec<usize> = (0..self.degree)
            .filter(|p| !rep.contains(p))
            .map(|p| self.orbit_min(state.node, p))
            .collect();
        reps.sort_unstable();
        reps.dedup();
        let mut total = 0;
        for x in reps {
            let (_, next) = self.step(state, x);
            rep.push(x);
            total += self.count_from(&next, rep, remaining - 1);
            rep.pop();
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a5() -> PermGroup {
        PermGroup::from_cycles(5, &["(1 2 3)", "(1 2 3 4 5)"]).unwrap()
    }

    #[test]
    fn a5_is_three_transitive_only() {
        let mut c = TupleCanonizer::new(&a5());
        assert_eq!(c.transitivity_degree(5), 3);
        assert_eq!(c.orbit_count(3), 1);
        assert_eq!(c.orbit_count(4), 2);
        assert_eq!(c.orbit_count(5), 2);
    }

    #[test]
    fn same_orbit_matches_transporter() {
        let g = PermGroup::from_cycles(6, &["(1 2 3)(4 5 6)", "(1 4)"]).unwrap();
        let mut c = TupleCanonizer::new(&g);
        let tuples = [[0usize, 1], [1, 0], [0, 3], [3, 0], [2, 5], [4, 1]];
        for a in &tuples {
            for b in &tuples {
                let t = g.tuple_transporter(a, b).unwrap();
                assert_eq!(c.same_orbit(a, b), t.is_some(), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn trivial_group_keeps_tuples() {
        let mut c = TupleCanonizer::new(&PermGroup::trivial(4));
        assert_eq!(c.canonical(&[3, 1]), vec![3, 1]);
        assert_eq!(c.orbit_count(2), 12);
        assert_eq!(c.transitivity_degree(3), 0);
    }
}

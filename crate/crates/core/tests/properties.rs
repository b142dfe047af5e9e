use closurelab_core::basesize::{exact_base_size, greedy_base, information_bound};
use closurelab_core::blocks::{all_block_systems, maximal_block_systems, minimal_block_system};
use closurelab_core::closure::k_closure;
use closurelab_core::oracle::{closure_by_filtration, enumerate_group};
use closurelab_core::{ActionInstance, Budget, PermGroup, Permutation, TupleCanonizer};
use num_traits::One;
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perm_triple() -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1usize..12).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

/// A group on 2..=max points generated by one to three random permutations.
fn group(max: usize) -> impl Strategy<Value = PermGroup> {
    (2usize..=max).prop_flat_map(|n| {
        prop::collection::vec(perm(n), 1..=3).prop_map(move |gens| PermGroup::new(n, gens).unwrap())
    })
}

fn injective_pair(n: usize, len: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    let pick = move || {
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(move |v| v[..len].to_vec())
    };
    (pick(), pick())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative((p, q, r) in perm_triple()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn inverse_reverses_products((p, q, _r) in perm_triple()) {
        prop_assert_eq!((&p * &q).inverse(), &q.inverse() * &p.inverse());
        prop_assert!((&p * &p.inverse()).is_identity());
    }

    #[test]
    fn cycle_notation_round_trips((p, _q, _r) in perm_triple()) {
        let text = p.to_cycle_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, p.degree()).unwrap(), p);
    }

    #[test]
    fn chain_order_matches_enumeration(g in group(7)) {
        let elements = enumerate_group(g.degree(), g.generators(), 10_000).unwrap();
        prop_assert_eq!(g.order(), elements.len().into());
        for x in elements.iter().step_by(7) {
            prop_assert!(g.contains(x).unwrap());
        }
    }

    #[test]
    fn base_of_chain_has_trivial_stabilizer(g in group(9)) {
        let base = g.chain().base();
        prop_assert!(g.pointwise_stabilizer(&base).unwrap().order().is_one());
    }

    #[test]
    fn transporter_is_sound_and_symmetric(
        (g, (s, t)) in group(8).prop_flat_map(|g| {
            let n = g.degree();
            (Just(g), (1..=n.min(3)).prop_flat_map(move |len| injective_pair(n, len)))
        })
    ) {
        let forward = g.tuple_transporter(&s, &t).unwrap();
        let backward = g.tuple_transporter(&t, &s).unwrap();
        prop_assert_eq!(forward.is_some(), backward.is_some());
        if let Some(x) = forward {
            prop_assert!(g.contains(&x).unwrap());
            let img: Vec<usize> = s.iter().map(|&p| x.apply(p)).collect();
            prop_assert_eq!(&img, &t);
        }
        let mut c = TupleCanonizer::new(&g);
        prop_assert_eq!(c.same_orbit(&s, &t), g.tuple_transporter(&s, &t).unwrap().is_some());
    }

    #[test]
    fn closures_are_monotone_and_match_filtration(g in group(6)) {
        let a = ActionInstance::natural("G", g.clone());
        let mut previous: Option<PermGroup> = None;
        for k in 1..=4 {
            let c = k_closure(&a, k, &Budget::UNLIMITED).unwrap().group;
            prop_assert!(c.contains_group(&g).unwrap());
            if let Some(p) = &previous {
                prop_assert!(p.contains_group(&c).unwrap());
            }
            let expected = closure_by_filtration(g.degree(), g.generators(), k).unwrap().len();
            prop_assert_eq!(c.order(), expected.into());
            previous = Some(c);
        }
    }

    #[test]
    fn base_records_are_consistent(g in group(8)) {
        let a = ActionInstance::natural("G", g.clone());
        let exact = exact_base_size(&a, &Budget::UNLIMITED, 1).unwrap();
        prop_assert!(exact.exhaustive);
        prop_assert!(g.pointwise_stabilizer(&exact.witness).unwrap().order().is_one());
        prop_assert!(exact.size >= information_bound(&g));
        let greedy = greedy_base(&a).unwrap();
        prop_assert!(greedy.size >= exact.size);
        prop_assert!(g.pointwise_stabilizer(&greedy.witness).unwrap().order().is_one());
        // b + 1 points always suffice.
        let c = k_closure(&a, exact.size + 1, &Budget::UNLIMITED).unwrap();
        prop_assert_eq!(c.group.order(), g.order());
    }

    #[test]
    fn block_systems_are_invariant(g in group(8)) {
        let a = ActionInstance::natural("G", g.clone());
        prop_assume!(a.is_transitive());
        let systems = all_block_systems(&a).unwrap();
        for s in &systems {
            prop_assert!(s.is_invariant(g.generators()));
        }
        for b in 1..g.degree() {
            let s = minimal_block_system(&a, (0, b)).unwrap();
            prop_assert!(s.is_invariant(g.generators()));
            prop_assert_eq!(s.block_of(0), s.block_of(b));
        }
        let maximal = maximal_block_systems(&a).unwrap();
        let primitive = closurelab_core::blocks::is_primitive(&a);
        prop_assert_eq!(primitive, maximal.iter().any(|s| s.is_singletons()));
    }
}

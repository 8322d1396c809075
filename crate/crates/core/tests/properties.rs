use kloop_core::constructions::{cyclic_kloop, direct_product, heisenberg27, kloop_from_group};
use kloop_core::enumerate::enumerate_kloops;
use kloop_core::interp::kloop_to_symetron;
use kloop_core::loops::make_loop;
use kloop_core::perm::closure;
use kloop_core::subquotient::{find_isomorphism, is_subloop, subloop_closure, LoopMorphism};
use kloop_core::symetron::{convex_closure, is_convex};
use kloop_core::{LoopStructure, Permutation, SubsetMask};
use proptest::prelude::*;

fn samples() -> Vec<LoopStructure> {
    let z3 = cyclic_kloop(3).unwrap();
    vec![
        cyclic_kloop(7).unwrap(),
        // A nonassociative order-8 K-loop; not uniquely 2-divisible.
        enumerate_kloops(8, 100)
            .unwrap()
            .iter()
            .map(|t| make_loop(t).unwrap())
            .find(|l| !l.is_associative())
            .unwrap(),
        direct_product(&z3, &z3),
        kloop_from_group(&heisenberg27()).unwrap(),
    ]
}

fn sample_and_perm() -> impl Strategy<Value = (LoopStructure, Vec<usize>)> {
    prop::sample::select(samples()).prop_flat_map(|l| {
        let n = l.order();
        (Just(l), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn subset(n: usize) -> impl Strategy<Value = SubsetMask> {
    prop::collection::vec(any::<bool>(), n)
        .prop_map(move |bits| SubsetMask::from_elements(n, (0..n).filter(|&i| bits[i])))
}

fn sample_and_subset() -> impl Strategy<Value = (LoopStructure, SubsetMask)> {
    prop::sample::select(samples()).prop_flat_map(|l| {
        let n = l.order();
        (Just(l), subset(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_structure((l, p) in sample_and_perm()) {
        let relabeled = make_loop(&l.table().relabel(&p).unwrap()).unwrap();
        prop_assert_eq!(relabeled.flags(), l.flags());
        prop_assert_eq!(relabeled.is_associative(), l.is_associative());
        let map = find_isomorphism(&l, &relabeled);
        prop_assert!(map.is_some());
        let m = LoopMorphism { source: &l, target: &relabeled, map: map.unwrap() };
        prop_assert!(m.is_homomorphism());
    }

    #[test]
    fn subloop_closure_is_a_closure((l, x) in sample_and_subset()) {
        let c = subloop_closure(&l, &x);
        prop_assert!(x.is_subset(&c));
        prop_assert!(is_subloop(&l, &c));
        prop_assert_eq!(subloop_closure(&l, &c), c);
        prop_assert_eq!(is_subloop(&l, &x), c == x);
    }

    #[test]
    fn convex_closure_is_a_closure((l, x) in sample_and_subset()) {
        prop_assume!(l.is_uniquely_2_divisible());
        let s = kloop_to_symetron(&l).unwrap();
        let (c, _) = convex_closure(&s, &x);
        prop_assert!(x.is_subset(&c));
        prop_assert!(is_convex(&s, &c));
        prop_assert_eq!(convex_closure(&s, &c).0, c);
        prop_assert_eq!(is_convex(&s, &x), c == x);
    }

    #[test]
    fn permutation_laws(a in perm(9), b in perm(9), c in perm(9)) {
        let id = Permutation::identity(9);
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&a.inverse()), id.clone());
        prop_assert_eq!(a.inverse().compose(&a), id);
        prop_assert_eq!(a.compose(&b).apply(3), a.apply(b.apply(3)));
    }

    #[test]
    fn generated_groups_are_closed(a in perm(5), b in perm(5)) {
        let g = closure(&[a.clone(), b.clone()], 5, 200).unwrap();
        prop_assert_eq!(120 % g.size(), 0);
        prop_assert!(g.contains(&a) && g.contains(&b));
        for x in g.elements() {
            prop_assert!(g.contains(&x.inverse()));
            for y in g.elements() {
                prop_assert!(g.contains(&x.compose(y)));
            }
        }
    }

    #[test]
    fn subset_algebra(a in subset(70), b in subset(70)) {
        prop_assert_eq!(a.union(&b).complement(), a.complement().intersection(&b.complement()));
        prop_assert_eq!(a.difference(&b), a.intersection(&b.complement()));
        prop_assert_eq!(a.union(&b).len() + a.intersection(&b).len(), a.len() + b.len());
        prop_assert!(a.intersection(&b).is_subset(&a));
        prop_assert_eq!(a.is_disjoint(&b), a.intersection(&b).is_empty());
        prop_assert_eq!(SubsetMask::from_elements(70, a.iter()), a);
    }
}

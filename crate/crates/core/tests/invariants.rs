use proptest::prelude::*;
use weaklat_core::props::{decide, uvw_profile};
use weaklat_core::verify::{canonical_key, canonicalize, enumerate_semilattices, isomorphic};
use weaklat_core::weak::topology_comparison;
use weaklat_core::{ChainHom, ElementSet, FiniteTopology, Property, TopologizedSemigroup};

fn instance() -> impl Strategy<Value = TopologizedSemigroup> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let count = enumerate_semilattices(n).unwrap().len();
            (
                Just(n),
                0..count,
                prop::collection::vec(0u64..(1 << n), 0..4),
            )
        })
        .prop_map(|(n, i, subbase)| {
            let s = enumerate_semilattices(n).unwrap().swap_remove(i);
            let sets: Vec<ElementSet> = subbase.into_iter().map(ElementSet::from_bits).collect();
            TopologizedSemigroup::new(s, FiniteTopology::generate(n, &sets).unwrap()).unwrap()
        })
}

fn permuted() -> impl Strategy<Value = (TopologizedSemigroup, Vec<usize>)> {
    instance().prop_flat_map(|x| {
        let n = x.n();
        (Just(x), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_invariant((x, perm) in permuted()) {
        let y = x.permute(&perm);
        prop_assert_eq!(canonical_key(&x).unwrap(), canonical_key(&y).unwrap());
        prop_assert!(isomorphic(&x, &y).unwrap());
        let (c, _) = canonicalize(&y).unwrap();
        prop_assert_eq!(canonicalize(&c).unwrap().0, c);
    }

    #[test]
    fn vectors_survive_relabeling((x, perm) in permuted()) {
        prop_assert_eq!(decide(&x).unwrap(), decide(&x.permute(&perm)).unwrap());
    }

    #[test]
    fn closure_and_interior_are_dual(x in instance(), bits in 0u64..16) {
        let t = x.topology();
        let n = t.n();
        let s = ElementSet::from_bits(bits) & t.carrier();
        let cl = t.closure(s);
        prop_assert!(s.is_subset(cl));
        prop_assert_eq!(t.closure(cl), cl);
        prop_assert!(t.is_closed(cl));
        prop_assert_eq!(t.interior(s), t.closure(s.complement(n)).complement(n));
    }

    #[test]
    fn derived_topologies_nest(x in instance()) {
        let c = topology_comparison(&x).unwrap();
        let b = &c.bundle;
        prop_assert!(b.weak.is_coarser_than(&b.law));
        prop_assert!(b.law.is_coarser_than(&b.tau));
        prop_assert!(b.weak.is_coarser_than(&b.zar));
        prop_assert!(b.zar.is_coarser_than(&b.tau));
        if c.i_weak {
            prop_assert!(c.weak_circ && c.weak_bullet);
        }
    }

    #[test]
    fn continuity_classes_nest(x in instance()) {
        let v = decide(&x).unwrap();
        prop_assert!(!v.holds(Property::Topological) || v.holds(Property::Semitopological));
        prop_assert!(!v.holds(Property::Semitopological) || v.holds(Property::Subtopological));
    }

    #[test]
    fn weak_is_generated_by_hom_fibers(x in instance()) {
        let subbase: Vec<ElementSet> = x
            .enumerate_chain_homs(x.n())
            .unwrap()
            .iter()
            .map(ChainHom::normalized)
            .flat_map(|h| h.fibers())
            .collect();
        let from_homs = FiniteTopology::generate(x.n(), &subbase).unwrap();
        prop_assert_eq!(&topology_comparison(&x).unwrap().bundle.weak, &from_homs);
    }

    #[test]
    fn u_and_w_agree_when_semitopological(x in instance()) {
        if x.is_semitopological() {
            let u = uvw_profile(&x).unwrap();
            prop_assert_eq!(u.is_u, u.is_w);
        }
    }
}

//! Property tests for the group layer.

use double_groupoids::group::{
    cyclic, dicyclic, dihedral, quotient, subgroups_all, FiniteGroup, Subgroup,
};
use proptest::prelude::*;

fn arb_small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=12).prop_map(|n| cyclic(n).unwrap()),
        (1usize..=6).prop_map(|n| dihedral(n).unwrap()),
        (1usize..=3).prop_map(|n| dicyclic(n).unwrap()),
    ]
}

proptest! {
    #[test]
    fn inverse_laws_hold(g in arb_small_group(), x in 0usize..100) {
        let x = x % g.order();
        prop_assert_eq!(g.mul(x, g.inv(x)), 0);
        prop_assert_eq!(g.mul(g.inv(x), x), 0);
    }

    #[test]
    fn associativity_spot_checks(
        g in arb_small_group(),
        x in 0usize..100, y in 0usize..100, z in 0usize..100,
    ) {
        let (x, y, z) = (x % g.order(), y % g.order(), z % g.order());
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
    }

    #[test]
    fn element_order_divides_group_order(g in arb_small_group(), x in 0usize..100) {
        let x = x % g.order();
        prop_assert_eq!(g.order() % g.element_order(x), 0);
    }

    #[test]
    fn closure_satisfies_lagrange(
        g in arb_small_group(),
        gens in prop::collection::vec(0usize..100, 0..3),
    ) {
        let gens: Vec<usize> = gens.into_iter().map(|x| x % g.order()).collect();
        let h = Subgroup::closure(&g, &gens).unwrap();
        prop_assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn quotient_orders_multiply(n in 1usize..=6) {
        let g = dihedral(n).unwrap();
        for s in subgroups_all(&g).unwrap() {
            if s.is_normal(&g) {
                let (q, proj) = quotient(&g, &s).unwrap();
                prop_assert_eq!(q.order() * s.order(), g.order());
                prop_assert!(proj.is_surjective());
                let kernel = proj.kernel();
                prop_assert_eq!(kernel.members(), s.members());
            }
        }
    }

    #[test]
    fn conjugation_is_an_automorphism(g in arb_small_group(), c in 0usize..100) {
        let c = c % g.order();
        for x in 0..g.order() {
            for y in 0..g.order() {
                prop_assert_eq!(
                    g.conj(c, g.mul(x, y)),
                    g.mul(g.conj(c, x), g.conj(c, y))
                );
            }
        }
    }
}

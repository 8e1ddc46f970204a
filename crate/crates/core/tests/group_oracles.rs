//! Cross-checks of the subgroup/quotient/iso machinery against an
//! independent brute-force subset oracle and against frozen textbook counts.

use double_groupoids::group::{
    alternating, cyclic, dicyclic, dihedral, duval_classify, goursat_subgroups, is_isomorphic,
    quotient, sl2, subgroups_all, symmetric, z3_semidirect_klein, FiniteGroup, Subgroup,
};

/// Brute force: scan every subset containing the identity and keep the ones
/// closed under multiplication and inverse. Only sane for |G| <= 12.
fn subgroups_by_subset_scan(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 12, "subset oracle is exponential");
    let mut out = Vec::new();
    // identity is element 0; enumerate subsets of 1..n and add 0 to each
    for mask in 0..(1u32 << (n - 1)) {
        let mut members = vec![0usize];
        for b in 0..n - 1 {
            if mask & (1 << b) != 0 {
                members.push(b + 1);
            }
        }
        let inside = |x: usize| members.binary_search(&x).is_ok();
        let closed = members.iter().all(|&x| {
            inside(g.inv(x)) && members.iter().all(|&y| inside(g.mul(x, y)))
        });
        if closed {
            out.push(members);
        }
    }
    out.sort_by_key(|m| (m.len(), m.clone()));
    out
}

#[test]
fn subgroup_enumeration_matches_subset_scan() {
    let groups: Vec<FiniteGroup> = vec![
        cyclic(6).unwrap(),
        cyclic(12).unwrap(),
        dihedral(4).unwrap(),
        dihedral(6).unwrap(),
        dicyclic(2).unwrap(),
        dicyclic(3).unwrap(),
        symmetric(3).unwrap(),
        alternating(4).unwrap(),
        z3_semidirect_klein(),
        cyclic(2).unwrap().direct_product(&cyclic(4).unwrap()),
    ];
    for g in &groups {
        let fast: Vec<Vec<usize>> = subgroups_all(g)
            .unwrap()
            .iter()
            .map(|s| s.members().to_vec())
            .collect();
        let slow = subgroups_by_subset_scan(g);
        assert_eq!(fast, slow, "subgroup lists differ for a group of order {}", g.order());
    }
}

#[test]
fn frozen_subgroup_counts() {
    let klein = cyclic(2).unwrap().direct_product(&cyclic(2).unwrap());
    assert_eq!(subgroups_all(&klein).unwrap().len(), 5);
    assert_eq!(subgroups_all(&dihedral(4).unwrap()).unwrap().len(), 10);
    assert_eq!(subgroups_all(&dicyclic(2).unwrap()).unwrap().len(), 6);
    assert_eq!(subgroups_all(&alternating(4).unwrap()).unwrap().len(), 10);
    assert_eq!(subgroups_all(&symmetric(4).unwrap()).unwrap().len(), 30);
    let z2_cubed = cyclic(2)
        .unwrap()
        .direct_product(&cyclic(2).unwrap())
        .direct_product(&cyclic(2).unwrap());
    assert_eq!(subgroups_all(&z2_cubed).unwrap().len(), 16);
}

#[test]
fn sl2_orders_follow_the_formula() {
    for p in [2usize, 3, 5, 7] {
        assert_eq!(sl2(p).unwrap().order(), p * (p * p - 1));
    }
}

#[test]
fn sl2_3_center_and_quotient() {
    let g = sl2(3).unwrap();
    assert_eq!(g.order(), 24);
    let center = g.center();
    assert_eq!(center.len(), 2);
    let z = Subgroup::new(&g, &center).unwrap();
    assert!(z.is_normal(&g));
    let (q, proj) = quotient(&g, &z).unwrap();
    assert_eq!(q.order(), 12);
    assert!(proj.is_surjective());
    assert!(is_isomorphic(&q, &alternating(4).unwrap()).unwrap().is_some());
}

#[test]
fn binary_tetrahedral_is_not_s4() {
    // both have order 24, distinguished by the element-order profile
    let bt = sl2(3).unwrap();
    let s4 = symmetric(4).unwrap();
    assert!(is_isomorphic(&bt, &s4).unwrap().is_none());
    // sl2(3) has a unique involution, S4 has nine
    let count_inv = |g: &FiniteGroup| (1..g.order()).filter(|&x| g.mul(x, x) == 0).count();
    assert_eq!(count_inv(&bt), 1);
    assert_eq!(count_inv(&s4), 9);
}

#[test]
fn quaternion_group_profile() {
    let q8 = dicyclic(2).unwrap();
    assert_eq!(q8.order_profile(), vec![(1, 1), (2, 1), (4, 6)]);
}

#[test]
fn symmetric_and_alternating_orders() {
    assert_eq!(symmetric(5).unwrap().order(), 120);
    assert_eq!(alternating(5).unwrap().order(), 60);
    assert_eq!(alternating(2).unwrap().order(), 1);
}

#[test]
fn a5_has_no_proper_normal_subgroups() {
    let a5 = alternating(5).unwrap();
    let normal: Vec<usize> = subgroups_all(&a5)
        .unwrap()
        .into_iter()
        .filter(|s| s.is_normal(&a5))
        .map(|s| s.order())
        .collect();
    assert_eq!(normal, vec![1, 60]);
}

#[test]
fn element_order_multisets_separate_z4_from_klein() {
    let z4 = cyclic(4).unwrap();
    let klein = cyclic(2).unwrap().direct_product(&cyclic(2).unwrap());
    assert_eq!(z4.order_profile(), vec![(1, 1), (2, 1), (4, 2)]);
    assert_eq!(klein.order_profile(), vec![(1, 1), (2, 3)]);
}

#[test]
fn quotient_projection_has_expected_kernel() {
    let g = z3_semidirect_klein();
    let z3 = Subgroup::new(&g, &[0, 1, 2]).unwrap();
    let (q, proj) = quotient(&g, &z3).unwrap();
    assert_eq!(q.order(), 4);
    assert!(q.is_abelian());
    assert_eq!(proj.kernel().members(), &[0, 1, 2]);
    // the quotient is the Klein group, not Z4
    assert!(q.order_profile() == vec![(1, 1), (2, 3)]);
}

#[test]
fn goursat_agrees_with_direct_enumeration_on_small_products() {
    let pairs: Vec<(FiniteGroup, FiniteGroup)> = vec![
        (cyclic(2).unwrap(), cyclic(2).unwrap()),
        (cyclic(4).unwrap(), cyclic(2).unwrap()),
        (symmetric(3).unwrap(), cyclic(2).unwrap()),
        (cyclic(3).unwrap(), cyclic(3).unwrap()),
    ];
    for (h, k) in &pairs {
        let via_goursat = goursat_subgroups(h, k).unwrap();
        let direct = subgroups_all(&h.direct_product(k)).unwrap();
        assert_eq!(via_goursat.len(), direct.len());
        let lists: Vec<Vec<usize>> =
            via_goursat.iter().map(|q| q.member_indices(k.order())).collect();
        for s in &direct {
            assert!(lists.contains(&s.members().to_vec()));
        }
    }
}

#[test]
fn duval_round_trip_on_every_subgroup_of_s3_x_z2() {
    let h = symmetric(3).unwrap();
    let k = cyclic(2).unwrap();
    let product = h.direct_product(&k);
    for s in subgroups_all(&product).unwrap() {
        let q = duval_classify(&h, &k, s.members()).unwrap();
        assert_eq!(q.member_indices(k.order()), s.members().to_vec());
        assert_eq!(q.subgroup_order(), s.order());
        // |A/A0| = |B/B0| always
        assert_eq!(
            q.a.order() * q.b0.order(),
            q.b.order() * q.a0.order()
        );
    }
}

//! The slim commuting-square double group of a matched triple, and the way
//! back: squares compose as a group again, recovering the factorization.

use super::{group_on_squares, MatchedTriple};
use crate::double::{
    is_vacant, slim_comp_tables, DoubleError, DoubleFunctor, DoubleGroupoid, RawDoubleGroupoid,
};
use crate::group::{FiniteGroup, GroupHom, Subgroup};
use crate::report::{Check, Report};
use std::collections::{BTreeMap, BTreeSet};

/// Commuting squares over a matched triple: horizontal edges from H,
/// vertical edges from K, one square per (top, left, bottom, right) with
/// top·right == left·bottom in the ambient group. Always slim.
pub fn gamma(t: &MatchedTriple) -> Result<DoubleGroupoid, DoubleError> {
    let g = t.group();
    let h = t.h();
    let k = t.k();
    let mut boundaries = Vec::new();
    for (ti, &tv) in h.members().iter().enumerate() {
        for (li, &lv) in k.members().iter().enumerate() {
            for (bi, &bv) in h.members().iter().enumerate() {
                // the commutation relation pins the right edge
                let rv = g.mul(g.inv(tv), g.mul(lv, bv));
                if let Some(ri) = k.index_of(rv) {
                    boundaries.push((ti, li, bi, ri));
                }
            }
        }
    }
    let h_comp = subgroup_comp_table(g, h);
    let v_comp = subgroup_comp_table(g, k);
    let (sq_h_comp, sq_v_comp) = slim_comp_tables(&boundaries, &h_comp, &v_comp)
        .expect("commuting squares are closed under pasting");
    let he = h.index_of(0).expect("subgroup carries the identity");
    let ke = k.index_of(0).expect("subgroup carries the identity");
    let by_bd: BTreeMap<_, _> = boundaries.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let raw = RawDoubleGroupoid {
        objects: 1,
        h_src: vec![0; h.order()],
        h_tgt: vec![0; h.order()],
        v_src: vec![0; k.order()],
        v_tgt: vec![0; k.order()],
        top: boundaries.iter().map(|b| b.0).collect(),
        left: boundaries.iter().map(|b| b.1).collect(),
        bottom: boundaries.iter().map(|b| b.2).collect(),
        right: boundaries.iter().map(|b| b.3).collect(),
        h_id: vec![he],
        v_id: vec![ke],
        h_unit: (0..k.order()).map(|li| by_bd[&(he, li, he, li)]).collect(),
        v_unit: (0..h.order()).map(|ti| by_bd[&(ti, ke, ti, ke)]).collect(),
        h_comp,
        v_comp,
        sq_h_comp,
        sq_v_comp,
    };
    DoubleGroupoid::new(raw)
}

fn subgroup_comp_table(g: &FiniteGroup, s: &Subgroup) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for (x, &xv) in s.members().iter().enumerate() {
        for (y, &yv) in s.members().iter().enumerate() {
            out.insert((x, y), s.index_of(g.mul(xv, yv)).expect("subgroup is closed"));
        }
    }
    out
}

/// Exclusivity and maximality of the commuting-square double group, read
/// directly off the triple: trivial intersection, and commuting product
/// sets.
pub fn gamma_predicates(t: &MatchedTriple) -> (bool, bool) {
    (t.discrete_intersection(), t.commuting_products())
}

/// Rebuild factorization data from a vacant double group. Elements are the
/// squares; the composite of X and Y is the full 2x2 grid with X upper left,
/// Y lower right, and the (unique) boundary-matching squares in the other
/// two cells. Returns the triple whose subgroups are the two unit-square
/// images, plus the element → square table.
pub fn lambda(dg: &DoubleGroupoid) -> Result<(MatchedTriple, Vec<usize>), DoubleError> {
    if dg.objects() != 1 {
        return Err(DoubleError::Unsupported(
            "square-group extraction needs a single object".into(),
        ));
    }
    if !is_vacant(dg) {
        return Err(DoubleError::PropertyFails("input is not vacant"));
    }
    let n = dg.squares();
    let mut by_lb = BTreeMap::new();
    let mut by_tr = BTreeMap::new();
    for x in 0..n {
        by_lb.insert((dg.left(x), dg.bottom(x)), x);
        by_tr.insert((dg.top(x), dg.right(x)), x);
    }
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let u = by_lb[&(dg.right(x), dg.top(y))];
                    let w = by_tr[&(dg.bottom(x), dg.left(y))];
                    dg.sq_v_comp(dg.sq_h_comp(x, u), dg.sq_h_comp(w, y))
                })
                .collect()
        })
        .collect();
    let (group, to_square) = group_on_squares(&table, dg.double_id(0))?;
    let elem_of = &to_square; // the swap is an involution
    let hm: BTreeSet<usize> = (0..dg.h_arrows()).map(|f| elem_of[dg.v_unit(f)]).collect();
    let km: BTreeSet<usize> = (0..dg.v_arrows()).map(|u| elem_of[dg.h_unit(u)]).collect();
    let triple = MatchedTriple::new(
        group,
        &hm.into_iter().collect::<Vec<_>>(),
        &km.into_iter().collect::<Vec<_>>(),
    )?;
    Ok((triple, to_square))
}

/// On an exact factorization, round-tripping through the square double group
/// loses nothing: the counit (square ↦ top·right) is a group isomorphism
/// matching the subgroups, and the unit embeds the double group
/// isomorphically into the one rebuilt from its own square group.
pub fn check_equivalence_vacant(t: &MatchedTriple) -> Result<Report, DoubleError> {
    if !t.exact_factorization() {
        return Err(DoubleError::PropertyFails("triple is not an exact factorization"));
    }
    let dg = gamma(t)?;
    let (lt, to_square) = lambda(&dg)?;
    let mut report = Report::new("factorization equivalence");

    let g = t.group();
    let map: Vec<usize> = (0..lt.group().order())
        .map(|p| {
            let x = to_square[p];
            g.mul(t.h().members()[dg.top(x)], t.k().members()[dg.right(x)])
        })
        .collect();
    match GroupHom::new(lt.group().clone(), g.clone(), map.clone()) {
        Ok(hom) if hom.is_bijective() => report.push(Check::pass("counit-iso")),
        Ok(_) => report.push(Check::fail("counit-iso", "not bijective")),
        Err(e) => report.push(Check::fail("counit-iso", e.to_string())),
    }
    let h_image: BTreeSet<usize> =
        lt.h().members().iter().map(|&p| map[p]).collect();
    let k_image: BTreeSet<usize> =
        lt.k().members().iter().map(|&p| map[p]).collect();
    let expected_h: BTreeSet<usize> = t.h().members().iter().copied().collect();
    let expected_k: BTreeSet<usize> = t.k().members().iter().copied().collect();
    if h_image == expected_h && k_image == expected_k {
        report.push(Check::pass("counit-subgroups"));
    } else {
        report.push(Check::fail("counit-subgroups", "unit images miss the designated subgroups"));
    }

    let rebuilt = gamma(&lt)?;
    let h_map: Vec<usize> = (0..dg.h_arrows())
        .map(|f| lt.h().index_of(to_square[dg.v_unit(f)]).expect("unit image generates H"))
        .collect();
    let v_map: Vec<usize> = (0..dg.v_arrows())
        .map(|u| lt.k().index_of(to_square[dg.h_unit(u)]).expect("unit image generates K"))
        .collect();
    let by_bd: BTreeMap<_, _> =
        (0..rebuilt.squares()).map(|x| (rebuilt.boundary(x), x)).collect();
    let sq_map: Option<Vec<usize>> = (0..dg.squares())
        .map(|x| {
            by_bd
                .get(&(
                    h_map[dg.top(x)],
                    v_map[dg.left(x)],
                    h_map[dg.bottom(x)],
                    v_map[dg.right(x)],
                ))
                .copied()
        })
        .collect();
    match sq_map {
        None => report.push(Check::fail("unit-iso", "a square has no rebuilt counterpart")),
        Some(sq) => match DoubleFunctor::new(&dg, &rebuilt, vec![0], h_map, v_map, sq) {
            Err(e) => report.push(Check::fail("unit-iso", e.to_string())),
            Ok(f) if f.is_isomorphism(&rebuilt) => report.push(Check::pass("unit-iso")),
            Ok(_) => report.push(Check::fail("unit-iso", "not bijective")),
        },
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::{is_exclusive, is_maximal, is_slim, order_two_edge_example};
    use crate::group::{cyclic, is_isomorphic, symmetric, FiniteGroup};

    fn z6_triple() -> MatchedTriple {
        MatchedTriple::new(cyclic(6).unwrap(), &[0, 3], &[0, 2, 4]).unwrap()
    }

    fn s3_triple() -> MatchedTriple {
        let g = symmetric(3).unwrap();
        let rot = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let flip = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        let h = Subgroup::closure(&g, &[rot]).unwrap();
        let k = Subgroup::closure(&g, &[flip]).unwrap();
        MatchedTriple::new(g.clone(), h.members(), k.members()).unwrap()
    }

    #[test]
    fn square_counts_and_predicates() {
        for (t, squares, exclusive, maximal) in [
            (z6_triple(), 6, true, true),
            (s3_triple(), 6, true, true),
        ] {
            let dg = gamma(&t).unwrap();
            assert_eq!(dg.squares(), squares);
            assert!(is_slim(&dg));
            assert_eq!(gamma_predicates(&t), (exclusive, maximal));
            assert_eq!(is_exclusive(&dg), exclusive);
            assert_eq!(is_maximal(&dg), maximal);
            assert!(is_vacant(&dg));
        }

        // both subgroups the whole group: intersection is everything
        let g = symmetric(3).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let t = MatchedTriple::new(g.clone(), &all, &all).unwrap();
        let dg = gamma(&t).unwrap();
        assert_eq!(dg.squares(), 216);
        assert_eq!(gamma_predicates(&t), (false, true));
        assert!(!is_exclusive(&dg));
        assert!(is_maximal(&dg));

        // two transpositions: products differ, so squares are missing
        let flips: Vec<usize> = (0..6).filter(|&x| g.element_order(x) == 2).collect();
        let t = MatchedTriple::new(
            g.clone(),
            Subgroup::closure(&g, &[flips[0]]).unwrap().members(),
            Subgroup::closure(&g, &[flips[1]]).unwrap().members(),
        )
        .unwrap();
        let dg = gamma(&t).unwrap();
        assert_eq!(dg.squares(), 3);
        assert_eq!(gamma_predicates(&t), (true, false));
        assert!(is_exclusive(&dg));
        assert!(!is_maximal(&dg));
    }

    #[test]
    fn trivial_subgroups_give_one_square_per_nothing() {
        let g = symmetric(3).unwrap();
        let t = MatchedTriple::new(g, &[0], &[0]).unwrap();
        assert_eq!(gamma_predicates(&t), (true, true));
        let dg = gamma(&t).unwrap();
        assert_eq!(dg.squares(), 1);
        assert!(is_vacant(&dg));
    }

    #[test]
    fn lambda_round_trips_exact_factorizations() {
        for t in [z6_triple(), s3_triple()] {
            let dg = gamma(&t).unwrap();
            let (lt, _) = lambda(&dg).unwrap();
            assert!(is_isomorphic(lt.group(), t.group()).unwrap().is_some());
            assert!(lt.exact_factorization());
        }
    }

    #[test]
    fn filled_example_square_group_is_klein() {
        let (lt, _) = lambda(&order_two_edge_example(true)).unwrap();
        assert_eq!(lt.group().order(), 4);
        assert_eq!(lt.group().order_profile(), vec![(1, 1), (2, 3)]);
        assert_eq!(lt.h().order(), 2);
        assert_eq!(lt.k().order(), 2);
    }

    #[test]
    fn lambda_requires_vacancy() {
        assert!(matches!(
            lambda(&order_two_edge_example(false)),
            Err(DoubleError::PropertyFails(_))
        ));
    }

    #[test]
    fn equivalence_reports_pass() {
        let trivial = MatchedTriple::new(FiniteGroup::trivial(), &[0], &[0]).unwrap();
        for t in [z6_triple(), s3_triple(), trivial] {
            let report = check_equivalence_vacant(&t).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn equivalence_requires_exactness() {
        let g = symmetric(3).unwrap();
        let t = MatchedTriple::new(g, &[0], &[0]).unwrap();
        assert!(matches!(
            check_equivalence_vacant(&t),
            Err(DoubleError::PropertyFails(_))
        ));
    }
}

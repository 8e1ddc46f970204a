//! Independent brute-force derivations of the commuting-square construction
//! values. Everything here works directly on group element tables, without
//! the construction API, so these counts and Cayley tables can be frozen and
//! compared against the library's outputs.

use double_groupoids::group::{
    cyclic, is_isomorphic, symmetric, z3_semidirect_klein, FiniteGroup, Subgroup,
};
use std::collections::{BTreeMap, BTreeSet};

/// All (top, left, bottom, right) with entries from H, K, H, K and
/// top·right == left·bottom in the ambient group.
fn square_scan(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for &t in h.members() {
        for &l in k.members() {
            for &b in h.members() {
                for &r in k.members() {
                    if g.mul(t, r) == g.mul(l, b) {
                        out.push((t, l, b, r));
                    }
                }
            }
        }
    }
    out
}

fn product_set(g: &FiniteGroup, xs: &[usize], ys: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &x in xs {
        for &y in ys {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// Composition table of the square groupoid: the composite of X and Y is the
/// unique square whose 2x2 subdivision has X upper left, Y lower right, and
/// uniquely-determined squares in the two off-diagonal cells. Top and bottom
/// edges multiply in `hg`, left and right edges in `vg`. Panics if the square
/// set is not vacant enough for the off-diagonal cells to be pinned down.
fn barycentric_table(
    hg: &FiniteGroup,
    vg: &FiniteGroup,
    squares: &[(usize, usize, usize, usize)],
) -> Vec<Vec<usize>> {
    let mut by_lb = BTreeMap::new();
    let mut by_tr = BTreeMap::new();
    let mut by_bd = BTreeMap::new();
    for (i, &(t, l, b, r)) in squares.iter().enumerate() {
        assert!(by_lb.insert((l, b), i).is_none(), "left+bottom pair repeated");
        assert!(by_tr.insert((t, r), i).is_none(), "top+right pair repeated");
        by_bd.insert((t, l, b, r), i);
    }
    let n = squares.len();
    let mut table = vec![vec![0usize; n]; n];
    for (x, &(tx, lx, bx, rx)) in squares.iter().enumerate() {
        for (y, &(ty, ly, by, ry)) in squares.iter().enumerate() {
            let u = squares[by_lb[&(rx, ty)]];
            let w = squares[by_tr[&(bx, ly)]];
            let glued = (hg.mul(tx, u.0), vg.mul(lx, w.1), hg.mul(w.2, by), vg.mul(u.3, ry));
            table[x][y] = by_bd[&glued];
        }
    }
    table
}

/// Reindex a Cayley table so the stated identity lands at position 0, then
/// run it through the checked group constructor.
fn group_with_identity(table: &[Vec<usize>], e: usize) -> FiniteGroup {
    let n = table.len();
    let fwd: Vec<usize> = (0..n).map(|i| if i == e { 0 } else if i == 0 { e } else { i }).collect();
    let mut rows = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            rows[fwd[x]][fwd[y]] = fwd[table[x][y]];
        }
    }
    FiniteGroup::from_mul_table(rows, None).expect("barycentric table is a group")
}

fn z6_triple() -> (FiniteGroup, Subgroup, Subgroup) {
    let g = cyclic(6).unwrap();
    let h = Subgroup::closure(&g, &[3]).unwrap();
    let k = Subgroup::closure(&g, &[2]).unwrap();
    (g, h, k)
}

fn s3_triple() -> (FiniteGroup, Subgroup, Subgroup) {
    let g = symmetric(3).unwrap();
    let three_cycle = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
    let transposition = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
    let h = Subgroup::closure(&g, &[three_cycle]).unwrap();
    let k = Subgroup::closure(&g, &[transposition]).unwrap();
    (g, h, k)
}

#[test]
fn commuting_square_counts() {
    let (g, h, k) = z6_triple();
    assert_eq!(square_scan(&g, &h, &k).len(), 6);

    let (g, h, k) = s3_triple();
    assert_eq!(square_scan(&g, &h, &k).len(), 6);

    // both subgroups the whole group: one square per (top, left, bottom)
    let g = symmetric(3).unwrap();
    let full = Subgroup::full(&g);
    assert_eq!(square_scan(&g, &full, &full).len(), 216);

    // two distinct transpositions generate subgroups whose products differ
    let t: Vec<usize> = (0..6).filter(|&x| g.element_order(x) == 2).collect();
    let h = Subgroup::closure(&g, &[t[0]]).unwrap();
    let k = Subgroup::closure(&g, &[t[1]]).unwrap();
    assert_eq!(square_scan(&g, &h, &k).len(), 3);
}

#[test]
fn product_sets_and_intersections() {
    let g = symmetric(3).unwrap();
    let t: Vec<usize> = (0..6).filter(|&x| g.element_order(x) == 2).collect();
    let h = Subgroup::closure(&g, &[t[0]]).unwrap();
    let k = Subgroup::closure(&g, &[t[1]]).unwrap();
    let hk = product_set(&g, h.members(), k.members());
    let kh = product_set(&g, k.members(), h.members());
    assert_ne!(hk, kh);

    let (g, h, k) = s3_triple();
    let hk = product_set(&g, h.members(), k.members());
    let kh = product_set(&g, k.members(), h.members());
    assert_eq!(hk, kh);
    assert_eq!(hk.len(), 6);
    let both: Vec<usize> =
        h.members().iter().copied().filter(|&x| k.contains(x)).collect();
    assert_eq!(both, vec![0]);

    let (g, h, k) = z6_triple();
    assert_eq!(product_set(&g, h.members(), k.members()).len(), 6);
}

#[test]
fn filled_order_two_table_is_klein() {
    // the four squares over order-two edge groups, edges written additively
    let z2 = cyclic(2).unwrap();
    let squares = [(0, 0, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (1, 1, 1, 1)];
    let table = barycentric_table(&z2, &z2, &squares);
    assert_eq!(
        table,
        vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]
    );
    let g = group_with_identity(&table, 0);
    let klein = cyclic(2).unwrap().direct_product(&cyclic(2).unwrap());
    assert!(is_isomorphic(&g, &klein).unwrap().is_some());
    assert!(is_isomorphic(&g, &cyclic(4).unwrap()).unwrap().is_none());
}

#[test]
fn square_groupoid_recovers_the_ambient_group() {
    for (g, h, k) in [z6_triple(), s3_triple()] {
        let squares = square_scan(&g, &h, &k);
        let table = barycentric_table(&g, &g, &squares);
        let e = squares.iter().position(|&s| s == (0, 0, 0, 0)).unwrap();
        let rebuilt = group_with_identity(&table, e);
        assert!(is_isomorphic(&rebuilt, &g).unwrap().is_some());
    }
}

#[test]
fn fibered_semidirect_example() {
    // z3_semidirect_klein: (z, s, t) at z + 3s + 6t, s inverts the z part
    let g = z3_semidirect_klein();
    let h = Subgroup::closure(&g, &[3]).unwrap();
    let k = Subgroup::closure(&g, &[6]).unwrap();
    let a = Subgroup::closure(&g, &[1]).unwrap();

    // quadruple invariants, checked from scratch
    assert!(a.members().iter().all(|&x| a.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x))));
    for &s in h.members().iter().chain(k.members()) {
        for &x in a.members() {
            assert!(a.contains(g.conj(s, x)));
        }
    }
    for other in [&h, &k] {
        assert_eq!(
            a.members().iter().copied().filter(|&x| other.contains(x)).count(),
            1
        );
    }
    assert_eq!(
        product_set(&g, h.members(), k.members()),
        product_set(&g, k.members(), h.members())
    );
    let ahk: Vec<usize> = product_set(&g, a.members(), h.members())
        .into_iter()
        .collect();
    assert_eq!(product_set(&g, &ahk, k.members()).len(), 12);

    // the slim part has one square per source pair; fibering by A gives 12
    let base = square_scan(&g, &h, &k);
    assert_eq!(base.len(), 4);
    let fibered: Vec<(usize, usize)> = base
        .iter()
        .enumerate()
        .flat_map(|(i, _)| a.members().iter().map(move |&x| (i, x)))
        .collect();
    assert_eq!(fibered.len(), 12);

    // section-insertion composition: off-diagonal cells carry the trivial
    // fiber element, so the fiber coordinate of XY is a · lx (tw b tw⁻¹) lx⁻¹
    let mut by_lb = BTreeMap::new();
    let mut by_tr = BTreeMap::new();
    for (i, &(t, l, b, r)) in base.iter().enumerate() {
        by_lb.insert((l, b), i);
        by_tr.insert((t, r), i);
    }
    let by_bd: BTreeMap<_, _> = base.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let n = fibered.len();
    let mut table = vec![vec![0usize; n]; n];
    for (xi, &(sx, fx)) in fibered.iter().enumerate() {
        for (yi, &(sy, fy)) in fibered.iter().enumerate() {
            let (tx, lx, bx, rx) = base[sx];
            let (ty, ly, by, ry) = base[sy];
            let u = base[by_lb[&(rx, ty)]];
            let w = base[by_tr[&(bx, ly)]];
            let glued = (g.mul(tx, u.0), g.mul(lx, w.1), g.mul(w.2, by), g.mul(u.3, ry));
            let fiber = g.mul(fx, g.conj(lx, g.conj(w.0, fy)));
            table[xi][yi] = by_bd[&glued] * a.order()
                + a.index_of(fiber).expect("fiber coordinate stays in A");
        }
    }
    let e = by_bd[&(0, 0, 0, 0)] * a.order() + a.index_of(0).unwrap();
    let rebuilt = group_with_identity(&table, e);
    assert!(is_isomorphic(&rebuilt, &g).unwrap().is_some());
}

//! Small stock double groupoids used across tests and case studies.

use super::{DoubleError, DoubleGroupoid, RawDoubleGroupoid};
use crate::group::FiniteGroup;
use crate::groupoid::FiniteGroupoid;
use std::collections::BTreeMap;

/// One object, identity arrows, one square.
pub fn trivial_double() -> DoubleGroupoid {
    let raw = RawDoubleGroupoid {
        objects: 1,
        h_src: vec![0],
        h_tgt: vec![0],
        v_src: vec![0],
        v_tgt: vec![0],
        top: vec![0],
        bottom: vec![0],
        left: vec![0],
        right: vec![0],
        h_id: vec![0],
        v_id: vec![0],
        h_unit: vec![0],
        v_unit: vec![0],
        h_comp: BTreeMap::from([((0, 0), 0)]),
        v_comp: BTreeMap::from([((0, 0), 0)]),
        sq_h_comp: BTreeMap::from([((0, 0), 0)]),
        sq_v_comp: BTreeMap::from([((0, 0), 0)]),
    };
    DoubleGroupoid::new(raw).expect("the one-square structure satisfies every axiom")
}

/// For a slim square set (boundaries pairwise distinct), compositions are
/// forced: the composite is the unique square with the pasted boundary.
/// Returns None if some required composite boundary has no square (the set
/// is not closed under pasting).
#[allow(clippy::type_complexity)]
pub(crate) fn slim_comp_tables(
    boundaries: &[(usize, usize, usize, usize)],
    h_comp: &BTreeMap<(usize, usize), usize>,
    v_comp: &BTreeMap<(usize, usize), usize>,
) -> Option<(BTreeMap<(usize, usize), usize>, BTreeMap<(usize, usize), usize>)> {
    let index: BTreeMap<(usize, usize, usize, usize), usize> =
        boundaries.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    if index.len() != boundaries.len() {
        return None;
    }
    let mut sq_h = BTreeMap::new();
    let mut sq_v = BTreeMap::new();
    for (x, &(t1, l1, b1, r1)) in boundaries.iter().enumerate() {
        for (y, &(t2, l2, b2, r2)) in boundaries.iter().enumerate() {
            if r1 == l2 {
                let glued = (
                    *h_comp.get(&(t1, t2))?,
                    l1,
                    *h_comp.get(&(b1, b2))?,
                    r2,
                );
                sq_h.insert((x, y), *index.get(&glued)?);
            }
            if b1 == t2 {
                let glued = (
                    t1,
                    *v_comp.get(&(l1, l2))?,
                    b2,
                    *v_comp.get(&(r1, r2))?,
                );
                sq_v.insert((x, y), *index.get(&glued)?);
            }
        }
    }
    Some((sq_h, sq_v))
}

/// The smallest double groupoid over a given pair of edge groupoids on the
/// same objects: squares are exactly the unit squares.
pub fn unit_squares_double(
    h_edges: &FiniteGroupoid,
    v_edges: &FiniteGroupoid,
) -> Result<DoubleGroupoid, DoubleError> {
    if h_edges.objects() != v_edges.objects() {
        return Err(DoubleError::Unsupported(
            "edge groupoids must share their object set".into(),
        ));
    }
    let n = h_edges.objects();
    let h_id: Vec<usize> = (0..n).map(|a| h_edges.id(a)).collect();
    let v_id: Vec<usize> = (0..n).map(|a| v_edges.id(a)).collect();
    // squares: one per h arrow (vertical unit) and one per non-identity
    // v arrow; the double identity is shared
    let mut boundaries: Vec<(usize, usize, usize, usize)> = Vec::new();
    let mut v_unit = vec![0usize; h_edges.arrows()];
    for f in 0..h_edges.arrows() {
        v_unit[f] = boundaries.len();
        boundaries.push((f, v_id[h_edges.src(f)], f, v_id[h_edges.tgt(f)]));
    }
    let mut h_unit = vec![0usize; v_edges.arrows()];
    for u in 0..v_edges.arrows() {
        if let Some(a) = (0..n).find(|&a| v_id[a] == u) {
            h_unit[u] = v_unit[h_id[a]];
        } else {
            h_unit[u] = boundaries.len();
            boundaries.push((h_id[v_edges.src(u)], u, h_id[v_edges.tgt(u)], u));
        }
    }
    let (sq_h_comp, sq_v_comp) =
        slim_comp_tables(&boundaries, h_edges.comp_table(), v_edges.comp_table())
            .expect("unit squares are closed under pasting");
    let raw = RawDoubleGroupoid {
        objects: n,
        h_src: (0..h_edges.arrows()).map(|f| h_edges.src(f)).collect(),
        h_tgt: (0..h_edges.arrows()).map(|f| h_edges.tgt(f)).collect(),
        v_src: (0..v_edges.arrows()).map(|u| v_edges.src(u)).collect(),
        v_tgt: (0..v_edges.arrows()).map(|u| v_edges.tgt(u)).collect(),
        top: boundaries.iter().map(|b| b.0).collect(),
        left: boundaries.iter().map(|b| b.1).collect(),
        bottom: boundaries.iter().map(|b| b.2).collect(),
        right: boundaries.iter().map(|b| b.3).collect(),
        h_id,
        v_id,
        h_unit,
        v_unit,
        h_comp: h_edges.comp_table().clone(),
        v_comp: v_edges.comp_table().clone(),
        sq_h_comp,
        sq_v_comp,
    };
    DoubleGroupoid::new(raw)
}

/// One object with order-two horizontal and vertical edge groups. Without
/// the filler there are only the three unit squares; with it, a fourth
/// square (its own inverse both ways) completes every edge pair.
pub fn order_two_edge_example(filled: bool) -> DoubleGroupoid {
    let z2 = crate::group::cyclic(2).expect("order two");
    let edges = crate::groupoid::group_as_groupoid(&z2);
    if !filled {
        return unit_squares_double(&edges, &edges).expect("unit squares close");
    }
    let boundaries = vec![(0, 0, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (1, 1, 1, 1)];
    let (sq_h_comp, sq_v_comp) =
        slim_comp_tables(&boundaries, edges.comp_table(), edges.comp_table())
            .expect("filled square set closes");
    let raw = RawDoubleGroupoid {
        objects: 1,
        h_src: vec![0, 0],
        h_tgt: vec![0, 0],
        v_src: vec![0, 0],
        v_tgt: vec![0, 0],
        top: boundaries.iter().map(|b| b.0).collect(),
        left: boundaries.iter().map(|b| b.1).collect(),
        bottom: boundaries.iter().map(|b| b.2).collect(),
        right: boundaries.iter().map(|b| b.3).collect(),
        h_id: vec![0],
        v_id: vec![0],
        h_unit: vec![0, 2],
        v_unit: vec![0, 1],
        h_comp: edges.comp_table().clone(),
        v_comp: edges.comp_table().clone(),
        sq_h_comp,
        sq_v_comp,
    };
    DoubleGroupoid::new(raw).expect("the filled example satisfies every axiom")
}

/// Identity arrows only, with an abelian fiber of squares at each of `n`
/// objects; both square compositions are the fiber operation.
pub fn bundle_double(n: usize, fiber: &FiniteGroup) -> Result<DoubleGroupoid, DoubleError> {
    if n == 0 {
        return Err(DoubleError::Unsupported("need at least one object".into()));
    }
    if !fiber.is_abelian() {
        return Err(DoubleError::Unsupported(
            "square fibers over identity boundaries must be abelian".into(),
        ));
    }
    let k = fiber.order();
    let idx = |a: usize, x: usize| a * k + x;
    let mut sq_h_comp = BTreeMap::new();
    let mut sq_v_comp = BTreeMap::new();
    for a in 0..n {
        for x in 0..k {
            for y in 0..k {
                let z = idx(a, fiber.mul(x, y));
                sq_h_comp.insert((idx(a, x), idx(a, y)), z);
                sq_v_comp.insert((idx(a, x), idx(a, y)), z);
            }
        }
    }
    let raw = RawDoubleGroupoid {
        objects: n,
        h_src: (0..n).collect(),
        h_tgt: (0..n).collect(),
        v_src: (0..n).collect(),
        v_tgt: (0..n).collect(),
        top: (0..n * k).map(|s| s / k).collect(),
        bottom: (0..n * k).map(|s| s / k).collect(),
        left: (0..n * k).map(|s| s / k).collect(),
        right: (0..n * k).map(|s| s / k).collect(),
        h_id: (0..n).collect(),
        v_id: (0..n).collect(),
        h_unit: (0..n).map(|a| idx(a, 0)).collect(),
        v_unit: (0..n).map(|a| idx(a, 0)).collect(),
        h_comp: (0..n).map(|a| ((a, a), a)).collect(),
        v_comp: (0..n).map(|a| ((a, a), a)).collect(),
        sq_h_comp,
        sq_v_comp,
    };
    DoubleGroupoid::new(raw)
}

#[cfg(test)]
mod tests {
    use super::super::{
        core_bundle, core_diagram, core_groupoid, eckmann_hilton_check, exactness_check,
        is_exclusive, is_maximal, is_slim, is_vacant, target_transport, translation_element,
        verify,
    };
    use super::*;
    use crate::group::cyclic;

    #[test]
    fn trivial_double_is_vacant() {
        let dg = trivial_double();
        assert!(verify(dg.raw()).passed());
        assert!(is_slim(&dg) && is_exclusive(&dg) && is_maximal(&dg) && is_vacant(&dg));
    }

    #[test]
    fn unfilled_order_two_example_misses_one_pair() {
        let dg = order_two_edge_example(false);
        assert_eq!(dg.squares(), 3);
        assert!(is_slim(&dg));
        assert!(is_exclusive(&dg));
        assert!(!is_maximal(&dg));
        assert!(!is_vacant(&dg));
    }

    #[test]
    fn filled_order_two_example_is_vacant() {
        let dg = order_two_edge_example(true);
        assert_eq!(dg.squares(), 4);
        assert!(is_vacant(&dg));
        // the filler inverts itself in both directions
        assert_eq!(dg.sq_h_inv(3), 3);
        assert_eq!(dg.sq_v_inv(3), 3);
        let (core, squares) = core_groupoid(&dg).unwrap();
        assert_eq!(core.arrows(), 1);
        assert_eq!(squares, vec![0]);
    }

    #[test]
    fn bundle_double_core_structure() {
        let z3 = cyclic(3).unwrap();
        let dg = bundle_double(2, &z3).unwrap();
        assert_eq!(dg.squares(), 6);
        assert!(!is_slim(&dg));
        assert!(is_exclusive(&dg));
        assert!(is_maximal(&dg));
        assert!(!is_vacant(&dg));
        assert!(eckmann_hilton_check(&dg).passed());
        let bundle = core_bundle(&dg).unwrap();
        assert_eq!(bundle.len(), 2);
        for (g, squares) in &bundle {
            assert_eq!(g.order(), 3);
            assert_eq!(squares.len(), 3);
        }
        let cd = core_diagram(&dg).unwrap();
        assert!(exactness_check(&cd).passed());
        assert_eq!(cd.core_groupoid.arrows(), 6);
    }

    #[test]
    fn translation_between_fiber_squares() {
        let z3 = cyclic(3).unwrap();
        let dg = bundle_double(1, &z3).unwrap();
        // squares are fiber elements; translating y to x multiplies by x-y
        for x in 0..3 {
            for y in 0..3 {
                let u = translation_element(&dg, x, y).unwrap();
                assert_eq!(dg.sq_h_comp(u, y), x);
            }
        }
        assert_eq!(translation_element(&dg, 2, 2).unwrap(), 0);
        let t = target_transport(&dg, 1, 2).unwrap();
        assert_eq!(dg.glue(t, 2), 1);
    }

    #[test]
    fn unit_squares_over_a_connected_base() {
        let z2 = cyclic(2).unwrap();
        let edges = crate::groupoid::trivial_bundle(2, &z2).unwrap();
        let dg = unit_squares_double(&edges, &edges).unwrap();
        assert!(verify(dg.raw()).passed());
        assert_eq!(dg.objects(), 2);
        // one square per h arrow plus one per non-identity v arrow
        assert_eq!(dg.squares(), 8 + 8 - 2);
        assert!(is_slim(&dg));
    }

    #[test]
    fn mismatched_edge_objects_rejected() {
        let a = crate::groupoid::group_as_groupoid(&cyclic(2).unwrap());
        let b = crate::groupoid::coarse_groupoid(2).unwrap();
        assert!(unit_squares_double(&a, &b).is_err());
    }
}

//! Isomorphism testing by generator-image backtracking.
//!
//! The search assigns images to a greedy generating sequence and grows the
//! induced partial map by multiplicative closure, so each branch either
//! reaches a full bijective homomorphism or dies at the first conflict.
//! Cheap invariants (order profile, abelianness, center size) cut the rest.

use super::hom::GroupHom;
use super::subgroup::Subgroup;
use super::{FiniteGroup, GroupError};

pub const ISO_ORDER_CAP: usize = 300;

fn invariants_match(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    g.order() == h.order()
        && g.is_abelian() == h.is_abelian()
        && g.order_profile() == h.order_profile()
        && g.center().len() == h.center().len()
}

/// Greedy generating sequence: scan elements, keep those outside the closure
/// of what was already kept. Scanning by descending element order keeps the
/// sequence short.
fn generating_sequence(g: &FiniteGroup) -> Vec<usize> {
    let mut order: Vec<usize> = (1..g.order()).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut gens: Vec<usize> = Vec::new();
    let mut span = Subgroup::trivial();
    for x in order {
        if !span.contains(x) {
            gens.push(x);
            span = Subgroup::closure(g, &gens).expect("in-range generators");
            if span.order() == g.order() {
                break;
            }
        }
    }
    gens
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: Vec<usize>,
    h_center: Vec<bool>,
    g_center: Vec<bool>,
    want_all: bool,
    found: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    /// Extend the partial map to the multiplicative closure of its domain.
    /// Returns false on any conflict with homomorphism-ness or injectivity.
    fn propagate(&self, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> bool {
        let n = self.g.order();
        loop {
            let mut changed = false;
            let domain: Vec<usize> = (0..n).filter(|&x| map[x].is_some()).collect();
            for &a in &domain {
                for &b in &domain {
                    let ab = self.g.mul(a, b);
                    let image = self.h.mul(map[a].unwrap(), map[b].unwrap());
                    match map[ab] {
                        Some(v) => {
                            if v != image {
                                return false;
                            }
                        }
                        None => {
                            if used[image] {
                                return false;
                            }
                            map[ab] = Some(image);
                            used[image] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn assign(&mut self, depth: usize, map: &Vec<Option<usize>>, used: &Vec<bool>) -> bool {
        if depth == self.gens.len() {
            if map.iter().any(|v| v.is_none()) {
                return false; // gens generate g, so this cannot happen post-propagation
            }
            let table: Vec<usize> = map.iter().map(|v| v.unwrap()).collect();
            self.found.push(table);
            return !self.want_all;
        }
        let gen = self.gens[depth];
        let gen_order = self.g.element_order(gen);
        for cand in 0..self.h.order() {
            if used[cand]
                || self.h.element_order(cand) != gen_order
                || self.g_center[gen] != self.h_center[cand]
            {
                continue;
            }
            let mut next_map = map.clone();
            let mut next_used = used.clone();
            next_map[gen] = Some(cand);
            next_used[cand] = true;
            if self.propagate(&mut next_map, &mut next_used)
                && self.assign(depth + 1, &next_map, &next_used)
            {
                return true;
            }
        }
        false
    }

    fn run(mut self) -> Vec<Vec<usize>> {
        let n = self.g.order();
        let mut map: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; self.h.order()];
        map[0] = Some(0);
        used[0] = true;
        self.assign(0, &map, &used);
        self.found
    }
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    want_all: bool,
    cap: usize,
) -> Result<Vec<GroupHom>, GroupError> {
    if g.order() > cap || h.order() > cap {
        return Err(GroupError::CapExceeded {
            what: "isomorphism search",
            value: g.order().max(h.order()),
            cap,
        });
    }
    if !invariants_match(g, h) {
        return Ok(Vec::new());
    }
    let center_mask = |k: &FiniteGroup| {
        let c = k.center();
        let mut mask = vec![false; k.order()];
        for x in c {
            mask[x] = true;
        }
        mask
    };
    let s = Search {
        g,
        h,
        gens: generating_sequence(g),
        g_center: center_mask(g),
        h_center: center_mask(h),
        want_all,
        found: Vec::new(),
    };
    s.run()
        .into_iter()
        .map(|table| GroupHom::new(g.clone(), h.clone(), table))
        .collect()
}

/// First isomorphism between the groups, if any.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<GroupHom>, GroupError> {
    Ok(search(g, h, false, ISO_ORDER_CAP)?.into_iter().next())
}

/// Every isomorphism between the groups.
pub fn isomorphisms_between(
    g: &FiniteGroup,
    h: &FiniteGroup,
) -> Result<Vec<GroupHom>, GroupError> {
    search(g, h, true, ISO_ORDER_CAP)
}

/// The full automorphism group of `g`, as homs.
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<GroupHom>, GroupError> {
    search(g, g, true, ISO_ORDER_CAP)
}

#[cfg(test)]
mod tests {
    use super::super::{cyclic, dicyclic, dihedral, sl2, symmetric};
    use super::*;

    #[test]
    fn klein_is_not_z4() {
        let z4 = cyclic(4).unwrap();
        let klein = cyclic(2).unwrap().direct_product(&cyclic(2).unwrap());
        assert!(is_isomorphic(&z4, &klein).unwrap().is_none());
        assert!(is_isomorphic(&klein, &klein).unwrap().is_some());
    }

    #[test]
    fn d3_is_s3() {
        let d3 = dihedral(3).unwrap();
        let s3 = symmetric(3).unwrap();
        let f = is_isomorphic(&d3, &s3).unwrap().expect("D3 = S3");
        assert!(f.is_bijective());
    }

    #[test]
    fn q8_is_not_d4() {
        let q8 = dicyclic(2).unwrap();
        let d4 = dihedral(4).unwrap();
        assert!(is_isomorphic(&q8, &d4).unwrap().is_none());
    }

    #[test]
    fn sl2_of_2_is_s3() {
        assert!(is_isomorphic(&sl2(2).unwrap(), &symmetric(3).unwrap()).unwrap().is_some());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cyclic(5).unwrap()).unwrap().len(), 4);
        let klein = cyclic(2).unwrap().direct_product(&cyclic(2).unwrap());
        assert_eq!(automorphisms(&klein).unwrap().len(), 6);
        assert_eq!(automorphisms(&symmetric(3).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn cap_is_reported() {
        let big = cyclic(301).unwrap();
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(GroupError::CapExceeded { .. })
        ));
    }
}

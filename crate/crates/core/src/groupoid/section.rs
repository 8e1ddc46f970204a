//! Sections: one chosen arrow per nonempty homset.

use super::{FiniteGroupoid, GroupoidError};
use std::collections::BTreeMap;

/// A graph-morphism section of the frame projection: identity on objects,
/// one arrow picked from every nonempty homset. Normalized so the diagonal
/// pick is the identity arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pick: BTreeMap<(usize, usize), usize>,
}

impl Section {
    pub fn new(
        g: &FiniteGroupoid,
        pick: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self, GroupoidError> {
        for (&(a, b), &f) in &pick {
            if a >= g.objects() || b >= g.objects() {
                return Err(GroupoidError::BadSection(format!("pair ({a},{b}) out of range")));
            }
            if f >= g.arrows() || g.src(f) != a || g.tgt(f) != b {
                return Err(GroupoidError::BadSection(format!(
                    "pick({a},{b}) = {f} is not an arrow {a} -> {b}"
                )));
            }
        }
        for a in 0..g.objects() {
            for b in 0..g.objects() {
                let nonempty = !g.homset(a, b).is_empty();
                if nonempty != pick.contains_key(&(a, b)) {
                    return Err(GroupoidError::BadSection(format!(
                        "pick domain disagrees with nonempty homsets at ({a},{b})"
                    )));
                }
            }
            if pick.get(&(a, a)) != Some(&g.id(a)) {
                return Err(GroupoidError::BadSection(format!(
                    "diagonal pick({a},{a}) must be the identity arrow"
                )));
            }
        }
        Ok(Section { pick })
    }

    pub fn pick(&self, a: usize, b: usize) -> usize {
        self.pick[&(a, b)]
    }

    pub fn try_pick(&self, a: usize, b: usize) -> Option<usize> {
        self.pick.get(&(a, b)).copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.pick.iter().map(|(&(a, b), &f)| (a, b, f))
    }
}

/// The canonical section: identity arrows on the diagonal, the lowest-index
/// arrow in every other nonempty homset.
pub fn canonical_section(g: &FiniteGroupoid) -> Section {
    let mut pick = BTreeMap::new();
    for a in 0..g.objects() {
        for b in 0..g.objects() {
            if a == b {
                pick.insert((a, a), g.id(a));
            } else if let Some(&f) = g.homset(a, b).first() {
                pick.insert((a, b), f);
            }
        }
    }
    Section::new(g, pick).expect("canonical pick is a section")
}

#[cfg(test)]
mod tests {
    use super::super::{coarse_groupoid, trivial_bundle};
    use super::*;
    use crate::group::cyclic;

    #[test]
    fn canonical_section_of_coarse() {
        let g = coarse_groupoid(3).unwrap();
        let s = canonical_section(&g);
        for a in 0..3 {
            for b in 0..3 {
                let f = s.pick(a, b);
                assert_eq!(g.src(f), a);
                assert_eq!(g.tgt(f), b);
            }
        }
    }

    #[test]
    fn rejects_non_identity_diagonal() {
        let g = trivial_bundle(2, &cyclic(3).unwrap()).unwrap();
        let mut pick: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for a in 0..2 {
            for b in 0..2 {
                // arrow (a,b,1): off-identity everywhere, including diagonal
                pick.insert((a, b), (a * 2 + b) * 3 + 1);
            }
        }
        assert!(Section::new(&g, pick).is_err());
    }

    #[test]
    fn rejects_missing_pairs() {
        let g = coarse_groupoid(2).unwrap();
        let mut pick = BTreeMap::new();
        pick.insert((0, 0), g.id(0));
        pick.insert((1, 1), g.id(1));
        assert!(Section::new(&g, pick).is_err());
    }
}

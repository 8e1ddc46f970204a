//! Group homomorphisms as validated lookup tables.

use super::subgroup::Subgroup;
use super::{FiniteGroup, GroupError};
use std::collections::BTreeSet;

/// A homomorphism between finite groups. Owns copies of both endpoint groups
/// so it stays meaningful on its own; `map[x]` is the image of `x`.
#[derive(Debug, Clone)]
pub struct GroupHom {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        domain: FiniteGroup,
        codomain: FiniteGroup,
        map: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if map.len() != domain.order() {
            return Err(GroupError::BadHomTable { got: map.len(), order: domain.order() });
        }
        if let Some((x, &value)) = map.iter().enumerate().find(|(_, &v)| v >= codomain.order()) {
            return Err(GroupError::HomOutOfRange { x, value, order: codomain.order() });
        }
        for x in 0..domain.order() {
            for y in 0..domain.order() {
                let fxy = map[domain.mul(x, y)];
                let fxfy = codomain.mul(map[x], map[y]);
                if fxy != fxfy {
                    return Err(GroupError::NotHomomorphism { x, y, fxy, fxfy });
                }
            }
        }
        Ok(GroupHom { domain, codomain, map })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn kernel(&self) -> Subgroup {
        let members: Vec<usize> =
            (0..self.domain.order()).filter(|&x| self.map[x] == 0).collect();
        Subgroup::new(&self.domain, &members).expect("kernel is always a subgroup")
    }

    pub fn image(&self) -> Subgroup {
        let members: BTreeSet<usize> = self.map.iter().copied().collect();
        let members: Vec<usize> = members.into_iter().collect();
        Subgroup::new(&self.codomain, &members).expect("image is always a subgroup")
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Diagrammatic composite: `self` first, then `other`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom, GroupError> {
        if other.domain.order() != self.codomain.order() {
            return Err(GroupError::BadHomTable {
                got: other.domain.order(),
                order: self.codomain.order(),
            });
        }
        let map = self.map.iter().map(|&v| other.map[v]).collect();
        GroupHom::new(self.domain.clone(), other.codomain.clone(), map)
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Result<GroupHom, GroupError> {
        if !self.is_bijective() {
            return Err(GroupError::NotBijective);
        }
        let mut back = vec![0usize; self.map.len()];
        for (x, &v) in self.map.iter().enumerate() {
            back[v] = x;
        }
        GroupHom::new(self.codomain.clone(), self.domain.clone(), back)
    }
}

//! Finite groups as dense Cayley tables.
//!
//! Elements are integer indices `0..order` and the identity is always index
//! 0; builders and loaders normalize to this form. Multiplication is written
//! in diagrammatic order throughout the crate: `mul(x, y)` means *x first,
//! then y*. For permutation-built groups this makes `mul(p, q)` the map
//! `i -> q[p[i]]`.

mod builders;
mod goursat;
mod hom;
mod iso;
mod subgroup;

pub use builders::{
    alternating, cyclic, dicyclic, dihedral, group_from_generators, group_from_generators_capped,
    sl2, symmetric, z3_semidirect_klein,
};
pub use goursat::{duval_classify, goursat_subgroups, GoursatQuintuple};
pub use hom::GroupHom;
pub use iso::{automorphisms, is_isomorphic, isomorphisms_between};
pub use subgroup::{quotient, subgroups_all, subgroups_all_capped, Subgroup};

use rand::{Rng, SeedableRng};
use thiserror::Error;

/// Orders up to this bound get the exhaustive triple scan for associativity;
/// larger tables are spot-checked with seeded random triples.
const ASSOC_EXHAUSTIVE_MAX: usize = 200;
const ASSOC_RANDOM_SAMPLES: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not square: row {row} has length {len}, expected {order}")]
    RaggedTable { row: usize, len: usize, order: usize },
    #[error("table entry out of range: mul({x},{y}) = {value}, order is {order}")]
    EntryOutOfRange { x: usize, y: usize, value: usize, order: usize },
    #[error("element 0 is not an identity: mul({x},0) = {got}")]
    NotIdentity { x: usize, got: usize },
    #[error("element {x} has no two-sided inverse")]
    NoInverse { x: usize },
    #[error("associativity fails at ({x},{y},{z}): ({x}{y}){z} = {left} but {x}({y}{z}) = {right}")]
    NotAssociative { x: usize, y: usize, z: usize, left: usize, right: usize },
    #[error("label list has length {got}, expected {order}")]
    BadLabels { got: usize, order: usize },
    #[error("empty group: order must be at least 1")]
    Empty,
    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("parameter out of supported range: {0}")]
    BadParameter(String),
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: conjugating {member} by {by} gives {result}, outside the subgroup")]
    NotNormal { member: usize, by: usize, result: usize },
    #[error("map is not a homomorphism: f({x}{y}) = {fxy} but f({x})f({y}) = {fxfy}")]
    NotHomomorphism { x: usize, y: usize, fxy: usize, fxfy: usize },
    #[error("homomorphism table has length {got}, expected {order}")]
    BadHomTable { got: usize, order: usize },
    #[error("hom entry out of range: f({x}) = {value}, codomain order {order}")]
    HomOutOfRange { x: usize, value: usize, order: usize },
    #[error("expected an isomorphism, map is not bijective")]
    NotBijective,
}

/// An immutable finite group: Cayley table, inverse table, optional labels.
///
/// Invariants established at construction: `mul` is total and associative,
/// index 0 is a two-sided identity, every element has the recorded two-sided
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a row-major multiplication table and builds the group.
    ///
    /// Index 0 must already be the identity; callers with an identity
    /// elsewhere should renumber first (the builders all do).
    pub fn from_mul_table(
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::RaggedTable { row: i, len: row.len(), order });
            }
        }
        let mut mul = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { x, y, value: v, order });
                }
                mul.push(v);
            }
        }
        if let Some(ref ls) = labels {
            if ls.len() != order {
                return Err(GroupError::BadLabels { got: ls.len(), order });
            }
        }
        // identity at 0, both sides
        for x in 0..order {
            if mul[x * order] != x {
                return Err(GroupError::NotIdentity { x, got: mul[x * order] });
            }
            if mul[x] != x {
                return Err(GroupError::NotIdentity { x, got: mul[x] });
            }
        }
        // two-sided inverses
        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            let mut found = None;
            for y in 0..order {
                if mul[x * order + y] == 0 && mul[y * order + x] == 0 {
                    found = Some(y);
                    break;
                }
            }
            inv[x] = found.ok_or(GroupError::NoInverse { x })?;
        }
        // associativity: exhaustive at desk scale, seeded random spot checks above
        let check = |x: usize, y: usize, z: usize| -> Result<(), GroupError> {
            let left = mul[mul[x * order + y] * order + z];
            let right = mul[x * order + mul[y * order + z]];
            if left != right {
                return Err(GroupError::NotAssociative { x, y, z, left, right });
            }
            Ok(())
        };
        if order <= ASSOC_EXHAUSTIVE_MAX {
            for x in 0..order {
                for y in 0..order {
                    for z in 0..order {
                        check(x, y, z)?;
                    }
                }
            }
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x6a11e7);
            for _ in 0..ASSOC_RANDOM_SAMPLES {
                let x = rng.random_range(0..order);
                let y = rng.random_range(0..order);
                let z = rng.random_range(0..order);
                check(x, y, z)?;
            }
        }
        Ok(FiniteGroup { order, mul, inv, labels })
    }

    /// The one-element group.
    pub fn trivial() -> Self {
        FiniteGroup { order: 1, mul: vec![0], inv: vec![0], labels: Some(vec!["e".into()]) }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.labels.as_ref().map(|ls| ls[x].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name for an element: its label if present, else the index.
    pub fn name(&self, x: usize) -> String {
        match self.label(x) {
            Some(l) => l.to_string(),
            None => x.to_string(),
        }
    }

    /// `x` raised to `k` (k may be 0; negative powers via `inv` first).
    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    /// Multiset of element orders, as sorted (order, multiplicity) pairs.
    /// Cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for x in 0..self.order {
            *counts.entry(self.element_order(x)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn is_abelian(&self) -> bool {
        for x in 0..self.order {
            for y in 0..x {
                if self.mul(x, y) != self.mul(y, x) {
                    return false;
                }
            }
        }
        true
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// Conjugate of `x` by `g`: g·x·g⁻¹ in table order.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Direct product H×K with index (h,k) -> h·|K| + k.
    pub fn direct_product(&self, k: &FiniteGroup) -> FiniteGroup {
        let h = self;
        let order = h.order * k.order;
        let mut mul = vec![0usize; order * order];
        for h1 in 0..h.order {
            for k1 in 0..k.order {
                for h2 in 0..h.order {
                    for k2 in 0..k.order {
                        let a = h1 * k.order + k1;
                        let b = h2 * k.order + k2;
                        mul[a * order + b] = h.mul(h1, h2) * k.order + k.mul(k1, k2);
                    }
                }
            }
        }
        let mut inv = vec![0usize; order];
        for h1 in 0..h.order {
            for k1 in 0..k.order {
                inv[h1 * k.order + k1] = h.inv(h1) * k.order + k.inv(k1);
            }
        }
        let labels = match (&h.labels, &k.labels) {
            (Some(hl), Some(kl)) => Some(
                (0..order)
                    .map(|i| format!("({},{})", hl[i / k.order], kl[i % k.order]))
                    .collect(),
            ),
            _ => None,
        };
        FiniteGroup { order, mul, inv, labels }
    }

    /// Splits a product index back into its (h, k) parts.
    pub fn product_split(i: usize, k_order: usize) -> (usize, usize) {
        (i / k_order, i % k_order)
    }

    pub fn product_join(h: usize, k: usize, k_order: usize) -> usize {
        h * k_order + k
    }

    /// Raw rows for serialization.
    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| self.mul[x * self.order..(x + 1) * self.order].to_vec())
            .collect()
    }

    /// Internal constructor for tables known valid by construction
    /// (builders that have just proved closure). Still debug-asserts shape.
    pub(crate) fn from_parts_unchecked(
        order: usize,
        mul: Vec<usize>,
        inv: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        debug_assert_eq!(inv.len(), order);
        FiniteGroup { order, mul, inv, labels }
    }
}

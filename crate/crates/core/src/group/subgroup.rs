//! Subgroups, subgroup enumeration, and quotients.

use super::hom::GroupHom;
use super::{FiniteGroup, GroupError};
use std::collections::BTreeSet;

pub const SUBGROUP_ENUM_CAP: usize = 200;

/// A subgroup of an ambient group, stored as a sorted member list.
/// The ambient group is not owned; callers pass it back in to the methods
/// that need multiplication.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Validate that `members` really is a subgroup of `g`.
    pub fn new(g: &FiniteGroup, members: &[usize]) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        for &x in &set {
            if x >= g.order() {
                return Err(GroupError::NotSubgroup(format!("member {x} out of range")));
            }
        }
        if !set.contains(&0) {
            return Err(GroupError::NotSubgroup("missing identity".into()));
        }
        for &x in &set {
            if !set.contains(&g.inv(x)) {
                return Err(GroupError::NotSubgroup(format!("missing inverse of {x}")));
            }
            for &y in &set {
                if !set.contains(&g.mul(x, y)) {
                    return Err(GroupError::NotSubgroup(format!(
                        "not closed: {x}*{y} escapes"
                    )));
                }
            }
        }
        Ok(Subgroup { members: set.into_iter().collect() })
    }

    /// Smallest subgroup of `g` containing `gens`.
    pub fn closure(g: &FiniteGroup, gens: &[usize]) -> Result<Self, GroupError> {
        for &x in gens {
            if x >= g.order() {
                return Err(GroupError::NotSubgroup(format!("generator {x} out of range")));
            }
        }
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(0);
        let mut queue: Vec<usize> = vec![0];
        for &x in gens {
            if set.insert(x) {
                queue.push(x);
            }
        }
        let mut frontier = 0;
        while frontier < queue.len() {
            let a = queue[frontier];
            frontier += 1;
            let snapshot: Vec<usize> = set.iter().copied().collect();
            for b in snapshot {
                for p in [g.mul(a, b), g.mul(b, a)] {
                    if set.insert(p) {
                        queue.push(p);
                    }
                }
            }
        }
        Ok(Subgroup { members: set.into_iter().collect() })
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn full(g: &FiniteGroup) -> Self {
        Subgroup { members: (0..g.order()).collect() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Position of `x` in the sorted member list, if present.
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        (0..g.order()).all(|y| self.members.iter().all(|&x| self.contains(g.conj(y, x))))
    }

    /// The subgroup as a standalone group, together with the member list that
    /// embeds its indices back into the ambient group.
    pub fn as_group(&self, g: &FiniteGroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let n = self.members.len();
        let mut mul = vec![0usize; n * n];
        let mut inv = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                let p = g.mul(self.members[i], self.members[j]);
                mul[i * n + j] = self
                    .index_of(p)
                    .ok_or_else(|| GroupError::NotSubgroup(format!("not closed at {p}")))?;
            }
            inv[i] = self
                .index_of(g.inv(self.members[i]))
                .ok_or_else(|| GroupError::NotSubgroup("missing inverse".into()))?;
        }
        let labels = g
            .labels()
            .map(|ls| self.members.iter().map(|&m| ls[m].clone()).collect());
        Ok((FiniteGroup::from_parts_unchecked(n, mul, inv, labels), self.members.clone()))
    }
}

/// All subgroups of `g`, sorted by (order, members), found by closing each
/// known subgroup with one extra element until nothing new appears.
pub fn subgroups_all(g: &FiniteGroup) -> Result<Vec<Subgroup>, GroupError> {
    subgroups_all_capped(g, SUBGROUP_ENUM_CAP)
}

pub fn subgroups_all_capped(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>, GroupError> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut queue: Vec<Subgroup> = vec![Subgroup::trivial()];
    found.insert(Subgroup::trivial());
    let mut frontier = 0;
    while frontier < queue.len() {
        let base = queue[frontier].clone();
        frontier += 1;
        for x in 1..g.order() {
            if base.contains(x) {
                continue;
            }
            let mut gens = base.members().to_vec();
            gens.push(x);
            let bigger = Subgroup::closure(g, &gens)?;
            if found.insert(bigger.clone()) {
                if found.len() > cap {
                    return Err(GroupError::CapExceeded {
                        what: "subgroup enumeration",
                        value: found.len(),
                        cap,
                    });
                }
                queue.push(bigger);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by_key(|s| (s.order(), s.members().to_vec()));
    Ok(out)
}

/// Quotient of `g` by a normal subgroup. Cosets are indexed with the identity
/// coset first, then by smallest member; the returned hom is the projection.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<(FiniteGroup, GroupHom), GroupError> {
    if !n.is_normal(g) {
        let bad = n
            .members()
            .iter()
            .flat_map(|&x| (0..g.order()).map(move |y| (x, y)))
            .find(|&(x, y)| !n.contains(g.conj(y, x)));
        let (x, y) = bad.expect("normality failed, witness exists");
        return Err(GroupError::NotNormal { member: x, by: y, result: g.conj(y, x) });
    }
    let order = g.order();
    // coset of x = sorted { x·n : n in N }
    let coset_of = |x: usize| -> Vec<usize> {
        let mut c: Vec<usize> = n.members().iter().map(|&m| g.mul(x, m)).collect();
        c.sort_unstable();
        c
    };
    let mut reps: Vec<usize> = Vec::new(); // smallest member of each coset, identity coset first
    let mut coset_index = vec![usize::MAX; order];
    for x in 0..order {
        if coset_index[x] != usize::MAX {
            continue;
        }
        let c = coset_of(x);
        let idx = reps.len();
        for &m in &c {
            coset_index[m] = idx;
        }
        reps.push(c[0]);
    }
    debug_assert_eq!(coset_index[0], 0);
    let q = reps.len();
    let mut mul = vec![0usize; q * q];
    let mut inv = vec![0usize; q];
    for i in 0..q {
        for j in 0..q {
            mul[i * q + j] = coset_index[g.mul(reps[i], reps[j])];
        }
        inv[i] = coset_index[g.inv(reps[i])];
    }
    let labels = g.labels().map(|ls| {
        reps.iter().map(|&r| format!("[{}]", ls[r])).collect::<Vec<String>>()
    });
    let quot = FiniteGroup::from_parts_unchecked(q, mul, inv, labels);
    let hom = GroupHom::new(g.clone(), quot.clone(), coset_index)?;
    Ok((quot, hom))
}

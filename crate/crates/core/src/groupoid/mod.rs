//! Finite groupoids and their structure theory.
//!
//! A groupoid is stored in fully tabulated form: dense arrow tables for
//! source/target/identity/inverse and a partial composition map holding a key
//! exactly when the pair is composable. Composition is diagrammatic
//! throughout: `comp(f, g)` means f first, then g.

mod cocycle;
mod section;

pub use cocycle::{
    cocycles_equivalent, decompose_via_section, groupoid_from_cocycle, trivial_cocycle, twist_by,
    CocycleData, Decomposition,
};
pub use section::{canonical_section, Section};

use crate::group::{FiniteGroup, GroupError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupoidError {
    #[error("{what} has length {got}, expected {want}")]
    RaggedTable { what: &'static str, got: usize, want: usize },
    #[error("{what}[{index}] = {value} out of range (< {bound})")]
    EntryOutOfRange { what: &'static str, index: usize, value: usize, bound: usize },
    #[error("identity arrow of object {object} has wrong endpoints")]
    BadIdentity { object: usize },
    #[error("inverse of arrow {arrow} has wrong endpoints")]
    BadInverse { arrow: usize },
    #[error("composition key ({f},{g}) {}", if *present { "present but not composable" } else { "missing though composable" })]
    CompDomain { f: usize, g: usize, present: bool },
    #[error("composite of ({f},{g}) has wrong endpoints")]
    CompEndpoints { f: usize, g: usize },
    #[error("unit law fails at arrow {arrow}")]
    UnitLaw { arrow: usize },
    #[error("associativity fails at ({f},{g},{h})")]
    NotAssociative { f: usize, g: usize, h: usize },
    #[error("inverse law fails at arrow {arrow}")]
    InverseLaw { arrow: usize },
    #[error("groupoid is not connected")]
    Disconnected,
    #[error("invalid section: {0}")]
    BadSection(String),
    #[error("cocycle identity {which} fails at ({a},{b},{c},{d})")]
    CocycleIdentity { which: &'static str, a: usize, b: usize, c: usize, d: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("decomposition map is not multiplicative at ({f},{g})")]
    NotMultiplicative { f: usize, g: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite groupoid with dense arrow indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    id: Vec<usize>,
    inv: Vec<usize>,
    comp: BTreeMap<(usize, usize), usize>,
}

impl FiniteGroupoid {
    /// Validate every groupoid axiom on explicit tables.
    pub fn from_parts(
        objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        id: Vec<usize>,
        inv: Vec<usize>,
        comp: BTreeMap<(usize, usize), usize>,
    ) -> Result<Self, GroupoidError> {
        let m = src.len();
        if tgt.len() != m {
            return Err(GroupoidError::RaggedTable { what: "tgt", got: tgt.len(), want: m });
        }
        if inv.len() != m {
            return Err(GroupoidError::RaggedTable { what: "inv", got: inv.len(), want: m });
        }
        if id.len() != objects {
            return Err(GroupoidError::RaggedTable { what: "id", got: id.len(), want: objects });
        }
        let obj_table = |what, t: &[usize]| {
            t.iter().enumerate().find(|(_, &v)| v >= objects).map(|(index, &value)| {
                GroupoidError::EntryOutOfRange { what, index, value, bound: objects }
            })
        };
        if let Some(e) = obj_table("src", &src).or(obj_table("tgt", &tgt)) {
            return Err(e);
        }
        for (index, &value) in id.iter().enumerate() {
            if value >= m {
                return Err(GroupoidError::EntryOutOfRange { what: "id", index, value, bound: m });
            }
        }
        for (index, &value) in inv.iter().enumerate() {
            if value >= m {
                return Err(GroupoidError::EntryOutOfRange {
                    what: "inv",
                    index,
                    value,
                    bound: m,
                });
            }
        }
        let g = FiniteGroupoid { objects, src, tgt, id, inv, comp };
        g.check_identities()?;
        g.check_comp_domain()?;
        g.check_units()?;
        g.check_associativity()?;
        g.check_inverses()?;
        Ok(g)
    }

    fn check_identities(&self) -> Result<(), GroupoidError> {
        for a in 0..self.objects {
            let e = self.id[a];
            if self.src[e] != a || self.tgt[e] != a {
                return Err(GroupoidError::BadIdentity { object: a });
            }
        }
        for f in 0..self.arrows() {
            let g = self.inv[f];
            if self.src[g] != self.tgt[f] || self.tgt[g] != self.src[f] {
                return Err(GroupoidError::BadInverse { arrow: f });
            }
        }
        Ok(())
    }

    fn check_comp_domain(&self) -> Result<(), GroupoidError> {
        let m = self.arrows();
        for (&(f, g), &h) in &self.comp {
            if f >= m || g >= m {
                return Err(GroupoidError::CompDomain { f, g, present: true });
            }
            if self.tgt[f] != self.src[g] {
                return Err(GroupoidError::CompDomain { f, g, present: true });
            }
            if h >= m {
                return Err(GroupoidError::EntryOutOfRange {
                    what: "comp",
                    index: f,
                    value: h,
                    bound: m,
                });
            }
            if self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] {
                return Err(GroupoidError::CompEndpoints { f, g });
            }
        }
        for f in 0..m {
            for g in 0..m {
                if self.tgt[f] == self.src[g] && !self.comp.contains_key(&(f, g)) {
                    return Err(GroupoidError::CompDomain { f, g, present: false });
                }
            }
        }
        Ok(())
    }

    fn check_units(&self) -> Result<(), GroupoidError> {
        for f in 0..self.arrows() {
            let left = self.comp.get(&(self.id[self.src[f]], f));
            let right = self.comp.get(&(f, self.id[self.tgt[f]]));
            if left != Some(&f) || right != Some(&f) {
                return Err(GroupoidError::UnitLaw { arrow: f });
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), GroupoidError> {
        let by_src = self.arrows_by_src();
        for f in 0..self.arrows() {
            for &g in &by_src[self.tgt[f]] {
                let fg = self.comp[&(f, g)];
                for &h in &by_src[self.tgt[g]] {
                    let gh = self.comp[&(g, h)];
                    if self.comp[&(fg, h)] != self.comp[&(f, gh)] {
                        return Err(GroupoidError::NotAssociative { f, g, h });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_inverses(&self) -> Result<(), GroupoidError> {
        for f in 0..self.arrows() {
            let g = self.inv[f];
            if self.comp[&(f, g)] != self.id[self.src[f]]
                || self.comp[&(g, f)] != self.id[self.tgt[f]]
            {
                return Err(GroupoidError::InverseLaw { arrow: f });
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn arrows(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn id(&self, a: usize) -> usize {
        self.id[a]
    }

    pub fn inv(&self, f: usize) -> usize {
        self.inv[f]
    }

    /// Composite of `f` then `g`; panics if not composable (use
    /// [`FiniteGroupoid::try_comp`] for partiality).
    pub fn comp(&self, f: usize, g: usize) -> usize {
        self.comp[&(f, g)]
    }

    pub fn try_comp(&self, f: usize, g: usize) -> Option<usize> {
        self.comp.get(&(f, g)).copied()
    }

    pub fn comp_table(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.comp
    }

    pub fn arrows_by_src(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.objects];
        for f in 0..self.arrows() {
            out[self.src[f]].push(f);
        }
        out
    }

    pub fn homset(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows()).filter(|&f| self.src[f] == a && self.tgt[f] == b).collect()
    }

    /// Vertex group at `a`: the loops, with the identity arrow at index 0.
    /// Returns the group and the loop arrows in group-index order.
    pub fn vertex_group(&self, a: usize) -> Result<(FiniteGroup, Vec<usize>), GroupoidError> {
        let mut loops: Vec<usize> =
            (0..self.arrows()).filter(|&f| self.src[f] == a && self.tgt[f] == a).collect();
        // identity first, stable elsewhere
        loops.sort_by_key(|&f| (f != self.id[a], f));
        let pos = |f: usize| loops.iter().position(|&x| x == f).unwrap();
        let rows: Vec<Vec<usize>> = loops
            .iter()
            .map(|&f| loops.iter().map(|&g| pos(self.comp(f, g))).collect())
            .collect();
        let group = FiniteGroup::from_mul_table(rows, None)?;
        Ok((group, loops))
    }

    /// Vertex group family, one entry per object.
    pub fn core_bundle(&self) -> Result<Vec<(FiniteGroup, Vec<usize>)>, GroupoidError> {
        (0..self.objects).map(|a| self.vertex_group(a)).collect()
    }

    /// Blocks of mutually connected objects, each sorted, ordered by least
    /// member. Hom(a,b) nonempty is already symmetric and transitive in a
    /// groupoid; this just reads it off.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut block = vec![usize::MAX; self.objects];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for a in 0..self.objects {
            if block[a] != usize::MAX {
                continue;
            }
            let idx = blocks.len();
            let mut members = vec![a];
            block[a] = idx;
            let mut frontier = 0;
            while frontier < members.len() {
                let x = members[frontier];
                frontier += 1;
                for f in 0..self.arrows() {
                    for y in [
                        (self.src[f] == x).then_some(self.tgt[f]),
                        (self.tgt[f] == x).then_some(self.src[f]),
                    ]
                    .into_iter()
                    .flatten()
                    {
                        if block[y] == usize::MAX {
                            block[y] = idx;
                            members.push(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            blocks.push(members);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The full subgroupoid on one component, with object/arrow embeddings
    /// back into `self`.
    pub fn component_subgroupoid(
        &self,
        members: &[usize],
    ) -> Result<(FiniteGroupoid, Vec<usize>, Vec<usize>), GroupoidError> {
        let obj_pos: BTreeMap<usize, usize> =
            members.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let arrow_embed: Vec<usize> = (0..self.arrows())
            .filter(|&f| obj_pos.contains_key(&self.src[f]))
            .collect();
        let arrow_pos: BTreeMap<usize, usize> =
            arrow_embed.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let src = arrow_embed.iter().map(|&f| obj_pos[&self.src[f]]).collect();
        let tgt = arrow_embed.iter().map(|&f| obj_pos[&self.tgt[f]]).collect();
        let id = members.iter().map(|&a| arrow_pos[&self.id[a]]).collect();
        let inv = arrow_embed.iter().map(|&f| arrow_pos[&self.inv[f]]).collect();
        let mut comp = BTreeMap::new();
        for (&(f, g), &h) in &self.comp {
            if let (Some(&pf), Some(&pg)) = (arrow_pos.get(&f), arrow_pos.get(&g)) {
                comp.insert((pf, pg), arrow_pos[&h]);
            }
        }
        let sub = FiniteGroupoid::from_parts(members.len(), src, tgt, id, inv, comp)?;
        Ok((sub, members.to_vec(), arrow_embed))
    }
}

/// The coarse groupoid on `n` objects: exactly one arrow per ordered pair,
/// indexed a·n + b.
pub fn coarse_groupoid(n: usize) -> Result<FiniteGroupoid, GroupoidError> {
    if n == 0 {
        return Err(GroupoidError::SizeMismatch("coarse groupoid needs n >= 1".into()));
    }
    let m = n * n;
    let mut src = vec![0; m];
    let mut tgt = vec![0; m];
    let mut id = vec![0; n];
    let mut inv = vec![0; m];
    let mut comp = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            src[a * n + b] = a;
            tgt[a * n + b] = b;
            inv[a * n + b] = b * n + a;
        }
        id[a] = a * n + a;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                comp.insert((a * n + b, b * n + c), a * n + c);
            }
        }
    }
    FiniteGroupoid::from_parts(n, src, tgt, id, inv, comp)
}

/// One-object groupoid carrying a group.
pub fn group_as_groupoid(g: &FiniteGroup) -> FiniteGroupoid {
    let n = g.order();
    let mut comp = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            comp.insert((x, y), g.mul(x, y));
        }
    }
    FiniteGroupoid::from_parts(
        1,
        vec![0; n],
        vec![0; n],
        vec![0],
        (0..n).map(|x| g.inv(x)).collect(),
        comp,
    )
    .expect("a group is a one-object groupoid")
}

/// Connected groupoid on `n` objects whose every homset is a copy of `g`:
/// arrows (a,b,x) indexed (a·n+b)·|g|+x, composed by multiplying the group
/// coordinates.
pub fn trivial_bundle(n: usize, g: &FiniteGroup) -> Result<FiniteGroupoid, GroupoidError> {
    if n == 0 {
        return Err(GroupoidError::SizeMismatch("trivial bundle needs n >= 1".into()));
    }
    let go = g.order();
    let m = n * n * go;
    let idx = |a: usize, b: usize, x: usize| (a * n + b) * go + x;
    let mut src = vec![0; m];
    let mut tgt = vec![0; m];
    let mut inv = vec![0; m];
    let mut id = vec![0; n];
    let mut comp = BTreeMap::new();
    for a in 0..n {
        id[a] = idx(a, a, 0);
        for b in 0..n {
            for x in 0..go {
                src[idx(a, b, x)] = a;
                tgt[idx(a, b, x)] = b;
                inv[idx(a, b, x)] = idx(b, a, g.inv(x));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for x in 0..go {
                    for y in 0..go {
                        comp.insert((idx(a, b, x), idx(b, c, y)), idx(a, c, g.mul(x, y)));
                    }
                }
            }
        }
    }
    FiniteGroupoid::from_parts(n, src, tgt, id, inv, comp)
}

/// Disjoint union; objects and arrows of `b` are shifted after `a`'s.
pub fn disjoint_union(
    a: &FiniteGroupoid,
    b: &FiniteGroupoid,
) -> Result<FiniteGroupoid, GroupoidError> {
    let on = a.objects;
    let an = a.arrows();
    let mut src = a.src.clone();
    let mut tgt = a.tgt.clone();
    let mut id = a.id.clone();
    let mut inv = a.inv.clone();
    src.extend(b.src.iter().map(|&x| x + on));
    tgt.extend(b.tgt.iter().map(|&x| x + on));
    id.extend(b.id.iter().map(|&f| f + an));
    inv.extend(b.inv.iter().map(|&f| f + an));
    let mut comp = a.comp.clone();
    for (&(f, g), &h) in &b.comp {
        comp.insert((f + an, g + an), h + an);
    }
    FiniteGroupoid::from_parts(a.objects + b.objects, src, tgt, id, inv, comp)
}

/// The frame: same objects, one arrow per nonempty homset. Returns the frame
/// and the projection table arrow → frame arrow.
pub fn frame(g: &FiniteGroupoid) -> Result<(FiniteGroupoid, Vec<usize>), GroupoidError> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pair_pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in 0..g.arrows() {
        let key = (g.src(f), g.tgt(f));
        pair_pos.entry(key).or_insert_with(|| {
            pairs.push(key);
            pairs.len() - 1
        });
    }
    // normalize to sorted pair order for a canonical frame
    pairs.sort_unstable();
    let pair_pos: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let src = pairs.iter().map(|&(a, _)| a).collect();
    let tgt = pairs.iter().map(|&(_, b)| b).collect();
    let id = (0..g.objects()).map(|a| pair_pos[&(a, a)]).collect();
    let inv = pairs.iter().map(|&(a, b)| pair_pos[&(b, a)]).collect();
    let mut comp = BTreeMap::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(b2, c)) in pairs.iter().enumerate() {
            if b == b2 {
                comp.insert((i, j), pair_pos[&(a, c)]);
            }
        }
    }
    let projection = (0..g.arrows()).map(|f| pair_pos[&(g.src(f), g.tgt(f))]).collect();
    let fr = FiniteGroupoid::from_parts(g.objects(), src, tgt, id, inv, comp)?;
    Ok((fr, projection))
}

//! Goursat's classification of subgroups of a direct product H × K.
//!
//! Every subgroup S ≤ H × K is encoded by a quintuple (A, A₀, B, B₀, θ):
//! A and B are the projections of S, A₀ = {h : (h,e) ∈ S} and
//! B₀ = {k : (e,k) ∈ S} are their normal "kernels", and θ is the induced
//! isomorphism A/A₀ → B/B₀. S is recovered as the pairs whose cosets
//! correspond under θ. Product elements are indexed h·|K| + k, matching
//! `FiniteGroup::direct_product`.

use super::iso::isomorphisms_between;
use super::subgroup::{quotient, subgroups_all, Subgroup};
use super::{FiniteGroup, GroupError};
use std::collections::BTreeSet;

pub const GOURSAT_PRODUCT_CAP: usize = 4096;

#[derive(Debug, Clone)]
pub struct GoursatQuintuple {
    /// Projection of S to H.
    pub a: Subgroup,
    /// Elements of H paired with the K-identity; normal in `a`.
    pub a0: Subgroup,
    /// Projection of S to K.
    pub b: Subgroup,
    /// Elements of K paired with the H-identity; normal in `b`.
    pub b0: Subgroup,
    /// The quotient A/A₀.
    pub a_quotient: FiniteGroup,
    /// The quotient B/B₀.
    pub b_quotient: FiniteGroup,
    /// Coset index map realizing θ: A/A₀ → B/B₀.
    pub theta: Vec<usize>,
    /// Ambient H element → its A/A₀ coset (usize::MAX outside A).
    pub a_coset_of: Vec<usize>,
    /// Ambient K element → its B/B₀ coset (usize::MAX outside B).
    pub b_coset_of: Vec<usize>,
}

impl GoursatQuintuple {
    /// Does the pair (h, k) lie in the subgroup this quintuple encodes?
    pub fn matches(&self, h_elem: usize, k_elem: usize) -> bool {
        let ca = self.a_coset_of[h_elem];
        let cb = self.b_coset_of[k_elem];
        ca != usize::MAX && cb != usize::MAX && self.theta[ca] == cb
    }

    /// Product-index member list of the encoded subgroup, sorted.
    pub fn member_indices(&self, k_order: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &h_elem in self.a.members() {
            for &k_elem in self.b.members() {
                if self.matches(h_elem, k_elem) {
                    out.push(h_elem * k_order + k_elem);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// |S| = |A₀| · |B| (each B-coset of B₀ meets each A-coset once).
    pub fn subgroup_order(&self) -> usize {
        self.a0.order() * self.b.order()
    }
}

/// Coset lookup over the ambient group: element → quotient coset index,
/// usize::MAX outside the subgroup.
fn coset_table(
    ambient: &FiniteGroup,
    sub: &Subgroup,
    normal: &Subgroup,
) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    let (as_grp, embed) = sub.as_group(ambient)?;
    let inner_members: Vec<usize> = normal
        .members()
        .iter()
        .map(|&m| sub.index_of(m).ok_or_else(|| {
            GroupError::NotSubgroup("normal part escapes the subgroup".into())
        }))
        .collect::<Result<_, _>>()?;
    let inner = Subgroup::new(&as_grp, &inner_members)?;
    let (quot, proj) = quotient(&as_grp, &inner)?;
    let mut table = vec![usize::MAX; ambient.order()];
    for (inner_idx, &amb) in embed.iter().enumerate() {
        table[amb] = proj.apply(inner_idx);
    }
    Ok((quot, table))
}

/// All subgroups of H × K, as Goursat quintuples, sorted by member list.
/// Generated directly from quintuple data, so the product's Cayley table is
/// never materialized.
pub fn goursat_subgroups(
    h: &FiniteGroup,
    k: &FiniteGroup,
) -> Result<Vec<GoursatQuintuple>, GroupError> {
    if h.order() * k.order() > GOURSAT_PRODUCT_CAP {
        return Err(GroupError::CapExceeded {
            what: "goursat product order",
            value: h.order() * k.order(),
            cap: GOURSAT_PRODUCT_CAP,
        });
    }
    let subs_h = subgroups_all(h)?;
    let subs_k = subgroups_all(k)?;
    let mut out: Vec<GoursatQuintuple> = Vec::new();
    for a in &subs_h {
        let (a_grp, _) = a.as_group(h)?;
        for a0 in &subs_h {
            if !a0.members().iter().all(|&m| a.contains(m)) {
                continue;
            }
            let a0_inside: Vec<usize> =
                a0.members().iter().map(|&m| a.index_of(m).unwrap()).collect();
            let a0_sub = Subgroup::new(&a_grp, &a0_inside)?;
            if !a0_sub.is_normal(&a_grp) {
                continue;
            }
            let (a_quot, a_coset_of) = coset_table(h, a, a0)?;
            for b in &subs_k {
                let (b_grp, _) = b.as_group(k)?;
                for b0 in &subs_k {
                    if !b0.members().iter().all(|&m| b.contains(m)) {
                        continue;
                    }
                    if a.order() * b0.order() != b.order() * a0.order() {
                        continue; // |A/A0| must equal |B/B0|
                    }
                    let b0_inside: Vec<usize> =
                        b0.members().iter().map(|&m| b.index_of(m).unwrap()).collect();
                    let b0_sub = Subgroup::new(&b_grp, &b0_inside)?;
                    if !b0_sub.is_normal(&b_grp) {
                        continue;
                    }
                    let (b_quot, b_coset_of) = coset_table(k, b, b0)?;
                    for theta in isomorphisms_between(&a_quot, &b_quot)? {
                        out.push(GoursatQuintuple {
                            a: a.clone(),
                            a0: a0.clone(),
                            b: b.clone(),
                            b0: b0.clone(),
                            a_quotient: a_quot.clone(),
                            b_quotient: b_quot.clone(),
                            theta: theta.map().to_vec(),
                            a_coset_of: a_coset_of.clone(),
                            b_coset_of: b_coset_of.clone(),
                        });
                    }
                }
            }
        }
    }
    out.sort_by_key(|q| q.member_indices(k.order()));
    Ok(out)
}

/// Classify an explicit subgroup of H × K (members as product indices
/// h·|K| + k) into its Goursat quintuple. Verifies the subgroup axioms on
/// the member list and that the quintuple reconstructs it exactly.
pub fn duval_classify(
    h: &FiniteGroup,
    k: &FiniteGroup,
    members: &[usize],
) -> Result<GoursatQuintuple, GroupError> {
    let ko = k.order();
    let total = h.order() * ko;
    let set: BTreeSet<usize> = members.iter().copied().collect();
    for &m in &set {
        if m >= total {
            return Err(GroupError::NotSubgroup(format!("member {m} out of range")));
        }
    }
    if !set.contains(&0) {
        return Err(GroupError::NotSubgroup("missing identity".into()));
    }
    for &x in &set {
        let (xh, xk) = (x / ko, x % ko);
        if !set.contains(&(h.inv(xh) * ko + k.inv(xk))) {
            return Err(GroupError::NotSubgroup(format!("missing inverse of {x}")));
        }
        for &y in &set {
            let (yh, yk) = (y / ko, y % ko);
            let p = h.mul(xh, yh) * ko + k.mul(xk, yk);
            if !set.contains(&p) {
                return Err(GroupError::NotSubgroup(format!("not closed: {x}*{y} escapes")));
            }
        }
    }
    let a_members: BTreeSet<usize> = set.iter().map(|&m| m / ko).collect();
    let b_members: BTreeSet<usize> = set.iter().map(|&m| m % ko).collect();
    let a0_members: Vec<usize> =
        a_members.iter().copied().filter(|&x| set.contains(&(x * ko))).collect();
    let b0_members: Vec<usize> =
        b_members.iter().copied().filter(|&y| set.contains(&y)).collect();
    let a = Subgroup::new(h, &a_members.iter().copied().collect::<Vec<_>>())?;
    let b = Subgroup::new(k, &b_members.iter().copied().collect::<Vec<_>>())?;
    let a0 = Subgroup::new(h, &a0_members)?;
    let b0 = Subgroup::new(k, &b0_members)?;
    let (a_quot, a_coset_of) = coset_table(h, &a, &a0)?;
    let (b_quot, b_coset_of) = coset_table(k, &b, &b0)?;
    // θ reads off pairings: the coset of any K-partner of an A-coset member
    let mut theta = vec![usize::MAX; a_quot.order()];
    for &m in &set {
        let (mh, mk) = (m / ko, m % ko);
        let ca = a_coset_of[mh];
        let cb = b_coset_of[mk];
        if theta[ca] == usize::MAX {
            theta[ca] = cb;
        } else if theta[ca] != cb {
            return Err(GroupError::NotSubgroup(
                "coset pairing is not well defined".into(),
            ));
        }
    }
    if theta.iter().any(|&v| v == usize::MAX) {
        return Err(GroupError::NotSubgroup("coset pairing is not total".into()));
    }
    let q = GoursatQuintuple {
        a,
        a0,
        b,
        b0,
        a_quotient: a_quot,
        b_quotient: b_quot,
        theta,
        a_coset_of,
        b_coset_of,
    };
    let rebuilt = q.member_indices(ko);
    let given: Vec<usize> = set.into_iter().collect();
    if rebuilt != given {
        return Err(GroupError::NotSubgroup(
            "quintuple does not reconstruct the subgroup".into(),
        ));
    }
    Ok(q)
}

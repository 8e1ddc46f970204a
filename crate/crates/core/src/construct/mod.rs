//! From factorization data to double groupoids and back: the
//! commuting-square construction on a group with two designated subgroups,
//! its inverse on vacant inputs, and the fibered variant that threads an
//! abelian coordinate through every square.

mod gamma;
mod quadruple;

pub use gamma::{check_equivalence_vacant, gamma, gamma_predicates, lambda};
pub use quadruple::{lambda_section, quadruple_construct, QuadrupleDouble};

use crate::double::DoubleError;
use crate::group::{FiniteGroup, GroupError, Subgroup};
use std::collections::BTreeSet;

/// A group with two designated subgroups, the input of the commuting-square
/// construction.
#[derive(Debug, Clone)]
pub struct MatchedTriple {
    group: FiniteGroup,
    h: Subgroup,
    k: Subgroup,
}

impl MatchedTriple {
    pub fn new(
        group: FiniteGroup,
        h_members: &[usize],
        k_members: &[usize],
    ) -> Result<Self, GroupError> {
        let h = Subgroup::new(&group, h_members)?;
        let k = Subgroup::new(&group, k_members)?;
        Ok(MatchedTriple { group, h, k })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn k(&self) -> &Subgroup {
        &self.k
    }

    /// The two subgroups meet only in the identity.
    pub fn discrete_intersection(&self) -> bool {
        self.h.members().iter().filter(|&&x| self.k.contains(x)).count() == 1
    }

    /// HK and KH agree as subsets of the group.
    pub fn commuting_products(&self) -> bool {
        product_set(&self.group, self.h.members(), self.k.members())
            == product_set(&self.group, self.k.members(), self.h.members())
    }

    /// Every group element is h·k for exactly one pair. With a trivial
    /// intersection the product has |H|·|K| distinct elements, so the size
    /// comparison settles it.
    pub fn exact_factorization(&self) -> bool {
        self.discrete_intersection() && self.h.order() * self.k.order() == self.group.order()
    }
}

/// A matched triple together with an abelian subgroup that both boundary
/// subgroups normalize and meet trivially.
#[derive(Debug, Clone)]
pub struct SemiQuadruple {
    triple: MatchedTriple,
    a: Subgroup,
}

impl SemiQuadruple {
    pub fn new(
        group: FiniteGroup,
        h_members: &[usize],
        k_members: &[usize],
        a_members: &[usize],
    ) -> Result<Self, DoubleError> {
        let triple = MatchedTriple::new(group, h_members, k_members)?;
        let a = Subgroup::new(&triple.group, a_members)?;
        let g = &triple.group;
        if a.members().iter().any(|&x| {
            a.members().iter().any(|&y| g.mul(x, y) != g.mul(y, x))
        }) {
            return Err(DoubleError::PropertyFails("fiber subgroup is not abelian"));
        }
        for (sub, what) in [
            (&triple.h, "horizontal subgroup does not normalize the fiber"),
            (&triple.k, "vertical subgroup does not normalize the fiber"),
        ] {
            for &s in sub.members() {
                if a.members().iter().any(|&x| !a.contains(g.conj(s, x))) {
                    return Err(DoubleError::PropertyFails(what));
                }
            }
        }
        for (sub, what) in [
            (&triple.h, "fiber meets the horizontal subgroup"),
            (&triple.k, "fiber meets the vertical subgroup"),
        ] {
            if a.members().iter().filter(|&&x| sub.contains(x)).count() != 1 {
                return Err(DoubleError::PropertyFails(what));
            }
        }
        if !triple.discrete_intersection() {
            return Err(DoubleError::PropertyFails("boundary subgroups intersect nontrivially"));
        }
        if !triple.commuting_products() {
            return Err(DoubleError::PropertyFails("boundary subgroup products differ"));
        }
        Ok(SemiQuadruple { triple, a })
    }

    pub fn triple(&self) -> &MatchedTriple {
        &self.triple
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.triple.group
    }

    pub fn h(&self) -> &Subgroup {
        &self.triple.h
    }

    pub fn k(&self) -> &Subgroup {
        &self.triple.k
    }

    pub fn a(&self) -> &Subgroup {
        &self.a
    }

    /// The product set AHK exhausts the group.
    pub fn full_factorization(&self) -> bool {
        let g = &self.triple.group;
        let ah: Vec<usize> =
            product_set(g, self.a.members(), self.triple.h.members()).into_iter().collect();
        product_set(g, &ah, self.triple.k.members()).len() == g.order()
    }
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

/// Turn a composition table on squares into a checked group with the stated
/// unit moved to position 0. Returns the group and the element → square
/// table (the swap is its own inverse).
pub(crate) fn group_on_squares(
    table: &[Vec<usize>],
    unit: usize,
) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    let n = table.len();
    let swap: Vec<usize> =
        (0..n).map(|i| if i == unit { 0 } else if i == 0 { unit } else { i }).collect();
    let mut rows = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            rows[swap[x]][swap[y]] = swap[table[x][y]];
        }
    }
    Ok((FiniteGroup::from_mul_table(rows, None)?, swap))
}

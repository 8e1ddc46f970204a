//! Fibered variant of the commuting-square construction: every square
//! carries an extra coordinate from an abelian subgroup, and a maximal
//! exclusive double group with a well-behaved section can be flattened back
//! into such data.

use super::gamma::gamma;
use super::{group_on_squares, SemiQuadruple};
use crate::double::{
    is_exclusive, is_maximal, DoubleError, DoubleFunctor, DoubleGroupoid, RawDoubleGroupoid,
};
use std::collections::{BTreeMap, BTreeSet};

/// The fibered double group, its slim base, and the canonical section
/// (fiber coordinate pinned to the identity) connecting them.
#[derive(Debug)]
pub struct QuadrupleDouble {
    pub dg: DoubleGroupoid,
    pub base: DoubleGroupoid,
    pub section: DoubleFunctor,
}

/// Squares are (base square, a) with a drawn from the abelian subgroup; the
/// fiber coordinate of a composite is a·(e b e⁻¹) where e is the leading
/// edge of the first square (top for side-by-side pasting, left for
/// stacking).
pub fn quadruple_construct(q: &SemiQuadruple) -> Result<QuadrupleDouble, DoubleError> {
    let g = q.group();
    let a = q.a();
    let base = gamma(q.triple())?;
    let m = a.order();
    let idx = |s: usize, ai: usize| s * m + ai;
    let fibered = |comps: &BTreeMap<(usize, usize), usize>,
                   edge_value: &dyn Fn(usize) -> usize| {
        let mut out = BTreeMap::new();
        for (&(x, y), &z) in comps {
            let ev = edge_value(x);
            for (ai, &av) in a.members().iter().enumerate() {
                for (bi, &bv) in a.members().iter().enumerate() {
                    let f = g.mul(av, g.conj(ev, bv));
                    let fi = a.index_of(f).expect("boundary subgroups normalize the fiber");
                    out.insert((idx(x, ai), idx(y, bi)), idx(z, fi));
                }
            }
        }
        out
    };
    let h_members = q.h().members();
    let k_members = q.k().members();
    let base_raw = base.raw();
    let sq_h_comp = fibered(&base_raw.sq_h_comp, &|x| h_members[base.top(x)]);
    let sq_v_comp = fibered(&base_raw.sq_v_comp, &|x| k_members[base.left(x)]);
    let ae = a.index_of(0).expect("subgroup carries the identity");
    let raw = RawDoubleGroupoid {
        objects: 1,
        h_src: base_raw.h_src.clone(),
        h_tgt: base_raw.h_tgt.clone(),
        v_src: base_raw.v_src.clone(),
        v_tgt: base_raw.v_tgt.clone(),
        top: (0..base.squares() * m).map(|i| base.top(i / m)).collect(),
        bottom: (0..base.squares() * m).map(|i| base.bottom(i / m)).collect(),
        left: (0..base.squares() * m).map(|i| base.left(i / m)).collect(),
        right: (0..base.squares() * m).map(|i| base.right(i / m)).collect(),
        h_id: base_raw.h_id.clone(),
        v_id: base_raw.v_id.clone(),
        h_unit: base_raw.h_unit.iter().map(|&s| idx(s, ae)).collect(),
        v_unit: base_raw.v_unit.iter().map(|&s| idx(s, ae)).collect(),
        h_comp: base_raw.h_comp.clone(),
        v_comp: base_raw.v_comp.clone(),
        sq_h_comp,
        sq_v_comp,
    };
    let dg = DoubleGroupoid::new(raw)?;
    let section = DoubleFunctor::new(
        &base,
        &dg,
        vec![0],
        (0..base.h_arrows()).collect(),
        (0..base.v_arrows()).collect(),
        (0..base.squares()).map(|s| idx(s, ae)).collect(),
    )?;
    Ok(QuadrupleDouble { dg, base, section })
}

/// Flatten a maximal exclusive double group with a section back into
/// quadruple data. Elements of the square group are all squares; composing
/// X and Y fills the off-diagonal cells of the 2x2 grid with section
/// squares. Returns the quadruple (square group, the two unit-square
/// images, the all-identity-boundary fiber) and the element → square table.
pub fn lambda_section(
    dg: &DoubleGroupoid,
    frame: &DoubleGroupoid,
    section: &DoubleFunctor,
) -> Result<(SemiQuadruple, Vec<usize>), DoubleError> {
    if dg.objects() != 1 {
        return Err(DoubleError::Unsupported(
            "square-group extraction needs a single object".into(),
        ));
    }
    if !(is_maximal(dg) && is_exclusive(dg)) {
        return Err(DoubleError::PropertyFails("input is not maximal and exclusive"));
    }
    // re-validate the section as a double functor out of the stated frame
    // rather than trusting the caller's pairing
    let section = DoubleFunctor::new(
        frame,
        dg,
        (0..frame.objects()).map(|x| section.object(x)).collect(),
        (0..frame.h_arrows()).map(|f| section.h_arrow(f)).collect(),
        (0..frame.v_arrows()).map(|u| section.v_arrow(u)).collect(),
        (0..frame.squares()).map(|c| section.square(c)).collect(),
    )?;
    if frame.h_arrows() != dg.h_arrows()
        || frame.v_arrows() != dg.v_arrows()
        || (0..frame.h_arrows()).any(|f| section.h_arrow(f) != f)
        || (0..frame.v_arrows()).any(|u| section.v_arrow(u) != u)
    {
        return Err(DoubleError::PropertyFails("section does not fix the edge groupoids"));
    }
    if (0..frame.squares()).any(|c| dg.boundary(section.square(c)) != frame.boundary(c)) {
        return Err(DoubleError::PropertyFails("section squares leave their boundary class"));
    }
    let mut by_lb = BTreeMap::new();
    let mut by_tr = BTreeMap::new();
    for c in 0..frame.squares() {
        if by_lb.insert((frame.left(c), frame.bottom(c)), c).is_some()
            || by_tr.insert((frame.top(c), frame.right(c)), c).is_some()
        {
            return Err(DoubleError::PropertyFails("frame is not slim"));
        }
    }
    let n = dg.squares();
    let mut table = vec![vec![0usize; n]; n];
    for (x, row) in table.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            let u = by_lb
                .get(&(dg.right(x), dg.top(y)))
                .ok_or(DoubleError::PropertyFails("frame misses a source pair"))?;
            let w = by_tr
                .get(&(dg.bottom(x), dg.left(y)))
                .ok_or(DoubleError::PropertyFails("frame misses a target pair"))?;
            let upper = dg.sq_h_comp(x, section.square(*u));
            let lower = dg.sq_h_comp(section.square(*w), y);
            *cell = dg.sq_v_comp(upper, lower);
        }
    }
    let (group, to_square) = group_on_squares(&table, dg.double_id(0))?;
    let elem_of = &to_square;
    let hm: BTreeSet<usize> = (0..dg.h_arrows()).map(|f| elem_of[dg.v_unit(f)]).collect();
    let km: BTreeSet<usize> = (0..dg.v_arrows()).map(|u| elem_of[dg.h_unit(u)]).collect();
    let dd = dg.boundary(dg.double_id(0));
    let am: BTreeSet<usize> =
        (0..n).filter(|&x| dg.boundary(x) == dd).map(|x| elem_of[x]).collect();
    let q = SemiQuadruple::new(
        group,
        &hm.into_iter().collect::<Vec<_>>(),
        &km.into_iter().collect::<Vec<_>>(),
        &am.into_iter().collect::<Vec<_>>(),
    )?;
    if !q.full_factorization() {
        return Err(DoubleError::PropertyFails(
            "square group is not the fiber-boundary product",
        ));
    }
    Ok((q, to_square))
}

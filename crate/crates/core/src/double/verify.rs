//! Staged axiom verification for raw double-groupoid tables.
//!
//! Stages run in a fixed order and the first failure short-circuits: a
//! witness at stage n is only meaningful once stages before n hold.
//! Witnesses are the first offender in ascending index order.

use super::RawDoubleGroupoid;
use crate::report::{Check, Report};
use std::collections::BTreeMap;

/// Stage names in execution order.
pub const STAGES: [&str; 6] =
    ["well-formed", "compatibility", "units", "associativity", "interchange", "inverses"];

/// Run every stage; stop after the first failing one.
pub fn verify(raw: &RawDoubleGroupoid) -> Report {
    let mut report = Report::new(format!(
        "double groupoid ({} objects, {} h-arrows, {} v-arrows, {} squares)",
        raw.objects,
        raw.h_arrows(),
        raw.v_arrows(),
        raw.squares()
    ));
    let stages: [(&str, fn(&RawDoubleGroupoid) -> Option<String>); 6] = [
        ("well-formed", well_formed),
        ("compatibility", compatibility),
        ("units", units),
        ("associativity", associativity),
        ("interchange", interchange),
        ("inverses", inverses),
    ];
    for (name, stage) in stages {
        match stage(raw) {
            None => report.push(Check::pass(name)),
            Some(witness) => {
                report.push(Check::fail(name, witness));
                break;
            }
        }
    }
    report
}

fn well_formed(raw: &RawDoubleGroupoid) -> Option<String> {
    let (h, v, s) = (raw.h_arrows(), raw.v_arrows(), raw.squares());
    let sized: [(&str, usize, usize); 9] = [
        ("h_tgt", raw.h_tgt.len(), h),
        ("v_tgt", raw.v_tgt.len(), v),
        ("bottom", raw.bottom.len(), s),
        ("left", raw.left.len(), s),
        ("right", raw.right.len(), s),
        ("h_id", raw.h_id.len(), raw.objects),
        ("v_id", raw.v_id.len(), raw.objects),
        ("h_unit", raw.h_unit.len(), v),
        ("v_unit", raw.v_unit.len(), h),
    ];
    for (what, got, want) in sized {
        if got != want {
            return Some(format!("{what} has length {got}, expected {want}"));
        }
    }
    let ranged: [(&str, &[usize], usize); 12] = [
        ("h_src", &raw.h_src, raw.objects),
        ("h_tgt", &raw.h_tgt, raw.objects),
        ("v_src", &raw.v_src, raw.objects),
        ("v_tgt", &raw.v_tgt, raw.objects),
        ("top", &raw.top, h),
        ("bottom", &raw.bottom, h),
        ("left", &raw.left, v),
        ("right", &raw.right, v),
        ("h_id", &raw.h_id, h),
        ("v_id", &raw.v_id, v),
        ("h_unit", &raw.h_unit, s),
        ("v_unit", &raw.v_unit, s),
    ];
    for (what, table, bound) in ranged {
        if let Some((i, &x)) = table.iter().enumerate().find(|(_, &x)| x >= bound) {
            return Some(format!("{what}[{i}] = {x}, out of range (< {bound})"));
        }
    }
    let maps: [(&str, &BTreeMap<(usize, usize), usize>, usize); 4] = [
        ("h_comp", &raw.h_comp, h),
        ("v_comp", &raw.v_comp, v),
        ("sq_h_comp", &raw.sq_h_comp, s),
        ("sq_v_comp", &raw.sq_v_comp, s),
    ];
    for (what, table, bound) in maps {
        for (&(f, g), &r) in table {
            for x in [f, g, r] {
                if x >= bound {
                    return Some(format!(
                        "{what}[({f},{g})] = {r}: index {x} out of range (< {bound})"
                    ));
                }
            }
        }
    }
    None
}

fn compatibility(raw: &RawDoubleGroupoid) -> Option<String> {
    for a in 0..raw.objects {
        let f = raw.h_id[a];
        if raw.h_src[f] != a || raw.h_tgt[f] != a {
            return Some(format!("h_id[{a}] = {f} is not a loop at {a}"));
        }
        let u = raw.v_id[a];
        if raw.v_src[u] != a || raw.v_tgt[u] != a {
            return Some(format!("v_id[{a}] = {u} is not a loop at {a}"));
        }
    }
    // corner equations: each square's edges meet at four shared corners
    for x in 0..raw.squares() {
        let (t, l, b, r) = (raw.top[x], raw.left[x], raw.bottom[x], raw.right[x]);
        let corners = [
            ("top-left", raw.v_src[l], raw.h_src[t]),
            ("top-right", raw.v_src[r], raw.h_tgt[t]),
            ("bottom-left", raw.v_tgt[l], raw.h_src[b]),
            ("bottom-right", raw.v_tgt[r], raw.h_tgt[b]),
        ];
        for (name, via_v, via_h) in corners {
            if via_v != via_h {
                return Some(format!(
                    "square {x}: {name} corner disagrees ({via_v} via vertical edge, {via_h} via horizontal)"
                ));
            }
        }
    }
    // unit squares must frame their arrow with identities
    for u in 0..raw.v_arrows() {
        let x = raw.h_unit[u];
        if raw.left[x] != u || raw.right[x] != u {
            return Some(format!("h_unit[{u}] = {x} does not have {u} on both vertical edges"));
        }
        if raw.top[x] != raw.h_id[raw.v_src[u]] || raw.bottom[x] != raw.h_id[raw.v_tgt[u]] {
            return Some(format!("h_unit[{u}] = {x} has non-identity horizontal edges"));
        }
    }
    for f in 0..raw.h_arrows() {
        let x = raw.v_unit[f];
        if raw.top[x] != f || raw.bottom[x] != f {
            return Some(format!("v_unit[{f}] = {x} does not have {f} on both horizontal edges"));
        }
        if raw.left[x] != raw.v_id[raw.h_src[f]] || raw.right[x] != raw.v_id[raw.h_tgt[f]] {
            return Some(format!("v_unit[{f}] = {x} has non-identity vertical edges"));
        }
    }
    // arrow compositions: keyed exactly on composable pairs, endpoints match
    if let Some(w) = arrow_comp_domain("h_comp", &raw.h_comp, &raw.h_src, &raw.h_tgt) {
        return Some(w);
    }
    if let Some(w) = arrow_comp_domain("v_comp", &raw.v_comp, &raw.v_src, &raw.v_tgt) {
        return Some(w);
    }
    // square compositions: keyed exactly on edge-matched pairs, composite
    // boundary coherent with the arrow compositions
    if let Some(w) = square_comp_domain(raw, true) {
        return Some(w);
    }
    if let Some(w) = square_comp_domain(raw, false) {
        return Some(w);
    }
    None
}

fn arrow_comp_domain(
    what: &str,
    comp: &BTreeMap<(usize, usize), usize>,
    src: &[usize],
    tgt: &[usize],
) -> Option<String> {
    for (&(f, g), &r) in comp {
        if tgt[f] != src[g] {
            return Some(format!("{what} has key ({f},{g}) but the arrows do not meet"));
        }
        if src[r] != src[f] || tgt[r] != tgt[g] {
            return Some(format!("{what}[({f},{g})] = {r} has wrong endpoints"));
        }
    }
    for f in 0..src.len() {
        for g in 0..src.len() {
            if tgt[f] == src[g] && !comp.contains_key(&(f, g)) {
                return Some(format!("{what} is missing composable pair ({f},{g})"));
            }
        }
    }
    None
}

fn square_comp_domain(raw: &RawDoubleGroupoid, horizontal: bool) -> Option<String> {
    let what = if horizontal { "sq_h_comp" } else { "sq_v_comp" };
    let comp = if horizontal { &raw.sq_h_comp } else { &raw.sq_v_comp };
    let s = raw.squares();
    // shared edge: right-to-left when pasting sideways, bottom-to-top stacked
    let (out_edge, in_edge): (&[usize], &[usize]) = if horizontal {
        (&raw.right, &raw.left)
    } else {
        (&raw.bottom, &raw.top)
    };
    for (&(x, y), &z) in comp {
        if out_edge[x] != in_edge[y] {
            return Some(format!("{what} has key ({x},{y}) but the squares do not share an edge"));
        }
        let ok = if horizontal {
            raw.left[z] == raw.left[x]
                && raw.right[z] == raw.right[y]
                && Some(&raw.top[z]) == raw.h_comp.get(&(raw.top[x], raw.top[y]))
                && Some(&raw.bottom[z]) == raw.h_comp.get(&(raw.bottom[x], raw.bottom[y]))
        } else {
            raw.top[z] == raw.top[x]
                && raw.bottom[z] == raw.bottom[y]
                && Some(&raw.left[z]) == raw.v_comp.get(&(raw.left[x], raw.left[y]))
                && Some(&raw.right[z]) == raw.v_comp.get(&(raw.right[x], raw.right[y]))
        };
        if !ok {
            return Some(format!("{what}[({x},{y})] = {z} has incoherent boundary"));
        }
    }
    for x in 0..s {
        for y in 0..s {
            if out_edge[x] == in_edge[y] && !comp.contains_key(&(x, y)) {
                return Some(format!("{what} is missing composable pair ({x},{y})"));
            }
        }
    }
    None
}

fn units(raw: &RawDoubleGroupoid) -> Option<String> {
    for f in 0..raw.h_arrows() {
        let l = raw.h_comp.get(&(raw.h_id[raw.h_src[f]], f));
        let r = raw.h_comp.get(&(f, raw.h_id[raw.h_tgt[f]]));
        if l != Some(&f) || r != Some(&f) {
            return Some(format!("identity arrows are not units at h-arrow {f}"));
        }
    }
    for u in 0..raw.v_arrows() {
        let l = raw.v_comp.get(&(raw.v_id[raw.v_src[u]], u));
        let r = raw.v_comp.get(&(u, raw.v_id[raw.v_tgt[u]]));
        if l != Some(&u) || r != Some(&u) {
            return Some(format!("identity arrows are not units at v-arrow {u}"));
        }
    }
    for x in 0..raw.squares() {
        let lu = raw.sq_h_comp.get(&(raw.h_unit[raw.left[x]], x));
        let ru = raw.sq_h_comp.get(&(x, raw.h_unit[raw.right[x]]));
        if lu != Some(&x) || ru != Some(&x) {
            return Some(format!("unit squares are not horizontal units at square {x}"));
        }
        let tu = raw.sq_v_comp.get(&(raw.v_unit[raw.top[x]], x));
        let bu = raw.sq_v_comp.get(&(x, raw.v_unit[raw.bottom[x]]));
        if tu != Some(&x) || bu != Some(&x) {
            return Some(format!("unit squares are not vertical units at square {x}"));
        }
    }
    // the two unit constructions agree on identity arrows
    for a in 0..raw.objects {
        if raw.h_unit[raw.v_id[a]] != raw.v_unit[raw.h_id[a]] {
            return Some(format!("double identity at object {a} is ambiguous"));
        }
    }
    None
}

fn associativity(raw: &RawDoubleGroupoid) -> Option<String> {
    if let Some((f, g, h)) = assoc_violation(&raw.h_comp, raw.h_arrows(), &raw.h_src, &raw.h_tgt)
    {
        return Some(format!("h_comp associativity fails at ({f},{g},{h})"));
    }
    if let Some((f, g, h)) = assoc_violation(&raw.v_comp, raw.v_arrows(), &raw.v_src, &raw.v_tgt)
    {
        return Some(format!("v_comp associativity fails at ({f},{g},{h})"));
    }
    if let Some((x, y, z)) =
        assoc_violation(&raw.sq_h_comp, raw.squares(), &raw.left, &raw.right)
    {
        return Some(format!("sq_h_comp associativity fails at ({x},{y},{z})"));
    }
    if let Some((x, y, z)) = assoc_violation(&raw.sq_v_comp, raw.squares(), &raw.top, &raw.bottom)
    {
        return Some(format!("sq_v_comp associativity fails at ({x},{y},{z})"));
    }
    None
}

/// Generic associativity scan: `in_key`/`out_key` are whatever edge data
/// indexes composability (endpoints for arrows, shared edges for squares).
fn assoc_violation(
    comp: &BTreeMap<(usize, usize), usize>,
    n: usize,
    in_key: &[usize],
    out_key: &[usize],
) -> Option<(usize, usize, usize)> {
    let mut by_in: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        by_in.entry(in_key[x]).or_default().push(x);
    }
    let empty = Vec::new();
    for f in 0..n {
        for &g in by_in.get(&out_key[f]).unwrap_or(&empty) {
            let fg = comp[&(f, g)];
            for &h in by_in.get(&out_key[g]).unwrap_or(&empty) {
                if comp[&(fg, h)] != comp[&(f, comp[&(g, h)])] {
                    return Some((f, g, h));
                }
            }
        }
    }
    None
}

fn interchange(raw: &RawDoubleGroupoid) -> Option<String> {
    // index squares by left edge, by top edge, and by both to enumerate 2x2
    // arrangements without an all-pairs scan
    let s = raw.squares();
    let mut by_left: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut by_both: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for x in 0..s {
        by_left.entry(raw.left[x]).or_default().push(x);
        by_both.entry((raw.left[x], raw.top[x])).or_default().push(x);
    }
    let mut by_top: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..s {
        by_top.entry(raw.top[x]).or_default().push(x);
    }
    let empty = Vec::new();
    for a in 0..s {
        for &b in by_left.get(&raw.right[a]).unwrap_or(&empty) {
            let ab = raw.sq_h_comp[&(a, b)];
            for &c in by_top.get(&raw.bottom[a]).unwrap_or(&empty) {
                let ac = raw.sq_v_comp[&(a, c)];
                for &d in by_both.get(&(raw.right[c], raw.bottom[b])).unwrap_or(&empty) {
                    let row_then_stack = raw.sq_v_comp[&(ab, raw.sq_h_comp[&(c, d)])];
                    let stack_then_row = raw.sq_h_comp[&(ac, raw.sq_v_comp[&(b, d)])];
                    if row_then_stack != stack_then_row {
                        return Some(format!(
                            "interchange fails on the 2x2 arrangement ({a},{b},{c},{d})"
                        ));
                    }
                }
            }
        }
    }
    None
}

fn inverses(raw: &RawDoubleGroupoid) -> Option<String> {
    match inverse_tables(raw) {
        Ok(_) => None,
        Err(w) => Some(w),
    }
}

/// Find two-sided inverses for both arrow directions and both square
/// compositions by scan. Errors with a witness description if any element
/// lacks one.
#[allow(clippy::type_complexity)]
pub(super) fn inverse_tables(
    raw: &RawDoubleGroupoid,
) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>), String> {
    let h_inv = scan_inverses(
        &raw.h_comp,
        raw.h_arrows(),
        |f| raw.h_id[raw.h_src[f]],
        |f| raw.h_id[raw.h_tgt[f]],
    )
    .map_err(|f| format!("h-arrow {f} has no two-sided inverse"))?;
    let v_inv = scan_inverses(
        &raw.v_comp,
        raw.v_arrows(),
        |u| raw.v_id[raw.v_src[u]],
        |u| raw.v_id[raw.v_tgt[u]],
    )
    .map_err(|u| format!("v-arrow {u} has no two-sided inverse"))?;
    let sq_h_inv = scan_inverses(
        &raw.sq_h_comp,
        raw.squares(),
        |x| raw.h_unit[raw.left[x]],
        |x| raw.h_unit[raw.right[x]],
    )
    .map_err(|x| format!("square {x} has no horizontal inverse"))?;
    let sq_v_inv = scan_inverses(
        &raw.sq_v_comp,
        raw.squares(),
        |x| raw.v_unit[raw.top[x]],
        |x| raw.v_unit[raw.bottom[x]],
    )
    .map_err(|x| format!("square {x} has no vertical inverse"))?;
    Ok((h_inv, v_inv, sq_h_inv, sq_v_inv))
}

fn scan_inverses(
    comp: &BTreeMap<(usize, usize), usize>,
    n: usize,
    unit_at_src: impl Fn(usize) -> usize,
    unit_at_tgt: impl Fn(usize) -> usize,
) -> Result<Vec<usize>, usize> {
    let mut inv = vec![usize::MAX; n];
    for x in 0..n {
        let found = (0..n).find(|&y| {
            comp.get(&(x, y)) == Some(&unit_at_src(x)) && comp.get(&(y, x)) == Some(&unit_at_tgt(x))
        });
        match found {
            Some(y) => inv[x] = y,
            None => return Err(x),
        }
    }
    Ok(inv)
}

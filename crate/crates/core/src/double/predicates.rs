//! Structural predicates. Each one is computed two ways, by the definition
//! and by its characterization through the core structures, and the two
//! answers are asserted to agree before returning.

use super::ops::{core_bundle, core_groupoid};
use super::DoubleGroupoid;

/// At most one square over any full boundary. Characterization: every core
/// bundle fiber is trivial.
pub fn is_slim(dg: &DoubleGroupoid) -> bool {
    let by_def = dg.squares_by_boundary().values().all(|v| v.len() <= 1);
    let bundle = core_bundle(dg).expect("verified structure has a core bundle");
    let by_core = bundle.iter().all(|(g, _)| g.order() == 1);
    assert_eq!(by_def, by_core, "slim: definition and fiber characterization disagree");
    by_def
}

/// The target pair (bottom, right) of a square determines its sources.
/// Characterization: every identity-target square has identity sources too,
/// i.e. the core groupoid collapses onto the core bundle.
pub fn is_exclusive(dg: &DoubleGroupoid) -> bool {
    let mut by_def = true;
    'outer: for x in 0..dg.squares() {
        for y in 0..dg.squares() {
            if dg.bottom(x) == dg.bottom(y)
                && dg.right(x) == dg.right(y)
                && (dg.top(x) != dg.top(y) || dg.left(x) != dg.left(y))
            {
                by_def = false;
                break 'outer;
            }
        }
    }
    let (_, core_squares) = core_groupoid(dg).expect("verified structure has a core groupoid");
    let bundle_total: usize = (0..dg.objects()).map(|a| dg.bundle_squares(a).len()).sum();
    let by_core = core_squares.len() == bundle_total;
    assert_eq!(by_def, by_core, "exclusive: definition and core characterization disagree");
    by_def
}

/// Every compatible target pair (a horizontal and a vertical arrow into a
/// common corner) is the target pair of some square.
pub fn is_maximal(dg: &DoubleGroupoid) -> bool {
    for b in 0..dg.h_arrows() {
        for r in 0..dg.v_arrows() {
            if dg.h_tgt(b) != dg.v_tgt(r) {
                continue;
            }
            let hit = (0..dg.squares()).any(|x| dg.bottom(x) == b && dg.right(x) == r);
            if !hit {
                return false;
            }
        }
    }
    true
}

/// Every meeting (left, bottom) edge pair — a source of one kind and a
/// target of the other — bounds exactly one square. Checked against the
/// conjunction slim ∧ exclusive ∧ maximal, to which it is equivalent via
/// the horizontal-flip bijection.
pub fn is_vacant(dg: &DoubleGroupoid) -> bool {
    let mut count: std::collections::BTreeMap<(usize, usize), usize> =
        std::collections::BTreeMap::new();
    for x in 0..dg.squares() {
        *count.entry((dg.left(x), dg.bottom(x))).or_default() += 1;
    }
    let mut by_def = true;
    'outer: for l in 0..dg.v_arrows() {
        for b in 0..dg.h_arrows() {
            if dg.v_tgt(l) != dg.h_src(b) {
                continue;
            }
            if count.get(&(l, b)).copied().unwrap_or(0) != 1 {
                by_def = false;
                break 'outer;
            }
        }
    }
    let by_parts = is_slim(dg) && is_exclusive(dg) && is_maximal(dg);
    assert_eq!(by_def, by_parts, "vacant: definition and slim∧exclusive∧maximal disagree");
    by_def
}

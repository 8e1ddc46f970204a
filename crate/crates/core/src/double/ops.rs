//! Core structures of a double groupoid: the diagonal groupoid of squares
//! with identity targets, the abelian bundle of all-identity-boundary
//! squares, translation and transport between squares, and the assembled
//! core diagram with its exactness check.

use super::{DoubleError, DoubleGroupoid};
use crate::group::FiniteGroup;
use crate::groupoid::FiniteGroupoid;
use crate::report::{Check, Report};
use std::collections::BTreeMap;

/// The groupoid of squares whose targets are identities, composed
/// diagonally: tgt of a square is its base corner, src its opposite corner,
/// and X ⋄ Y glues X onto Y through the units. Returns the groupoid and the
/// arrow → square table.
pub fn core_groupoid(dg: &DoubleGroupoid) -> Result<(FiniteGroupoid, Vec<usize>), DoubleError> {
    let squares = dg.core_squares();
    let pos: BTreeMap<usize, usize> = squares.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let src: Vec<usize> = squares.iter().map(|&x| dg.h_src(dg.top(x))).collect();
    let tgt: Vec<usize> = squares.iter().map(|&x| dg.core_base(x)).collect();
    let id: Vec<usize> = (0..dg.objects()).map(|a| pos[&dg.double_id(a)]).collect();
    // X⁻¹ = stack(horizontal inverse of X, unit on left(X)⁻¹)
    let inv: Vec<usize> = squares
        .iter()
        .map(|&x| {
            let flipped = dg.sq_h_inv(x);
            let y = dg.sq_v_comp(flipped, dg.h_unit(dg.v_inv(dg.left(x))));
            pos[&y]
        })
        .collect();
    let mut comp = BTreeMap::new();
    for (i, &x) in squares.iter().enumerate() {
        for (j, &y) in squares.iter().enumerate() {
            if tgt[i] == src[j] {
                comp.insert((i, j), pos[&dg.glue(x, y)]);
            }
        }
    }
    let g = FiniteGroupoid::from_parts(dg.objects(), src, tgt, id, inv, comp)?;
    Ok((g, squares))
}

/// Per-object group of squares with all-identity boundary, under horizontal
/// pasting, with the double identity first. Returns group and element →
/// square tables.
pub fn core_bundle(dg: &DoubleGroupoid) -> Result<Vec<(FiniteGroup, Vec<usize>)>, DoubleError> {
    (0..dg.objects())
        .map(|a| {
            let mut squares = dg.bundle_squares(a);
            squares.sort_by_key(|&x| (x != dg.double_id(a), x));
            let pos = |x: usize| squares.iter().position(|&y| y == x).unwrap();
            let rows: Vec<Vec<usize>> = squares
                .iter()
                .map(|&x| squares.iter().map(|&y| pos(dg.sq_h_comp(x, y))).collect())
                .collect();
            let g = FiniteGroup::from_mul_table(rows, None)?;
            Ok((g, squares))
        })
        .collect()
}

/// The fiber argument behind the bundle structure: on all-identity-boundary
/// squares the two pastings coincide and are commutative.
pub fn eckmann_hilton_check(dg: &DoubleGroupoid) -> Report {
    let mut report = Report::new("core bundle structure");
    let mut coincide = Check::pass("pastings-coincide");
    let mut abelian = Check::pass("abelian");
    'outer: for a in 0..dg.objects() {
        let squares = dg.bundle_squares(a);
        for &x in &squares {
            for &y in &squares {
                if dg.sq_h_comp(x, y) != dg.sq_v_comp(x, y) {
                    coincide = Check::fail(
                        "pastings-coincide",
                        format!("squares ({x},{y}) at object {a}"),
                    );
                    break 'outer;
                }
                if dg.sq_h_comp(x, y) != dg.sq_h_comp(y, x) {
                    abelian =
                        Check::fail("abelian", format!("squares ({x},{y}) at object {a}"));
                    break 'outer;
                }
            }
        }
    }
    report.push(coincide);
    report.push(abelian);
    report
}

/// The unique all-identity-boundary square carrying one square to another
/// over the same full boundary; uniqueness is confirmed by exhausting the
/// fiber.
pub fn translation_element(
    dg: &DoubleGroupoid,
    x: usize,
    y: usize,
) -> Result<usize, DoubleError> {
    if dg.boundary(x) != dg.boundary(y) {
        return Err(DoubleError::BoundariesDiffer { x, y });
    }
    let corner = dg.h_src(dg.top(y));
    let hits: Vec<usize> = dg
        .bundle_squares(corner)
        .into_iter()
        .filter(|&u| dg.glue(u, y) == x)
        .collect();
    match hits.as_slice() {
        [u] => Ok(*u),
        _ => Err(DoubleError::TranslationNotUnique { x, y, count: hits.len() }),
    }
}

/// The unique identity-target square carrying one square to another over the
/// same target pair (bottom and right edges).
pub fn target_transport(dg: &DoubleGroupoid, x: usize, y: usize) -> Result<usize, DoubleError> {
    if dg.bottom(x) != dg.bottom(y) || dg.right(x) != dg.right(y) {
        return Err(DoubleError::TargetsDiffer { x, y });
    }
    let corner = dg.h_src(dg.top(y));
    let hits: Vec<usize> = dg
        .core_squares()
        .into_iter()
        .filter(|&t| dg.core_base(t) == corner && dg.glue(t, y) == x)
        .collect();
    match hits.as_slice() {
        [t] => Ok(*t),
        _ => Err(DoubleError::TranslationNotUnique { x, y, count: hits.len() }),
    }
}

/// The diamond of groupoids around a double groupoid: edge groupoids on the
/// outside, the core groupoid in the middle, the abelian bundle inside, with
/// the two boundary projections and the bundle inclusion as tables.
#[derive(Debug, Clone)]
pub struct CoreDiagram {
    pub core_bundle: Vec<(FiniteGroup, Vec<usize>)>,
    pub core_groupoid: FiniteGroupoid,
    /// Core-groupoid arrow → square.
    pub core_squares: Vec<usize>,
    pub horizontal_boundary: FiniteGroupoid,
    pub vertical_boundary: FiniteGroupoid,
    /// Core-groupoid arrow → its top edge in the horizontal boundary.
    pub to_horizontal: Vec<usize>,
    /// Core-groupoid arrow → its left edge in the vertical boundary.
    pub to_vertical: Vec<usize>,
    /// Per object: bundle element → core-groupoid arrow.
    pub bundle_inclusion: Vec<Vec<usize>>,
}

pub fn core_diagram(dg: &DoubleGroupoid) -> Result<CoreDiagram, DoubleError> {
    let horizontal_boundary = FiniteGroupoid::from_parts(
        dg.objects(),
        dg.raw().h_src.clone(),
        dg.raw().h_tgt.clone(),
        dg.raw().h_id.clone(),
        (0..dg.h_arrows()).map(|f| dg.h_inv(f)).collect(),
        dg.raw().h_comp.clone(),
    )?;
    let vertical_boundary = FiniteGroupoid::from_parts(
        dg.objects(),
        dg.raw().v_src.clone(),
        dg.raw().v_tgt.clone(),
        dg.raw().v_id.clone(),
        (0..dg.v_arrows()).map(|u| dg.v_inv(u)).collect(),
        dg.raw().v_comp.clone(),
    )?;
    let (core, core_squares) = core_groupoid(dg)?;
    let bundle = core_bundle(dg)?;
    let arrow_of_square: BTreeMap<usize, usize> =
        core_squares.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let to_horizontal = core_squares.iter().map(|&x| dg.top(x)).collect();
    let to_vertical = core_squares.iter().map(|&x| dg.left(x)).collect();
    let bundle_inclusion = bundle
        .iter()
        .map(|(_, squares)| squares.iter().map(|x| arrow_of_square[x]).collect())
        .collect();
    Ok(CoreDiagram {
        core_bundle: bundle,
        core_groupoid: core,
        core_squares,
        horizontal_boundary,
        vertical_boundary,
        to_horizontal,
        to_vertical,
        bundle_inclusion,
    })
}

/// Check the diagram is exact: both projections are functors onto the
/// boundaries, the inclusion embeds the bundle, and the kernel of the paired
/// projection is exactly the included bundle.
pub fn exactness_check(cd: &CoreDiagram) -> Report {
    let mut report = Report::new("core diagram");
    let core = &cd.core_groupoid;

    let mut proj = Check::pass("projections-are-functors");
    'proj: for (name, table, boundary) in [
        ("horizontal", &cd.to_horizontal, &cd.horizontal_boundary),
        ("vertical", &cd.to_vertical, &cd.vertical_boundary),
    ] {
        for f in 0..core.arrows() {
            if boundary.src(table[f]) != core.src(f) || boundary.tgt(table[f]) != core.tgt(f) {
                proj = Check::fail(
                    "projections-are-functors",
                    format!("{name} projection breaks endpoints at arrow {f}"),
                );
                break 'proj;
            }
        }
        for a in 0..core.objects() {
            if table[core.id(a)] != boundary.id(a) {
                proj = Check::fail(
                    "projections-are-functors",
                    format!("{name} projection misses the identity at object {a}"),
                );
                break 'proj;
            }
        }
        for (&(f, g), &h) in core.comp_table() {
            if boundary.comp(table[f], table[g]) != table[h] {
                proj = Check::fail(
                    "projections-are-functors",
                    format!("{name} projection breaks composition at ({f},{g})"),
                );
                break 'proj;
            }
        }
    }
    report.push(proj);

    let mut incl = Check::pass("bundle-includes");
    'incl: for (a, (group, _)) in cd.core_bundle.iter().enumerate() {
        let table = &cd.bundle_inclusion[a];
        if table.len() != group.order() {
            incl = Check::fail("bundle-includes", format!("inclusion at object {a} is ragged"));
            break;
        }
        for x in 0..group.order() {
            for y in 0..group.order() {
                if core.comp(table[x], table[y]) != table[group.mul(x, y)] {
                    incl = Check::fail(
                        "bundle-includes",
                        format!("inclusion at object {a} breaks multiplication at ({x},{y})"),
                    );
                    break 'incl;
                }
            }
        }
    }
    report.push(incl);

    // kernel of the paired projection = included bundle
    let mut kernel = Check::pass("kernel-is-bundle");
    let mut included: Vec<bool> = vec![false; core.arrows()];
    for table in &cd.bundle_inclusion {
        for &f in table {
            included[f] = true;
        }
    }
    for f in 0..core.arrows() {
        let in_kernel = {
            let a = core.src(f);
            let b = core.tgt(f);
            a == b
                && cd.to_horizontal[f] == cd.horizontal_boundary.id(a)
                && cd.to_vertical[f] == cd.vertical_boundary.id(a)
        };
        if in_kernel != included[f] {
            kernel = Check::fail(
                "kernel-is-bundle",
                format!(
                    "arrow {f} is {} the kernel but {} the bundle",
                    if in_kernel { "in" } else { "outside" },
                    if included[f] { "in" } else { "outside" }
                ),
            );
            break;
        }
    }
    report.push(kernel);
    report
}

/// Collapse each boundary class to a single square: the slim quotient every
/// square projects onto. Composition of classes is inherited (the composite
/// boundary depends only on the two boundaries). Returns the quotient and
/// the square → class table.
pub fn frame_double(dg: &DoubleGroupoid) -> Result<(DoubleGroupoid, Vec<usize>), DoubleError> {
    let mut class_of = vec![0usize; dg.squares()];
    let mut reps: Vec<usize> = Vec::new();
    let mut seen: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
    for x in 0..dg.squares() {
        class_of[x] = *seen.entry(dg.boundary(x)).or_insert_with(|| {
            reps.push(x);
            reps.len() - 1
        });
    }
    let raw = dg.raw();
    let mut sq_h_comp = BTreeMap::new();
    let mut sq_v_comp = BTreeMap::new();
    for (&(x, y), &z) in &raw.sq_h_comp {
        sq_h_comp.insert((class_of[x], class_of[y]), class_of[z]);
    }
    for (&(x, y), &z) in &raw.sq_v_comp {
        sq_v_comp.insert((class_of[x], class_of[y]), class_of[z]);
    }
    let quotient = super::RawDoubleGroupoid {
        objects: raw.objects,
        h_src: raw.h_src.clone(),
        h_tgt: raw.h_tgt.clone(),
        v_src: raw.v_src.clone(),
        v_tgt: raw.v_tgt.clone(),
        top: reps.iter().map(|&x| dg.top(x)).collect(),
        bottom: reps.iter().map(|&x| dg.bottom(x)).collect(),
        left: reps.iter().map(|&x| dg.left(x)).collect(),
        right: reps.iter().map(|&x| dg.right(x)).collect(),
        h_id: raw.h_id.clone(),
        v_id: raw.v_id.clone(),
        h_unit: raw.h_unit.iter().map(|&x| class_of[x]).collect(),
        v_unit: raw.v_unit.iter().map(|&x| class_of[x]).collect(),
        h_comp: raw.h_comp.clone(),
        v_comp: raw.v_comp.clone(),
        sq_h_comp,
        sq_v_comp,
    };
    Ok((DoubleGroupoid::new(quotient)?, class_of))
}

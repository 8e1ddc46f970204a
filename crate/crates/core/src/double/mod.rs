//! Finite double groupoids: squares with horizontal and vertical arrow
//! boundaries, two square compositions, and the staged axiom verifier.
//!
//! Geometry of a square X:
//!
//! ```text
//!        top (h arrow)
//!      +----->-----+
//! left |           | right     sources: (top, left)
//! (v)  v     X     v (v)       targets: (bottom, right)
//!      +----->-----+
//!        bottom (h)
//! ```
//!
//! Horizontal square composition pastes side by side (right edge of the
//! first = left edge of the second); vertical composition stacks (bottom of
//! the first = top of the second). Arrow composition is diagrammatic.

mod builders;
mod functor;
mod ops;
mod predicates;
mod verify;

pub use builders::{bundle_double, order_two_edge_example, trivial_double, unit_squares_double};
pub(crate) use builders::slim_comp_tables;
pub use functor::DoubleFunctor;
pub use ops::{
    core_bundle, core_diagram, core_groupoid, eckmann_hilton_check, exactness_check, frame_double,
    target_transport, translation_element, CoreDiagram,
};
pub use predicates::{is_exclusive, is_maximal, is_slim, is_vacant};
pub use verify::{verify, STAGES};

use crate::group::GroupError;
use crate::groupoid::GroupoidError;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DoubleError {
    #[error("verification failed at stage {stage}: {witness}")]
    Invalid { stage: String, witness: String },
    #[error("squares {x} and {y} do not share a full boundary")]
    BoundariesDiffer { x: usize, y: usize },
    #[error("squares {x} and {y} do not share their targets")]
    TargetsDiffer { x: usize, y: usize },
    #[error("no unique translation between squares {x} and {y}: {count} candidates")]
    TranslationNotUnique { x: usize, y: usize, count: usize },
    #[error("functor table {what} has length {got}, expected {want}")]
    FunctorShape { what: &'static str, got: usize, want: usize },
    #[error("functor does not commute with {what} at index {index}")]
    NotFunctorial { what: &'static str, index: usize },
    #[error("required property fails: {0}")]
    PropertyFails(&'static str),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Unvalidated double-groupoid tables, exactly as loaded from the wire.
/// Arrow compositions are diagrammatic; square composition maps hold a key
/// exactly when the pair should be composable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDoubleGroupoid {
    pub objects: usize,
    /// Horizontal arrow endpoints.
    pub h_src: Vec<usize>,
    pub h_tgt: Vec<usize>,
    /// Vertical arrow endpoints.
    pub v_src: Vec<usize>,
    pub v_tgt: Vec<usize>,
    /// Square boundaries: horizontal edges.
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    /// Square boundaries: vertical edges.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Identity arrows per object.
    pub h_id: Vec<usize>,
    pub v_id: Vec<usize>,
    /// Unit square on a vertical arrow (unit for horizontal pasting).
    pub h_unit: Vec<usize>,
    /// Unit square on a horizontal arrow (unit for vertical pasting).
    pub v_unit: Vec<usize>,
    pub h_comp: BTreeMap<(usize, usize), usize>,
    pub v_comp: BTreeMap<(usize, usize), usize>,
    pub sq_h_comp: BTreeMap<(usize, usize), usize>,
    pub sq_v_comp: BTreeMap<(usize, usize), usize>,
}

impl RawDoubleGroupoid {
    pub fn h_arrows(&self) -> usize {
        self.h_src.len()
    }

    pub fn v_arrows(&self) -> usize {
        self.v_src.len()
    }

    pub fn squares(&self) -> usize {
        self.top.len()
    }
}

/// A double groupoid that passed every verification stage. Inverse tables
/// are found by scan during verification and cached here.
#[derive(Debug, Clone)]
pub struct DoubleGroupoid {
    raw: RawDoubleGroupoid,
    h_inv: Vec<usize>,
    v_inv: Vec<usize>,
    sq_h_inv: Vec<usize>,
    sq_v_inv: Vec<usize>,
}

impl DoubleGroupoid {
    /// Run the staged verifier; on success cache the inverse tables.
    pub fn new(raw: RawDoubleGroupoid) -> Result<Self, DoubleError> {
        let report = verify::verify(&raw);
        if let Some(c) = report.first_failure() {
            return Err(DoubleError::Invalid {
                stage: c.name.clone(),
                witness: c.witness.clone().unwrap_or_default(),
            });
        }
        let (h_inv, v_inv, sq_h_inv, sq_v_inv) =
            verify::inverse_tables(&raw).expect("verified structure has all inverses");
        Ok(DoubleGroupoid { raw, h_inv, v_inv, sq_h_inv, sq_v_inv })
    }

    pub fn raw(&self) -> &RawDoubleGroupoid {
        &self.raw
    }

    pub fn objects(&self) -> usize {
        self.raw.objects
    }

    pub fn h_arrows(&self) -> usize {
        self.raw.h_arrows()
    }

    pub fn v_arrows(&self) -> usize {
        self.raw.v_arrows()
    }

    pub fn squares(&self) -> usize {
        self.raw.squares()
    }

    pub fn h_src(&self, f: usize) -> usize {
        self.raw.h_src[f]
    }

    pub fn h_tgt(&self, f: usize) -> usize {
        self.raw.h_tgt[f]
    }

    pub fn v_src(&self, u: usize) -> usize {
        self.raw.v_src[u]
    }

    pub fn v_tgt(&self, u: usize) -> usize {
        self.raw.v_tgt[u]
    }

    pub fn top(&self, x: usize) -> usize {
        self.raw.top[x]
    }

    pub fn bottom(&self, x: usize) -> usize {
        self.raw.bottom[x]
    }

    pub fn left(&self, x: usize) -> usize {
        self.raw.left[x]
    }

    pub fn right(&self, x: usize) -> usize {
        self.raw.right[x]
    }

    /// Boundary quadruple (top, left, bottom, right).
    pub fn boundary(&self, x: usize) -> (usize, usize, usize, usize) {
        (self.raw.top[x], self.raw.left[x], self.raw.bottom[x], self.raw.right[x])
    }

    pub fn h_id(&self, a: usize) -> usize {
        self.raw.h_id[a]
    }

    pub fn v_id(&self, a: usize) -> usize {
        self.raw.v_id[a]
    }

    pub fn h_unit(&self, u: usize) -> usize {
        self.raw.h_unit[u]
    }

    pub fn v_unit(&self, f: usize) -> usize {
        self.raw.v_unit[f]
    }

    /// Unit square on the identity arrows of `a`.
    pub fn double_id(&self, a: usize) -> usize {
        self.raw.h_unit[self.raw.v_id[a]]
    }

    pub fn h_comp(&self, f: usize, g: usize) -> usize {
        self.raw.h_comp[&(f, g)]
    }

    pub fn v_comp(&self, u: usize, w: usize) -> usize {
        self.raw.v_comp[&(u, w)]
    }

    /// Side-by-side pasting; panics on non-composable pairs.
    pub fn sq_h_comp(&self, x: usize, y: usize) -> usize {
        self.raw.sq_h_comp[&(x, y)]
    }

    /// Stacked pasting; panics on non-composable pairs.
    pub fn sq_v_comp(&self, x: usize, y: usize) -> usize {
        self.raw.sq_v_comp[&(x, y)]
    }

    pub fn try_sq_h_comp(&self, x: usize, y: usize) -> Option<usize> {
        self.raw.sq_h_comp.get(&(x, y)).copied()
    }

    pub fn try_sq_v_comp(&self, x: usize, y: usize) -> Option<usize> {
        self.raw.sq_v_comp.get(&(x, y)).copied()
    }

    pub fn h_inv(&self, f: usize) -> usize {
        self.h_inv[f]
    }

    pub fn v_inv(&self, u: usize) -> usize {
        self.v_inv[u]
    }

    pub fn sq_h_inv(&self, x: usize) -> usize {
        self.sq_h_inv[x]
    }

    pub fn sq_v_inv(&self, x: usize) -> usize {
        self.sq_v_inv[x]
    }

    /// Squares grouped by full boundary quadruple.
    pub fn squares_by_boundary(&self) -> BTreeMap<(usize, usize, usize, usize), Vec<usize>> {
        let mut out: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for x in 0..self.squares() {
            out.entry(self.boundary(x)).or_default().push(x);
        }
        out
    }

    /// Squares whose two target edges are identity arrows, i.e. the arrows
    /// of the core structure, grouped nowhere: just the sorted list.
    pub fn core_squares(&self) -> Vec<usize> {
        (0..self.squares())
            .filter(|&x| {
                let a = self.h_tgt(self.bottom(x));
                self.bottom(x) == self.h_id(a) && self.right(x) == self.v_id(a)
            })
            .collect()
    }

    /// Squares with all four boundary edges identities, per object.
    pub fn bundle_squares(&self, a: usize) -> Vec<usize> {
        (0..self.squares())
            .filter(|&x| {
                self.top(x) == self.h_id(a)
                    && self.bottom(x) == self.h_id(a)
                    && self.left(x) == self.v_id(a)
                    && self.right(x) == self.v_id(a)
            })
            .collect()
    }

    /// Base object of a core square: its bottom-right corner.
    pub fn core_base(&self, x: usize) -> usize {
        self.h_tgt(self.bottom(x))
    }

    /// Glue a core square `u` onto `y` along the top-left corner: paste `u`
    /// beside the vertical unit on top(y), then stack onto `y`. The result
    /// shares targets with `y` and composes sources.
    pub fn glue(&self, u: usize, y: usize) -> usize {
        let row = self.sq_h_comp(u, self.v_unit(self.top(y)));
        self.sq_v_comp(row, y)
    }
}

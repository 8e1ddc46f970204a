//! Maps between double groupoids.

use super::{DoubleError, DoubleGroupoid};

/// A quadruple of tables (objects, horizontal arrows, vertical arrows,
/// squares) commuting with every boundary, identity, and composition map.
#[derive(Debug, Clone)]
pub struct DoubleFunctor {
    obj: Vec<usize>,
    h: Vec<usize>,
    v: Vec<usize>,
    sq: Vec<usize>,
}

impl DoubleFunctor {
    pub fn new(
        dom: &DoubleGroupoid,
        cod: &DoubleGroupoid,
        obj: Vec<usize>,
        h: Vec<usize>,
        v: Vec<usize>,
        sq: Vec<usize>,
    ) -> Result<Self, DoubleError> {
        let shapes: [(&'static str, usize, usize); 4] = [
            ("objects", obj.len(), dom.objects()),
            ("h-arrows", h.len(), dom.h_arrows()),
            ("v-arrows", v.len(), dom.v_arrows()),
            ("squares", sq.len(), dom.squares()),
        ];
        for (what, got, want) in shapes {
            if got != want {
                return Err(DoubleError::FunctorShape { what, got, want });
            }
        }
        let ranges: [(&'static str, &[usize], usize); 4] = [
            ("objects", &obj, cod.objects()),
            ("h-arrows", &h, cod.h_arrows()),
            ("v-arrows", &v, cod.v_arrows()),
            ("squares", &sq, cod.squares()),
        ];
        for (what, table, bound) in ranges {
            if let Some((index, _)) = table.iter().enumerate().find(|(_, &x)| x >= bound) {
                return Err(DoubleError::NotFunctorial { what, index });
            }
        }
        for f in 0..dom.h_arrows() {
            if cod.h_src(h[f]) != obj[dom.h_src(f)] || cod.h_tgt(h[f]) != obj[dom.h_tgt(f)] {
                return Err(DoubleError::NotFunctorial { what: "h-endpoints", index: f });
            }
        }
        for u in 0..dom.v_arrows() {
            if cod.v_src(v[u]) != obj[dom.v_src(u)] || cod.v_tgt(v[u]) != obj[dom.v_tgt(u)] {
                return Err(DoubleError::NotFunctorial { what: "v-endpoints", index: u });
            }
        }
        for x in 0..dom.squares() {
            let ok = cod.top(sq[x]) == h[dom.top(x)]
                && cod.bottom(sq[x]) == h[dom.bottom(x)]
                && cod.left(sq[x]) == v[dom.left(x)]
                && cod.right(sq[x]) == v[dom.right(x)];
            if !ok {
                return Err(DoubleError::NotFunctorial { what: "square-boundary", index: x });
            }
        }
        for a in 0..dom.objects() {
            if h[dom.h_id(a)] != cod.h_id(obj[a]) || v[dom.v_id(a)] != cod.v_id(obj[a]) {
                return Err(DoubleError::NotFunctorial { what: "identity-arrows", index: a });
            }
        }
        for u in 0..dom.v_arrows() {
            if sq[dom.h_unit(u)] != cod.h_unit(v[u]) {
                return Err(DoubleError::NotFunctorial { what: "h-units", index: u });
            }
        }
        for f in 0..dom.h_arrows() {
            if sq[dom.v_unit(f)] != cod.v_unit(h[f]) {
                return Err(DoubleError::NotFunctorial { what: "v-units", index: f });
            }
        }
        for (&(f, g), &r) in &dom.raw().h_comp {
            if cod.h_comp(h[f], h[g]) != h[r] {
                return Err(DoubleError::NotFunctorial { what: "h-composition", index: f });
            }
        }
        for (&(f, g), &r) in &dom.raw().v_comp {
            if cod.v_comp(v[f], v[g]) != v[r] {
                return Err(DoubleError::NotFunctorial { what: "v-composition", index: f });
            }
        }
        for (&(x, y), &r) in &dom.raw().sq_h_comp {
            if cod.try_sq_h_comp(sq[x], sq[y]) != Some(sq[r]) {
                return Err(DoubleError::NotFunctorial { what: "square-h-composition", index: x });
            }
        }
        for (&(x, y), &r) in &dom.raw().sq_v_comp {
            if cod.try_sq_v_comp(sq[x], sq[y]) != Some(sq[r]) {
                return Err(DoubleError::NotFunctorial { what: "square-v-composition", index: x });
            }
        }
        Ok(DoubleFunctor { obj, h, v, sq })
    }

    pub fn object(&self, a: usize) -> usize {
        self.obj[a]
    }

    pub fn h_arrow(&self, f: usize) -> usize {
        self.h[f]
    }

    pub fn v_arrow(&self, u: usize) -> usize {
        self.v[u]
    }

    pub fn square(&self, x: usize) -> usize {
        self.sq[x]
    }

    /// All four component maps are bijections.
    pub fn is_isomorphism(&self, cod: &DoubleGroupoid) -> bool {
        let bij = |table: &[usize], n: usize| {
            let mut seen = vec![false; n];
            table.len() == n && table.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        };
        bij(&self.obj, cod.objects())
            && bij(&self.h, cod.h_arrows())
            && bij(&self.v, cod.v_arrows())
            && bij(&self.sq, cod.squares())
    }
}

//! Exact computational algebra for finite double groupoids.
//!
//! The crate is layered: [`group`] provides Cayley-table groups and their
//! subgroup/quotient/homomorphism machinery, [`groupoid`] the one-dimensional
//! groupoid structure theory (frames, sections, cocycles), [`double`] the
//! four-sorted double-groupoid structure with staged axiom verification,
//! [`construct`] the translation theorems between group data and double
//! groupoids, and [`enumerate`] exhaustive desk-scale searches plus the
//! finite spin-cover case study. All structures are immutable after
//! validation and every operation is a pure function.

pub mod construct;
pub mod double;
pub mod group;
pub mod groupoid;
pub mod report;

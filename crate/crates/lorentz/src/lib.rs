//! Numerical Iwasawa-style decomposition of restricted Lorentz matrices.

pub mod mat;

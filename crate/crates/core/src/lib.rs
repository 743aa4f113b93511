//! Exact computation of generalized Serre duality for finite-dimensional path algebras.
//!
//! Everything is linear algebra over `Q` or `F_p`: module categories are represented by
//! quiver representations, the bounded homotopy category by explicit complexes with
//! Hom spaces computed as chain maps modulo null-homotopies, and the Serre functor on
//! `K^b(proj)` by the Nakayama functor applied termwise.
//!
//! Conventions used throughout:
//! - paths compose right-to-left, so an arrow `a : 1 -> 2` satisfies `a = e_2 a e_1`;
//! - `X[n]^i = X^{i+n}` with differential `(-1)^n d_X`, and `f[n]^i = f^{i+n}`;
//! - `cone(f)^i = X^{i+1} ⊕ Y^i` with differential `[[-d_X, 0], [f, d_Y]]`.

pub mod algebra;
pub mod artriangle;
pub mod complexes;
pub mod error;
pub mod exactla;
pub mod fixtures;
pub mod gorenstein;
pub mod random;
pub mod serre;

pub use error::{Error, Result};

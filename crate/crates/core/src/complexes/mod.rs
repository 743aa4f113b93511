//! Bounded complexes of representations, the homotopy category `K^b`, cones, shifts,
//! minimal resolutions, and Krull-Schmidt decompositions of complexes.
//!
//! Conventions: `X[n]^i = X^{i+n}` with `d_{X[n]} = (-1)^n d_X`; chain maps shift without
//! sign; `cone(f)^i = X^{i+1} ⊕ Y^i` with differential `[[-d_X, 0], [f, d_Y]]`.

pub mod complex;
pub mod decompose;
pub mod khom;
pub mod resolution;

pub use complex::{cone, BoundedComplex, ChainMap, Cone};
pub use decompose::{
    decompose_complex, indecomposables_isomorphic_k, iso_in_d, iso_in_k, ComplexSummand,
};
pub use khom::{end_algebra_k, is_zero_in_k, khom, HomotopyHomSpace};
pub use resolution::{
    brutal_truncate, fid, fpd, inj_resolution, proj_resolution, Dimension, ResolutionReport,
};

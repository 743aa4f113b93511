//! Path algebras, their finite-dimensional modules, duality, the Nakayama functor,
//! radicals of endomorphism algebras and Krull-Schmidt decomposition.

pub mod decompose;
pub mod diagram;
pub mod endo;
pub mod nakayama;
pub mod path_algebra;
pub mod rep;

pub use decompose::{decompose, ModuleSummand};
pub use endo::EndAlgebraPresentation;
pub use nakayama::{module_pairing, nakayama, nakayama_map, ProjectiveModule};
pub use path_algebra::{parse_relation, Arrow, Path, PathAlgebra, Quiver, Relation};
pub use rep::{HomSpace, ProjectiveCover, RepMap, Representation};

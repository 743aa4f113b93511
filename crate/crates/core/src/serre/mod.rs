//! The Serre functor on `K^b(proj)` given by the Nakayama functor termwise, its pairing and
//! trace, the shift comparison `η`, and randomized checks of the duality identities.

pub mod checks;
pub mod functor;

pub use checks::{
    check_identities, check_triangle_functor, condition_c_witness, in_domain, in_range,
    is_homotopy_invertible, ConditionCWitness, IdentityCount, IdentityReport, MembershipVerdict,
    Side, TriangleFunctorReport, Verdict, IDENTITIES,
};
pub use functor::{eta, pairing, serre_of, serre_of_map, trace, Eta, ProjComplex, SerrePairing};

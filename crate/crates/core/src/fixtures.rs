//! Small algebras used throughout the tests and the acceptance suite.

use std::sync::Arc;

use crate::algebra::{parse_relation, PathAlgebra, Quiver};
use crate::exactla::Field;

/// `1 --a--> 2`, no relations. Hereditary, dimension 3.
pub fn a2() -> Arc<PathAlgebra> {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
    PathAlgebra::new(q, vec![], Field::Rationals, 4).unwrap()
}

/// `k[x]/(x^2)`: self-injective, infinite global dimension.
pub fn dual_numbers() -> Arc<PathAlgebra> {
    let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
    let rel = parse_relation(&q, Field::Rationals, &[("1", "x*x")]).unwrap();
    PathAlgebra::new(q, vec![rel], Field::Rationals, 4).unwrap()
}

/// `k<x,y>/(x,y)^2`: local, not Gorenstein.
pub fn radical_square_zero_two_loops() -> Arc<PathAlgebra> {
    let q = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
    let rels = ["x*x", "x*y", "y*x", "y*y"]
        .iter()
        .map(|p| parse_relation(&q, Field::Rationals, &[("1", p)]).unwrap())
        .collect();
    PathAlgebra::new(q, rels, Field::Rationals, 4).unwrap()
}

/// `1 --a--> 2 --b--> 3` with `b*a = 0`: global dimension 2.
pub fn a3_zero_relation() -> Arc<PathAlgebra> {
    let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
    let rel = parse_relation(&q, Field::Rationals, &[("1", "b*a")]).unwrap();
    PathAlgebra::new(q, vec![rel], Field::Rationals, 4).unwrap()
}

//! Gorenstein detection and the resulting Serre duality status of `K^b(proj)`, `K^b(inj)`
//! and `D^b`. Every "infinite" verdict is relative to a cap on resolution length.

use std::sync::Arc;

use crate::algebra::{nakayama, PathAlgebra, Representation};
use crate::complexes::{BoundedComplex, Dimension};

/// Projective dimension by iterated syzygies, up to `cap`.
pub fn projective_dimension(m: &Representation, cap: usize) -> Dimension {
    let mut cur = m.clone();
    for k in 0..=cap {
        if cur.is_projective() {
            return Dimension::Finite(k);
        }
        if k < cap {
            cur = cur.syzygy();
        }
    }
    Dimension::ExceedsCap(cap)
}

/// Injective dimension by iterated cosyzygies, up to `cap`.
pub fn injective_dimension(m: &Representation, cap: usize) -> Dimension {
    projective_dimension(&m.dualize(), cap)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GorensteinVerdict {
    Gorenstein,
    NotGorensteinAtCap,
    UnknownAtCap,
}

#[derive(Clone, Debug)]
pub struct GorensteinReport {
    /// Injective dimension of `A` as a left module.
    pub left_injdim: Dimension,
    /// Injective dimension of `A` as a right module.
    pub right_injdim: Dimension,
    pub verdict: GorensteinVerdict,
    /// A stalk `ν(P_i) = I_i` whose projective resolution does not terminate within the cap.
    pub witness: Option<BoundedComplex>,
    pub witness_vertex: Option<usize>,
}

fn first_vertex_exceeding(
    alg: &Arc<PathAlgebra>,
    cap: usize,
    module: impl Fn(usize) -> Representation,
    dim: fn(&Representation, usize) -> Dimension,
) -> Option<(usize, Representation)> {
    (0..alg.num_vertices())
        .map(|v| (v, module(v)))
        .find(|(_, m)| !dim(m, cap).is_finite())
}

pub fn gorenstein_check(alg: &Arc<PathAlgebra>, cap: usize) -> GorensteinReport {
    let left_injdim = injective_dimension(&Representation::regular(alg), cap);
    let right_injdim = injective_dimension(&Representation::regular(&alg.opposite()), cap);
    if left_injdim.is_finite() && right_injdim.is_finite() {
        return GorensteinReport {
            left_injdim,
            right_injdim,
            verdict: GorensteinVerdict::Gorenstein,
            witness: None,
            witness_vertex: None,
        };
    }
    let found = if right_injdim.is_finite() {
        None
    } else {
        first_vertex_exceeding(
            alg,
            cap,
            |v| {
                nakayama(&Representation::projective(alg, v).expect("vertex in range"))
                    .expect("projective")
            },
            projective_dimension,
        )
    };
    let verdict = if found.is_some() {
        GorensteinVerdict::NotGorensteinAtCap
    } else {
        GorensteinVerdict::UnknownAtCap
    };
    GorensteinReport {
        left_injdim,
        right_injdim,
        verdict,
        witness: found.as_ref().map(|(_, m)| BoundedComplex::stalk(m, 0)),
        witness_vertex: found.map(|(v, _)| v),
    }
}

#[derive(Clone, Debug)]
pub enum DualityStatus {
    HasSerreDuality,
    /// No Serre duality certified within the cap; the witness is an object outside the
    /// relevant subcategory at that cap, when one was found.
    FailsAtCap {
        witness: Option<BoundedComplex>,
    },
}

impl DualityStatus {
    pub fn holds(&self) -> bool {
        matches!(self, DualityStatus::HasSerreDuality)
    }
}

#[derive(Clone, Debug)]
pub struct SerreDualityStatus {
    pub bounded_projectives: DualityStatus,
    pub bounded_injectives: DualityStatus,
    pub derived: DualityStatus,
    /// Largest projective dimension of a simple module.
    pub global_dimension: Dimension,
    pub gorenstein: GorensteinReport,
}

pub fn serre_duality_status(alg: &Arc<PathAlgebra>, cap: usize) -> SerreDualityStatus {
    let gorenstein = gorenstein_check(alg, cap);
    let (bounded_projectives, bounded_injectives) =
        if gorenstein.verdict == GorensteinVerdict::Gorenstein {
            (
                DualityStatus::HasSerreDuality,
                DualityStatus::HasSerreDuality,
            )
        } else {
            let inj_witness = first_vertex_exceeding(
                alg,
                cap,
                |v| Representation::projective(alg, v).expect("vertex in range"),
                injective_dimension,
            )
            .map(|(_, m)| BoundedComplex::stalk(&m, 0));
            (
                DualityStatus::FailsAtCap {
                    witness: gorenstein.witness.clone(),
                },
                DualityStatus::FailsAtCap {
                    witness: inj_witness,
                },
            )
        };
    let mut global = 0;
    let mut derived = DualityStatus::HasSerreDuality;
    for v in 0..alg.num_vertices() {
        let s = Representation::simple(alg, v).expect("vertex in range");
        match projective_dimension(&s, cap) {
            Dimension::Finite(d) => global = global.max(d),
            Dimension::ExceedsCap(_) => {
                derived = DualityStatus::FailsAtCap {
                    witness: Some(BoundedComplex::stalk(&s, 0)),
                };
                break;
            }
        }
    }
    let global_dimension = if derived.holds() {
        Dimension::Finite(global)
    } else {
        Dimension::ExceedsCap(cap)
    };
    SerreDualityStatus {
        bounded_projectives,
        bounded_injectives,
        derived,
        global_dimension,
        gorenstein,
    }
}

use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::PathAlgebra;
use crate::complexes::{
    brutal_truncate, cone, inj_resolution, khom, proj_resolution, BoundedComplex, ChainMap,
};
use crate::error::Result;
use crate::exactla::{ExactMatrix, Scalar};
use crate::random::{random_chain_map, random_complex, random_projective_complex, Limits};

use super::functor::{eta, ProjComplex};

/// Names of the checked identities, in report order.
pub const IDENTITIES: [&str; 6] = [
    "pairing-natural-in-source",
    "pairing-natural-in-target",
    "pairing-symmetry",
    "trace-adjunction",
    "shift-compatibility",
    "shift-trace",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCount {
    pub name: &'static str,
    pub trials: usize,
    /// Trials where the left-hand side is nonzero.
    pub nontrivial: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub counts: Vec<IdentityCount>,
    /// One line per violation: identity name, trial, and the two differing sides.
    pub counterexamples: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.counts.iter().all(|c| c.violations == 0)
    }

    fn record(&mut self, idx: usize, trial: usize, lhs: &Scalar, rhs: &Scalar) {
        let c = &mut self.counts[idx];
        c.trials += 1;
        if !lhs.is_zero() {
            c.nontrivial += 1;
        }
        if lhs != rhs {
            c.violations += 1;
            self.counterexamples
                .push(format!("{} trial {trial}: {lhs} != {rhs}", c.name));
        }
    }
}

/// Runs every pairing identity on `trials` randomly generated instances over `alg`.
pub fn check_identities(
    alg: &Arc<PathAlgebra>,
    seed: u64,
    trials: usize,
) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limits = Limits::default();
    let mut report = IdentityReport {
        counts: IDENTITIES
            .iter()
            .map(|&name| IdentityCount {
                name,
                trials: 0,
                nontrivial: 0,
                violations: 0,
            })
            .collect(),
        counterexamples: Vec::new(),
    };
    let field = alg.field();
    let small = Limits {
        max_terms: 2,
        max_term_dim: 2,
        degree_spread: 1,
    };
    for t in 0..trials {
        // random objects, enlarged by summands that make the composites below nonzero
        let x = random_projective_complex(alg, limits, &mut rng)?;
        let xp = random_projective_complex(alg, limits, &mut rng)?;
        let px = ProjComplex::new(&x)?;
        let pxp = ProjComplex::new(&xp)?;
        let noise = random_complex(alg, small, &mut rng)?;
        let y = BoundedComplex::direct_sum(&[&noise, &x, px.serre(), pxp.serre()])?;
        let yp = BoundedComplex::direct_sum(&[&random_complex(alg, small, &mut rng)?, &x])?;
        let xq = BoundedComplex::direct_sum(&[&xp, &x])?;
        let pxq = ProjComplex::new(&xq)?;

        // (f θ, g) = (f, S(θ) g)
        let theta = random_chain_map(&xp, &x, &mut rng)?;
        let f = random_chain_map(&x, &y, &mut rng)?;
        let g = random_chain_map(&y, pxp.serre(), &mut rng)?;
        let lhs = pxp.pairing(&f.compose(&theta), &g)?;
        let rhs = px.pairing(&f, &pxp.serre_map(&px, &theta).compose(&g))?;
        report.record(0, t, &lhs, &rhs);

        // (f, g γ) = (γ f, g)
        let f = random_chain_map(&x, &yp, &mut rng)?;
        let gamma = random_chain_map(&yp, &y, &mut rng)?;
        let g = random_chain_map(&y, px.serre(), &mut rng)?;
        let lhs = px.pairing(&f, &g.compose(&gamma))?;
        let rhs = px.pairing(&gamma.compose(&f), &g)?;
        report.record(1, t, &lhs, &rhs);

        // (f, g)_{X,Y} = (g, S(f))_{Y,S(X)} and Tr_X(g f) = Tr_Y(S(f) g), Y projective
        let f = random_chain_map(&x, &xq, &mut rng)?;
        let g = random_chain_map(&xq, px.serre(), &mut rng)?;
        let sf = px.serre_map(&pxq, &f);
        let lhs = px.pairing(&f, &g)?;
        let rhs = pxq.pairing(&g, &sf)?;
        report.record(2, t, &lhs, &rhs);
        let lhs = px.trace(&g.compose(&f))?;
        let rhs = pxq.trace(&sf.compose(&g))?;
        report.record(3, t, &lhs, &rhs);

        // (f, (η g)[-1])_{X, Y[-1]} = -(f[1], g)_{X[1], Y}
        let x1 = x.shift(1);
        let px1 = ProjComplex::new(&x1)?;
        let eta_x = eta(&x)?.map;
        let y1 = BoundedComplex::direct_sum(&[&noise, &x1, px1.serre()])?;
        let f = random_chain_map(&x, &y1.shift(-1), &mut rng)?;
        let g = random_chain_map(&y1, px1.serre(), &mut rng)?;
        let lhs = px.pairing(&f, &eta_x.compose(&g).shift(-1))?;
        let rhs = field.neg(&px1.pairing(&f.shift(1), &g)?);
        report.record(4, t, &lhs, &rhs);

        // Tr_X((η f)[-1]) = -Tr_{X[1]}(f)
        let f = random_chain_map(&x1, px1.serre(), &mut rng)?;
        let lhs = px.trace(&eta_x.compose(&f).shift(-1))?;
        let rhs = field.neg(&px1.trace(&f)?);
        report.record(5, t, &lhs, &rhs);
    }
    Ok(report)
}

/// Outcome of comparing the image of a cone triangle under `S` with the cone triangle of `S(u)`.
#[derive(Clone, Debug)]
pub struct TriangleFunctorReport {
    pub delta_found: bool,
    pub first_square_commutes: bool,
    pub second_square_commutes: bool,
    pub delta_invertible: bool,
    /// The comparison map `cone(S(u)) -> S(cone(u))` when found.
    pub delta: Option<ChainMap>,
}

impl TriangleFunctorReport {
    pub fn passed(&self) -> bool {
        self.delta_found
            && self.first_square_commutes
            && self.second_square_commutes
            && self.delta_invertible
    }

    /// Name of the first failing check.
    pub fn failure(&self) -> Option<&'static str> {
        if !self.delta_found {
            Some("no comparison map makes both squares commute")
        } else if !self.first_square_commutes {
            Some("square S(Y) -> cone(S(u)) -> S(Z)")
        } else if !self.second_square_commutes {
            Some("square cone(S(u)) -> S(Z) -> S(X)[1]")
        } else if !self.delta_invertible {
            Some("comparison map is not invertible in the homotopy category")
        } else {
            None
        }
    }
}

/// Stacks class-coordinate columns into a matrix with `rows` rows.
fn columns(field: crate::exactla::Field, rows: usize, cols: &[Vec<Scalar>]) -> ExactMatrix {
    if cols.is_empty() {
        ExactMatrix::zeros(field, rows, 0)
    } else {
        ExactMatrix::from_columns(field, rows, cols)
    }
}

/// For `u : X -> Y` in `K^b(proj)` with cone triangle `X -> Y -v-> Z -w-> X[1]`, finds
/// `δ : cone(S(u)) -> S(Z)` with `δ α ≃ S(v)` and `η_X S(w) δ ≃ β`, where `α, β` are the
/// structure maps of `cone(S(u))`, and checks that `δ` is invertible up to homotopy.
pub fn check_triangle_functor(u: &ChainMap) -> Result<TriangleFunctorReport> {
    let (x, y) = (u.source(), u.target());
    let field = x.field();
    let px = ProjComplex::new(x)?;
    let py = ProjComplex::new(y)?;
    let tri = cone(u);
    let z = &tri.cone;
    let pz = ProjComplex::new(z)?;
    let x1 = x.shift(1);
    let px1 = ProjComplex::new(&x1)?;
    let eta_x = eta(x)?.map;

    let su = px.serre_map(&py, u);
    let image = cone(&su);
    let w_cone = &image.cone;
    let sv = py.serre_map(&pz, &tri.inj);
    let sw = eta_x.compose(&pz.serre_map(&px1, &tri.proj));

    let hom_delta = khom(w_cone, pz.serre())?;
    let basis = hom_delta.basis();
    let first = khom(py.serre(), pz.serre())?;
    let second = khom(w_cone, &px.serre().shift(1))?;
    let cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|b| {
            let mut c = first.project(&b.compose(&image.inj));
            c.extend(second.project(&sw.compose(b)));
            c
        })
        .collect();
    let rows = first.dim() + second.dim();
    let system = columns(field, rows, &cols);
    let mut rhs = first.project(&sv);
    rhs.extend(second.project(&image.proj));
    let Some(coeffs) = system.solve(&rhs) else {
        return Ok(TriangleFunctorReport {
            delta_found: false,
            first_square_commutes: false,
            second_square_commutes: false,
            delta_invertible: false,
            delta: None,
        });
    };
    let kernel = system.kernel_basis();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut best = None;
    for attempt in 0..8 {
        let mut c = coeffs.clone();
        if attempt > 0 {
            for col in kernel.columns() {
                let s = field.from_i64(rng.gen_range(-3..=3));
                for (a, b) in c.iter_mut().zip(&col) {
                    *a = field.add(a, &field.mul(&s, b));
                }
            }
        }
        let delta = hom_delta.combine(&c);
        let invertible = is_homotopy_invertible(&delta)?;
        best = Some((delta, invertible));
        if invertible || kernel.cols() == 0 {
            break;
        }
    }
    let (delta, delta_invertible) = best.expect("at least one attempt");
    Ok(TriangleFunctorReport {
        delta_found: true,
        first_square_commutes: first.homotopic(&delta.compose(&image.inj), &sv),
        second_square_commutes: second.homotopic(&sw.compose(&delta), &image.proj),
        delta_invertible,
        delta: Some(delta),
    })
}

/// Whether `f : A -> B` has a homotopy inverse, by solving `g f ≃ id_A` and `f g ≃ id_B`.
pub fn is_homotopy_invertible(f: &ChainMap) -> Result<bool> {
    let (a, b) = (f.source(), f.target());
    let field = a.field();
    let back = khom(b, a)?;
    let ea = khom(a, a)?;
    let eb = khom(b, b)?;
    let cols: Vec<Vec<Scalar>> = back
        .basis()
        .iter()
        .map(|g| {
            let mut c = ea.project(&g.compose(f));
            c.extend(eb.project(&f.compose(g)));
            c
        })
        .collect();
    let system = columns(field, ea.dim() + eb.dim(), &cols);
    let mut rhs = ea.project(&a.identity());
    rhs.extend(eb.project(&b.identity()));
    Ok(system.solve(&rhs).is_some())
}

/// Which side of the duality a membership test concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Objects with finite projective dimension.
    Domain,
    /// Objects with finite injective dimension.
    Range,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    /// The terminating minimal resolution, a representative in `K^b(proj)` or `K^b(inj)`.
    Member(BoundedComplex),
    NonMemberAtCap(usize),
}

#[derive(Clone, Debug)]
pub struct MembershipVerdict {
    pub object: BoundedComplex,
    pub side: Side,
    pub verdict: Verdict,
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self.verdict, Verdict::Member(_))
    }
}

/// Whether `x` has a finite projective resolution within `cap` extra degrees.
pub fn in_domain(x: &BoundedComplex, cap: usize) -> MembershipVerdict {
    let r = proj_resolution(x, cap);
    let verdict = if r.terminated {
        Verdict::Member(r.resolution)
    } else {
        Verdict::NonMemberAtCap(cap)
    };
    MembershipVerdict {
        object: x.clone(),
        side: Side::Domain,
        verdict,
    }
}

/// Whether `x` has a finite injective coresolution within `cap` extra degrees.
pub fn in_range(x: &BoundedComplex, cap: usize) -> MembershipVerdict {
    let r = inj_resolution(x, cap);
    let verdict = if r.terminated {
        Verdict::Member(r.resolution)
    } else {
        Verdict::NonMemberAtCap(cap)
    };
    MembershipVerdict {
        object: x.clone(),
        side: Side::Range,
        verdict,
    }
}

/// Truncated resolution `Z'` of `Z` with `s : Z' -> Z`, and the two induced Hom comparisons.
#[derive(Clone, Debug)]
pub struct ConditionCWitness {
    pub truncated: BoundedComplex,
    pub s: ChainMap,
    /// `Hom_K(X, Z') -> Hom_D(X, Z)` is bijective.
    pub left_iso: bool,
    /// `Hom_D(Z, X') -> Hom_K(Z', X')` is bijective.
    pub right_iso: bool,
}

impl ConditionCWitness {
    pub fn both_isos_verified(&self) -> bool {
        self.left_iso && self.right_iso
    }
}

/// Whether `matrix` is square and invertible (vacuously true when both spaces are zero).
fn bijective(m: &ExactMatrix) -> bool {
    m.rows() == m.cols() && (m.rows() == 0 || m.is_invertible())
}

/// Builds `Z' = σ^{≥-depth} P` for the minimal projective resolution `P -> Z`, and checks that
/// composing with `s` identifies `Hom(X, Z')` with `Hom(X, Z)` and `Hom(Z, X')` with
/// `Hom(Z', X')`, for `X, X'` complexes of projectives supported in `window`.
///
/// `Hom_D(X, Z)` is computed as `Hom_K(X, P)` and `Hom_D(Z, X')` as `Hom_K(σ^{≥-M} P, X')`
/// for a depth `M` below the window.
pub fn condition_c_witness(
    x: &BoundedComplex,
    xp: &BoundedComplex,
    z: &BoundedComplex,
    window: (i64, i64),
    depth: i64,
) -> Result<ConditionCWitness> {
    let deep = depth.max(1 - window.0) + 2;
    let z_lo = z.range().map_or(0, |r| r.0);
    let cap = (z_lo + deep).max(1) as usize;
    let res = proj_resolution(z, cap);
    let (full, _) = brutal_truncate(&res.resolution, deep);
    let (truncated, incl) = brutal_truncate(&res.resolution, depth);
    let s = res.quasi_iso.compose(&incl);
    let field = z.field();

    // Hom_K(X, Z') -> Hom_K(X, P)
    let h_trunc = khom(x, &truncated)?;
    let h_full = khom(x, &res.resolution)?;
    let img: Vec<Vec<Scalar>> = h_trunc
        .basis()
        .iter()
        .map(|g| h_full.project(&incl.compose(g)))
        .collect();
    let left_iso = bijective(&columns(field, h_full.dim(), &img));

    // Hom_K(σ^{≥-M} P, X') -> Hom_K(Z', X')
    let (_, into_full) = brutal_truncate(&full, depth);
    let h_deep = khom(&full, xp)?;
    let h_short = khom(&truncated, xp)?;
    let img: Vec<Vec<Scalar>> = h_deep
        .basis()
        .iter()
        .map(|g| h_short.project(&g.compose(&into_full)))
        .collect();
    let right_iso = bijective(&columns(field, h_short.dim(), &img));

    Ok(ConditionCWitness {
        truncated,
        s,
        left_iso,
        right_iso,
    })
}

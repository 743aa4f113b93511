//! Seeded generators of complexes and chain maps for randomized checks.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{PathAlgebra, RepMap, Representation};
use crate::complexes::{khom, BoundedComplex, ChainMap};
use crate::error::Result;
use crate::exactla::{ExactMatrix, Scalar};

/// Size limits for generated complexes.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_terms: usize,
    pub max_term_dim: usize,
    /// Lowest degree is drawn from `-degree_spread..=degree_spread`.
    pub degree_spread: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_terms: 3,
            max_term_dim: 4,
            degree_spread: 1,
        }
    }
}

fn coeff(alg: &PathAlgebra, rng: &mut ChaCha8Rng) -> Scalar {
    alg.field().from_i64(rng.gen_range(-3..=3))
}

/// Direct sum of indecomposables drawn from `pool` with total dimension at most `max_dim`.
fn random_sum(pool: &[Representation], max_dim: usize, rng: &mut ChaCha8Rng) -> Representation {
    let alg = pool[0].algebra().clone();
    let mut chosen: Vec<Representation> = Vec::new();
    let mut total = 0;
    for _ in 0..4 {
        let m = &pool[rng.gen_range(0..pool.len())];
        if m.dim() > 0 && total + m.dim() <= max_dim {
            total += m.dim();
            chosen.push(m.clone());
        }
        if rng.gen_bool(0.4) {
            break;
        }
    }
    if chosen.is_empty() {
        if let Some(m) = pool
            .iter()
            .filter(|m| m.dim() > 0 && m.dim() <= max_dim)
            .min_by_key(|m| m.dim())
        {
            chosen.push(m.clone());
        } else {
            return Representation::zero(&alg);
        }
    }
    Representation::direct_sum(&chosen.iter().collect::<Vec<_>>()).expect("same algebra")
}

/// A random morphism `src -> dst` with `h ∘ prev = 0`.
fn random_differential(
    prev: Option<&RepMap>,
    src: &Representation,
    dst: &Representation,
    rng: &mut ChaCha8Rng,
) -> Result<RepMap> {
    let alg = src.algebra().clone();
    let f = alg.field();
    let hom = src.hom(dst)?;
    let basis = hom.basis();
    let allowed: Vec<Vec<Scalar>> = match prev {
        None => (0..basis.len())
            .map(|k| {
                (0..basis.len())
                    .map(|j| if j == k { f.one() } else { f.zero() })
                    .collect()
            })
            .collect(),
        Some(p) => {
            let cols: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|h| {
                    h.compose(p)
                        .mats
                        .iter()
                        .flat_map(|m| m.entries().iter().cloned())
                        .collect()
                })
                .collect();
            let rows = cols.first().map_or(0, Vec::len);
            if cols.is_empty() {
                Vec::new()
            } else {
                ExactMatrix::from_columns(f, rows, &cols)
                    .kernel_basis()
                    .columns()
            }
        }
    };
    let mut coeffs = vec![f.zero(); basis.len()];
    for a in &allowed {
        let c = coeff(&alg, rng);
        for (x, y) in coeffs.iter_mut().zip(a) {
            *x = f.add(x, &f.mul(&c, y));
        }
    }
    Ok(hom.combine(&coeffs))
}

fn random_complex_from(
    alg: &Arc<PathAlgebra>,
    pool: &[Representation],
    limits: Limits,
    rng: &mut ChaCha8Rng,
) -> Result<BoundedComplex> {
    let n = rng.gen_range(1..=limits.max_terms);
    let lo = rng.gen_range(-limits.degree_spread..=limits.degree_spread);
    let terms: Vec<Representation> = (0..n)
        .map(|_| random_sum(pool, limits.max_term_dim, rng))
        .collect();
    let mut diffs: Vec<RepMap> = Vec::new();
    for k in 0..n.saturating_sub(1) {
        let d = random_differential(diffs.last(), &terms[k], &terms[k + 1], rng)?;
        diffs.push(d);
    }
    BoundedComplex::new(alg, lo, terms, diffs)
}

/// Indecomposable projectives of the algebra.
pub fn projectives(alg: &Arc<PathAlgebra>) -> Vec<Representation> {
    (0..alg.num_vertices())
        .map(|v| Representation::projective(alg, v).expect("vertex in range"))
        .collect()
}

/// Projectives, injectives, and simples.
pub fn module_pool(alg: &Arc<PathAlgebra>) -> Vec<Representation> {
    let mut pool = projectives(alg);
    for v in 0..alg.num_vertices() {
        pool.push(Representation::injective(alg, v).expect("vertex in range"));
        pool.push(Representation::simple(alg, v).expect("vertex in range"));
    }
    pool
}

/// A nonzero bounded complex of projectives.
pub fn random_projective_complex(
    alg: &Arc<PathAlgebra>,
    limits: Limits,
    rng: &mut ChaCha8Rng,
) -> Result<BoundedComplex> {
    random_complex_from(alg, &projectives(alg), limits, rng)
}

/// A nonzero bounded complex whose terms are sums of projectives, injectives, and simples.
pub fn random_complex(
    alg: &Arc<PathAlgebra>,
    limits: Limits,
    rng: &mut ChaCha8Rng,
) -> Result<BoundedComplex> {
    random_complex_from(alg, &module_pool(alg), limits, rng)
}

/// A random chain map `x -> y` (a random combination of a basis of all chain maps).
pub fn random_chain_map(
    x: &BoundedComplex,
    y: &BoundedComplex,
    rng: &mut ChaCha8Rng,
) -> Result<ChainMap> {
    let h = khom(x, y)?;
    let f = x.field();
    Ok(h.chainmap_basis()
        .iter()
        .fold(ChainMap::zero(x, y), |acc, b| {
            acc.add(&b.scale(&f.from_i64(rng.gen_range(-3..=3))))
        }))
}

/// A random null-homotopic chain map `x -> y`.
pub fn random_nullhomotopic(
    x: &BoundedComplex,
    y: &BoundedComplex,
    rng: &mut ChaCha8Rng,
) -> Result<ChainMap> {
    let h = khom(x, y)?;
    let f = x.field();
    Ok(h.nullhomotopic_basis()
        .iter()
        .fold(ChainMap::zero(x, y), |acc, b| {
            acc.add(&b.scale(&f.from_i64(rng.gen_range(-3..=3))))
        }))
}

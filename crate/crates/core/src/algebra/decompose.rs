use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactla::ExactMatrix;

use super::diagram::{compose_blocks, Diagram};
use super::rep::{RepMap, Representation};

/// An indecomposable direct summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct ModuleSummand {
    pub module: Representation,
    pub embed: RepMap,
    pub project: RepMap,
}

impl ModuleSummand {
    /// Idempotent endomorphism of the ambient module with image this summand.
    pub fn idempotent(&self) -> RepMap {
        self.embed.compose(&self.project)
    }
}

/// Krull-Schmidt decomposition of a module over the rationals. `seed` drives the choice of
/// random endomorphisms when basis elements do not already split the module.
pub fn decompose(m: &Representation, seed: u64) -> Result<Vec<ModuleSummand>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = m.to_diagram().decompose(&mut rng)?;
    Ok(parts
        .into_iter()
        .map(|s| ModuleSummand {
            module: Representation::from_diagram(m.algebra(), &s.diagram),
            embed: RepMap { mats: s.embed },
            project: RepMap { mats: s.project },
        })
        .collect())
}

/// Isomorphism of two modules with split-local endomorphism rings.
pub fn indecomposables_isomorphic(u: &Diagram, v: &Diagram) -> Result<bool> {
    if u.dims != v.dims {
        return Ok(false);
    }
    let to = u.hom_space(v)?;
    let back = v.hom_space(u)?;
    let (end_hom, end) = u.end_algebra()?;
    let rad = end.radical()?;
    let r = rad.rank();
    for f in to.basis() {
        for g in back.basis() {
            let c = end_hom.coords_unchecked(&compose_blocks(&g, &f));
            let ext = rad.hstack(&ExactMatrix::column_vector(u.field, &c));
            if ext.rank() > r {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Whether two lists of indecomposable summands agree as multisets up to isomorphism.
pub fn same_summands(a: &[ModuleSummand], b: &[ModuleSummand]) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        let dx = x.module.to_diagram();
        for (j, y) in b.iter().enumerate() {
            if !used[j] && indecomposables_isomorphic(&dx, &y.module.to_diagram())? {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{ExactMatrix, Field};
    use crate::fixtures::a2;

    #[test]
    fn indecomposable_stays_whole() {
        let a = a2();
        let p1 = Representation::projective(&a, 0).unwrap();
        let parts = decompose(&p1, 0).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].idempotent(), p1.identity());
    }

    #[test]
    fn a2_dims_one_two_splits_into_projectives() {
        let a = a2();
        let q = Field::Rationals;
        let m = Representation::new(
            a.clone(),
            vec![1, 2],
            vec![ExactMatrix::from_i64(q, &[&[1], &[0]])],
        )
        .unwrap();
        let p1 = Representation::projective(&a, 0).unwrap();
        let p2 = Representation::projective(&a, 1).unwrap();
        let expected = decompose(&Representation::direct_sum(&[&p1, &p2]).unwrap(), 0).unwrap();
        for seed in [0, 1, 2] {
            let parts = decompose(&m, seed).unwrap();
            assert_eq!(parts.len(), 2);
            assert!(same_summands(&parts, &expected).unwrap());
            let total = parts
                .iter()
                .fold(RepMap::zero(&m, &m), |acc, s| acc.add(&s.idempotent()));
            assert_eq!(total, m.identity());
            assert!(parts[0]
                .idempotent()
                .compose(&parts[1].idempotent())
                .is_zero());
        }
    }

    #[test]
    fn repeated_summand() {
        let a = a2();
        let p1 = Representation::projective(&a, 0).unwrap();
        let m = Representation::direct_sum(&[&p1, &p1]).unwrap();
        let parts = decompose(&m, 3).unwrap();
        assert_eq!(parts.len(), 2);
        for s in &parts {
            assert!(s.module.is_isomorphic(&p1).unwrap());
        }
    }
}

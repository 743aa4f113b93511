//! The Nakayama functor `ν = D Hom_A(-, A)` on projective modules and the canonical pairing
//! `Hom(P, Y) × Hom(Y, νP) → k`.
//!
//! For a projective `P` with dual basis `id_P = Σ_k h_k ⊗ p_k` (`h_k ∈ Hom(P, A)`,
//! `p_k ∈ P`), the pairing is `(f, g) = Σ_k g(f(p_k))(h_k)`.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, Scalar};

use super::path_algebra::{Path, PathAlgebra};
use super::rep::{HomSpace, RepMap, Representation};

/// A projective module together with everything needed to apply `ν` and to pair against it.
#[derive(Clone, Debug)]
pub struct ProjectiveModule {
    module: Representation,
    /// `Hom(P, P_w)` for each vertex `w`; `ν(P)_w` is its dual with the dual basis.
    homs: Vec<HomSpace>,
    nu: Representation,
    /// Dual basis: (vertex v_k, p_k ∈ P_{v_k}, coordinates of h_k in `Hom(P, P_{v_k})`).
    dual_basis: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
}

/// Right multiplication by the arrow `a : w -> w'` as a map `P_{w'} -> P_w`.
fn right_mult(alg: &Arc<PathAlgebra>, arrow: usize) -> RepMap {
    let f = alg.field();
    let a = &alg.quiver().arrows[arrow];
    let ap = Path {
        source: a.source,
        target: a.target,
        arrows: vec![arrow],
    };
    let mats = (0..alg.num_vertices())
        .map(|u| {
            let src = alg.paths_between(a.target, u);
            let dst = alg.paths_between(a.source, u);
            let mut m = ExactMatrix::zeros(f, dst.len(), src.len());
            for (j, &b) in src.iter().enumerate() {
                let nf = alg.normal_form(&alg.basis()[b].after(&ap).unwrap());
                for (i, &c) in dst.iter().enumerate() {
                    m.set(i, j, nf[c].clone());
                }
            }
            m
        })
        .collect();
    RepMap { mats }
}

impl ProjectiveModule {
    pub fn new(module: &Representation) -> Result<Self> {
        if !module.is_projective() {
            return Err(Error::NotProjective);
        }
        let alg = module.algebra().clone();
        let f = alg.field();
        let n = alg.num_vertices();
        let indec: Vec<Representation> = (0..n)
            .map(|w| Representation::projective(&alg, w))
            .collect::<Result<_>>()?;
        let homs: Vec<HomSpace> = indec.iter().map(|p| module.hom(p)).collect::<Result<_>>()?;

        // right A-module structure on Hom(P, A), dualized
        let action = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let rho = right_mult(&alg, ai);
                let (w, w2) = (a.source, a.target);
                let cols: Vec<Vec<Scalar>> = homs[w2]
                    .basis()
                    .iter()
                    .map(|h| homs[w].coords_unchecked(&rho.compose(h)))
                    .collect();
                let r = if cols.is_empty() {
                    ExactMatrix::zeros(f, homs[w].dim(), 0)
                } else {
                    ExactMatrix::from_columns(f, homs[w].dim(), &cols)
                };
                r.transpose()
            })
            .collect();
        let nu = Representation::new_unchecked(
            alg.clone(),
            homs.iter().map(HomSpace::dim).collect(),
            action,
        );

        let cover = module.projective_cover();
        let theta_inv = cover.map.inverse().ok_or(Error::NotProjective)?;
        let parts: Vec<Representation> = cover.vertices.iter().map(|&v| indec[v].clone()).collect();
        let refs: Vec<&Representation> = parts.iter().collect();
        let dual_basis = cover
            .generators
            .iter()
            .enumerate()
            .map(|(k, (v, p))| {
                let h = Representation::sum_projection(&refs, k).compose(&theta_inv);
                (*v, p.clone(), homs[*v].coords_unchecked(&h))
            })
            .collect();
        Ok(ProjectiveModule {
            module: module.clone(),
            homs,
            nu,
            dual_basis,
        })
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    /// `ν(P) = D Hom_A(P, A)`.
    pub fn nakayama(&self) -> &Representation {
        &self.nu
    }

    /// `ν(f) : ν(P) -> ν(Q)` for `f : P -> Q`.
    pub fn nakayama_map(&self, target: &ProjectiveModule, f: &RepMap) -> RepMap {
        let field = self.module.field();
        let mats = self
            .homs
            .iter()
            .zip(&target.homs)
            .map(|(hp, hq)| {
                let cols: Vec<Vec<Scalar>> = hq
                    .basis()
                    .iter()
                    .map(|h| hp.coords_unchecked(&h.compose(f)))
                    .collect();
                let m = if cols.is_empty() {
                    ExactMatrix::zeros(field, hp.dim(), 0)
                } else {
                    ExactMatrix::from_columns(field, hp.dim(), &cols)
                };
                m.transpose()
            })
            .collect();
        RepMap { mats }
    }

    /// `(f, g)` for `f : P -> Y` and `g : Y -> ν(P)`.
    pub fn pairing(&self, f: &RepMap, g: &RepMap) -> Scalar {
        let field = self.module.field();
        let mut acc = Scalar::zero();
        for (v, p, c) in &self.dual_basis {
            let y = f.mats[*v].mul_vec(p);
            let phi = g.mats[*v].mul_vec(&y);
            for (a, b) in phi.iter().zip(c) {
                if !a.is_zero() && !b.is_zero() {
                    acc = field.add(&acc, &field.mul(a, b));
                }
            }
        }
        acc
    }

    /// `Tr_P(u) = (id_P, u)` for `u : P -> ν(P)`.
    pub fn trace(&self, u: &RepMap) -> Scalar {
        self.pairing(&self.module.identity(), u)
    }
}

/// `ν(P)` for a projective module.
pub fn nakayama(p: &Representation) -> Result<Representation> {
    Ok(ProjectiveModule::new(p)?.nu)
}

/// `ν(f)` for a morphism between projective modules.
pub fn nakayama_map(
    source: &Representation,
    target: &Representation,
    f: &RepMap,
) -> Result<RepMap> {
    let ps = ProjectiveModule::new(source)?;
    let pt = ProjectiveModule::new(target)?;
    Ok(ps.nakayama_map(&pt, f))
}

/// The canonical pairing `Hom(P, Y) × Hom(Y, νP) → k`.
pub fn module_pairing(
    p: &Representation,
    y: &Representation,
    f: &RepMap,
    g: &RepMap,
) -> Result<Scalar> {
    let pm = ProjectiveModule::new(p)?;
    if !f.is_morphism(p, y) {
        return Err(Error::ShapeMismatch("f is not a morphism P -> Y".into()));
    }
    if !g.is_morphism(y, pm.nakayama()) {
        return Err(Error::ShapeMismatch("g is not a morphism Y -> ν(P)".into()));
    }
    Ok(pm.pairing(f, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::decompose::decompose;
    use crate::exactla::Field;
    use crate::fixtures::{a2, a3_zero_relation, dual_numbers};

    #[test]
    fn nakayama_sends_projectives_to_injectives() {
        for alg in [a2(), dual_numbers(), a3_zero_relation()] {
            for v in 0..alg.num_vertices() {
                let p = Representation::projective(&alg, v).unwrap();
                let nu = nakayama(&p).unwrap();
                // relations hold
                assert!(Representation::new(
                    alg.clone(),
                    nu.dims().to_vec(),
                    nu.actions().to_vec()
                )
                .is_ok());
                assert!(nu
                    .is_isomorphic(&Representation::injective(&alg, v).unwrap())
                    .unwrap());
            }
        }
    }

    #[test]
    fn dual_numbers_self_injective() {
        let a = dual_numbers();
        let reg = Representation::regular(&a);
        assert!(nakayama(&reg).unwrap().is_isomorphic(&reg).unwrap());
    }

    #[test]
    fn nakayama_refuses_non_projective() {
        let a = a2();
        let s = Representation::simple(&a, 0).unwrap();
        assert!(matches!(nakayama(&s), Err(Error::NotProjective)));
    }

    #[test]
    fn functorial_and_unital() {
        let a = a3_zero_relation();
        let p: Vec<Representation> = (0..3)
            .map(|v| Representation::projective(&a, v).unwrap())
            .collect();
        let x = Representation::direct_sum(&[&p[1], &p[2]]).unwrap();
        let y = Representation::direct_sum(&[&p[0], &p[1]]).unwrap();
        let z = Representation::regular(&a);
        let (px, py, pz) = (
            ProjectiveModule::new(&x).unwrap(),
            ProjectiveModule::new(&y).unwrap(),
            ProjectiveModule::new(&z).unwrap(),
        );
        assert_eq!(
            px.nakayama_map(&px, &x.identity()),
            px.nakayama().identity()
        );
        let fq = Field::Rationals;
        let hxy = x.hom(&y).unwrap();
        let hyz = y.hom(&z).unwrap();
        let f = hxy.combine(
            &(0..hxy.dim())
                .map(|i| fq.from_i64(i as i64 + 1))
                .collect::<Vec<_>>(),
        );
        let g = hyz.combine(
            &(0..hyz.dim())
                .map(|i| fq.from_i64(2 - i as i64))
                .collect::<Vec<_>>(),
        );
        let lhs = px.nakayama_map(&pz, &g.compose(&f));
        let rhs = py.nakayama_map(&pz, &g).compose(&px.nakayama_map(&py, &f));
        assert_eq!(lhs, rhs);
        let f2 = hxy.basis()[0].clone();
        assert_eq!(
            px.nakayama_map(&py, &f.add(&f2)),
            px.nakayama_map(&py, &f).add(&px.nakayama_map(&py, &f2))
        );
    }

    #[test]
    fn pairing_is_perfect() {
        for alg in [a2(), dual_numbers(), a3_zero_relation()] {
            let p = Representation::regular(&alg);
            let pm = ProjectiveModule::new(&p).unwrap();
            let ys = vec![
                Representation::regular(&alg),
                Representation::injective(&alg, 0).unwrap(),
                Representation::simple(&alg, alg.num_vertices() - 1).unwrap(),
            ];
            for y in ys {
                let fs = p.hom(&y).unwrap().basis();
                let gs = y.hom(pm.nakayama()).unwrap().basis();
                assert_eq!(fs.len(), gs.len());
                let m: Vec<Vec<Scalar>> = fs
                    .iter()
                    .map(|f| gs.iter().map(|g| pm.pairing(f, g)).collect())
                    .collect();
                if !m.is_empty() {
                    assert!(ExactMatrix::from_rows(alg.field(), &m).is_invertible());
                }
            }
        }
    }

    #[test]
    fn pairing_for_indecomposable_projective_evaluates_at_generator() {
        let a = a2();
        let p2 = Representation::projective(&a, 1).unwrap();
        let pm = ProjectiveModule::new(&p2).unwrap();
        let i2 = pm.nakayama().clone();
        let f = p2.hom(&i2).unwrap().basis()[0].clone();
        let g = i2.identity();
        assert!(!pm.pairing(&f, &g).is_zero());
        assert!(pm.pairing(&p2.hom(&i2).unwrap().zero(), &g).is_zero());
        let _ = decompose;
    }
}

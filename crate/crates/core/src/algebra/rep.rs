use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, Field, Scalar};

use super::diagram::{Diagram, DiagramHom, Edge};
use super::path_algebra::{Path, PathAlgebra};

/// A finite-dimensional left module: one vector space per vertex, one matrix per arrow
/// (target dimension × source dimension).
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<PathAlgebra>,
    dims: Vec<usize>,
    action: Vec<ExactMatrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        *self.algebra == *other.algebra && self.dims == other.dims && self.action == other.action
    }
}

/// A module homomorphism, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMap {
    pub mats: Vec<ExactMatrix>,
}

impl Representation {
    pub fn new(
        algebra: Arc<PathAlgebra>,
        dims: Vec<usize>,
        action: Vec<ExactMatrix>,
    ) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.num_vertices() || action.len() != q.arrows.len() {
            return Err(Error::InvalidRepresentation(
                "wrong number of vertex spaces or arrow matrices".into(),
            ));
        }
        for (a, m) in q.arrows.iter().zip(&action) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidRepresentation(format!(
                    "matrix of arrow {} has the wrong shape",
                    a.name
                )));
            }
        }
        let rep = Representation {
            algebra,
            dims,
            action,
        };
        for (n, r) in rep.algebra.relations().iter().enumerate() {
            let Some((_, p0)) = r.iter().find(|(c, _)| !c.is_zero()) else {
                continue;
            };
            let f = rep.field();
            let mut acc = ExactMatrix::zeros(f, rep.dims[p0.target], rep.dims[p0.source]);
            for (c, p) in r {
                acc.add_scaled(c, &rep.path_matrix(p));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation {n} does not act as zero"
                )));
            }
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<PathAlgebra>,
        dims: Vec<usize>,
        action: Vec<ExactMatrix>,
    ) -> Self {
        Representation {
            algebra,
            dims,
            action,
        }
    }

    pub fn zero(algebra: &Arc<PathAlgebra>) -> Self {
        let n = algebra.num_vertices();
        let f = algebra.field();
        let action = algebra
            .quiver()
            .arrows
            .iter()
            .map(|_| ExactMatrix::zeros(f, 0, 0))
            .collect();
        Representation {
            algebra: algebra.clone(),
            dims: vec![0; n],
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn action(&self, arrow: usize) -> &ExactMatrix {
        &self.action[arrow]
    }

    pub fn actions(&self) -> &[ExactMatrix] {
        &self.action
    }

    /// Matrix by which a path acts (composite of arrow matrices).
    pub fn path_matrix(&self, p: &Path) -> ExactMatrix {
        let mut m = ExactMatrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            m = self.action[a].mul(&m);
        }
        m
    }

    pub fn same_algebra(&self, other: &Representation) -> Result<()> {
        if *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn to_diagram(&self) -> Diagram {
        let edges = self
            .algebra
            .quiver()
            .arrows
            .iter()
            .zip(&self.action)
            .map(|(a, m)| Edge {
                src: a.source,
                dst: a.target,
                mat: m.clone(),
            })
            .collect();
        Diagram {
            field: self.field(),
            dims: self.dims.clone(),
            edges,
        }
    }

    pub fn from_diagram(algebra: &Arc<PathAlgebra>, d: &Diagram) -> Self {
        Representation {
            algebra: algebra.clone(),
            dims: d.dims.clone(),
            action: d.edges.iter().map(|e| e.mat.clone()).collect(),
        }
    }

    pub fn direct_sum(parts: &[&Representation]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidRepresentation("empty direct sum".into()))?;
        for p in parts {
            first.same_algebra(p)?;
        }
        let alg = first.algebra.clone();
        let f = alg.field();
        let n = alg.num_vertices();
        let dims = (0..n)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let action = (0..alg.quiver().arrows.len())
            .map(|a| {
                ExactMatrix::block_diag(f, &parts.iter().map(|p| &p.action[a]).collect::<Vec<_>>())
            })
            .collect();
        Ok(Representation {
            algebra: alg,
            dims,
            action,
        })
    }

    /// Inclusion of and projection onto summand `k` of `direct_sum(parts)`.
    pub fn sum_injection(parts: &[&Representation], k: usize) -> RepMap {
        let f = parts[0].field();
        let n = parts[0].dims.len();
        let mats = (0..n)
            .map(|v| {
                let total: usize = parts.iter().map(|p| p.dims[v]).sum();
                let off: usize = parts[..k].iter().map(|p| p.dims[v]).sum();
                let mut m = ExactMatrix::zeros(f, total, parts[k].dims[v]);
                m.set_block(off, 0, &ExactMatrix::identity(f, parts[k].dims[v]));
                m
            })
            .collect();
        RepMap { mats }
    }

    pub fn sum_projection(parts: &[&Representation], k: usize) -> RepMap {
        RepMap {
            mats: Self::sum_injection(parts, k)
                .mats
                .iter()
                .map(|m| m.transpose())
                .collect(),
        }
    }

    /// `Ae_v` with basis the normal paths starting at `v`.
    pub fn projective(algebra: &Arc<PathAlgebra>, v: usize) -> Result<Self> {
        if v >= algebra.num_vertices() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let n = algebra.num_vertices();
        let spaces: Vec<Vec<usize>> = (0..n).map(|w| algebra.paths_between(v, w)).collect();
        Ok(Self::from_left_ideal(algebra, &spaces))
    }

    /// The left regular module `A`.
    pub fn regular(algebra: &Arc<PathAlgebra>) -> Self {
        let n = algebra.num_vertices();
        let spaces: Vec<Vec<usize>> = (0..n)
            .map(|w| {
                (0..algebra.dim())
                    .filter(|&i| algebra.basis()[i].target == w)
                    .collect()
            })
            .collect();
        Self::from_left_ideal(algebra, &spaces)
    }

    fn from_left_ideal(algebra: &Arc<PathAlgebra>, spaces: &[Vec<usize>]) -> Self {
        let f = algebra.field();
        let action = algebra
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arrow_path = Path {
                    source: a.source,
                    target: a.target,
                    arrows: vec![ai],
                };
                let mut m = ExactMatrix::zeros(f, spaces[a.target].len(), spaces[a.source].len());
                for (j, &b) in spaces[a.source].iter().enumerate() {
                    let prod = arrow_path.after(&algebra.basis()[b]).unwrap();
                    let nf = algebra.normal_form(&prod);
                    for (i, &c) in spaces[a.target].iter().enumerate() {
                        m.set(i, j, nf[c].clone());
                    }
                }
                m
            })
            .collect();
        Representation {
            algebra: algebra.clone(),
            dims: spaces.iter().map(|s| s.len()).collect(),
            action,
        }
    }

    /// `D(e_v A)`, the injective envelope of the simple at `v`.
    pub fn injective(algebra: &Arc<PathAlgebra>, v: usize) -> Result<Self> {
        if v >= algebra.num_vertices() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let f = algebra.field();
        let n = algebra.num_vertices();
        // vertex w carries the dual of e_v A e_w
        let spaces: Vec<Vec<usize>> = (0..n).map(|w| algebra.paths_between(w, v)).collect();
        let action = algebra
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arrow_path = Path {
                    source: a.source,
                    target: a.target,
                    arrows: vec![ai],
                };
                // (a·φ)(x) = φ(x∘a) for x in e_v A e_target
                let mut m = ExactMatrix::zeros(f, spaces[a.target].len(), spaces[a.source].len());
                for (i, &x) in spaces[a.target].iter().enumerate() {
                    let prod = algebra.basis()[x].after(&arrow_path).unwrap();
                    let nf = algebra.normal_form(&prod);
                    for (j, &y) in spaces[a.source].iter().enumerate() {
                        m.set(i, j, nf[y].clone());
                    }
                }
                m
            })
            .collect();
        Ok(Representation {
            algebra: algebra.clone(),
            dims: spaces.iter().map(|s| s.len()).collect(),
            action,
        })
    }

    pub fn simple(algebra: &Arc<PathAlgebra>, v: usize) -> Result<Self> {
        if v >= algebra.num_vertices() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let f = algebra.field();
        let dims: Vec<usize> = (0..algebra.num_vertices())
            .map(|w| usize::from(w == v))
            .collect();
        let action = algebra
            .quiver()
            .arrows
            .iter()
            .map(|a| ExactMatrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Ok(Representation {
            algebra: algebra.clone(),
            dims,
            action,
        })
    }

    /// Vector-space dual, a module over the opposite algebra.
    pub fn dualize(&self) -> Representation {
        Representation {
            algebra: self.algebra.opposite(),
            dims: self.dims.clone(),
            action: self.action.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Radical `Σ_a im(a)` as column bases per vertex.
    pub fn radical_spaces(&self) -> Vec<ExactMatrix> {
        let f = self.field();
        (0..self.dims.len())
            .map(|v| {
                let mut span = ExactMatrix::zeros(f, self.dims[v], 0);
                for (a, m) in self.algebra.quiver().arrows.iter().zip(&self.action) {
                    if a.target == v {
                        span = span.hstack(m);
                    }
                }
                span.column_space()
            })
            .collect()
    }

    /// Multiplicity of each simple in the top `M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces()
            .iter()
            .zip(&self.dims)
            .map(|(r, &d)| d - r.cols())
            .collect()
    }

    /// Socle `∩_a ker(a)` as column bases per vertex.
    pub fn socle_spaces(&self) -> Vec<ExactMatrix> {
        let f = self.field();
        (0..self.dims.len())
            .map(|v| {
                let mut stacked = ExactMatrix::zeros(f, 0, self.dims[v]);
                for (a, m) in self.algebra.quiver().arrows.iter().zip(&self.action) {
                    if a.source == v {
                        stacked = stacked.vstack(m);
                    }
                }
                stacked.kernel_basis()
            })
            .collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_spaces().iter().map(|s| s.cols()).collect()
    }

    /// Sub-representation on block-wise stable subspaces, with its inclusion.
    pub fn subrepresentation(&self, spaces: &[ExactMatrix]) -> (Representation, RepMap) {
        let d = self.to_diagram().restrict(spaces);
        (
            Representation::from_diagram(&self.algebra, &d),
            RepMap {
                mats: spaces.to_vec(),
            },
        )
    }

    /// Quotient by block-wise stable subspaces, with the canonical projection.
    pub fn quotient(&self, spaces: &[ExactMatrix]) -> (Representation, RepMap) {
        let f = self.field();
        let qbs: Vec<_> = spaces
            .iter()
            .zip(&self.dims)
            .map(|(s, &n)| crate::exactla::quotient_basis(f, n, s))
            .collect();
        let action = self
            .algebra
            .quiver()
            .arrows
            .iter()
            .zip(&self.action)
            .map(|(a, m)| {
                qbs[a.target]
                    .projection
                    .mul(m)
                    .mul(&qbs[a.source].representatives)
            })
            .collect();
        let rep = Representation {
            algebra: self.algebra.clone(),
            dims: qbs.iter().map(|q| q.dim()).collect(),
            action,
        };
        (
            rep,
            RepMap {
                mats: qbs.into_iter().map(|q| q.projection).collect(),
            },
        )
    }

    /// Map `Ae_v -> self` sending `e_v` to `m ∈ self_v`.
    pub fn map_from_projective(&self, v: usize, m: &[Scalar]) -> (Representation, RepMap) {
        let alg = &self.algebra;
        let p = Representation::projective(alg, v).expect("vertex in range");
        let f = self.field();
        let mats = (0..alg.num_vertices())
            .map(|w| {
                let idx = alg.paths_between(v, w);
                let cols: Vec<Vec<Scalar>> = idx
                    .iter()
                    .map(|&b| {
                        alg.basis()[b]
                            .arrows
                            .iter()
                            .fold(m.to_vec(), |acc, &a| self.action[a].mul_vec(&acc))
                    })
                    .collect();
                if cols.is_empty() {
                    ExactMatrix::zeros(f, self.dims[w], 0)
                } else {
                    ExactMatrix::from_columns(f, self.dims[w], &cols)
                }
            })
            .collect();
        (p, RepMap { mats })
    }

    /// Projective cover: a direct sum of indecomposable projectives (listed by vertex) with a
    /// surjection onto `self` whose kernel lies in the radical.
    pub fn projective_cover(&self) -> ProjectiveCover {
        let f = self.field();
        let rad = self.radical_spaces();
        let mut tops = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            let qb = crate::exactla::quotient_basis(f, self.dims[v], r);
            for g in qb.representatives.columns() {
                tops.push((v, g));
            }
        }
        self.cover_from_generators(tops)
    }

    pub(crate) fn cover_from_generators(&self, gens: Vec<(usize, Vec<Scalar>)>) -> ProjectiveCover {
        let f = self.field();
        let mut parts = Vec::new();
        let mut maps = Vec::new();
        for (v, g) in &gens {
            let (p, m) = self.map_from_projective(*v, g);
            parts.push(p);
            maps.push(m);
        }
        if parts.is_empty() {
            let zero = Representation::zero(&self.algebra);
            let map = RepMap::zero(&zero, self);
            return ProjectiveCover {
                vertices: Vec::new(),
                generators: gens,
                cover: zero,
                map,
            };
        }
        let refs: Vec<&Representation> = parts.iter().collect();
        let cover = Representation::direct_sum(&refs).unwrap();
        let mats = (0..self.dims.len())
            .map(|w| {
                let cols: Vec<Vec<Scalar>> = maps
                    .iter()
                    .flat_map(|part| part.mats[w].columns())
                    .collect();
                if cols.is_empty() {
                    ExactMatrix::zeros(f, self.dims[w], 0)
                } else {
                    ExactMatrix::from_columns(f, self.dims[w], &cols)
                }
            })
            .collect();
        ProjectiveCover {
            vertices: gens.iter().map(|(v, _)| *v).collect(),
            generators: gens,
            cover,
            map: RepMap { mats },
        }
    }

    /// Whether the module is projective: its projective cover has the same dimension.
    pub fn is_projective(&self) -> bool {
        let alg = &self.algebra;
        let tops = self.top_dims();
        (0..self.dims.len()).all(|w| {
            let expected: usize = tops
                .iter()
                .enumerate()
                .map(|(v, m)| m * alg.paths_between(v, w).len())
                .sum();
            expected == self.dims[w]
        })
    }

    pub fn is_injective(&self) -> bool {
        self.dualize().is_projective()
    }

    /// Injective envelope `I = ⊕ I_v^{m_v}` (multiplicities from the socle) with an embedding.
    pub fn injective_envelope(&self) -> (Representation, RepMap) {
        let pc = self.dualize().projective_cover();
        let env = pc.cover.dualize();
        let emb = RepMap {
            mats: pc.map.mats.iter().map(|m| m.transpose()).collect(),
        };
        let env = Representation {
            algebra: self.algebra.clone(),
            dims: env.dims,
            action: env.action,
        };
        (env, emb)
    }

    /// Kernel of the projective cover.
    pub fn syzygy(&self) -> Representation {
        let pc = self.projective_cover();
        let kernels: Vec<ExactMatrix> = pc.map.mats.iter().map(ExactMatrix::kernel_basis).collect();
        pc.cover.subrepresentation(&kernels).0
    }

    /// Cokernel of the injective envelope, computed dually over the opposite algebra.
    pub fn cosyzygy(&self) -> Representation {
        let om = self.dualize().syzygy().dualize();
        Representation {
            algebra: self.algebra.clone(),
            dims: om.dims,
            action: om.action,
        }
    }

    pub fn hom(&self, target: &Representation) -> Result<HomSpace> {
        self.same_algebra(target)?;
        Ok(HomSpace {
            inner: self.to_diagram().hom_space(&target.to_diagram())?,
        })
    }

    pub fn identity(&self) -> RepMap {
        RepMap {
            mats: self
                .dims
                .iter()
                .map(|&d| ExactMatrix::identity(self.field(), d))
                .collect(),
        }
    }

    /// Isomorphism test: a basis morphism (or the sum of all of them) that is invertible
    /// settles it quickly; otherwise compare Krull-Schmidt decompositions.
    pub fn is_isomorphic(&self, other: &Representation) -> Result<bool> {
        if self.dims != other.dims {
            return Ok(false);
        }
        let fs = self.hom(other)?.basis();
        let sum = fs
            .iter()
            .fold(RepMap::zero(self, other), |acc, x| acc.add(x));
        if fs.iter().chain(std::iter::once(&sum)).any(RepMap::is_iso) {
            return Ok(true);
        }
        let ds = super::decompose::decompose(self, 0)?;
        let dt = super::decompose::decompose(other, 0)?;
        super::decompose::same_summands(&ds, &dt)
    }
}

impl RepMap {
    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        RepMap {
            mats: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| ExactMatrix::zeros(f, t, s))
                .collect(),
        }
    }

    pub fn compose(&self, first: &RepMap) -> RepMap {
        RepMap {
            mats: self
                .mats
                .iter()
                .zip(&first.mats)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &RepMap) -> RepMap {
        RepMap {
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> RepMap {
        RepMap {
            mats: self.mats.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn neg(&self) -> RepMap {
        RepMap {
            mats: self.mats.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.mats.iter().all(|m| m.is_invertible())
    }

    pub fn inverse(&self) -> Option<RepMap> {
        Some(RepMap {
            mats: self
                .mats
                .iter()
                .map(|m| m.inverse())
                .collect::<Option<Vec<_>>>()?,
        })
    }

    pub fn is_morphism(&self, source: &Representation, target: &Representation) -> bool {
        source
            .to_diagram()
            .is_morphism(&target.to_diagram(), &self.mats)
    }

    /// Direct sum of maps `⊕ f_k : ⊕ X_k -> ⊕ Y_k`.
    pub fn block_diag(field: Field, maps: &[&RepMap]) -> RepMap {
        let n = maps[0].mats.len();
        RepMap {
            mats: (0..n)
                .map(|v| {
                    ExactMatrix::block_diag(
                        field,
                        &maps.iter().map(|m| &m.mats[v]).collect::<Vec<_>>(),
                    )
                })
                .collect(),
        }
    }

    /// Block matrix of maps `⊕_j X_j -> ⊕_i Y_i`; `blocks[i][j] : X_j -> Y_i`.
    pub fn from_blocks(field: Field, blocks: &[Vec<RepMap>]) -> RepMap {
        let n = blocks[0][0].mats.len();
        RepMap {
            mats: (0..n)
                .map(|v| {
                    let rows: Vec<ExactMatrix> = blocks
                        .iter()
                        .map(|row| {
                            row.iter().fold(
                                ExactMatrix::zeros(field, row[0].mats[v].rows(), 0),
                                |acc, m| acc.hstack(&m.mats[v]),
                            )
                        })
                        .collect();
                    let cols = rows[0].cols();
                    rows.iter()
                        .fold(ExactMatrix::zeros(field, 0, cols), |acc, r| acc.vstack(r))
                })
                .collect(),
        }
    }
}

/// Hom space between two representations with a fixed basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    inner: DiagramHom,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn basis(&self) -> Vec<RepMap> {
        self.inner
            .basis()
            .into_iter()
            .map(|mats| RepMap { mats })
            .collect()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> RepMap {
        RepMap {
            mats: self.inner.combine(coeffs),
        }
    }

    pub fn coords(&self, f: &RepMap) -> Option<Vec<Scalar>> {
        self.inner.coords(&f.mats)
    }

    pub fn coords_unchecked(&self, f: &RepMap) -> Vec<Scalar> {
        self.inner.coords_unchecked(&f.mats)
    }

    pub fn zero(&self) -> RepMap {
        RepMap {
            mats: self.inner.zero(),
        }
    }
}

/// Result of a projective cover computation.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Vertex of each indecomposable summand `Ae_v`, in order.
    pub vertices: Vec<usize>,
    /// Image of `e_v` for each summand.
    pub generators: Vec<(usize, Vec<Scalar>)>,
    pub cover: Representation,
    pub map: RepMap,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a2, dual_numbers, radical_square_zero_two_loops};

    #[test]
    fn a2_projectives_and_injectives() {
        let a = a2();
        assert_eq!(Representation::projective(&a, 0).unwrap().dims(), &[1, 1]);
        assert_eq!(Representation::projective(&a, 1).unwrap().dims(), &[0, 1]);
        assert_eq!(Representation::injective(&a, 0).unwrap().dims(), &[1, 0]);
        assert_eq!(Representation::injective(&a, 1).unwrap().dims(), &[1, 1]);
        assert!(matches!(
            Representation::projective(&a, 2),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn projectives_sum_to_algebra() {
        for alg in [a2(), dual_numbers(), radical_square_zero_two_loops()] {
            let total: usize = (0..alg.num_vertices())
                .map(|v| Representation::projective(&alg, v).unwrap().dim())
                .sum();
            assert_eq!(total, alg.dim());
            assert_eq!(Representation::regular(&alg).dim(), alg.dim());
        }
    }

    #[test]
    fn a2_hom_dimensions() {
        let a = a2();
        let p1 = Representation::projective(&a, 0).unwrap();
        let p2 = Representation::projective(&a, 1).unwrap();
        assert_eq!(p2.hom(&p1).unwrap().dim(), 1);
        assert_eq!(p1.hom(&p2).unwrap().dim(), 0);
        let id = p1.identity();
        assert!(p1.hom(&p1).unwrap().coords(&id).is_some());
    }

    #[test]
    fn hom_from_projective_is_vertex_space() {
        let a = radical_square_zero_two_loops();
        let p = Representation::projective(&a, 0).unwrap();
        let i = Representation::injective(&a, 0).unwrap();
        assert_eq!(p.hom(&i).unwrap().dim(), i.dims()[0]);
        let m = Representation::direct_sum(&[&i, &p]).unwrap();
        assert_eq!(Representation::regular(&a).hom(&m).unwrap().dim(), m.dim());
    }

    #[test]
    fn relations_are_checked() {
        let a = dual_numbers();
        let f = a.field();
        let bad = Representation::new(a.clone(), vec![1], vec![ExactMatrix::from_i64(f, &[&[1]])]);
        assert!(matches!(bad, Err(Error::InvalidRepresentation(_))));
        let ok = Representation::new(
            a,
            vec![2],
            vec![ExactMatrix::from_i64(f, &[&[0, 0], &[1, 0]])],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn dualize_a2_projective_is_opposite_injective() {
        let a = a2();
        let dp1 = Representation::projective(&a, 0).unwrap().dualize();
        let op = a.opposite();
        let i1 = Representation::injective(&op, 0).unwrap();
        assert!(dp1.is_isomorphic(&i1).unwrap());
        let s = Representation::simple(&a, 1).unwrap();
        assert!(s
            .dualize()
            .is_isomorphic(&Representation::simple(&op, 1).unwrap())
            .unwrap());
        assert_eq!(s.dualize().dualize(), s);
    }

    #[test]
    fn socle_and_envelope() {
        let a = radical_square_zero_two_loops();
        let reg = Representation::regular(&a);
        assert_eq!(reg.socle_dims(), vec![2]);
        let (env, emb) = reg.injective_envelope();
        assert_eq!(env.dim(), 6);
        assert!(emb.is_morphism(&reg, &env));
        assert!(emb.mats.iter().all(|m| m.rank() == m.cols()));
        assert!(env.is_injective());

        let b = a2();
        let p1 = Representation::projective(&b, 0).unwrap();
        assert_eq!(p1.socle_dims(), vec![0, 1]);
        let (env, emb) = p1.injective_envelope();
        assert!(env
            .is_isomorphic(&Representation::injective(&b, 1).unwrap())
            .unwrap());
        assert!(emb.is_iso());

        let s = Representation::simple(&b, 0).unwrap();
        let ss =
            Representation::direct_sum(&[&s, &Representation::simple(&b, 1).unwrap()]).unwrap();
        assert_eq!(ss.socle_dims(), ss.dims().to_vec());
    }

    #[test]
    fn projective_cover_of_simple() {
        let a = a2();
        let s1 = Representation::simple(&a, 0).unwrap();
        let pc = s1.projective_cover();
        assert_eq!(pc.vertices, vec![0]);
        assert!(pc.map.is_morphism(&pc.cover, &s1));
        assert!(!s1.is_projective());
        assert!(Representation::regular(&a).is_projective());
    }
}

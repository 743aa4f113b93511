//! Block-diagonal linear diagrams: finitely many vector spaces joined by linear maps.
//!
//! Representations of a quiver and bounded complexes of representations are both such
//! diagrams; morphisms are block-diagonal families commuting with every edge. Hom spaces,
//! kernels, and Fitting-style decompositions are computed once here for both.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{minimal_polynomial, rational_roots, CoordMap, ExactMatrix, Field, Scalar};

use super::endo::EndAlgebraPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub mat: ExactMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub field: Field,
    pub dims: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// Block-diagonal family of matrices, one per block.
pub type BlockMap = Vec<ExactMatrix>;

pub fn compose_blocks(g: &BlockMap, f: &BlockMap) -> BlockMap {
    g.iter().zip(f).map(|(a, b)| a.mul(b)).collect()
}

pub fn flatten(m: &BlockMap) -> Vec<Scalar> {
    m.iter().flat_map(|b| b.entries().iter().cloned()).collect()
}

fn unflatten(field: Field, shapes: &[(usize, usize)], v: &[Scalar]) -> BlockMap {
    let mut out = Vec::with_capacity(shapes.len());
    let mut off = 0;
    for &(r, c) in shapes {
        out.push(ExactMatrix::from_vec(
            field,
            r,
            c,
            v[off..off + r * c].to_vec(),
        ));
        off += r * c;
    }
    out
}

impl Diagram {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn identity(&self) -> BlockMap {
        self.dims
            .iter()
            .map(|&d| ExactMatrix::identity(self.field, d))
            .collect()
    }

    fn same_shape(&self, other: &Diagram) -> bool {
        self.dims.len() == other.dims.len()
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.src == b.src && a.dst == b.dst)
    }

    /// Whether `f` is a morphism `self -> target`.
    pub fn is_morphism(&self, target: &Diagram, f: &BlockMap) -> bool {
        self.same_shape(target)
            && f.len() == self.dims.len()
            && f.iter()
                .enumerate()
                .all(|(b, m)| m.rows() == target.dims[b] && m.cols() == self.dims[b])
            && self
                .edges
                .iter()
                .zip(&target.edges)
                .all(|(x, y)| y.mat.mul(&f[x.src]) == f[x.dst].mul(&x.mat))
    }

    /// All morphisms `self -> target`, as the null space of the commuting-square system.
    pub fn hom_space(&self, target: &Diagram) -> Result<DiagramHom> {
        if !self.same_shape(target) {
            return Err(Error::ShapeMismatch(
                "diagrams have different block structure".into(),
            ));
        }
        let f = self.field;
        let shapes: Vec<(usize, usize)> = self
            .dims
            .iter()
            .zip(&target.dims)
            .map(|(&s, &t)| (t, s))
            .collect();
        let mut offsets = Vec::with_capacity(shapes.len());
        let mut n = 0;
        for &(r, c) in &shapes {
            offsets.push(n);
            n += r * c;
        }
        let neq: usize = self
            .edges
            .iter()
            .map(|e| target.dims[e.dst] * self.dims[e.src])
            .sum();
        let mut eqs = ExactMatrix::zeros(f, neq, n);
        let mut row = 0;
        for (xe, ye) in self.edges.iter().zip(&target.edges) {
            let (s, t) = (xe.src, xe.dst);
            let (xs, xt) = (self.dims[s], self.dims[t]);
            let ys = target.dims[s];
            for i in 0..target.dims[t] {
                for j in 0..xs {
                    // (Y_e F_s)[i,j] - (F_t X_e)[i,j]
                    for k in 0..ys {
                        let v = ye.mat.get(i, k);
                        if !v.is_zero() {
                            let col = offsets[s] + k * xs + j;
                            let cur = eqs.get(row, col).clone();
                            eqs.set(row, col, f.add(&cur, v));
                        }
                    }
                    for l in 0..xt {
                        let v = xe.mat.get(l, j);
                        if !v.is_zero() {
                            let col = offsets[t] + i * xt + l;
                            let cur = eqs.get(row, col).clone();
                            eqs.set(row, col, f.sub(&cur, v));
                        }
                    }
                    row += 1;
                }
            }
        }
        let kernel = eqs.kernel_basis();
        Ok(DiagramHom {
            field: f,
            shapes,
            coords: CoordMap::new(kernel),
        })
    }

    /// Restriction to a block-wise subspace (columns of `basis[b]`), which must be stable
    /// under every edge.
    pub fn restrict(&self, basis: &[ExactMatrix]) -> Diagram {
        let maps: Vec<CoordMap> = basis.iter().map(|b| CoordMap::new(b.clone())).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let img = e.mat.mul(&basis[e.src]);
                let mat = maps[e.dst]
                    .coords_matrix(&img)
                    .expect("subspace is not stable under the diagram");
                Edge {
                    src: e.src,
                    dst: e.dst,
                    mat,
                }
            })
            .collect();
        Diagram {
            field: self.field,
            dims: basis.iter().map(|b| b.cols()).collect(),
            edges,
        }
    }

    /// Endomorphism algebra of the diagram with its composition table.
    pub fn end_algebra(&self) -> Result<(DiagramHom, EndAlgebraPresentation)> {
        let hom = self.hom_space(self)?;
        let basis = hom.basis();
        let d = basis.len();
        let mut mult = vec![vec![Vec::new(); d]; d];
        for (i, bi) in basis.iter().enumerate() {
            for (j, bj) in basis.iter().enumerate() {
                mult[i][j] = hom.coords_unchecked(&compose_blocks(bi, bj));
            }
        }
        let unit = if d == 0 {
            Vec::new()
        } else {
            hom.coords_unchecked(&self.identity())
        };
        Ok((hom, EndAlgebraPresentation::new(self.field, mult, unit)))
    }

    /// Krull-Schmidt decomposition by repeated Fitting splitting along endomorphisms with an
    /// eigenvalue in the ground field.
    pub fn decompose(&self, rng: &mut ChaCha8Rng) -> Result<Vec<Summand>> {
        if !self.field.is_rational() {
            return Err(Error::UnsupportedField(
                "decomposition needs the rationals".into(),
            ));
        }
        let whole = Summand {
            diagram: self.clone(),
            embed: self.identity(),
            project: self.identity(),
        };
        let mut out = Vec::new();
        let mut stack = vec![whole];
        while let Some(s) = stack.pop() {
            if s.diagram.total_dim() == 0 {
                continue;
            }
            match s.diagram.split_once(rng)? {
                None => out.push(s),
                Some((a, b)) => {
                    stack.push(b.nest_in(&s));
                    stack.push(a.nest_in(&s));
                }
            }
        }
        Ok(out)
    }

    /// `None` when the endomorphism algebra is split-local.
    fn split_once(&self, rng: &mut ChaCha8Rng) -> Result<Option<(Summand, Summand)>> {
        let (hom, end) = self.end_algebra()?;
        let rad = end.radical()?;
        if end.dim() - rad.cols() <= 1 {
            return Ok(None);
        }
        let basis = hom.basis();
        let mut candidates: Vec<BlockMap> = basis.clone();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                candidates.push(add_blocks(&basis[i], &basis[j]));
            }
        }
        for _ in 0..8 {
            let coeffs: Vec<Scalar> = (0..basis.len())
                .map(|_| self.field.from_i64(rng.gen_range(-3..=3)))
                .collect();
            candidates.push(hom.combine(&coeffs));
        }
        for phi in &candidates {
            if let Some(pair) = self.fitting_split(phi) {
                return Ok(Some(pair));
            }
        }
        Err(Error::NonSplitResidue)
    }

    fn fitting_split(&self, phi: &BlockMap) -> Option<(Summand, Summand)> {
        let f = self.field;
        let n = self.total_dim();
        let whole = ExactMatrix::block_diag(f, &phi.iter().collect::<Vec<_>>());
        let roots = rational_roots(f, &minimal_polynomial(&whole));
        for lambda in roots {
            let shifted: BlockMap = phi
                .iter()
                .map(|m| {
                    m.sub(&ExactMatrix::identity(f, m.rows()).scale(&lambda))
                        .pow(n)
                })
                .collect();
            let kers: Vec<ExactMatrix> = shifted.iter().map(|m| m.kernel_basis()).collect();
            let kdim: usize = kers.iter().map(|k| k.cols()).sum();
            if kdim == 0 || kdim == n {
                continue;
            }
            let ims: Vec<ExactMatrix> = shifted.iter().map(|m| m.column_space()).collect();
            return Some((
                self.summand_from(&kers, &ims),
                self.summand_from(&ims, &kers),
            ));
        }
        None
    }

    /// Summand spanned by `keep`, projected along the complement `drop`.
    fn summand_from(&self, keep: &[ExactMatrix], drop: &[ExactMatrix]) -> Summand {
        let project = keep
            .iter()
            .zip(drop)
            .map(|(k, d)| {
                let full = k
                    .hstack(d)
                    .inverse()
                    .expect("Fitting pieces are complementary");
                full.submatrix(0..k.cols(), 0..full.cols())
            })
            .collect();
        Summand {
            diagram: self.restrict(keep),
            embed: keep.to_vec(),
            project,
        }
    }
}

fn add_blocks(a: &BlockMap, b: &BlockMap) -> BlockMap {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

/// Morphism space between two diagrams, with a fixed basis.
#[derive(Clone, Debug)]
pub struct DiagramHom {
    field: Field,
    shapes: Vec<(usize, usize)>,
    coords: CoordMap,
}

impl DiagramHom {
    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn basis(&self) -> Vec<BlockMap> {
        self.coords
            .basis()
            .columns()
            .iter()
            .map(|c| unflatten(self.field, &self.shapes, c))
            .collect()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> BlockMap {
        unflatten(self.field, &self.shapes, &self.coords.combine(coeffs))
    }

    pub fn coords(&self, m: &BlockMap) -> Option<Vec<Scalar>> {
        self.coords.coords(&flatten(m))
    }

    pub fn coords_unchecked(&self, m: &BlockMap) -> Vec<Scalar> {
        self.coords.coords_unchecked(&flatten(m))
    }

    pub fn zero(&self) -> BlockMap {
        self.shapes
            .iter()
            .map(|&(r, c)| ExactMatrix::zeros(self.field, r, c))
            .collect()
    }
}

/// A direct summand together with its split embedding and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub diagram: Diagram,
    pub embed: BlockMap,
    pub project: BlockMap,
}

impl Summand {
    fn nest_in(self, outer: &Summand) -> Summand {
        Summand {
            diagram: self.diagram,
            embed: compose_blocks(&outer.embed, &self.embed),
            project: compose_blocks(&self.project, &outer.project),
        }
    }

    /// The idempotent endomorphism of the ambient diagram cutting out this summand.
    pub fn idempotent(&self) -> BlockMap {
        compose_blocks(&self.embed, &self.project)
    }
}

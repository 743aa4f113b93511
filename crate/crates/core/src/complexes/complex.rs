use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::diagram::{BlockMap, Diagram, Edge};
use crate::algebra::{PathAlgebra, RepMap, Representation};
use crate::error::{Error, Result};
use crate::exactla::{CoordMap, ExactMatrix, Field, Scalar};

/// A bounded cochain complex of representations. Terms outside `lo..lo + terms.len()` are
/// zero, and the stored range never starts or ends with a zero term.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundedComplex {
    algebra: Arc<PathAlgebra>,
    lo: i64,
    terms: Vec<Representation>,
    /// `diffs[k] : terms[k] -> terms[k + 1]`.
    diffs: Vec<RepMap>,
}

/// A degree-zero chain map, stored over the union of the supports of source and target.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    source: BoundedComplex,
    target: BoundedComplex,
    lo: i64,
    comps: Vec<RepMap>,
}

/// Smallest window `[lo, hi]` containing both supports; `None` if both complexes are zero.
pub(crate) fn union_window(a: &BoundedComplex, b: &BoundedComplex) -> Option<(i64, i64)> {
    match (a.range(), b.range()) {
        (None, None) => None,
        (Some(r), None) | (None, Some(r)) => Some(r),
        (Some((l1, h1)), Some((l2, h2))) => Some((l1.min(l2), h1.max(h2))),
    }
}

pub(crate) fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl BoundedComplex {
    /// Builds a complex with `terms[k]` in degree `lo + k`; checks shapes, that each
    /// differential is a module map, and that consecutive differentials compose to zero.
    pub fn new(
        algebra: &Arc<PathAlgebra>,
        lo: i64,
        terms: Vec<Representation>,
        diffs: Vec<RepMap>,
    ) -> Result<Self> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::InvalidComplex(
                "need exactly one differential between consecutive terms".into(),
            ));
        }
        for t in &terms {
            if **t.algebra() != **algebra {
                return Err(Error::AlgebraMismatch);
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            let deg = lo + k as i64;
            if !d.is_morphism(&terms[k], &terms[k + 1]) {
                return Err(Error::InvalidComplex(format!(
                    "differential in degree {deg} is not a module map"
                )));
            }
            if k + 1 < diffs.len() && !diffs[k + 1].compose(d).is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "d∘d is nonzero starting in degree {deg}"
                )));
            }
        }
        Ok(Self::new_unchecked(algebra, lo, terms, diffs))
    }

    pub(crate) fn new_unchecked(
        algebra: &Arc<PathAlgebra>,
        lo: i64,
        mut terms: Vec<Representation>,
        mut diffs: Vec<RepMap>,
    ) -> Self {
        let mut lo = lo;
        while terms.last().is_some_and(Representation::is_zero) {
            terms.pop();
            diffs.pop();
        }
        while terms.first().is_some_and(Representation::is_zero) {
            terms.remove(0);
            if !diffs.is_empty() {
                diffs.remove(0);
            }
            lo += 1;
        }
        if terms.is_empty() {
            lo = 0;
            diffs.clear();
        }
        BoundedComplex {
            algebra: algebra.clone(),
            lo,
            terms,
            diffs,
        }
    }

    pub fn zero(algebra: &Arc<PathAlgebra>) -> Self {
        BoundedComplex {
            algebra: algebra.clone(),
            lo: 0,
            terms: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// The module `m` concentrated in degree `deg`.
    pub fn stalk(m: &Representation, deg: i64) -> Self {
        Self::new_unchecked(m.algebra(), deg, vec![m.clone()], Vec::new())
    }

    /// `source --f--> target` with `source` in degree `deg`.
    pub fn two_term(
        f: &RepMap,
        source: &Representation,
        target: &Representation,
        deg: i64,
    ) -> Result<Self> {
        Self::new(
            source.algebra(),
            deg,
            vec![source.clone(), target.clone()],
            vec![f.clone()],
        )
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    /// Lowest and highest nonzero degrees.
    pub fn range(&self) -> Option<(i64, i64)> {
        if self.terms.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.terms.len() as i64 - 1))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, i: i64) -> Representation {
        match self.index(i) {
            Some(k) => self.terms[k].clone(),
            None => Representation::zero(&self.algebra),
        }
    }

    fn index(&self, i: i64) -> Option<usize> {
        let k = i - self.lo;
        (k >= 0 && (k as usize) < self.terms.len()).then_some(k as usize)
    }

    /// `d^i : X^i -> X^{i+1}` (a zero map outside the support).
    pub fn diff(&self, i: i64) -> RepMap {
        match (self.index(i), self.index(i + 1)) {
            (Some(k), Some(_)) => self.diffs[k].clone(),
            _ => RepMap::zero(&self.term(i), &self.term(i + 1)),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(Representation::dim).sum()
    }

    pub fn is_projective_complex(&self) -> bool {
        self.terms.iter().all(Representation::is_projective)
    }

    pub fn is_injective_complex(&self) -> bool {
        self.terms.iter().all(Representation::is_injective)
    }

    pub fn same_algebra(&self, other: &BoundedComplex) -> Result<()> {
        if *self.algebra == *other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// `X[n]`: `X[n]^i = X^{i+n}` with differential `(-1)^n d_X`.
    pub fn shift(&self, n: i64) -> Self {
        let s = self.field().from_i64(sign(n));
        BoundedComplex {
            algebra: self.algebra.clone(),
            lo: if self.terms.is_empty() {
                0
            } else {
                self.lo - n
            },
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&s)).collect(),
        }
    }

    pub fn direct_sum(parts: &[&BoundedComplex]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidComplex("empty direct sum".into()))?;
        for p in parts {
            first.same_algebra(p)?;
        }
        let windows: Vec<(i64, i64)> = parts.iter().filter_map(|p| p.range()).collect();
        let Some(lo) = windows.iter().map(|w| w.0).min() else {
            return Ok(Self::zero(&first.algebra));
        };
        let hi = windows.iter().map(|w| w.1).max().unwrap();
        let f = first.field();
        let terms: Vec<Representation> = (lo..=hi)
            .map(|i| {
                let ts: Vec<Representation> = parts.iter().map(|p| p.term(i)).collect();
                Representation::direct_sum(&ts.iter().collect::<Vec<_>>())
            })
            .collect::<Result<_>>()?;
        let diffs = (lo..hi)
            .map(|i| {
                let ds: Vec<RepMap> = parts.iter().map(|p| p.diff(i)).collect();
                RepMap::block_diag(f, &ds.iter().collect::<Vec<_>>())
            })
            .collect();
        Ok(Self::new_unchecked(&first.algebra, lo, terms, diffs))
    }

    /// `ker d^i / im d^{i-1}` with the induced module structure.
    pub fn cohomology(&self, i: i64) -> Representation {
        let x = self.term(i);
        let d_out = self.diff(i);
        let d_in = self.diff(i - 1);
        let kernels: Vec<ExactMatrix> = d_out.mats.iter().map(ExactMatrix::kernel_basis).collect();
        let (z, _) = x.subrepresentation(&kernels);
        let images: Vec<ExactMatrix> = kernels
            .iter()
            .zip(&d_in.mats)
            .map(|(k, d)| {
                let cm = CoordMap::new(k.clone());
                let cols: Vec<Vec<Scalar>> = d
                    .columns()
                    .iter()
                    .map(|c| cm.coords(c).expect("image lies in the kernel"))
                    .collect();
                if cols.is_empty() {
                    ExactMatrix::zeros(self.field(), k.cols(), 0)
                } else {
                    ExactMatrix::from_columns(self.field(), k.cols(), &cols).column_space()
                }
            })
            .collect();
        z.quotient(&images).0
    }

    /// Whether all cohomology vanishes.
    pub fn is_acyclic(&self) -> bool {
        match self.range() {
            None => true,
            Some((lo, hi)) => (lo..=hi).all(|i| self.cohomology(i).is_zero()),
        }
    }

    /// Vector-space dual over the opposite algebra: `D(X)^i = D(X^{-i})`.
    pub fn dualize(&self) -> Self {
        self.dualize_over(&self.algebra.opposite())
    }

    /// Dual complex, with terms regarded as modules over `target` (which must be the
    /// opposite of this complex's algebra).
    pub(crate) fn dualize_over(&self, target: &Arc<PathAlgebra>) -> Self {
        let Some((lo, hi)) = self.range() else {
            return Self::zero(target);
        };
        let terms = (-hi..=-lo)
            .map(|i| dual_module(&self.term(-i), target))
            .collect();
        // D(X)^i -> D(X)^{i+1} is the transpose of d^{-i-1}
        let diffs = (-hi..-lo)
            .map(|i| transpose_map(&self.diff(-i - 1)))
            .collect();
        Self::new_unchecked(target, -hi, terms, diffs)
    }

    /// Block diagram of the complex over the degree window `[lo, hi]`: one block per
    /// (degree, vertex), with arrow edges in each degree and differential edges between.
    pub(crate) fn to_diagram(&self, lo: i64, hi: i64) -> Diagram {
        let nv = self.algebra.num_vertices();
        let arrows = &self.algebra.quiver().arrows;
        let mut dims = Vec::new();
        let mut edges = Vec::new();
        for i in lo..=hi {
            let base = ((i - lo) as usize) * nv;
            let t = self.term(i);
            dims.extend_from_slice(t.dims());
            for (a, m) in arrows.iter().zip(t.actions()) {
                edges.push(Edge {
                    src: base + a.source,
                    dst: base + a.target,
                    mat: m.clone(),
                });
            }
            if i < hi {
                let d = self.diff(i);
                for (v, m) in d.mats.into_iter().enumerate() {
                    edges.push(Edge {
                        src: base + v,
                        dst: base + nv + v,
                        mat: m,
                    });
                }
            }
        }
        Diagram {
            field: self.field(),
            dims,
            edges,
        }
    }

    /// Reads back a complex from a diagram produced by `to_diagram` (or a restriction of it).
    pub(crate) fn from_diagram(algebra: &Arc<PathAlgebra>, lo: i64, d: &Diagram) -> Self {
        let nv = algebra.num_vertices();
        let na = algebra.quiver().arrows.len();
        let width = d.dims.len() / nv.max(1);
        let per_degree = na + nv;
        let mut terms = Vec::with_capacity(width);
        let mut diffs = Vec::new();
        for k in 0..width {
            let base = k * per_degree;
            let dims = d.dims[k * nv..(k + 1) * nv].to_vec();
            let action = d.edges[base..base + na]
                .iter()
                .map(|e| e.mat.clone())
                .collect();
            terms.push(Representation::new_unchecked(algebra.clone(), dims, action));
            if k + 1 < width {
                diffs.push(RepMap {
                    mats: d.edges[base + na..base + na + nv]
                        .iter()
                        .map(|e| e.mat.clone())
                        .collect(),
                });
            }
        }
        Self::new_unchecked(algebra, lo, terms, diffs)
    }

    pub fn identity(&self) -> ChainMap {
        let comps = self.terms.iter().map(Representation::identity).collect();
        ChainMap {
            source: self.clone(),
            target: self.clone(),
            lo: self.lo,
            comps,
        }
    }
}

pub(crate) fn dual_module(m: &Representation, target: &Arc<PathAlgebra>) -> Representation {
    Representation::new_unchecked(
        target.clone(),
        m.dims().to_vec(),
        m.actions().iter().map(ExactMatrix::transpose).collect(),
    )
}

pub(crate) fn transpose_map(f: &RepMap) -> RepMap {
    RepMap {
        mats: f.mats.iter().map(ExactMatrix::transpose).collect(),
    }
}

impl ChainMap {
    /// Builds a chain map from components in degrees `lo..`; missing components are zero.
    /// Checks shapes, module-map property, and commutation with the differentials.
    pub fn new(
        source: &BoundedComplex,
        target: &BoundedComplex,
        lo: i64,
        comps: Vec<RepMap>,
    ) -> Result<Self> {
        source.same_algebra(target)?;
        for (k, c) in comps.iter().enumerate() {
            let i = lo + k as i64;
            if !c.is_morphism(&source.term(i), &target.term(i)) {
                return Err(Error::InvalidMorphism(format!(
                    "component in degree {i} is not a module map"
                )));
            }
        }
        let f = Self::normalize(source, target, |i| {
            let k = i - lo;
            (k >= 0 && (k as usize) < comps.len()).then(|| comps[k as usize].clone())
        });
        if let Some(i) = f.first_noncommuting_degree() {
            return Err(Error::InvalidMorphism(format!(
                "square in degree {i} does not commute"
            )));
        }
        Ok(f)
    }

    fn normalize(
        source: &BoundedComplex,
        target: &BoundedComplex,
        comp: impl Fn(i64) -> Option<RepMap>,
    ) -> Self {
        let (lo, hi) = union_window(source, target).unwrap_or((0, -1));
        let comps = (lo..=hi)
            .map(|i| comp(i).unwrap_or_else(|| RepMap::zero(&source.term(i), &target.term(i))))
            .collect();
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            lo,
            comps,
        }
    }

    pub(crate) fn from_fn(
        source: &BoundedComplex,
        target: &BoundedComplex,
        comp: impl Fn(i64) -> RepMap,
    ) -> Self {
        Self::normalize(source, target, |i| Some(comp(i)))
    }

    pub fn zero(source: &BoundedComplex, target: &BoundedComplex) -> Self {
        Self::normalize(source, target, |_| None)
    }

    pub fn source(&self) -> &BoundedComplex {
        &self.source
    }

    pub fn target(&self) -> &BoundedComplex {
        &self.target
    }

    /// `f^i` (zero outside the supports).
    pub fn comp(&self, i: i64) -> RepMap {
        let k = i - self.lo;
        if k >= 0 && (k as usize) < self.comps.len() {
            self.comps[k as usize].clone()
        } else {
            RepMap::zero(&self.source.term(i), &self.target.term(i))
        }
    }

    fn window(&self) -> (i64, i64) {
        (self.lo, self.lo + self.comps.len() as i64 - 1)
    }

    fn first_noncommuting_degree(&self) -> Option<i64> {
        let (lo, hi) = self.window();
        (lo - 1..=hi).find(|&i| {
            self.target.diff(i).compose(&self.comp(i))
                != self.comp(i + 1).compose(&self.source.diff(i))
        })
    }

    pub fn is_chain_map(&self) -> bool {
        self.first_noncommuting_degree().is_none()
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ChainMap) -> ChainMap {
        Self::from_fn(&first.source, &self.target, |i| {
            self.comp(i).compose(&first.comp(i))
        })
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        Self::from_fn(&self.source, &self.target, |i| {
            self.comp(i).add(&other.comp(i))
        })
    }

    pub fn sub(&self, other: &ChainMap) -> ChainMap {
        Self::from_fn(&self.source, &self.target, |i| {
            self.comp(i).sub(&other.comp(i))
        })
    }

    pub fn scale(&self, s: &Scalar) -> ChainMap {
        Self::from_fn(&self.source, &self.target, |i| self.comp(i).scale(s))
    }

    pub fn neg(&self) -> ChainMap {
        Self::from_fn(&self.source, &self.target, |i| self.comp(i).neg())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(RepMap::is_zero)
    }

    /// Degreewise invertible.
    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(RepMap::is_iso)
    }

    /// `f[n]`, with `f[n]^i = f^{i+n}`.
    pub fn shift(&self, n: i64) -> ChainMap {
        let (s, t) = (self.source.shift(n), self.target.shift(n));
        Self::from_fn(&s, &t, |i| self.comp(i + n))
    }

    /// Blocks over the window `[lo, hi]`, ordered as in `BoundedComplex::to_diagram`.
    pub(crate) fn to_blocks(&self, lo: i64, hi: i64) -> BlockMap {
        (lo..=hi).flat_map(|i| self.comp(i).mats).collect()
    }

    pub(crate) fn from_blocks(
        source: &BoundedComplex,
        target: &BoundedComplex,
        lo: i64,
        blocks: &BlockMap,
    ) -> Self {
        let nv = source.algebra.num_vertices();
        Self::from_fn(source, target, |i| {
            let k = i - lo;
            if k < 0 || (k as usize + 1) * nv > blocks.len() {
                return RepMap::zero(&source.term(i), &target.term(i));
            }
            let k = k as usize;
            RepMap {
                mats: blocks[k * nv..(k + 1) * nv].to_vec(),
            }
        })
    }

    /// Induced map on `i`-th cohomology, in bases of class representatives chosen per vertex.
    fn on_cohomology(&self, i: i64) -> RepMap {
        let qs = cohomology_bases(&self.source, i);
        let qt = cohomology_bases(&self.target, i);
        let f = self.comp(i);
        let mats = qs
            .iter()
            .zip(&qt)
            .zip(&f.mats)
            .map(|(((reps, _), (_, proj)), m)| proj.mul(m).mul(reps))
            .collect();
        RepMap { mats }
    }

    /// Whether the map induces isomorphisms on all cohomology.
    pub fn is_quasi_iso(&self) -> bool {
        match union_window(&self.source, &self.target) {
            None => true,
            Some((lo, hi)) => self.is_quasi_iso_in(lo, hi),
        }
    }

    /// Whether the map induces isomorphisms on cohomology in degrees `lo..=hi`.
    pub fn is_quasi_iso_in(&self, lo: i64, hi: i64) -> bool {
        (lo..=hi).all(|i| self.on_cohomology(i).is_iso())
    }
}

/// Per vertex, class representatives of `H^i` (columns in `X^i`) and a matrix sending
/// cocycles to class coordinates.
fn cohomology_bases(x: &BoundedComplex, i: i64) -> Vec<(ExactMatrix, ExactMatrix)> {
    let f = x.field();
    let term = x.term(i);
    let d_out = x.diff(i);
    let d_in = x.diff(i - 1);
    (0..term.dims().len())
        .map(|v| {
            let n = term.dims()[v];
            let z = d_out.mats[v].kernel_basis();
            let b = d_in.mats[v].column_space();
            // choose a complement of B inside Z: extend a basis of B by columns of Z
            let mut basis = b.clone();
            let mut reps = ExactMatrix::zeros(f, n, 0);
            for c in z.columns() {
                let col = ExactMatrix::column_vector(f, &c);
                let ext = basis.hstack(&col);
                if ext.rank() > basis.rank() {
                    basis = ext;
                    reps = reps.hstack(&col);
                }
            }
            // coordinates in [B | reps | complement], keeping the reps part
            let full = basis.hstack(&complement(f, n, &basis));
            let inv = full.inverse().expect("basis extended to a full basis");
            let proj = inv.submatrix(b.cols()..b.cols() + reps.cols(), 0..n);
            (reps, proj)
        })
        .collect()
}

fn complement(f: Field, n: usize, span: &ExactMatrix) -> ExactMatrix {
    let mut basis = span.clone();
    let mut out = ExactMatrix::zeros(f, n, 0);
    for j in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[j] = f.one();
        let col = ExactMatrix::column_vector(f, &e);
        let ext = basis.hstack(&col);
        if ext.rank() > basis.rank() {
            basis = ext;
            out = out.hstack(&col);
        }
    }
    out
}

/// Mapping cone of `f : X -> Y` with the structure maps of the triangle `X -> Y -> C -> X[1]`.
#[derive(Clone, Debug)]
pub struct Cone {
    pub cone: BoundedComplex,
    /// `Y -> C`.
    pub inj: ChainMap,
    /// `C -> X[1]`.
    pub proj: ChainMap,
}

/// `C^i = X^{i+1} ⊕ Y^i` with differential `[[-d_X, 0], [f, d_Y]]`.
pub fn cone(f: &ChainMap) -> Cone {
    let (x, y) = (f.source(), f.target());
    let alg = x.algebra().clone();
    let field = x.field();
    let x1 = x.shift(1);
    let Some((lo, hi)) = union_window(&x1, y) else {
        let z = BoundedComplex::zero(&alg);
        return Cone {
            inj: ChainMap::zero(y, &z),
            proj: ChainMap::zero(&z, &x1),
            cone: z,
        };
    };
    let terms: Vec<Representation> = (lo..=hi)
        .map(|i| Representation::direct_sum(&[&x.term(i + 1), &y.term(i)]).expect("same algebra"))
        .collect();
    let diffs = (lo..hi)
        .map(|i| {
            let zero = RepMap::zero(&y.term(i), &x.term(i + 2));
            RepMap::from_blocks(
                field,
                &[
                    vec![x.diff(i + 1).neg(), zero],
                    vec![f.comp(i + 1), y.diff(i)],
                ],
            )
        })
        .collect();
    let c = BoundedComplex::new_unchecked(&alg, lo, terms, diffs);
    let inj = ChainMap::from_fn(y, &c, |i| {
        let parts = [x.term(i + 1), y.term(i)];
        Representation::sum_injection(&parts.iter().collect::<Vec<_>>(), 1)
    });
    let proj = ChainMap::from_fn(&c, &x1, |i| {
        let parts = [x.term(i + 1), y.term(i)];
        Representation::sum_projection(&parts.iter().collect::<Vec<_>>(), 0)
    });
    Cone { cone: c, inj, proj }
}

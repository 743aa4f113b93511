use crate::algebra::diagram::DiagramHom;
use crate::algebra::{EndAlgebraPresentation, RepMap};
use crate::error::Result;
use crate::exactla::{quotient_basis, ExactMatrix, QuotientBasis, Scalar};

use super::complex::{union_window, BoundedComplex, ChainMap};

/// `Hom_{K^b}(X, Y)`: chain maps modulo null-homotopic ones, with explicit bases.
#[derive(Clone, Debug)]
pub struct HomotopyHomSpace {
    source: BoundedComplex,
    target: BoundedComplex,
    lo: i64,
    hi: i64,
    chains: Option<DiagramHom>,
    /// Null-homotopic maps as coordinate columns in the chain-map basis.
    nullhomotopic: ExactMatrix,
    quotient: QuotientBasis,
}

/// Computes `Hom_{K^b}(x, y)`.
pub fn khom(x: &BoundedComplex, y: &BoundedComplex) -> Result<HomotopyHomSpace> {
    x.same_algebra(y)?;
    let f = x.field();
    let Some((lo, hi)) = union_window(x, y) else {
        let empty = ExactMatrix::zeros(f, 0, 0);
        return Ok(HomotopyHomSpace {
            source: x.clone(),
            target: y.clone(),
            lo: 0,
            hi: -1,
            chains: None,
            quotient: quotient_basis(f, 0, &empty),
            nullhomotopic: empty,
        });
    };
    let chains = x.to_diagram(lo, hi).hom_space(&y.to_diagram(lo, hi))?;
    let n = chains.dim();
    // each module map h : X^i -> Y^{i-1} yields the null-homotopic d h + h d
    let mut cols = Vec::new();
    for i in lo..=hi + 1 {
        let (xi, yi1) = (x.term(i), y.term(i - 1));
        if xi.is_zero() || yi1.is_zero() {
            continue;
        }
        let dy = y.diff(i - 1);
        let dx = x.diff(i - 1);
        for h in xi.hom(&yi1)?.basis() {
            let map = ChainMap::from_fn(x, y, |j| {
                if j == i {
                    dy.compose(&h)
                } else if j == i - 1 {
                    h.compose(&dx)
                } else {
                    RepMap::zero(&x.term(j), &y.term(j))
                }
            });
            cols.push(chains.coords_unchecked(&map.to_blocks(lo, hi)));
        }
    }
    let nullhomotopic = if cols.is_empty() {
        ExactMatrix::zeros(f, n, 0)
    } else {
        ExactMatrix::from_columns(f, n, &cols).column_space()
    };
    let quotient = quotient_basis(f, n, &nullhomotopic);
    Ok(HomotopyHomSpace {
        source: x.clone(),
        target: y.clone(),
        lo,
        hi,
        chains: Some(chains),
        nullhomotopic,
        quotient,
    })
}

impl HomotopyHomSpace {
    pub fn source(&self) -> &BoundedComplex {
        &self.source
    }

    pub fn target(&self) -> &BoundedComplex {
        &self.target
    }

    /// Dimension of the homotopy classes.
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn chain_dim(&self) -> usize {
        self.chains.as_ref().map_or(0, DiagramHom::dim)
    }

    pub fn nullhomotopic_dim(&self) -> usize {
        self.nullhomotopic.cols()
    }

    fn chain_from_coords(&self, c: &[Scalar]) -> ChainMap {
        match &self.chains {
            None => ChainMap::zero(&self.source, &self.target),
            Some(ch) => ChainMap::from_blocks(&self.source, &self.target, self.lo, &ch.combine(c)),
        }
    }

    pub fn chainmap_basis(&self) -> Vec<ChainMap> {
        let n = self.chain_dim();
        (0..n)
            .map(|k| {
                let mut e = vec![self.source.field().zero(); n];
                e[k] = self.source.field().one();
                self.chain_from_coords(&e)
            })
            .collect()
    }

    pub fn nullhomotopic_basis(&self) -> Vec<ChainMap> {
        self.nullhomotopic
            .columns()
            .iter()
            .map(|c| self.chain_from_coords(c))
            .collect()
    }

    /// One representative chain map per basis class.
    pub fn basis(&self) -> Vec<ChainMap> {
        self.quotient
            .representatives
            .columns()
            .iter()
            .map(|c| self.chain_from_coords(c))
            .collect()
    }

    /// The representative with the given class coordinates.
    pub fn combine(&self, coeffs: &[Scalar]) -> ChainMap {
        let c = self.quotient.representatives.mul_vec(coeffs);
        self.chain_from_coords(&c)
    }

    fn chain_coords(&self, f: &ChainMap) -> Vec<Scalar> {
        match &self.chains {
            None => Vec::new(),
            Some(ch) => ch.coords_unchecked(&f.to_blocks(self.lo, self.hi)),
        }
    }

    /// Class coordinates of a chain map `source -> target`.
    pub fn project(&self, f: &ChainMap) -> Vec<Scalar> {
        self.quotient.project(&self.chain_coords(f))
    }

    /// Whether `f` is a chain map `source -> target` (rather than an arbitrary family).
    pub fn contains(&self, f: &ChainMap) -> bool {
        match &self.chains {
            None => true,
            Some(ch) => ch.coords(&f.to_blocks(self.lo, self.hi)).is_some(),
        }
    }

    pub fn is_nullhomotopic(&self, f: &ChainMap) -> bool {
        self.project(f)
            .iter()
            .all(|c| c == &self.source.field().zero())
    }

    /// Whether `f ≃ g`.
    pub fn homotopic(&self, f: &ChainMap, g: &ChainMap) -> bool {
        self.is_nullhomotopic(&f.sub(g))
    }

    /// Matrix whose columns are class coordinates of `maps`.
    pub fn coordinate_matrix(&self, maps: &[ChainMap]) -> ExactMatrix {
        let f = self.source.field();
        let cols: Vec<Vec<Scalar>> = maps.iter().map(|m| self.project(m)).collect();
        if cols.is_empty() {
            ExactMatrix::zeros(f, self.dim(), 0)
        } else {
            ExactMatrix::from_columns(f, self.dim(), &cols)
        }
    }
}

/// `End_{K^b}(X)` on the class basis, with composition as product.
pub fn end_algebra_k(x: &BoundedComplex) -> Result<(HomotopyHomSpace, EndAlgebraPresentation)> {
    let e = khom(x, x)?;
    let basis = e.basis();
    let d = basis.len();
    let mult = basis
        .iter()
        .map(|a| basis.iter().map(|b| e.project(&a.compose(b))).collect())
        .collect();
    let unit = if d == 0 {
        Vec::new()
    } else {
        e.project(&x.identity())
    };
    Ok((e, EndAlgebraPresentation::new(x.field(), mult, unit)))
}

/// Whether `X ≅ 0` in `K^b`.
pub fn is_zero_in_k(x: &BoundedComplex) -> Result<bool> {
    Ok(khom(x, x)?.dim() == 0)
}

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactla::ExactMatrix;

use super::complex::{BoundedComplex, ChainMap};
use super::khom::{end_algebra_k, khom};
use super::resolution::{inj_resolution, proj_resolution};

/// An indecomposable summand of a complex in `K^b`, with split inclusion and projection.
#[derive(Clone, Debug)]
pub struct ComplexSummand {
    pub complex: BoundedComplex,
    pub embed: ChainMap,
    pub project: ChainMap,
}

/// Krull-Schmidt decomposition in `K^b` over the rationals: split in the category of
/// complexes, then drop the contractible pieces.
pub fn decompose_complex(x: &BoundedComplex, seed: u64) -> Result<Vec<ComplexSummand>> {
    let Some((lo, hi)) = x.range() else {
        return Ok(Vec::new());
    };
    let alg = x.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for s in x.to_diagram(lo, hi).decompose(&mut rng)? {
        let c = BoundedComplex::from_diagram(alg, lo, &s.diagram);
        if khom(&c, &c)?.dim() == 0 {
            continue;
        }
        let embed = ChainMap::from_blocks(&c, x, lo, &s.embed);
        let project = ChainMap::from_blocks(x, &c, lo, &s.project);
        out.push(ComplexSummand {
            complex: c,
            embed,
            project,
        });
    }
    Ok(out)
}

/// Whether two complexes with split-local `End_{K^b}` are isomorphic in `K^b`.
pub fn indecomposables_isomorphic_k(u: &BoundedComplex, v: &BoundedComplex) -> Result<bool> {
    let to = khom(u, v)?;
    let back = khom(v, u)?;
    if to.dim() == 0 || back.dim() == 0 {
        return Ok(false);
    }
    let (end_hom, end) = end_algebra_k(u)?;
    let rad = end.radical()?;
    let r = rad.rank();
    for f in to.basis() {
        for g in back.basis() {
            let c = end_hom.project(&g.compose(&f));
            if rad
                .hstack(&ExactMatrix::column_vector(u.field(), &c))
                .rank()
                > r
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism in `K^b`, by comparing indecomposable summands as multisets.
pub fn iso_in_k(x: &BoundedComplex, y: &BoundedComplex) -> Result<bool> {
    x.same_algebra(y)?;
    let dx = decompose_complex(x, 0)?;
    let dy = decompose_complex(y, 0)?;
    if dx.len() != dy.len() {
        return Ok(false);
    }
    let mut used = vec![false; dy.len()];
    'outer: for a in &dx {
        for (j, b) in dy.iter().enumerate() {
            if !used[j] && indecomposables_isomorphic_k(&a.complex, &b.complex)? {
                used[j] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Isomorphism in `D^b`, by comparing minimal projective resolutions (or minimal injective
/// coresolutions when the projective ones do not terminate within `cap`). When neither
/// terminates, the truncated minimal resolutions are compared, which is cap-relative.
pub fn iso_in_d(x: &BoundedComplex, y: &BoundedComplex, cap: usize) -> Result<bool> {
    x.same_algebra(y)?;
    let (px, py) = (proj_resolution(x, cap), proj_resolution(y, cap));
    if px.terminated && py.terminated {
        return iso_in_k(&px.resolution, &py.resolution);
    }
    if px.terminated != py.terminated {
        return Ok(false);
    }
    let (ix, iy) = (inj_resolution(x, cap), inj_resolution(y, cap));
    if ix.terminated && iy.terminated {
        return iso_in_k(&ix.resolution, &iy.resolution);
    }
    if ix.terminated != iy.terminated {
        return Ok(false);
    }
    let depth = match (x.range(), y.range()) {
        (Some((a, _)), Some((b, _))) => -(a.min(b) - cap as i64),
        _ => return Ok(x.is_zero() && y.is_zero()),
    };
    let (tx, _) = super::resolution::brutal_truncate(&px.resolution, depth);
    let (ty, _) = super::resolution::brutal_truncate(&py.resolution, depth);
    iso_in_k(&tx, &ty)
}

use std::fmt;

use crate::algebra::{RepMap, Representation};
use crate::exactla::{quotient_basis, CoordMap, ExactMatrix, Scalar};

use super::complex::{transpose_map, BoundedComplex, ChainMap};

/// Projective or injective dimension, or the honest verdict that it exceeds the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Finite(usize),
    ExceedsCap(usize),
}

impl Dimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, Dimension::Finite(_))
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            Dimension::Finite(n) => Some(*n),
            Dimension::ExceedsCap(_) => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::ExceedsCap(c) => write!(f, ">{c}"),
        }
    }
}

/// A minimal resolution with its comparison quasi-isomorphism.
#[derive(Clone, Debug)]
pub struct ResolutionReport {
    pub resolution: BoundedComplex,
    /// `resolution -> X` for projective resolutions, `X -> resolution` for injective ones.
    pub quasi_iso: ChainMap,
    pub terminated: bool,
    pub length: Dimension,
}

/// Minimal complex of projectives quasi-isomorphic to `x`, built from the top degree down.
///
/// At degree `n` the partial cone `C^n = P^{n+1} ⊕ X^n` is already exact above `n`; the
/// new term `P^n` is the projective cover of `Z^n / U`, where `Z^n = ker d_C^n` and
/// `U = 0 ⊕ d_X(X^{n-1})`. The resolution terminates when `Z^n = U`, i.e. `P^n = 0`
/// below the support of `x`; terms are computed down to `lo(x) - cap - 1`.
pub fn proj_resolution(x: &BoundedComplex, cap: usize) -> ResolutionReport {
    let alg = x.algebra().clone();
    let field = x.field();
    let Some((lo, hi)) = x.range() else {
        return ResolutionReport {
            resolution: x.clone(),
            quasi_iso: x.identity(),
            terminated: true,
            length: Dimension::Finite(0),
        };
    };
    let bottom = lo - cap as i64 - 1;
    // built top-down: terms[k], d_p[k] : terms[k] -> terms[k-1] (degree hi - k)
    let mut p_terms: Vec<Representation> = Vec::new();
    let mut p_diffs: Vec<RepMap> = Vec::new();
    let mut phis: Vec<RepMap> = Vec::new();
    let mut terminated = false;
    let zero = Representation::zero(&alg);
    let mut n = hi;
    while n >= bottom {
        let p_up = p_terms.last().cloned().unwrap_or_else(|| zero.clone());
        let p_up2 = if p_terms.len() >= 2 {
            p_terms[p_terms.len() - 2].clone()
        } else {
            zero.clone()
        };
        let d_up = p_diffs
            .last()
            .cloned()
            .unwrap_or_else(|| RepMap::zero(&p_up, &p_up2));
        let phi_up = phis
            .last()
            .cloned()
            .unwrap_or_else(|| RepMap::zero(&p_up, &x.term(n + 1)));
        let xn = x.term(n);
        let c = Representation::direct_sum(&[&p_up, &xn]).expect("same algebra");
        let zero_x = RepMap::zero(&xn, &p_up2);
        let d_c = RepMap::from_blocks(field, &[vec![d_up.neg(), zero_x], vec![phi_up, x.diff(n)]]);
        let kernels: Vec<ExactMatrix> = d_c.mats.iter().map(ExactMatrix::kernel_basis).collect();
        let (z, z_incl) = c.subrepresentation(&kernels);
        // U = image of X^{n-1} in the X-summand, in Z-coordinates
        let u_in_c = RepMap::from_blocks(
            field,
            &[
                vec![RepMap::zero(&x.term(n - 1), &p_up)],
                vec![x.diff(n - 1)],
            ],
        );
        let rad = z.radical_spaces();
        let mut gens = Vec::new();
        for v in 0..z.dims().len() {
            let cm = CoordMap::new(kernels[v].clone());
            let u_cols: Vec<Vec<Scalar>> = u_in_c.mats[v]
                .columns()
                .iter()
                .map(|col| cm.coords(col).expect("U lies in Z"))
                .collect();
            let mut span = rad[v].clone();
            for col in &u_cols {
                span = span.hstack(&ExactMatrix::column_vector(field, col));
            }
            let qb = quotient_basis(field, z.dims()[v], &span.column_space());
            for g in qb.representatives.columns() {
                gens.push((v, g));
            }
        }
        let cover = z.cover_from_generators(gens);
        let psi = z_incl.compose(&cover.map);
        let parts = [p_up.clone(), xn.clone()];
        let refs: Vec<&Representation> = parts.iter().collect();
        let psi1 = Representation::sum_projection(&refs, 0).compose(&psi);
        let psi2 = Representation::sum_projection(&refs, 1).compose(&psi);
        let pn = cover.cover;
        if pn.is_zero() && n < lo {
            terminated = true;
            break;
        }
        p_terms.push(pn);
        p_diffs.push(psi1.neg());
        phis.push(psi2);
        n -= 1;
    }
    // reverse into increasing degree order, lowest degree n + 1
    let low = n + 1;
    p_terms.reverse();
    phis.reverse();
    // p_diffs[k] maps degree (hi - k) to hi - k + 1; the top one (k = 0) maps into zero
    let mut diffs: Vec<RepMap> = p_diffs.into_iter().skip(1).collect();
    diffs.reverse();
    let resolution = BoundedComplex::new_unchecked(&alg, low, p_terms, diffs);
    let quasi_iso = ChainMap::from_fn(&resolution, x, |i| {
        let k = i - low;
        if k >= 0 && (k as usize) < phis.len() {
            phis[k as usize].clone()
        } else {
            RepMap::zero(&resolution.term(i), &x.term(i))
        }
    });
    let length = if terminated {
        let plo = resolution.range().map_or(lo, |r| r.0);
        Dimension::Finite((lo - plo).max(0) as usize)
    } else {
        Dimension::ExceedsCap(cap)
    };
    ResolutionReport {
        resolution,
        quasi_iso,
        terminated,
        length,
    }
}

/// Minimal complex of injectives quasi-isomorphic to `x`, by duality with the opposite algebra.
pub fn inj_resolution(x: &BoundedComplex, cap: usize) -> ResolutionReport {
    let alg = x.algebra().clone();
    let rep = proj_resolution(&x.dualize(), cap);
    let resolution = rep.resolution.dualize_over(&alg);
    // D(φ) : D(D X) = X -> D(P), in degree i the transpose of φ^{-i}
    let quasi_iso = ChainMap::from_fn(x, &resolution, |i| transpose_map(&rep.quasi_iso.comp(-i)));
    ResolutionReport {
        resolution,
        quasi_iso,
        terminated: rep.terminated,
        length: rep.length,
    }
}

/// Projective dimension of a complex, up to `cap`.
pub fn fpd(x: &BoundedComplex, cap: usize) -> Dimension {
    proj_resolution(x, cap).length
}

/// Injective dimension of a complex, up to `cap`.
pub fn fid(x: &BoundedComplex, cap: usize) -> Dimension {
    inj_resolution(x, cap).length
}

/// Brutal truncation `σ^{≥-n} P` with its inclusion into `P`.
pub fn brutal_truncate(p: &BoundedComplex, n: i64) -> (BoundedComplex, ChainMap) {
    let alg = p.algebra();
    let Some((lo, hi)) = p.range() else {
        return (p.clone(), p.identity());
    };
    let start = lo.max(-n);
    if start > hi {
        let z = BoundedComplex::zero(alg);
        return (z.clone(), ChainMap::zero(&z, p));
    }
    let terms = (start..=hi).map(|i| p.term(i)).collect();
    let diffs = (start..hi).map(|i| p.diff(i)).collect();
    let t = BoundedComplex::new_unchecked(alg, start, terms, diffs);
    let incl = ChainMap::from_fn(&t, p, |i| {
        if i >= start {
            p.term(i).identity()
        } else {
            RepMap::zero(&t.term(i), &p.term(i))
        }
    });
    (t, incl)
}

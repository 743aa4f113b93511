use num_traits::Zero;

use crate::algebra::ProjectiveModule;
use crate::complexes::complex::sign;
use crate::complexes::{khom, BoundedComplex, ChainMap};
use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, Scalar};

/// A bounded complex of projectives together with the Nakayama data of each term.
#[derive(Clone, Debug)]
pub struct ProjComplex {
    complex: BoundedComplex,
    lo: i64,
    modules: Vec<ProjectiveModule>,
    serre: BoundedComplex,
}

impl ProjComplex {
    pub fn new(x: &BoundedComplex) -> Result<Self> {
        let Some((lo, hi)) = x.range() else {
            return Ok(ProjComplex {
                complex: x.clone(),
                lo: 0,
                modules: Vec::new(),
                serre: x.clone(),
            });
        };
        let modules: Vec<ProjectiveModule> = (lo..=hi)
            .map(|i| ProjectiveModule::new(&x.term(i)).map_err(|_| Error::NotProjectiveComplex))
            .collect::<Result<_>>()?;
        let terms = modules.iter().map(|m| m.nakayama().clone()).collect();
        let diffs = (lo..hi)
            .map(|i| {
                let k = (i - lo) as usize;
                modules[k].nakayama_map(&modules[k + 1], &x.diff(i))
            })
            .collect();
        let serre = BoundedComplex::new_unchecked(x.algebra(), lo, terms, diffs);
        Ok(ProjComplex {
            complex: x.clone(),
            lo,
            modules,
            serre,
        })
    }

    pub fn complex(&self) -> &BoundedComplex {
        &self.complex
    }

    /// `S(X)`: the Nakayama functor applied termwise.
    pub fn serre(&self) -> &BoundedComplex {
        &self.serre
    }

    fn module(&self, i: i64) -> Option<&ProjectiveModule> {
        let k = i - self.lo;
        (k >= 0 && (k as usize) < self.modules.len()).then(|| &self.modules[k as usize])
    }

    /// `S(f) : S(X) -> S(Y)` for a chain map `f : X -> Y` between complexes of projectives.
    pub fn serre_map(&self, target: &ProjComplex, f: &ChainMap) -> ChainMap {
        ChainMap::from_fn(&self.serre, &target.serre, |i| {
            match (self.module(i), target.module(i)) {
                (Some(a), Some(b)) => a.nakayama_map(b, &f.comp(i)),
                _ => crate::algebra::RepMap::zero(&self.serre.term(i), &target.serre.term(i)),
            }
        })
    }

    /// `Σ_i (-1)^i (f^i, g^i)` for `f : X -> Y` and `g : Y -> S(X)`.
    pub fn pairing(&self, f: &ChainMap, g: &ChainMap) -> Result<Scalar> {
        if *f.source() != self.complex {
            return Err(Error::ShapeMismatch(
                "first argument must start at X".into(),
            ));
        }
        if g.source() != f.target() {
            return Err(Error::ShapeMismatch(
                "second argument must start where the first ends".into(),
            ));
        }
        if *g.target() != self.serre {
            return Err(Error::ShapeMismatch(
                "second argument must end at S(X)".into(),
            ));
        }
        Ok(self.pairing_unchecked(f, g))
    }

    pub(crate) fn pairing_unchecked(&self, f: &ChainMap, g: &ChainMap) -> Scalar {
        let field = self.complex.field();
        let mut acc = Scalar::zero();
        for (k, m) in self.modules.iter().enumerate() {
            let i = self.lo + k as i64;
            let v = m.pairing(&f.comp(i), &g.comp(i));
            if !v.is_zero() {
                acc = field.add(&acc, &field.mul(&field.from_i64(sign(i)), &v));
            }
        }
        acc
    }

    /// `Tr_X(u) = (id_X, u)` for `u : X -> S(X)`.
    pub fn trace(&self, u: &ChainMap) -> Result<Scalar> {
        self.pairing(&self.complex.identity(), u)
    }
}

/// `S(X)` for a complex of projectives.
pub fn serre_of(x: &BoundedComplex) -> Result<BoundedComplex> {
    Ok(ProjComplex::new(x)?.serre)
}

/// `S(f)` for a chain map between complexes of projectives.
pub fn serre_of_map(f: &ChainMap) -> Result<ChainMap> {
    let a = ProjComplex::new(f.source())?;
    let b = ProjComplex::new(f.target())?;
    Ok(a.serre_map(&b, f))
}

/// The pairing `Hom(X, Y) × Hom(Y, S(X)) → k` on chain maps.
pub fn pairing(x: &BoundedComplex, f: &ChainMap, g: &ChainMap) -> Result<Scalar> {
    ProjComplex::new(x)?.pairing(f, g)
}

pub fn trace(x: &BoundedComplex, u: &ChainMap) -> Result<Scalar> {
    ProjComplex::new(x)?.trace(u)
}

/// The pairing matrix between class bases of `Hom_K(X, Y)` and `Hom_K(Y, S(X))`.
#[derive(Clone, Debug)]
pub struct SerrePairing {
    pub x: BoundedComplex,
    pub y: BoundedComplex,
    pub matrix: ExactMatrix,
}

impl SerrePairing {
    pub fn new(x: &BoundedComplex, y: &BoundedComplex) -> Result<Self> {
        let px = ProjComplex::new(x)?;
        let fs = khom(x, y)?.basis();
        let gs = khom(y, px.serre())?.basis();
        let rows: Vec<Vec<Scalar>> = fs
            .iter()
            .map(|f| gs.iter().map(|g| px.pairing_unchecked(f, g)).collect())
            .collect();
        let matrix = if rows.is_empty() {
            ExactMatrix::zeros(x.field(), 0, gs.len())
        } else {
            ExactMatrix::from_rows(x.field(), &rows)
        };
        Ok(SerrePairing {
            x: x.clone(),
            y: y.clone(),
            matrix,
        })
    }

    /// Square and invertible.
    pub fn is_perfect(&self) -> bool {
        self.matrix.rows() == self.matrix.cols()
            && (self.matrix.rows() == 0 || self.matrix.is_invertible())
    }
}

/// The comparison isomorphism `η_X : S(X[1]) -> S(X)[1]`, with one sign per degree.
#[derive(Clone, Debug)]
pub struct Eta {
    pub map: ChainMap,
    /// `(degree, ±1)` for each degree where `S(X)[1]` is nonzero.
    pub signs: Vec<(i64, i64)>,
}

/// Solves for the signs of `η_X` so that
/// `(f, (η_X ∘ g)[-1])_{X, Y[-1]} = -(f[1], g)_{X[1], Y}` holds for `Y = S(X[1])`, `g = id`
/// and every chain map `f : X -> Y[-1]`, subject to `η_X` being a chain map.
pub fn eta(x: &BoundedComplex) -> Result<Eta> {
    let px = ProjComplex::new(x)?;
    let x1 = x.shift(1);
    let px1 = ProjComplex::new(&x1)?;
    let source = px1.serre().clone();
    let target = px.serre().shift(1);
    let field = x.field();
    let Some((lo, hi)) = target.range() else {
        return Ok(Eta {
            map: ChainMap::zero(&source, &target),
            signs: Vec::new(),
        });
    };
    let n = (hi - lo + 1) as usize;
    // unknowns: ε_j for degrees j in [lo, hi]
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    // chain-map condition: ε_j = ε_{j+1} wherever the differential is nonzero
    for j in lo..hi {
        if !target.diff(j).is_zero() {
            let mut r = vec![field.zero(); n];
            r[(j - lo) as usize] = field.one();
            r[(j + 1 - lo) as usize] = field.neg(&field.one());
            rows.push(r);
            rhs.push(field.zero());
        }
    }
    let y = source.clone();
    let g = y.identity();
    let y_down = y.shift(-1);
    for f in khom(x, &y_down)?.chainmap_basis() {
        // LHS = Σ_i (-1)^i ε_{i-1} (f^i, g^{i-1}); RHS = -Σ_j (-1)^j (f^{j+1}, g^j)
        let mut r = vec![field.zero(); n];
        let mut total = field.zero();
        for j in lo..=hi {
            let Some(m) = px.module(j + 1) else { continue };
            let v = m.pairing(&f.comp(j + 1), &g.comp(j));
            let signed = field.mul(&field.from_i64(sign(j + 1)), &v);
            r[(j - lo) as usize] = signed.clone();
            total = field.add(&total, &field.mul(&field.from_i64(sign(j)), &v));
        }
        rows.push(r);
        rhs.push(field.neg(&total));
    }
    let signs_vec: Vec<Scalar> = if rows.is_empty() {
        vec![field.one(); n]
    } else {
        let a = ExactMatrix::from_rows(field, &rows);
        let particular = a.solve(&rhs).ok_or_else(|| {
            Error::NoConsistentSign("the compatibility equations have no solution".into())
        })?;
        // free directions are set so that unconstrained degrees get +1
        let kernel = a.kernel_basis();
        let mut sol = particular;
        let (rref, pivots) = a.rref();
        let _ = rref;
        for (c, col) in kernel.columns().iter().enumerate() {
            let free = (0..n)
                .filter(|j| !pivots.contains(j))
                .nth(c)
                .expect("one free variable per kernel vector");
            let delta = field.sub(&field.one(), &sol[free]);
            for (s, k) in sol.iter_mut().zip(col) {
                *s = field.add(s, &field.mul(&delta, k));
            }
        }
        sol
    };
    let one = field.one();
    let minus = field.neg(&one);
    let mut signs = Vec::with_capacity(n);
    for (k, s) in signs_vec.iter().enumerate() {
        let e = if *s == one {
            1
        } else if *s == minus {
            -1
        } else {
            return Err(Error::NoConsistentSign(format!(
                "degree {} needs a factor {}",
                lo + k as i64,
                field.format(s)
            )));
        };
        signs.push((lo + k as i64, e));
    }
    let map = ChainMap::from_fn(&source, &target, |i| {
        let e = signs.iter().find(|(d, _)| *d == i).map_or(1, |(_, e)| *e);
        source.term(i).identity().scale(&field.from_i64(e))
    });
    if !map.is_chain_map() {
        return Err(Error::NoConsistentSign(
            "the solved signs do not give a chain map".into(),
        ));
    }
    Ok(Eta { map, signs })
}

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{quotient_basis, ExactMatrix, Field, Scalar};

/// A finite-dimensional algebra given by structure constants on a basis.
///
/// `mult[i][j]` holds the coordinates of `b_i * b_j`; for endomorphism algebras the product is
/// composition, `b_i * b_j = b_i ∘ b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndAlgebraPresentation {
    field: Field,
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl EndAlgebraPresentation {
    pub fn new(field: Field, mult: Vec<Vec<Vec<Scalar>>>, unit: Vec<Scalar>) -> Self {
        EndAlgebraPresentation { field, mult, unit }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.mult.len()
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = f.add(&out[k], &f.mul(&c, m));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &[Scalar]) -> ExactMatrix {
        let d = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..d)
            .map(|j| {
                let mut e = vec![Scalar::zero(); d];
                e[j] = self.field.one();
                self.product(x, &e)
            })
            .collect();
        ExactMatrix::from_columns(self.field, d, &cols)
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        let basis: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let mut e = vec![Scalar::zero(); d];
                e[i] = self.field.one();
                e
            })
            .collect();
        for a in &basis {
            for b in &basis {
                let ab = self.product(a, b);
                for c in &basis {
                    if self.product(&ab, c) != self.product(a, &self.product(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Jacobson radical via the trace form `(x, y) ↦ tr(L_x L_y)`; valid in characteristic 0.
    /// Columns of the result are coordinate vectors spanning the radical.
    pub fn radical(&self) -> Result<ExactMatrix> {
        if !self.field.is_rational() {
            return Err(Error::UnsupportedField(
                "the trace-form radical is only valid in characteristic zero".into(),
            ));
        }
        let f = self.field;
        let d = self.dim();
        // tr(L_{b_k}) = sum_j mult[k][j][j]
        let traces: Vec<Scalar> = (0..d)
            .map(|k| (0..d).fold(f.zero(), |acc, j| f.add(&acc, &self.mult[k][j][j])))
            .collect();
        let mut gram = ExactMatrix::zeros(f, d, d);
        for i in 0..d {
            for j in 0..d {
                let v = self.mult[i][j]
                    .iter()
                    .zip(&traces)
                    .fold(f.zero(), |acc, (m, t)| f.add(&acc, &f.mul(m, t)));
                gram.set(i, j, v);
            }
        }
        Ok(gram.kernel_basis())
    }

    /// Dimension of the semisimple quotient by the radical.
    pub fn top_dim(&self) -> Result<usize> {
        Ok(self.dim() - self.radical()?.cols())
    }

    /// The quotient algebra by the radical, presented on a complement basis.
    pub fn semisimple_quotient(&self) -> Result<EndAlgebraPresentation> {
        let f = self.field;
        let d = self.dim();
        let rad = self.radical()?;
        let qb = quotient_basis(f, d, &rad);
        let reps = qb.representatives.columns();
        let mult = reps
            .iter()
            .map(|x| {
                reps.iter()
                    .map(|y| qb.project(&self.product(x, y)))
                    .collect()
            })
            .collect();
        let unit = if d == 0 {
            Vec::new()
        } else {
            qb.project(&self.unit)
        };
        Ok(EndAlgebraPresentation::new(f, mult, unit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn from_table(table: &[&[&[i64]]], unit: &[i64]) -> EndAlgebraPresentation {
        let mult = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|&x| q().from_i64(x)).collect())
                    .collect()
            })
            .collect();
        EndAlgebraPresentation::new(q(), mult, unit.iter().map(|&x| q().from_i64(x)).collect())
    }

    #[test]
    fn field_has_zero_radical() {
        let k = from_table(&[&[&[1]]], &[1]);
        assert_eq!(k.radical().unwrap().cols(), 0);
    }

    #[test]
    fn dual_numbers_radical_is_t() {
        // basis {1, t}, t^2 = 0
        let e = from_table(&[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]], &[1, 0]);
        let r = e.radical().unwrap();
        assert_eq!(r.cols(), 1);
        assert!(r.get(0, 0).is_zero());
        assert!(!r.get(1, 0).is_zero());
        assert_eq!(e.top_dim().unwrap(), 1);
    }

    #[test]
    fn matrix_algebra_is_semisimple() {
        // basis E11, E12, E21, E22 with Eij Ekl = δjk Eil
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut mult = vec![vec![vec![q().zero(); 4]; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    mult[idx(i, j)][idx(j, l)][idx(i, l)] = q().one();
                }
            }
        }
        let unit = vec![q().one(), q().zero(), q().zero(), q().one()];
        let m2 = EndAlgebraPresentation::new(q(), mult, unit);
        assert!(m2.is_associative());
        assert_eq!(m2.radical().unwrap().cols(), 0);
    }

    #[test]
    fn prime_field_is_refused() {
        let f = Field::prime(3).unwrap();
        let e = EndAlgebraPresentation::new(f, vec![vec![vec![f.one()]]], vec![f.one()]);
        assert!(matches!(e.radical(), Err(Error::UnsupportedField(_))));
    }
}

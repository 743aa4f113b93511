use std::fmt;

use num_traits::{One, Zero};

use super::field::{Field, Scalar};

/// Dense matrix of exact scalars, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.format(self.get(r, c)))?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

impl ExactMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    /// Entries must already be reduced into `field`.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        ExactMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        ExactMatrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, &rows)
    }

    /// Builds an `n x k` matrix from `k` column vectors of length `n`.
    pub fn from_columns(field: Field, n: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, n, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), n);
            for (i, v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v.clone();
            }
        }
        m
    }

    pub fn column_vector(field: Field, v: &[Scalar]) -> Self {
        Self::from_vec(field, v.len(), 1, v.to_vec())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] += a * b;
                }
            }
        }
        if !f.is_rational() {
            for v in &mut out.data {
                *v = f.add(v, &Scalar::zero());
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(
            self.cols,
            v.len(),
            "shape mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                self.field.add(&acc, &Scalar::zero())
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sum"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Self::from_vec(self.field, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in difference"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Self::from_vec(self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Self::from_vec(self.field, self.rows, self.cols, data)
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Self::from_vec(self.field, self.rows, self.cols, data)
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Scalar, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = self.field.add(a, &self.field.mul(s, b));
            }
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut m = Self::zeros(self.field, rows.len(), cols.len());
        for (i, r) in rows.clone().enumerate() {
            for (j, c) in cols.clone().enumerate() {
                m.data[i * m.cols + j] = self.get(r, c).clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Self::from_vec(self.field, idx.len(), self.cols, data)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c).clone();
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c).clone();
            }
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut m = Self::zeros(self.field, self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self::from_vec(self.field, self.rows + other.rows, self.cols, data)
    }

    pub fn block_diag(field: Field, blocks: &[&Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(field, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t = self.field.add(&t, self.get(i, i));
        }
        t
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity(self.field, self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Reduced row-echelon form together with the (strictly increasing) pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            // lightest nonzero entry as pivot
            let mut best: Option<(usize, u64)> = None;
            for r in prow..m.rows {
                let v = m.get(r, col);
                if !v.is_zero() {
                    let w = f.weight(v);
                    if best.is_none_or(|(_, bw)| w < bw) {
                        best = Some((r, w));
                    }
                }
            }
            let Some((r, _)) = best else { continue };
            m.swap_rows(prow, r);
            let inv = f.inv(m.get(prow, col));
            for c in col..m.cols {
                let v = f.mul(m.get(prow, c), &inv);
                m.set(prow, c, v);
            }
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let p = m.get(prow, c);
                    if p.is_zero() {
                        continue;
                    }
                    let v = f.sub(m.get(r, c), &f.mul(&factor, p));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the null space; each basis vector has a 1 in its own free
    /// coordinate and 0 in every other free coordinate.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.field, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, Scalar::one());
            for (i, &pc) in pivots.iter().enumerate() {
                let v = r.get(i, fc);
                if !v.is_zero() {
                    k.set(pc, j, self.field.neg(v));
                }
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let aug = self.hstack(&Self::column_vector(self.field, b));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Solves `self * X = B` column by column; `None` if any column is inconsistent.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        assert_eq!(b.rows, self.rows);
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.field, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Self::identity(self.field, self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() < self.rows || pivots[self.rows - 1] >= self.cols {
            return None;
        }
        Some(r.select_columns(&(self.cols..2 * self.cols).collect::<Vec<_>>()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A basis (as columns) of the column space, picked from the pivot columns.
    pub fn column_space(&self) -> Self {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }
}

/// Complement of a subspace of `k^n` with the matching linear projection.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    /// `n x q` matrix whose columns represent the quotient basis.
    pub representatives: ExactMatrix,
    /// `q x n` matrix; kills exactly the subspace and sends representative `j` to `e_j`.
    pub projection: ExactMatrix,
    /// Columns of the subspace basis actually used (linearly independent).
    pub subspace: ExactMatrix,
}

impl QuotientBasis {
    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.mul_vec(v)
    }
}

/// Complements the column span of `subspace` (columns in `k^n`) by standard basis vectors.
pub fn quotient_basis(field: Field, n: usize, subspace: &ExactMatrix) -> QuotientBasis {
    assert_eq!(
        subspace.rows(),
        n,
        "subspace vectors live in the wrong ambient space"
    );
    let sub = subspace.column_space();
    let s = sub.cols();
    let full = sub.hstack(&ExactMatrix::identity(field, n));
    let (_, pivots) = full.rref();
    let chosen: Vec<usize> = pivots
        .iter()
        .copied()
        .filter(|&p| p >= s)
        .map(|p| p - s)
        .collect();
    let reps = ExactMatrix::identity(field, n).select_columns(&chosen);
    let basis = sub.hstack(&reps);
    let inv = basis
        .inverse()
        .expect("subspace plus complement is a basis");
    let projection = inv.submatrix(s..n, 0..n);
    QuotientBasis {
        representatives: reps,
        projection,
        subspace: sub,
    }
}

/// Coordinates with respect to a fixed full-column-rank matrix.
#[derive(Clone, Debug)]
pub struct CoordMap {
    basis: ExactMatrix,
    rows: Vec<usize>,
    inv: ExactMatrix,
}

impl CoordMap {
    pub fn new(basis: ExactMatrix) -> Self {
        // rref([B^T | I]) = [E B^T | E]; E inverts B^T on the pivot columns
        let (n, k) = (basis.rows(), basis.cols());
        let aug = basis
            .transpose()
            .hstack(&ExactMatrix::identity(basis.field, k));
        let (r, pivots) = aug.rref();
        let rows: Vec<usize> = pivots.into_iter().filter(|&c| c < n).collect();
        assert_eq!(rows.len(), k, "basis columns are linearly dependent");
        let e = r.select_columns(&(n..n + k).collect::<Vec<_>>());
        CoordMap {
            basis,
            rows,
            inv: e.transpose(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    /// Coordinates assuming `v` lies in the span.
    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vec<Scalar> {
        let picked: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inv.mul_vec(&picked)
    }

    /// Coordinates of every column of `m`, or `None` when some column is outside the span.
    pub fn coords_matrix(&self, m: &ExactMatrix) -> Option<ExactMatrix> {
        let c = self.inv.mul(&m.select_rows(&self.rows));
        (self.basis.mul(&c) == *m).then_some(c)
    }

    /// Coordinates, or `None` when `v` is not in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c = self.coords_unchecked(v);
        if self.basis.mul_vec(&c) == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        self.basis.mul_vec(coeffs)
    }
}

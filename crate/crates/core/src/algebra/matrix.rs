use std::fmt;
use std::sync::Arc;

use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over a finite field. Entries are element indices.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
            && *self.field == *other.field
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{} [", self.field, self.rows, self.cols)?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn same_field(a: &Arc<Field>, b: &Arc<Field>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

impl Matrix {
    pub fn zeros(field: &Arc<Field>, rows: usize, cols: usize) -> Self {
        Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Arc<Field>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_entries(
        field: &Arc<Field>,
        rows: usize,
        cols: usize,
        data: Vec<u32>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Incompatible(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::InvalidField(format!(
                "entry {bad} outside 0..{}",
                field.order()
            )));
        }
        Ok(Matrix {
            field: Arc::clone(field),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from equal-length rows. An empty list gives a `0 x 0`
    /// matrix; use [`Matrix::zeros`] for `0 x n`.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Arc<Field>, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        if rows.iter().any(|r| r.as_ref().len() != cols) {
            return Err(Error::Incompatible("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().copied())
            .collect();
        Self::from_entries(field, rows.len(), cols, data)
    }

    pub fn row_vector(field: &Arc<Field>, v: &[u32]) -> Result<Self> {
        Self::from_entries(field, 1, v.len(), v.to_vec())
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.rows {
            return Err(Error::Incompatible(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &*self.field;
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    if b != 0 {
                        *d = f.add(*d, f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * other^T` without materialising the transpose.
    pub fn mul_transpose(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.cols {
            return Err(Error::Incompatible(format!(
                "cannot multiply {}x{} by the transpose of {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.rows);
        for r in 0..self.rows {
            for c in 0..other.rows {
                out.data[r * other.rows + c] = dot(&self.field, self.row(r), other.row(c));
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.rows {
            return Err(Error::Incompatible(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let f = &*self.field;
        let mut out = vec![0u32; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, a: u32) -> Matrix {
        let f = &*self.field;
        Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.mul(a, x)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(self.field.neg(1))
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::Incompatible(format!(
                "cannot stack {} columns on {} columns",
                self.cols, other.cols
            )));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: Arc::clone(&self.field),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        out
    }

    /// Entrywise `a -> a^{p^s}`, `1 <= s <= e`.
    pub fn frobenius(&self, s: u32) -> Result<Matrix> {
        self.field.check_exponent(s)?;
        Ok(self.frob(s))
    }

    pub(crate) fn frob(&self, s: u32) -> Matrix {
        let f = &*self.field;
        Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.frob(x, s)).collect(),
        }
    }

    /// Kronecker product; block `(i, j)` is `self[i][j] * other`.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        let f = &*self.field;
        let (rb, cb) = (other.rows, other.cols);
        let mut out = Matrix::zeros(&self.field, self.rows * rb, self.cols * cb);
        let width = self.cols * cb;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for r in 0..rb {
                    for c in 0..cb {
                        out.data[(i * rb + r) * width + j * cb + c] = f.mul(a, other.get(r, c));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form with leftmost-column, topmost-row pivoting.
    pub fn rref(&self) -> Rref {
        let f = &*self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nonzero rows of the RREF: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let rr = self.rref();
        let idx: Vec<usize> = (0..rr.rank).collect();
        rr.matrix.select_rows(&idx)
    }

    /// Basis of `{x : self * x^T = 0}`, one vector per row.
    pub fn kernel_basis(&self) -> Matrix {
        let rr = self.rref();
        let f = &*self.field;
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !rr.pivots.contains(c)).collect();
        let mut out = Matrix::zeros(&self.field, free.len(), n);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (i, &pc) in rr.pivots.iter().enumerate() {
                out.set(k, pc, f.neg(rr.matrix.get(i, fc)));
            }
        }
        out
    }

    /// Basis of the intersection of the row spaces of `self` and `other`.
    pub fn row_space_intersection(&self, other: &Matrix) -> Result<Matrix> {
        same_field(&self.field, &other.field)?;
        if self.rows == 0 || other.rows == 0 {
            let cols = self.cols.max(other.cols);
            return Ok(Matrix::zeros(&self.field, 0, cols));
        }
        if self.cols != other.cols {
            return Err(Error::Incompatible(
                "row spaces of different lengths".into(),
            ));
        }
        // (x, y) with x*A = y*B are the left kernel of [A; -B]
        let stacked = self.vstack(&other.neg())?;
        let relations = stacked.transpose().kernel_basis();
        let head: Vec<usize> = (0..self.rows).collect();
        let coeffs = relations.select_cols(&head);
        Ok(coeffs.mul(self)?.row_space_basis())
    }
}

#[inline]
pub(crate) fn dot(field: &Field, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .filter(|(&x, &y)| x != 0 && y != 0)
        .fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

pub(crate) fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Arc<Field> {
        Field::prime(p).unwrap()
    }

    #[test]
    fn rref_of_identity_and_zero() {
        let f = gf(5);
        let id = Matrix::identity(&f, 4);
        let rr = id.rref();
        assert_eq!(rr.matrix, id);
        assert_eq!(rr.rank, 4);
        assert_eq!(rr.pivots, vec![0, 1, 2, 3]);

        let z = Matrix::zeros(&f, 3, 2);
        let rr = z.rref();
        assert_eq!(rr.matrix, z);
        assert_eq!(rr.rank, 0);
        assert!(rr.pivots.is_empty());
    }

    #[test]
    fn dependent_rows_over_gf3() {
        let f = gf(3);
        let m = Matrix::from_rows(&f, &[[1, 1, 1], [2, 2, 2]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(3);
        assert_eq!(Matrix::identity(&f, 3).kernel_basis().rows(), 0);

        let ones = Matrix::from_rows(&f, &[[1, 1, 1]]).unwrap();
        let k = ones.kernel_basis();
        assert_eq!(k.rows(), 2);
        assert!(ones.mul_transpose(&k).unwrap().is_zero());
        let expected = Matrix::from_rows(&f, &[[1, 2, 0], [0, 1, 2]]).unwrap();
        assert_eq!(k.row_space_basis(), expected.row_space_basis());

        let z = Matrix::zeros(&f, 1, 4);
        assert_eq!(z.kernel_basis(), Matrix::identity(&f, 4));
    }

    #[test]
    fn kronecker_examples() {
        let f = gf(3);
        let b = Matrix::from_rows(&f, &[[1, 2], [0, 1]]).unwrap();
        let one = Matrix::from_rows(&f, &[[1]]).unwrap();
        assert_eq!(one.kronecker(&b).unwrap(), b);
        assert_eq!(
            Matrix::identity(&f, 2)
                .kronecker(&Matrix::identity(&f, 3))
                .unwrap(),
            Matrix::identity(&f, 6)
        );
        let a = Matrix::from_rows(&f, &[[1, 2]]).unwrap();
        let ones = Matrix::from_rows(&f, &[[1, 1, 1]]).unwrap();
        assert_eq!(
            a.kronecker(&ones).unwrap(),
            Matrix::from_rows(&f, &[[1, 1, 1, 2, 2, 2]]).unwrap()
        );
        assert_eq!(
            a.kronecker(&Matrix::identity(&gf(5), 1)),
            Err(Error::FieldMismatch)
        );
    }

    #[test]
    fn matrix_frobenius_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let w = Matrix::from_rows(&f4, &[[2]]).unwrap();
        assert_eq!(
            w.frobenius(1).unwrap(),
            Matrix::from_rows(&f4, &[[3]]).unwrap()
        );
        assert_eq!(w.frobenius(2).unwrap(), w);
        let z = Matrix::zeros(&f4, 2, 3);
        assert_eq!(z.frobenius(1).unwrap(), z);
        assert!(w.frobenius(3).is_err());
    }

    #[test]
    fn row_space_intersection_small() {
        let f = gf(3);
        let a = Matrix::from_rows(&f, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        let b = Matrix::from_rows(&f, &[[0, 1, 0], [0, 0, 1]]).unwrap();
        let i = a.row_space_intersection(&b).unwrap();
        assert_eq!(i, Matrix::from_rows(&f, &[[0, 1, 0]]).unwrap());
    }
}

//! Dense exact matrices and fraction-free determinants.

mod det;

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::{Field, IntegerRing, RationalField, Ring};

pub use det::{combinations, DetStrategy};

/// Dense row-major matrix over a coefficient domain.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    data: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, data: Vec<R::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { ring, rows, cols, data })
    }

    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let data = vec![ring.zero(); rows * cols];
        Matrix { ring, rows, cols, data }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.ring.one();
        }
        m
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(ring, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(ring: R, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&x| ring.from_i64(x)).collect()).collect();
        Self::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<R::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ring.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = &self.ring;
        let mut out = Self::zeros(r.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    let p = r.mul(a, b);
                    r.add_assign(&mut out.data[idx], &p);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("matrix-vector product".into()));
        }
        let r = &self.ring;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = r.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !r.is_zero(a) && !r.is_zero(b) {
                        r.add_assign(&mut acc, &r.mul(a, b));
                    }
                }
                acc
            })
            .collect())
    }

    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix {
            ring,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Determinant with the default strategy (cofactor expansion up to 4x4,
    /// Bareiss elimination beyond).
    pub fn det(&self) -> Result<R::Elem> {
        self.det_with(DetStrategy::Auto)
    }

    pub fn det_with(&self, strategy: DetStrategy) -> Result<R::Elem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(match strategy {
            DetStrategy::Cofactor => det::cofactor(self),
            DetStrategy::Bareiss => det::bareiss(self),
            DetStrategy::Auto if self.rows <= 4 => det::cofactor(self),
            DetStrategy::Auto => det::bareiss(self),
        })
    }

    /// All maximal (rows x rows) minors, column subsets in lexicographic order.
    pub fn maximal_minors(&self) -> Result<Vec<R::Elem>> {
        if self.rows > self.cols {
            return Err(Error::DimensionMismatch(format!(
                "maximal minors need rows <= cols, got {}x{}",
                self.rows, self.cols
            )));
        }
        let all_rows: Vec<usize> = (0..self.rows).collect();
        combinations(self.cols, self.rows)
            .into_iter()
            .map(|cols| self.submatrix(&all_rows, &cols).det())
            .collect()
    }
}

impl<F: Field> Matrix<F> {
    /// Exact solution of `M x = b` by Gaussian elimination.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if !self.is_square() || b.len() != self.rows {
            return Err(Error::DimensionMismatch("solve needs a square system".into()));
        }
        let n = self.rows;
        let r = &self.ring;
        let mut a: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        for k in 0..n {
            let piv = (k..n)
                .filter(|&i| !r.is_zero(&a[i][k]))
                .min_by_key(|&i| r.weight(&a[i][k]))
                .ok_or(Error::Singular)?;
            a.swap(k, piv);
            let inv = r.inv(&a[k][k]).ok_or(Error::Singular)?;
            for j in k..=n {
                a[k][j] = r.mul(&a[k][j], &inv);
            }
            for i in 0..n {
                if i == k || r.is_zero(&a[i][k]) {
                    continue;
                }
                let f = a[i][k].clone();
                for j in k..=n {
                    if r.is_zero(&a[k][j]) {
                        continue;
                    }
                    let d = r.mul(&f, &a[k][j]);
                    a[i][j] = r.sub(&a[i][j], &d);
                }
            }
        }
        Ok(a.into_iter().map(|row| row[n].clone()).collect())
    }
}

impl Matrix<IntegerRing> {
    pub fn to_rational(&self) -> Matrix<RationalField> {
        self.map(RationalField, |x| BigRational::from_integer(x.clone()))
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.ring.display(self.get(i, j)))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

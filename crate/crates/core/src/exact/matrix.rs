//! Dense exact matrices over `Q` or `Q(ω)`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use super::{Field, Rational};
use crate::ExactError;

/// Row-major dense matrix over an exact field. Arithmetic returns new values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = ExactMatrix<Rational>;

impl<T: Field> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: alloc::vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::DimensionMismatch);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::DimensionMismatch);
        }
        Ok(Self { rows: r, cols: c, data: rows.iter().flatten().cloned().collect() })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<T>]) -> Result<Self, ExactError> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_i64_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_fn(rows.len(), C, |i, j| T::from(rows[i][j]))
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s)
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimensionMismatch);
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch);
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a.clone() * x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, mut e: u32) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare);
        }
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m[(r, j)].clone() * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        if !m[(r, j)].is_zero() {
                            let t = factor.clone() * &m[(r, j)];
                            m[(i, j)] -= &t;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{x : A x = 0}` as column vectors.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = alloc::vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<T, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare);
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone() * &inv;
                for j in c..n {
                    let t = factor.clone() * &m[(c, j)];
                    m[(i, j)] -= &t;
                }
            }
        }
        Ok(det)
    }

    /// Solves `A X = B` exactly by Gauss–Jordan elimination.
    pub fn solve(&self, b: &Self) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare);
        }
        if b.rows != self.rows {
            return Err(ExactError::DimensionMismatch);
        }
        let n = self.rows;
        let aug = Self::from_fn(n, n + b.cols, |i, j| {
            if j < n { self[(i, j)].clone() } else { b[(i, j - n)].clone() }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ExactError::Singular);
        }
        Ok(Self::from_fn(n, b.cols, |i, j| r[(i, n + j)].clone()))
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        self.solve(&Self::identity(self.rows))
    }

    /// Column space in reduced column echelon form; equal spans give equal values.
    pub fn column_echelon(&self) -> Self {
        let (r, pivots) = self.transpose().rref();
        Self::from_fn(pivots.len(), self.rows, |i, j| r[(i, j)].clone()).transpose()
    }
}

impl<T> Index<(usize, usize)> for ExactMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ExactMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Cyclotomic;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let b = RatMatrix::from_i64_rows(&[[1, 2, 3], [4, 5, 6]]);
        let id = RatMatrix::identity(2);
        assert_eq!(id.solve(&b).unwrap(), b);
    }

    #[test]
    fn singular_is_reported() {
        let a = RatMatrix::from_i64_rows(&[[1, 2], [2, 4]]);
        assert_eq!(a.solve(&RatMatrix::identity(2)), Err(ExactError::Singular));
        assert_eq!(a.det().unwrap(), Rational::ZERO);
    }

    #[test]
    fn kernel_and_rank() {
        let a = RatMatrix::from_i64_rows(&[[1, 1, 0], [0, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).unwrap().iter().all(Rational::is_zero));
    }

    #[test]
    fn det_with_fractions() {
        let a = RatMatrix::from_rows(&[alloc::vec![q(1, 2), q(1, 3)], alloc::vec![q(1, 4), q(1, 5)]])
            .unwrap();
        assert_eq!(a.det().unwrap(), q(1, 10) - q(1, 12));
    }

    #[test]
    fn cyclotomic_kernel() {
        // (ω I − diag(ω, 1)) has kernel spanned by e1.
        let w = Cyclotomic::omega();
        let a = ExactMatrix::from_rows(&[
            alloc::vec![Cyclotomic::zero(), Cyclotomic::zero()],
            alloc::vec![Cyclotomic::zero(), w.clone() - Cyclotomic::one()],
        ])
        .unwrap();
        let k = a.kernel();
        assert_eq!(k, alloc::vec![alloc::vec![Cyclotomic::one(), Cyclotomic::zero()]]);
    }

    proptest! {
        #[test]
        fn random_inverse(entries in proptest::collection::vec(-5i64..=5, 36)) {
            let a = RatMatrix::from_fn(6, 6, |i, j| Rational::from_int(entries[6 * i + j]));
            if !a.det().unwrap().is_zero() {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(6));
            } else {
                prop_assert!(a.inverse().is_err());
            }
        }
    }
}

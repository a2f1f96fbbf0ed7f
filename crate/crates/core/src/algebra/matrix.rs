//! Dense matrices over an exact ring, with fraction-free determinants.

use std::ops::{Index, IndexMut, Mul};
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ring::{ExactDivision, Ring};
use super::{LaurentPoly, PolyS};
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// A matrix of Laurent polynomials, e.g. a Burau image.
pub type LaurentMatrix = Matrix<LaurentPoly>;

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::InvalidArgument(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
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

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(&self[(i, i)]);
        }
        acc
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let prod = a.mul(b);
                        out[(i, j)] = out[(i, j)].add(&prod);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            let a = &self[(i / rhs.rows, j / rhs.cols)];
            if a.is_zero() {
                T::zero()
            } else {
                a.mul(&rhs[(i % rhs.rows, j % rhs.cols)])
            }
        })
    }

    /// Block-diagonal direct sum `self ⊕ rhs`.
    pub fn direct_sum(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows + rhs.rows, self.cols + rhs.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self[(i, j)].clone(),
                (false, false) => rhs[(i - self.rows, j - self.cols)].clone(),
                _ => T::zero(),
            }
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }
}

impl<T: ExactDivision> Matrix<T> {
    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<T> {
        det_fraction_free(self, None)
    }
}

impl<T: Ring> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: Ring> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("dimension mismatch in matrix product")
    }
}

impl LaurentMatrix {
    /// `I - M s` as a matrix over `Λ[s]`.
    pub fn char_matrix(&self) -> Matrix<PolyS> {
        assert!(self.is_square());
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            let unit = if i == j { PolyS::one() } else { PolyS::zero() };
            let entry = &self[(i, j)];
            if entry.is_zero() {
                unit
            } else {
                &unit - &PolyS::monomial(entry.clone(), 1)
            }
        })
    }

    /// `det(I - M s)`.
    pub fn char_poly_s(&self, cancel: Option<&AtomicBool>) -> Result<PolyS> {
        det_fraction_free(&self.char_matrix(), cancel)
    }

    /// Entry-wise bar involution followed by transposition.
    pub fn conjugate_transpose(&self) -> Self {
        self.transpose().map(LaurentPoly::bar)
    }
}

/// Determinant of a square matrix over an integral domain by Bareiss
/// elimination. Every intermediate division is exact; a failing division means
/// the inputs were not from an integral domain, which is reported as an error.
///
/// Row updates within a step run in parallel; exact arithmetic makes the result
/// identical to a sequential run. If `cancel` is set during the computation the
/// function returns [`Error::Cancelled`].
pub fn det_fraction_free<T: ExactDivision>(m: &Matrix<T>, cancel: Option<&AtomicBool>) -> Result<T> {
    if !m.is_square() {
        return Err(Error::InvalidArgument(format!(
            "determinant of non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.data.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
            return Err(Error::Cancelled);
        }
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return Ok(T::zero());
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut((k + 1) * n);
        let pivot_row = &head[k * n..];
        let pivot = &pivot_row[k];
        let failed = AtomicBool::new(false);
        tail.par_chunks_mut(n).for_each(|row| {
            let factor = row[k].clone();
            for j in k + 1..n {
                let mut v = pivot.mul(&row[j]);
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v = v.sub(&factor.mul(&pivot_row[j]));
                }
                match v.div_exact(&prev) {
                    Some(x) => row[j] = x,
                    None => failed.store(true, Ordering::Relaxed),
                }
            }
            row[k] = T::zero();
        });
        if failed.into_inner() {
            return Err(Error::NonExactDivision(
                "Bareiss step produced a non-exact quotient".into(),
            ));
        }
        prev = a[k * n + k].clone();
    }
    let det = a[n * n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

//! Dense exact matrices over the rationals.

use crate::error::{Error, Result};
use crate::exact::Rational;
use num_traits::{One, Zero};
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        self.data[i * self.cols + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.add(&o.scale(&-Rational::one()))
    }

    /// `self - s*I`
    pub fn shift(&self, s: &Rational) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m.data[i * self.cols + i] -= s;
        }
        m
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Same product as [`Matrix::mul`], with output rows computed in parallel.
    pub fn mul_par(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let cols = o.cols;
        let mut out = Matrix::zeros(self.rows, cols);
        out.data.par_chunks_mut(cols.max(1)).enumerate().for_each(|(i, row)| {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for (j, cell) in row.iter_mut().enumerate() {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        *cell += a * b;
                    }
                }
            }
        });
        out
    }

    /// Tr(self · o) without forming the product.
    pub fn trace_of_product(&self, o: &Matrix) -> Rational {
        assert_eq!(self.cols, o.rows);
        assert_eq!(self.rows, o.cols);
        let mut acc = Rational::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = o.get(k, i);
                if !b.is_zero() {
                    acc += a * b;
                }
            }
        }
        acc
    }

    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Adds `s * (a ⊗ b)` into `self`.
    pub fn add_kron(&mut self, s: &Rational, a: &Matrix, b: &Matrix) {
        assert_eq!(self.rows, a.rows * b.rows);
        assert_eq!(self.cols, a.cols * b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                let x = a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let sx = s * x;
                for k in 0..b.rows {
                    for l in 0..b.cols {
                        let y = b.get(k, l);
                        if !y.is_zero() {
                            self.add_at(i * b.rows + k, j * b.cols + l, &(&sx * y));
                        }
                    }
                }
            }
        }
    }

    pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.rows * b.rows, a.cols * b.cols);
        m.add_kron(&Rational::one(), a, b);
        m
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Row echelon form; returns the rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let piv = m.get(r, c).clone();
            for i in (r + 1)..m.rows {
                let f = m.get(i, c) / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(r, j) * &f;
                    if !v.is_zero() {
                        m.data[i * m.cols + j] -= v;
                    }
                }
            }
            r += 1;
            if r == m.rows {
                break;
            }
        }
        r
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solves `self * x = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.rows;
        if self.cols != n || rhs.len() != n {
            return Err(Error::OutOfRange("solve needs a square system".into()));
        }
        let mut m = self.clone();
        let mut b = rhs.to_vec();
        for c in 0..n {
            let p = (c..n)
                .find(|&i| !m.get(i, c).is_zero())
                .ok_or_else(|| Error::Degenerate("singular linear system".into()))?;
            m.swap_rows(c, p);
            b.swap(c, p);
            let piv = m.get(c, c).clone();
            for i in 0..n {
                if i == c {
                    continue;
                }
                let f = m.get(i, c) / &piv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(c, j) * &f;
                    m.data[i * n + j] -= v;
                }
                let v = &b[c] * &f;
                b[i] -= v;
            }
        }
        Ok((0..n).map(|i| &b[i] / m.get(i, i)).collect())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let e: Vec<Rational> = (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
            cols.push(self.solve(&e)?);
        }
        let mut out = Matrix::zeros(n, n);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}

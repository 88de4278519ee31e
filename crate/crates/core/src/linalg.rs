//! Dense matrices over `Q(i)` with exact elimination.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::poly::{GaussRational, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![GaussRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussRational::one());
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<GaussRational>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix { rows: nrows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[GaussRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn conj_transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).conj());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
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
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussRational]) -> Vec<GaussRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(GaussRational::zero(), |acc, (a, b)| &acc + &(a * b)))
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<GaussRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![GaussRational::zero(); self.cols];
                v[f] = GaussRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> GaussRational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = GaussRational::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return GaussRational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..=i).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }

    /// Pivots of symmetric elimination without row exchanges. A Hermitian
    /// matrix is positive definite iff every pivot is a positive real, and
    /// the returned list stops at the first pivot that is not.
    pub fn hermitian_pivots(&self) -> Vec<Rational> {
        assert!(self.is_hermitian(), "hermitian_pivots on a non-Hermitian matrix");
        let mut m = self.clone();
        let mut out = Vec::with_capacity(self.rows);
        for c in 0..m.rows {
            let piv = m.get(c, c).re.clone();
            out.push(piv.clone());
            if !piv.is_positive() {
                break;
            }
            let inv = GaussRational::real(Rational::one() / piv);
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_positive_definite(&self) -> bool {
        let p = self.hermitian_pivots();
        p.len() == self.rows && p.iter().all(Signed::is_positive)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// `Σ conj(a_k) b_k`.
pub fn inner(a: &[GaussRational], b: &[GaussRational]) -> GaussRational {
    a.iter().zip(b).fold(GaussRational::zero(), |acc, (x, y)| &acc + &(&x.conj() * y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn g(re: i64, im: i64) -> GaussRational {
        GaussRational::new(rat(re, 1), rat(im, 1))
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(vec![vec![g(1, 0), g(0, 1)], vec![g(0, 1), g(-1, 0)]], 2);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        assert!(m.det().is_zero());
    }

    #[test]
    fn determinant_with_row_swap() {
        let m = Matrix::from_rows(vec![vec![g(0, 0), g(2, 0)], vec![g(3, 0), g(1, 1)]], 2);
        assert_eq!(m.det(), g(-6, 0));
        assert_eq!(Matrix::identity(3).det(), g(1, 0));
    }

    #[test]
    fn definiteness_from_pivots() {
        let pd = Matrix::from_rows(vec![vec![g(2, 0), g(0, 1)], vec![g(0, -1), g(2, 0)]], 2);
        assert!(pd.is_hermitian());
        assert!(pd.is_positive_definite());
        let psd = Matrix::from_rows(vec![vec![g(1, 0), g(0, 1)], vec![g(0, -1), g(1, 0)]], 2);
        assert!(!psd.is_positive_definite());
        assert_eq!(psd.hermitian_pivots(), vec![rat(1, 1), rat(0, 1)]);
    }
}

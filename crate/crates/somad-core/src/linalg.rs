//! Small dense linear algebra: just enough for the ridge solve and the
//! filterbank pseudo-inverse (both go through a Cholesky factorization of
//! a symmetric positive-definite Gram matrix).

use alloc::vec;
use alloc::vec::Vec;
use libm::sqrt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("matrix of size {n}x{n} is not positive definite (pivot {pivot} at row {row})")]
    NotPositiveDefinite { n: usize, row: usize, pivot: f64 },
}

/// Row-major dense matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut f64 {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `self * other`, sizes `(m,k) x (k,n)`.
    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let (m, k, n) = (self.rows, self.cols, other.cols);
        let mut out = Mat::zeros(m, n);
        for i in 0..m {
            for p in 0..k {
                let a = self.at(i, p);
                if a == 0.0 {
                    continue;
                }
                let src = other.row(p);
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &s) in dst.iter_mut().zip(src.iter()) {
                    *d += a * s;
                }
            }
        }
        out
    }

    /// `self^T * other`, sizes `(k,m)^T x (k,n)`.
    pub fn t_matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let (k, m, n) = (self.rows, self.cols, other.cols);
        let mut out = Mat::zeros(m, n);
        for p in 0..k {
            for i in 0..m {
                let a = self.at(p, i);
                if a == 0.0 {
                    continue;
                }
                let src = other.row(p);
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &s) in dst.iter_mut().zip(src.iter()) {
                    *d += a * s;
                }
            }
        }
        out
    }

    /// Gram matrix `self * self^T` of shape `(rows, rows)`.
    pub fn gram(&self) -> Mat {
        let m = self.rows;
        let mut out = Mat::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let dot: f64 = self.row(i).iter().zip(self.row(j)).map(|(a, b)| a * b).sum();
                *out.at_mut(i, j) = dot;
                *out.at_mut(j, i) = dot;
            }
        }
        out
    }
}

/// Cholesky factor of a symmetric positive-definite matrix; solves
/// `A x = b` for many right-hand sides without refactoring.
pub struct Cholesky {
    n: usize,
    // lower-triangular factor, row-major
    l: Vec<f64>,
}

impl Cholesky {
    pub fn factor(a: &Mat) -> Result<Self, LinalgError> {
        assert_eq!(a.rows, a.cols);
        let n = a.rows;
        let mut l = vec![0.0f64; n * n];
        for i in 0..n {
            for j in 0..=i {
                let mut sum = a.at(i, j);
                for k in 0..j {
                    sum -= l[i * n + k] * l[j * n + k];
                }
                if i == j {
                    if sum <= 0.0 {
                        return Err(LinalgError::NotPositiveDefinite { n, row: i, pivot: sum });
                    }
                    l[i * n + j] = sqrt(sum);
                } else {
                    l[i * n + j] = sum / l[j * n + j];
                }
            }
        }
        Ok(Self { n, l })
    }

    /// Solves `A x = b` in place.
    pub fn solve_in_place(&self, b: &mut [f64]) {
        let n = self.n;
        assert_eq!(b.len(), n);
        // forward: L y = b
        for i in 0..n {
            let mut sum = b[i];
            for k in 0..i {
                sum -= self.l[i * n + k] * b[k];
            }
            b[i] = sum / self.l[i * n + i];
        }
        // backward: L^T x = y
        for i in (0..n).rev() {
            let mut sum = b[i];
            for k in i + 1..n {
                sum -= self.l[k * n + i] * b[k];
            }
            b[i] = sum / self.l[i * n + i];
        }
    }

    /// Solves `A X = B` column by column.
    pub fn solve_mat(&self, b: &Mat) -> Mat {
        assert_eq!(b.rows, self.n);
        let mut out = b.clone();
        let mut col = vec![0.0f64; self.n];
        for c in 0..b.cols {
            for r in 0..b.rows {
                col[r] = b.at(r, c);
            }
            self.solve_in_place(&mut col);
            for r in 0..b.rows {
                *out.at_mut(r, c) = col[r];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn cholesky_solves_spd_system() {
        let mut rng = SplitMix64::new(11);
        let n = 12;
        // random SPD: B^T B + I
        let b = Mat::from_vec(n, n, (0..n * n).map(|_| rng.normal()).collect());
        let mut a = b.t_matmul(&b);
        for i in 0..n {
            *a.at_mut(i, i) += 1.0;
        }
        let x_true: Vec<f64> = (0..n).map(|_| rng.normal()).collect();
        let mut rhs = vec![0.0; n];
        for i in 0..n {
            rhs[i] = (0..n).map(|j| a.at(i, j) * x_true[j]).sum();
        }
        let chol = Cholesky::factor(&a).unwrap();
        chol.solve_in_place(&mut rhs);
        for (got, want) in rhs.iter().zip(&x_true) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_indefinite_matrix() {
        let a = Mat::from_vec(2, 2, vec![1.0, 2.0, 2.0, 1.0]);
        assert!(matches!(
            Cholesky::factor(&a),
            Err(LinalgError::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn matmul_agrees_with_triple_loop() {
        let mut rng = SplitMix64::new(12);
        let a = Mat::from_vec(3, 4, (0..12).map(|_| rng.normal()).collect());
        let b = Mat::from_vec(4, 5, (0..20).map(|_| rng.normal()).collect());
        let c = a.matmul(&b);
        for i in 0..3 {
            for j in 0..5 {
                let want: f64 = (0..4).map(|k| a.at(i, k) * b.at(k, j)).sum();
                assert!((c.at(i, j) - want).abs() < 1e-12);
            }
        }
    }
}

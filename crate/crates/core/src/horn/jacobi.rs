//! Cyclic Jacobi eigenvalues for small dense symmetric matrices.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix, sorted non-increasing.
///
/// Sweeps until the off-diagonal Frobenius norm falls below `tol` times the
/// Frobenius norm of the input.
pub fn symmetric_eigenvalues(m: &[Vec<f64>], tol: f64) -> Result<Vec<f64>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let total: f64 = a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let off = |a: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > tol * total.max(f64::MIN_POSITIVE) {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NotConverged { iterations: sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    Ok(ev)
}

/// Dense Hermitian matrix stored as real and imaginary parts.
#[derive(Clone, Debug, PartialEq)]
pub struct Hermitian {
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl Hermitian {
    pub fn zeros(n: usize) -> Self {
        Hermitian { re: vec![vec![0.0; n]; n], im: vec![vec![0.0; n]; n] }
    }

    pub fn size(&self) -> usize {
        self.re.len()
    }

    pub fn add(&self, other: &Hermitian) -> Hermitian {
        let n = self.size();
        let f = |a: &Vec<Vec<f64>>, b: &Vec<Vec<f64>>| {
            (0..n).map(|i| (0..n).map(|j| a[i][j] + b[i][j]).collect()).collect()
        };
        Hermitian { re: f(&self.re, &other.re), im: f(&self.im, &other.im) }
    }

    /// Eigenvalues via the real symmetric embedding [[Re, −Im], [Im, Re]],
    /// whose spectrum is that of the matrix with every value doubled.
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        let n = self.size();
        let mut m = vec![vec![0.0; 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = self.re[i][j];
                m[i + n][j + n] = self.re[i][j];
                m[i][j + n] = -self.im[i][j];
                m[i + n][j] = self.im[i][j];
            }
        }
        let ev = symmetric_eigenvalues(&m, tol)?;
        Ok(ev.into_iter().step_by(2).collect())
    }
}

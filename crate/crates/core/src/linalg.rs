//! Exact Gaussian elimination over Q.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use crate::rational::Q;

pub type Matrix = Vec<Vec<Q>>;

/// Reduced row echelon form. Returns the reduced nonzero rows and pivot columns.
pub fn rref(m: &[Vec<Q>], ncols: usize) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = Q::one() / &a[row][col];
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..ncols {
                    let t = &f * &a[row][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    (a, pivots)
}

pub fn rank(m: &[Vec<Q>], ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

/// Basis of {x : m x = 0}.
pub fn nullspace(m: &[Vec<Q>], ncols: usize) -> Matrix {
    let (r, pivots) = rref(m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of m x = b, or None if inconsistent.
pub fn solve(m: &[Vec<Q>], b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    let aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[i][ncols].clone();
    }
    Some(x)
}

pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a: Matrix = m.to_vec();
    let mut d = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        d *= &a[col][col];
        for i in col + 1..n {
            if !a[i][col].is_zero() {
                let f = &a[i][col] / &a[col][col];
                for j in col..n {
                    let t = &f * &a[col][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    d
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Q], c: &Q) -> Vec<Q> {
    a.iter().map(|x| x * c).collect()
}

/// Affine hull of a point set: a base point and a basis of its direction space.
pub fn affine_span(points: &[Vec<Q>]) -> (Vec<Q>, Matrix) {
    let base = points[0].clone();
    let n = base.len();
    let diffs: Matrix = points[1..].iter().map(|p| sub(p, &base)).collect();
    let (basis, _) = rref(&diffs, n);
    (base, basis)
}

/// Orthogonal projection of the origin onto the affine hull of `points`,
/// together with its affine coordinates with respect to `points`
/// (only meaningful when the points are affinely independent).
pub fn project_origin_affine(points: &[Vec<Q>]) -> (Vec<Q>, Option<Vec<Q>>) {
    // Minimise |Σ μ_i p_i|² subject to Σ μ_i = 1 via the KKT system
    // [G 1; 1ᵀ 0][μ; ν] = [0; 1] with G the Gram matrix.
    let k = points.len();
    let n = points[0].len();
    let mut m: Matrix = Vec::with_capacity(k + 1);
    for i in 0..k {
        let mut row: Vec<Q> = (0..k).map(|j| dot(&points[i], &points[j])).collect();
        row.push(Q::one());
        m.push(row);
    }
    let mut last = vec![Q::one(); k];
    last.push(Q::zero());
    m.push(last);
    let mut b = vec![Q::zero(); k];
    b.push(Q::one());
    let mu = solve(&m, &b, k + 1).expect("KKT system of an affine projection is consistent");
    let mu: Vec<Q> = mu[..k].to_vec();
    let mut p = vec![Q::zero(); n];
    for (mi, pi) in mu.iter().zip(points) {
        for (x, y) in p.iter_mut().zip(pi) {
            *x += mi * y;
        }
    }
    let independent = affine_span(points).1.len() + 1 == k;
    (p, independent.then_some(mu))
}

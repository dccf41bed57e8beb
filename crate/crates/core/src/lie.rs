//! Type-A lattice primitives: weights, Weyl group elements, dominant weights.
//!
//! The group convention is GL(r): the weight lattice is Z^r (embedded in Q^r)
//! and the Weyl group is the symmetric group S_r acting by permuting
//! coordinates. SU(2) labels are half-integers stored as rationals.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{check_rank, Error, Result};
use crate::rational::{fmt_q, q, to_f64, to_i64, Q};

/// Exact coordinate vector in t^∨ ≅ Q^r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(#[serde(with = "crate::rational::serde_q_vec")] Vec<Q>);

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| q(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Q::zero(); rank])
    }

    /// The i-th standard basis vector.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = Q::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Q> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Weight) -> Q {
        debug_assert_eq!(self.rank(), other.rank());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> Q {
        self.dot(self)
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(to_i64).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }

    pub fn sum(&self) -> Q {
        self.0.iter().sum()
    }

    pub fn check_rank(&self, r: usize) -> Result<()> {
        check_rank(r, self.rank())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fmt_q(x))?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// A permutation of coordinates together with its length.
///
/// `apply` sends coordinate `i` of its argument to position `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    perm: Vec<usize>,
    length: usize,
}

impl WeylElement {
    pub fn identity(r: usize) -> Self {
        WeylElement { perm: (0..r).collect(), length: 0 }
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidInput(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        let length = inversions(&perm);
        Ok(WeylElement { perm, length })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Coxeter length l(w), the number of inversions.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, mu: &Weight) -> Weight {
        debug_assert_eq!(mu.rank(), self.rank());
        let mut out = vec![Q::zero(); self.rank()];
        for (i, x) in mu.coords().iter().enumerate() {
            out[self.perm[i]] = x.clone();
        }
        Weight::new(out)
    }

    pub fn apply_ints(&self, mu: &[i64]) -> Vec<i64> {
        let mut out = vec![0; mu.len()];
        for (i, &x) in mu.iter().enumerate() {
            out[self.perm[i]] = x;
        }
        out
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let perm: Vec<usize> = other.perm.iter().map(|&j| self.perm[j]).collect();
        let length = inversions(&perm);
        WeylElement { perm, length }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0; self.rank()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        WeylElement { perm: inv, length: self.length }
    }
}

fn inversions(perm: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                n += 1;
            }
        }
    }
    n
}

/// All r! elements of S_r in lexicographic order of their permutations.
pub fn weyl_group(r: usize) -> Vec<WeylElement> {
    let mut perm: Vec<usize> = (0..r).collect();
    let mut out = Vec::new();
    loop {
        out.push(WeylElement { length: inversions(&perm), perm: perm.clone() });
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// Advances to the next lexicographic permutation; false when wrapped.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// A weakly decreasing r-tuple: a highest weight for GL(r).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Weight", into = "Weight")]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub fn new(parts: Weight) -> Result<Self> {
        let c = parts.coords();
        if c.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidInput(format!("{parts} is not weakly decreasing")));
        }
        Ok(DominantWeight(parts))
    }

    pub fn from_ints(parts: &[i64]) -> Result<Self> {
        DominantWeight::new(Weight::from_ints(parts))
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn parts(&self) -> &[Q] {
        self.0.coords()
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.to_ints()
    }
}

impl TryFrom<Weight> for DominantWeight {
    type Error = Error;
    fn try_from(w: Weight) -> Result<Self> {
        DominantWeight::new(w)
    }
}

impl From<DominantWeight> for Weight {
    fn from(d: DominantWeight) -> Weight {
        d.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The distinct images w·λ for w ∈ S_r, in lexicographic order.
pub fn weyl_orbit(lambda: &Weight, r: usize) -> Result<Vec<Weight>> {
    lambda.check_rank(r)?;
    let mut coords = lambda.coords().to_vec();
    coords.sort();
    let mut out = vec![Weight::new(coords.clone())];
    while next_permutation(&mut coords) {
        out.push(Weight::new(coords.clone()));
    }
    Ok(out)
}

/// ρ in the shifted convention (r−1, r−2, …, 0).
pub fn rho(r: usize) -> Weight {
    Weight::from_ints(&rho_ints(r))
}

pub(crate) fn rho_ints(r: usize) -> Vec<i64> {
    (0..r).rev().map(|i| i as i64).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dominantized {
    Regular {
        w: WeylElement,
        dominant: DominantWeight,
    },
    /// Two coordinates coincide, so no unique sorting element exists.
    Singular,
}

/// Finds the unique w with w·μ strictly decreasing.
pub fn dominantize(mu: &Weight) -> Dominantized {
    let c = mu.coords();
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by(|&a, &b| c[b].cmp(&c[a]));
    if order.windows(2).any(|p| c[p[0]] == c[p[1]]) {
        return Dominantized::Singular;
    }
    let mut perm = vec![0; c.len()];
    for (k, &i) in order.iter().enumerate() {
        perm[i] = k;
    }
    let w = WeylElement { length: inversions(&perm), perm };
    let dominant = DominantWeight(w.apply(mu));
    Dominantized::Regular { w, dominant }
}

/// Integer-only counterpart used on hot paths: returns (l(w), w·μ).
pub(crate) fn dominantize_ints(mu: &[i64]) -> Option<(usize, Vec<i64>)> {
    let mut order: Vec<usize> = (0..mu.len()).collect();
    order.sort_by(|&a, &b| mu[b].cmp(&mu[a]));
    if order.windows(2).any(|p| mu[p[0]] == mu[p[1]]) {
        return None;
    }
    let mut perm = vec![0; mu.len()];
    for (k, &i) in order.iter().enumerate() {
        perm[i] = k;
    }
    Some((inversions(&perm), order.iter().map(|&i| mu[i]).collect()))
}

/// True if `x` is a half-integer (denominator 1 or 2).
pub fn is_half_integer(x: &Q) -> bool {
    let two = q(2);
    (x * &two).is_integer()
}

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lie::Weight;
use crate::rational::{q, Q};

/// Finite Laurent polynomial Σ c_μ t^μ over integer exponent vectors.
///
/// Terms are kept in lexicographic exponent order with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], 1)
    }

    pub fn monomial(exp: Vec<i64>, c: i64) -> Self {
        let mut p = LaurentPoly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Vec<i64>, i64)>) -> Self {
        let mut p = LaurentPoly::zero(rank);
        for (e, c) in terms {
            debug_assert_eq!(e.len(), rank);
            p.add_term(e, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, &i64)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i64]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<(&Vec<i64>, i64)> {
        self.terms.last_key_value().map(|(e, &c)| (e, c))
    }

    pub fn trailing(&self) -> Option<(&Vec<i64>, i64)> {
        self.terms.first_key_value().map(|(e, &c)| (e, c))
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_scaled(&mut self, other: &LaurentPoly, c: i64) {
        for (e, &x) in &other.terms {
            self.add_term(e.clone(), c * x);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        p.add_scaled(other, 1);
        p
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        p.add_scaled(other, -1);
        p
    }

    pub fn scale(&self, c: i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero(self.rank);
        p.add_scaled(self, c);
        p
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero(self.rank);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                p.add_term(add_exp(a, b), x * y);
            }
        }
        p
    }

    /// Multiplies by the monomial t^shift.
    pub fn shift(&self, shift: &[i64]) -> LaurentPoly {
        LaurentPoly { rank: self.rank, terms: self.terms.iter().map(|(e, &c)| (add_exp(e, shift), c)).collect() }
    }

    /// Applies an arbitrary exponent map, merging collisions.
    pub fn map_exponents(&self, rank: usize, f: impl Fn(&[i64]) -> Vec<i64>) -> LaurentPoly {
        LaurentPoly::from_terms(rank, self.terms.iter().map(|(e, &c)| (f(e), c)))
    }

    /// Exact quotient by the binomial (1 − t^β). Fails if there is a remainder.
    pub fn div_one_minus(&self, beta: &[i64]) -> Result<LaurentPoly> {
        if beta.iter().all(|&b| b == 0) {
            return Err(Error::InvalidInput("division by 1 - t^0".into()));
        }
        if is_lex_negative(beta) {
            // 1/(1 − t^β) = −t^{−β}/(1 − t^{−β})
            let neg: Vec<i64> = beta.iter().map(|b| -b).collect();
            return Ok(self.div_one_minus(&neg)?.shift(&neg).scale(-1));
        }
        if self.is_empty() {
            return Ok(self.clone());
        }
        // An exact quotient is supported in the bounding box of the dividend.
        let (lo, hi) = self.bounding_box();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.rank);
        while let Some((m, c)) = rem.leading() {
            // rem ≡ c t^m + lower; quotient term −c t^{m−β}.
            let e = sub_exp(m, beta);
            if e.iter().zip(lo.iter().zip(&hi)).any(|(x, (a, b))| x < a || x > b) {
                return Err(Error::NonExactDivision(format!("remainder at t^{m:?} dividing by 1 - t^{beta:?}")));
            }
            let m = m.clone();
            rem.add_term(m, -c);
            rem.add_term(e.clone(), c);
            quot.add_term(e, -c);
        }
        Ok(quot)
    }

    /// Coordinatewise minimum and maximum over the support.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.rank];
        let mut hi = vec![i64::MIN; self.rank];
        for e in self.terms.keys() {
            for i in 0..self.rank {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    pub fn evaluate(&self, point: &[Q]) -> Result<Q> {
        let mut s = Q::zero();
        for (e, &c) in &self.terms {
            s += q(c) * monomial_value(e, point)?;
        }
        Ok(s)
    }

    pub fn to_weighted(&self) -> Vec<(Weight, i64)> {
        self.terms.iter().map(|(e, &c)| (Weight::from_ints(e), c)).collect()
    }
}

/// Value of t^e at a rational point.
pub fn monomial_value(e: &[i64], point: &[Q]) -> Result<Q> {
    let mut v = Q::one();
    for (&k, x) in e.iter().zip(point) {
        if k == 0 {
            continue;
        }
        if x.is_zero() && k < 0 {
            return Err(Error::Pole(format!("t^{e:?} at a zero coordinate")));
        }
        let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
        v *= if k > 0 { p } else { Q::one() / p };
    }
    Ok(v)
}

pub(crate) fn add_exp(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub_exp(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn is_lex_negative(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if *c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                write!(f, " ")?;
            }
            let mag = c.abs();
            let exps: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            if mag == 1 {
                write!(f, "{sign}t^({})", exps.join(","))?;
            } else {
                write!(f, "{sign}{mag}t^({})", exps.join(","))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct Term {
    w: Vec<i64>,
    c: i64,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self.terms.iter().map(|(w, &c)| Term { w: w.clone(), c }).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<Term>::deserialize(d)?;
        let rank = terms.first().map_or(0, |t| t.w.len());
        if terms.iter().any(|t| t.w.len() != rank) {
            return Err(serde::de::Error::custom("terms of differing rank"));
        }
        Ok(LaurentPoly::from_terms(rank, terms.into_iter().map(|t| (t.w, t.c))))
    }
}

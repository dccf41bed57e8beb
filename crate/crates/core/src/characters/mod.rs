//! Characters of GL(r): Weyl's formula, tensor products, invariants and
//! Borel–Weil–Bott placement.

mod laurent;

pub(crate) use laurent::{add_exp, is_lex_negative, sub_exp};
pub use laurent::{monomial_value, LaurentPoly};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

use crate::error::{check_rank, Error, Result};
use crate::lie::{dominantize_ints, rho_ints, weyl_group, DominantWeight, Weight};
use crate::rational::{q, Q};

fn int_parts(lambda: &DominantWeight) -> Result<Vec<i64>> {
    lambda.to_ints().ok_or_else(|| Error::InvalidInput(format!("{lambda} is not integral")))
}

/// Positive roots e_i − e_j, i < j.
pub fn positive_roots(r: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let mut a = vec![0; r];
            a[i] = 1;
            a[j] = -1;
            out.push(a);
        }
    }
    out
}

/// Σ_w (−1)^{l(w)} t^{w(λ+ρ)−ρ}.
pub fn weyl_numerator(lambda: &[i64]) -> LaurentPoly {
    let r = lambda.len();
    let rho = rho_ints(r);
    let shifted = add_exp(lambda, &rho);
    let mut num = LaurentPoly::zero(r);
    for w in weyl_group(r) {
        num.add_term(sub_exp(&w.apply_ints(&shifted), &rho), w.sign());
    }
    num
}

/// Character of V_λ, dividing the alternant exactly by Π_{α>0}(1 − t^{−α}).
pub fn weyl_character(lambda: &DominantWeight) -> Result<LaurentPoly> {
    weyl_character_ints(&int_parts(lambda)?)
}

pub(crate) fn weyl_character_ints(lambda: &[i64]) -> Result<LaurentPoly> {
    if lambda.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::InvalidInput(format!("{lambda:?} is not dominant")));
    }
    let mut p = weyl_numerator(lambda);
    for alpha in positive_roots(lambda.len()) {
        let neg: Vec<i64> = alpha.iter().map(|a| -a).collect();
        p = p.div_one_minus(&neg)?;
    }
    if let Some((e, c)) = p.terms().find(|(_, &c)| c < 0) {
        return Err(Error::InvariantBreach(format!("negative multiplicity {c} at {e:?}")));
    }
    Ok(p)
}

/// Π_{i<j} (λ_i − λ_j + j − i)/(j − i).
pub fn weyl_dimension(lambda: &DominantWeight) -> Result<BigInt> {
    let l = int_parts(lambda)?;
    Ok(weyl_dimension_ints(&l))
}

pub(crate) fn weyl_dimension_ints(l: &[i64]) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            num *= BigInt::from(l[i] - l[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    num / den
}

/// Per-call memo of characters keyed by highest weight.
#[derive(Default)]
pub struct CharacterCache {
    chars: HashMap<Vec<i64>, LaurentPoly>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, lambda: &[i64]) -> Result<&LaurentPoly> {
        if !self.chars.contains_key(lambda) {
            let ch = weyl_character_ints(lambda)?;
            self.chars.insert(lambda.to_vec(), ch);
        }
        Ok(&self.chars[lambda])
    }

    /// Writes a W-symmetric character as Σ m_ν χ_ν by peeling off the
    /// lexicographically largest weight, which is always dominant.
    pub fn decompose(&mut self, ch: &LaurentPoly) -> Result<BTreeMap<Vec<i64>, u64>> {
        let mut rest = ch.clone();
        let mut out = BTreeMap::new();
        while let Some((top, m)) = rest.leading() {
            let top = top.clone();
            if m < 0 {
                return Err(Error::InvariantBreach(format!("negative multiplicity {m} for {top:?} in decomposition")));
            }
            let chi = self.get(&top)?;
            rest.add_scaled(chi, -m);
            out.insert(top, m as u64);
        }
        Ok(out)
    }

    pub fn tensor(&mut self, lambda: &[i64], mu: &[i64]) -> Result<BTreeMap<Vec<i64>, u64>> {
        let a = self.get(lambda)?.clone();
        let prod = a.mul(self.get(mu)?);
        self.decompose(&prod)
    }
}

/// Multiplicities m_ν in V_λ ⊗ V_μ.
pub fn tensor_decompose(lambda: &DominantWeight, mu: &DominantWeight) -> Result<BTreeMap<DominantWeight, u64>> {
    check_rank(lambda.rank(), mu.rank())?;
    let mut cache = CharacterCache::new();
    let m = cache.tensor(&int_parts(lambda)?, &int_parts(mu)?)?;
    m.into_iter().map(|(k, v)| Ok((DominantWeight::from_ints(&k)?, v))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Group {
    /// Invariants of GL(r): the trivial highest weight 0 only.
    Gl,
    /// Invariants of SL(r): every determinant power c·(1,…,1).
    Sl,
}

type Decomposition = BTreeMap<Vec<i64>, u64>;

/// Dimension of (V_{λ₁} ⊗ … ⊗ V_{λₙ})^G.
///
/// For SL(r) each weight is first shifted by a multiple of (1,…,1) so that its
/// last entry vanishes; the shifted weight must be integral.
pub fn invariant_dim(lambdas: &[DominantWeight], group: Group) -> Result<u64> {
    let Some(first) = lambdas.first() else {
        return Err(Error::InvalidInput("empty tensor product".into()));
    };
    let r = first.rank();
    let mut parts = Vec::with_capacity(lambdas.len());
    for l in lambdas {
        check_rank(r, l.rank())?;
        let p = match group {
            Group::Gl => int_parts(l)?,
            Group::Sl => {
                let last = l.parts()[r - 1].clone();
                let shifted = Weight::new(l.parts().iter().map(|x| x - &last).collect());
                shifted.to_ints().ok_or_else(|| Error::InvalidInput(format!("{l} is not integral modulo (1,...,1)")))?
            }
        };
        parts.push(p);
    }
    let mut cache = CharacterCache::new();
    let mut pair_cache: HashMap<(Vec<i64>, Vec<i64>), Decomposition> = HashMap::new();
    let mut current: BTreeMap<Vec<i64>, u64> = BTreeMap::from([(parts[0].clone(), 1)]);
    for p in &parts[1..] {
        let mut next = BTreeMap::new();
        for (nu, m) in current {
            let key = (nu, p.clone());
            if !pair_cache.contains_key(&key) {
                let d = cache.tensor(&key.0, &key.1)?;
                pair_cache.insert(key.clone(), d);
            }
            for (k, v) in &pair_cache[&key] {
                *next.entry(k.clone()).or_insert(0) += m * v;
            }
        }
        current = next;
    }
    Ok(current
        .iter()
        .filter(|(nu, _)| match group {
            Group::Gl => nu.iter().all(|&x| x == 0),
            Group::Sl => nu.windows(2).all(|w| w[0] == w[1]),
        })
        .map(|(_, m)| m)
        .sum())
}

/// GL(2) highest weight (2j, 0) for SU(2) spin j ∈ ½Z≥0.
pub fn su2_highest_weight(spin: &Q) -> Result<DominantWeight> {
    let d = spin * q(2);
    if !d.is_integer() || d < Q::zero() {
        return Err(Error::InvalidInput(format!("spin {spin} is not a non-negative half-integer")));
    }
    DominantWeight::new(Weight::new(vec![d, Q::zero()]))
}

/// SU(2) invariants of V_{j₁} ⊗ … ⊗ V_{jₙ}.
pub fn invariant_dim_su2(spins: &[Q]) -> Result<u64> {
    let ws = spins.iter().map(su2_highest_weight).collect::<Result<Vec<_>>>()?;
    invariant_dim(&ws, Group::Sl)
}

/// Character of the SU(2) representation with top weight d, in the variable z.
pub fn su2_character(d: i64) -> Result<LaurentPoly> {
    if d < 0 {
        return Err(Error::InvalidInput(format!("top weight {d} is negative")));
    }
    Ok(weyl_character_ints(&[d, 0])?.map_exponents(1, |e| vec![e[0] - e[1]]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cohomology {
    Zero,
    Nonzero { degree: usize, highest: DominantWeight },
}

/// H^*(G/B, L_λ): a single degree l(w) carrying V_{w(λ+ρ)−ρ}, or nothing.
pub fn bwb_cohomology(lambda: &Weight) -> Result<Cohomology> {
    let l = lambda.to_ints().ok_or_else(|| Error::InvalidInput(format!("{lambda} is not integral")))?;
    let rho = rho_ints(l.len());
    Ok(match dominantize_ints(&add_exp(&l, &rho)) {
        None => Cohomology::Zero,
        Some((len, dom)) => {
            Cohomology::Nonzero { degree: len, highest: DominantWeight::from_ints(&sub_exp(&dom, &rho))? }
        }
    })
}

/// SU(2) specialisation: line bundle O(n) on P¹ ↦ (degree, top weight).
pub fn bwb_su2(n: i64) -> Option<(usize, i64)> {
    match bwb_cohomology(&Weight::from_ints(&[n, 0])).ok()? {
        Cohomology::Zero => None,
        Cohomology::Nonzero { degree, highest } => {
            let h = highest.to_ints()?;
            Some((degree, h[0] - h[1]))
        }
    }
}

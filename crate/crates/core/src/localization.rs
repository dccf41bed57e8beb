//! Fixed-point sums of rational functions Σ num / Π (1 − t^β), their exact
//! evaluation, and their expansion as geometric series in a chosen direction.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::characters::{add_exp, is_lex_negative, monomial_value, positive_roots, weyl_numerator, LaurentPoly};
use crate::error::{Error, Result};
use crate::lie::{rho_ints, DominantWeight, Weight};
use crate::polytopes::{is_delzant, Polytope};
use crate::rational::{q, qf, Q};

/// num / Π_β (1 − t^β), expanded as Π_β Σ_{k≥0} t^{kβ} toward decreasing ⟨·, dir⟩.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeTerm {
    pub num: LaurentPoly,
    pub den: Vec<Vec<i64>>,
    pub dir: Weight,
}

fn pair(beta: &[i64], dir: &Weight) -> Q {
    beta.iter().zip(dir.coords()).map(|(&b, x)| q(b) * x).sum()
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

impl ConeTerm {
    pub fn new(num: LaurentPoly, den: Vec<Vec<i64>>, dir: Weight) -> Result<Self> {
        let t = ConeTerm { num, den, dir };
        t.validate()?;
        Ok(t)
    }

    /// Picks a direction from the denominators alone.
    pub fn auto(num: LaurentPoly, den: Vec<Vec<i64>>) -> Result<Self> {
        let dir = term_direction(num.rank(), &den)
            .ok_or_else(|| Error::InvalidInput(format!("denominators {den:?} admit no expansion direction")))?;
        ConeTerm::new(num, den, dir)
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.rank();
        if self.dir.rank() != r || self.den.iter().any(|b| b.len() != r) {
            return Err(Error::RankMismatch { expected: r, found: self.dir.rank() });
        }
        for b in &self.den {
            if !pair(b, &self.dir).is_negative() {
                return Err(Error::InvariantBreach(format!(
                    "denominator {b:?} does not pair negatively with direction {}",
                    self.dir
                )));
            }
        }
        Ok(())
    }

    /// The same rational function, rewritten so every denominator pairs
    /// negatively with `dir`.
    pub fn polarize(&self, dir: &Weight) -> Result<ConeTerm> {
        let mut num = self.num.clone();
        let mut den = Vec::with_capacity(self.den.len());
        for b in &self.den {
            let s = pair(b, dir);
            if s.is_zero() {
                return Err(Error::InvalidInput(format!("direction {dir} is orthogonal to {b:?}")));
            }
            if s.is_positive() {
                // 1/(1 − t^β) = −t^{−β}/(1 − t^{−β})
                num = num.shift(&neg(b)).scale(-1);
                den.push(neg(b));
            } else {
                den.push(b.clone());
            }
        }
        Ok(ConeTerm { num, den, dir: dir.clone() })
    }

    pub fn evaluate(&self, point: &[Q]) -> Result<Q> {
        let mut d = Q::one();
        for b in &self.den {
            let f = Q::one() - monomial_value(b, point)?;
            if f.is_zero() {
                return Err(Error::Pole(format!("1 - t^{b:?} vanishes")));
            }
            d *= f;
        }
        Ok(self.num.evaluate(point)? / d)
    }

    /// Exact coefficients inside `bx`.
    pub fn expand_in_box(&self, bx: &BoxBounds) -> Result<LaurentPoly> {
        self.validate()?;
        let level = bx.min_pairing(&self.dir);
        let above = |e: &[i64]| pair(e, &self.dir) >= level;
        let mut cur: BTreeMap<Vec<i64>, i64> =
            self.num.terms().filter(|(e, _)| above(e)).map(|(e, &c)| (e.clone(), c)).collect();
        for b in &self.den {
            let mut next: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
            for (e, c) in cur {
                let mut x = e;
                while above(&x) {
                    *next.entry(x.clone()).or_insert(0) += c;
                    x = add_exp(&x, b);
                }
            }
            next.retain(|_, c| *c != 0);
            cur = next;
        }
        Ok(LaurentPoly::from_terms(self.rank(), cur.into_iter().filter(|(e, _)| bx.contains(e))))
    }
}

/// A generic direction pairing negatively with every β, if one exists:
/// −Σβ, then small perturbations of it.
fn term_direction(rank: usize, den: &[Vec<i64>]) -> Option<Weight> {
    let mut s = vec![Q::zero(); rank];
    for b in den {
        for (x, &y) in s.iter_mut().zip(b) {
            *x -= q(y);
        }
    }
    let ok = |d: &Weight| den.iter().all(|b| pair(b, d).is_negative());
    let base = Weight::new(s);
    if ok(&base) {
        return Some(base);
    }
    for k in 1..=6 {
        for m in 2..=6i64 {
            let eps = qf(1, 1 << (2 * k));
            let mut c = base.coords().to_vec();
            let mut p = Q::one();
            for x in c.iter_mut() {
                *x -= &eps * &p;
                p *= q(m);
            }
            let d = Weight::new(c);
            if ok(&d) {
                return Some(d);
            }
        }
    }
    None
}

/// −(1, m, m², …) for the least m ≥ 2 orthogonal to no β.
pub fn generic_direction(rank: usize, betas: &[Vec<i64>]) -> Weight {
    let mut m = 2i64;
    loop {
        let mut c = Vec::with_capacity(rank);
        let mut p = 1i64;
        for _ in 0..rank {
            c.push(-p);
            p *= m;
        }
        let d = Weight::from_ints(&c);
        if betas.iter().all(|b| !pair(b, &d).is_zero()) {
            return d;
        }
        m += 1;
    }
}

/// Inclusive integer box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxBounds {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl BoxBounds {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::RankMismatch { expected: lo.len(), found: hi.len() });
        }
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::InvalidInput(format!("empty box {lo:?}..{hi:?}")));
        }
        Ok(BoxBounds { lo, hi })
    }

    pub fn cube(rank: usize, lo: i64, hi: i64) -> Result<Self> {
        BoxBounds::new(vec![lo; rank], vec![hi; rank])
    }

    pub fn rank(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, e: &[i64]) -> bool {
        e.iter().zip(self.lo.iter().zip(&self.hi)).all(|(x, (a, b))| a <= x && x <= b)
    }

    fn min_pairing(&self, dir: &Weight) -> Q {
        self.lo
            .iter()
            .zip(&self.hi)
            .zip(dir.coords())
            .map(|((&a, &b), x)| if x.is_negative() { q(b) * x } else { q(a) * x })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ConeTerm>", into = "Vec<ConeTerm>")]
pub struct ConeSeries {
    terms: Vec<ConeTerm>,
}

impl TryFrom<Vec<ConeTerm>> for ConeSeries {
    type Error = Error;
    fn try_from(terms: Vec<ConeTerm>) -> Result<Self> {
        match terms.first() {
            None => Ok(ConeSeries::empty()),
            Some(t) => ConeSeries::new(t.rank(), terms),
        }
    }
}

impl From<ConeSeries> for Vec<ConeTerm> {
    fn from(s: ConeSeries) -> Self {
        s.terms
    }
}

impl ConeSeries {
    pub fn new(rank: usize, terms: Vec<ConeTerm>) -> Result<Self> {
        for t in &terms {
            if t.rank() != rank {
                return Err(Error::RankMismatch { expected: rank, found: t.rank() });
            }
            t.validate()?;
        }
        Ok(ConeSeries { terms })
    }

    pub fn empty() -> Self {
        ConeSeries { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[ConeTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rank(&self) -> Option<usize> {
        self.terms.first().map(ConeTerm::rank)
    }

    /// Σ_v t^v / Π_{β ∈ B_v} (1 − t^β), polarized along one generic direction.
    pub fn fixed_points(rank: usize, data: &[(Vec<i64>, Vec<Vec<i64>>)]) -> Result<Self> {
        let all: Vec<Vec<i64>> = data.iter().flat_map(|(_, bs)| bs.iter().cloned()).collect();
        let dir = generic_direction(rank, &all);
        let terms = data
            .iter()
            .map(|(v, bs)| {
                ConeTerm { num: LaurentPoly::monomial(v.clone(), 1), den: bs.clone(), dir: dir.clone() }.polarize(&dir)
            })
            .collect::<Result<Vec<_>>>()?;
        ConeSeries::new(rank, terms)
    }

    pub fn concat(&self, other: &ConeSeries) -> ConeSeries {
        ConeSeries { terms: self.terms.iter().chain(&other.terms).cloned().collect() }
    }

    pub fn negate(&self) -> ConeSeries {
        ConeSeries { terms: self.terms.iter().map(|t| ConeTerm { num: t.num.scale(-1), ..t.clone() }).collect() }
    }

    pub fn evaluate(&self, point: &[Q]) -> Result<Q> {
        let mut s = Q::zero();
        for t in &self.terms {
            if t.rank() != point.len() {
                return Err(Error::RankMismatch { expected: t.rank(), found: point.len() });
            }
            s += t.evaluate(point)?;
        }
        Ok(s)
    }

    pub fn expand_in_box(&self, bx: &BoxBounds) -> Result<LaurentPoly> {
        self.expand_in_box_jobs(bx, 1)
    }

    /// Expands terms on `jobs` workers; the merge order is fixed.
    pub fn expand_in_box_jobs(&self, bx: &BoxBounds, jobs: usize) -> Result<LaurentPoly> {
        let parts: Vec<LaurentPoly> = if jobs <= 1 {
            self.terms.iter().map(|t| t.expand_in_box(bx)).collect::<Result<_>>()?
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
            pool.install(|| self.terms.par_iter().map(|t| t.expand_in_box(bx)).collect::<Result<_>>())?
        };
        let mut out = LaurentPoly::zero(bx.rank());
        for p in &parts {
            out.add_scaled(p, 1);
        }
        Ok(out)
    }

    /// Numerator over the common denominator Π (1 − t^γ), γ lex-positive.
    fn over_common_denominator(series: &[&ConeSeries], rank: usize) -> Vec<LaurentPoly> {
        let canon = |t: &ConeTerm| {
            let mut num = t.num.clone();
            let mut den = Vec::new();
            for b in &t.den {
                if is_lex_negative(b) {
                    num = num.shift(&neg(b)).scale(-1);
                    den.push(neg(b));
                } else {
                    den.push(b.clone());
                }
            }
            (num, den)
        };
        let canonical: Vec<Vec<(LaurentPoly, Vec<Vec<i64>>)>> =
            series.iter().map(|s| s.terms.iter().map(canon).collect()).collect();
        let mut common: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for (_, den) in canonical.iter().flatten() {
            let mut m: BTreeMap<&Vec<i64>, usize> = BTreeMap::new();
            for b in den {
                *m.entry(b).or_insert(0) += 1;
            }
            for (b, k) in m {
                let e = common.entry(b.clone()).or_insert(0);
                *e = (*e).max(k);
            }
        }
        canonical
            .iter()
            .map(|terms| {
                let mut total = LaurentPoly::zero(rank);
                for (num, den) in terms {
                    let mut missing = common.clone();
                    for b in den {
                        *missing.get_mut(b).expect("in common") -= 1;
                    }
                    let mut p = num.clone();
                    for (g, k) in missing {
                        let f = LaurentPoly::one(rank).sub(&LaurentPoly::monomial(g, 1));
                        for _ in 0..k {
                            p = p.mul(&f);
                        }
                    }
                    total.add_scaled(&p, 1);
                }
                total
            })
            .collect()
    }

    /// Equality as rational functions.
    pub fn rational_eq(&self, other: &ConeSeries) -> bool {
        let Some(rank) = self.rank().or(other.rank()) else {
            return true;
        };
        let nums = ConeSeries::over_common_denominator(&[self, other], rank);
        nums[0] == nums[1]
    }
}

/// Brion's vertex sum of a Delzant polytope.
pub fn vertex_sum(p: &Polytope) -> Result<ConeSeries> {
    let r = p.ambient();
    if p.dim() == 0 {
        let v = p.vertices()[0].to_ints().ok_or_else(|| Error::InvalidInput("vertex must be integral".into()))?;
        return ConeSeries::new(
            r,
            vec![ConeTerm { num: LaurentPoly::monomial(v, 1), den: vec![], dir: Weight::zero(r) }],
        );
    }
    let report = is_delzant(p)?;
    if let Some(v) = report.failing_vertex {
        return Err(Error::InvalidInput(format!("not Delzant at vertex {v}")));
    }
    let data: Vec<(Vec<i64>, Vec<Vec<i64>>)> = (0..p.vertices().len())
        .map(|i| (p.vertices()[i].to_ints().expect("Delzant vertices are integral"), p.edge_directions_at(i)))
        .collect();
    ConeSeries::fixed_points(r, &data)
}

/// Bounding box of P widened by the largest denominator entry.
pub fn default_box(p: &Polytope, s: &ConeSeries) -> BoxBounds {
    let (lo, hi) = p.bounding_box();
    let pad = s.terms().iter().flat_map(|t| t.den.iter().flatten()).map(|x| x.abs()).max().unwrap_or(0);
    let floor = |x: &Q| i64::try_from(x.floor().to_integer()).expect("box fits in i64");
    let ceil = |x: &Q| i64::try_from(x.ceil().to_integer()).expect("box fits in i64");
    BoxBounds {
        lo: lo.iter().map(|x| floor(x) - pad).collect::<Vec<i64>>(),
        hi: hi.iter().map(|x| ceil(x) + pad).collect::<Vec<i64>>(),
    }
}

/// Closed-form simplex series: three vertex terms of
/// the d-dilated standard triangle, expanded along −(1, 2).
pub fn p2_series(d: i64) -> ConeSeries {
    let dir = Weight::from_ints(&[-1, -2]);
    let t = |e: [i64; 2], c: i64, den: &[[i64; 2]]| ConeTerm {
        num: LaurentPoly::monomial(e.to_vec(), c),
        den: den.iter().map(|b| b.to_vec()).collect(),
        dir: dir.clone(),
    };
    ConeSeries {
        terms: vec![
            t([0, 0], 1, &[[1, 0], [0, 1]]),
            t([d + 1, 0], -1, &[[1, 0], [-1, 1]]),
            t([-1, d + 2], 1, &[[-1, 1], [0, 1]]),
        ],
    }
}

/// χ(P¹, O(k)) = z^k/(1 − z^{−2}) + z^{−k}/(1 − z²).
pub fn p1_line_bundle(k: i64) -> ConeSeries {
    ConeSeries::fixed_points(1, &[(vec![k], vec![vec![-2]]), (vec![-k], vec![vec![2]])]).expect("rank 1")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P1Report {
    pub d: i64,
    pub pass: bool,
    pub bounds: BoxBounds,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

/// z^{−d} + z^{2−d} + … + z^d equals the full lattice Σ_n z^{d+2n} minus the two
/// unstable-stratum series, compared coefficientwise in a box.
pub fn p1_kn_identity(d: i64, half_width: Option<i64>) -> Result<P1Report> {
    if !(0..=50).contains(&d) {
        return Err(Error::OutOfRange(format!("d = {d} not in 0..=50")));
    }
    let w = half_width.unwrap_or(d + 6);
    if w < 0 {
        return Err(Error::InvalidInput("box half-width must be non-negative".into()));
    }
    let bx = BoxBounds::cube(1, -w, w)?;
    let mut lhs = LaurentPoly::zero(1);
    for k in 0..=d {
        let e = vec![-d + 2 * k];
        if bx.contains(&e) {
            lhs.add_term(e, 1);
        }
    }
    let z = |e: i64| LaurentPoly::monomial(vec![e], 1);
    let up = Weight::from_ints(&[-1]);
    let down = Weight::from_ints(&[1]);
    // Σ_{n∈Z} z^{d+2n} as two expansions of z^d/(1 − z²).
    let ascending = ConeTerm::new(z(d), vec![vec![2]], up.clone())?;
    let descending = ascending.polarize(&down)?;
    let top = ConeTerm::new(z(d + 2), vec![vec![2]], up)?;
    let bottom = ConeTerm::new(z(-d - 2), vec![vec![-2]], down)?;
    let mut rhs = ascending.expand_in_box(&bx)?;
    rhs = rhs.sub(&descending.expand_in_box(&bx)?);
    rhs = rhs.sub(&top.expand_in_box(&bx)?);
    rhs = rhs.sub(&bottom.expand_in_box(&bx)?);
    Ok(P1Report { d, pass: lhs == rhs, bounds: bx, lhs, rhs })
}

/// The four-term blow-up formula exactly as displayed.
pub fn blowup_literal(d: i64, e: i64) -> Result<ConeSeries> {
    let m = |x: i64, y: i64, c: i64| LaurentPoly::monomial(vec![x, y], c);
    let terms = vec![
        ConeTerm::auto(m(e, 0, 1), vec![vec![1, 0], vec![-1, 1]])?,
        ConeTerm::auto(m(-1, e + 1, -1), vec![vec![1, -1], vec![0, 1]])?,
        ConeTerm::auto(m(d, 0, -1), vec![vec![1, 0], vec![-1, 1]])?,
        ConeTerm::auto(m(0, d, 1), vec![vec![-1, 1], vec![0, 1]])?,
    ];
    ConeSeries::new(2, terms)
}

/// Direct evaluation of the displayed formula, independent of [`ConeSeries`].
pub fn blowup_literal_value(d: i64, e: i64, g1: &Q, g2: &Q) -> Result<Q> {
    let one = Q::one();
    let pw = |x: &Q, k: i64| monomial_value(&[k], std::slice::from_ref(x));
    let inv = |x: Q| {
        if x.is_zero() {
            Err(Error::Pole("vanishing factor".into()))
        } else {
            Ok(Q::one() / x)
        }
    };
    let a = inv(&one - g1)?;
    let b = inv(&one - g2 / g1)?;
    let c = inv(&one - g1 / g2)?;
    let f = inv(&one - g2)?;
    let t1 = pw(g1, e)? * &a * &b;
    let t2 = pw(g2, e + 1)? * pw(g1, -1)? * &c * &f;
    let t3 = pw(g1, d)? * &a * &b;
    let t4 = pw(g2, d)? * &b * &f;
    Ok(t1 - t2 - t3 + t4)
}

/// Fixed-point data of the blow-up of P² at a torus-fixed point, for the
/// bundle whose polygon has corners (e,0), (0,e), (d,0), (0,d).
pub fn blowup_series(d: i64, e: i64) -> ConeSeries {
    ConeSeries::fixed_points(
        2,
        &[
            (vec![e, 0], vec![vec![1, 0], vec![-1, 1]]),
            (vec![0, e], vec![vec![0, 1], vec![1, -1]]),
            (vec![d, 0], vec![vec![-1, 0], vec![-1, 1]]),
            (vec![0, d], vec![vec![0, -1], vec![1, -1]]),
        ],
    )
    .expect("rank 2")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupReport {
    pub d: i64,
    pub e: i64,
    pub literal: ConeSeries,
    pub series: ConeSeries,
    pub bounds: BoxBounds,
    pub expansion: LaurentPoly,
    /// Exponents with positive coefficient.
    pub h0: Vec<Vec<i64>>,
    /// Exponents with negative coefficient.
    pub h1: Vec<Vec<i64>>,
    pub chi: i64,
    pub disjoint: bool,
    pub multiplicity_free: bool,
}

pub fn blowup_chi(d: i64, e: i64) -> Result<BlowupReport> {
    if d.abs() > 200 || e.abs() > 200 {
        return Err(Error::OutOfRange("blow-up degrees must be at most 200 in size".into()));
    }
    let literal = blowup_literal(d, e)?;
    let series = blowup_series(d, e);
    let lo = d.min(e).min(0) - 2;
    let hi = d.max(e).max(0) + 2;
    let bounds = BoxBounds::cube(2, lo, hi)?;
    let expansion = series.expand_in_box(&bounds)?;
    let h0: Vec<Vec<i64>> = expansion.terms().filter(|(_, &c)| c > 0).map(|(x, _)| x.clone()).collect();
    let h1: Vec<Vec<i64>> = expansion.terms().filter(|(_, &c)| c < 0).map(|(x, _)| x.clone()).collect();
    let disjoint = h0.iter().all(|x| !h1.contains(x));
    let multiplicity_free = expansion.terms().all(|(_, c)| c.abs() == 1);
    let chi = expansion.coefficient_sum();
    Ok(BlowupReport { d, e, literal, series, bounds, expansion, h0, h1, chi, disjoint, multiplicity_free })
}

/// Alternant over Π_{α>0}(1 − t^{−α}), one term per Weyl element, expanded along ρ.
pub fn weyl_series(lambda: &DominantWeight) -> Result<ConeSeries> {
    let l = lambda.to_ints().ok_or_else(|| Error::InvalidInput(format!("{} is not integral", lambda.weight())))?;
    let r = l.len();
    let den: Vec<Vec<i64>> = positive_roots(r).iter().map(|a| neg(a)).collect();
    let dir = Weight::from_ints(&rho_ints(r));
    let terms = weyl_numerator(&l)
        .terms()
        .map(|(e, &c)| ConeTerm { num: LaurentPoly::monomial(e.clone(), c), den: den.clone(), dir: dir.clone() })
        .collect();
    ConeSeries::new(r, terms)
}

pub fn weyl_via_localization(lambda: &DominantWeight) -> Result<LaurentPoly> {
    if lambda.rank() > 4 {
        return Err(Error::OutOfRange(format!("rank {} exceeds 4", lambda.rank())));
    }
    let s = weyl_series(lambda)?;
    let l = lambda.to_ints().expect("checked integral");
    let bx = BoxBounds::cube(l.len(), *l.last().expect("rank ≥ 1"), l[0])?;
    s.expand_in_box(&bx)
}

/// Lattice-point generating function Σ_{μ ∈ P ∩ Z^r} ζ^μ.
pub fn lattice_sum(points: &[Vec<i64>], zeta: &[Q]) -> Result<Q> {
    let mut s = Q::zero();
    for p in points {
        s += monomial_value(p, zeta)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytopes::{hull, lattice_points};

    fn poly(pts: &[&[i64]]) -> Polytope {
        hull(&pts.iter().map(|p| Weight::from_ints(p)).collect::<Vec<_>>()).unwrap()
    }

    fn simplex(d: i64) -> Polytope {
        poly(&[&[0, 0], &[d, 0], &[0, d]])
    }

    type TermKey = (Vec<(Vec<i64>, i64)>, Vec<Vec<i64>>, Weight);

    fn sorted_terms(s: &ConeSeries) -> Vec<TermKey> {
        let mut v: Vec<_> = s
            .terms()
            .iter()
            .map(|t| {
                let mut den = t.den.clone();
                den.sort();
                (t.num.terms().map(|(e, &c)| (e.clone(), c)).collect(), den, t.dir.clone())
            })
            .collect();
        v.sort();
        v
    }

    fn qs(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn segment_series() {
        let s = vertex_sum(&poly(&[&[0], &[3]])).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.evaluate(&qs(&[2])).unwrap(), q(15));
        let s2 = vertex_sum(&poly(&[&[0], &[2]])).unwrap();
        let e = s2.expand_in_box(&BoxBounds::cube(1, -5, 5).unwrap()).unwrap();
        assert_eq!(e, LaurentPoly::from_terms(1, [(vec![0], 1), (vec![1], 1), (vec![2], 1)]));
    }

    #[test]
    fn point_and_empty() {
        let s = vertex_sum(&poly(&[&[2, 3]])).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.evaluate(&qs(&[2, 3])).unwrap(), q(4 * 27));
        assert_eq!(ConeSeries::empty().evaluate(&qs(&[2])).unwrap(), q(0));
    }

    #[test]
    fn simplex_matches_closed_form() {
        assert_eq!(vertex_sum(&simplex(1)).unwrap().evaluate(&qs(&[2, 3])).unwrap(), q(6));
        for d in 0..=5 {
            if d > 0 {
                let s = vertex_sum(&simplex(d)).unwrap();
                assert_eq!(sorted_terms(&s), sorted_terms(&p2_series(d)), "d={d}");
            }
            let pts = lattice_points(&simplex(d.max(0))).unwrap();
            assert_eq!(
                p2_series(d).evaluate(&[qf(2, 3), q(5)]).unwrap(),
                lattice_sum(&pts, &[qf(2, 3), q(5)]).unwrap()
            );
        }
    }

    #[test]
    fn non_delzant_rejected() {
        assert!(vertex_sum(&poly(&[&[0, 0], &[1, 0], &[0, 2]])).is_err());
    }

    #[test]
    fn expansion_equals_lattice_points() {
        let p = poly(&[&[0, 0], &[3, 0], &[3, 1], &[1, 3], &[0, 3]]);
        let s = vertex_sum(&p).unwrap();
        let e = s.expand_in_box(&default_box(&p, &s)).unwrap();
        let pts = lattice_points(&p).unwrap();
        assert_eq!(e, LaurentPoly::from_terms(2, pts.into_iter().map(|x| (x, 1))));
    }

    #[test]
    fn invalid_direction_is_breach() {
        let t = ConeTerm { num: LaurentPoly::one(1), den: vec![vec![1]], dir: Weight::from_ints(&[1]) };
        assert!(matches!(t.expand_in_box(&BoxBounds::cube(1, 0, 3).unwrap()), Err(Error::InvariantBreach(_))));
    }

    #[test]
    fn pole_reported() {
        let s = p1_line_bundle(1);
        assert!(matches!(s.evaluate(&qs(&[1])), Err(Error::Pole(_))));
        assert!(matches!(s.evaluate(&qs(&[-1])), Err(Error::Pole(_))));
    }

    #[test]
    fn p1_identity() {
        for d in 0..=10 {
            assert!(p1_kn_identity(d, None).unwrap().pass, "d={d}");
        }
        assert!(p1_kn_identity(3, Some(9)).unwrap().pass);
        let top = ConeTerm::new(LaurentPoly::monomial(vec![5], 1), vec![vec![2]], Weight::from_ints(&[-1])).unwrap();
        let e = top.expand_in_box(&BoxBounds::cube(1, -10, 10).unwrap()).unwrap();
        assert_eq!(e, LaurentPoly::from_terms(1, [(vec![5], 1), (vec![7], 1), (vec![9], 1)]));
    }

    #[test]
    fn p1_serre_sign() {
        for n in 2..=10 {
            assert!(p1_line_bundle(-n).rational_eq(&p1_line_bundle(n - 2).negate()), "n={n}");
        }
        assert!(!p1_line_bundle(3).rational_eq(&p1_line_bundle(2)));
    }

    #[test]
    fn blowup_examples() {
        let r = blowup_chi(3, 1).unwrap();
        assert_eq!(r.chi, 9);
        assert!(r.h1.is_empty() && r.multiplicity_free);
        assert!(blowup_series(4, 0).rational_eq(&vertex_sum(&simplex(4)).unwrap()));
        let r = blowup_chi(3, -2).unwrap();
        assert!(r.disjoint && r.multiplicity_free);
        assert_eq!(r.h0.len(), 10);
        assert_eq!(r.h1, vec![vec![-1, -1]]);
        assert_eq!(r.chi, 9);
        for (g1, g2) in [(qf(2, 3), q(5)), (q(-3), qf(7, 2))] {
            let lit = blowup_literal(5, 2).unwrap();
            assert_eq!(lit.evaluate(&[g1.clone(), g2.clone()]).unwrap(), blowup_literal_value(5, 2, &g1, &g2).unwrap());
        }
    }

    #[test]
    fn weyl_examples() {
        let one = weyl_via_localization(&DominantWeight::from_ints(&[1, 0]).unwrap()).unwrap();
        assert_eq!(one, LaurentPoly::from_terms(2, [(vec![1, 0], 1), (vec![0, 1], 1)]));
        let zero = weyl_via_localization(&DominantWeight::from_ints(&[0, 0, 0]).unwrap()).unwrap();
        assert_eq!(zero, LaurentPoly::one(3));
        let adj = DominantWeight::from_ints(&[2, 1, 0]).unwrap();
        let c = weyl_via_localization(&adj).unwrap();
        assert_eq!(c.coefficient_sum(), 8);
        assert_eq!(c, crate::characters::weyl_character(&adj).unwrap());
    }

    #[test]
    fn rational_equality() {
        let a = p1_line_bundle(1);
        let b = ConeSeries::new(
            1,
            vec![ConeTerm::new(
                LaurentPoly::from_terms(1, [(vec![1], 1), (vec![-1], 1)]),
                vec![],
                Weight::from_ints(&[0]),
            )
            .unwrap()],
        )
        .unwrap();
        assert!(a.rational_eq(&b));
        assert!(ConeSeries::empty().rational_eq(&ConeSeries::empty()));
    }

    #[test]
    fn json_shape() {
        let s = p2_series(1);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v[0]["den"], serde_json::json!([[1, 0], [0, 1]]));
        assert_eq!(v[0]["dir"], serde_json::json!(["-1", "-2"]));
        let back: ConeSeries = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }
}

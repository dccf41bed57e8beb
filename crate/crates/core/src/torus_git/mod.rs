//! Geometric invariant theory for a torus acting linearly on projective space.
//!
//! A point is recorded by its support: the moment weight of each nonzero
//! coordinate together with the squared modulus of that coordinate. Everything
//! here is stated against those weights, so semistability is `0 ∈ hull`.

mod descent;
mod nearest;

pub use descent::{minimize_kempf_ness, Descent, DescentConfig};
pub use nearest::{critical_types, nearest_point};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{check_rank, Error, Result};
use crate::lie::Weight;
use crate::polytopes::{hull, Polytope};
use crate::rational::{to_f64, Q};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "ProjPointRepr", into = "ProjPointRepr")]
pub struct ProjPoint {
    weights: Vec<Weight>,
    masses: Vec<Q>,
}

#[derive(Serialize, Deserialize)]
struct ProjPointRepr {
    weights: Vec<Weight>,
    #[serde(with = "crate::rational::serde_q_vec")]
    masses: Vec<Q>,
}

impl TryFrom<ProjPointRepr> for ProjPoint {
    type Error = Error;
    fn try_from(r: ProjPointRepr) -> Result<Self> {
        ProjPoint::new(r.weights.into_iter().zip(r.masses).collect())
    }
}

impl From<ProjPoint> for ProjPointRepr {
    fn from(p: ProjPoint) -> Self {
        ProjPointRepr { weights: p.weights, masses: p.masses }
    }
}

impl ProjPoint {
    /// Merges equal weights by adding masses. Weights come out sorted.
    pub fn new(support: Vec<(Weight, Q)>) -> Result<Self> {
        let Some(r) = support.first().map(|(w, _)| w.rank()) else {
            return Err(Error::InvalidInput("empty support".into()));
        };
        let mut merged: BTreeMap<Weight, Q> = BTreeMap::new();
        for (w, c) in support {
            check_rank(r, w.rank())?;
            if !c.is_positive() {
                return Err(Error::InvalidInput(format!("mass {c} at {w} is not positive")));
            }
            *merged.entry(w).or_insert_with(Q::zero) += c;
        }
        let (weights, masses) = merged.into_iter().unzip();
        Ok(ProjPoint { weights, masses })
    }

    /// Unit masses on the given weights.
    pub fn uniform(weights: &[Weight]) -> Result<Self> {
        ProjPoint::new(weights.iter().map(|w| (w.clone(), Q::one())).collect())
    }

    pub fn rank(&self) -> usize {
        self.weights[0].rank()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn masses(&self) -> &[Q] {
        &self.masses
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Same point with masses summing to 1.
    pub fn normalized(&self) -> ProjPoint {
        let total: Q = self.masses.iter().sum();
        ProjPoint { weights: self.weights.clone(), masses: self.masses.iter().map(|c| c / &total).collect() }
    }
}

/// Projective equality: same support, proportional masses.
impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights && self.normalized().masses == other.normalized().masses
    }
}

impl Eq for ProjPoint {}

/// Σ c_j w_j / Σ c_j − shift.
pub fn moment_map(x: &ProjPoint, shift: &Weight) -> Result<Weight> {
    check_rank(x.rank(), shift.rank())?;
    let total: Q = x.masses.iter().sum();
    let mut acc = Weight::zero(x.rank());
    for (w, c) in x.weights.iter().zip(&x.masses) {
        acc = &acc + &w.scale(c);
    }
    Ok(&acc.scale(&(Q::one() / total)) - shift)
}

pub fn orbit_moment_polytope(x: &ProjPoint) -> Polytope {
    hull(&x.weights).expect("support is nonempty and of one rank")
}

/// `num / sqrt(norm_sq)`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slope {
    #[serde(with = "crate::rational::serde_q")]
    pub num: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub norm_sq: Q,
}

impl Slope {
    pub fn value(&self) -> f64 {
        to_f64(&self.num) / to_f64(&self.norm_sq).sqrt()
    }

    /// sign(num) · num² / norm_sq, monotone in the slope.
    pub fn signed_square(&self) -> Q {
        let s = &self.num * &self.num / &self.norm_sq;
        if self.num.is_negative() {
            -s
        } else {
            s
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.signed_square().cmp(&other.signed_square()))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/sqrt({})", self.num, self.norm_sq)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum StabilityVerdict {
    Unstable { lambda: Weight, slope: Slope },
    SemistableNotPolystable { jh_face: usize },
    Polystable { stabilizer_dim: usize },
    Stable,
}

impl StabilityVerdict {
    pub fn is_semistable(&self) -> bool {
        !matches!(self, StabilityVerdict::Unstable { .. })
    }

    pub fn is_polystable(&self) -> bool {
        matches!(self, StabilityVerdict::Polystable { .. } | StabilityVerdict::Stable)
    }
}

pub fn classify_stability(x: &ProjPoint) -> StabilityVerdict {
    let h = orbit_moment_polytope(x);
    let origin = Weight::zero(x.rank());
    if !h.contains(&origin) {
        let (lambda, slope) = max_destabilizing(x).expect("0 outside the hull");
        return StabilityVerdict::Unstable { lambda, slope };
    }
    if h.relint_contains(&origin) {
        return if h.dim() == x.rank() {
            StabilityVerdict::Stable
        } else {
            StabilityVerdict::Polystable { stabilizer_dim: x.rank() - h.dim() }
        };
    }
    let jh_face = h.face_containing(&origin).expect("0 in the hull");
    StabilityVerdict::SemistableNotPolystable { jh_face }
}

/// max_j ⟨w_j, λ⟩ / ‖λ‖.
pub fn hm_slope(x: &ProjPoint, lambda: &Weight) -> Result<Slope> {
    check_rank(x.rank(), lambda.rank())?;
    if lambda.is_zero() {
        return Err(Error::InvalidInput("one-parameter subgroup must be nonzero".into()));
    }
    let num = x.weights.iter().map(|w| w.dot(lambda)).max().expect("nonempty support");
    Ok(Slope { num, norm_sq: lambda.norm_sq() })
}

/// λ* = −p for p the point of the hull nearest 0, with slope −‖p‖.
pub fn max_destabilizing(x: &ProjPoint) -> Option<(Weight, Slope)> {
    let p = nearest_point(&x.weights);
    if p.is_zero() {
        return None;
    }
    let n = p.norm_sq();
    Some((-&p, Slope { num: -n.clone(), norm_sq: n }))
}

/// The limit point along λ: the argmax coordinates, masses renormalized.
pub fn associated_graded(x: &ProjPoint, lambda: &Weight) -> Result<ProjPoint> {
    let top = hm_slope(x, lambda)?.num;
    let support = x
        .weights
        .iter()
        .zip(&x.masses)
        .filter(|(w, _)| w.dot(lambda) == top)
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect();
    Ok(ProjPoint::new(support)?.normalized())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "cone", rename_all = "snake_case")]
pub enum JhCone {
    Empty,
    Cone { generators: Vec<Weight>, lineality: Vec<Weight> },
}

/// Normal cone of the hull at the face containing 0. The lineality space is
/// spanned by the normals of the hull's affine equations.
pub fn jordan_holder_cone(x: &ProjPoint) -> Result<JhCone> {
    let h = orbit_moment_polytope(x);
    let origin = Weight::zero(x.rank());
    let Some(face) = h.face_containing(&origin) else {
        return Err(Error::Unstable);
    };
    if h.relint_contains(&origin) {
        return Ok(JhCone::Empty);
    }
    let generators = h.faces()[face].facets.iter().map(|&i| -&Weight::from_ints(&h.facets()[i].normal)).collect();
    let lineality = h.equations().iter().map(|e| Weight::from_ints(&e.normal)).collect();
    Ok(JhCone::Cone { generators, lineality })
}

/// Segre product: weights add, masses multiply.
pub fn product(x: &ProjPoint, y: &ProjPoint) -> Result<ProjPoint> {
    check_rank(x.rank(), y.rank())?;
    let mut support = Vec::with_capacity(x.len() * y.len());
    for (w, c) in x.weights.iter().zip(&x.masses) {
        for (v, d) in y.weights.iter().zip(&y.masses) {
            support.push((w + v, c * d));
        }
    }
    ProjPoint::new(support)
}

/// (ψ(ξ), ∇ψ(ξ)) for ψ(ξ) = ½ log Σ c_j e^{−2⟨w_j, ξ⟩}.
pub fn kempf_ness(x: &ProjPoint, xi: &[f64]) -> Result<(f64, Vec<f64>)> {
    check_rank(x.rank(), xi.len())?;
    Ok(descent::FloatPoint::new(x).eval(xi))
}

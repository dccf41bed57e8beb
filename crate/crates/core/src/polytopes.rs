//! Exact rational polytopes.
//!
//! Hulls are computed by double description on the homogenised point
//! configuration inside its affine hull, so lower-dimensional inputs (a Weyl
//! orbit in a trace hyperplane, say) get facets relative to that hull plus a
//! list of defining equations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lie::{weyl_orbit, DominantWeight, Weight};
use crate::linalg::{self, dot, rank, rref, sub};
use crate::rational::{primitive_integer, q, serde_q, Q};

/// The halfspace ⟨x, normal⟩ ≥ offset (or the hyperplane, for equations).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    #[serde(with = "serde_q")]
    pub offset: Q,
}

impl Facet {
    /// ⟨x, normal⟩ − offset; non-negative on the polytope.
    pub fn slack(&self, x: &[Q]) -> Q {
        let s: Q = self.normal.iter().zip(x).map(|(&n, xi)| xi * q(n)).sum();
        s - &self.offset
    }

    pub fn normal_q(&self) -> Vec<Q> {
        self.normal.iter().map(|&n| q(n)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub dim: usize,
    /// Indices into the polytope's vertex list.
    pub vertices: Vec<usize>,
    /// Indices of the facets containing this face.
    pub facets: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polytope {
    ambient: usize,
    dim: usize,
    vertices: Vec<Weight>,
    facets: Vec<Facet>,
    equations: Vec<Facet>,
    #[serde(skip)]
    faces: Vec<Face>,
}

#[derive(Deserialize)]
struct PolytopeInput {
    vertices: Vec<Weight>,
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let input = PolytopeInput::deserialize(d)?;
        hull(&input.vertices).map_err(serde::de::Error::custom)
    }
}

impl Polytope {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn equations(&self) -> &[Facet] {
        &self.equations
    }

    /// All nonempty faces, ordered by dimension then vertex indices.
    /// The last entry is the polytope itself.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn edges(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.dim == 1)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    pub fn contains(&self, x: &Weight) -> bool {
        let c = x.coords();
        self.equations.iter().all(|e| e.slack(c).is_zero()) && self.facets.iter().all(|f| !f.slack(c).is_negative())
    }

    /// Membership in the relative interior.
    pub fn relint_contains(&self, x: &Weight) -> bool {
        let c = x.coords();
        self.equations.iter().all(|e| e.slack(c).is_zero()) && self.facets.iter().all(|f| f.slack(c).is_positive())
    }

    /// The smallest face containing x, if x ∈ P.
    pub fn face_containing(&self, x: &Weight) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        let tight: Vec<usize> =
            (0..self.facets.len()).filter(|&i| self.facets[i].slack(x.coords()).is_zero()).collect();
        self.faces.iter().position(|f| f.facets == tight)
    }

    /// Coordinatewise bounds of the vertex set.
    pub fn bounding_box(&self) -> (Vec<Q>, Vec<Q>) {
        let mut lo = self.vertices[0].coords().to_vec();
        let mut hi = lo.clone();
        for v in &self.vertices[1..] {
            for (i, x) in v.coords().iter().enumerate() {
                if *x < lo[i] {
                    lo[i] = x.clone();
                }
                if *x > hi[i] {
                    hi[i] = x.clone();
                }
            }
        }
        (lo, hi)
    }

    /// Primitive integer directions of the edges leaving vertex `v`.
    pub fn edge_directions_at(&self, v: usize) -> Vec<Vec<i64>> {
        let p = &self.vertices[v];
        self.edges()
            .filter(|e| e.vertices.contains(&v))
            .map(|e| {
                let other = if e.vertices[0] == v { e.vertices[1] } else { e.vertices[0] };
                let d = &self.vertices[other] - p;
                to_i64_vec(&primitive_integer(d.coords()).expect("edge endpoints differ"))
            })
            .collect()
    }
}

fn to_i64_vec(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("primitive vector fits in i64")).collect()
}

/// Local affine coordinates: pivot columns of the reduced direction basis.
struct Frame {
    base: Vec<Q>,
    basis: Vec<Vec<Q>>,
    pivots: Vec<usize>,
}

impl Frame {
    fn new(points: &[Vec<Q>]) -> Frame {
        let base = points[0].clone();
        let n = base.len();
        let diffs: Vec<Vec<Q>> = points[1..].iter().map(|p| sub(p, &base)).collect();
        let (basis, pivots) = rref(&diffs, n);
        Frame { base, basis, pivots }
    }

    fn local(&self, x: &[Q]) -> Vec<Q> {
        self.pivots.iter().map(|&p| &x[p] - &self.base[p]).collect()
    }

    /// Orthogonal projection of a covector onto the direction space,
    /// with the offset adjusted so the halfspace is unchanged on the hull.
    fn canonical(&self, normal: Vec<Q>, offset: Q) -> Facet {
        let n = self.base.len();
        let k = self.basis.len();
        // Solve (B Bᵀ) y = B normal, projection Bᵀ y.
        let gram: Vec<Vec<Q>> = (0..k).map(|i| (0..k).map(|j| dot(&self.basis[i], &self.basis[j])).collect()).collect();
        let rhs: Vec<Q> = self.basis.iter().map(|b| dot(b, &normal)).collect();
        let y = linalg::solve(&gram, &rhs, k).expect("Gram matrix of a basis is invertible");
        let mut proj = vec![Q::zero(); n];
        for (yi, b) in y.iter().zip(&self.basis) {
            for (p, bj) in proj.iter_mut().zip(b) {
                *p += yi * bj;
            }
        }
        let residual = sub(&normal, &proj);
        let offset = offset - dot(&residual, &self.base);
        primitive_facet(&proj, &offset)
    }
}

/// Scales (normal, offset) by a positive factor to make the normal primitive.
fn primitive_facet(normal: &[Q], offset: &Q) -> Facet {
    let ints = primitive_integer(normal).expect("nonzero facet normal");
    // Recover the positive scale factor from any nonzero entry.
    let i = normal.iter().position(|x| !x.is_zero()).unwrap();
    let factor = Q::from_integer(ints[i].clone()) / &normal[i];
    Facet { normal: to_i64_vec(&ints), offset: offset * factor }
}

struct Ray {
    y: Vec<Q>,
    zeros: Vec<bool>,
}

fn normalize_ray(y: Vec<Q>) -> Vec<Q> {
    match primitive_integer(&y) {
        Some(v) => v.into_iter().map(Q::from_integer).collect(),
        None => y,
    }
}

/// Extreme rays of {y : a_i·y ≥ 0} for a full-rank row set (double description).
fn extreme_rays(rows: &[Vec<Q>]) -> Vec<Ray> {
    let m = rows.len();
    let n = rows[0].len();
    // Initial basis of n independent rows.
    let mut basis_rows = Vec::new();
    let mut chosen: Vec<Vec<Q>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        chosen.push(row.clone());
        if rank(&chosen, n) == chosen.len() {
            basis_rows.push(i);
            if basis_rows.len() == n {
                break;
            }
        } else {
            chosen.pop();
        }
    }
    assert_eq!(basis_rows.len(), n, "rows span the ambient space");
    let b: Vec<Vec<Q>> = basis_rows.iter().map(|&i| rows[i].clone()).collect();
    let mut rays: Vec<Ray> = (0..n)
        .map(|j| {
            let mut e = vec![Q::zero(); n];
            e[j] = Q::one();
            let y = linalg::solve(&b, &e, n).expect("basis is invertible");
            let mut zeros = vec![false; m];
            for (jj, &bi) in basis_rows.iter().enumerate() {
                zeros[bi] = jj != j;
            }
            Ray { y: normalize_ray(y), zeros }
        })
        .collect();
    let mut processed: Vec<bool> = vec![false; m];
    for &i in &basis_rows {
        processed[i] = true;
    }
    for i in 0..m {
        if processed[i] {
            continue;
        }
        processed[i] = true;
        let vals: Vec<Q> = rays.iter().map(|r| dot(&rows[i], &r.y)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&j| vals[j].is_negative()).collect();
        if neg.is_empty() {
            for (j, r) in rays.iter_mut().enumerate() {
                if vals[j].is_zero() {
                    r.zeros[i] = true;
                }
            }
            continue;
        }
        let mut next = Vec::new();
        for &p in &pos {
            for &ng in &neg {
                let common: Vec<bool> = (0..m).map(|t| rays[p].zeros[t] && rays[ng].zeros[t]).collect();
                let count = common.iter().filter(|&&c| c).count();
                if count + 2 < n {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, r)| t == p || t == ng || !(0..m).all(|s| !common[s] || r.zeros[s]));
                if !adjacent {
                    continue;
                }
                let y: Vec<Q> =
                    rays[ng].y.iter().zip(&rays[p].y).map(|(yn, yp)| &vals[p] * yn - &vals[ng] * yp).collect();
                let mut zeros = common;
                zeros[i] = true;
                next.push(Ray { y: normalize_ray(y), zeros });
            }
        }
        for (j, mut r) in rays.into_iter().enumerate() {
            if vals[j].is_negative() {
                continue;
            }
            if vals[j].is_zero() {
                r.zeros[i] = true;
            }
            next.push(r);
        }
        rays = next;
    }
    rays
}

/// Convex hull with minimal vertex list and facet inequalities.
pub fn hull(points: &[Weight]) -> Result<Polytope> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidInput("hull of an empty point set".into()));
    };
    let ambient = first.rank();
    if points.iter().any(|p| p.rank() != ambient) {
        return Err(Error::RankMismatch { expected: ambient, found: 0 });
    }
    let pts: Vec<Vec<Q>> =
        points.iter().cloned().collect::<BTreeSet<_>>().into_iter().map(Weight::into_coords).collect();
    let frame = Frame::new(&pts);
    let dim = frame.basis.len();

    // Equations cut out the affine hull.
    let mut equations: Vec<Facet> = linalg::nullspace(&frame.basis, ambient)
        .into_iter()
        .map(|n| {
            let off = dot(&n, &frame.base);
            primitive_facet(&n, &off)
        })
        .collect();
    for e in equations.iter_mut() {
        // Sign-normalise so the first nonzero entry is positive.
        if e.normal.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            e.normal.iter_mut().for_each(|x| *x = -*x);
            e.offset = -e.offset.clone();
        }
    }
    equations.sort();

    if dim == 0 {
        let v = Weight::new(pts[0].clone());
        return Ok(Polytope {
            ambient,
            dim,
            vertices: vec![v],
            facets: vec![],
            equations,
            faces: vec![Face { dim: 0, vertices: vec![0], facets: vec![] }],
        });
    }

    let rows: Vec<Vec<Q>> = pts
        .iter()
        .map(|p| {
            let mut r = vec![Q::one()];
            r.extend(frame.local(p));
            r
        })
        .collect();
    let rays = extreme_rays(&rows);

    // Vertices: points whose tight rays have rank dim.
    let mut vertex_pts: Vec<usize> = (0..pts.len())
        .filter(|&i| {
            let tight: Vec<Vec<Q>> = rays.iter().filter(|r| r.zeros[i]).map(|r| r.y.clone()).collect();
            rank(&tight, dim + 1) == dim
        })
        .collect();
    vertex_pts.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    let vertices: Vec<Weight> = vertex_pts.iter().map(|&i| Weight::new(pts[i].clone())).collect();

    let mut facets: Vec<(Facet, Vec<usize>)> = rays
        .iter()
        .map(|r| {
            // y0 + Σ y_j (x − base)[piv_j] ≥ 0
            let mut normal = vec![Q::zero(); ambient];
            for (j, &p) in frame.pivots.iter().enumerate() {
                normal[p] = r.y[j + 1].clone();
            }
            let offset = dot(&normal, &frame.base) - &r.y[0];
            let f = frame.canonical(normal, offset);
            let on: Vec<usize> = (0..vertices.len()).filter(|&v| f.slack(vertices[v].coords()).is_zero()).collect();
            (f, on)
        })
        .collect();
    facets.sort();
    let faces = face_lattice(&vertices, &facets);
    Ok(Polytope { ambient, dim, vertices, facets: facets.into_iter().map(|(f, _)| f).collect(), equations, faces })
}

fn face_lattice(vertices: &[Weight], facets: &[(Facet, Vec<usize>)]) -> Vec<Face> {
    let all: Vec<usize> = (0..vertices.len()).collect();
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    sets.insert(all);
    let mut frontier: Vec<Vec<usize>> = facets.iter().map(|(_, s)| s.clone()).collect();
    while let Some(s) = frontier.pop() {
        if s.is_empty() || !sets.insert(s.clone()) {
            continue;
        }
        for (_, f) in facets {
            let inter: Vec<usize> = s.iter().copied().filter(|v| f.contains(v)).collect();
            if !inter.is_empty() && !sets.contains(&inter) {
                frontier.push(inter);
            }
        }
    }
    let mut faces: Vec<Face> = sets
        .into_iter()
        .map(|vs| {
            let pts: Vec<Vec<Q>> = vs.iter().map(|&v| vertices[v].coords().to_vec()).collect();
            let dim = linalg::affine_span(&pts).1.len();
            let fs = (0..facets.len()).filter(|&i| vs.iter().all(|v| facets[i].1.contains(v))).collect();
            Face { dim, vertices: vs, facets: fs }
        })
        .collect();
    faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
    faces
}

/// hull(W·λ).
pub fn kostant_polytope(lambda: &DominantWeight) -> Result<Polytope> {
    hull(&weyl_orbit(lambda.weight(), lambda.rank())?)
}

fn ceil_i64(x: &Q) -> Result<i64> {
    x.ceil().to_integer().to_i64().ok_or_else(|| Error::OutOfRange("coordinate overflow".into()))
}

fn floor_i64(x: &Q) -> Result<i64> {
    x.floor().to_integer().to_i64().ok_or_else(|| Error::OutOfRange("coordinate overflow".into()))
}

/// Integer points of P.
pub fn lattice_points(p: &Polytope) -> Result<Vec<Vec<i64>>> {
    lattice_points_coset(p, &vec![0; p.ambient], 1)
}

/// Points of P in the coset shift + step·Z^r, in lexicographic order.
pub fn lattice_points_coset(p: &Polytope, shift: &[i64], step: i64) -> Result<Vec<Vec<i64>>> {
    if step <= 0 {
        return Err(Error::InvalidInput("lattice step must be positive".into()));
    }
    let (lo, hi) = p.bounding_box();
    let mut ranges = Vec::with_capacity(p.ambient);
    for i in 0..p.ambient {
        // smallest k with shift + step·k ≥ lo
        let kl = ceil_i64(&((&lo[i] - q(shift[i])) / q(step)))?;
        let kh = floor_i64(&((&hi[i] - q(shift[i])) / q(step)))?;
        if kh - kl > 100 {
            return Err(Error::OutOfRange(format!("box width {} in coordinate {i}", kh - kl)));
        }
        ranges.push((kl, kh));
    }
    let mut out = Vec::new();
    if ranges.iter().any(|(a, b)| a > b) {
        return Ok(out);
    }
    let mut k: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        let x: Vec<i64> = (0..p.ambient).map(|i| shift[i] + step * k[i]).collect();
        if p.contains(&Weight::from_ints(&x)) {
            out.push(x);
        }
        let mut i = p.ambient;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if k[i] < ranges[i].1 {
                k[i] += 1;
                break;
            }
            k[i] = ranges[i].0;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DelzantReport {
    pub delzant: bool,
    pub failing_vertex: Option<Weight>,
}

/// Checks that every vertex cone is generated by a lattice basis.
pub fn is_delzant(p: &Polytope) -> Result<DelzantReport> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: p.dim, ambient: p.ambient });
    }
    if p.vertices.iter().any(|v| !v.is_integral()) {
        return Err(Error::InvalidInput("vertices must be integral".into()));
    }
    for (i, v) in p.vertices.iter().enumerate() {
        let dirs = p.edge_directions_at(i);
        let ok = dirs.len() == p.dim && {
            let m: Vec<Vec<Q>> = dirs.iter().map(|d| d.iter().map(|&x| q(x)).collect()).collect();
            linalg::det(&m).abs().is_one()
        };
        if !ok {
            return Ok(DelzantReport { delzant: false, failing_vertex: Some(v.clone()) });
        }
    }
    Ok(DelzantReport { delzant: true, failing_vertex: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "polytope", rename_all = "snake_case")]
pub enum CutOutcome {
    Cut(Polytope),
    /// The halfspace already contains P.
    Unchanged,
    Empty,
}

/// P ∩ {⟨x, v⟩ ≥ level}.
pub fn symplectic_cut(p: &Polytope, v: &Weight, level: &Q) -> Result<CutOutcome> {
    v.check_rank(p.ambient)?;
    if v.is_zero() {
        return Err(Error::InvalidInput("cut normal is zero".into()));
    }
    let vals: Vec<Q> = p.vertices.iter().map(|x| x.dot(v) - level).collect();
    if vals.iter().all(|s| !s.is_negative()) {
        return Ok(CutOutcome::Unchanged);
    }
    if vals.iter().all(|s| s.is_negative()) {
        return Ok(CutOutcome::Empty);
    }
    let mut pts: Vec<Weight> =
        p.vertices.iter().zip(&vals).filter(|(_, s)| !s.is_negative()).map(|(x, _)| x.clone()).collect();
    for e in p.edges() {
        let (a, b) = (e.vertices[0], e.vertices[1]);
        if vals[a].is_positive() && vals[b].is_negative() || vals[a].is_negative() && vals[b].is_positive() {
            let t = &vals[a] / (&vals[a] - &vals[b]);
            let d = &p.vertices[b] - &p.vertices[a];
            pts.push(&p.vertices[a] + &d.scale(&t));
        }
    }
    Ok(CutOutcome::Cut(hull(&pts)?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalCone {
    pub face: usize,
    pub face_vertices: Vec<Weight>,
    /// Outward normals of the facets containing the face.
    pub generators: Vec<Vec<i64>>,
}

/// Outward normal cone of every face, vertices first.
pub fn normal_fan(p: &Polytope) -> Result<Vec<NormalCone>> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: p.dim, ambient: p.ambient });
    }
    Ok(p.faces
        .iter()
        .enumerate()
        .map(|(i, f)| NormalCone {
            face: i,
            face_vertices: f.vertices.iter().map(|&v| p.vertices[v].clone()).collect(),
            generators: f.facets.iter().map(|&j| p.facets[j].normal.iter().map(|x| -x).collect()).collect(),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SampleOutcome {
    Agree {
        value: i64,
    },
    Disagree {
        alternating_sum: i64,
        indicator: i64,
    },
    /// The sample lies on a facet hyperplane; draw another.
    Resample,
}

/// Σ_F (−1)^{dim F} [x ∈ T_F] against [x ∈ P], T_F the tangent cone at F.
pub fn brianchon_gram_at(p: &Polytope, x: &Weight) -> Result<SampleOutcome> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: p.dim, ambient: p.ambient });
    }
    x.check_rank(p.ambient)?;
    let slack: Vec<Q> = p.facets.iter().map(|f| f.slack(x.coords())).collect();
    if slack.iter().any(Zero::is_zero) {
        return Ok(SampleOutcome::Resample);
    }
    let sum: i64 = p
        .faces
        .iter()
        .filter(|f| f.facets.iter().all(|&j| slack[j].is_positive()))
        .map(|f| if f.dim % 2 == 0 { 1 } else { -1 })
        .sum();
    let indicator = i64::from(p.contains(x));
    Ok(if sum == indicator {
        SampleOutcome::Agree { value: sum }
    } else {
        SampleOutcome::Disagree { alternating_sum: sum, indicator }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrianchonGramReport {
    pub pass: bool,
    pub checked: usize,
    pub resampled: usize,
    pub first_failure: Option<Weight>,
}

pub fn brianchon_gram_check(p: &Polytope, samples: &[Weight]) -> Result<BrianchonGramReport> {
    let mut report = BrianchonGramReport { pass: true, checked: 0, resampled: 0, first_failure: None };
    for x in samples {
        match brianchon_gram_at(p, x)? {
            SampleOutcome::Resample => report.resampled += 1,
            SampleOutcome::Agree { .. } => report.checked += 1,
            SampleOutcome::Disagree { .. } => {
                report.checked += 1;
                if report.pass {
                    report.pass = false;
                    report.first_failure = Some(x.clone());
                }
            }
        }
    }
    Ok(report)
}

/// Unimodular integer matrix acting on a polytope's vertices.
pub fn transform(p: &Polytope, m: &[Vec<i64>]) -> Result<Polytope> {
    let pts: Vec<Weight> = p
        .vertices
        .iter()
        .map(|v| Weight::new(m.iter().map(|row| row.iter().zip(v.coords()).map(|(&a, x)| x * q(a)).sum()).collect()))
        .collect();
    hull(&pts)
}

/// gcd of an integer vector.
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use gitkit_core::characters::{
    bwb_su2, invariant_dim_su2, su2_character, weyl_character, weyl_dimension, CharacterCache, Cohomology,
};
use gitkit_core::horn::{
    check_triple, generate_horn_system, polygon_nonempty, sample_hermitian_validate, HornMode, Spectrum,
};
use gitkit_core::lie::weyl_orbit;
use gitkit_core::localization::{
    blowup_chi, blowup_literal, blowup_literal_value, default_box, lattice_sum, p1_kn_identity, p1_line_bundle,
    p2_series, vertex_sum, BoxBounds,
};
use gitkit_core::polytopes::{
    hull, is_delzant, kostant_polytope, lattice_points, symplectic_cut, CutOutcome, Polytope,
};
use gitkit_core::puzzles::{
    count_puzzles, list_puzzles, lr_coefficient_oracle, subset_to_partition, subsets, BoundaryTriple,
};
use gitkit_core::rational::{q, qf};
use gitkit_core::torus_git::{
    classify_stability, critical_types, kempf_ness, max_destabilizing, minimize_kempf_ness, Descent, DescentConfig,
    ProjPoint, StabilityVerdict,
};
use gitkit_core::{DominantWeight, LaurentPoly, Weight, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn c01_puzzle_oracle() -> Outcome {
    let start = Instant::now();
    let mut cache = CharacterCache::new();
    let mut checked = 0usize;
    for r in 1..=5 {
        for s in 0..=r {
            let subs = subsets(r, s);
            for i in &subs {
                for j in &subs {
                    for k in &subs {
                        let b = BoundaryTriple::new(i.clone(), j.clone(), k.clone());
                        let n = count_puzzles(r, &b).map_err(|e| e.to_string())?;
                        let c = lr_coefficient_oracle(
                            &mut cache,
                            &subset_to_partition(r, i),
                            &subset_to_partition(r, j),
                            &subset_to_partition(r, k),
                        )
                        .map_err(|e| e.to_string())?;
                        ensure(n == c, || format!("r={r} {b:?}: puzzles {n}, characters {c}"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{checked} triples, 0 mismatches, {:.1}s", t.as_secs_f64()))
}

fn c02_puzzle_example() -> Outcome {
    let b = BoundaryTriple::new(vec![2, 4], vec![2, 4], vec![2, 3]);
    let n = count_puzzles(4, &b).map_err(|e| e.to_string())?;
    ensure(n >= 1, || "no puzzle".into())?;
    let all = list_puzzles(4, &b).map_err(|e| e.to_string())?;
    ensure(all.len() as u64 == n, || "listing disagrees with count".into())?;
    for f in &all {
        ensure(f.is_legal(), || "illegal filling listed".into())?;
        ensure(f.boundary() == b, || "boundary mismatch".into())?;
    }
    Ok(format!("{n} puzzle(s), all legal"))
}

fn c03_horn_sampling() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for r in 2..=4 {
        let rep = sample_hermitian_validate(r, 1000, 42).map_err(|e| e.to_string())?;
        ensure(rep.violations == 0, || format!("r={r}: {} violations", rep.violations))?;
        notes.push(format!("r={r}: {} ineqs, worst {:.1e}", rep.inequalities, rep.max_slack_error));
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{}; {:.1}s", notes.join(", "), t.as_secs_f64()))
}

fn dominant_triples(r: usize, max: i64) -> Vec<Vec<i64>> {
    fn go(r: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(max);
        for x in 0..=top {
            cur.push(x);
            go(r, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, max, &mut Vec::new(), &mut out);
    out
}

fn c04_horn_saturation() -> Outcome {
    let sys = generate_horn_system(3, HornMode::AllPositive).map_err(|e| e.to_string())?;
    let doms = dominant_triples(3, 4);
    let mut cache = CharacterCache::new();
    let mut checked = 0;
    let mut positive = 0;
    for a in &doms {
        for b in &doms {
            let lr = cache.tensor(a, b).map_err(|e| e.to_string())?;
            for c in &doms {
                if c.iter().sum::<i64>() != a.iter().sum::<i64>() + b.iter().sum::<i64>() {
                    continue;
                }
                let spec = |v: &[i64]| Spectrum::from_ints(v).expect("dominant");
                let horn = check_triple(&spec(a), &spec(b), &spec(c), &sys).map_err(|e| e.to_string())?.feasible;
                let m = lr.get(c).copied().unwrap_or(0);
                ensure(horn == (m > 0), || format!("{a:?} {b:?} {c:?}: horn {horn}, multiplicity {m}"))?;
                checked += 1;
                positive += usize::from(m > 0);
            }
        }
    }
    Ok(format!("{checked} trace-matched triples ({positive} with c > 0), 0 mismatches"))
}

fn c05_polygons() -> Outcome {
    let grid: Vec<Q> = (1..=6).map(|k| qf(k, 2)).collect();
    let mut checked = 0;
    for n in 1..=5usize {
        let mut idx = vec![0usize; n];
        loop {
            let lens: Vec<Q> = idx.iter().map(|&i| grid[i].clone()).collect();
            let poly = polygon_nonempty(&lens).map_err(|e| e.to_string())?;
            let once = invariant_dim_su2(&lens).map_err(|e| e.to_string())?;
            let doubled: Vec<Q> = lens.iter().map(|x| x * q(2)).collect();
            let twice = invariant_dim_su2(&doubled).map_err(|e| e.to_string())?;
            ensure(poly == (once > 0 || twice > 0), || format!("{lens:?}: polygon {poly}, inv {once}/{twice}"))?;
            checked += 1;
            // next non-decreasing index tuple
            let Some(p) = (0..n).rev().find(|&p| idx[p] + 1 < grid.len()) else { break };
            let v = idx[p] + 1;
            for x in &mut idx[p..] {
                *x = v;
            }
        }
    }
    Ok(format!("{checked} length multisets, 0 mismatches"))
}

fn c06_p2_lists() -> Outcome {
    // z0, z1, z2 carry weights 1, 0, −1
    let ws = [1i64, 0, -1];
    let mut lines = Vec::new();
    for mask in 1u32..8 {
        let support: Vec<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
        let x = ProjPoint::uniform(&support.iter().map(|&i| Weight::from_ints(&[ws[i]])).collect::<Vec<_>>())
            .map_err(|e| e.to_string())?;
        let v = classify_stability(&x);
        let has = |i| support.contains(&i);
        let semistable = !(support == [0] || support == [2]);
        let stable = has(0) && has(2);
        let polystable = stable || support == [1];
        ensure(v.is_semistable() == semistable, || format!("{support:?}: {v:?}"))?;
        ensure(v.is_polystable() == polystable, || format!("{support:?}: {v:?}"))?;
        let is_stable = matches!(v, StabilityVerdict::Stable);
        ensure(is_stable == stable, || format!("{support:?}: {v:?}"))?;
        lines.push(format!("{support:?}"));
    }
    Ok(format!("7 support classes: {}", lines.join(" ")))
}

fn wq(a: (i64, i64), b: (i64, i64)) -> Weight {
    Weight::new(vec![qf(a.0, a.1), qf(b.0, b.1)])
}

fn c07_kirwan_types() -> Outcome {
    let ws = [wq((-1, 4), (-1, 4)), wq((3, 4), (-1, 4)), wq((-1, 4), (3, 4))];
    let got = critical_types(&ws);
    let want: BTreeSet<Weight> = [
        wq((0, 1), (0, 1)),
        wq((-1, 4), (0, 1)),
        wq((0, 1), (-1, 4)),
        wq((1, 4), (1, 4)),
        wq((-1, 4), (-1, 4)),
        wq((-1, 4), (3, 4)),
        wq((3, 4), (-1, 4)),
    ]
    .into_iter()
    .collect();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("7 types, exact".into())
}

fn random_point(rng: &mut ChaCha8Rng) -> ProjPoint {
    let r = rng.random_range(1..=3);
    let n = rng.random_range(1..=8);
    let support = (0..n)
        .map(|_| {
            let w = Weight::new((0..r).map(|_| qf(rng.random_range(-48..=48), 16)).collect());
            (w, qf(rng.random_range(1..=64), 16))
        })
        .collect();
    ProjPoint::new(support).expect("valid point")
}

fn c08_descent() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = DescentConfig { tol: 1e-7, ..DescentConfig::default() };
    let (mut conv, mut esc) = (0, 0);
    let (mut worst_angle, mut worst_slope) = (0f64, 0f64);
    for t in 0..100 {
        let x = random_point(&mut rng);
        let semistable = classify_stability(&x).is_semistable();
        let d = minimize_kempf_ness(&x, &cfg).map_err(|e| format!("point {t}: {e}"))?;
        match (semistable, d) {
            (true, Descent::Converged { residual, iterations, .. }) => {
                ensure(residual < 1e-6 && iterations <= 100_000, || format!("point {t}: residual {residual}"))?;
                conv += 1;
            }
            (false, Descent::Escaped { direction, slope, .. }) => {
                let (l, s) = max_destabilizing(&x).expect("unstable");
                let lf = l.to_f64();
                let ln = lf.iter().map(|v| v * v).sum::<f64>().sqrt();
                let cos: f64 = direction.iter().zip(&lf).map(|(a, b)| a * b).sum::<f64>() / ln;
                let angle = cos.clamp(-1.0, 1.0).acos();
                let err = (slope - s.value()).abs();
                worst_angle = worst_angle.max(angle);
                worst_slope = worst_slope.max(err);
                ensure(angle < 1e-3, || format!("point {t}: angle {angle}"))?;
                ensure(err < 1e-4, || format!("point {t}: slope {slope} vs {}", s.value()))?;
                esc += 1;
            }
            (ss, d) => return Err(format!("point {t}: semistable={ss} but {d:?}")),
        }
    }
    Ok(format!("{conv} converged, {esc} escaped; worst angle {worst_angle:.1e}, worst slope error {worst_slope:.1e}"))
}

fn c09_kn_analytics() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = 0f64;
    for _ in 0..100 {
        let x = random_point(&mut rng);
        let r = x.rank();
        let xi: Vec<f64> = (0..r).map(|_| rng.random_range(-2.0..2.0)).collect();
        let (_, g) = kempf_ness(&x, &xi).map_err(|e| e.to_string())?;
        let h = 1e-5;
        let mut err = 0f64;
        for i in 0..r {
            let mut a = xi.clone();
            let mut b = xi.clone();
            a[i] += h;
            b[i] -= h;
            let fd = (kempf_ness(&x, &a).unwrap().0 - kempf_ness(&x, &b).unwrap().0) / (2.0 * h);
            err = err.max((fd - g[i]).abs());
        }
        let gn = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        let rel = err / gn.max(1.0);
        worst = worst.max(rel);
        ensure(rel < 1e-6, || format!("gradient error {rel}"))?;
    }
    let mut worst_gap = f64::NEG_INFINITY;
    for _ in 0..1000 {
        let x = random_point(&mut rng);
        let r = x.rank();
        let mut v = || (0..r).map(|_| rng.random_range(-3.0..3.0)).collect::<Vec<f64>>();
        let (a, b) = (v(), v());
        let t: f64 = rng.random_range(0.0..1.0);
        let mid: Vec<f64> = a.iter().zip(&b).map(|(p, q)| t * p + (1.0 - t) * q).collect();
        let f = |p: &[f64]| kempf_ness(&x, p).unwrap().0;
        let gap = f(&mid) - (t * f(&a) + (1.0 - t) * f(&b));
        worst_gap = worst_gap.max(gap);
        ensure(gap <= 1e-12, || format!("convexity gap {gap}"))?;
    }
    Ok(format!("gradient rel error ≤ {worst:.1e}; convexity gap ≤ {worst_gap:.1e}"))
}

fn c10_kostant() -> Outcome {
    let mut checked = 0;
    for r in 1..=4 {
        for l in dominant_triples(r, 5) {
            let dw = DominantWeight::from_ints(&l).map_err(|e| e.to_string())?;
            let p = kostant_polytope(&dw).map_err(|e| e.to_string())?;
            let orbit: BTreeSet<Weight> = weyl_orbit(dw.weight(), r).map_err(|e| e.to_string())?.into_iter().collect();
            let verts: BTreeSet<Weight> = p.vertices().iter().cloned().collect();
            ensure(orbit == verts, || format!("{l:?}: vertices {verts:?}"))?;
            let ch = weyl_character(&dw).map_err(|e| e.to_string())?;
            let total: i64 = l.iter().sum();
            for mu in ch.support() {
                let w = Weight::from_ints(mu);
                ensure(p.contains(&w), || format!("{l:?}: {mu:?} outside polytope"))?;
                ensure(mu.iter().sum::<i64>() == total, || format!("{l:?}: {mu:?} off the root coset"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} highest weights"))
}

fn c11_weyl_dimension() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let r = rng.random_range(1..=4);
        let mut l: Vec<i64> = (0..r).map(|_| rng.random_range(-3..=6)).collect();
        l.sort_by(|a, b| b.cmp(a));
        let dw = DominantWeight::from_ints(&l).map_err(|e| e.to_string())?;
        let ch = weyl_character(&dw).map_err(|e| e.to_string())?;
        let dim = weyl_dimension(&dw).map_err(|e| e.to_string())?;
        ensure(num_bigint::BigInt::from(ch.coefficient_sum()) == dim, || {
            format!("{l:?}: {} vs {dim}", ch.coefficient_sum())
        })?;
    }
    Ok("50 random highest weights".into())
}

fn poly(pts: &[Vec<i64>]) -> Polytope {
    hull(&pts.iter().map(|p| Weight::from_ints(p)).collect::<Vec<_>>()).expect("nonempty")
}

/// Chops a corner off a Delzant polygon, keeping it Delzant.
fn chop(p: &Polytope, rng: &mut ChaCha8Rng) -> Option<Polytope> {
    let i = rng.random_range(0..p.vertices().len());
    let v = p.vertices()[i].to_ints()?;
    let dirs = p.edge_directions_at(i);
    let verts: Vec<Vec<i64>> = p.vertices().iter().map(|w| w.to_ints().expect("integral")).collect();
    let length = |e: &[i64]| {
        verts
            .iter()
            .filter_map(|u| {
                let d = [u[0] - v[0], u[1] - v[1]];
                let k = if e[0] != 0 { d[0] / e[0] } else { d[1] / e[1] };
                (k > 0 && d[0] == k * e[0] && d[1] == k * e[1]).then_some(k)
            })
            .min()
    };
    if dirs.iter().any(|e| length(e).unwrap_or(0) < 2) {
        return None;
    }
    let mut pts: Vec<Vec<i64>> = verts.iter().filter(|u| **u != v).cloned().collect();
    for e in &dirs {
        pts.push(vec![v[0] + e[0], v[1] + e[1]]);
    }
    Some(poly(&pts))
}

fn random_delzant(rng: &mut ChaCha8Rng) -> Polytope {
    loop {
        let mut p = if rng.random_bool(0.5) {
            let d = rng.random_range(1..=6);
            poly(&[vec![0, 0], vec![d, 0], vec![0, d]])
        } else {
            let (a, b) = (rng.random_range(1..=6), rng.random_range(1..=6));
            poly(&[vec![0, 0], vec![a, 0], vec![a, b], vec![0, b]])
        };
        for _ in 0..rng.random_range(0..=2) {
            if let Some(c) = chop(&p, rng) {
                p = c;
            }
        }
        let s = rng.random_range(-1..=1);
        let shift = [rng.random_range(-2..=2), rng.random_range(-2..=2)];
        let pts: Vec<Vec<i64>> = p
            .vertices()
            .iter()
            .map(|w| {
                let x = w.to_ints().expect("integral");
                vec![x[0] + s * x[1] + shift[0], x[1] + shift[1]]
            })
            .collect();
        if pts.iter().flatten().any(|c| c.abs() > 8) || pts.len() > 6 {
            continue;
        }
        let p = poly(&pts);
        if is_delzant(&p).map(|r| r.delzant).unwrap_or(false) {
            return p;
        }
    }
}

fn random_zeta(rng: &mut ChaCha8Rng) -> Vec<Q> {
    (0..2)
        .map(|_| loop {
            let z = qf(rng.random_range(-9..=9), rng.random_range(1..=5));
            if z != q(0) && z != q(1) && z != q(-1) {
                break z;
            }
        })
        .collect()
}

fn c12_toric_localization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut evals = 0;
    for _ in 0..20 {
        let p = random_delzant(&mut rng);
        let s = vertex_sum(&p).map_err(|e| e.to_string())?;
        let pts = lattice_points(&p).map_err(|e| e.to_string())?;
        let mut done = 0;
        while done < 5 {
            let z = random_zeta(&mut rng);
            let Ok(v) = s.evaluate(&z) else { continue };
            let want = lattice_sum(&pts, &z).map_err(|e| e.to_string())?;
            ensure(v == want, || format!("{:?} at {z:?}", p.vertices()))?;
            done += 1;
            evals += 1;
        }
        let e = s.expand_in_box(&default_box(&p, &s)).map_err(|e| e.to_string())?;
        let want = LaurentPoly::from_terms(2, pts.iter().map(|x| (x.clone(), 1)));
        ensure(e == want, || format!("expansion of {:?}", p.vertices()))?;
    }
    for d in 1..=5 {
        let simplex = poly(&[vec![0, 0], vec![d, 0], vec![0, d]]);
        let s = vertex_sum(&simplex).map_err(|e| e.to_string())?;
        ensure(s.rational_eq(&p2_series(d)), || format!("P2 closed form, d={d}"))?;
        let mut got: Vec<_> = s.terms().iter().map(|t| (t.num.clone(), sorted(&t.den))).collect();
        let mut want: Vec<_> = p2_series(d).terms().iter().map(|t| (t.num.clone(), sorted(&t.den))).collect();
        got.sort_by_key(|x| format!("{x:?}"));
        want.sort_by_key(|x| format!("{x:?}"));
        ensure(got == want, || format!("P2 terms, d={d}"))?;
    }
    Ok(format!("20 Delzant polygons, {evals} evaluations; P2 closed form d=1..5"))
}

fn sorted(v: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut v = v.to_vec();
    v.sort();
    v
}

fn c13_cut() -> Outcome {
    let p = poly(&[vec![0, 0], vec![2, 0], vec![0, 2]]);
    let CutOutcome::Cut(c) = symplectic_cut(&p, &Weight::from_ints(&[-1, 0]), &q(-1)).map_err(|e| e.to_string())?
    else {
        return Err("cut did not intersect".into());
    };
    let want = poly(&[vec![0, 0], vec![0, 2], vec![1, 0], vec![1, 1]]);
    let got: BTreeSet<Weight> = c.vertices().iter().cloned().collect();
    let want: BTreeSet<Weight> = want.vertices().iter().cloned().collect();
    ensure(got == want, || format!("{got:?}"))?;
    Ok("hull{(0,0),(0,2),(1,0),(1,1)}".into())
}

fn c14_p1() -> Outcome {
    for d in 0..=10 {
        let rep = p1_kn_identity(d, None).map_err(|e| e.to_string())?;
        ensure(rep.pass, || format!("d={d}: {} vs {}", rep.lhs, rep.rhs))?;
    }
    Ok("d = 0..=10".into())
}

fn c15_blowup() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for (d, e) in [(3, 1), (5, 2), (4, 3)] {
        let lit = blowup_literal(d, e).map_err(|e| e.to_string())?;
        let mut done = 0;
        while done < 5 {
            let z = random_zeta(&mut rng);
            let (Ok(a), Ok(b)) = (lit.evaluate(&z), blowup_literal_value(d, e, &z[0], &z[1])) else {
                continue;
            };
            ensure(a == b, || format!("({d},{e}) at {z:?}"))?;
            done += 1;
        }
    }
    let mut notes = Vec::new();
    for (d, e) in [(3, 1), (5, 2), (3, -2), (4, -1)] {
        let rep = blowup_chi(d, e).map_err(|e| e.to_string())?;
        ensure(rep.disjoint && rep.multiplicity_free, || format!("({d},{e}) split overlaps"))?;
        let big = (d + 1) * (d + 2) / 2;
        let k = e.abs();
        let small = k * (k + 1) / 2;
        let (h0, h1) = if e >= 0 { (big - small, 0) } else { (big, small - k) };
        ensure(rep.h0.len() as i64 == h0 && rep.h1.len() as i64 == h1, || {
            format!("({d},{e}): |H0|={} |H1|={}", rep.h0.len(), rep.h1.len())
        })?;
        notes.push(format!("({d},{e}) chi={}", rep.chi));
    }
    Ok(format!("literal formula at 15 points; {}", notes.join(", ")))
}

fn c16_bwb() -> Outcome {
    for d in 0..=10 {
        ensure(bwb_su2(d) == Some((0, d)), || format!("O({d}): {:?}", bwb_su2(d)))?;
    }
    ensure(bwb_su2(-1).is_none(), || "O(-1) should vanish".into())?;
    let singular = gitkit_core::characters::bwb_cohomology(&Weight::from_ints(&[0, 1])).map_err(|e| e.to_string())?;
    ensure(singular == Cohomology::Zero, || "(0,1) should vanish".into())?;
    for n in 2..=10 {
        ensure(bwb_su2(-n) == Some((1, n - 2)), || format!("O(-{n}): {:?}", bwb_su2(-n)))?;
        let series = p1_line_bundle(-n);
        let e = series.expand_in_box(&BoxBounds::cube(1, -n - 2, n + 2).unwrap()).map_err(|e| e.to_string())?;
        let want = su2_character(n - 2).map_err(|e| e.to_string())?.scale(-1);
        ensure(e == want, || format!("chi(O(-{n})) = {e}"))?;
        ensure(series.rational_eq(&p1_line_bundle(n - 2).negate()), || format!("duality n={n}"))?;
    }
    Ok("H0 = V_d (d ≤ 10), O(-1) acyclic, H1 duality n = 2..=10".into())
}

fn c17_interlacing() -> Outcome {
    let mut cache = CharacterCache::new();
    let mut checked = 0;
    for l2 in -1..=2 {
        for gap in 0..=4 {
            let l1 = l2 + gap;
            for k in 0..=5 {
                let m = cache.tensor(&[l1, l2], &[k, 0]).map_err(|e| e.to_string())?;
                let mut want = BTreeSet::new();
                for m2 in l2..=l1 {
                    let m1 = l1 + l2 + k - m2;
                    if m1 >= l1 {
                        want.insert(vec![m1, m2]);
                    }
                }
                let got: BTreeSet<Vec<i64>> = m.keys().cloned().collect();
                ensure(m.values().all(|&c| c == 1), || format!("{l1},{l2} k={k}: multiplicities {m:?}"))?;
                ensure(got == want, || format!("{l1},{l2} k={k}: {got:?}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} products"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 17] = [
        ("puzzle counts match LR coefficients, r <= 5", c01_puzzle_oracle),
        ("worked puzzle example", c02_puzzle_example),
        ("Horn inequalities hold on random Hermitian sums", c03_horn_sampling),
        ("Horn feasibility matches LR positivity, r = 3", c04_horn_saturation),
        ("polygon inequalities match SU(2) invariants", c05_polygons),
        ("P2 stability partition", c06_p2_lists),
        ("Kirwan critical types", c07_kirwan_types),
        ("descent agrees with nearest-point projection", c08_descent),
        ("Kempf-Ness gradient and convexity", c09_kn_analytics),
        ("Kostant polytope contains character support", c10_kostant),
        ("character dimension matches product formula", c11_weyl_dimension),
        ("toric vertex sums count lattice points", c12_toric_localization),
        ("symplectic cut of the 2-simplex", c13_cut),
        ("P1 stratum identity", c14_p1),
        ("blow-up series", c15_blowup),
        ("Borel-Weil-Bott for SU(2)", c16_bwb),
        ("GL(2) interlacing", c17_interlacing),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("[PASS] {:02} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:02} {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

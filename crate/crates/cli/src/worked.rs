//! Pinned worked examples replayed by `gitkit paper-examples`.

use std::time::Instant;

use gitkit_core::characters::*;
use gitkit_core::horn::*;
use gitkit_core::lie::DominantWeight;
use gitkit_core::localization::*;
use gitkit_core::polytopes::*;
use gitkit_core::puzzles::*;
use gitkit_core::rational::{q, qf};
use gitkit_core::torus_git::*;
use gitkit_core::{LaurentPoly, Weight};
use serde_json::{json, Value};

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn w(c: &[i64]) -> Weight {
    Weight::from_ints(c)
}

fn ws(ps: &[&[i64]]) -> Vec<Weight> {
    ps.iter().map(|p| w(p)).collect()
}

fn su2_weights() -> Result<String, String> {
    for d in 0..=8 {
        let want = LaurentPoly::from_terms(1, (0..=d).map(|k| (vec![d - 2 * k], 1)));
        ensure(su2_character(d).map_err(err)? == want, || format!("d = {d}"))?;
    }
    Ok("weights d, d-2, ..., -d for d <= 8".into())
}

fn su2_triple_invariants() -> Result<String, String> {
    let h = qf(1, 2);
    let n = invariant_dim_su2(&[h.clone(), h.clone(), h]).map_err(err)?;
    ensure(n == 0, || format!("got {n}"))?;
    Ok("(1/2,1/2,1/2) -> 0".into())
}

fn borel_weil() -> Result<String, String> {
    for d in 0..=8 {
        ensure(bwb_su2(d) == Some((0, d)), || format!("O({d}) -> {:?}", bwb_su2(d)))?;
    }
    Ok("H0(O(d)) = V_d for d <= 8".into())
}

fn puzzle_example() -> Result<String, String> {
    let b = BoundaryTriple::new(vec![2, 4], vec![2, 4], vec![2, 3]);
    let n = count_puzzles(4, &b).map_err(err)?;
    let list = list_puzzles(4, &b).map_err(err)?;
    ensure(n >= 1 && list.len() as u64 == n, || format!("count {n}, listed {}", list.len()))?;
    ensure(list.iter().all(|f| f.is_legal() && f.boundary() == b), || "illegal filling".into())?;
    Ok(format!("{n} puzzle(s), all legal"))
}

fn horn_examples() -> Result<String, String> {
    let two = generate_horn_system(2, HornMode::AllPositive).map_err(err)?;
    for r in 2..=5 {
        let sys = generate_horn_system(r, HornMode::AllPositive).map_err(err)?;
        ensure(sys.inequalities.contains(&BoundaryTriple::new(vec![r], vec![r], vec![r])), || format!("r = {r}"))?;
    }
    let s = |v: &[i64]| Spectrum::from_ints(v).expect("sorted");
    let ok = check_triple(&s(&[1, 0]), &s(&[1, 0]), &s(&[1, 1]), &two).map_err(err)?;
    ensure(ok.feasible, || "(1,0),(1,0),(1,1) rejected".into())?;
    Ok("smallest-eigenvalue triple present for r = 2..=5".into())
}

fn polygons() -> Result<String, String> {
    let p = |v: &[i64]| polygon_nonempty(&v.iter().map(|&x| q(x)).collect::<Vec<_>>()).map_err(err);
    ensure(p(&[1, 1, 1])?, || "(1,1,1)".into())?;
    ensure(!p(&[3, 1, 1])?, || "(3,1,1)".into())?;
    ensure(p(&[2, 1, 1])?, || "(2,1,1)".into())?;
    Ok("(1,1,1) yes, (3,1,1) no, (2,1,1) yes".into())
}

fn point_configurations() -> Result<String, String> {
    ensure(sl2_config_semistable(&[q(2), q(1), q(1)], &q(4)).map_err(err)?, || "(2,1,1)".into())?;
    ensure(!sl2_config_semistable(&[q(3), q(1)], &q(4)).map_err(err)?, || "(3,1)".into())?;
    Ok("(2,1,1) semistable, (3,1) unstable".into())
}

fn rank_one_moment_image() -> Result<String, String> {
    let x = ProjPoint::uniform(&ws(&[&[1], &[0], &[-1]])).map_err(err)?;
    let p = orbit_moment_polytope(&x);
    ensure(p.vertices() == ws(&[&[-1], &[1]]).as_slice(), || format!("{:?}", p.vertices()))?;
    Ok("segment [-1, 1]".into())
}

fn p2_stability() -> Result<String, String> {
    let pt = |v: &[&[i64]]| ProjPoint::uniform(&ws(v)).expect("nonempty");
    let full = classify_stability(&pt(&[&[1], &[0], &[-1]]));
    ensure(full == StabilityVerdict::Stable, || format!("full support: {full:?}"))?;
    ensure(!classify_stability(&pt(&[&[1]])).is_semistable(), || "{1} should be unstable".into())?;
    let mid = classify_stability(&pt(&[&[0]]));
    ensure(mid == StabilityVerdict::Polystable { stabilizer_dim: 1 }, || format!("{{0}}: {mid:?}"))?;
    Ok("stable / unstable / polystable".into())
}

fn kempf_ness_unbounded() -> Result<String, String> {
    let x = ProjPoint::uniform(&[w(&[1])]).map_err(err)?;
    let (a, _) = kempf_ness(&x, &[10.0]).map_err(err)?;
    let (b, _) = kempf_ness(&x, &[20.0]).map_err(err)?;
    ensure((a + 10.0).abs() < 1e-12 && (b + 20.0).abs() < 1e-12, || format!("psi(10)={a}, psi(20)={b}"))?;
    Ok("psi(t) = -t on support {1}".into())
}

fn kirwan_types() -> Result<String, String> {
    let c = |a: i64, b: i64| Weight::new(vec![qf(a, 4), qf(b, 4)]);
    let t = critical_types(&[c(-1, -1), c(3, -1), c(-1, 3)]);
    let want = [c(0, 0), c(-1, 0), c(0, -1), c(1, 1), c(-1, -1), c(-1, 3), c(3, -1)];
    ensure(t.len() == 7 && want.iter().all(|b| t.contains(b)), || format!("{t:?}"))?;
    Ok("7 critical types".into())
}

fn su2_kostant() -> Result<String, String> {
    for d in 1..=6 {
        let p = kostant_polytope(&DominantWeight::from_ints(&[d, -d]).map_err(err)?).map_err(err)?;
        ensure(p.vertices() == ws(&[&[-d, d], &[d, -d]]).as_slice(), || format!("d = {d}"))?;
        let seg = hull(&ws(&[&[-d], &[d]])).map_err(err)?;
        let n = lattice_points_coset(&seg, &[d], 2).map_err(err)?.len() as i64;
        ensure(n == d + 1, || format!("d = {d}: {n} points"))?;
    }
    Ok("[-d, d] with d+1 weights for d <= 6".into())
}

fn simplex_cut() -> Result<String, String> {
    let p = hull(&ws(&[&[0, 0], &[2, 0], &[0, 2]])).map_err(err)?;
    let CutOutcome::Cut(c) = symplectic_cut(&p, &w(&[-1, 0]), &q(-1)).map_err(err)? else {
        return Err("cut left the simplex unchanged".into());
    };
    let want = hull(&ws(&[&[0, 0], &[0, 2], &[1, 0], &[1, 1]])).map_err(err)?;
    ensure(c == want, || format!("{:?}", c.vertices()))?;
    Ok("(0,0), (0,2), (1,0), (1,1)".into())
}

fn p2_fan() -> Result<String, String> {
    let t = hull(&ws(&[&[0, 0], &[1, 0], &[0, 1]])).map_err(err)?;
    let gens = [vec![1, 1], vec![-1, 0], vec![0, -1]];
    for c in normal_fan(&t).map_err(err)?.iter().filter(|c| c.face_vertices.len() == 1) {
        ensure(c.generators.len() == 2 && c.generators.iter().all(|g| gens.contains(g)), || format!("{c:?}"))?;
    }
    Ok("vertex cones from (1,1), (-1,0), (0,-1)".into())
}

fn p2_localization() -> Result<String, String> {
    for d in 1..=5 {
        let simplex = hull(&ws(&[&[0, 0], &[d, 0], &[0, d]])).map_err(err)?;
        let s = p2_series(d);
        ensure(s.rational_eq(&vertex_sum(&simplex).map_err(err)?), || format!("d = {d}: vertex sum differs"))?;
        let e = s.expand_in_box(&BoxBounds::cube(2, -2, d + 2).map_err(err)?).map_err(err)?;
        let pts = lattice_points(&simplex).map_err(err)?;
        ensure(e.len() == pts.len() && pts.iter().all(|p| e.coeff(p) == 1), || format!("d = {d}: expansion"))?;
    }
    Ok("closed form equals the lattice points for d <= 5".into())
}

fn p1_unstable_stratum() -> Result<String, String> {
    for d in 0..=6 {
        let t = ConeTerm::new(LaurentPoly::monomial(vec![d + 2], 1), vec![vec![2]], w(&[-1])).map_err(err)?;
        let e = t.expand_in_box(&BoxBounds::cube(1, -20, 20).map_err(err)?).map_err(err)?;
        let want =
            LaurentPoly::from_terms(1, (0..).map(|n| d + 2 + 2 * n).take_while(|&k| k <= 20).map(|k| (vec![k], 1)));
        ensure(e == want, || format!("d = {d}: {e}"))?;
        ensure(p1_kn_identity(d, None).map_err(err)?.pass, || format!("d = {d}: identity"))?;
    }
    Ok("z^(d+2)/(1-z^2) = z^(d+2) + z^(d+4) + ...".into())
}

fn blowup_literal_formula() -> Result<String, String> {
    let (g1, g2) = (qf(2, 3), qf(-5, 7));
    for (d, e) in [(3, 1), (5, 2), (4, 3)] {
        let a = blowup_literal(d, e).map_err(err)?.evaluate(&[g1.clone(), g2.clone()]).map_err(err)?;
        let b = blowup_literal_value(d, e, &g1, &g2).map_err(err)?;
        ensure(a == b, || format!("({d},{e}): {a} vs {b}"))?;
    }
    Ok("four-term formula at (2/3, -5/7)".into())
}

fn pieri_interlacing() -> Result<String, String> {
    let mut cache = CharacterCache::new();
    let m = cache.tensor(&[3, 1], &[2, 0]).map_err(err)?;
    let want: Vec<Vec<i64>> = vec![vec![3, 3], vec![4, 2], vec![5, 1]];
    ensure(m.keys().cloned().collect::<Vec<_>>() == want && m.values().all(|&k| k == 1), || format!("{m:?}"))?;
    Ok("V(3,1) x Sym^2 = V(5,1) + V(4,2) + V(3,3)".into())
}

pub const EXAMPLES: &[(&str, Check)] = &[
    ("su2-character-weights", su2_weights),
    ("su2-triple-invariants", su2_triple_invariants),
    ("borel-weil-su2", borel_weil),
    ("puzzle-r4", puzzle_example),
    ("horn-smallest-eigenvalue", horn_examples),
    ("polygon-triangle-inequalities", polygons),
    ("points-on-p1", point_configurations),
    ("moment-image-rank-one", rank_one_moment_image),
    ("p2-stability", p2_stability),
    ("kempf-ness-unstable", kempf_ness_unbounded),
    ("kirwan-types", kirwan_types),
    ("su2-moment-polytope", su2_kostant),
    ("simplex-cut", simplex_cut),
    ("p2-normal-fan", p2_fan),
    ("p2-localization", p2_localization),
    ("p1-unstable-stratum", p1_unstable_stratum),
    ("blowup-literal", blowup_literal_formula),
    ("pieri-interlacing", pieri_interlacing),
];

/// Runs every example; the boolean is true when all pass.
pub fn run(timings: bool) -> (Value, bool) {
    let mut rows = Vec::new();
    let mut all = true;
    for (name, check) in EXAMPLES {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        all &= outcome.is_ok();
        let (status, detail) = match outcome {
            Ok(d) => ("pass", d),
            Err(d) => ("fail", d),
        };
        let mut row = json!({ "example": name, "status": status, "detail": detail });
        if timings {
            row["ms"] = json!((ms * 1000.0).round() / 1000.0);
        }
        rows.push(row);
    }
    (Value::Array(rows), all)
}

use gitkit_core::characters::*;
use gitkit_core::horn::*;
use gitkit_core::lie::*;
use gitkit_core::localization::*;
use gitkit_core::polytopes::*;
use gitkit_core::puzzles::*;
use gitkit_core::rational::{fmt_q, qf};
use gitkit_core::torus_git::*;
use gitkit_core::{Weight, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;
use crate::input::*;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize")
}

fn check_r(r: Option<usize>, found: usize) -> CliResult<()> {
    match r {
        Some(r) if r != found => Err(gitkit_core::Error::RankMismatch { expected: r, found }.into()),
        _ => Ok(()),
    }
}

pub struct Ctx {
    pub seed: u64,
    pub jobs: usize,
}

pub fn lie(op: &LieOp) -> CliResult<Value> {
    Ok(match op {
        LieOp::Orbit { r, lambda } => {
            let l = weight(lambda)?;
            let r = r.unwrap_or(l.rank());
            json!({ "orbit": weyl_orbit(&l, r)? })
        }
        LieOp::Rho { r } => json!({ "rho": rho(*r) }),
        LieOp::Dominantize { mu } => match dominantize(&weight(mu)?) {
            Dominantized::Regular { w, dominant } => json!({
                "regular": true,
                "perm": w.perm(),
                "length": w.length(),
                "dominant": dominant,
            }),
            Dominantized::Singular => json!({ "regular": false }),
        },
        LieOp::Group { r } => {
            if *r == 0 || *r > 8 {
                return Err(CliError::new("out_of_range", format!("rank {r} not in 1..=8")));
            }
            let g: Vec<Value> = weyl_group(*r)
                .iter()
                .map(|w| json!({ "perm": w.perm(), "length": w.length(), "sign": w.sign() }))
                .collect();
            Value::Array(g)
        }
    })
}

pub fn characters(op: &CharOp) -> CliResult<Value> {
    Ok(match op {
        CharOp::Weyl { r, lambda } => {
            let l = dominant(lambda)?;
            check_r(*r, l.rank())?;
            let ch = weyl_character(&l)?;
            json!({ "lambda": l, "terms": ch.len(), "character": ch })
        }
        CharOp::Dim { lambda } => json!({ "dim": weyl_dimension(&dominant(lambda)?)?.to_string() }),
        CharOp::Su2 { d, spin } => {
            let d = match (d, spin) {
                (Some(d), _) => *d,
                (None, Some(s)) => {
                    let two = q1(s)? * qf(2, 1);
                    if !two.is_integer() {
                        return Err(CliError::new("invalid_input", format!("spin {s} is not a half-integer")));
                    }
                    two.to_integer().try_into().map_err(|_| CliError::new("out_of_range", "spin too large"))?
                }
                (None, None) => return Err(CliError::new("invalid_input", "give --d or --spin")),
            };
            json!({ "d": d, "character": su2_character(d)? })
        }
        CharOp::Tensor { lambda, mu } => {
            let m = tensor_decompose(&dominant(lambda)?, &dominant(mu)?)?;
            Value::Array(m.iter().map(|(nu, k)| json!({ "nu": nu, "multiplicity": k })).collect())
        }
        CharOp::Invariants { lambdas, group, spins } => {
            let dim = match (lambdas, spins) {
                (_, Some(s)) => invariant_dim_su2(&qs(s)?)?,
                (Some(l), None) => {
                    let ws =
                        weights(l)?.into_iter().map(DominantWeight::new).collect::<gitkit_core::Result<Vec<_>>>()?;
                    let g = match group {
                        GroupArg::Gl => Group::Gl,
                        GroupArg::Sl => Group::Sl,
                    };
                    invariant_dim(&ws, g)?
                }
                (None, None) => return Err(CliError::new("invalid_input", "give --lambdas or --spins")),
            };
            json!({ "invariant_dim": dim })
        }
        CharOp::Bwb { lambda, su2 } => match (lambda, su2) {
            (_, Some(n)) => match bwb_su2(*n) {
                Some((degree, d)) => json!({ "kind": "nonzero", "degree": degree, "d": d }),
                None => json!({ "kind": "zero" }),
            },
            (Some(l), None) => to_value(&bwb_cohomology(&weight(l)?)?),
            (None, None) => return Err(CliError::new("invalid_input", "give --lambda or --su2")),
        },
    })
}

fn pad(mut p: Vec<i64>, s: usize) -> Vec<i64> {
    if p.len() < s {
        p.resize(s, 0);
    }
    p
}

pub fn puzzles(op: &PuzzlesOp, ctx: &Ctx) -> CliResult<Value> {
    Ok(match op {
        PuzzlesOp::Count { r, i, j, k, list } => {
            let b = BoundaryTriple::new(indices(i)?, indices(j)?, indices(k)?);
            let count = count_puzzles_jobs(*r, &b, ctx.jobs)?;
            if *list {
                let fillings: Vec<Value> = list_puzzles(*r, &b)?
                    .iter()
                    .map(|f| json!({ "legal": f.is_legal(), "edges": f.edge_map() }))
                    .collect();
                json!({ "count": count, "puzzles": fillings })
            } else {
                json!({ "count": count })
            }
        }
        PuzzlesOp::Lr { r, s, lambda, mu, nu } => {
            let (l, m, n) = (pad(ints(lambda)?, *s), pad(ints(mu)?, *s), pad(ints(nu)?, *s));
            let puzzles = lr_coefficient(*r, *s, &l, &m, &n)?;
            let mut cache = CharacterCache::new();
            let characters = lr_coefficient_oracle(&mut cache, &l, &m, &n)?;
            json!({ "coefficient": puzzles, "character_check": characters, "agree": puzzles == characters })
        }
        PuzzlesOp::Assoc { r, s, trials } => to_value(&associativity_check(*r, *s, trials.map(|t| (t, ctx.seed)))?),
    })
}

fn spectrum(s: &str) -> CliResult<Spectrum> {
    Ok(Spectrum::new(qs(s)?)?)
}

pub fn horn(op: &HornOp, ctx: &Ctx) -> CliResult<Value> {
    let mode = |irr: bool| if irr { HornMode::Irredundant } else { HornMode::AllPositive };
    Ok(match op {
        HornOp::Generate { r, irredundant } => to_value(&generate_horn_system(*r, mode(*irredundant))?),
        HornOp::Check { a, b, c, irredundant } => {
            let (a, b, c) = (spectrum(a)?, spectrum(b)?, spectrum(c)?);
            let sys = generate_horn_system(a.rank(), mode(*irredundant))?;
            let check = check_triple(&a, &b, &c, &sys)?;
            let r = a.rank();
            let triples: Vec<BoundaryTriple> = sys.inequalities.iter().map(|t| zero_sum_triple(r, t)).collect();
            let symmetric = check_zero_sum(&a, &b, &to_zero_sum(&c), &triples);
            let mut v = to_value(&check);
            v["zero_sum_form"] = json!(symmetric);
            v
        }
        HornOp::Sample { r, trials } => to_value(&sample_hermitian_validate(*r, *trials, ctx.seed)?),
        HornOp::Polygon { lengths } => json!({ "nonempty": polygon_nonempty(&qs(lengths)?)? }),
        HornOp::Sl2 { masses, total } => {
            let m = qs(masses)?;
            let total = match total {
                Some(t) => q1(t)?,
                None => m.iter().sum(),
            };
            json!({ "semistable": sl2_config_semistable(&m, &total)? })
        }
    })
}

pub fn stability(op: &StabilityOp) -> CliResult<Value> {
    Ok(match op {
        StabilityOp::Moment { point: p, shift } => {
            let x = point(&p.point)?;
            let shift = match shift {
                Some(s) => weight(s)?,
                None => Weight::zero(x.rank()),
            };
            json!({ "moment": moment_map(&x, &shift)? })
        }
        StabilityOp::Polytope { point: p } => to_value(&orbit_moment_polytope(&point(&p.point)?)),
        StabilityOp::Classify { point: p } => to_value(&classify_stability(&point(&p.point)?)),
        StabilityOp::Slope { point: p, lambda } => {
            let s = hm_slope(&point(&p.point)?, &weight(lambda)?)?;
            json!({ "slope": s, "value": s.value() })
        }
        StabilityOp::Destabilize { point: p } => match max_destabilizing(&point(&p.point)?) {
            Some((lambda, s)) => json!({ "unstable": true, "lambda": lambda, "slope": s, "value": s.value() }),
            None => json!({ "unstable": false }),
        },
        StabilityOp::KempfNess { point: p, xi } => {
            let (psi, grad) = kempf_ness(&point(&p.point)?, &floats(xi)?)?;
            json!({ "psi": psi, "gradient": grad })
        }
        StabilityOp::Flow { point: p, tol, max_iter, escape_radius } => {
            let cfg =
                DescentConfig { tol: *tol, max_iter: *max_iter, escape_radius: *escape_radius, ..Default::default() };
            to_value(&minimize_kempf_ness(&point(&p.point)?, &cfg)?)
        }
        StabilityOp::Graded { point: p, lambda } => to_value(&associated_graded(&point(&p.point)?, &weight(lambda)?)?),
        StabilityOp::JhCone { point: p } => to_value(&jordan_holder_cone(&point(&p.point)?)?),
        StabilityOp::Types { weights } => {
            let ws = weight_list(weights)?;
            if ws.is_empty() {
                return Err(CliError::new("invalid_input", "no weights"));
            }
            let r = ws[0].rank();
            if let Some(w) = ws.iter().find(|w| w.rank() != r) {
                return Err(gitkit_core::Error::RankMismatch { expected: r, found: w.rank() }.into());
            }
            let types: Vec<Value> =
                critical_types(&ws).iter().map(|b| json!({ "beta": b, "norm_sq": fmt_q(&b.norm_sq()) })).collect();
            json!({ "nearest": nearest_point(&ws), "types": types })
        }
        StabilityOp::Product { point: p, other } => to_value(&product(&point(&p.point)?, &point(other)?)?),
    })
}

/// Uniform rational samples in the bounding box of P widened by one.
fn random_samples(p: &Polytope, n: usize, seed: u64) -> Vec<Weight> {
    const DEN: i64 = 97;
    let (lo, hi) = p.bounding_box();
    let lo: Vec<i64> = lo.iter().map(|x| (x.floor().to_integer().try_into().unwrap_or(0i64) - 1) * DEN).collect();
    let hi: Vec<i64> = hi.iter().map(|x| (x.ceil().to_integer().try_into().unwrap_or(0i64) + 1) * DEN).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Weight::new(lo.iter().zip(&hi).map(|(&a, &b)| qf(rng.random_range(a..=b), DEN)).collect())).collect()
}

pub fn polytope_op(op: &PolytopeOp, ctx: &Ctx) -> CliResult<Value> {
    Ok(match op {
        PolytopeOp::Hull { polytope: p } => to_value(&polytope(&p.input)?),
        PolytopeOp::Kostant { lambda } => to_value(&kostant_polytope(&dominant(lambda)?)?),
        PolytopeOp::Lattice { polytope: p, shift, step } => {
            let p = polytope(&p.input)?;
            let pts = match shift {
                Some(s) => lattice_points_coset(&p, &ints(s)?, *step)?,
                None if *step == 1 => lattice_points(&p)?,
                None => lattice_points_coset(&p, &vec![0; p.ambient()], *step)?,
            };
            json!({ "count": pts.len(), "points": pts })
        }
        PolytopeOp::Delzant { polytope: p } => to_value(&is_delzant(&polytope(&p.input)?)?),
        PolytopeOp::Cut { polytope: p, normal, level } => {
            to_value(&symplectic_cut(&polytope(&p.input)?, &weight(normal)?, &q1(level)?)?)
        }
        PolytopeOp::Fan { polytope: p } => to_value(&normal_fan(&polytope(&p.input)?)?),
        PolytopeOp::BrianchonGram { polytope: p, samples } => {
            let p = polytope(&p.input)?;
            let xs = random_samples(&p, *samples, ctx.seed);
            let mut v = to_value(&brianchon_gram_check(&p, &xs)?);
            if let Some(x) = xs.first() {
                v["first_sample"] = json!({ "x": x, "outcome": brianchon_gram_at(&p, x)? });
            }
            v
        }
    })
}

fn is_series(text: &str) -> bool {
    serde_json::from_str::<Value>(text)
        .ok()
        .and_then(|v| v.as_array().and_then(|a| a.first().map(|t| t.get("num").is_some())))
        .unwrap_or(false)
}

pub fn localize(op: &LocalizeOp, ctx: &Ctx) -> CliResult<Value> {
    Ok(match op {
        LocalizeOp::Toric { polytope: p, eval } => {
            let p = polytope(p)?;
            let s = vertex_sum(&p)?;
            let mut v = json!({ "series": s });
            if let Some(z) = eval {
                let z = qs(z)?;
                v["value"] = json!(fmt_q(&s.evaluate(&z)?));
                v["lattice_sum"] = json!(fmt_q(&lattice_sum(&lattice_points(&p)?, &z)?));
            }
            v
        }
        LocalizeOp::Expand { series, lo, hi } => {
            let text = std::fs::read_to_string(series.trim()).unwrap_or_else(|_| series.clone());
            let (s, default) = if is_series(&text) {
                let s: ConeSeries = load(&text, "series")?;
                (s, None)
            } else {
                let p = polytope(series)?;
                let s = vertex_sum(&p)?;
                let b = default_box(&p, &s);
                (s, Some(b))
            };
            let bx = match (lo, hi, default) {
                (Some(lo), Some(hi), _) => BoxBounds::new(ints(lo)?, ints(hi)?)?,
                (_, _, Some(b)) => b,
                _ => return Err(CliError::new("invalid_input", "a raw series needs --lo and --hi")),
            };
            let e = s.expand_in_box_jobs(&bx, ctx.jobs)?;
            json!({ "box": bx, "terms": e.len(), "expansion": e })
        }
        LocalizeOp::P2 { d } => json!({ "d": d, "series": p2_series(*d) }),
        LocalizeOp::P1Bundle { k } => json!({ "k": k, "series": p1_line_bundle(*k) }),
        LocalizeOp::P1 { d, half_width } => to_value(&p1_kn_identity(*d, *half_width)?),
        LocalizeOp::Blowup { d, e, at } => {
            let mut v = to_value(&blowup_chi(*d, *e)?);
            if let Some(g) = at {
                let g: Vec<Q> = qs(g)?;
                if g.len() != 2 {
                    return Err(gitkit_core::Error::RankMismatch { expected: 2, found: g.len() }.into());
                }
                v["literal_value"] = json!(fmt_q(&blowup_literal_value(*d, *e, &g[0], &g[1])?));
            }
            v
        }
        LocalizeOp::Weyl { lambda } => {
            let l = dominant(lambda)?;
            json!({ "series": weyl_series(&l)?, "character": weyl_via_localization(&l)? })
        }
    })
}

//! Eigenvalue inequalities for sums of Hermitian matrices.
//!
//! Inequalities are stored in the additive form
//! Σ_{i∈I} a_i + Σ_{j∈J} b_j ≤ Σ_{k∈K} c_k for spectra a, b, c of A, B, A+B,
//! one for every triple with a positive puzzle count.

mod jacobi;

pub use jacobi::{symmetric_eigenvalues, Hermitian, DEFAULT_TOL as JACOBI_TOL};

use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::puzzles::{count_puzzles, subsets, BoundaryTriple};
use crate::rational::{serde_q_vec, Q};

pub const SAMPLE_TOL: f64 = 1e-8;

/// Eigenvalues in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum(#[serde(with = "serde_q_vec")] Vec<Q>);

impl Spectrum {
    pub fn new(values: Vec<Q>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput("spectrum must be non-increasing".into()));
        }
        Ok(Spectrum(values))
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Spectrum::new(values.iter().map(|&x| crate::rational::q(x)).collect())
    }

    pub fn values(&self) -> &[Q] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    fn sum_over(&self, set: &[usize]) -> Q {
        set.iter().map(|&i| &self.0[i - 1]).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HornMode {
    /// Every triple with n_{IJ}^K > 0.
    AllPositive,
    /// Only triples with n_{IJ}^K = 1.
    Irredundant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornSystem {
    pub r: usize,
    pub mode: HornMode,
    pub trace_equality: bool,
    pub inequalities: Vec<BoundaryTriple>,
}

/// All inequality triples for rank r, ordered by size then lexicographically.
pub fn generate_horn_system(r: usize, mode: HornMode) -> Result<HornSystem> {
    if !(2..=5).contains(&r) {
        return Err(Error::OutOfRange(format!("Horn systems are generated for 2 <= r <= 5, got {r}")));
    }
    build_system(r, mode)
}

fn build_system(r: usize, mode: HornMode) -> Result<HornSystem> {
    let mut inequalities = Vec::new();
    for s in 1..r {
        let subs = subsets(r, s);
        for i in &subs {
            for j in &subs {
                for k in &subs {
                    let b = BoundaryTriple::new(i.clone(), j.clone(), k.clone());
                    let n = count_puzzles(r, &b)?;
                    let keep = match mode {
                        HornMode::AllPositive => n > 0,
                        HornMode::Irredundant => n == 1,
                    };
                    if keep {
                        inequalities.push(b);
                    }
                }
            }
        }
    }
    Ok(HornSystem { r, mode, trace_equality: true, inequalities })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Trace {
        #[serde(with = "crate::rational::serde_q")]
        lhs: Q,
        #[serde(with = "crate::rational::serde_q")]
        rhs: Q,
    },
    Inequality {
        triple: BoundaryTriple,
        #[serde(with = "crate::rational::serde_q")]
        lhs: Q,
        #[serde(with = "crate::rational::serde_q")]
        rhs: Q,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleCheck {
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated: Option<Violation>,
}

/// Exact test of (a, b, c) against the trace equality and every inequality.
pub fn check_triple(a: &Spectrum, b: &Spectrum, c: &Spectrum, sys: &HornSystem) -> Result<TripleCheck> {
    for s in [a, b, c] {
        crate::error::check_rank(sys.r, s.rank())?;
    }
    let all: Vec<usize> = (1..=sys.r).collect();
    if sys.trace_equality {
        let lhs = a.sum_over(&all) + b.sum_over(&all);
        let rhs = c.sum_over(&all);
        if lhs != rhs {
            return Ok(TripleCheck { feasible: false, violated: Some(Violation::Trace { lhs, rhs }) });
        }
    }
    for t in &sys.inequalities {
        let lhs = a.sum_over(&t.i) + b.sum_over(&t.j);
        let rhs = c.sum_over(&t.k);
        if lhs > rhs {
            return Ok(TripleCheck {
                feasible: false,
                violated: Some(Violation::Inequality { triple: t.clone(), lhs, rhs }),
            });
        }
    }
    Ok(TripleCheck { feasible: true, violated: None })
}

/// Largest amount by which floating spectra break the system (0 if none).
pub fn max_violation_f64(a: &[f64], b: &[f64], c: &[f64], sys: &HornSystem) -> f64 {
    let sum = |v: &[f64], set: &[usize]| set.iter().map(|&i| v[i - 1]).sum::<f64>();
    let mut worst = 0.0f64;
    if sys.trace_equality {
        let t = a.iter().sum::<f64>() + b.iter().sum::<f64>() - c.iter().sum::<f64>();
        worst = worst.max(t.abs());
    }
    for t in &sys.inequalities {
        worst = worst.max(sum(a, &t.i) + sum(b, &t.j) - sum(c, &t.k));
    }
    worst
}

/// The symmetric form Σ_I a + Σ_J b + Σ_{K'} c' ≤ 0 with c' = −reverse(c)
/// and K' = {r+1−k}.
pub fn to_zero_sum(c: &Spectrum) -> Spectrum {
    Spectrum(c.0.iter().rev().map(|x| -x).collect())
}

pub fn zero_sum_triple(r: usize, t: &BoundaryTriple) -> BoundaryTriple {
    BoundaryTriple::new(t.i.clone(), t.j.clone(), t.k.iter().map(|&k| r + 1 - k).collect())
}

/// Checks Σ_I a + Σ_J b + Σ_K c ≤ 0 and Σa + Σb + Σc = 0.
pub fn check_zero_sum(a: &Spectrum, b: &Spectrum, c: &Spectrum, triples: &[BoundaryTriple]) -> bool {
    let r = a.rank();
    let all: Vec<usize> = (1..=r).collect();
    let total = a.sum_over(&all) + b.sum_over(&all) + c.sum_over(&all);
    total.is_zero() && triples.iter().all(|t| !(a.sum_over(&t.i) + b.sum_over(&t.j) + c.sum_over(&t.k)).is_positive())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleReport {
    pub r: usize,
    pub trials: usize,
    pub seed: u64,
    pub inequalities: usize,
    pub violations: usize,
    /// Worst violation amount over all trials; ≤ tolerance when clean.
    pub max_slack_error: f64,
}

/// GUE-style random Hermitian matrix.
pub fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> Hermitian {
    let mut h = Hermitian::zeros(n);
    let half = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..n {
        h.re[i][i] = StandardNormal.sample(rng);
        for j in i + 1..n {
            let x: f64 = StandardNormal.sample(rng);
            let y: f64 = StandardNormal.sample(rng);
            h.re[i][j] = x * half;
            h.re[j][i] = x * half;
            h.im[i][j] = y * half;
            h.im[j][i] = -y * half;
        }
    }
    h
}

/// Spectra of random A, B, A+B checked against the rank-r system.
pub fn sample_hermitian_validate(r: usize, trials: usize, seed: u64) -> Result<SampleReport> {
    if !(1..=6).contains(&r) {
        return Err(Error::OutOfRange(format!("sampling supports 1 <= r <= 6, got {r}")));
    }
    let sys = build_system(r, HornMode::AllPositive)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report =
        SampleReport { r, trials, seed, inequalities: sys.inequalities.len(), violations: 0, max_slack_error: 0.0 };
    for _ in 0..trials {
        let a = random_hermitian(r, &mut rng);
        let b = random_hermitian(r, &mut rng);
        let c = a.add(&b);
        let ea = a.eigenvalues(JACOBI_TOL)?;
        let eb = b.eigenvalues(JACOBI_TOL)?;
        let ec = c.eigenvalues(JACOBI_TOL)?;
        let v = max_violation_f64(&ea, &eb, &ec, &sys);
        if v > SAMPLE_TOL {
            report.violations += 1;
        }
        report.max_slack_error = report.max_slack_error.max(v);
    }
    Ok(report)
}

/// Closed polygon with side lengths λ exists iff λ_j ≤ Σ_{i≠j} λ_i for all j.
pub fn polygon_nonempty(lengths: &[Q]) -> Result<bool> {
    if lengths.is_empty() {
        return Err(Error::InvalidInput("no side lengths".into()));
    }
    if let Some(l) = lengths.iter().find(|l| !l.is_positive()) {
        return Err(Error::InvalidInput(format!("side length {l} is not positive")));
    }
    let total: Q = lengths.iter().sum();
    Ok(lengths.iter().all(|l| l + l <= total))
}

/// n points on P¹ with weights: semistable iff no point carries more than
/// half of the total weight.
pub fn sl2_config_semistable(masses: &[Q], total: &Q) -> Result<bool> {
    if let Some(m) = masses.iter().find(|m| !m.is_positive()) {
        return Err(Error::InvalidInput(format!("mass {m} is not positive")));
    }
    let sum: Q = masses.iter().sum();
    if &sum != total {
        return Err(Error::InvalidInput(format!("masses sum to {sum}, not {total}")));
    }
    Ok(masses.iter().all(|m| m + m <= *total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};
    use proptest::prelude::*;

    fn sp(x: &[i64]) -> Spectrum {
        Spectrum::from_ints(x).unwrap()
    }

    #[test]
    fn rank_two_system() {
        let sys = generate_horn_system(2, HornMode::AllPositive).unwrap();
        let got: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)> =
            sys.inequalities.iter().map(|t| (t.i.clone(), t.j.clone(), t.k.clone())).collect();
        assert_eq!(got, vec![(vec![1], vec![2], vec![1]), (vec![2], vec![1], vec![1]), (vec![2], vec![2], vec![2])]);
    }

    #[test]
    fn weyl_bottom_inequality_present() {
        for r in 2..=4 {
            let sys = generate_horn_system(r, HornMode::Irredundant).unwrap();
            assert!(sys.inequalities.contains(&BoundaryTriple::new(vec![r], vec![r], vec![r])));
        }
    }

    #[test]
    fn check_examples() {
        let sys = generate_horn_system(2, HornMode::AllPositive).unwrap();
        assert!(check_triple(&sp(&[1, 0]), &sp(&[1, 0]), &sp(&[1, 1]), &sys).unwrap().feasible);
        let bad = check_triple(&sp(&[1, 0]), &sp(&[1, 0]), &sp(&[3, -1]), &sys).unwrap();
        assert!(!bad.feasible);
        assert!(matches!(bad.violated, Some(Violation::Inequality { .. })));
        assert!(check_triple(&sp(&[0, 0]), &sp(&[0, 0]), &sp(&[0, 0]), &sys).unwrap().feasible);
        assert!(check_triple(&sp(&[0, 0, 0]), &sp(&[0, 0]), &sp(&[0, 0]), &sys).is_err());
    }

    #[test]
    fn zero_sum_conversion_agrees() {
        let sys = generate_horn_system(3, HornMode::AllPositive).unwrap();
        let zs: Vec<BoundaryTriple> = sys.inequalities.iter().map(|t| zero_sum_triple(3, t)).collect();
        for (a, b, c) in
            [([2, 1, 0], [1, 1, 0], [3, 2, 0]), ([2, 0, 0], [2, 0, 0], [2, 2, 0]), ([1, 0, 0], [1, 0, 0], [3, 0, -1])]
        {
            let (a, b, c) = (sp(&a), sp(&b), sp(&c));
            assert_eq!(check_triple(&a, &b, &c, &sys).unwrap().feasible, check_zero_sum(&a, &b, &to_zero_sum(&c), &zs));
        }
    }

    #[test]
    fn zero_matrices_are_feasible() {
        let sys = generate_horn_system(2, HornMode::AllPositive).unwrap();
        let z = Hermitian::zeros(2);
        let e = z.eigenvalues(JACOBI_TOL).unwrap();
        assert_eq!(max_violation_f64(&e, &e, &e, &sys), 0.0);
        let rep = sample_hermitian_validate(2, 1, 0).unwrap();
        assert_eq!(rep.violations, 0);
    }

    #[test]
    fn polygon_examples() {
        assert!(polygon_nonempty(&[q(1), q(1), q(1)]).unwrap());
        assert!(!polygon_nonempty(&[q(3), q(1), q(1)]).unwrap());
        assert!(polygon_nonempty(&[q(2), q(1), q(1)]).unwrap());
        assert!(polygon_nonempty(&[q(0), q(1)]).is_err());
    }

    #[test]
    fn sl2_examples() {
        assert!(sl2_config_semistable(&[q(2), q(1), q(1)], &q(4)).unwrap());
        assert!(!sl2_config_semistable(&[q(3), q(1)], &q(4)).unwrap());
        assert!(!sl2_config_semistable(&[qf(5, 2)], &qf(5, 2)).unwrap());
        assert!(sl2_config_semistable(&[q(3), q(1)], &q(5)).is_err());
    }

    fn spectrum(r: usize) -> impl Strategy<Value = Spectrum> {
        proptest::collection::vec(-4i64..5, r).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Spectrum::from_ints(&v).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 1000, max_global_rejects: 100_000, ..ProptestConfig::default() })]

        #[test]
        fn irredundant_system_is_equivalent(a in spectrum(3), b in spectrum(3), c12 in (-8i64..9, -8i64..9)) {
            let tr: i64 = a.values().iter().chain(b.values()).map(|x| crate::rational::to_i64(x).unwrap()).sum();
            let (c1, c2) = (c12.0.max(c12.1), c12.0.min(c12.1));
            let c3 = tr - c1 - c2;
            prop_assume!(c3 <= c2);
            let c = sp(&[c1, c2, c3]);
            use std::sync::OnceLock;
            static SYS: OnceLock<(HornSystem, HornSystem)> = OnceLock::new();
            let (all, irr) = SYS.get_or_init(|| (
                generate_horn_system(3, HornMode::AllPositive).unwrap(),
                generate_horn_system(3, HornMode::Irredundant).unwrap(),
            ));
            prop_assert!(irr.inequalities.iter().all(|t| all.inequalities.contains(t)));
            prop_assert_eq!(
                check_triple(&a, &b, &c, all).unwrap().feasible,
                check_triple(&a, &b, &c, irr).unwrap().feasible
            );
        }
    }
}

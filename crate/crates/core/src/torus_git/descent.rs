use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

use super::ProjPoint;
use crate::error::{Error, Result};

/// Float copy of a point: weights and log-masses.
pub(crate) struct FloatPoint {
    weights: Vec<Vec<f64>>,
    log_masses: Vec<f64>,
}

impl FloatPoint {
    pub(crate) fn new(x: &ProjPoint) -> Self {
        FloatPoint {
            weights: x.weights().iter().map(|w| w.to_f64()).collect(),
            log_masses: x.masses().iter().map(|c| crate::rational::to_f64(c).ln()).collect(),
        }
    }

    fn rank(&self) -> usize {
        self.weights[0].len()
    }

    /// Lipschitz bound D²/2 on ∇ψ, D the diameter of the weights.
    fn smoothness(&self) -> f64 {
        let mut d2 = 0f64;
        for a in &self.weights {
            for b in &self.weights {
                d2 = d2.max(a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum());
            }
        }
        d2 / 2.0
    }

    /// (ψ(ξ), ∇ψ(ξ)) with ψ(ξ) = ½ log Σ c_j e^{−2⟨w_j, ξ⟩}.
    pub(crate) fn eval(&self, xi: &[f64]) -> (f64, Vec<f64>) {
        let exps: Vec<f64> = self.weights.iter().zip(&self.log_masses).map(|(w, lc)| lc - 2.0 * dot(w, xi)).collect();
        let m = exps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let probs: Vec<f64> = exps.iter().map(|e| (e - m).exp()).collect();
        let z: f64 = probs.iter().sum();
        let value = 0.5 * (m + z.ln());
        let mut grad = vec![0.0; self.rank()];
        for (p, w) in probs.iter().zip(&self.weights) {
            for (g, wi) in grad.iter_mut().zip(w) {
                *g -= p / z * wi;
            }
        }
        (value, grad)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DescentConfig {
    pub tol: f64,
    pub max_iter: usize,
    /// ‖ξ‖ beyond which the trajectory is analysed as escaping.
    pub escape_radius: f64,
    /// Largest step tried before the escape radius is reached.
    pub max_step: f64,
    /// Largest step during escape analysis; defaults to the inverse
    /// Lipschitz constant of the gradient, which rules out oscillation.
    pub analysis_step: Option<f64>,
    /// Iterates per window when fitting the escape direction.
    pub window: usize,
    /// Window-to-window angle (radians) at which the direction is accepted.
    pub direction_tol: f64,
}

impl Default for DescentConfig {
    fn default() -> Self {
        DescentConfig {
            tol: 1e-8,
            max_iter: 100_000,
            escape_radius: 50.0,
            max_step: 100.0,
            analysis_step: None,
            window: 100,
            direction_tol: 1e-7,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Descent {
    Converged { xi: Vec<f64>, residual: f64, iterations: usize },
    Escaped { direction: Vec<f64>, slope: f64, iterations: usize },
}

fn angle(a: &[f64], b: &[f64]) -> f64 {
    let c = dot(a, b) / (norm(a) * norm(b));
    c.clamp(-1.0, 1.0).acos()
}

/// Gradient descent on ψ with Armijo backtracking.
pub fn minimize_kempf_ness(x: &ProjPoint, cfg: &DescentConfig) -> Result<Descent> {
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let f = FloatPoint::new(x);
    let r = f.rank();
    let mut xi = vec![0.0; r];
    let (mut val, mut grad) = f.eval(&xi);
    let mut step: f64 = 1.0;
    let smooth = f.smoothness();
    let analysis_cap = cfg.analysis_step.unwrap_or(if smooth > 0.0 { 1.0 / smooth } else { 1.0 });
    let mut history: VecDeque<(Vec<f64>, f64)> = VecDeque::new();
    let mut last_dir: VecDeque<Vec<f64>> = VecDeque::new();
    for k in 0..cfg.max_iter {
        let gn = norm(&grad);
        if gn < cfg.tol {
            return Ok(Descent::Converged { xi, residual: gn, iterations: k });
        }
        let analysing = norm(&xi) > cfg.escape_radius;
        if analysing {
            history.push_back((xi.clone(), val));
            if history.len() > cfg.window {
                let (old_xi, old_val) = history.pop_front().expect("nonempty");
                let delta: Vec<f64> = xi.iter().zip(&old_xi).map(|(a, b)| a - b).collect();
                let dn = norm(&delta);
                let dir: Vec<f64> = delta.iter().map(|d| -d / dn).collect();
                last_dir.push_back(dir.clone());
                if last_dir.len() > cfg.window {
                    let prev = last_dir.pop_front().expect("nonempty");
                    if angle(&prev, &dir) < cfg.direction_tol {
                        let slope = (val - old_val) / dn;
                        return Ok(Descent::Escaped { direction: dir, slope, iterations: k });
                    }
                }
            }
        }
        let cap = if analysing { analysis_cap } else { cfg.max_step };
        step = step.min(cap);
        // Armijo: ψ(ξ − t g) ≤ ψ(ξ) − ½ t ‖g‖²
        loop {
            let trial: Vec<f64> = xi.iter().zip(&grad).map(|(a, g)| a - step * g).collect();
            let (tv, tg) = f.eval(&trial);
            if tv <= val - 0.5 * step * gn * gn || step < 1e-300 {
                xi = trial;
                val = tv;
                grad = tg;
                break;
            }
            step *= 0.5;
        }
        step *= 2.0;
    }
    Err(Error::NotConverged { iterations: cfg.max_iter })
}

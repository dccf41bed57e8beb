//! Knutson–Tao puzzles on the size-r triangular board.
//!
//! Row i (from the top, 0-based) holds up-triangles `up(i, j)` for `j ≤ i` and
//! down-triangles `down(i, j)` for `j < i`. Each up-triangle owns three edges:
//! its left `L(i, j)`, right `R(i, j)` and bottom `H(i, j)`. The down-triangle
//! `down(i, j)` has left edge `R(i, j)`, right edge `L(i, j+1)` and top edge
//! `H(i−1, j)`. Boundary positions are read left to right:
//!
//! * northwest position p is `L(r−p, 0)`,
//! * northeast position p is `R(p−1, p−1)`,
//! * south position p is `H(r−1, p−1)`.
//!
//! Label 2 marks the interior diagonal of a rhombus and never appears on the
//! boundary.

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

use crate::characters::CharacterCache;
use crate::error::{Error, Result};

/// Legal up-triangles as (bottom, right, left).
const UP_PIECES: [(u8, u8, u8); 5] = [(0, 0, 0), (1, 1, 1), (2, 0, 1), (0, 1, 2), (1, 2, 0)];

/// Legal down-triangles as (left, right, top).
const DOWN_PIECES: [(u8, u8, u8); 5] = [(0, 0, 0), (1, 1, 1), (0, 1, 2), (1, 2, 0), (2, 0, 1)];

pub const MAX_SIZE: usize = 8;

/// Left, right and bottom labels of a partially filled board.
type Partial = (Vec<Vec<u8>>, Vec<Vec<u8>>, Vec<Vec<u8>>);

fn down_right(left: u8, top: u8) -> Option<u8> {
    DOWN_PIECES.iter().find(|p| p.0 == left && p.2 == top).map(|p| p.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryTriple {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
}

impl BoundaryTriple {
    pub fn new(i: Vec<usize>, j: Vec<usize>, k: Vec<usize>) -> Self {
        let sorted = |mut v: Vec<usize>| {
            v.sort_unstable();
            v
        };
        BoundaryTriple { i: sorted(i), j: sorted(j), k: sorted(k) }
    }

    pub fn validate(&self, r: usize) -> Result<()> {
        if r == 0 || r > MAX_SIZE {
            return Err(Error::OutOfRange(format!("board size {r} not in 1..={MAX_SIZE}")));
        }
        if self.i.len() != self.j.len() || self.j.len() != self.k.len() {
            return Err(Error::InvalidInput(format!(
                "subset sizes differ: |I|={}, |J|={}, |K|={}",
                self.i.len(),
                self.j.len(),
                self.k.len()
            )));
        }
        for set in [&self.i, &self.j, &self.k] {
            if set.iter().any(|&x| x == 0 || x > r) || set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidInput(format!("{set:?} is not a subset of 1..={r}")));
            }
        }
        Ok(())
    }
}

fn indicator(set: &[usize], r: usize) -> Vec<u8> {
    let mut v = vec![0; r];
    for &x in set {
        v[x - 1] = 1;
    }
    v
}

/// Edge labels of a complete filling, indexed [i][j].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filling {
    pub r: usize,
    pub left: Vec<Vec<u8>>,
    pub right: Vec<Vec<u8>>,
    pub bottom: Vec<Vec<u8>>,
}

impl Filling {
    /// Flat map "L(i,j)" / "R(i,j)" / "H(i,j)" → label.
    pub fn edge_map(&self) -> BTreeMap<String, u8> {
        let mut m = BTreeMap::new();
        for i in 0..self.r {
            for j in 0..=i {
                m.insert(format!("L({i},{j})"), self.left[i][j]);
                m.insert(format!("R({i},{j})"), self.right[i][j]);
                m.insert(format!("H({i},{j})"), self.bottom[i][j]);
            }
        }
        m
    }

    pub fn boundary(&self) -> BoundaryTriple {
        let r = self.r;
        let ones = |f: &dyn Fn(usize) -> u8| (1..=r).filter(|&p| f(p) == 1).collect::<Vec<_>>();
        BoundaryTriple {
            i: ones(&|p| self.left[r - p][0]),
            j: ones(&|p| self.right[p - 1][p - 1]),
            k: ones(&|p| self.bottom[r - 1][p - 1]),
        }
    }

    /// Every triangle is a legal piece and the boundary carries only 0/1.
    pub fn is_legal(&self) -> bool {
        let r = self.r;
        for i in 0..r {
            for j in 0..=i {
                let up = (self.bottom[i][j], self.right[i][j], self.left[i][j]);
                if !UP_PIECES.contains(&up) {
                    return false;
                }
                if j < i {
                    let down = (self.right[i][j], self.left[i][j + 1], self.bottom[i - 1][j]);
                    if !DOWN_PIECES.contains(&down) {
                        return false;
                    }
                }
            }
        }
        (0..r).all(|p| self.left[p][0] < 2 && self.right[p][p] < 2 && self.bottom[r - 1][p] < 2)
    }
}

struct Search {
    r: usize,
    /// Row at which the visitor fires; `r` for complete fillings.
    stop: usize,
    ne: Vec<u8>,
    south: Vec<u8>,
    left: Vec<Vec<u8>>,
    right: Vec<Vec<u8>>,
    bottom: Vec<Vec<u8>>,
}

impl Search {
    fn new(r: usize, b: &BoundaryTriple) -> Search {
        let nw = indicator(&b.i, r);
        let mut left = vec![vec![0u8; r]; r];
        for p in 1..=r {
            left[r - p][0] = nw[p - 1];
        }
        Search {
            r,
            stop: r,
            ne: indicator(&b.j, r),
            south: indicator(&b.k, r),
            left,
            right: vec![vec![0u8; r]; r],
            bottom: vec![vec![0u8; r]; r],
        }
    }

    fn snapshot(&self) -> Filling {
        let trim = |m: &Vec<Vec<u8>>| (0..self.r).map(|i| m[i][..=i].to_vec()).collect();
        Filling { r: self.r, left: trim(&self.left), right: trim(&self.right), bottom: trim(&self.bottom) }
    }

    /// Places up(i, j) given its left edge, then the down-triangle to its right.
    fn fill(&mut self, i: usize, j: usize, visit: &mut dyn FnMut(&Search)) {
        if i == self.stop {
            visit(self);
            return;
        }
        let l = self.left[i][j];
        for &(h, rt, pl) in &UP_PIECES {
            if pl != l {
                continue;
            }
            if i == self.r - 1 && h != self.south[j] {
                continue;
            }
            if j == i {
                if rt != self.ne[i] {
                    continue;
                }
                self.right[i][j] = rt;
                self.bottom[i][j] = h;
                self.fill(i + 1, 0, visit);
            } else {
                let Some(next_left) = down_right(rt, self.bottom[i - 1][j]) else {
                    continue;
                };
                self.right[i][j] = rt;
                self.bottom[i][j] = h;
                self.left[i][j + 1] = next_left;
                self.fill(i, j + 1, visit);
            }
        }
    }

    /// Partial states after the first `rows` rows, for parallel splitting.
    fn frontier(&mut self, rows: usize) -> Vec<Partial> {
        let mut out = Vec::new();
        self.stop = rows.min(self.r);
        self.fill(0, 0, &mut |s: &Search| out.push((s.left.clone(), s.right.clone(), s.bottom.clone())));
        self.stop = self.r;
        out
    }
}

fn check_size(r: usize, b: &BoundaryTriple) -> Result<()> {
    b.validate(r)
}

/// Number of puzzles with the given boundary.
pub fn count_puzzles(r: usize, b: &BoundaryTriple) -> Result<u64> {
    count_puzzles_jobs(r, b, 1)
}

/// As [`count_puzzles`], splitting the search tree across `jobs` rayon workers.
pub fn count_puzzles_jobs(r: usize, b: &BoundaryTriple, jobs: usize) -> Result<u64> {
    check_size(r, b)?;
    let mut s = Search::new(r, b);
    if jobs <= 1 || r < 4 {
        let mut n = 0u64;
        s.fill(0, 0, &mut |_| n += 1);
        return Ok(n);
    }
    let split = r / 2;
    let seeds = s.frontier(split);
    let work = || {
        seeds
            .par_iter()
            .map(|(l, rt, h)| {
                let mut t = Search::new(r, b);
                t.left = l.clone();
                t.right = rt.clone();
                t.bottom = h.clone();
                let mut n = 0u64;
                t.fill(split, 0, &mut |_| n += 1);
                n
            })
            .sum()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    Ok(pool.install(work))
}

/// All fillings with the given boundary, in search order.
pub fn list_puzzles(r: usize, b: &BoundaryTriple) -> Result<Vec<Filling>> {
    check_size(r, b)?;
    let mut s = Search::new(r, b);
    let mut out = Vec::new();
    s.fill(0, 0, &mut |t| out.push(t.snapshot()));
    Ok(out)
}

/// Subset of {1..r} of size s ↔ partition in the s × (r−s) box:
/// λ_k = (r − s) + k − I_k with I ascending.
pub fn subset_to_partition(r: usize, subset: &[usize]) -> Vec<i64> {
    let s = subset.len();
    subset.iter().enumerate().map(|(k, &x)| (r - s) as i64 + (k + 1) as i64 - x as i64).collect()
}

pub fn partition_to_subset(r: usize, s: usize, lambda: &[i64]) -> Result<Vec<usize>> {
    if lambda.len() > s {
        return Err(Error::InvalidInput(format!("{lambda:?} has more than {s} parts")));
    }
    let mut parts = lambda.to_vec();
    parts.resize(s, 0);
    if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&x| x < 0 || x > (r - s) as i64) {
        return Err(Error::InvalidInput(format!("{lambda:?} is not a partition in the {s}x{} box", r - s)));
    }
    Ok(parts.iter().enumerate().map(|(k, &l)| ((r - s) as i64 + (k + 1) as i64 - l) as usize).collect())
}

/// c^ν_{λμ} computed by counting puzzles.
pub fn lr_coefficient(r: usize, s: usize, lambda: &[i64], mu: &[i64], nu: &[i64]) -> Result<u64> {
    if s > r {
        return Err(Error::InvalidInput(format!("s = {s} exceeds r = {r}")));
    }
    let b = BoundaryTriple::new(
        partition_to_subset(r, s, lambda)?,
        partition_to_subset(r, s, mu)?,
        partition_to_subset(r, s, nu)?,
    );
    count_puzzles(r, &b)
}

/// c^ν_{λμ} from characters of GL(s): the multiplicity of V_ν in V_λ ⊗ V_μ.
pub fn lr_coefficient_oracle(cache: &mut CharacterCache, lambda: &[i64], mu: &[i64], nu: &[i64]) -> Result<u64> {
    if lambda.is_empty() {
        return Ok(1);
    }
    Ok(cache.tensor(lambda, mu)?.get(nu).copied().unwrap_or(0))
}

/// All s-subsets of {1..r} in lexicographic order.
pub fn subsets(r: usize, s: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for x in start..=r {
            cur.push(x);
            go(x + 1, r, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, r, s, &mut Vec::new(), &mut out);
    out
}

/// (I, J, L, M, left sum, right sum)
pub type Counterexample = (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>, u64, u64);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociativityReport {
    pub pass: bool,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

/// Σ_K n_{IJ}^K n_{KL}^M = Σ_K n_{JL}^K n_{IK}^M over all tuples, or `trials`
/// seeded random tuples when given.
pub fn associativity_check(r: usize, s: usize, trials: Option<(usize, u64)>) -> Result<AssociativityReport> {
    if r == 0 || r > 6 || s > r {
        return Err(Error::OutOfRange(format!("associativity check needs s <= r <= 6, got r={r}, s={s}")));
    }
    let subs = subsets(r, s);
    let mut memo: HashMap<(usize, usize, usize), u64> = HashMap::new();
    let mut n = |a: usize, b: usize, c: usize| -> Result<u64> {
        if let Some(&v) = memo.get(&(a, b, c)) {
            return Ok(v);
        }
        let v = count_puzzles(r, &BoundaryTriple::new(subs[a].clone(), subs[b].clone(), subs[c].clone()))?;
        memo.insert((a, b, c), v);
        Ok(v)
    };
    let m = subs.len();
    let tuples: Vec<[usize; 4]> = match trials {
        None => (0..m.pow(4)).map(|t| [t % m, t / m % m, t / (m * m) % m, t / (m * m * m)]).collect(),
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let idx: Vec<usize> = (0..m).collect();
            (0..count).map(|_| std::array::from_fn(|_| *idx.choose(&mut rng).expect("nonempty"))).collect()
        }
    };
    let mut report = AssociativityReport { pass: true, checked: 0, counterexample: None };
    for [i, j, l, mm] in tuples {
        let mut lhs = 0;
        let mut rhs = 0;
        for k in 0..m {
            lhs += n(i, j, k)? * n(k, l, mm)?;
            rhs += n(j, l, k)? * n(i, k, mm)?;
        }
        report.checked += 1;
        if lhs != rhs {
            report.pass = false;
            report.counterexample =
                Some((subs[i].clone(), subs[j].clone(), subs[l].clone(), subs[mm].clone(), lhs, rhs));
            break;
        }
    }
    Ok(report)
}


#[cfg(test)]
mod oracle_tests {
    use super::*;

    #[test]
    fn agrees_with_characters_r4() {
        let mut cache = CharacterCache::new();
        for r in 1..=4 {
            for s in 0..=r {
                let subs = subsets(r, s);
                for i in &subs {
                    for j in &subs {
                        for k in &subs {
                            let b = BoundaryTriple::new(i.clone(), j.clone(), k.clone());
                            let n = count_puzzles(r, &b).unwrap();
                            let c = lr_coefficient_oracle(
                                &mut cache,
                                &subset_to_partition(r, i),
                                &subset_to_partition(r, j),
                                &subset_to_partition(r, k),
                            )
                            .unwrap();
                            assert_eq!(n, c, "r={r} {b:?}");
                        }
                    }
                }
            }
        }
    }
}

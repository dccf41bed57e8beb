use num_traits::Signed;
use std::collections::BTreeSet;

use crate::lie::Weight;
use crate::linalg::project_origin_affine;
use crate::polytopes::hull;
use crate::rational::Q;

fn for_each_subset(n: usize, max_size: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, n: usize, max: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if !cur.is_empty() {
            f(cur);
        }
        if cur.len() == max {
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, max, cur, f);
            cur.pop();
        }
    }
    go(0, n, max_size, &mut Vec::new(), f);
}

/// The point of hull(weights) nearest the origin, found exactly as the
/// shortest projection onto an affinely independent subset whose barycentric
/// coordinates are non-negative.
pub fn nearest_point(weights: &[Weight]) -> Weight {
    let r = weights[0].rank();
    let mut best: Option<(Q, Vec<Q>)> = None;
    for_each_subset(weights.len(), r + 1, &mut |s| {
        let pts: Vec<Vec<Q>> = s.iter().map(|&i| weights[i].coords().to_vec()).collect();
        let (p, bary) = project_origin_affine(&pts);
        let Some(mu) = bary else { return };
        if mu.iter().any(Signed::is_negative) {
            return;
        }
        let n: Q = p.iter().map(|x| x * x).sum();
        if best.as_ref().is_none_or(|(b, _)| n < *b) {
            best = Some((n, p));
        }
    });
    Weight::new(best.expect("singletons always qualify").1)
}

/// Projections of 0 onto aff(S) that lie in relint(conv S), over all
/// nonempty subsets S.
pub fn critical_types(weights: &[Weight]) -> BTreeSet<Weight> {
    let distinct: Vec<Weight> = weights.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let mut out = BTreeSet::new();
    for_each_subset(distinct.len(), distinct.len(), &mut |s| {
        let pts: Vec<Vec<Q>> = s.iter().map(|&i| distinct[i].coords().to_vec()).collect();
        let (p, _) = project_origin_affine(&pts);
        let p = Weight::new(p);
        if out.contains(&p) {
            return;
        }
        let sub: Vec<Weight> = s.iter().map(|&i| distinct[i].clone()).collect();
        let h = hull(&sub).expect("nonempty subset");
        if h.relint_contains(&p) {
            out.insert(p);
        }
    });
    out
}

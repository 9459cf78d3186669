use serde::Serialize;

use super::clique::max_clique;
use super::graph::ConflictGraph;
use crate::error::{GeoError, Result};
use crate::exactgeom::{triangle_contains_closed, Configuration, RatPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyResult {
    /// Family members as sorted vertex lists, in lexicographic order.
    pub family: Vec<Vec<usize>>,
    pub exact: bool,
    pub nodes: u64,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn shared(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

fn best_family(
    candidates: &[Vec<usize>],
    compatible: impl Fn(&[usize], &[usize]) -> bool + Sync,
    budget: u64,
) -> FamilyResult {
    let g = ConflictGraph::from_fn(candidates.len(), |i, j| compatible(&candidates[i], &candidates[j]));
    let r = max_clique(&g, budget);
    let mut family: Vec<Vec<usize>> = r.clique.iter().map(|&i| candidates[i].clone()).collect();
    family.sort();
    FamilyResult { family, exact: r.exact, nodes: r.nodes }
}

/// Largest family of `k`-vertex parts that pairwise conflict and pairwise
/// share at most one vertex (so are edge-disjoint).
pub fn max_intersecting_family(config: &Configuration, k: usize, budget: u64) -> Result<FamilyResult> {
    if !(2..=3).contains(&k) {
        return Err(GeoError::InvalidArgument(format!("family search supports parts of 2 or 3 vertices, got {k}")));
    }
    let cands = subsets(config.n(), k);
    Ok(best_family(&cands, |a, b| shared(a, b) <= 1 && config.parts_conflict(a, b), budget))
}

/// Certificate check for a family: pairwise conflicting and edge-disjoint.
pub fn verify_intersecting_family(config: &Configuration, family: &[Vec<usize>]) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(i, a)| family[i + 1..].iter().all(|b| shared(a, b) <= 1 && config.parts_conflict(a, b)))
}

/// Most pairwise edge-disjoint triangles whose closed hull contains `p`.
pub fn tau_point(config: &Configuration, p: RatPoint, budget: u64) -> Result<FamilyResult> {
    let pts = config.points().ok_or_else(|| GeoError::InvalidArgument("point containment needs coordinates".into()))?;
    if pts.iter().any(|&v| p.is_point(v)) {
        return Err(GeoError::InvalidArgument("p must not be a vertex".into()));
    }
    let cands: Vec<Vec<usize>> = subsets(config.n(), 3)
        .into_iter()
        .filter(|t| triangle_contains_closed(pts[t[0]], pts[t[1]], pts[t[2]], p))
        .collect();
    Ok(best_family(&cands, |a, b| shared(a, b) <= 1, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::Point;

    #[test]
    fn pentagram() {
        let cfg = Configuration::convex(5).unwrap();
        let r = max_intersecting_family(&cfg, 2, 1_000_000).unwrap();
        assert!(r.exact);
        assert_eq!(r.family.len(), 5);
        assert!(verify_intersecting_family(&cfg, &r.family));
    }

    #[test]
    fn single_triangle() {
        let cfg = Configuration::convex(3).unwrap();
        assert_eq!(max_intersecting_family(&cfg, 3, 100).unwrap().family.len(), 1);
        assert!(max_intersecting_family(&cfg, 4, 100).is_err());
    }

    #[test]
    fn tau_on_a_triangle() {
        let cfg = Configuration::coordinates(vec![Point::new(0, 0), Point::new(4, 0), Point::new(0, 4)]).unwrap();
        assert_eq!(tau_point(&cfg, RatPoint::new(1, 1, 1), 100).unwrap().family.len(), 1);
        assert_eq!(tau_point(&cfg, RatPoint::new(9, 9, 1), 100).unwrap().family.len(), 0);
        assert!(tau_point(&cfg, RatPoint::new(0, 0, 1), 100).is_err());
    }
}

use serde::Serialize;

use super::graph::ConflictGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    /// Sorted vertex list of the best clique found.
    pub clique: Vec<usize>,
    /// True when the search closed within budget, so the clique is maximum.
    pub exact: bool,
    pub nodes: u64,
}

/// Branch and bound with greedy-coloring bounds over a degree ordering.
/// The search is sequential, so the result is reproducible.
pub fn max_clique(g: &ConflictGraph, budget: u64) -> CliqueResult {
    let m = g.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut best: Vec<usize> = Vec::new();
    for &v in &order {
        if best.iter().all(|&u| g.adjacent(u, v)) {
            best.push(v);
        }
    }
    let mut s = CliqueSearch { g, best, current: Vec::new(), nodes: 0, budget, out_of_budget: false };
    s.expand(order);
    let mut clique = s.best;
    clique.sort_unstable();
    CliqueResult { clique, exact: !s.out_of_budget, nodes: s.nodes }
}

/// Clique index of a conflict graph: the largest pairwise-conflicting family.
pub fn clique_index(g: &ConflictGraph, budget: u64) -> CliqueResult {
    max_clique(g, budget)
}

struct CliqueSearch<'a> {
    g: &'a ConflictGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, candidates: Vec<usize>) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.out_of_budget = true;
            return;
        }
        let (sorted, bounds) = self.color_sort(&candidates);
        for idx in (0..sorted.len()).rev() {
            if self.current.len() + bounds[idx] <= self.best.len() || self.out_of_budget {
                return;
            }
            let v = sorted[idx];
            self.current.push(v);
            let next: Vec<usize> = sorted[..idx].iter().copied().filter(|&u| self.g.adjacent(u, v)).collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
        }
    }

    /// Orders candidates by greedy color class; `bounds[i]` is the class
    /// number (1-based) of `sorted[i]`, an upper bound on any clique within
    /// `sorted[..=i]`.
    fn color_sort(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes.iter_mut().find(|c| c.iter().all(|&u| !self.g.adjacent(u, v))) {
                Some(c) => c.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut sorted = Vec::with_capacity(candidates.len());
        let mut bounds = Vec::with_capacity(candidates.len());
        for (k, c) in classes.into_iter().enumerate() {
            for v in c {
                sorted.push(v);
                bounds.push(k + 1);
            }
        }
        (sorted, bounds)
    }
}

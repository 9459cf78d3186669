use serde::Serialize;

use super::clique::max_clique;
use super::graph::{Coloring, ConflictGraph};

/// DSATUR: repeatedly color the uncolored part seeing the most distinct
/// neighbor colors, then the largest degree, then the lowest index, with the
/// smallest free color.
pub fn greedy_color(g: &ConflictGraph) -> Coloring {
    let m = g.len();
    let mut colors = vec![usize::MAX; m];
    let mut seen: Vec<Vec<u64>> = vec![Vec::new(); m];
    let mut sat = vec![0usize; m];
    let degree: Vec<usize> = (0..m).map(|i| g.degree(i)).collect();
    for _ in 0..m {
        let v = (0..m)
            .filter(|&i| colors[i] == usize::MAX)
            .max_by(|&a, &b| sat[a].cmp(&sat[b]).then(degree[a].cmp(&degree[b])).then(b.cmp(&a)))
            .expect("an uncolored part remains");
        let c = first_free(&seen[v]);
        colors[v] = c;
        for u in g.neighbors(v) {
            if colors[u] != usize::MAX {
                continue;
            }
            let s = &mut seen[u];
            if s.len() <= c / 64 {
                s.resize(c / 64 + 1, 0);
            }
            if s[c / 64] >> (c % 64) & 1 == 0 {
                s[c / 64] |= 1 << (c % 64);
                sat[u] += 1;
            }
        }
    }
    Coloring { colors }
}

fn first_free(bits: &[u64]) -> usize {
    for (w, &b) in bits.iter().enumerate() {
        if b != u64::MAX {
            return w * 64 + (!b).trailing_zeros() as usize;
        }
    }
    bits.len() * 64
}

/// Bounds on the chromatic number of a conflict graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChromaticBounds {
    pub lower: usize,
    pub upper: usize,
    pub optimal: bool,
    /// A coloring achieving `upper`.
    pub coloring: Coloring,
    pub nodes: u64,
}

/// Iterative deepening on the palette size from a clique lower bound up to
/// the DSATUR palette. The clique is precolored; the remaining parts are
/// branched on in index order, colors ascending, opening a new color only as
/// the next unused one. `budget` caps the total number of search nodes.
pub fn exact_chromatic_index(g: &ConflictGraph, budget: u64) -> ChromaticBounds {
    let m = g.len();
    let greedy = greedy_color(g);
    if m == 0 {
        return ChromaticBounds { lower: 0, upper: 0, optimal: true, coloring: greedy, nodes: 0 };
    }
    let upper = greedy.palette_size();
    let clique = max_clique(g, budget / 2 + 1);
    let mut lower = clique.clique.len().max(1);
    let mut nodes = clique.nodes;
    let mut best = greedy;
    let mut order: Vec<usize> = (0..m).filter(|i| !clique.clique.contains(i)).collect();
    order.sort_unstable();
    let mut upper_now = upper;
    while lower < upper_now {
        let mut colors = vec![usize::MAX; m];
        for (c, &v) in clique.clique.iter().enumerate() {
            colors[v] = c;
        }
        let mut search = Search { g, k: lower, order: &order, colors, nodes: 0, budget: budget.saturating_sub(nodes) };
        let used = clique.clique.len();
        match search.run(0, used) {
            Some(true) => {
                nodes += search.nodes;
                best = Coloring { colors: search.colors };
                upper_now = lower;
            }
            Some(false) => {
                nodes += search.nodes;
                lower += 1;
            }
            None => {
                nodes += search.nodes;
                return ChromaticBounds { lower, upper: upper_now, optimal: false, coloring: best, nodes };
            }
        }
    }
    ChromaticBounds { lower, upper: upper_now, optimal: true, coloring: best, nodes }
}

struct Search<'a> {
    g: &'a ConflictGraph,
    k: usize,
    order: &'a [usize],
    colors: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(found)` when the subtree is closed, `None` when out of budget.
    fn run(&mut self, at: usize, used: usize) -> Option<bool> {
        if at == self.order.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let v = self.order[at];
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.g.neighbors(v).any(|u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            if self.forward_ok(at + 1) && self.run(at + 1, used.max(c + 1))? {
                return Some(true);
            }
            self.colors[v] = usize::MAX;
        }
        Some(false)
    }

    /// Every later part still has a color available in `0..k`.
    fn forward_ok(&self, from: usize) -> bool {
        let mut taken = vec![false; self.k];
        self.order[from..].iter().all(|&u| {
            taken.iter_mut().for_each(|t| *t = false);
            for w in self.g.neighbors(u) {
                if let Some(t) = taken.get_mut(self.colors[w]) {
                    *t = true;
                }
            }
            taken.iter().any(|&t| !t)
        })
    }
}

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::Decomposition;
use crate::exactgeom::Configuration;

/// Symmetric, irreflexive adjacency over parts, stored as bit rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    m: usize,
    words: usize,
    bits: Vec<u64>,
}

impl ConflictGraph {
    pub fn empty(m: usize) -> Self {
        let words = m.div_ceil(64).max(1);
        ConflictGraph { m, words, bits: vec![0; m * words] }
    }

    /// Builds the graph from a symmetric predicate, one row per task.
    pub fn from_fn(m: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Self {
        let mut g = Self::empty(m);
        let words = g.words;
        g.bits.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
            for j in 0..m {
                if i != j && adjacent(i, j) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
        });
        g
    }

    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(m);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.m && b < self.m);
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
        self.bits[b * self.words + a / 64] |= 1 << (a % 64);
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    pub fn degree(&self, a: usize) -> usize {
        self.row(a).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(a).iter().enumerate().flat_map(|(w, &bits)| {
            let mut b = bits;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(w * 64 + t)
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.m).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Induced subgraph on `keep` (new index = position in `keep`).
    pub fn induced(&self, keep: &[usize]) -> Self {
        ConflictGraph::from_fn(keep.len(), |i, j| self.adjacent(keep[i], keep[j]))
    }
}

pub fn conflict_graph(d: &Decomposition) -> ConflictGraph {
    parts_conflict_graph(&d.config, d.parts.iter().map(|p| p.vertices.as_slice()).collect::<Vec<_>>().as_slice())
}

pub fn parts_conflict_graph(config: &Configuration, parts: &[&[usize]]) -> ConflictGraph {
    ConflictGraph::from_fn(parts.len(), |i, j| config.parts_conflict(parts[i], parts[j]))
}

/// Part index to color id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn palette_size(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Renumbers colors to `0..palette` in order of first use.
    pub fn compacted(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }

    pub fn is_proper(&self, g: &ConflictGraph) -> bool {
        (0..g.len()).all(|i| g.neighbors(i).all(|j| self.colors[i] != self.colors[j]))
    }
}

/// Same-colored conflicting part pairs `(i, j)`, `i < j`; checks only pairs
/// inside each color class.
pub fn verify_coloring(d: &Decomposition, colors: &[usize]) -> Vec<(usize, usize)> {
    assert_eq!(colors.len(), d.parts.len(), "coloring must cover every part");
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, &c) in colors.iter().enumerate() {
        classes.entry(c).or_default().push(i);
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    let mut bad: Vec<(usize, usize)> = classes
        .par_iter()
        .flat_map_iter(|members| {
            let mut out = Vec::new();
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    if d.config.parts_conflict(&d.parts[i].vertices, &d.parts[j].vertices) {
                        out.push((i, j));
                    }
                }
            }
            out
        })
        .collect();
    bad.sort_unstable();
    bad
}

//! Edge decompositions of complete geometric graphs and their exact-cover
//! validation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{GeoError, Result};
use crate::exactgeom::{Configuration, Edge};

mod thm3;
mod thm32;
mod thm4;
mod thm5;

pub use thm3::{thm3_construction, Thm3Output};
pub use thm32::{box_offsets, thm32_construction, Thm32Output};
pub use thm4::thm4_construction;
pub use thm5::{thm5_construction, Thm5Stats, DEFAULT_THRESHOLD};

pub const TAG_EDGE: &str = "singleton-edge";
pub const TAG_TRIANGLE: &str = "triangle";

/// A vertex subset inducing a complete subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    pub vertices: Vec<usize>,
    pub tag: String,
}

impl Part {
    pub fn new(mut vertices: Vec<usize>, tag: impl Into<String>) -> Self {
        vertices.sort_unstable();
        Part { vertices, tag: tag.into() }
    }

    pub fn edge(e: Edge) -> Self {
        Part { vertices: vec![e.u, e.v], tag: TAG_EDGE.into() }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let v = &self.vertices;
        (0..v.len()).flat_map(move |i| (i + 1..v.len()).map(move |j| Edge::new(v[i], v[j])))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub construction: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
    #[serde(default)]
    pub stats: BTreeMap<String, Value>,
    /// Indices of the construction's distinguished family.
    #[serde(default)]
    pub distinguished: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub config: Configuration,
    pub parts: Vec<Part>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    pub metadata: Metadata,
}

impl Decomposition {
    pub fn new(config: Configuration, parts: Vec<Part>, construction: &str) -> Self {
        Decomposition {
            config,
            parts,
            coloring: None,
            metadata: Metadata { construction: construction.into(), ..Metadata::default() },
        }
    }

    /// Sorts parts by vertex list, carrying the coloring and the
    /// distinguished indices along.
    pub fn canonicalize(&mut self) {
        let mut order: Vec<usize> = (0..self.parts.len()).collect();
        order.sort_by(|&a, &b| self.parts[a].vertices.cmp(&self.parts[b].vertices).then(a.cmp(&b)));
        let mut new_index = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        self.parts = order.iter().map(|&i| self.parts[i].clone()).collect();
        if let Some(c) = &self.coloring {
            self.coloring = Some(order.iter().map(|&i| c[i]).collect());
        }
        let mut dist: Vec<usize> = self.metadata.distinguished.iter().map(|&i| new_index[i]).collect();
        dist.sort_unstable();
        self.metadata.distinguished = dist;
    }

    pub fn distinguished_parts(&self) -> Vec<&Part> {
        self.metadata.distinguished.iter().map(|&i| &self.parts[i]).collect()
    }

    pub fn palette_size(&self) -> Option<usize> {
        self.coloring.as_ref().map(|c| {
            let mut v = c.clone();
            v.sort_unstable();
            v.dedup();
            v.len()
        })
    }

    pub fn triangle_count(&self) -> usize {
        self.parts.iter().filter(|p| p.vertices.len() == 3).count()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Parses and structurally checks a decomposition document.
    pub fn from_json(s: &str) -> Result<Self> {
        let d: Decomposition = serde_json::from_str(s)?;
        let n = d.config.n();
        for (i, p) in d.parts.iter().enumerate() {
            if p.vertices.len() < 2 {
                return Err(GeoError::Schema(format!("part {i} has fewer than two vertices")));
            }
            if p.vertices.windows(2).any(|w| w[0] >= w[1]) || p.vertices.iter().any(|&v| v >= n) {
                return Err(GeoError::Schema(format!("part {i} vertices must be sorted, distinct and below {n}")));
            }
        }
        if let Some(c) = &d.coloring {
            if c.len() != d.parts.len() {
                return Err(GeoError::Schema(format!("coloring has {} entries for {} parts", c.len(), d.parts.len())));
            }
        }
        if let Some(&i) = d.metadata.distinguished.iter().find(|&&i| i >= d.parts.len()) {
            return Err(GeoError::Schema(format!("distinguished index {i} out of range")));
        }
        Ok(d)
    }
}

/// Exact-cover defects of a decomposition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub uncovered: Vec<Edge>,
    /// Edges in more than one part, with their multiplicity.
    pub repeated: Vec<(Edge, usize)>,
    /// Parts that are not vertex sets of size at least two within range.
    pub malformed: Vec<usize>,
}

impl CoverReport {
    pub fn is_valid(&self) -> bool {
        self.uncovered.is_empty() && self.repeated.is_empty() && self.malformed.is_empty()
    }
}

pub fn validate_decomposition(d: &Decomposition) -> CoverReport {
    let n = d.config.n();
    let mut count = vec![0usize; n * n.saturating_sub(1) / 2];
    let mut report = CoverReport::default();
    for (i, p) in d.parts.iter().enumerate() {
        let v = &p.vertices;
        if v.len() < 2 || v.iter().any(|&x| x >= n) || v.windows(2).any(|w| w[0] >= w[1]) {
            report.malformed.push(i);
            continue;
        }
        for e in p.edges() {
            count[e.index()] += 1;
        }
    }
    for v in 1..n {
        for u in 0..v {
            let e = Edge::new(u, v);
            match count[e.index()] {
                0 => report.uncovered.push(e),
                1 => {}
                c => report.repeated.push((e, c)),
            }
        }
    }
    report
}

/// Every edge as its own part.
pub fn trivial_edge_decomposition(config: &Configuration) -> Result<Decomposition> {
    let n = config.n();
    if n < 2 {
        return Err(GeoError::InvalidArgument(format!("edge decomposition needs n >= 2, got {n}")));
    }
    let parts = (0..n).flat_map(|u| (u + 1..n).map(move |v| Part::edge(Edge::new(u, v)))).collect();
    let mut d = Decomposition::new(config.clone(), parts, "edges");
    d.metadata.params.insert("n".into(), n.into());
    d.canonicalize();
    Ok(d)
}

/// Singleton parts for every edge of `n` vertices not marked in `used`
/// (indexed by [`Edge::index`]).
pub fn leftover_edges(n: usize, used: &[bool]) -> Vec<Part> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let e = Edge::new(u, v);
            if !used[e.index()] {
                out.push(Part::edge(e));
            }
        }
    }
    out
}

pub(crate) fn mark_used(used: &mut [bool], part: &Part) {
    for e in part.edges() {
        used[e.index()] = true;
    }
}

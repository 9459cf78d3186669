use serde::{Deserialize, Serialize};

use super::{leftover_edges, Decomposition, Part, TAG_TRIANGLE};
use crate::chroma::{greedy_color, parts_conflict_graph};
use crate::designs::{sts9, FiniteField, ProjectivePlane};
use crate::error::{GeoError, Result};
use crate::exactgeom::Configuration;
use crate::planecut::nine_regions_in;

/// Smallest vertex count that still recurses: it leaves `q = 8`, the least
/// order with nine lines through a point.
pub const DEFAULT_THRESHOLD: usize = 72;

/// Colors per K9: the shared within-strip class, the shared pair of rows on
/// either side of the transversal, and seven more triangles.
const ROLES_PER_K9: usize = 9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Thm5Stats {
    pub n: usize,
    pub threshold: usize,
    pub colors: usize,
    pub triangles: usize,
    pub discarded_triangles: usize,
    pub non_triangle_edges: usize,
    pub non_triangle_fraction: f64,
    /// `(depth, vertices, q)` for every level that placed triangles.
    pub levels: Vec<(usize, usize, usize)>,
}

struct Builder<'a> {
    config: &'a Configuration,
    threshold: usize,
    used: Vec<bool>,
    parts: Vec<Part>,
    colors: Vec<usize>,
    discarded: usize,
    levels: Vec<(usize, usize, usize)>,
}

impl Builder<'_> {
    /// Places this level's triangles with colors from `base` on and recurses
    /// into the three strips, which share the next color block. Returns the
    /// width of the color range the subtree may use.
    fn level(&mut self, domain: &[usize], base: usize, depth: usize) -> usize {
        let m = domain.len();
        if m < self.threshold {
            return 0;
        }
        let Some(q) = FiniteField::largest_supported_at_most(m / 9).filter(|&q| q >= 8) else {
            return 0;
        };
        let Ok(nine) = nine_regions_in(self.config, domain, q) else {
            return 0;
        };
        let plane = ProjectivePlane::new(q).expect("supported order");
        let pencil = plane.pencil_through(0, 9).expect("q + 1 >= 9");
        let size = plane.size();
        let mut position = vec![usize::MAX; size];
        for res in &pencil.residues {
            for (k, &p) in res.iter().enumerate() {
                position[p] = k;
            }
        }
        let regions = &nine.assignment.regions;
        let design = sts9();
        // role of each block: columns share 0, the first two rows share 1
        let mut blocks: Vec<([usize; 3], usize)> = Vec::with_capacity(12);
        for b in design.classes[1] {
            blocks.push((b, 0));
        }
        blocks.push((design.classes[0][0], 1));
        blocks.push((design.classes[0][1], 1));
        blocks.push((design.classes[0][2], 2));
        for (k, &b) in design.classes[2].iter().chain(design.classes[3].iter()).enumerate() {
            blocks.push((b, 3 + k));
        }

        let lines = (0..size).filter(|&l| !plane.incident(pencil.center, l));
        for (t, l) in lines.enumerate() {
            let mut k9 = [0usize; 9];
            for (g, slot) in k9.iter_mut().enumerate() {
                let p = plane.meet(l, pencil.lines[g]);
                *slot = regions[g][position[p]];
            }
            for &(b, role) in &blocks {
                let part = Part::new(b.iter().map(|&g| k9[g]).collect(), TAG_TRIANGLE);
                if part.edges().any(|e| self.used[e.index()]) {
                    self.discarded += 1;
                    continue;
                }
                super::mark_used(&mut self.used, &part);
                self.parts.push(part);
                self.colors.push(base + ROLES_PER_K9 * t + role);
            }
        }
        self.levels.push((depth, m, q));
        let width = ROLES_PER_K9 * q * q;
        let child = nine.strips.iter().map(|s| self.level(s, base + width, depth + 1)).max().unwrap_or(0);
        width + child
    }
}

/// Recursive triangle decomposition with a proper coloring. Levels with at
/// least `threshold` vertices and a supported `q = prime power <= m/9`,
/// `q >= 8`, place one K9 per plane line missing the pencil center, split
/// into the twelve triangles of STS(9). Triangles reusing an edge are
/// dropped. Leftover edges become singletons colored by DSATUR in a separate
/// color range; colors are then renumbered to `0..palette`.
pub fn thm5_construction(config: &Configuration, threshold: usize) -> Result<(Decomposition, Thm5Stats)> {
    if config.is_convex() {
        return Err(GeoError::InvalidArgument("the nine-region construction needs coordinates".into()));
    }
    let n = config.n();
    if n < 2 {
        return Err(GeoError::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let threshold = threshold.max(9);
    let mut b = Builder {
        config,
        threshold,
        used: vec![false; n * (n - 1) / 2],
        parts: Vec::new(),
        colors: Vec::new(),
        discarded: 0,
        levels: Vec::new(),
    };
    let all: Vec<usize> = (0..n).collect();
    let width = b.level(&all, 0, 0);
    let triangles = b.parts.len();

    let singles = leftover_edges(n, &b.used);
    let views: Vec<&[usize]> = singles.iter().map(|p| p.vertices.as_slice()).collect();
    let g = parts_conflict_graph(config, &views);
    let sc = greedy_color(&g);
    b.colors.extend(sc.colors.iter().map(|&c| width + c));
    b.parts.extend(singles);

    let mut ids = b.colors.clone();
    ids.sort_unstable();
    ids.dedup();
    let colors: Vec<usize> = b.colors.iter().map(|c| ids.binary_search(c).expect("present")).collect();

    let non_triangle = b.parts.len() - triangles;
    let stats = Thm5Stats {
        n,
        threshold,
        colors: ids.len(),
        triangles,
        discarded_triangles: b.discarded,
        non_triangle_edges: non_triangle,
        non_triangle_fraction: non_triangle as f64 / (n * (n - 1) / 2) as f64,
        levels: b.levels,
    };
    let mut d = Decomposition::new(config.clone(), b.parts, "thm5");
    d.coloring = Some(colors);
    d.metadata.params.insert("n".into(), n.into());
    d.metadata.params.insert("threshold".into(), threshold.into());
    if let serde_json::Value::Object(map) = serde_json::to_value(&stats)? {
        d.metadata.stats.extend(map);
    }
    d.canonicalize();
    Ok((d, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chroma::verify_coloring;
    use crate::constructions::validate_decomposition;
    use crate::exactgeom::generate_general_position;

    #[test]
    fn small_instance_is_valid() {
        let cfg = generate_general_position(100, 1 << 20, 3).unwrap();
        let (d, stats) = thm5_construction(&cfg, DEFAULT_THRESHOLD).unwrap();
        assert!(validate_decomposition(&d).is_valid());
        assert!(verify_coloring(&d, d.coloring.as_ref().unwrap()).is_empty());
        assert_eq!(stats.levels.len(), 1);
        assert!(stats.triangles > 0);
        assert_eq!(d.palette_size(), Some(stats.colors));
    }

    #[test]
    fn below_threshold_is_all_edges() {
        let cfg = generate_general_position(30, 1 << 20, 3).unwrap();
        let (d, stats) = thm5_construction(&cfg, DEFAULT_THRESHOLD).unwrap();
        assert_eq!(stats.triangles, 0);
        assert_eq!(d.parts.len(), 435);
        assert!(verify_coloring(&d, d.coloring.as_ref().unwrap()).is_empty());
    }
}

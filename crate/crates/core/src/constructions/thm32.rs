use serde::Serialize;

use super::{Decomposition, Part, TAG_TRIANGLE};
use crate::designs::{cyclic_sts, difference_triples, DifferenceTripleTable};
use crate::error::{GeoError, Result};
use crate::exactgeom::{convex_cross, Configuration, Edge};

#[derive(Clone, Debug, Serialize)]
pub struct Thm32Output {
    pub decomposition: Decomposition,
    pub table: DifferenceTripleTable,
    /// Base rotation of each orbit, in table order.
    pub offsets: Vec<usize>,
}

fn block(n: usize, d: [usize; 3], s: usize) -> [usize; 3] {
    [s % n, (s + d[0]) % n, (s + d[0] + d[1]) % n]
}

fn blocks_compatible(n: usize, a: [usize; 3], b: [usize; 3]) -> bool {
    if a.iter().any(|x| b.contains(x)) {
        return false;
    }
    let edges = |t: [usize; 3]| [Edge::new(t[0], t[1]), Edge::new(t[0], t[2]), Edge::new(t[1], t[2])];
    edges(a).iter().all(|&e| edges(b).iter().all(|&f| !convex_cross(n, e, f)))
}

/// Base rotations making each box's color classes conflict-free. The class
/// with color `c` in box `t` holds, for every orbit `o` of the box, the block
/// at rotation `c + offset[o]`; by rotational symmetry it suffices that the
/// blocks at the offsets themselves are pairwise disjoint and non-crossing.
/// The first orbit of a box sits at rotation 0; later orbits take the
/// smallest rotations that work, with backtracking.
pub fn box_offsets(table: &DifferenceTripleTable) -> Result<Vec<usize>> {
    let n = table.n();
    let triples: Vec<([usize; 3], usize)> = table.triples().collect();
    let mut offsets = vec![0usize; triples.len()];
    for b in 1..=table.box_count() {
        let members: Vec<usize> = (0..triples.len()).filter(|&i| triples[i].1 == b).collect();
        let mut chosen: Vec<[usize; 3]> = Vec::new();
        if !place(n, &triples, &members, 0, &mut chosen, &mut offsets) {
            return Err(GeoError::SearchExhausted(format!("no conflict-free rotations for box {b}")));
        }
    }
    Ok(offsets)
}

fn place(
    n: usize,
    triples: &[([usize; 3], usize)],
    members: &[usize],
    at: usize,
    chosen: &mut Vec<[usize; 3]>,
    offsets: &mut [usize],
) -> bool {
    if at == members.len() {
        return true;
    }
    let o = members[at];
    let range = if at == 0 { 0..1 } else { 0..n };
    for s in range {
        let cand = block(n, triples[o].0, s);
        if chosen.iter().all(|&c| blocks_compatible(n, c, cand)) {
            chosen.push(cand);
            offsets[o] = s;
            if place(n, triples, members, at + 1, chosen, offsets) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Cyclic STS on convex `K_{18k+1}`; the block at rotation `s` of an orbit
/// in box `t` gets color `(s - offset) mod n + n (t - 1)`.
pub fn thm32_construction(k: usize) -> Result<Thm32Output> {
    let table = difference_triples(k)?;
    let n = table.n();
    let design = cyclic_sts(n, &table)?;
    let offsets = box_offsets(&table)?;
    let config = Configuration::convex(n)?;
    let mut parts = Vec::with_capacity(design.blocks.len());
    let mut coloring = Vec::with_capacity(design.blocks.len());
    for (o, (_, t)) in table.triples().enumerate() {
        for s in 0..n {
            parts.push(Part::new(design.blocks[o * n + s].clone(), TAG_TRIANGLE));
            coloring.push((s + n - offsets[o]) % n + n * (t - 1));
        }
    }
    let mut d = Decomposition::new(config, parts, "thm32");
    d.coloring = Some(coloring);
    d.metadata.params.insert("k".into(), k.into());
    d.metadata.params.insert("n".into(), n.into());
    d.metadata.stats.insert("blocks".into(), design.blocks.len().into());
    d.metadata.stats.insert("colors".into(), (n * table.box_count()).into());
    d.metadata.stats.insert("offsets".into(), serde_json::to_value(&offsets)?);
    d.canonicalize();
    Ok(Thm32Output { decomposition: d, table, offsets })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_counts() {
        let out = thm32_construction(4).unwrap();
        let d = &out.decomposition;
        assert_eq!(d.parts.len(), 876);
        assert_eq!(d.palette_size(), Some(219));
        assert_eq!(out.offsets[0], 0);
    }
}

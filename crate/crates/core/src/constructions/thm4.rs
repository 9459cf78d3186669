use super::{leftover_edges, mark_used, Decomposition, Part, TAG_TRIANGLE};
use crate::error::{GeoError, Result};
use crate::exactgeom::Configuration;

/// Convex `K_n` with `3 | n`: arcs `S1 = 0..t`, `S2 = t..2t`, `S3 = 2t..n`
/// (`t = n/3`). Each edge between local index `i` of `S2` and `j` of `S3`
/// joins vertex `(i + j) mod t` of `S1` in a triangle; the `t^2` triangles
/// form the distinguished family, every other edge is a singleton.
pub fn thm4_construction(n: usize) -> Result<Decomposition> {
    if n < 6 || !n.is_multiple_of(3) {
        return Err(GeoError::InvalidArgument(format!("matching triangles need 3 | n and n >= 6, got {n}")));
    }
    let t = n / 3;
    let config = Configuration::convex(n)?;
    let mut used = vec![false; n * (n - 1) / 2];
    let mut parts = Vec::with_capacity(t * t);
    for i in 0..t {
        for j in 0..t {
            let k = (i + j) % t;
            let p = Part::new(vec![k, t + i, 2 * t + j], TAG_TRIANGLE);
            mark_used(&mut used, &p);
            parts.push(p);
        }
    }
    let distinguished: Vec<usize> = (0..parts.len()).collect();
    parts.extend(leftover_edges(n, &used));
    let mut d = Decomposition::new(config, parts, "thm4");
    d.metadata.distinguished = distinguished;
    d.metadata.params.insert("n".into(), n.into());
    d.metadata.stats.insert("distinguished".into(), (t * t).into());
    d.canonicalize();
    Ok(d)
}

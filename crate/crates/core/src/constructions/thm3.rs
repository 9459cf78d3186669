use serde::Serialize;

use super::{leftover_edges, mark_used, Decomposition, Part};
use crate::designs::{FiniteField, ProjectivePlane};
use crate::error::{GeoError, Result};
use crate::exactgeom::{Configuration, RatPoint};
use crate::planecut::{six_fan_in, RegionAssignment};

#[derive(Clone, Debug, Serialize)]
pub struct Thm3Output {
    pub decomposition: Decomposition,
    /// Common point of the three fan lines.
    pub center: RatPoint,
    pub fan: RegionAssignment,
    /// The bottom strip `S1`, labelled `v4`.
    pub strip: Vec<usize>,
}

/// Builds `2 q^2` pairwise edge-disjoint `K4` parts on `n >= 7q + 6` points.
///
/// The lowest `q` points form `S1`; the next `6q + 6` are split by a
/// concurrent fan into `S2..S7` (clockwise, `q` each). A pencil of four lines
/// through a point `z` of the plane of order `q` labels them: the residue of
/// the first line labels `S2` (`v1`) and `S3` (`u1`), the second `S4`/`S5`,
/// the third `S6`/`S7`, the fourth `S1` (`v4`). The line through the `i`-th
/// point of the first residue and the `j`-th of the fourth meets the middle
/// two residues at `i'` and `j'`, giving `X(i,j) = {v1_i, v4_j, v2_i', v3_j'}`
/// and `Y(i,j) = {u1_i, v4_j, u2_i', u3_j'}`.
///
/// Without `q`, the largest supported prime power with `7q + 6 <= n` is used.
pub fn thm3_construction(config: &Configuration, q: Option<usize>) -> Result<Thm3Output> {
    let pts = config
        .points()
        .ok_or_else(|| GeoError::InvalidArgument("K4 construction needs a coordinates configuration".into()))?;
    let n = config.n();
    let q = match q {
        Some(q) => q,
        None => n
            .checked_sub(6)
            .map(|m| m / 7)
            .and_then(FiniteField::largest_supported_at_most)
            .ok_or_else(|| GeoError::InvalidArgument(format!("n = {n} is too small for the K4 construction")))?,
    };
    if q < 3 || !FiniteField::is_supported(q) {
        return Err(GeoError::InvalidArgument(format!("q must be a supported prime power >= 3, got {q}")));
    }
    if n < 7 * q + 6 {
        return Err(GeoError::InvalidArgument(format!("q = {q} needs n >= {}, got {n}", 7 * q + 6)));
    }

    // nearly horizontal cuts: order by y, then x
    let k = 2 * config.max_abs_coordinate() as i128 + 1;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| pts[i].y as i128 * k + pts[i].x as i128);
    let mut strip: Vec<usize> = order[..q].to_vec();
    strip.sort_unstable();
    let upper: Vec<usize> = order[q..7 * q + 6].to_vec();
    let fan = six_fan_in(config, &upper, q)?;
    let center = fan.center.expect("fan has a center");

    let plane = ProjectivePlane::new(q)?;
    let pencil = plane.pencil_through(0, 4)?;
    let res = &pencil.residues;
    let pos = |line: usize, point: usize| res[line].iter().position(|&p| p == point).expect("point on pencil line");
    let s = &fan.regions;
    let (v1, u1, v2, u2, v3, u3) = (&s[0], &s[1], &s[2], &s[3], &s[4], &s[5]);

    let mut used = vec![false; n * (n - 1) / 2];
    let mut parts = Vec::with_capacity(2 * q * q);
    for i in 0..q {
        for j in 0..q {
            let l = plane.line_through(res[0][i], res[3][j]);
            let ip = pos(1, plane.meet(l, pencil.lines[1]));
            let jp = pos(2, plane.meet(l, pencil.lines[2]));
            let x = Part::new(vec![v1[i], strip[j], v2[ip], v3[jp]], format!("X({},{})", i + 1, j + 1));
            let y = Part::new(vec![u1[i], strip[j], u2[ip], u3[jp]], format!("Y({},{})", i + 1, j + 1));
            for p in [x, y] {
                mark_used(&mut used, &p);
                parts.push(p);
            }
        }
    }
    let distinguished: Vec<usize> = (0..parts.len()).collect();
    parts.extend(leftover_edges(n, &used));

    let mut d = Decomposition::new(config.clone(), parts, "thm3");
    d.metadata.distinguished = distinguished;
    d.metadata.params.insert("q".into(), q.into());
    d.metadata.params.insert("n".into(), n.into());
    d.metadata.stats.insert("distinguished".into(), (2 * q * q).into());
    d.metadata.stats.insert("center".into(), serde_json::to_value(center)?);
    d.metadata.stats.insert("spill".into(), (n - 7 * q - 6 + fan.spill.len()).into());
    d.canonicalize();
    Ok(Thm3Output { decomposition: d, center, fan, strip })
}

//! Discrete plane partitions by integer cut lines.
//!
//! Three searches live here: three cuts with two of them parallel giving six
//! parts of at least `ceil(n/6) - 1` points, three concurrent cuts giving six
//! angular sectors with `q` points each, and the nine-region refinement used by
//! the recursive triangle decomposition. All searches enumerate a fixed,
//! ordered candidate list and return the first valid partition, so results do
//! not depend on scheduling.
//!
//! Every cut is an integer line `a x + b y = c` placed strictly between input
//! points; no point of the configuration ever lies on a cut.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{GeoError, Result};
use crate::exactgeom::{orient, Configuration, Point, RatPoint};

/// Oriented line `a x + b y = c`; the positive side is `a x + b y > c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutLine {
    #[serde(with = "crate::wide")]
    pub a: i128,
    #[serde(with = "crate::wide")]
    pub b: i128,
    #[serde(with = "crate::wide")]
    pub c: i128,
}

impl CutLine {
    #[inline]
    pub fn eval(&self, p: Point) -> i128 {
        self.a * p.x as i128 + self.b * p.y as i128 - self.c
    }

    /// Side of `p`: -1, 0 (on the line) or +1.
    #[inline]
    pub fn side(&self, p: Point) -> i8 {
        self.eval(p).signum() as i8
    }

    pub fn is_parallel(&self, other: &CutLine) -> bool {
        self.a * other.b == self.b * other.a
    }

    pub fn contains_rat(&self, p: RatPoint) -> bool {
        self.a * p.x + self.b * p.y == self.c * p.w
    }
}

/// Vertex buckets produced by a cut arrangement.
///
/// `patterns[i][j]` is the side of cut `j` required of every member of
/// region `i`; 0 means the cut does not constrain that region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionAssignment {
    pub regions: Vec<Vec<usize>>,
    pub patterns: Vec<Vec<i8>>,
    pub spill: Vec<usize>,
    pub cuts: Vec<CutLine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<RatPoint>,
}

impl RegionAssignment {
    /// Recounts the assignment against its own cuts. `domain` is the vertex
    /// set the assignment was built for.
    pub fn check(&self, config: &Configuration, domain: &[usize]) -> std::result::Result<(), String> {
        let pts = config.points().ok_or("region assignments need coordinates")?;
        let mut seen = vec![false; config.n()];
        for &v in self.regions.iter().flatten().chain(self.spill.iter()) {
            if v >= seen.len() || seen[v] {
                return Err(format!("vertex {v} assigned twice or out of range"));
            }
            seen[v] = true;
        }
        let mut in_domain = vec![false; config.n()];
        for &v in domain {
            in_domain[v] = true;
            if !seen[v] {
                return Err(format!("vertex {v} neither in a region nor spilled"));
            }
        }
        if let Some(v) = (0..seen.len()).find(|&v| seen[v] && !in_domain[v]) {
            return Err(format!("vertex {v} is outside the domain"));
        }
        if self.patterns.len() != self.regions.len() {
            return Err("pattern count differs from region count".into());
        }
        for (k, cut) in self.cuts.iter().enumerate() {
            if let Some(&v) = domain.iter().find(|&&v| cut.side(pts[v]) == 0) {
                return Err(format!("vertex {v} lies on cut {k}"));
            }
        }
        for (r, (members, pattern)) in self.regions.iter().zip(&self.patterns).enumerate() {
            if pattern.len() != self.cuts.len() {
                return Err(format!("region {r} pattern has wrong length"));
            }
            for &v in members {
                for (k, (&want, cut)) in pattern.iter().zip(&self.cuts).enumerate() {
                    if want != 0 && cut.side(pts[v]) != want {
                        return Err(format!("vertex {v} of region {r} is on the wrong side of cut {k}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.regions.iter().map(Vec::len).collect()
    }
}

#[inline]
fn project(p: Point, normal: (i128, i128)) -> i128 {
    normal.0 * p.x as i128 + normal.1 * p.y as i128
}

/// Line with normal `normal` strictly between projection values `lo < hi`;
/// points projecting to at most `lo` fall on the negative side.
fn line_between(normal: (i128, i128), lo: i128, hi: i128) -> CutLine {
    debug_assert!(lo < hi);
    CutLine { a: 2 * normal.0, b: 2 * normal.1, c: lo + hi }
}

/// Normals for candidate cut directions. The first one yields pairwise
/// distinct projections for every configuration with the given coordinate
/// bound (lines are nearly axis-parallel); the rest sweep the half-turn.
fn candidate_normals(max_abs: i64, first: (bool, bool), count: usize) -> Vec<(i128, i128)> {
    let k = 2 * max_abs as i128 + 1;
    let mut out = Vec::with_capacity(count + 1);
    let base = match first {
        // normal close to (1, 0): lines close to vertical
        (true, _) => (k, 1),
        // normal close to (0, 1): lines close to horizontal
        (false, _) => (1, k),
    };
    out.push(base);
    const R: f64 = 4096.0;
    for i in 1..count {
        let t = std::f64::consts::PI * i as f64 / count as f64;
        let n = ((R * t.cos()).round() as i128, (R * t.sin()).round() as i128);
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out
}

/// Domain sorted by projection, or `None` when two points tie.
fn sorted_by_projection(pts: &[Point], domain: &[usize], normal: (i128, i128)) -> Vec<(i128, usize)> {
    let mut v: Vec<(i128, usize)> = domain.iter().map(|&i| (project(pts[i], normal), i)).collect();
    v.sort_unstable();
    v
}

/// Cut separating the first `k` entries of a projection-sorted list from the
/// rest, if no tie sits on the boundary.
fn split_after(sorted: &[(i128, usize)], normal: (i128, i128), k: usize) -> Option<CutLine> {
    let lo = if k == 0 { sorted.first()?.0 - 1 } else { sorted[k - 1].0 };
    let hi = if k == sorted.len() { sorted.last()?.0 + 1 } else { sorted[k].0 };
    (lo < hi).then(|| line_between(normal, lo, hi))
}

/// Line through `pa` and `pb`, rotated and shifted off them so that `pa`
/// lands on side `sa`, `pb` on side `sb`, and every other point keeps its
/// side of the original line.
fn nudged_line(pa: Point, pb: Point, sa: i128, sb: i128, all: &[Point]) -> CutLine {
    let d = (pb.x as i128 - pa.x as i128, pb.y as i128 - pa.y as i128);
    let normal = (-d.1, d.0);
    let dd = d.0 * d.0 + d.1 * d.1;
    let m = all
        .iter()
        .map(|p| (d.0 * (p.x as i128 - pa.x as i128) + d.1 * (p.y as i128 - pa.y as i128)).abs())
        .max()
        .unwrap_or(0);
    let w = dd + 2 * m;
    // G(P) = 2W f(P) + sa |D|^2 + (sb - sa) D.(P - pa), f(P) = N.(P - pa)
    let ds = sb - sa;
    let a = 2 * w * normal.0 + ds * d.0;
    let b = 2 * w * normal.1 + ds * d.1;
    let pa_x = pa.x as i128;
    let pa_y = pa.y as i128;
    let k0 = -2 * w * (normal.0 * pa_x + normal.1 * pa_y) + sa * dd - ds * (d.0 * pa_x + d.1 * pa_y);
    CutLine { a, b, c: -k0 }
}

/// A six-part arrangement: parallel cuts `l1`, `l2` bounding three strips
/// and a transversal `l3`. `parts[0..3]` lie on the positive side of `l3`
/// (strips in order), `parts[3..6]` on the negative side.
#[derive(Clone, Debug)]
struct SixParts {
    cuts: [CutLine; 3],
    strips: [Vec<usize>; 3],
    parts: [Vec<usize>; 6],
}

const STRIP_PATTERNS: [[i8; 2]; 3] = [[-1, -1], [1, -1], [1, 1]];

impl SixParts {
    fn into_assignment(self) -> RegionAssignment {
        let patterns = (0..6)
            .map(|r| {
                let s = STRIP_PATTERNS[r % 3];
                vec![s[0], s[1], if r < 3 { 1 } else { -1 }]
            })
            .collect();
        RegionAssignment {
            regions: self.parts.to_vec(),
            patterns,
            spill: Vec::new(),
            cuts: self.cuts.to_vec(),
            center: None,
        }
    }
}

/// Enumerates six-part arrangements of `domain` in a fixed order and hands
/// each one whose part sizes satisfy `accept` to `visit`, stopping at the
/// first `Some`.
fn search_six_parts<T>(
    config: &Configuration,
    domain: &[usize],
    accept: impl Fn(&[usize; 6]) -> bool,
    mut visit: impl FnMut(SixParts) -> Option<T>,
) -> Option<T> {
    let pts = config.points()?;
    let n = domain.len();
    let outer = n / 3;
    for normal in candidate_normals(config.max_abs_coordinate(), (true, false), 24) {
        let sorted = sorted_by_projection(pts, domain, normal);
        let (Some(l1), Some(l2)) = (split_after(&sorted, normal, outer), split_after(&sorted, normal, n - outer))
        else {
            continue;
        };
        // strip id per local position: 0 = A, 1 = M, 2 = B
        let strip_of = |pos: usize| {
            if pos < outer {
                0
            } else if pos < n - outer {
                1
            } else {
                2
            }
        };
        let order: Vec<usize> = sorted.iter().map(|&(_, v)| v).collect();
        let strips: [Vec<usize>; 3] = {
            let mut s = [Vec::new(), Vec::new(), Vec::new()];
            for (pos, &v) in order.iter().enumerate() {
                s[strip_of(pos)].push(v);
            }
            for x in s.iter_mut() {
                x.sort_unstable();
            }
            s
        };
        let strip_sizes = [strips[0].len(), strips[1].len(), strips[2].len()];
        let pivots: Vec<usize> = (0..n).filter(|&pos| strip_of(pos) != 1).collect();
        let mut side = vec![0i8; n];
        for (ia, &pa_pos) in pivots.iter().enumerate() {
            for &pb_pos in &pivots[ia + 1..] {
                let (pa, pb) = (pts[order[pa_pos]], pts[order[pb_pos]]);
                let mut plus = [0usize; 3];
                for pos in 0..n {
                    side[pos] = if pos == pa_pos || pos == pb_pos { 0 } else { orient(pa, pb, pts[order[pos]]) };
                    if side[pos] > 0 {
                        plus[strip_of(pos)] += 1;
                    }
                }
                for (sa, sb) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
                    let mut up = plus;
                    if sa > 0 {
                        up[strip_of(pa_pos)] += 1;
                    }
                    if sb > 0 {
                        up[strip_of(pb_pos)] += 1;
                    }
                    let sizes =
                        [up[0], up[1], up[2], strip_sizes[0] - up[0], strip_sizes[1] - up[1], strip_sizes[2] - up[2]];
                    if !accept(&sizes) {
                        continue;
                    }
                    let l3 = nudged_line(pa, pb, sa as i128, sb as i128, pts);
                    let mut parts: [Vec<usize>; 6] = Default::default();
                    for (pos, &v) in order.iter().enumerate() {
                        let upper = l3.side(pts[v]) > 0;
                        parts[strip_of(pos) + if upper { 0 } else { 3 }].push(v);
                    }
                    for p in parts.iter_mut() {
                        p.sort_unstable();
                    }
                    debug_assert_eq!(parts.iter().map(Vec::len).collect::<Vec<_>>(), sizes.to_vec());
                    let six = SixParts { cuts: [l1, l2, l3], strips: strips.clone(), parts };
                    if let Some(t) = visit(six) {
                        return Some(t);
                    }
                }
            }
        }
    }
    None
}

/// Three cuts, two of them parallel, dividing the configuration into six
/// parts of at least `ceil(n/6) - 1` points each.
pub fn six_parts_two_parallel(config: &Configuration) -> Result<RegionAssignment> {
    let domain: Vec<usize> = (0..config.n()).collect();
    six_parts_two_parallel_in(config, &domain)
}

pub fn six_parts_two_parallel_in(config: &Configuration, domain: &[usize]) -> Result<RegionAssignment> {
    require_coordinates(config)?;
    let n = domain.len();
    if n < 6 {
        return Err(GeoError::InvalidArgument(format!("six parts need n >= 6, got {n}")));
    }
    let t = n.div_ceil(6) - 1;
    search_six_parts(config, domain, |s| s.iter().all(|&c| c >= t), |six| Some(six.into_assignment())).ok_or_else(
        || GeoError::SearchExhausted(format!("no two-parallel six-part cut with parts >= {t} among {n} points")),
    )
}

fn require_coordinates(config: &Configuration) -> Result<()> {
    if config.is_convex() {
        Err(GeoError::InvalidArgument("plane cuts need a coordinates configuration".into()))
    } else {
        Ok(())
    }
}

// --- concurrent fan -------------------------------------------------------

#[inline]
fn upper_half(v: (i128, i128)) -> bool {
    v.1 > 0 || (v.1 == 0 && v.0 > 0)
}

#[inline]
fn cross(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

/// Angular comparison on `[0, 2pi)` measured from the positive x axis.
fn angle_cmp(a: (i128, i128), b: (i128, i128)) -> Ordering {
    match (upper_half(a), upper_half(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => 0.cmp(&cross(a, b)),
    }
}

fn neg(v: (i128, i128)) -> (i128, i128) {
    (-v.0, -v.1)
}

/// Line through the rational center with direction `g`; positive side is to
/// the left of `g`.
fn line_through_center(center: RatPoint, g: (i128, i128)) -> CutLine {
    CutLine { a: -center.w * g.1, b: center.w * g.0, c: -g.1 * center.x + g.0 * center.y }
}

/// Tries to place three lines through `center` leaving at least `q` points
/// of `domain` in each of the six sectors. Sectors are returned in
/// counterclockwise order starting just after the first line.
/// Three fan directions and the six sectors they bound.
type Fan = ([(i128, i128); 3], [Vec<usize>; 6]);

fn fan_at(pts: &[Point], domain: &[usize], center: RatPoint, q: usize) -> Option<Fan> {
    let m = domain.len();
    let w: Vec<(i128, i128)> = domain
        .iter()
        .map(|&i| (center.w * pts[i].x as i128 - center.x, center.w * pts[i].y as i128 - center.y))
        .collect();
    let mut dirs: Vec<(i128, i128)> = w.iter().map(|&v| if upper_half(v) { v } else { neg(v) }).collect();
    dirs.sort_by(|&a, &b| angle_cmp(a, b));
    dirs.dedup_by(|a, b| cross(*a, *b) == 0);
    if dirs.len() < 3 {
        return None;
    }
    let mut gaps: Vec<(i128, i128)> = dirs.windows(2).map(|p| (p[0].0 + p[1].0, p[0].1 + p[1].1)).collect();
    let wrap = (dirs[dirs.len() - 1].0 - dirs[0].0, dirs[dirs.len() - 1].1 - dirs[0].1);
    gaps.push(if upper_half(wrap) { wrap } else { neg(wrap) });
    gaps.sort_by(|&a, &b| angle_cmp(a, b));

    let upper_count = w.iter().filter(|&&v| upper_half(v)).count();
    let before = |g: (i128, i128)| w.iter().filter(|&&v| upper_half(v) && cross(v, g) > 0).count();
    let before_opp = |g: (i128, i128)| {
        let ng = neg(g);
        upper_count + w.iter().filter(|&&v| !upper_half(v) && cross(v, ng) > 0).count()
    };
    let p: Vec<usize> = gaps.iter().map(|&g| before(g)).collect();
    let qq: Vec<usize> = gaps.iter().map(|&g| before_opp(g)).collect();
    let gcount = gaps.len();
    for g1 in 0..gcount {
        let Some(g2) = (g1 + 1..gcount).find(|&g| p[g] - p[g1] >= q && qq[g] - qq[g1] >= q) else {
            continue;
        };
        let Some(g3) = (g2 + 1..gcount).find(|&g| p[g] - p[g2] >= q && qq[g] - qq[g2] >= q) else {
            continue;
        };
        let s3 = qq[g1] as isize - p[g3] as isize;
        let s6 = (m - qq[g3] + p[g1]) as isize;
        if s3 < q as isize || s6 < q as isize {
            continue;
        }
        let lines = [gaps[g1], gaps[g2], gaps[g3]];
        let rays = [lines[0], lines[1], lines[2], neg(lines[0]), neg(lines[1]), neg(lines[2])];
        let mut sectors: [Vec<usize>; 6] = Default::default();
        for (k, &v) in w.iter().enumerate() {
            let s = (0..6)
                .find(|&s| cross(rays[s], v) > 0 && cross(v, rays[(s + 1) % 6]) > 0)
                .expect("every point lies strictly inside one sector");
            sectors[s].push(domain[k]);
        }
        return Some((lines, sectors));
    }
    None
}

/// Three concurrent cuts splitting `m >= 6q` points into six sectors of
/// exactly `q` labelled points each; the rest are spilled. Sectors are
/// listed clockwise around the common point.
pub fn six_fan(config: &Configuration, q: usize) -> Result<RegionAssignment> {
    let domain: Vec<usize> = (0..config.n()).collect();
    six_fan_in(config, &domain, q)
}

pub fn six_fan_in(config: &Configuration, domain: &[usize], q: usize) -> Result<RegionAssignment> {
    require_coordinates(config)?;
    let pts = config.points().expect("coordinates");
    let m = domain.len();
    if q == 0 || m < 6 * q {
        return Err(GeoError::InvalidArgument(format!("six_fan needs q >= 1 and m >= 6q (m = {m}, q = {q})")));
    }
    // halving-line candidates
    let mut halving: Vec<CutLine> = Vec::new();
    for normal in candidate_normals(config.max_abs_coordinate(), (false, false), 48) {
        let sorted = sorted_by_projection(pts, domain, normal);
        let mut ks = vec![m / 2];
        if m % 2 == 1 {
            ks.push(m / 2 + 1);
        }
        for k in ks {
            if let Some(l) = split_after(&sorted, normal, k) {
                halving.push(l);
            }
        }
    }
    for i in 0..halving.len() {
        for j in i + 1..halving.len() {
            let (l1, l2) = (halving[i], halving[j]);
            let det = l1.a * l2.b - l2.a * l1.b;
            if det == 0 {
                continue;
            }
            let center = RatPoint::new(l1.c * l2.b - l2.c * l1.b, l1.a * l2.c - l2.a * l1.c, det);
            let Some((lines, sectors)) = fan_at(pts, domain, center, q) else {
                continue;
            };
            let cuts: Vec<CutLine> = lines.iter().map(|&g| line_through_center(center, g)).collect();
            // clockwise listing: s1, s6, s5, s4, s3, s2
            let cw = [0usize, 5, 4, 3, 2, 1];
            let mut regions = Vec::with_capacity(6);
            let mut patterns = Vec::with_capacity(6);
            let mut spill = Vec::new();
            for &s in &cw {
                let mut members = sectors[s].clone();
                members.sort_unstable();
                spill.extend(members.drain(q..));
                patterns.push(cuts.iter().map(|c| c.side(pts[members[0]])).collect());
                regions.push(members);
            }
            spill.sort_unstable();
            return Ok(RegionAssignment { regions, patterns, spill, cuts, center: Some(center) });
        }
    }
    Err(GeoError::SearchExhausted(format!("no concurrent six-sector fan with {q} points per sector among {m} points")))
}

// --- nine regions ---------------------------------------------------------

/// Nine labelled regions of exactly `q` points plus the three parallel
/// strips `T1, T2, T3` (all domain points of each strip, spilled or not).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NineRegions {
    pub assignment: RegionAssignment,
    pub strips: [Vec<usize>; 3],
}

/// Splits the part on side `side_sign` of `l3` with a parallel cut so that
/// the `q` points farthest from `l3` lie beyond it. Returns the cut and the
/// far/near point lists.
fn parallel_subcut(
    pts: &[Point],
    part: &[usize],
    l3: &CutLine,
    side_sign: i8,
    q: usize,
) -> Option<(CutLine, Vec<usize>, Vec<usize>)> {
    let normal = (l3.a, l3.b);
    let mut v: Vec<(i128, usize)> = part.iter().map(|&i| (project(pts[i], normal), i)).collect();
    // farthest from l3 first
    if side_sign > 0 {
        v.sort_unstable_by(|a, b| b.cmp(a));
    } else {
        v.sort_unstable();
    }
    if v.len() < q || q == 0 {
        return None;
    }
    let last_far = v[q - 1].0;
    let first_near = if q < v.len() {
        v[q].0
    } else {
        // nothing left near l3: place the cut between the far block and l3
        if side_sign > 0 {
            l3.c.min(last_far - 1)
        } else {
            l3.c.max(last_far + 1)
        }
    };
    if last_far == first_near {
        return None;
    }
    let (lo, hi) = if last_far < first_near { (last_far, first_near) } else { (first_near, last_far) };
    let cut = if q < v.len() {
        line_between(normal, lo, hi)
    } else if side_sign > 0 {
        CutLine { a: 2 * normal.0, b: 2 * normal.1, c: 2 * last_far - 1 }
    } else {
        CutLine { a: 2 * normal.0, b: 2 * normal.1, c: 2 * last_far + 1 }
    };
    let mut far: Vec<usize> = v[..q].iter().map(|&(_, i)| i).collect();
    let mut near: Vec<usize> = v[q..].iter().map(|&(_, i)| i).collect();
    far.sort_unstable();
    near.sort_unstable();
    Some((cut, far, near))
}

/// Regions `R1..R9` of exactly `q` points: `R1..R6` are the far sub-parts of
/// the six parts, `R7 = R1' + R4'`, `R8 = R2' + R5'`, `R9 = R3' + R6'`
/// (truncated to `q` points by vertex index).
pub fn nine_regions(config: &Configuration, q: usize) -> Result<NineRegions> {
    let domain: Vec<usize> = (0..config.n()).collect();
    nine_regions_in(config, &domain, q)
}

pub fn nine_regions_in(config: &Configuration, domain: &[usize], q: usize) -> Result<NineRegions> {
    require_coordinates(config)?;
    let pts = config.points().expect("coordinates");
    let n = domain.len();
    if q == 0 || n < 9 * q {
        return Err(GeoError::InvalidArgument(format!("nine regions need q >= 1 and n >= 9q (n = {n}, q = {q})")));
    }
    let found = search_six_parts(
        config,
        domain,
        |s| s.iter().all(|&c| c >= q) && (0..3).all(|t| s[t] + s[t + 3] >= 3 * q),
        |six| {
            let l3 = six.cuts[2];
            let mut subcuts = Vec::with_capacity(6);
            for (i, part) in six.parts.iter().enumerate() {
                let sgn = if i < 3 { 1 } else { -1 };
                subcuts.push(parallel_subcut(pts, part, &l3, sgn, q)?);
            }
            Some((six, subcuts))
        },
    );
    let Some((six, subcuts)) = found else {
        return Err(GeoError::SearchExhausted(format!(
            "no nine-region arrangement with q = {q} among {n} points (try a smaller q)"
        )));
    };
    let mut cuts: Vec<CutLine> = six.cuts.to_vec();
    cuts.extend(subcuts.iter().map(|s| s.0));
    let ncuts = cuts.len();
    let mut regions = Vec::with_capacity(9);
    let mut patterns = Vec::with_capacity(9);
    for (i, (cut, far, _)) in subcuts.iter().enumerate() {
        let strip = STRIP_PATTERNS[i % 3];
        let mut pat = vec![0i8; ncuts];
        pat[0] = strip[0];
        pat[1] = strip[1];
        pat[2] = if i < 3 { 1 } else { -1 };
        pat[3 + i] = cut.side(pts[far[0]]);
        regions.push(far.clone());
        patterns.push(pat);
    }
    let mut spill = Vec::new();
    for t in 0..3 {
        let (up, down) = (&subcuts[t], &subcuts[t + 3]);
        let mut band: Vec<usize> = up.2.iter().chain(down.2.iter()).copied().collect();
        band.sort_unstable();
        spill.extend(band.drain(q..));
        let strip = STRIP_PATTERNS[t];
        let mut pat = vec![0i8; ncuts];
        pat[0] = strip[0];
        pat[1] = strip[1];
        // near side of both sub-cuts of this strip
        pat[3 + t] = -up.0.side(pts[up.1[0]]);
        pat[3 + t + 3] = -down.0.side(pts[down.1[0]]);
        regions.push(band);
        patterns.push(pat);
    }
    spill.sort_unstable();
    let assignment = RegionAssignment { regions, patterns, spill, cuts, center: None };
    Ok(NineRegions { assignment, strips: six.strips })
}

// --- prime powers ---------------------------------------------------------

/// `Some(p)` when `x = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power_base(x: usize) -> Option<usize> {
    if x < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= x {
        if x.is_multiple_of(p) {
            let mut y = x;
            while y.is_multiple_of(p) {
                y /= p;
            }
            return (y == 1).then_some(p);
        }
        p += 1;
    }
    Some(x)
}

pub fn is_prime_power(x: usize) -> bool {
    prime_power_base(x).is_some()
}

/// Largest prime power not exceeding `x` (`x >= 2`).
pub fn prime_power_below(x: usize) -> Result<usize> {
    if x < 2 {
        return Err(GeoError::InvalidArgument(format!("prime_power_below needs x >= 2, got {x}")));
    }
    Ok((2..=x).rev().find(|&y| is_prime_power(y)).expect("2 is a prime power"))
}

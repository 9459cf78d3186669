//! Exact integer predicates and the part-conflict relation.
//!
//! Every predicate is evaluated in `i128`. With `|x|, |y| <= COORD_BOUND`
//! (2^24) the orientation determinant stays below 2^52, and the derived cut
//! lines built in [`crate::planecut`] stay below 2^110, so nothing here can
//! overflow. Configurations that violate the bound are rejected when they are
//! constructed.

use std::collections::HashMap;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GeoError, Result};

/// Largest admissible absolute coordinate.
pub const COORD_BOUND: i64 = 1 << 24;

/// Default coordinate box used by the generator.
pub const DEFAULT_GEN_BOUND: i64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl From<[i64; 2]> for Point {
    fn from(v: [i64; 2]) -> Self {
        Point { x: v[0], y: v[1] }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// A point with rational coordinates `(x / w, y / w)`, `w > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatPoint {
    #[serde(with = "crate::wide")]
    pub x: i128,
    #[serde(with = "crate::wide")]
    pub y: i128,
    #[serde(with = "crate::wide")]
    pub w: i128,
}

impl RatPoint {
    pub fn new(x: i128, y: i128, w: i128) -> Self {
        assert!(w != 0, "rational point with zero denominator");
        let (x, y, w) = if w < 0 { (-x, -y, -w) } else { (x, y, w) };
        let g = x.gcd(&y).gcd(&w);
        if g > 1 {
            RatPoint { x: x / g, y: y / g, w: w / g }
        } else {
            RatPoint { x, y, w }
        }
    }

    pub fn to_f64(self) -> (f64, f64) {
        (self.x as f64 / self.w as f64, self.y as f64 / self.w as f64)
    }

    pub fn is_point(self, p: Point) -> bool {
        self.x == p.x as i128 * self.w && self.y == p.y as i128 * self.w
    }
}

impl From<Point> for RatPoint {
    fn from(p: Point) -> Self {
        RatPoint { x: p.x as i128, y: p.y as i128, w: 1 }
    }
}

#[inline]
fn sign(v: i128) -> i8 {
    match v.cmp(&0) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

/// Sign of the signed area of triangle `pqr`: +1 for a counterclockwise turn.
#[inline]
pub fn orient(p: Point, q: Point, r: Point) -> i8 {
    let (px, py) = (p.x as i128, p.y as i128);
    let det = (q.x as i128 - px) * (r.y as i128 - py) - (q.y as i128 - py) * (r.x as i128 - px);
    sign(det)
}

/// Orientation of `p, q` and a rational third point.
pub fn orient_rat(p: Point, q: Point, r: RatPoint) -> i8 {
    let (px, py) = (p.x as i128 * r.w, p.y as i128 * r.w);
    let (qx, qy) = (q.x as i128 * r.w, q.y as i128 * r.w);
    sign((qx - px) * (r.y - py) - (qy - py) * (r.x - px))
}

/// True iff the open segments `ab` and `cd` meet. Shared endpoints never count.
#[inline]
pub fn proper_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    if o1 * o2 >= 0 {
        return false;
    }
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o3 * o4 < 0
}

/// Closed containment of `p` in triangle `abc` (boundary counts).
pub fn triangle_contains_closed(a: Point, b: Point, c: Point, p: RatPoint) -> bool {
    let s = [orient_rat(a, b, p), orient_rat(b, c, p), orient_rat(c, a, p)];
    !(s.iter().any(|&v| v > 0) && s.iter().any(|&v| v < 0))
}

/// Strict interior containment of `p` in triangle `abc`.
pub fn triangle_contains_strict(a: Point, b: Point, c: Point, p: RatPoint) -> bool {
    let s = [orient_rat(a, b, p), orient_rat(b, c, p), orient_rat(c, a, p)];
    s.iter().all(|&v| v > 0) || s.iter().all(|&v| v < 0)
}

/// An undirected edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "loop edge at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }

    /// Index of the edge in the colex enumeration of `C(n, 2)` pairs.
    #[inline]
    pub fn index(self) -> usize {
        self.v * (self.v - 1) / 2 + self.u
    }

    pub fn length(self, n: usize) -> usize {
        let d = self.v - self.u;
        d.min(n - d)
    }
}

/// Crossing rule for vertices `0..n` in convex cyclic order: exactly one
/// endpoint of `e2` lies strictly between the endpoints of `e1`.
#[inline]
pub fn convex_cross(n: usize, e1: Edge, e2: Edge) -> bool {
    debug_assert!(e1.v < n && e2.v < n);
    if e1.shares_endpoint(e2) {
        return false;
    }
    let inside = |w: usize| e1.u < w && w < e1.v;
    inside(e2.u) != inside(e2.v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Coordinates,
    Convex,
}

/// The vertex model of a complete geometric graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Configuration {
    /// Integer points in general position.
    Coordinates(Vec<Point>),
    /// Vertices `0..n` in clockwise convex order, no coordinates stored.
    Convex(usize),
}

#[derive(Serialize, Deserialize)]
struct ConfigRepr {
    mode: Mode,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    points: Option<Vec<Point>>,
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            Configuration::Coordinates(p) => {
                ConfigRepr { mode: Mode::Coordinates, n: p.len(), points: Some(p.clone()) }
            }
            Configuration::Convex(n) => ConfigRepr { mode: Mode::Convex, n: *n, points: None },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let repr = ConfigRepr::deserialize(d)?;
        let built = match (repr.mode, repr.points) {
            (Mode::Convex, None) => Configuration::convex(repr.n),
            (Mode::Convex, Some(_)) => return Err(D::Error::custom("convex configurations carry no points")),
            (Mode::Coordinates, Some(p)) => {
                if p.len() != repr.n {
                    return Err(D::Error::custom(format!("n = {} but {} points given", repr.n, p.len())));
                }
                Configuration::coordinates(p)
            }
            (Mode::Coordinates, None) => return Err(D::Error::custom("coordinates mode requires points")),
        };
        built.map_err(D::Error::custom)
    }
}

impl Configuration {
    /// Validates the bound, distinctness and general position.
    pub fn coordinates(points: Vec<Point>) -> Result<Self> {
        for p in &points {
            if p.x.abs() > COORD_BOUND || p.y.abs() > COORD_BOUND {
                return Err(GeoError::CoordinateBound { x: p.x, y: p.y, bound: COORD_BOUND });
            }
        }
        check_general_position(&points)?;
        Ok(Configuration::Coordinates(points))
    }

    pub fn convex(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(GeoError::InvalidConfiguration(format!("convex configuration needs n >= 3, got {n}")));
        }
        Ok(Configuration::Convex(n))
    }

    pub fn n(&self) -> usize {
        match self {
            Configuration::Coordinates(p) => p.len(),
            Configuration::Convex(n) => *n,
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Configuration::Coordinates(_) => Mode::Coordinates,
            Configuration::Convex(_) => Mode::Convex,
        }
    }

    pub fn is_convex(&self) -> bool {
        matches!(self, Configuration::Convex(_))
    }

    pub fn points(&self) -> Option<&[Point]> {
        match self {
            Configuration::Coordinates(p) => Some(p),
            Configuration::Convex(_) => None,
        }
    }

    /// Coordinates of vertex `i`; panics in convex mode.
    pub fn point(&self, i: usize) -> Point {
        match self {
            Configuration::Coordinates(p) => p[i],
            Configuration::Convex(_) => panic!("convex configurations have no coordinates"),
        }
    }

    /// Proper crossing of two edges; shared endpoints are not crossings.
    #[inline]
    pub fn edges_cross(&self, e1: Edge, e2: Edge) -> bool {
        match self {
            Configuration::Convex(n) => convex_cross(*n, e1, e2),
            Configuration::Coordinates(p) => {
                !e1.shares_endpoint(e2) && proper_cross(p[e1.u], p[e1.v], p[e2.u], p[e2.v])
            }
        }
    }

    /// Two parts conflict iff they share a vertex or an edge of one properly
    /// crosses an edge of the other. Vertex lists must be sorted.
    pub fn parts_conflict(&self, a: &[usize], b: &[usize]) -> bool {
        if sorted_intersect(a, b) {
            return true;
        }
        for (i, &a0) in a.iter().enumerate() {
            for &a1 in &a[i + 1..] {
                let ea = Edge::new(a0, a1);
                for (j, &b0) in b.iter().enumerate() {
                    for &b1 in &b[j + 1..] {
                        if self.edges_cross(ea, Edge::new(b0, b1)) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Sub-configuration on the given vertices (coordinates mode only).
    pub fn restrict(&self, vertices: &[usize]) -> Result<Configuration> {
        match self {
            Configuration::Coordinates(p) => Ok(Configuration::Coordinates(vertices.iter().map(|&i| p[i]).collect())),
            Configuration::Convex(_) => {
                Err(GeoError::InvalidArgument("restriction is only defined in coordinates mode".into()))
            }
        }
    }

    /// Largest absolute coordinate (0 in convex mode).
    pub fn max_abs_coordinate(&self) -> i64 {
        self.points().map(|p| p.iter().map(|q| q.x.abs().max(q.y.abs())).max().unwrap_or(0)).unwrap_or(0)
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn primitive_direction(from: Point, to: Point) -> (i64, i64) {
    let (mut dx, mut dy) = (to.x - from.x, to.y - from.y);
    let g = dx.gcd(&dy);
    dx /= g;
    dy /= g;
    if dx < 0 || (dx == 0 && dy < 0) {
        (-dx, -dy)
    } else {
        (dx, dy)
    }
}

/// Rejects duplicates and collinear triples in `O(n^2)` expected time.
pub fn check_general_position(points: &[Point]) -> Result<()> {
    let mut seen: HashMap<Point, usize> = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(GeoError::DuplicatePoint(j, i));
        }
        seen.insert(*p, i);
    }
    let mut dirs: HashMap<(i64, i64), usize> = HashMap::with_capacity(points.len());
    for (i, &p) in points.iter().enumerate() {
        dirs.clear();
        for (j, &q) in points.iter().enumerate().skip(i + 1) {
            if let Some(&k) = dirs.get(&primitive_direction(p, q)) {
                return Err(GeoError::Collinear(i, k, j));
            }
            dirs.insert(primitive_direction(p, q), j);
        }
    }
    Ok(())
}

/// `n` distinct integer points in `[-bound, bound]^2` with no three collinear,
/// drawn by rejection from a seeded ChaCha stream.
pub fn generate_general_position(n: usize, bound: i64, seed: u64) -> Result<Configuration> {
    if n == 0 {
        return Err(GeoError::InvalidArgument("n must be at least 1".into()));
    }
    if !(1..=COORD_BOUND).contains(&bound) {
        return Err(GeoError::InvalidArgument(format!("bound {bound} outside 1..={COORD_BOUND}")));
    }
    // A grid line holds at most two points of a general-position set.
    let side = 2 * bound as u128 + 1;
    if n as u128 > 2 * side {
        return Err(GeoError::InvalidArgument(format!("bound {bound} cannot host {n} points in general position")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut dirs: HashMap<(i64, i64), usize> = HashMap::new();
    let max_rejects = 10_000 + 100 * n;
    let mut rejects = 0;
    while points.len() < n {
        let cand = Point::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        dirs.clear();
        let ok = points.iter().enumerate().all(|(j, &q)| {
            if q == cand {
                return false;
            }
            dirs.insert(primitive_direction(cand, q), j).is_none()
        });
        if ok {
            points.push(cand);
        } else {
            rejects += 1;
            if rejects > max_rejects {
                return Err(GeoError::SearchExhausted(format!(
                    "could not place {n} points in general position within bound {bound}"
                )));
            }
        }
    }
    Ok(Configuration::Coordinates(points))
}

pub fn convex_configuration(n: usize) -> Result<Configuration> {
    Configuration::convex(n)
}

/// Points on the parabola `(t, t^2)`; in convex position, sorted by `t`.
pub fn parabola_configuration(n: usize) -> Result<Configuration> {
    Configuration::coordinates((0..n as i64).map(|t| Point::new(t, t * t)).collect())
}

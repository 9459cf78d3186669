use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::surd::QuadSurd;
use crate::constructions::Decomposition;
use crate::error::{GeoError, Result};
use crate::exactgeom::Edge;

/// Large-triangle counts per color class of a convex decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct TriangleCensus {
    pub n: usize,
    /// Threshold parameter, as text and as a float.
    pub x: String,
    pub x_value: f64,
    /// Shortest cyclic edge length of each triangle part, `None` for edges.
    pub lengths: Vec<Option<usize>>,
    pub large: usize,
    pub per_class_large: BTreeMap<usize, usize>,
    /// `floor(x) - 2`: the most large triangles one class may hold.
    pub class_bound: usize,
    pub max_class_large: usize,
    /// Classes holding more than `class_bound` large triangles.
    pub violations: Vec<usize>,
}

pub fn triangle_length(n: usize, t: &[usize]) -> usize {
    [Edge::new(t[0], t[1]), Edge::new(t[0], t[2]), Edge::new(t[1], t[2])]
        .iter()
        .map(|e| e.length(n))
        .min()
        .expect("three edges")
}

/// Classifies each triangle as large when `length >= n / x` (equality counts
/// as large), decided exactly.
pub fn triangle_census(d: &Decomposition, colors: &[usize], x: &QuadSurd) -> Result<TriangleCensus> {
    if !d.config.is_convex() {
        return Err(GeoError::InvalidArgument("the census needs a convex configuration".into()));
    }
    if colors.len() != d.parts.len() {
        return Err(GeoError::InvalidArgument("coloring must cover every part".into()));
    }
    if *x < QuadSurd::integer(3, x.d.clone()) {
        return Err(GeoError::InvalidArgument(format!("threshold x = {x} is below 3")));
    }
    let n = d.config.n();
    let nr = QuadSurd::integer(n as i64, x.d.clone());
    let mut lengths = Vec::with_capacity(d.parts.len());
    let mut per_class: BTreeMap<usize, usize> = BTreeMap::new();
    let mut large = 0;
    for (i, p) in d.parts.iter().enumerate() {
        match p.vertices.len() {
            2 => lengths.push(None),
            3 => {
                let len = triangle_length(n, &p.vertices);
                lengths.push(Some(len));
                let lx = x.scale(&BigRational::from_integer(BigInt::from(len)));
                let entry = per_class.entry(colors[i]).or_insert(0);
                if lx >= nr {
                    *entry += 1;
                    large += 1;
                }
            }
            k => {
                return Err(GeoError::InvalidArgument(format!(
                    "part {i} has {k} vertices; only triangles and edges allowed"
                )))
            }
        }
    }
    let class_bound = (x.floor() - BigInt::from(2)).to_usize().unwrap_or(0);
    let max_class_large = per_class.values().copied().max().unwrap_or(0);
    let violations = per_class.iter().filter(|(_, &c)| c > class_bound).map(|(&k, _)| k).collect();
    Ok(TriangleCensus {
        n,
        x: x.to_string(),
        x_value: x.to_f64(),
        lengths,
        large,
        per_class_large: per_class,
        class_bound,
        max_class_large,
        violations,
    })
}

/// Closed-form bounds; `c` is the constant standing for a hidden
/// lower-order term.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundVariant {
    /// `C(n,2)/3 + c n^{3/2}`
    Prop1 { c: BigRational },
    /// `C(n,2)/6 + c n^{3/2}`
    Prop2 { c: BigRational },
    /// `n^2/24.5 - c n`
    Thm3 { c: BigRational },
    /// `(C(n,2)/3 - n^2/x) / (x - 2)` with `x = 2(3 + sqrt 6)`
    Thm33,
    /// `floor(n/3)^2`
    Thm4,
    /// `n^2/9 + c n^{3/2}`
    Thm5 { c: BigRational },
}

impl BoundVariant {
    pub fn parse(name: &str, c: BigRational) -> Result<Self> {
        Ok(match name {
            "prop1" => BoundVariant::Prop1 { c },
            "prop2" => BoundVariant::Prop2 { c },
            "thm3" => BoundVariant::Thm3 { c },
            "thm33" => BoundVariant::Thm33,
            "thm4" => BoundVariant::Thm4,
            "thm5" => BoundVariant::Thm5 { c },
            other => return Err(GeoError::InvalidArgument(format!("unknown bound variant {other:?}"))),
        })
    }
}

fn ri(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Exact value of the chosen closed form at `n`.
pub fn evaluate_bound(n: usize, variant: &BoundVariant) -> Result<QuadSurd> {
    if n < 3 {
        return Err(GeoError::InvalidArgument(format!("bounds need n >= 3, got {n}")));
    }
    let pairs = ri(n * (n - 1) / 2);
    let n2 = ri(n * n);
    // c n sqrt(n)
    let n32 = |c: &BigRational| QuadSurd::new(BigRational::from_integer(0.into()), c * ri(n), n);
    Ok(match variant {
        BoundVariant::Prop1 { c } => QuadSurd::rational(pairs / ri(3), n).add(&n32(c)),
        BoundVariant::Prop2 { c } => QuadSurd::rational(pairs / ri(6), n).add(&n32(c)),
        BoundVariant::Thm3 { c } => QuadSurd::rational(n2 * ri(2) / ri(49) - c * ri(n), n),
        BoundVariant::Thm33 => {
            let x = QuadSurd::large_threshold();
            let num = QuadSurd::rational(pairs / ri(3), 6).sub(&QuadSurd::rational(n2, 6).div(&x));
            num.div(&x.sub(&QuadSurd::integer(2, 6)))
        }
        BoundVariant::Thm4 => QuadSurd::rational(ri((n / 3) * (n / 3)), n),
        BoundVariant::Thm5 { c } => QuadSurd::rational(n2 / ri(9), n).add(&n32(c)),
    })
}

/// `60 + 24 sqrt 6`, the leading denominator `6x(x-2)/(x-6)` at the chosen x.
pub fn thm33_denominator() -> QuadSurd {
    let x = QuadSurd::large_threshold();
    let six = QuadSurd::integer(6, 6);
    six.mul(&x).mul(&x.sub(&QuadSurd::integer(2, 6))).div(&x.sub(&six))
}

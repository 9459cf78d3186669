//! Desarguesian projective planes PG(2, q).
//!
//! Points and lines are homogeneous triples normalized so the first nonzero
//! coordinate is 1. Both are indexed the same way: `(1, y, z)` is
//! `y q + z`, `(0, 1, z)` is `q^2 + z`, and `(0, 0, 1)` is `q^2 + q`.

use serde::Serialize;

use super::field::FiniteField;
use crate::error::{GeoError, Result};

#[derive(Clone, Debug)]
pub struct ProjectivePlane {
    field: FiniteField,
    pub q: usize,
    /// Sorted point indices on each line.
    pub lines: Vec<Vec<usize>>,
    /// Sorted line indices through each point.
    pub point_lines: Vec<Vec<usize>>,
}

/// Lines through a common point with that point removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pencil {
    pub center: usize,
    pub lines: Vec<usize>,
    pub residues: Vec<Vec<usize>>,
}

impl ProjectivePlane {
    pub fn new(q: usize) -> Result<Self> {
        let field = FiniteField::new(q)?;
        let size = q * q + q + 1;
        let mut plane =
            ProjectivePlane { field, q, lines: vec![Vec::new(); size], point_lines: vec![Vec::new(); size] };
        for l in 0..size {
            let lt = plane.triple(l);
            for p in 0..size {
                if plane.dot(lt, plane.triple(p)) == 0 {
                    plane.lines[l].push(p);
                    plane.point_lines[p].push(l);
                }
            }
        }
        Ok(plane)
    }

    pub fn size(&self) -> usize {
        self.q * self.q + self.q + 1
    }

    /// Normalized homogeneous coordinates of point (or line) `i`.
    pub fn triple(&self, i: usize) -> [u16; 3] {
        let q = self.q;
        if i < q * q {
            [1, (i / q) as u16, (i % q) as u16]
        } else if i < q * q + q {
            [0, 1, (i - q * q) as u16]
        } else {
            [0, 0, 1]
        }
    }

    fn index(&self, t: [u16; 3]) -> usize {
        let f = &self.field;
        let lead = t.iter().position(|&c| c != 0).expect("nonzero triple");
        let s = f.inv(t[lead]).expect("nonzero lead");
        let n = t.map(|c| f.mul(c, s));
        let q = self.q;
        match lead {
            0 => n[1] as usize * q + n[2] as usize,
            1 => q * q + n[2] as usize,
            _ => q * q + q,
        }
    }

    fn dot(&self, a: [u16; 3], b: [u16; 3]) -> u16 {
        let f = &self.field;
        f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]))
    }

    fn cross(&self, a: [u16; 3], b: [u16; 3]) -> [u16; 3] {
        let f = &self.field;
        let m = |x: u16, y: u16, z: u16, w: u16| f.sub(f.mul(x, y), f.mul(z, w));
        [m(a[1], b[2], a[2], b[1]), m(a[2], b[0], a[0], b[2]), m(a[0], b[1], a[1], b[0])]
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.lines[line].binary_search(&point).is_ok()
    }

    /// The unique line through two distinct points.
    pub fn line_through(&self, p1: usize, p2: usize) -> usize {
        assert_ne!(p1, p2, "line_through needs distinct points");
        self.index(self.cross(self.triple(p1), self.triple(p2)))
    }

    /// The unique common point of two distinct lines.
    pub fn meet(&self, l1: usize, l2: usize) -> usize {
        assert_ne!(l1, l2, "meet needs distinct lines");
        self.index(self.cross(self.triple(l1), self.triple(l2)))
    }

    /// Exhaustive check of the plane axioms; returns the first violation.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let size = self.size();
        let q = self.q;
        for i in 0..size {
            if self.lines[i].len() != q + 1 {
                return Err(format!("line {i} has {} points", self.lines[i].len()));
            }
            if self.point_lines[i].len() != q + 1 {
                return Err(format!("point {i} is on {} lines", self.point_lines[i].len()));
            }
        }
        let mut count = vec![0u32; size * size];
        for line in &self.lines {
            for (a, &p) in line.iter().enumerate() {
                for &r in &line[a + 1..] {
                    count[p * size + r] += 1;
                }
            }
        }
        for p in 0..size {
            for r in p + 1..size {
                if count[p * size + r] != 1 {
                    return Err(format!("points {p}, {r} share {} lines", count[p * size + r]));
                }
            }
        }
        for l1 in 0..size {
            for l2 in l1 + 1..size {
                let common = self.lines[l1].iter().filter(|p| self.lines[l2].binary_search(p).is_ok()).count();
                if common != 1 {
                    return Err(format!("lines {l1}, {l2} meet in {common} points"));
                }
            }
        }
        Ok(())
    }

    /// The first `m` lines through `z` (ascending index), each without `z`.
    pub fn pencil_through(&self, z: usize, m: usize) -> Result<Pencil> {
        if z >= self.size() {
            return Err(GeoError::InvalidArgument(format!("point {z} not in plane of order {}", self.q)));
        }
        if m > self.q + 1 {
            return Err(GeoError::InvalidArgument(format!(
                "only {} lines pass through a point of a plane of order {}, asked for {m}",
                self.q + 1,
                self.q
            )));
        }
        let lines: Vec<usize> = self.point_lines[z][..m].to_vec();
        let residues = lines.iter().map(|&l| self.lines[l].iter().copied().filter(|&p| p != z).collect()).collect();
        Ok(Pencil { center: z, lines, residues })
    }
}

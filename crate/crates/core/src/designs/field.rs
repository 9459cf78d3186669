//! Finite fields GF(p^k) with full operation tables.
//!
//! Prime orders use residues mod p. Extension fields represent an element as
//! its coefficient vector packed base p (constant term least significant),
//! reduced modulo a fixed irreducible polynomial.

use crate::error::{GeoError, Result};
use crate::planecut::prime_power_base;

/// Largest field order with tables.
pub const MAX_ORDER: usize = 256;

/// Irreducible moduli for the small extension fields, as monic coefficient
/// lists from the constant term upward.
const MODULI: &[(usize, &[u16])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[1, 0, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[2, 0, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
];

#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let p = prime_power_base(q).ok_or(GeoError::UnsupportedOrder(q))?;
        if q > MAX_ORDER {
            return Err(GeoError::UnsupportedOrder(q));
        }
        let (add, mul) = if p == q {
            let add = (0..q * q).map(|i| ((i / q + i % q) % q) as u16).collect();
            let mul = (0..q * q).map(|i| ((i / q) * (i % q) % q) as u16).collect();
            (add, mul)
        } else {
            let modulus =
                MODULI.iter().find(|(order, _)| *order == q).map(|(_, m)| *m).ok_or(GeoError::UnsupportedOrder(q))?;
            extension_tables(q, p, modulus)
        };
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).expect("additive inverse") as u16;
            if a != 0 {
                inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).ok_or(GeoError::UnsupportedOrder(q))? as u16;
            }
        }
        Ok(FiniteField { q, p, add, mul, neg, inv })
    }

    pub fn is_supported(q: usize) -> bool {
        match prime_power_base(q) {
            Some(p) if q <= MAX_ORDER => p == q || MODULI.iter().any(|(o, _)| *o == q),
            _ => false,
        }
    }

    /// Largest order `<= x` with a table, if any.
    pub fn largest_supported_at_most(x: usize) -> Option<usize> {
        (2..=x.min(MAX_ORDER)).rev().find(|&q| Self::is_supported(q))
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| self.inv[a as usize])
    }
}

fn digits(mut x: usize, p: usize, k: usize) -> Vec<usize> {
    let mut d = Vec::with_capacity(k);
    for _ in 0..k {
        d.push(x % p);
        x /= p;
    }
    d
}

fn pack(d: &[usize], p: usize) -> u16 {
    d.iter().rev().fold(0usize, |acc, &c| acc * p + c) as u16
}

fn extension_tables(q: usize, p: usize, modulus: &[u16]) -> (Vec<u16>, Vec<u16>) {
    let k = modulus.len() - 1;
    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    for a in 0..q {
        let da = digits(a, p, k);
        for b in 0..q {
            let db = digits(b, p, k);
            let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a * q + b] = pack(&sum, p);
            let mut prod = vec![0usize; 2 * k - 1];
            for i in 0..k {
                for j in 0..k {
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                }
            }
            // reduce by the monic modulus from the top degree down
            for deg in (k..prod.len()).rev() {
                let c = prod[deg];
                if c == 0 {
                    continue;
                }
                for (i, &m) in modulus.iter().enumerate() {
                    let t = deg - k + i;
                    prod[t] = (prod[t] + p * p - c * m as usize % p) % p;
                }
            }
            mul[a * q + b] = pack(&prod[..k], p);
        }
    }
    (add, mul)
}

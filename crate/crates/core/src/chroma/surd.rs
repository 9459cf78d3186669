use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact number `a + b sqrt(d)` with rational `a`, `b` and integer `d >= 0`.
/// Values combined arithmetically must share the same `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl QuadSurd {
    pub fn new(a: BigRational, b: BigRational, d: impl Into<BigInt>) -> Self {
        QuadSurd { a, b, d: d.into() }
    }

    pub fn rational(a: BigRational, d: impl Into<BigInt>) -> Self {
        QuadSurd { a, b: BigRational::zero(), d: d.into() }
    }

    pub fn integer(a: i64, d: impl Into<BigInt>) -> Self {
        Self::rational(rat(a), d)
    }

    /// `2 (3 + sqrt 6)`.
    pub fn large_threshold() -> Self {
        QuadSurd::new(rat(6), rat(2), 6)
    }

    fn same_field(&self, o: &Self) {
        assert!(self.d == o.d || self.b.is_zero() || o.b.is_zero(), "mixing sqrt({}) and sqrt({})", self.d, o.d);
    }

    fn radicand(&self, o: &Self) -> BigInt {
        if self.b.is_zero() {
            o.d.clone()
        } else {
            self.d.clone()
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_field(o);
        QuadSurd { a: &self.a + &o.a, b: &self.b + &o.b, d: self.radicand(o) }
    }

    pub fn neg(&self) -> Self {
        QuadSurd { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.same_field(o);
        let d = self.radicand(o);
        let dr = BigRational::from_integer(d.clone());
        QuadSurd { a: &self.a * &o.a + &self.b * &o.b * dr, b: &self.a * &o.b + &self.b * &o.a, d }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QuadSurd { a: &self.a * r, b: &self.b * r, d: self.d.clone() }
    }

    /// Division through the conjugate; panics on zero.
    pub fn div(&self, o: &Self) -> Self {
        self.same_field(o);
        let d = self.radicand(o);
        let dr = BigRational::from_integer(d.clone());
        let norm = &o.a * &o.a - &o.b * &o.b * &dr;
        assert!(!norm.is_zero(), "division by zero surd");
        let conj = QuadSurd { a: o.a.clone(), b: -&o.b, d: d.clone() };
        let num = QuadSurd { a: self.a.clone(), b: self.b.clone(), d }.mul(&conj);
        QuadSurd { a: num.a / &norm, b: num.b / &norm, d: num.d }
    }

    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = if self.d.is_zero() { 0 } else { sign(&self.b) };
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: compare a^2 with b^2 d
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        let mut f = BigInt::from(self.to_f64().floor() as i64);
        let at = |f: &BigInt| QuadSurd::rational(BigRational::from_integer(f.clone()), self.d.clone());
        while self.sub(&at(&(&f + BigInt::one()))).signum() >= 0 {
            f += 1;
        }
        while self.sub(&at(&f)).signum() < 0 {
            f -= 1;
        }
        f
    }
}

fn sign(r: &BigRational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).signum().cmp(&0)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

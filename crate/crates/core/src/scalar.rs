//! Exact coefficient rings.
//!
//! Four commutative rings are supported: the integers, the rationals,
//! `Z/n`, and the Gaussian ring `(Z/n)[i]`. The last one exists because it
//! is the smallest exact ring in this family with a nontrivial ring
//! automorphism (conjugation); `Z`, `Q` and `Z/n` are all rigid, and
//! coefficient twists in the homotopy colimit must be genuine ring
//! automorphisms for the composition law to stay associative.

use crate::error::{Error, Result};
use num_rational::Rational64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    Rationals,
    IntegersMod(u64),
    /// `(Z/n)[i]`, Gaussian integers modulo `n`.
    GaussMod(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(i64),
    Rat(Rational64),
    Mod { n: u64, v: u64 },
    Gauss { n: u64, re: u64, im: u64 },
}

impl Ring {
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, x: i64) -> Scalar {
        match self {
            Ring::Integers => Scalar::Int(x),
            Ring::Rationals => Scalar::Rat(Rational64::from_integer(x)),
            Ring::IntegersMod(n) => Scalar::Mod { n, v: x.rem_euclid(n as i64) as u64 },
            Ring::GaussMod(n) => Scalar::Gauss { n, re: x.rem_euclid(n as i64) as u64, im: 0 },
        }
    }

    /// `re + im*i` in `(Z/n)[i]`; panics unless the ring is Gaussian.
    pub fn gauss(self, re: i64, im: i64) -> Scalar {
        match self {
            Ring::GaussMod(n) => Scalar::Gauss {
                n,
                re: re.rem_euclid(n as i64) as u64,
                im: im.rem_euclid(n as i64) as u64,
            },
            _ => panic!("gauss() on non-Gaussian ring"),
        }
    }

    /// A small random element, suitable for sampled algebraic laws.
    pub fn sample<R: Rng>(self, rng: &mut R) -> Scalar {
        match self {
            Ring::Integers => Scalar::Int(rng.gen_range(-4..=4)),
            Ring::Rationals => Scalar::Rat(Rational64::new(rng.gen_range(-4..=4), rng.gen_range(1..=3))),
            Ring::IntegersMod(n) => Scalar::Mod { n, v: rng.gen_range(0..n) },
            Ring::GaussMod(n) => Scalar::Gauss { n, re: rng.gen_range(0..n), im: rng.gen_range(0..n) },
        }
    }
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match *self {
            Scalar::Int(_) => Ring::Integers,
            Scalar::Rat(_) => Ring::Rationals,
            Scalar::Mod { n, .. } => Ring::IntegersMod(n),
            Scalar::Gauss { n, .. } => Ring::GaussMod(n),
        }
    }

    pub fn is_zero(&self) -> bool {
        match *self {
            Scalar::Int(x) => x == 0,
            Scalar::Rat(x) => x == Rational64::from_integer(0),
            Scalar::Mod { v, .. } => v == 0,
            Scalar::Gauss { re, im, .. } => re == 0 && im == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (*self, *other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { n, v: a }, Scalar::Mod { n: m, v: b }) if n == m => {
                Scalar::Mod { n, v: (a + b) % n }
            }
            (Scalar::Gauss { n, re: a, im: b }, Scalar::Gauss { n: m, re: c, im: d }) if n == m => {
                Scalar::Gauss { n, re: (a + c) % n, im: (b + d) % n }
            }
            _ => panic!("scalar ring mismatch in add"),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (*self, *other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { n, v: a }, Scalar::Mod { n: m, v: b }) if n == m => {
                Scalar::Mod { n, v: a.wrapping_mul(b) % n }
            }
            (Scalar::Gauss { n, re: a, im: b }, Scalar::Gauss { n: m, re: c, im: d }) if n == m => {
                // (a+bi)(c+di) = (ac-bd) + (ad+bc)i
                let re = (a as i128 * c as i128 - b as i128 * d as i128).rem_euclid(n as i128);
                let im = (a as i128 * d as i128 + b as i128 * c as i128).rem_euclid(n as i128);
                Scalar::Gauss { n, re: re as u64, im: im as u64 }
            }
            _ => panic!("scalar ring mismatch in mul"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match *self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { n, v } => Scalar::Mod { n, v: (n - v) % n },
            Scalar::Gauss { n, re, im } => Scalar::Gauss { n, re: (n - re) % n, im: (n - im) % n },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Scalar::Int(x) => write!(f, "{x}"),
            Scalar::Rat(x) => write!(f, "{x}"),
            Scalar::Mod { v, .. } => write!(f, "{v}"),
            Scalar::Gauss { re, im, .. } => write!(f, "{re}+{im}i"),
        }
    }
}

/// A ring automorphism of one of the supported coefficient rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingAut {
    Identity,
    /// Complex conjugation on `(Z/n)[i]`.
    GaussConj,
}

impl RingAut {
    pub fn apply(&self, s: &Scalar) -> Scalar {
        match self {
            RingAut::Identity => *s,
            RingAut::GaussConj => match *s {
                Scalar::Gauss { n, re, im } => Scalar::Gauss { n, re, im: (n - im) % n },
                _ => panic!("GaussConj applied to non-Gaussian scalar"),
            },
        }
    }

    pub fn compose(&self, other: &RingAut) -> RingAut {
        match (self, other) {
            (RingAut::Identity, x) | (x, RingAut::Identity) => *x,
            (RingAut::GaussConj, RingAut::GaussConj) => RingAut::Identity,
        }
    }

    pub fn inverse(&self) -> RingAut {
        // Both supported automorphisms are involutions.
        *self
    }

    pub fn pow(&self, e: i64) -> RingAut {
        if e.rem_euclid(2) == 0 {
            RingAut::Identity
        } else {
            *self
        }
    }

    pub fn valid_on(&self, ring: Ring) -> bool {
        match self {
            RingAut::Identity => true,
            RingAut::GaussConj => matches!(ring, Ring::GaussMod(_)),
        }
    }
}

// JSON form: "Z" | "Q" | {"mod": n} | {"gauss_mod": n}
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RingRepr {
    Name(String),
    Mod { r#mod: u64 },
    Gauss { gauss_mod: u64 },
}

impl Serialize for Ring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match *self {
            Ring::Integers => RingRepr::Name("Z".into()),
            Ring::Rationals => RingRepr::Name("Q".into()),
            Ring::IntegersMod(n) => RingRepr::Mod { r#mod: n },
            Ring::GaussMod(n) => RingRepr::Gauss { gauss_mod: n },
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match RingRepr::deserialize(d)? {
            RingRepr::Name(s) if s == "Z" => Ok(Ring::Integers),
            RingRepr::Name(s) if s == "Q" => Ok(Ring::Rationals),
            RingRepr::Name(s) => Err(serde::de::Error::custom(format!("unknown ring `{s}`"))),
            RingRepr::Mod { r#mod } => Ok(Ring::IntegersMod(r#mod)),
            RingRepr::Gauss { gauss_mod } => Ok(Ring::GaussMod(gauss_mod)),
        }
    }
}

pub fn require_same_ring(a: Ring, b: Ring) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream;

    #[test]
    fn ring_axioms_sampled() {
        for ring in [Ring::Integers, Ring::Rationals, Ring::IntegersMod(6), Ring::GaussMod(5)] {
            let mut rng = stream(1, "ring-axioms", 0);
            for _ in 0..1000 {
                let a = ring.sample(&mut rng);
                let b = ring.sample(&mut rng);
                let c = ring.sample(&mut rng);
                assert_eq!(a.add(&b), b.add(&a));
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                assert_eq!(a.add(&ring.zero()), a);
                assert_eq!(a.mul(&ring.one()), a);
                assert_eq!(a.add(&a.neg()), ring.zero());
            }
        }
    }

    #[test]
    fn gauss_conj_is_ring_automorphism() {
        let ring = Ring::GaussMod(5);
        let mut rng = stream(2, "gauss-conj", 0);
        for _ in 0..500 {
            let a = ring.sample(&mut rng);
            let b = ring.sample(&mut rng);
            let c = RingAut::GaussConj;
            assert_eq!(c.apply(&a.add(&b)), c.apply(&a).add(&c.apply(&b)));
            assert_eq!(c.apply(&a.mul(&b)), c.apply(&a).mul(&c.apply(&b)));
            assert_eq!(c.apply(&c.apply(&a)), a);
        }
        assert_eq!(RingAut::GaussConj.apply(&ring.one()), ring.one());
    }

    #[test]
    fn ring_json_round_trip() {
        for ring in [Ring::Integers, Ring::Rationals, Ring::IntegersMod(7), Ring::GaussMod(5)] {
            let s = serde_json::to_string(&ring).unwrap();
            let back: Ring = serde_json::from_str(&s).unwrap();
            assert_eq!(ring, back);
        }
        assert_eq!(serde_json::to_string(&Ring::Integers).unwrap(), "\"Z\"");
    }
}

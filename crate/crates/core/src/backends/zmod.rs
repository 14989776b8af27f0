use num_integer::Integer;
use serde_json::Value;

use super::{json_integer, Backend, LinearProblem, DEFAULT_CAP};
use crate::element::{Element, ElementValue};
use crate::error::{Error, Result};
use crate::ring::{RingDescriptor, StarRing};

/// `Z_n` with the identity involution. Legal because the ring is
/// commutative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZMod {
    n: u64,
    cap: usize,
}

impl ZMod {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDescriptor(format!(
                "ZMod requires n >= 2, got {n}"
            )));
        }
        if n > i64::MAX as u64 {
            return Err(Error::InvalidDescriptor(format!(
                "ZMod modulus {n} exceeds 2^63 - 1"
            )));
        }
        Ok(ZMod {
            n,
            cap: DEFAULT_CAP,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Canonical residue of an arbitrary integer.
    pub fn residue(&self, v: i128) -> u64 {
        v.rem_euclid(self.n as i128) as u64
    }
}

impl StarRing for ZMod {
    type Elem = u64;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::ZMod { n: self.n }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.n - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n as u128) as u64
    }
    fn star(&self, a: &u64) -> u64 {
        *a
    }
    fn order(&self) -> Option<usize> {
        usize::try_from(self.n).ok()
    }
    fn element_at(&self, index: usize) -> u64 {
        index as u64
    }
    fn index_of(&self, a: &u64) -> Option<usize> {
        usize::try_from(*a).ok()
    }
}

impl Backend for ZMod {
    fn scan_cap(&self) -> usize {
        self.cap
    }

    /// `c·x ≡ t (mod n)` by the extended Euclidean algorithm. The solutions
    /// form `x0 + (n/g)Z` with `0 <= x0 < n/g`, so `x0` is also the first
    /// solution of a canonical scan. Multiplication commutes, so both shapes
    /// are the same congruence.
    fn solve(&self, problem: &LinearProblem<u64>) -> Result<Option<u64>> {
        let n = self.n as i128;
        let c = problem.coefficient as i128;
        let t = problem.target as i128;
        let egcd = c.extended_gcd(&n);
        let g = egcd.gcd;
        if t % g != 0 {
            return Ok(None);
        }
        let step = n / g;
        // egcd.x * c ≡ g (mod n)
        let x = ((egcd.x % step) * ((t / g) % step)).rem_euclid(step);
        debug_assert!(problem.is_solved_by(self, &(x as u64)));
        Ok(Some(x as u64))
    }

    fn to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }

    fn from_json(&self, value: &Value) -> Result<u64> {
        let v = json_integer(value, || "value".to_string())?;
        Ok(self.residue(v))
    }

    fn to_element(&self, a: &u64) -> Element {
        Element::new_unchecked(self.descriptor(), ElementValue::Residue(*a))
    }

    fn from_element(&self, e: &Element) -> Result<u64> {
        match (e.ring() == self.descriptor(), e.value()) {
            (true, ElementValue::Residue(v)) => Ok(*v),
            _ => Err(Error::RingMismatch {
                left: self.descriptor(),
                right: e.ring(),
            }),
        }
    }
}

//! Ring-tagged element values and runtime dispatch over the three backends.

use serde_json::Value;

use crate::backends::{Backend, MatQi, MatZp, ZMod};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::ring::{RingDescriptor, StarRing};
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElementValue {
    Residue(u64),
    Zp(SquareMatrix<u64>),
    Qi(SquareMatrix<GaussianRational>),
}

/// An element together with the ring it lives in. Values are always in
/// canonical form, so equality is exact ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ring: RingDescriptor,
    value: ElementValue,
}

/// One of the built-in backends, chosen at runtime from a descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnyRing {
    ZMod(ZMod),
    MatZp(MatZp),
    MatQi(MatQi),
}

/// Runs `$body` with `$r` bound to the concrete backend inside an
/// [`AnyRing`].
#[macro_export]
macro_rules! with_backend {
    ($any:expr, $r:ident => $body:expr) => {
        match $any {
            $crate::element::AnyRing::ZMod($r) => $body,
            $crate::element::AnyRing::MatZp($r) => $body,
            $crate::element::AnyRing::MatQi($r) => $body,
        }
    };
}

impl AnyRing {
    pub fn new(descriptor: RingDescriptor) -> Result<Self> {
        Ok(match descriptor {
            RingDescriptor::ZMod { n } => AnyRing::ZMod(ZMod::new(n)?),
            RingDescriptor::MatZp { p, k } => AnyRing::MatZp(MatZp::new(p, k)?),
            RingDescriptor::MatQi { k } => AnyRing::MatQi(MatQi::new(k)?),
        })
    }

    /// Overrides the enumeration cap of finite backends.
    pub fn with_cap(self, cap: usize) -> Self {
        match self {
            AnyRing::ZMod(r) => AnyRing::ZMod(r.with_cap(cap)),
            AnyRing::MatZp(r) => AnyRing::MatZp(r.with_cap(cap)),
            other => other,
        }
    }

    pub fn descriptor(&self) -> RingDescriptor {
        with_backend!(self, r => r.descriptor())
    }

    pub fn zero(&self) -> Element {
        with_backend!(self, r => r.to_element(&r.zero()))
    }

    pub fn one(&self) -> Element {
        with_backend!(self, r => r.to_element(&r.one()))
    }
}

macro_rules! lift_binary {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        pub fn $name(&self, other: &Element) -> Result<Element> {
            self.same_ring(other)?;
            let ring = AnyRing::new(self.ring)?;
            with_backend!(&ring, r => {
                let a = r.from_element(self)?;
                let b = r.from_element(other)?;
                Ok(r.to_element(&r.$name(&a, &b)))
            })
        }
    };
}

impl Element {
    /// Wraps an already-canonical value. Backends are the only callers.
    pub(crate) fn new_unchecked(ring: RingDescriptor, value: ElementValue) -> Self {
        Element { ring, value }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn value(&self) -> &ElementValue {
        &self.value
    }

    fn same_ring(&self, other: &Element) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            })
        }
    }

    lift_binary!(add);
    lift_binary!(sub);
    lift_binary!(mul);

    pub fn neg(&self) -> Result<Element> {
        let ring = AnyRing::new(self.ring)?;
        with_backend!(&ring, r => Ok(r.to_element(&r.neg(&r.from_element(self)?))))
    }

    pub fn star(&self) -> Result<Element> {
        let ring = AnyRing::new(self.ring)?;
        with_backend!(&ring, r => Ok(r.to_element(&r.star(&r.from_element(self)?))))
    }

    pub fn pow(&self, e: u32) -> Result<Element> {
        let ring = AnyRing::new(self.ring)?;
        with_backend!(&ring, r => Ok(r.to_element(&r.pow(&r.from_element(self)?, e))))
    }

    pub fn to_json(&self) -> Value {
        match &self.value {
            ElementValue::Residue(v) => Value::from(*v),
            ElementValue::Zp(m) => Value::Array(
                m.rows()
                    .map(|row| Value::Array(row.iter().map(|&v| Value::from(v)).collect()))
                    .collect(),
            ),
            ElementValue::Qi(m) => Value::Array(
                m.rows()
                    .map(|row| {
                        Value::Array(row.iter().map(|v| Value::from(v.to_string())).collect())
                    })
                    .collect(),
            ),
        }
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Parses an element from JSON text: either the bare value (`7`,
/// `[[1,2],[0,5]]`, `[["1/2+i"]]`) or an object `{"value": ...}`.
/// Entries are reduced to canonical form.
pub fn parse_element(ring: RingDescriptor, text: &str) -> Result<Element> {
    let json: Value = serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let value = match json {
        Value::Object(mut map) => map
            .remove("value")
            .ok_or_else(|| Error::parse("value", "object is missing the `value` field"))?,
        other => other,
    };
    let any = AnyRing::new(ring)?;
    with_backend!(&any, r => Ok(r.to_element(&r.from_json(&value)?)))
}

/// Compact JSON text of the element's value; `parse_element` inverts it.
pub fn format_element(a: &Element) -> String {
    a.to_json().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z6: RingDescriptor = RingDescriptor::ZMod { n: 6 };

    #[test]
    fn parse_examples() {
        let two = parse_element(Z6, "8").unwrap();
        assert_eq!(two.value(), &ElementValue::Residue(2));
        assert_eq!(
            parse_element(Z6, "{\"value\": -1}").unwrap().value(),
            &ElementValue::Residue(5)
        );

        let m = parse_element(RingDescriptor::MatZp { p: 3, k: 2 }, "[[1,2],[0,5]]").unwrap();
        assert_eq!(format_element(&m), "[[1,2],[0,2]]");

        let q = parse_element(RingDescriptor::MatQi { k: 1 }, "[[\"1/2+1/2i\"]]").unwrap();
        assert_eq!(
            q.value(),
            &ElementValue::Qi(SquareMatrix::from_row_major(
                1,
                vec![GaussianRational::from_fractions(1, 2, 1, 2)]
            ))
        );
    }

    #[test]
    fn parse_errors_name_the_location() {
        let zp = RingDescriptor::MatZp { p: 3, k: 2 };
        let err = parse_element(zp, "[[1,2],[0]]").unwrap_err();
        assert!(
            matches!(err, Error::Parse { ref location, .. } if location == "row 1"),
            "{err}"
        );
        let err = parse_element(zp, "[[1,2],[0,\"x\"]]").unwrap_err();
        assert!(
            matches!(err, Error::Parse { ref location, .. } if location == "row 1, column 1"),
            "{err}"
        );
        let err = parse_element(Z6, "[1").unwrap_err();
        assert!(matches!(err, Error::Parse { ref location, .. } if location.starts_with("line 1")));
        let err = parse_element(RingDescriptor::MatQi { k: 1 }, "[[\"1/0\"]]").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(parse_element(Z6, "[[1]]").is_err());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = parse_element(Z6, "2").unwrap();
        let b = parse_element(RingDescriptor::ZMod { n: 8 }, "2").unwrap();
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch { .. })));
        assert_eq!(a.mul(&a).unwrap(), parse_element(Z6, "4").unwrap());
    }

    #[test]
    fn dynamic_arithmetic() {
        let r = AnyRing::new(RingDescriptor::MatQi { k: 1 }).unwrap();
        let i = parse_element(r.descriptor(), "[[\"i\"]]").unwrap();
        assert_eq!(
            i.star().unwrap(),
            parse_element(r.descriptor(), "[[\"-i\"]]").unwrap()
        );
        assert_eq!(i.pow(2).unwrap(), r.one().neg().unwrap());
        assert_eq!(i.pow(0).unwrap(), r.one());
        assert_eq!(i.sub(&i).unwrap(), r.zero());
        assert_eq!(i.add(&i.neg().unwrap()).unwrap(), r.zero());
    }
}

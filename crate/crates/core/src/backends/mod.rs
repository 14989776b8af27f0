//! Concrete `*`-rings, element enumeration, and the one-sided equation
//! solvers that every witness search goes through.

mod matqi;
mod matzp;
mod zmod;

use std::collections::HashSet;

use rand::Rng;
use serde_json::Value;

pub use matqi::{MatQi, QiMatrix, SAMPLE_ENTRY_BOUND};
pub use matzp::MatZp;
pub use zmod::ZMod;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::ring::{sample_index, StarRing};

/// Default bound on the number of elements an exhaustive scan may visit.
pub const DEFAULT_CAP: usize = 10_000;

/// Which side the unknown multiplies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// find `x` with `c·x = t`
    RightMul,
    /// find `y` with `y·c = t`
    LeftMul,
}

/// A one-sided multiplication equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProblem<E> {
    pub shape: Shape,
    pub coefficient: E,
    pub target: E,
}

impl<E> LinearProblem<E> {
    /// `c·x = t`
    pub fn right(coefficient: E, target: E) -> Self {
        LinearProblem {
            shape: Shape::RightMul,
            coefficient,
            target,
        }
    }

    /// `y·c = t`
    pub fn left(coefficient: E, target: E) -> Self {
        LinearProblem {
            shape: Shape::LeftMul,
            coefficient,
            target,
        }
    }

    pub fn is_solved_by<R: StarRing<Elem = E>>(&self, r: &R, x: &E) -> bool
    where
        E: PartialEq,
    {
        let lhs = match self.shape {
            Shape::RightMul => r.mul(&self.coefficient, x),
            Shape::LeftMul => r.mul(x, &self.coefficient),
        };
        lhs == self.target
    }
}

/// Backend-specific decision procedures layered over [`StarRing`].
///
/// The provided methods are exhaustive scans in canonical order; they work
/// for any finite carrier within [`Backend::scan_cap`]. The matrix ring over
/// `Q(i)` overrides them with exact linear algebra.
pub trait Backend: StarRing + Sized {
    fn scan_cap(&self) -> usize;

    /// Solves a one-sided equation. Finite backends return the first
    /// solution in canonical order; the returned value always satisfies the
    /// equation exactly.
    fn solve(&self, problem: &LinearProblem<Self::Elem>) -> Result<Option<Self::Elem>> {
        solve_by_scan(self, problem)
    }

    /// Some `y` with `y·a = 1`.
    fn left_inverse(&self, a: &Self::Elem) -> Result<Option<Self::Elem>> {
        self.solve(&LinearProblem::left(a.clone(), self.one()))
    }

    /// Some `x` with `a·x = 1`.
    fn right_inverse(&self, a: &Self::Elem) -> Result<Option<Self::Elem>> {
        self.solve(&LinearProblem::right(a.clone(), self.one()))
    }

    /// The two-sided inverse, when `a` has both one-sided inverses.
    fn inverse(&self, a: &Self::Elem) -> Result<Option<Self::Elem>> {
        let Some(left) = self.left_inverse(a)? else {
            return Ok(None);
        };
        if self.right_inverse(a)?.is_none() {
            return Ok(None);
        }
        Ok(Some(left))
    }

    /// Some `x` with `axa = a`.
    fn inner_inverse(&self, a: &Self::Elem) -> Result<Option<Self::Elem>> {
        scan_first(self, |x| self.product(&[a, x, a]) == *a)
    }

    /// The `b` with `aba = a`, `bab = b`, `ab = ba`, if any.
    fn group_inverse_direct(&self, a: &Self::Elem) -> Result<Option<Self::Elem>> {
        scan_first(self, |b| {
            let ab = self.mul(a, b);
            ab == self.mul(b, a) && self.mul(&ab, a) == *a && self.mul(b, &ab) == *b
        })
    }

    /// `a*ax = 0 ⇒ ax = 0` for all `x`, and `yaa* = 0 ⇒ ya = 0` for all `y`.
    fn star_cancellable(&self, a: &Self::Elem) -> Result<bool> {
        let n = finite_size(self, "star-cancellability scan")?;
        let ata = self.a_star_a(a);
        let aat = self.aa_star(a);
        for i in 0..n {
            let x = self.element_at(i);
            if self.is_zero(&self.mul(&ata, &x)) && !self.is_zero(&self.mul(a, &x)) {
                return Ok(false);
            }
            if self.is_zero(&self.mul(&x, &aat)) && !self.is_zero(&self.mul(&x, a)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `aR = bR`.
    fn same_right_ideal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool> {
        let n = finite_size(self, "right ideal comparison")?;
        let image = |c: &Self::Elem| -> HashSet<Self::Elem> {
            (0..n).map(|i| self.mul(c, &self.element_at(i))).collect()
        };
        Ok(image(a) == image(b))
    }

    /// A pseudo-random element; finite carriers draw uniformly.
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        let n = self
            .order()
            .expect("finite backends override nothing here; infinite ones override sample");
        self.element_at(sample_index(rng, n))
    }

    fn to_json(&self, a: &Self::Elem) -> Value;

    /// Parses the JSON value grammar of this ring, canonicalizing entries.
    fn from_json(&self, value: &Value) -> Result<Self::Elem>;

    fn to_element(&self, a: &Self::Elem) -> Element;

    /// Unwraps a dynamic element, rejecting one from another ring.
    fn from_element(&self, e: &Element) -> Result<Self::Elem>;

    /// Compact JSON text of an element.
    fn format(&self, a: &Self::Elem) -> String {
        self.to_json(a).to_string()
    }
}

/// `|R|`, or an error when the carrier is infinite or above the scan cap.
pub fn finite_size<B: Backend>(r: &B, operation: &str) -> Result<usize> {
    let ring = r.descriptor();
    if !ring.is_finite() {
        return Err(Error::unsupported(operation, ring));
    }
    match r.order() {
        Some(n) if n <= r.scan_cap() => Ok(n),
        Some(n) => Err(Error::CapExceeded {
            ring,
            size: n.to_string(),
            cap: r.scan_cap(),
        }),
        None => Err(Error::CapExceeded {
            ring,
            size: "more than usize::MAX".into(),
            cap: r.scan_cap(),
        }),
    }
}

/// First element in canonical order satisfying `pred`.
pub fn scan_first<B: Backend>(
    r: &B,
    mut pred: impl FnMut(&B::Elem) -> bool,
) -> Result<Option<B::Elem>> {
    let n = finite_size(r, "exhaustive scan")?;
    Ok((0..n).map(|i| r.element_at(i)).find(|x| pred(x)))
}

/// Reference solver: the first solution in canonical order, by full scan.
pub fn solve_by_scan<B: Backend>(
    r: &B,
    problem: &LinearProblem<B::Elem>,
) -> Result<Option<B::Elem>> {
    scan_first(r, |x| problem.is_solved_by(r, x))
}

/// Random-access view of a finite ring in canonical order.
#[derive(Debug)]
pub struct ElementStream<'a, B: Backend> {
    ring: &'a B,
    next: usize,
    end: usize,
}

impl<'a, B: Backend> ElementStream<'a, B> {
    pub fn len(&self) -> usize {
        self.end - self.next
    }

    pub fn is_empty(&self) -> bool {
        self.next >= self.end
    }

    /// Element at an absolute canonical index.
    pub fn get(&self, index: usize) -> Option<B::Elem> {
        (index < self.ring.order().unwrap_or(0)).then(|| self.ring.element_at(index))
    }

    /// Re-creates the stream over `[start, end)`, for partitioning.
    pub fn range(&self, start: usize, end: usize) -> ElementStream<'a, B> {
        let total = self.ring.order().unwrap_or(0);
        ElementStream {
            ring: self.ring,
            next: start.min(total),
            end: end.min(total),
        }
    }
}

impl<B: Backend> Iterator for ElementStream<'_, B> {
    type Item = B::Elem;

    fn next(&mut self) -> Option<B::Elem> {
        if self.next >= self.end {
            return None;
        }
        let e = self.ring.element_at(self.next);
        self.next += 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.len(), Some(self.len()))
    }
}

impl<B: Backend> ExactSizeIterator for ElementStream<'_, B> {}

/// All elements of a finite ring in canonical order.
pub fn enumerate<B: Backend>(r: &B) -> Result<ElementStream<'_, B>> {
    let n = finite_size(r, "enumeration")?;
    Ok(ElementStream {
        ring: r,
        next: 0,
        end: n,
    })
}

pub(crate) fn json_integer(value: &Value, location: impl Fn() -> String) -> Result<i128> {
    match value {
        Value::Number(num) => {
            if let Some(v) = num.as_i64() {
                Ok(v as i128)
            } else if let Some(v) = num.as_u64() {
                Ok(v as i128)
            } else {
                Err(Error::parse(
                    location(),
                    format!("`{num}` is not an integer"),
                ))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<i128>()
            .map_err(|_| Error::parse(location(), format!("`{s}` is not an integer"))),
        other => Err(Error::parse(
            location(),
            format!("expected an integer, found {other}"),
        )),
    }
}

/// Splits a JSON matrix into `k` rows of `k` entries.
pub(crate) fn json_matrix(value: &Value, k: usize) -> Result<Vec<&Value>> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::parse("value", "expected an array of rows"))?;
    if rows.len() != k {
        return Err(Error::parse(
            "value",
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(k * k);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::parse(format!("row {r}"), "expected an array"))?;
        if row.len() != k {
            return Err(Error::parse(
                format!("row {r}"),
                format!("expected {k} entries, found {}", row.len()),
            ));
        }
        out.extend(row.iter());
    }
    Ok(out)
}

//! Decision procedures for the Moore–Penrose existence criteria, the
//! inverse formulas attached to them, and the whole-ring sweep harness.
//!
//! Condition ids follow the numbering `T3.1(k)`, `T3.4(k)`, … used by the
//! sweep reports and the CLI.

mod characterization;
mod decomposition;
mod existential;
pub mod lemmas;
mod perturbation;
pub mod sweep;

use std::collections::BTreeMap;

pub use characterization::{formula_witness, t31_condition, t31_formula};
pub use decomposition::{t39_decomposition, Decomposition, DecompositionCheck};
pub use existential::{
    is_co_supported, is_well_supported, t32_condition, t33_condition, t34_condition, t34_formula,
    t35_condition, t35_formula,
};
pub use perturbation::{
    jacobson_transfer, jacobson_transfer_one_sided, t38_condition, PerturbedUnit,
};

use crate::backends::{finite_size, Backend};
use crate::error::{Error, Result};
use crate::ring::StarRing;

/// Solution elements and exponents certifying one condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<E> {
    pub condition: String,
    pub elements: BTreeMap<String, E>,
    pub n: u32,
    pub m: u32,
}

impl<E: std::fmt::Debug> Witness<E> {
    pub fn new(condition: impl Into<String>, n: u32, m: u32) -> Self {
        Witness {
            condition: condition.into(),
            elements: BTreeMap::new(),
            n,
            m,
        }
    }

    pub fn with(mut self, name: &str, value: E) -> Self {
        self.elements.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&E> {
        self.elements.get(name)
    }

    pub(crate) fn require(&self, name: &str) -> Result<&E> {
        self.get(name).ok_or_else(|| {
            Error::WitnessMismatch(format!(
                "witness for {} has no element `{name}`",
                self.condition
            ))
        })
    }

    /// The `k` in an id such as `T3.4(6)`, if the id belongs to `theorem`.
    pub(crate) fn condition_index(&self, theorem: &str) -> Option<u8> {
        self.condition
            .strip_prefix(theorem)?
            .strip_prefix('(')?
            .strip_suffix(')')?
            .parse()
            .ok()
    }
}

/// Which side an annihilator or principal ideal is taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A subset of a finite ring, deduplicated and in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subset<E> {
    members: Vec<E>,
}

impl<E: Ord + Clone> Subset<E> {
    pub fn collect(items: impl IntoIterator<Item = E>) -> Self {
        let mut members: Vec<E> = items.into_iter().collect();
        members.sort();
        members.dedup();
        Subset { members }
    }

    pub fn members(&self) -> &[E] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.members.binary_search(e).is_ok()
    }

    pub fn intersection(&self, other: &Subset<E>) -> Subset<E> {
        Subset {
            members: self
                .members
                .iter()
                .filter(|e| other.contains(e))
                .cloned()
                .collect(),
        }
    }

    /// `{s + t : s ∈ self, t ∈ other}`
    pub fn sum_set<R: StarRing<Elem = E>>(&self, r: &R, other: &Subset<E>) -> Subset<E> {
        Subset::collect(
            self.members
                .iter()
                .flat_map(|s| other.members.iter().map(move |t| r.add(s, t))),
        )
    }
}

/// `a° = {x : ax = 0}` (right) or `°a = {x : xa = 0}` (left).
pub fn annihilator<B: Backend>(r: &B, a: &B::Elem, side: Side) -> Result<Subset<B::Elem>> {
    let n = finite_size(r, "annihilator")?;
    Ok(Subset::collect((0..n).map(|i| r.element_at(i)).filter(
        |x| {
            let prod = match side {
                Side::Right => r.mul(a, x),
                Side::Left => r.mul(x, a),
            };
            r.is_zero(&prod)
        },
    )))
}

/// `cR` (right) or `Rc` (left).
pub fn image<B: Backend>(r: &B, c: &B::Elem, side: Side) -> Result<Subset<B::Elem>> {
    let n = finite_size(r, "principal ideal")?;
    Ok(Subset::collect((0..n).map(|i| {
        let x = r.element_at(i);
        match side {
            Side::Right => r.mul(c, &x),
            Side::Left => r.mul(&x, c),
        }
    })))
}

pub(crate) fn check_exponent(name: &str, value: u32) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidArgument(format!(
            "exponent {name} must be positive"
        )))
    } else {
        Ok(())
    }
}

/// The candidates a finite existential scan ranges over.
pub(crate) fn all_elements<'r, B: Backend>(
    r: &'r B,
    operation: &str,
) -> Result<impl Iterator<Item = B::Elem> + 'r> {
    let n = finite_size(r, operation)?;
    Ok((0..n).map(move |i| r.element_at(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{MatQi, ZMod};

    #[test]
    fn annihilator_and_image_examples() {
        let r6 = ZMod::new(6).unwrap();
        assert_eq!(annihilator(&r6, &0, Side::Right).unwrap().len(), 6);
        assert_eq!(
            annihilator(&r6, &2, Side::Right).unwrap().members(),
            &[0, 3]
        );
        assert_eq!(image(&r6, &4, Side::Right).unwrap().members(), &[0, 2, 4]);
        assert_eq!(image(&r6, &4, Side::Left).unwrap().members(), &[0, 2, 4]);
    }

    #[test]
    fn subsets_unsupported_on_infinite_rings() {
        let q = MatQi::new(1).unwrap();
        assert!(matches!(
            annihilator(&q, &q.one(), Side::Left),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn witness_condition_index() {
        let w: Witness<u64> = Witness::new("T3.4(6)", 1, 1);
        assert_eq!(w.condition_index("T3.4"), Some(6));
        assert_eq!(w.condition_index("T3.1"), None);
    }
}

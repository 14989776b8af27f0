//! The unital ring-with-involution interface, element predicates, and
//! axiom validation.

use std::fmt;
use std::hash::Hash;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::backends::Backend;
use crate::error::Result;

/// Which concrete `*`-ring to instantiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingDescriptor {
    /// `Z_n` with the identity involution.
    ZMod { n: u64 },
    /// `M_k(Z_p)` with transposition.
    MatZp { p: u64, k: usize },
    /// `M_k(Q(i))` with conjugate transposition.
    MatQi { k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Involution {
    Identity,
    Transpose,
    ConjugateTranspose,
}

impl RingDescriptor {
    pub fn involution(&self) -> Involution {
        match self {
            RingDescriptor::ZMod { .. } => Involution::Identity,
            RingDescriptor::MatZp { .. } => Involution::Transpose,
            RingDescriptor::MatQi { .. } => Involution::ConjugateTranspose,
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, RingDescriptor::MatQi { .. })
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::ZMod { n } => write!(f, "ZMod({n})"),
            RingDescriptor::MatZp { p, k } => write!(f, "MatZp(p={p},k={k})"),
            RingDescriptor::MatQi { k } => write!(f, "MatQi(k={k})"),
        }
    }
}

/// A unital ring with involution. Elements are canonical values, so `==`
/// is ring equality.
pub trait StarRing: Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn star(&self, a: &Self::Elem) -> Self::Elem;

    /// Number of elements, or `None` when the carrier is infinite or too
    /// large to index with `usize`.
    fn order(&self) -> Option<usize>;

    /// Element at `index` in canonical order. Only called with
    /// `index < order()`.
    fn element_at(&self, index: usize) -> Self::Elem;

    /// Position of `a` in canonical order (finite carriers only).
    fn index_of(&self, a: &Self::Elem) -> Option<usize>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `a^e` by repeated squaring, with `a^0 = 1`.
    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Left-to-right product; the empty product is `1`.
    fn product(&self, factors: &[&Self::Elem]) -> Self::Elem {
        match factors.split_first() {
            None => self.one(),
            Some((first, rest)) => rest
                .iter()
                .fold((*first).clone(), |acc, f| self.mul(&acc, f)),
        }
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `aa*`
    fn aa_star(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.star(a))
    }

    /// `a*a`
    fn a_star_a(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.star(a), a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ElementFlags {
    pub idempotent: bool,
    pub projection: bool,
    pub hermitian: bool,
    pub normal: bool,
    pub unit: bool,
    pub left_invertible: bool,
    pub right_invertible: bool,
}

pub fn is_idempotent<R: StarRing>(r: &R, a: &R::Elem) -> bool {
    r.mul(a, a) == *a
}

pub fn is_hermitian<R: StarRing>(r: &R, a: &R::Elem) -> bool {
    r.star(a) == *a
}

pub fn is_projection<R: StarRing>(r: &R, a: &R::Elem) -> bool {
    is_idempotent(r, a) && is_hermitian(r, a)
}

pub fn is_normal<R: StarRing>(r: &R, a: &R::Elem) -> bool {
    r.aa_star(a) == r.a_star_a(a)
}

/// Evaluates every flag from its defining equation. One-sided
/// invertibility is decided through the backend's equation solver.
pub fn classify<B: Backend>(r: &B, a: &B::Elem) -> Result<ElementFlags> {
    let idempotent = is_idempotent(r, a);
    let hermitian = is_hermitian(r, a);
    let left_invertible = r.left_inverse(a)?.is_some();
    let right_invertible = r.right_inverse(a)?.is_some();
    Ok(ElementFlags {
        idempotent,
        projection: idempotent && hermitian,
        hermitian,
        normal: is_normal(r, a),
        unit: left_invertible && right_invertible,
        left_invertible,
        right_invertible,
    })
}

pub const DEFAULT_VALIDATION_BUDGET: u64 = 1_000_000;
pub const VALIDATION_SEED: u64 = 0x5eed_2a11;
/// Pairs drawn for infinite carriers, whatever the budget.
pub const INFINITE_SAMPLE_PAIRS: u64 = 1_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub a: String,
    pub b: String,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ring: RingDescriptor,
    pub passed: bool,
    pub pairs_checked: u64,
    pub exhaustive: bool,
    /// Seed of the sampler when the check was not exhaustive.
    pub seed: Option<u64>,
    pub violation: Option<Violation>,
}

fn check_laws<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> Option<&'static str> {
    let checks: [(&'static str, bool); 12] = [
        ("(a*)* = a", r.star(&r.star(a)) == *a),
        (
            "(ab)* = b*a*",
            r.star(&r.mul(a, b)) == r.mul(&r.star(b), &r.star(a)),
        ),
        (
            "(a+b)* = a*+b*",
            r.star(&r.add(a, b)) == r.add(&r.star(a), &r.star(b)),
        ),
        ("a+b = b+a", r.add(a, b) == r.add(b, a)),
        (
            "(a+b)+c = a+(b+c)",
            r.add(&r.add(a, b), c) == r.add(a, &r.add(b, c)),
        ),
        ("a+0 = a", r.add(a, &r.zero()) == *a),
        ("a+(-a) = 0", r.is_zero(&r.add(a, &r.neg(a)))),
        ("a1 = a", r.mul(a, &r.one()) == *a),
        ("1a = a", r.mul(&r.one(), a) == *a),
        (
            "(ab)c = a(bc)",
            r.mul(&r.mul(a, b), c) == r.mul(a, &r.mul(b, c)),
        ),
        (
            "a(b+c) = ab+ac",
            r.mul(a, &r.add(b, c)) == r.add(&r.mul(a, b), &r.mul(a, c)),
        ),
        (
            "(a+b)c = ac+bc",
            r.mul(&r.add(a, b), c) == r.add(&r.mul(a, c), &r.mul(b, c)),
        ),
    ];
    checks.into_iter().find(|(_, ok)| !ok).map(|(law, _)| law)
}

/// Checks the ring and involution axioms on pairs `(a, b)`. Laws with three
/// operands take `c` from a deterministic function of the pair.
///
/// Finite carriers with `|R|^2 <= budget` are checked exhaustively; anything
/// else is sampled with [`VALIDATION_SEED`].
pub fn validate<B: Backend>(r: &B, budget: u64) -> ValidationReport {
    let ring = r.descriptor();
    let violation = |law: &str, a: &B::Elem, b: &B::Elem, c: &B::Elem| Violation {
        law: law.to_string(),
        a: r.format(a),
        b: r.format(b),
        c: r.format(c),
    };
    let exhaustive_size = r
        .order()
        .filter(|&n| (n as u128) * (n as u128) <= budget as u128);
    if let Some(n) = exhaustive_size {
        let mut pairs = 0;
        for i in 0..n {
            let a = r.element_at(i);
            for j in 0..n {
                let b = r.element_at(j);
                let c = r.element_at((i * 31 + j * 17 + 7) % n);
                pairs += 1;
                if let Some(law) = check_laws(r, &a, &b, &c) {
                    return ValidationReport {
                        ring,
                        passed: false,
                        pairs_checked: pairs,
                        exhaustive: true,
                        seed: None,
                        violation: Some(violation(law, &a, &b, &c)),
                    };
                }
            }
        }
        return ValidationReport {
            ring,
            passed: true,
            pairs_checked: pairs,
            exhaustive: true,
            seed: None,
            violation: None,
        };
    }
    let total = if r.order().is_some() {
        budget
    } else {
        budget.min(INFINITE_SAMPLE_PAIRS)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(VALIDATION_SEED);
    let mut pairs = 0;
    for _ in 0..total {
        let a = r.sample(&mut rng);
        let b = r.sample(&mut rng);
        let c = r.sample(&mut rng);
        pairs += 1;
        if let Some(law) = check_laws(r, &a, &b, &c) {
            return ValidationReport {
                ring,
                passed: false,
                pairs_checked: pairs,
                exhaustive: false,
                seed: Some(VALIDATION_SEED),
                violation: Some(violation(law, &a, &b, &c)),
            };
        }
    }
    ValidationReport {
        ring,
        passed: true,
        pairs_checked: pairs,
        exhaustive: false,
        seed: Some(VALIDATION_SEED),
        violation: None,
    }
}

/// Uniform index draw used by the finite samplers.
pub(crate) fn sample_index<G: Rng + ?Sized>(rng: &mut G, size: usize) -> usize {
    rng.gen_range(0..size)
}

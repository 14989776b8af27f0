//! Inner, {1,3}, {1,4}, group and Moore–Penrose inverses.
//!
//! Every value handed back by this module has been re-checked against the
//! defining equations of its kind; a formula that produces anything else
//! surfaces as [`Error::Verification`].

use serde::{Deserialize, Serialize};

use crate::backends::{finite_size, Backend, LinearProblem};
use crate::error::{Error, Result};
use crate::ring::StarRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum InverseKind {
    Inner,
    OneThree,
    OneFour,
    Group,
    MoorePenrose,
}

impl std::fmt::Display for InverseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            InverseKind::Inner => "inner",
            InverseKind::OneThree => "{1,3}",
            InverseKind::OneFour => "{1,4}",
            InverseKind::Group => "group",
            InverseKind::MoorePenrose => "Moore-Penrose",
        })
    }
}

/// One step of a construction: the equation that was solved and the
/// element that solved it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateStep<E> {
    pub equation: String,
    pub witness: E,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseResult<E> {
    pub kind: InverseKind,
    pub value: Option<E>,
    pub certificate: Vec<CertificateStep<E>>,
    /// Why no inverse exists, when `value` is `None`.
    pub reason: Option<String>,
}

impl<E> InverseResult<E> {
    fn found(kind: InverseKind, value: E, certificate: Vec<CertificateStep<E>>) -> Self {
        InverseResult {
            kind,
            value: Some(value),
            certificate,
            reason: None,
        }
    }

    fn absent(kind: InverseKind, reason: impl Into<String>) -> Self {
        InverseResult {
            kind,
            value: None,
            certificate: Vec::new(),
            reason: Some(reason.into()),
        }
    }

    pub fn exists(&self) -> bool {
        self.value.is_some()
    }
}

fn step<E>(equation: &str, witness: E) -> CertificateStep<E> {
    CertificateStep {
        equation: equation.to_string(),
        witness,
    }
}

/// The four Penrose equations for a candidate `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PenroseCheck {
    /// `aba = a`
    pub eq1: bool,
    /// `bab = b`
    pub eq2: bool,
    /// `(ab)* = ab`
    pub eq3: bool,
    /// `(ba)* = ba`
    pub eq4: bool,
}

impl PenroseCheck {
    pub fn is_moore_penrose(&self) -> bool {
        self.eq1 && self.eq2 && self.eq3 && self.eq4
    }
}

pub fn penrose_check<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem) -> PenroseCheck {
    let ab = r.mul(a, b);
    let ba = r.mul(b, a);
    PenroseCheck {
        eq1: r.mul(&ab, a) == *a,
        eq2: r.mul(&ba, b) == *b,
        eq3: r.star(&ab) == ab,
        eq4: r.star(&ba) == ba,
    }
}

pub fn is_inner_inverse<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
    r.product(&[a, x, a]) == *a
}

/// `axa = a` and `(ax)* = ax`.
pub fn is_13_inverse<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> bool {
    let ax = r.mul(a, x);
    r.mul(&ax, a) == *a && r.star(&ax) == ax
}

/// `aya = a` and `(ya)* = ya`.
pub fn is_14_inverse<R: StarRing>(r: &R, a: &R::Elem, y: &R::Elem) -> bool {
    let ya = r.mul(y, a);
    r.mul(a, &ya) == *a && r.star(&ya) == ya
}

pub fn is_group_inverse<R: StarRing>(r: &R, a: &R::Elem, b: &R::Elem) -> bool {
    let ab = r.mul(a, b);
    ab == r.mul(b, a) && r.mul(&ab, a) == *a && r.mul(b, &ab) == *b
}

fn verified<R: StarRing>(
    r: &R,
    a: &R::Elem,
    b: R::Elem,
    what: &str,
    ok: impl Fn(&R, &R::Elem, &R::Elem) -> bool,
) -> Result<R::Elem> {
    if ok(r, a, &b) {
        Ok(b)
    } else {
        Err(Error::Verification(format!(
            "{what} produced {b:?}, which fails its defining equations for a = {a:?}"
        )))
    }
}

/// A {1,3}-inverse via `x*·a*a = a`: solve `w·(a*a) = a` and take `x = w*`.
pub fn find_13<B: Backend>(r: &B, a: &B::Elem) -> Result<Option<B::Elem>> {
    let Some(w) = r.solve(&LinearProblem::left(r.a_star_a(a), a.clone()))? else {
        return Ok(None);
    };
    verified(r, a, r.star(&w), "{1,3} solver", is_13_inverse).map(Some)
}

/// A {1,4}-inverse via `aa*·y* = a`: solve `(aa*)·z = a` and take `y = z*`.
pub fn find_14<B: Backend>(r: &B, a: &B::Elem) -> Result<Option<B::Elem>> {
    let Some(z) = r.solve(&LinearProblem::right(r.aa_star(a), a.clone()))? else {
        return Ok(None);
    };
    verified(r, a, r.star(&z), "{1,4} solver", is_14_inverse).map(Some)
}

/// `a† = y·a·x` from a {1,3}-inverse `x` and a {1,4}-inverse `y`.
pub fn mp_from_13_14<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem, y: &R::Elem) -> Result<R::Elem> {
    if !is_13_inverse(r, a, x) {
        return Err(Error::Precondition(format!(
            "{x:?} is not a {{1,3}}-inverse of {a:?}"
        )));
    }
    if !is_14_inverse(r, a, y) {
        return Err(Error::Precondition(format!(
            "{y:?} is not a {{1,4}}-inverse of {a:?}"
        )));
    }
    let b = r.product(&[y, a, x]);
    verified(r, a, b, "y·a·x", |r, a, b| {
        penrose_check(r, a, b).is_moore_penrose()
    })
}

pub const EQ_13: &str = "x*·a*a = a (x is a {1,3}-inverse)";
pub const EQ_14: &str = "aa*·y* = a (y is a {1,4}-inverse)";

/// Moore–Penrose inverse through {1,3}- and {1,4}-witnesses. Absence of
/// either witness is a definite proof of non-existence.
pub fn moore_penrose<B: Backend>(r: &B, a: &B::Elem) -> Result<InverseResult<B::Elem>> {
    let Some(x) = find_13(r, a)? else {
        return Ok(InverseResult::absent(
            InverseKind::MoorePenrose,
            "x*·a*a = a has no solution, so a has no {1,3}-inverse",
        ));
    };
    let Some(y) = find_14(r, a)? else {
        return Ok(InverseResult::absent(
            InverseKind::MoorePenrose,
            "aa*·y* = a has no solution, so a has no {1,4}-inverse",
        ));
    };
    let b = mp_from_13_14(r, a, &x, &y)?;
    Ok(InverseResult::found(
        InverseKind::MoorePenrose,
        b.clone(),
        vec![step(EQ_13, x), step(EQ_14, y), step("a† = y·a·x", b)],
    ))
}

/// Every `b` in a finite ring satisfying all four Penrose equations.
pub fn penrose_solutions<B: Backend>(r: &B, a: &B::Elem) -> Result<Vec<B::Elem>> {
    let n = finite_size(r, "exhaustive Penrose search")?;
    Ok((0..n)
        .map(|i| r.element_at(i))
        .filter(|b| penrose_check(r, a, b).is_moore_penrose())
        .collect())
}

/// Ground truth by exhaustive search over a finite ring.
pub fn moore_penrose_exhaustive<B: Backend>(r: &B, a: &B::Elem) -> Result<Option<B::Elem>> {
    let n = finite_size(r, "exhaustive Penrose search")?;
    Ok((0..n)
        .map(|i| r.element_at(i))
        .find(|b| penrose_check(r, a, b).is_moore_penrose()))
}

/// [`moore_penrose`] cross-checked against the exhaustive search.
pub fn moore_penrose_oracle<B: Backend>(r: &B, a: &B::Elem) -> Result<InverseResult<B::Elem>> {
    let mut result = moore_penrose(r, a)?;
    let oracle = moore_penrose_exhaustive(r, a)?;
    if oracle != result.value {
        return Err(Error::Verification(format!(
            "witness route gave {:?} but exhaustive search gave {oracle:?}",
            result.value
        )));
    }
    let size = r.order().unwrap_or(0);
    match &oracle {
        Some(b) => result.certificate.push(step(
            &format!("exhaustive Penrose search over {size} elements agrees"),
            b.clone(),
        )),
        None => {
            result.reason = Some(format!(
                "{}; exhaustive Penrose search over {size} elements finds no candidate",
                result.reason.unwrap_or_default()
            ))
        }
    }
    Ok(result)
}

pub fn inner_inverse<B: Backend>(r: &B, a: &B::Elem) -> Result<InverseResult<B::Elem>> {
    Ok(match r.inner_inverse(a)? {
        Some(x) => {
            let x = verified(r, a, x, "inner inverse search", is_inner_inverse)?;
            InverseResult::found(InverseKind::Inner, x.clone(), vec![step("a·x·a = a", x)])
        }
        None => InverseResult::absent(
            InverseKind::Inner,
            "a·x·a = a has no solution; a is not regular",
        ),
    })
}

pub fn one_three_inverse<B: Backend>(r: &B, a: &B::Elem) -> Result<InverseResult<B::Elem>> {
    Ok(match find_13(r, a)? {
        Some(x) => InverseResult::found(InverseKind::OneThree, x.clone(), vec![step(EQ_13, x)]),
        None => InverseResult::absent(InverseKind::OneThree, "x*·a*a = a has no solution"),
    })
}

pub fn one_four_inverse<B: Backend>(r: &B, a: &B::Elem) -> Result<InverseResult<B::Elem>> {
    Ok(match find_14(r, a)? {
        Some(y) => InverseResult::found(InverseKind::OneFour, y.clone(), vec![step(EQ_14, y)]),
        None => InverseResult::absent(InverseKind::OneFour, "aa*·y* = a has no solution"),
    })
}

/// Group inverse: exhaustive search on finite rings, index-one test plus
/// linear solves on matrices over `Q(i)`.
pub fn group_inverse<B: Backend>(r: &B, a: &B::Elem) -> Result<InverseResult<B::Elem>> {
    Ok(match r.group_inverse_direct(a)? {
        Some(b) => {
            let b = verified(r, a, b, "group inverse search", is_group_inverse)?;
            InverseResult::found(
                InverseKind::Group,
                b.clone(),
                vec![step("aba = a, bab = b, ab = ba", b)],
            )
        }
        None => InverseResult::absent(InverseKind::Group, "no b with aba = a, bab = b, ab = ba"),
    })
}

/// Both inverses exist and coincide.
pub fn is_ep<B: Backend>(r: &B, a: &B::Elem) -> Result<bool> {
    let Some(mp) = moore_penrose(r, a)?.value else {
        return Ok(false);
    };
    Ok(group_inverse(r, a)?.value.as_ref() == Some(&mp))
}

/// `a*ax = 0 ⇒ ax = 0` and `yaa* = 0 ⇒ ya = 0`.
pub fn is_star_cancellable<B: Backend>(r: &B, a: &B::Elem) -> Result<bool> {
    r.star_cancellable(a)
}

/// A solution `x` of `a = aa*a·x`.
pub fn left_star_regular_witness<B: Backend>(r: &B, a: &B::Elem) -> Result<Option<B::Elem>> {
    let aaa = r.product(&[a, &r.star(a), a]);
    r.solve(&LinearProblem::right(aaa, a.clone()))
}

/// A solution `y` of `a = y·aa*a`.
pub fn right_star_regular_witness<B: Backend>(r: &B, a: &B::Elem) -> Result<Option<B::Elem>> {
    let aaa = r.product(&[a, &r.star(a), a]);
    r.solve(&LinearProblem::left(aaa, a.clone()))
}

/// `a† = (ax)*·a·x·a*` given `a = aa*a·x`.
pub fn mp_from_left_star_regular<R: StarRing>(r: &R, a: &R::Elem, x: &R::Elem) -> Result<R::Elem> {
    let a_star = r.star(a);
    if r.product(&[a, &a_star, a, x]) != *a {
        return Err(Error::Precondition(format!("a ≠ aa*a·x for x = {x:?}")));
    }
    let ax = r.mul(a, x);
    let b = r.product(&[&r.star(&ax), &ax, &a_star]);
    verified(r, a, b, "(ax)*·a·x·a*", |r, a, b| {
        penrose_check(r, a, b).is_moore_penrose()
    })
}

/// `a† = a*·y·a·(ya)*` given `a = y·aa*a`.
pub fn mp_from_right_star_regular<R: StarRing>(r: &R, a: &R::Elem, y: &R::Elem) -> Result<R::Elem> {
    let a_star = r.star(a);
    if r.product(&[y, a, &a_star, a]) != *a {
        return Err(Error::Precondition(format!("a ≠ y·aa*a for y = {y:?}")));
    }
    let ya = r.mul(y, a);
    let b = r.product(&[&a_star, &ya, &r.star(&ya)]);
    verified(r, a, b, "a*·y·a·(ya)*", |r, a, b| {
        penrose_check(r, a, b).is_moore_penrose()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{MatQi, MatZp, ZMod};
    use crate::scalar::GaussianRational;

    #[test]
    fn penrose_check_examples() {
        let r = ZMod::new(6).unwrap();
        assert!(penrose_check(&r, &0, &0).is_moore_penrose());
        assert!(penrose_check(&r, &1, &1).is_moore_penrose());
        assert!(penrose_check(&r, &2, &2).is_moore_penrose());
        let c = penrose_check(&r, &2, &1);
        assert!(!c.eq1 && !c.eq2 && c.eq3 && c.eq4);
    }

    #[test]
    fn find_13_examples() {
        let r8 = ZMod::new(8).unwrap();
        assert_eq!(find_13(&r8, &1).unwrap(), Some(1));
        assert_eq!(find_13(&r8, &2).unwrap(), None);

        // aa* = 0 over Z_2 blocks the {1,4} side only; the {1,3} side is
        // solvable with x = diag(1, 0).
        let m = MatZp::new(2, 2).unwrap();
        let a = m.matrix(&[&[1, 1], &[0, 0]]);
        let x = find_13(&m, &a).unwrap().unwrap();
        assert!(is_13_inverse(&m, &a, &x));
        assert_eq!(find_14(&m, &a).unwrap(), None);
        assert!(!moore_penrose(&m, &a).unwrap().exists());
    }

    #[test]
    fn mp_from_13_14_examples() {
        let r = ZMod::new(6).unwrap();
        assert_eq!(mp_from_13_14(&r, &1, &1, &1).unwrap(), 1);
        assert_eq!(mp_from_13_14(&r, &2, &2, &2).unwrap(), 2);
        assert!(matches!(
            mp_from_13_14(&r, &2, &1, &2),
            Err(Error::Precondition(_))
        ));

        let q = MatQi::new(2).unwrap();
        let half = GaussianRational::from_fractions(1, 2, 0, 1);
        let a = q.diag(&[
            GaussianRational::from_integers(2, 0),
            GaussianRational::zero(),
        ]);
        let x = q.diag(&[half.clone(), GaussianRational::zero()]);
        assert_eq!(mp_from_13_14(&q, &a, &x, &x).unwrap(), x);
    }

    #[test]
    fn moore_penrose_examples() {
        let r8 = ZMod::new(8).unwrap();
        assert_eq!(moore_penrose(&r8, &0).unwrap().value, Some(0));
        let none = moore_penrose(&r8, &2).unwrap();
        assert!(!none.exists());
        assert!(none.reason.is_some());
        assert_eq!(moore_penrose_exhaustive(&r8, &2).unwrap(), None);
        assert!(!moore_penrose_oracle(&r8, &2).unwrap().exists());

        let q = MatQi::new(2).unwrap();
        let a = q.from_integers(&[&[1, 1], &[0, 0]]);
        let expect = q.parse_matrix(&[&["1/2", "0"], &["1/2", "0"]]).unwrap();
        let res = moore_penrose(&q, &a).unwrap();
        assert_eq!(res.value, Some(expect));
        assert_eq!(res.certificate.len(), 3);
    }

    #[test]
    fn group_inverse_examples() {
        let r6 = ZMod::new(6).unwrap();
        assert_eq!(group_inverse(&r6, &1).unwrap().value, Some(1));
        assert_eq!(group_inverse(&r6, &2).unwrap().value, Some(2));
        let q = MatQi::new(2).unwrap();
        assert!(!group_inverse(&q, &q.from_integers(&[&[0, 1], &[0, 0]]))
            .unwrap()
            .exists());
    }

    #[test]
    fn ep_examples() {
        let r6 = ZMod::new(6).unwrap();
        assert!(is_ep(&r6, &1).unwrap());
        assert!(is_ep(&r6, &2).unwrap());
        let q = MatQi::new(2).unwrap();
        assert!(!is_ep(&q, &q.from_integers(&[&[1, 1], &[0, 0]])).unwrap());
    }

    #[test]
    fn star_cancellable_examples() {
        assert!(is_star_cancellable(&ZMod::new(4).unwrap(), &0).unwrap());
        assert!(!is_star_cancellable(&ZMod::new(4).unwrap(), &2).unwrap());
        assert!(is_star_cancellable(&ZMod::new(6).unwrap(), &2).unwrap());
    }

    #[test]
    fn star_regular_formulas() {
        let r6 = ZMod::new(6).unwrap();
        assert_eq!(mp_from_left_star_regular(&r6, &1, &1).unwrap(), 1);
        assert_eq!(mp_from_left_star_regular(&r6, &2, &1).unwrap(), 2);
        assert_eq!(mp_from_right_star_regular(&r6, &2, &1).unwrap(), 2);
        assert!(matches!(
            mp_from_left_star_regular(&r6, &2, &0),
            Err(Error::Precondition(_))
        ));

        let q = MatQi::new(1).unwrap();
        let a = q.from_integers(&[&[2]]);
        let x = q.parse_matrix(&[&["1/4"]]).unwrap();
        let half = q.parse_matrix(&[&["1/2"]]).unwrap();
        assert_eq!(mp_from_left_star_regular(&q, &a, &x).unwrap(), half);
        assert_eq!(mp_from_right_star_regular(&q, &a, &x).unwrap(), half);
    }
}

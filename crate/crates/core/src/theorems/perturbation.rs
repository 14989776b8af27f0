//! Unit perturbations: transferring an inverse of `1 - ab` to `1 - ba`,
//! and the invertibility tests built from an inner inverse.

use super::{check_exponent, Side};
use crate::backends::Backend;
use crate::error::{Error, Result};
use crate::ginverse::is_inner_inverse;
use crate::ring::StarRing;

fn one_minus<R: StarRing>(r: &R, x: &R::Elem, y: &R::Elem) -> R::Elem {
    r.sub(&r.one(), &r.mul(x, y))
}

/// Given `u` inverting `1 - ab` on both sides, returns `1 + b·u·a`, the
/// inverse of `1 - ba`.
pub fn jacobson_transfer<R: StarRing>(
    r: &R,
    a: &R::Elem,
    b: &R::Elem,
    u: &R::Elem,
) -> Result<R::Elem> {
    let t = one_minus(r, a, b);
    if !r.is_one(&r.mul(u, &t)) || !r.is_one(&r.mul(&t, u)) {
        return Err(Error::Precondition(format!(
            "{u:?} is not an inverse of 1 - ab"
        )));
    }
    let v = r.add(&r.one(), &r.product(&[b, u, a]));
    let s = one_minus(r, b, a);
    if r.is_one(&r.mul(&v, &s)) && r.is_one(&r.mul(&s, &v)) {
        Ok(v)
    } else {
        Err(Error::Verification(format!(
            "1 + bua = {v:?} does not invert 1 - ba"
        )))
    }
}

/// The one-sided transfer: a left (right) inverse `u` of `1 - ab` gives the
/// left (right) inverse `1 + b·u·a` of `1 - ba`.
pub fn jacobson_transfer_one_sided<R: StarRing>(
    r: &R,
    a: &R::Elem,
    b: &R::Elem,
    u: &R::Elem,
    side: Side,
) -> Result<R::Elem> {
    let inverts = |x: &R::Elem, t: &R::Elem| match side {
        Side::Left => r.is_one(&r.mul(x, t)),
        Side::Right => r.is_one(&r.mul(t, x)),
    };
    if !inverts(u, &one_minus(r, a, b)) {
        return Err(Error::Precondition(format!(
            "{u:?} is not a {side:?} inverse of 1 - ab"
        )));
    }
    let v = r.add(&r.one(), &r.product(&[b, u, a]));
    if inverts(&v, &one_minus(r, b, a)) {
        Ok(v)
    } else {
        Err(Error::Verification(format!(
            "1 + bua = {v:?} is not a {side:?} inverse of 1 - ba"
        )))
    }
}

/// The four perturbed units built from an inner inverse `a⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PerturbedUnit {
    /// `v = (a*a)^n + 1 - a⁻a` invertible
    VInvertible,
    /// `v` right invertible
    VRightInvertible,
    /// `u = (aa*)^n + 1 - aa⁻` invertible
    UInvertible,
    /// `u` left invertible
    ULeftInvertible,
}

impl PerturbedUnit {
    pub const ALL: [PerturbedUnit; 4] = [
        PerturbedUnit::VInvertible,
        PerturbedUnit::VRightInvertible,
        PerturbedUnit::UInvertible,
        PerturbedUnit::ULeftInvertible,
    ];

    /// Position in the theorem's list, which starts at (2).
    pub fn condition(self) -> u8 {
        match self {
            PerturbedUnit::VInvertible => 2,
            PerturbedUnit::VRightInvertible => 3,
            PerturbedUnit::UInvertible => 4,
            PerturbedUnit::ULeftInvertible => 5,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PerturbedUnit::VInvertible => "v invertible",
            PerturbedUnit::VRightInvertible => "v right invertible",
            PerturbedUnit::UInvertible => "u invertible",
            PerturbedUnit::ULeftInvertible => "u left invertible",
        }
    }
}

/// Builds `v` or `u` from `a_inner` and decides the requested
/// invertibility.
pub fn t38_condition<B: Backend>(
    r: &B,
    a: &B::Elem,
    a_inner: &B::Elem,
    n: u32,
    variant: PerturbedUnit,
) -> Result<bool> {
    check_exponent("n", n)?;
    if !is_inner_inverse(r, a, a_inner) {
        return Err(Error::Precondition(format!(
            "{a_inner:?} is not an inner inverse of {a:?}"
        )));
    }
    let one = r.one();
    let unit = match variant {
        PerturbedUnit::VInvertible | PerturbedUnit::VRightInvertible => {
            r.sub(&r.add(&r.pow(&r.a_star_a(a), n), &one), &r.mul(a_inner, a))
        }
        PerturbedUnit::UInvertible | PerturbedUnit::ULeftInvertible => {
            r.sub(&r.add(&r.pow(&r.aa_star(a), n), &one), &r.mul(a, a_inner))
        }
    };
    let witness = match variant {
        PerturbedUnit::VInvertible | PerturbedUnit::UInvertible => r.inverse(&unit)?,
        PerturbedUnit::VRightInvertible => r.right_inverse(&unit)?,
        PerturbedUnit::ULeftInvertible => r.left_inverse(&unit)?,
    };
    Ok(witness.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{MatQi, MatZp, ZMod};

    #[test]
    fn transfer_examples() {
        let r6 = ZMod::new(6).unwrap();
        assert_eq!(jacobson_transfer(&r6, &0, &4, &1).unwrap(), 1);
        assert_eq!(jacobson_transfer(&r6, &1, &2, &5).unwrap(), 5);
        assert!(matches!(
            jacobson_transfer(&r6, &2, &2, &1),
            Err(Error::Precondition(_))
        ));
        for side in [Side::Left, Side::Right] {
            assert_eq!(
                jacobson_transfer_one_sided(&r6, &1, &2, &5, side).unwrap(),
                5
            );
        }
    }

    #[test]
    fn transfer_on_matrices() {
        let q = MatQi::new(2).unwrap();
        let a = q.from_integers(&[&[0, 1], &[0, 0]]);
        let b = q.from_integers(&[&[0, 0], &[1, 0]]);
        let s = q.sub(&q.one(), &q.mul(&a, &b));
        let t = q.sub(&q.one(), &q.mul(&b, &a));
        assert_eq!(s, q.from_integers(&[&[0, 0], &[0, 1]]));
        assert_eq!(t, q.from_integers(&[&[1, 0], &[0, 0]]));
        assert!(q.inverse(&s).unwrap().is_none());
        assert!(q.inverse(&t).unwrap().is_none());

        let b = q.from_integers(&[&[1, 0], &[2, 1]]);
        let s = q.sub(&q.one(), &q.mul(&a, &b));
        let u = q.inverse(&s).unwrap().unwrap();
        let v = jacobson_transfer(&q, &a, &b, &u).unwrap();
        assert!(q.is_one(&q.mul(&v, &q.sub(&q.one(), &q.mul(&b, &a)))));
    }

    #[test]
    fn perturbed_unit_examples() {
        let r6 = ZMod::new(6).unwrap();
        for variant in PerturbedUnit::ALL {
            assert!(t38_condition(&r6, &1, &1, 1, variant).unwrap());
            assert!(t38_condition(&r6, &2, &2, 1, variant).unwrap());
        }
        let m = MatZp::new(2, 2).unwrap();
        let a = m.matrix(&[&[1, 0], &[0, 0]]);
        assert!(t38_condition(&m, &a, &a, 1, PerturbedUnit::UInvertible).unwrap());
        let b = m.matrix(&[&[1, 1], &[0, 0]]);
        for variant in PerturbedUnit::ALL {
            assert!(!t38_condition(&m, &b, &a, 1, variant).unwrap());
        }
    }

    #[test]
    fn rejects_non_inner_inverse() {
        let r8 = ZMod::new(8).unwrap();
        assert!(matches!(
            t38_condition(&r8, &2, &2, 1, PerturbedUnit::VInvertible),
            Err(Error::Precondition(_))
        ));
    }
}

//! Existential criteria: an auxiliary element (projection, Hermitian,
//! idempotent or arbitrary) that fixes or annihilates `a` and is tied to a
//! power of `aa*` or `a*a`. Decided by scanning a finite carrier.

use super::{all_elements, check_exponent, Witness};
use crate::backends::{Backend, LinearProblem};
use crate::error::{Error, Result};
use crate::ginverse::{moore_penrose, penrose_check};
use crate::ring::{is_hermitian, is_idempotent, is_projection, StarRing};

/// Which product the auxiliary element is compared with.
#[derive(Clone, Copy)]
enum Power {
    /// `(aa*)^n`
    AaStar,
    /// `(a*a)^n`
    AStarA,
}

impl Power {
    fn eval<R: StarRing>(self, r: &R, a: &R::Elem, n: u32) -> R::Elem {
        match self {
            Power::AaStar => r.pow(&r.aa_star(a), n),
            Power::AStarA => r.pow(&r.a_star_a(a), n),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Projection,
    Hermitian,
    Idempotent,
    Arbitrary,
}

impl Kind {
    fn admits<R: StarRing>(self, r: &R, x: &R::Elem) -> bool {
        match self {
            Kind::Projection => is_projection(r, x),
            Kind::Hermitian => is_hermitian(r, x),
            Kind::Idempotent => is_idempotent(r, x),
            Kind::Arbitrary => true,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Multiple {
    /// `x ∈ Rs ∩ sR`
    Both,
    /// `x ∈ Rs`
    Left,
    /// `x ∈ sR`
    Right,
}

fn out_of_range(theorem: &str, k: u8, max: u8) -> Error {
    Error::InvalidArgument(format!("{theorem} has conditions 1..={max}, got {k}"))
}

fn mp_witness<B: Backend>(
    r: &B,
    a: &B::Elem,
    id: String,
    n: u32,
) -> Result<Option<Witness<B::Elem>>> {
    Ok(moore_penrose(r, a)?
        .value
        .map(|mp| Witness::new(id, n, 1).with("mp", mp)))
}

/// Scans for `x` of the given kind with `x` fixing `a` on `side` and `x` a
/// multiple of `s`. Factors are stored under `<key>_left` (`x = f·s`) and
/// `<key>_right` (`x = s·f`).
#[allow(clippy::too_many_arguments)]
fn scan_multiple<B: Backend>(
    r: &B,
    a: &B::Elem,
    s: &B::Elem,
    kind: Kind,
    fixes_on_left: bool,
    multiple: Multiple,
    key: &str,
    w: Witness<B::Elem>,
) -> Result<Option<Witness<B::Elem>>> {
    for x in all_elements(r, "existential scan")? {
        if !kind.admits(r, &x) {
            continue;
        }
        let fixed = if fixes_on_left {
            r.mul(&x, a)
        } else {
            r.mul(a, &x)
        };
        if fixed != *a {
            continue;
        }
        let left = match multiple {
            Multiple::Both | Multiple::Left => {
                match r.solve(&LinearProblem::left(s.clone(), x.clone()))? {
                    Some(f) => Some(f),
                    None => continue,
                }
            }
            Multiple::Right => None,
        };
        let right = match multiple {
            Multiple::Both | Multiple::Right => {
                match r.solve(&LinearProblem::right(s.clone(), x.clone()))? {
                    Some(f) => Some(f),
                    None => continue,
                }
            }
            Multiple::Left => None,
        };
        let mut w = w.with(key, x);
        if let Some(f) = left {
            w = w.with(&format!("{key}_left"), f);
        }
        if let Some(f) = right {
            w = w.with(&format!("{key}_right"), f);
        }
        return Ok(Some(w));
    }
    Ok(None)
}

/// Conditions of the form "there is `p` with `pa = a` and `p` a multiple of
/// `(aa*)^n`": (2) projection, two-sided; (3) Hermitian, left multiple;
/// (4) Hermitian, right multiple; (5) arbitrary, left multiple. Condition
/// (1) is existence of `a†`.
pub fn t32_condition<B: Backend>(
    r: &B,
    a: &B::Elem,
    k: u8,
    n: u32,
) -> Result<Option<Witness<B::Elem>>> {
    check_exponent("n", n)?;
    let id = format!("T3.2({k})");
    let (kind, multiple, key) = match k {
        1 => return mp_witness(r, a, id, n),
        2 => (Kind::Projection, Multiple::Both, "p"),
        3 => (Kind::Hermitian, Multiple::Left, "q"),
        4 => (Kind::Hermitian, Multiple::Right, "r"),
        5 => (Kind::Arbitrary, Multiple::Left, "b"),
        _ => return Err(out_of_range("T3.2", k, 5)),
    };
    let s = Power::AaStar.eval(r, a, n);
    scan_multiple(r, a, &s, kind, true, multiple, key, Witness::new(id, n, 1))
}

/// The mirror of [`t32_condition`]: `aw = a` with `w` tied to `(a*a)^n`;
/// (2) projection, two-sided; (3) Hermitian, right multiple; (4) Hermitian,
/// left multiple; (5) arbitrary, right multiple.
pub fn t33_condition<B: Backend>(
    r: &B,
    a: &B::Elem,
    k: u8,
    n: u32,
) -> Result<Option<Witness<B::Elem>>> {
    check_exponent("n", n)?;
    let id = format!("T3.3({k})");
    let (kind, multiple, key) = match k {
        1 => return mp_witness(r, a, id, n),
        2 => (Kind::Projection, Multiple::Both, "w"),
        3 => (Kind::Hermitian, Multiple::Right, "u"),
        4 => (Kind::Hermitian, Multiple::Left, "v"),
        5 => (Kind::Arbitrary, Multiple::Right, "c"),
        _ => return Err(out_of_range("T3.3", k, 5)),
    };
    let s = Power::AStarA.eval(r, a, n);
    scan_multiple(r, a, &s, kind, false, multiple, key, Witness::new(id, n, 1))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Invertibility {
    TwoSided,
    OneSided,
}

/// The seven-condition scan shared by the annihilating criteria.
/// `on_left` selects `xa = 0` with a left inverse `y·(s + x) = 1`;
/// otherwise `ax = 0` with a right inverse `(s + x)·x' = 1`.
fn perturbed_power<B: Backend>(
    r: &B,
    a: &B::Elem,
    k: u8,
    n: u32,
    theorem: &str,
    on_left: bool,
) -> Result<Option<Witness<B::Elem>>> {
    check_exponent("n", n)?;
    let id = format!("{theorem}({k})");
    let keys = if on_left {
        ["q", "f", "c"]
    } else {
        ["p", "e", "b"]
    };
    let (kind, key, inv) = match k {
        1 => return mp_witness(r, a, id, n),
        2 => (Kind::Projection, keys[0], Invertibility::TwoSided),
        3 => (Kind::Projection, keys[0], Invertibility::OneSided),
        4 => (Kind::Idempotent, keys[1], Invertibility::TwoSided),
        5 => (Kind::Idempotent, keys[1], Invertibility::OneSided),
        6 => (Kind::Arbitrary, keys[2], Invertibility::TwoSided),
        7 => (Kind::Arbitrary, keys[2], Invertibility::OneSided),
        _ => return Err(out_of_range(theorem, k, 7)),
    };
    let s = if on_left {
        Power::AaStar.eval(r, a, n)
    } else {
        Power::AStarA.eval(r, a, n)
    };
    for x in all_elements(r, "existential scan")? {
        let kills = if on_left { r.mul(&x, a) } else { r.mul(a, &x) };
        if !r.is_zero(&kills) || !kind.admits(r, &x) {
            continue;
        }
        let t = r.add(&s, &x);
        let found = match (inv, on_left) {
            (Invertibility::TwoSided, _) => r.inverse(&t)?,
            (Invertibility::OneSided, true) => r.left_inverse(&t)?,
            (Invertibility::OneSided, false) => r.right_inverse(&t)?,
        };
        if let Some(y) = found {
            let name = if on_left { "y" } else { "x" };
            return Ok(Some(Witness::new(id, n, 1).with(key, x).with(name, y)));
        }
    }
    Ok(None)
}

/// "There is `q` with `qa = 0` and `(aa*)^n + q` (left) invertible", for
/// `q` a projection (2, 3), an idempotent (4, 5) or arbitrary (6, 7). The
/// witness carries `y` with `y·((aa*)^n + q) = 1`.
pub fn t34_condition<B: Backend>(
    r: &B,
    a: &B::Elem,
    k: u8,
    n: u32,
) -> Result<Option<Witness<B::Elem>>> {
    perturbed_power(r, a, k, n, "T3.4", true)
}

/// "There is `p` with `ap = 0` and `(a*a)^n + p` (right) invertible"; the
/// witness carries `x` with `((a*a)^n + p)·x = 1`.
pub fn t35_condition<B: Backend>(
    r: &B,
    a: &B::Elem,
    k: u8,
    n: u32,
) -> Result<Option<Witness<B::Elem>>> {
    perturbed_power(r, a, k, n, "T3.5", false)
}

fn mismatch<E>(w: &Witness<E>, what: &str) -> Error {
    Error::WitnessMismatch(format!("{}: {what}", w.condition))
}

fn perturbation<'w, E: std::fmt::Debug>(w: &'w Witness<E>, keys: [&str; 3]) -> Option<&'w E> {
    keys.iter().find_map(|k| w.get(k))
}

fn finish<R: StarRing>(r: &R, a: &R::Elem, b: R::Elem, w: &Witness<R::Elem>) -> Result<R::Elem> {
    if penrose_check(r, a, &b).is_moore_penrose() {
        Ok(b)
    } else {
        Err(Error::Verification(format!(
            "{} formula gave {b:?}, which is not the Moore-Penrose inverse of {a:?}",
            w.condition
        )))
    }
}

/// `a† = a*·y·(aa*)^(2n-1)·y*` for `y` a left inverse of `(aa*)^n + q`
/// with `qa = 0`. A witness without `q` is accepted when `y(aa*)^n a = a`.
pub fn t34_formula<R: StarRing>(r: &R, a: &R::Elem, w: &Witness<R::Elem>) -> Result<R::Elem> {
    check_exponent("n", w.n)?;
    if !w.condition.starts_with("T3.4") {
        return Err(mismatch(w, "expected a T3.4 witness"));
    }
    let y = w.require("y")?;
    let s = r.pow(&r.aa_star(a), w.n);
    if let Some(q) = perturbation(w, ["q", "f", "c"]) {
        if !r.is_zero(&r.mul(q, a)) {
            return Err(mismatch(w, "q·a ≠ 0"));
        }
        if !r.is_one(&r.mul(y, &r.add(&s, q))) {
            return Err(mismatch(w, "y·((aa*)^n + q) ≠ 1"));
        }
    }
    if r.product(&[y, &s, a]) != *a {
        return Err(mismatch(w, "a ≠ y·(aa*)^n·a"));
    }
    let b = r.product(&[
        &r.star(a),
        y,
        &r.pow(&r.aa_star(a), 2 * w.n - 1),
        &r.star(y),
    ]);
    finish(r, a, b, w)
}

/// `a† = x*·(a*a)^(2n-1)·x·a*` for `x` a right inverse of `(a*a)^n + p`
/// with `ap = 0`. A witness without `p` is accepted when `a(a*a)^n x = a`.
pub fn t35_formula<R: StarRing>(r: &R, a: &R::Elem, w: &Witness<R::Elem>) -> Result<R::Elem> {
    check_exponent("n", w.n)?;
    if !w.condition.starts_with("T3.5") {
        return Err(mismatch(w, "expected a T3.5 witness"));
    }
    let x = w.require("x")?;
    let s = r.pow(&r.a_star_a(a), w.n);
    if let Some(p) = perturbation(w, ["p", "e", "b"]) {
        if !r.is_zero(&r.mul(a, p)) {
            return Err(mismatch(w, "a·p ≠ 0"));
        }
        if !r.is_one(&r.mul(&r.add(&s, p), x)) {
            return Err(mismatch(w, "((a*a)^n + p)·x ≠ 1"));
        }
    }
    if r.product(&[a, &s, x]) != *a {
        return Err(mismatch(w, "a ≠ a·(a*a)^n·x"));
    }
    let b = r.product(&[
        &r.star(x),
        &r.pow(&r.a_star_a(a), 2 * w.n - 1),
        x,
        &r.star(a),
    ]);
    finish(r, a, b, w)
}

fn supported<B: Backend>(r: &B, a: &B::Elem, co: bool) -> Result<Option<Witness<B::Elem>>> {
    let (id, key, gram) = if co {
        ("C3.6(3)", "q", r.aa_star(a))
    } else {
        ("C3.6(2)", "p", r.a_star_a(a))
    };
    let shifted = r.add(&gram, &r.one());
    for p in all_elements(r, "support scan")? {
        let fixed = if co { r.mul(&p, a) } else { r.mul(a, &p) };
        if fixed != *a || !is_projection(r, &p) {
            continue;
        }
        if let Some(inv) = r.inverse(&r.sub(&shifted, &p))? {
            return Ok(Some(
                Witness::new(id, 1, 1).with(key, p).with("inverse", inv),
            ));
        }
    }
    Ok(None)
}

/// A projection `p` with `ap = a` and `a*a + 1 - p` invertible.
pub fn is_well_supported<B: Backend>(r: &B, a: &B::Elem) -> Result<Option<Witness<B::Elem>>> {
    supported(r, a, false)
}

/// A projection `q` with `qa = a` and `aa* + 1 - q` invertible.
pub fn is_co_supported<B: Backend>(r: &B, a: &B::Elem) -> Result<Option<Witness<B::Elem>>> {
    supported(r, a, true)
}

//! Per-element checks of the supporting identities: EP-ness of the Gram
//! products and their powers, the *-cancellable characterizations, the
//! closed forms from {1,3}/{1,4}-inverses and from *-regularity, the
//! equal-ideal criterion, and the Jacobson transfer.
//!
//! Each check yields a [`CheckOutcome`]. Equivalences expect the verdict to
//! match Moore–Penrose existence; implications and formulas expect `true`.

use super::perturbation::{jacobson_transfer, jacobson_transfer_one_sided};
use super::sweep::CheckOutcome;
use super::{all_elements, Side};
use crate::backends::{Backend, LinearProblem};
use crate::error::Result;
use crate::ginverse::{
    find_13, find_14, group_inverse, is_ep, is_star_cancellable, left_star_regular_witness,
    moore_penrose, mp_from_13_14, mp_from_left_star_regular, mp_from_right_star_regular,
    right_star_regular_witness,
};
use crate::ring::is_normal;

fn mp<B: Backend>(r: &B, x: &B::Elem) -> Result<Option<B::Elem>> {
    Ok(moore_penrose(r, x)?.value)
}

/// Identities that hold whenever `a†` exists; skipped otherwise.
pub fn implications<B: Backend>(
    r: &B,
    a: &B::Elem,
    dagger: &B::Elem,
    max_n: u32,
    max_m: u32,
) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let aa = r.aa_star(a);
    let ata = r.a_star_a(a);
    let dagger_star = r.star(dagger);

    let star_mp = mp(r, &r.star(a))?;
    out.push(CheckOutcome::holds(
        "(a*)† = (a†)*",
        1,
        1,
        star_mp.as_ref() == Some(&dagger_star),
        || format!("(a*)† = {star_mp:?}"),
    ));

    let aa_mp = mp(r, &aa)?;
    let ata_mp = mp(r, &ata)?;
    let ok = is_ep(r, &aa)?
        && is_ep(r, &ata)?
        && aa_mp == Some(r.mul(&dagger_star, dagger))
        && ata_mp == Some(r.mul(dagger, &dagger_star));
    out.push(CheckOutcome::holds("gram products EP", 1, 1, ok, || {
        format!("(aa*)† = {aa_mp:?}, (a*a)† = {ata_mp:?}")
    }));

    if is_normal(r, a) {
        let mut ok = is_ep(r, a)?;
        let mut bad = None;
        for k in 1..=4 {
            let got = mp(r, &r.pow(a, k))?;
            if got != Some(r.pow(dagger, k)) {
                ok = false;
                bad.get_or_insert((k, got));
            }
        }
        out.push(CheckOutcome::holds(
            "normal: EP and (a^k)† = (a†)^k",
            4,
            1,
            ok,
            || format!("first failing power: {bad:?}"),
        ));
    }

    for n in 1..=max_n {
        for m in 1..=max_m {
            let ok = is_ep(r, &r.pow(&aa, n))? && is_ep(r, &r.pow(&ata, m))?;
            out.push(CheckOutcome::holds("gram powers EP", n, m, ok, String::new));
        }
    }

    for n in 1..=max_n {
        let s = r.pow(&aa, n);
        let t = r.pow(&ata, n);
        let ok = match (mp(r, &s)?, mp(r, &t)?) {
            (Some(s_mp), Some(t_mp)) => {
                r.product(&[&s, &s_mp, a]) == *a && r.product(&[a, &t_mp, &t]) == *a
            }
            _ => false,
        };
        out.push(CheckOutcome::holds(
            "gram power range identities",
            n,
            n,
            ok,
            String::new,
        ));
    }
    Ok(out)
}

/// Conditions equivalent to existence of `a†`, plus the formulas they carry.
pub fn equivalences<B: Backend>(
    r: &B,
    a: &B::Elem,
    dagger: Option<&B::Elem>,
) -> Result<Vec<CheckOutcome>> {
    let exists = dagger.is_some();
    let mut out = Vec::new();
    let a_star = r.star(a);
    let aa = r.aa_star(a);
    let ata = r.a_star_a(a);
    let cancellable = is_star_cancellable(r, a)?;

    out.push(CheckOutcome::equivalence(
        "a* has a Moore-Penrose inverse",
        1,
        1,
        exists,
        mp(r, &a_star)?.is_some(),
    ));
    let gram_regular =
        cancellable && r.inner_inverse(&aa)?.is_some() && r.inner_inverse(&ata)?.is_some();
    out.push(CheckOutcome::equivalence(
        "cancellable, aa* and a*a regular",
        1,
        1,
        exists,
        gram_regular,
    ));
    let triple = r.product(&[&a_star, a, &a_star]);
    let triple_regular = cancellable && r.inner_inverse(&triple)?.is_some();
    out.push(CheckOutcome::equivalence(
        "cancellable, a*aa* regular",
        1,
        1,
        exists,
        triple_regular,
    ));
    let in_both = r.solve(&LinearProblem::left(ata, a.clone()))?.is_some()
        && r.solve(&LinearProblem::right(aa, a.clone()))?.is_some();
    out.push(CheckOutcome::equivalence(
        "a in Ra*a and aa*R",
        1,
        1,
        exists,
        in_both,
    ));

    let x13 = find_13(r, a)?;
    let y14 = find_14(r, a)?;
    out.push(CheckOutcome::equivalence(
        "{1,3}- and {1,4}-invertible",
        1,
        1,
        exists,
        x13.is_some() && y14.is_some(),
    ));
    if let (Some(x), Some(y), Some(d)) = (&x13, &y14, dagger) {
        let b = mp_from_13_14(r, a, x, y)?;
        out.push(CheckOutcome::formula("y·a·x formula", 1, 1, &b, d));
    }

    let x = left_star_regular_witness(r, a)?;
    let y = right_star_regular_witness(r, a)?;
    out.push(CheckOutcome::equivalence(
        "a in aa*aR",
        1,
        1,
        exists,
        x.is_some(),
    ));
    out.push(CheckOutcome::equivalence(
        "a in Raa*a",
        1,
        1,
        exists,
        y.is_some(),
    ));
    if let (Some(x), Some(d)) = (&x, dagger) {
        let b = mp_from_left_star_regular(r, a, x)?;
        out.push(CheckOutcome::formula("(ax)*·a·x·a* formula", 1, 1, &b, d));
    }
    if let (Some(y), Some(d)) = (&y, dagger) {
        let b = mp_from_right_star_regular(r, a, y)?;
        out.push(CheckOutcome::formula("a*·y·a·(ya)* formula", 1, 1, &b, d));
    }

    if r.same_right_ideal(a, &a_star)? {
        out.push(CheckOutcome::equivalence(
            "aR = a*R: EP",
            1,
            1,
            exists,
            is_ep(r, a)?,
        ));
        out.push(CheckOutcome::equivalence(
            "aR = a*R: group invertible",
            1,
            1,
            exists,
            group_inverse(r, a)?.exists(),
        ));
    }
    Ok(out)
}

/// `1 - ab` and `1 - ba` are together (left, right, two-sided) invertible
/// for every `b`, and the transfer `1 + b·u·a` inverts `1 - ba`.
pub fn jacobson<B: Backend>(r: &B, a: &B::Elem) -> Result<CheckOutcome> {
    let one = r.one();
    for b in all_elements(r, "Jacobson scan")? {
        let s = r.sub(&one, &r.mul(a, &b));
        let t = r.sub(&one, &r.mul(&b, a));
        let pairs = [
            (r.left_inverse(&s)?, r.left_inverse(&t)?, Some(Side::Left)),
            (
                r.right_inverse(&s)?,
                r.right_inverse(&t)?,
                Some(Side::Right),
            ),
            (r.inverse(&s)?, r.inverse(&t)?, None),
        ];
        for (us, ut, side) in pairs {
            let transferred = match (&us, side) {
                (Some(u), Some(side)) => jacobson_transfer_one_sided(r, a, &b, u, side).is_ok(),
                (Some(u), None) => jacobson_transfer(r, a, &b, u).is_ok(),
                (None, _) => true,
            };
            if us.is_some() != ut.is_some() || !transferred {
                let side = side.map_or("two-sided".to_string(), |s| format!("{s:?}"));
                return Ok(CheckOutcome::holds(
                    "Jacobson transfer",
                    1,
                    1,
                    false,
                    || {
                        format!("b = {b:?}: {side} invertibility of 1-ab and 1-ba disagree or transfer fails")
                    },
                ));
            }
        }
    }
    Ok(CheckOutcome::holds(
        "Jacobson transfer",
        1,
        1,
        true,
        String::new,
    ))
}

/// All lemma checks for one element.
pub fn lemma_checks<B: Backend>(
    r: &B,
    a: &B::Elem,
    dagger: Option<&B::Elem>,
    max_n: u32,
    max_m: u32,
) -> Result<Vec<CheckOutcome>> {
    let mut out = equivalences(r, a, dagger)?;
    if let Some(d) = dagger {
        out.extend(implications(r, a, d, max_n, max_m)?);
    }
    out.push(jacobson(r, a)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::backends::{MatZp, ZMod};
    use crate::ginverse::moore_penrose_exhaustive;

    fn assert_clean<B: Backend>(r: &B) {
        for a in all_elements(r, "test").unwrap() {
            let d = moore_penrose_exhaustive(r, &a).unwrap();
            for c in lemma_checks(r, &a, d.as_ref(), 2, 2).unwrap() {
                assert!(c.agrees(), "{a:?}: {c:?}");
            }
        }
    }

    #[test]
    fn clean_on_small_rings() {
        for n in [2, 4, 6, 8, 12] {
            assert_clean(&ZMod::new(n).unwrap());
        }
        assert_clean(&MatZp::new(2, 2).unwrap());
    }

    #[test]
    fn non_mp_element_fails_every_equivalence() {
        let r8 = ZMod::new(8).unwrap();
        for c in equivalences(&r8, &2, None).unwrap() {
            assert!(!c.actual, "{c:?}");
        }
    }
}

//! Worked examples through the public API, mostly via runtime-typed
//! elements as the command line uses them.

use starring::ginverse::{group_inverse, is_ep, is_star_cancellable, moore_penrose, mp_from_13_14};
use starring::ring::validate;
use starring::{
    classify, enumerate, parse_element, with_backend, AnyRing, Backend, Error, LinearProblem,
    MatQi, MatZp, RingDescriptor, StarRing, ZMod,
};

const Z6: RingDescriptor = RingDescriptor::ZMod { n: 6 };
const M22: RingDescriptor = RingDescriptor::MatZp { p: 2, k: 2 };

fn el(ring: RingDescriptor, text: &str) -> starring::Element {
    parse_element(ring, text).unwrap()
}

#[test]
fn dynamic_arithmetic() {
    assert_eq!(el(Z6, "4").mul(&el(Z6, "2")).unwrap(), el(Z6, "2"));
    assert_eq!(el(Z6, "4").pow(2).unwrap(), el(Z6, "4"));
    let a = el(M22, "[[1,1],[0,0]]");
    assert_eq!(
        a.mul(&el(M22, "[[1,0],[1,0]]")).unwrap(),
        el(M22, "[[0,0],[0,0]]")
    );
    assert_eq!(a.star().unwrap(), el(M22, "[[1,0],[1,0]]"));
    assert_eq!(a.pow(2).unwrap(), a);
    assert_eq!(a.pow(0).unwrap(), AnyRing::new(M22).unwrap().one());
    let q1 = RingDescriptor::MatQi { k: 1 };
    assert_eq!(el(q1, r#"[["i"]]"#).star().unwrap(), el(q1, r#"[["-i"]]"#));
    assert!(matches!(
        el(Z6, "1").add(&el(M22, "[[1,0],[0,1]]")),
        Err(Error::RingMismatch { .. })
    ));
}

#[test]
fn any_ring_times_one() {
    for ring in [Z6, M22, RingDescriptor::MatZp { p: 3, k: 2 }] {
        let any = AnyRing::new(ring).unwrap();
        with_backend!(&any, r => {
            for a in enumerate(r).unwrap() {
                assert_eq!(r.mul(&a, &r.one()), a);
                assert_eq!(r.mul(&r.one(), &a), a);
            }
        });
    }
}

#[test]
fn descriptors_are_checked() {
    for bad in [
        RingDescriptor::ZMod { n: 1 },
        RingDescriptor::MatZp { p: 4, k: 2 },
        RingDescriptor::MatZp { p: 3, k: 0 },
        RingDescriptor::MatQi { k: 0 },
    ] {
        assert!(
            matches!(AnyRing::new(bad), Err(Error::InvalidDescriptor(_))),
            "{bad}"
        );
    }
}

#[test]
fn classification() {
    let z6 = ZMod::new(6).unwrap();
    let f = classify(&z6, &3).unwrap();
    assert!(f.idempotent && f.projection && f.hermitian && f.normal);
    assert!(!f.unit && !f.left_invertible && !f.right_invertible);
    let one = classify(&z6, &1).unwrap();
    assert!(one.idempotent && one.projection && one.hermitian && one.normal && one.unit);

    let q = MatQi::new(2).unwrap();
    let f = classify(&q, &q.from_integers(&[&[0, 1], &[0, 0]])).unwrap();
    assert!(!f.idempotent && !f.projection && !f.hermitian && !f.normal && !f.unit);
}

#[test]
fn validation_reports() {
    let rep = validate(&ZMod::new(6).unwrap(), 1_000_000);
    assert!(rep.passed && rep.exhaustive);
    assert_eq!(rep.pairs_checked, 36);
    let rep = validate(&MatZp::new(2, 2).unwrap(), 1_000_000);
    assert!(rep.passed);
    assert_eq!(rep.pairs_checked, 256);
    let rep = validate(&MatQi::new(2).unwrap(), 200);
    assert!(rep.passed && !rep.exhaustive);
}

#[test]
fn enumeration() {
    assert_eq!(
        enumerate(&ZMod::new(6).unwrap())
            .unwrap()
            .collect::<Vec<_>>(),
        vec![0, 1, 2, 3, 4, 5]
    );
    assert_eq!(enumerate(&MatZp::new(2, 2).unwrap()).unwrap().len(), 16);
    assert!(matches!(
        enumerate(&MatQi::new(2).unwrap()),
        Err(Error::Unsupported { .. })
    ));
    let small = MatZp::new(3, 2).unwrap().with_cap(50);
    assert!(matches!(enumerate(&small), Err(Error::CapExceeded { .. })));
}

#[test]
fn solving() {
    let z6 = ZMod::new(6).unwrap();
    assert_eq!(z6.solve(&LinearProblem::right(2, 2)).unwrap(), Some(1));
    let z8 = ZMod::new(8).unwrap();
    assert_eq!(z8.solve(&LinearProblem::right(4, 2)).unwrap(), None);
    let q = MatQi::new(2).unwrap();
    let e = q.from_integers(&[&[1, 0], &[0, 0]]);
    let p = LinearProblem::right(e.clone(), e);
    assert!(p.is_solved_by(&q, &q.solve(&p).unwrap().unwrap()));
}

#[test]
fn inverses() {
    let z6 = ZMod::new(6).unwrap();
    assert_eq!(mp_from_13_14(&z6, &2, &2, &2).unwrap(), 2);
    assert_eq!(moore_penrose(&z6, &0).unwrap().value, Some(0));
    assert_eq!(group_inverse(&z6, &2).unwrap().value, Some(2));
    assert!(is_ep(&z6, &2).unwrap());
    assert!(is_star_cancellable(&z6, &2).unwrap());
    assert!(is_star_cancellable(&z6, &0).unwrap());
    assert!(!is_star_cancellable(&ZMod::new(4).unwrap(), &2).unwrap());
    let z8 = ZMod::new(8).unwrap();
    let res = moore_penrose(&z8, &2).unwrap();
    assert!(!res.exists() && res.reason.is_some());

    let q = MatQi::new(2).unwrap();
    let a = q.from_integers(&[&[1, 1], &[0, 0]]);
    let want = q.parse_matrix(&[&["1/2", "0"], &["1/2", "0"]]).unwrap();
    let res = moore_penrose(&q, &a).unwrap();
    assert_eq!(res.value, Some(want));
    assert_eq!(res.certificate.len(), 3);
    assert!(!is_ep(&q, &a).unwrap());
    let d = q.parse_matrix(&[&["2", "0"], &["0", "0"]]).unwrap();
    let h = q.parse_matrix(&[&["1/2", "0"], &["0", "0"]]).unwrap();
    assert_eq!(mp_from_13_14(&q, &d, &h, &h).unwrap(), h);
    assert!(!group_inverse(&q, &q.from_integers(&[&[0, 1], &[0, 0]]))
        .unwrap()
        .exists());
}

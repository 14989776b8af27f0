//! Brute-force reference implementations, written without the library's
//! arithmetic, enumeration or solvers. Elements travel between the two
//! worlds as JSON values.

#![allow(dead_code)]

use serde_json::{json, Value};
use starring::{AnyRing, RingDescriptor};

pub type Elem = Vec<u64>;

/// `Z_n` with the identity involution, or `M_k(Z_p)` with transposition.
#[derive(Debug, Clone, Copy)]
pub enum Naive {
    ZMod(u64),
    Mat { p: u64, k: usize },
}

impl Naive {
    pub fn descriptor(&self) -> RingDescriptor {
        match *self {
            Naive::ZMod(n) => RingDescriptor::ZMod { n },
            Naive::Mat { p, k } => RingDescriptor::MatZp { p, k },
        }
    }

    pub fn ring(&self) -> AnyRing {
        AnyRing::new(self.descriptor()).unwrap()
    }

    fn modulus(&self) -> u64 {
        match *self {
            Naive::ZMod(n) => n,
            Naive::Mat { p, .. } => p,
        }
    }

    fn len(&self) -> usize {
        match *self {
            Naive::ZMod(_) => 1,
            Naive::Mat { k, .. } => k * k,
        }
    }

    pub fn elements(&self) -> Vec<Elem> {
        let q = self.modulus();
        let mut out = vec![vec![]];
        for _ in 0..self.len() {
            out = out
                .into_iter()
                .flat_map(|v: Elem| {
                    (0..q).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.len()]
    }

    pub fn one(&self) -> Elem {
        match *self {
            Naive::ZMod(_) => vec![1],
            Naive::Mat { k, .. } => (0..k * k).map(|i| u64::from(i % (k + 1) == 0)).collect(),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let q = self.modulus();
        a.iter().zip(b).map(|(x, y)| (x + y) % q).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        let q = self.modulus();
        a.iter().zip(b).map(|(x, y)| (x + q - y) % q).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match *self {
            Naive::ZMod(n) => vec![a[0] * b[0] % n],
            Naive::Mat { p, k } => {
                let mut c = vec![0; k * k];
                for i in 0..k {
                    for j in 0..k {
                        c[i * k + j] = (0..k).map(|l| a[i * k + l] * b[l * k + j]).sum::<u64>() % p;
                    }
                }
                c
            }
        }
    }

    pub fn mul3(&self, a: &Elem, b: &Elem, c: &Elem) -> Elem {
        self.mul(&self.mul(a, b), c)
    }

    pub fn star(&self, a: &Elem) -> Elem {
        match *self {
            Naive::ZMod(_) => a.clone(),
            Naive::Mat { k, .. } => (0..k * k).map(|i| a[(i % k) * k + i / k]).collect(),
        }
    }

    pub fn pow(&self, a: &Elem, e: u32) -> Elem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn is_penrose(&self, a: &Elem, b: &Elem) -> bool {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&ab, a) == *a
            && self.mul(&ba, b) == *b
            && self.star(&ab) == ab
            && self.star(&ba) == ba
    }

    /// All solutions of the four Penrose equations (at most one).
    pub fn mp(&self, a: &Elem) -> Option<Elem> {
        let sols: Vec<Elem> = self
            .elements()
            .into_iter()
            .filter(|b| self.is_penrose(a, b))
            .collect();
        assert!(sols.len() <= 1, "Penrose solutions are unique");
        sols.into_iter().next()
    }

    pub fn inner_inverses(&self, a: &Elem) -> Vec<Elem> {
        self.elements()
            .into_iter()
            .filter(|x| self.mul3(a, x, a) == *a)
            .collect()
    }

    pub fn has_left_inverse(&self, a: &Elem) -> bool {
        let one = self.one();
        self.elements().iter().any(|y| self.mul(y, a) == one)
    }

    pub fn has_right_inverse(&self, a: &Elem) -> bool {
        let one = self.one();
        self.elements().iter().any(|x| self.mul(a, x) == one)
    }

    pub fn to_json(&self, a: &Elem) -> Value {
        match *self {
            Naive::ZMod(_) => json!(a[0]),
            Naive::Mat { k, .. } => Value::Array(a.chunks(k).map(|row| json!(row)).collect()),
        }
    }

    pub fn from_json(&self, v: &Value) -> Elem {
        match *self {
            Naive::ZMod(_) => vec![v.as_u64().unwrap()],
            Naive::Mat { .. } => v
                .as_array()
                .unwrap()
                .iter()
                .flat_map(|row| row.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()))
                .collect(),
        }
    }
}

/// `ZMod(2..=24)`, `MatZp(2,2)` and `MatZp(3,2)`.
pub fn fleet() -> Vec<Naive> {
    let mut f: Vec<Naive> = (2..=24).map(Naive::ZMod).collect();
    f.push(Naive::Mat { p: 2, k: 2 });
    f.push(Naive::Mat { p: 3, k: 2 });
    f
}

/// Every element with its reference `a†`.
pub fn oracle_table(ring: &Naive) -> Vec<(Elem, Option<Elem>)> {
    ring.elements()
        .into_iter()
        .map(|a| {
            let d = ring.mp(&a);
            (a, d)
        })
        .collect()
}
pub mod qi;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde_json::Value;

use super::matzp::vectorize;
use super::{json_matrix, Backend, LinearProblem};
use crate::element::{Element, ElementValue};
use crate::error::{Error, Result};
use crate::linalg::{self, Dense};
use crate::matrix::SquareMatrix;
use crate::ring::{RingDescriptor, StarRing};
use crate::scalar::{GaussianField, GaussianRational};

/// `M_k(Q(i))` with conjugate transposition.
///
/// The carrier is infinite, so every decision goes through exact linear
/// algebra instead of scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatQi {
    k: usize,
}

pub type QiMatrix = SquareMatrix<GaussianRational>;

/// Bound on numerators and denominators drawn by [`MatQi::sample`].
pub const SAMPLE_ENTRY_BOUND: i64 = 5;

impl MatQi {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDescriptor("MatQi requires k >= 1".into()));
        }
        Ok(MatQi { k })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Builds a matrix from scalar strings such as `"1/2-i"`.
    pub fn parse_matrix(&self, rows: &[&[&str]]) -> Result<QiMatrix> {
        let json = Value::Array(
            rows.iter()
                .map(|row| Value::Array(row.iter().map(|s| Value::from(*s)).collect()))
                .collect(),
        );
        self.from_json(&json)
    }

    pub fn from_integers(&self, rows: &[&[i64]]) -> QiMatrix {
        assert_eq!(rows.len(), self.k);
        SquareMatrix::from_fn(self.k, |r, c| {
            GaussianRational::from_integers(rows[r][c], 0)
        })
    }

    pub fn diag(&self, entries: &[GaussianRational]) -> QiMatrix {
        assert_eq!(entries.len(), self.k);
        SquareMatrix::from_fn(self.k, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                GaussianRational::zero()
            }
        })
    }

    fn dense(&self, a: &QiMatrix) -> Dense<GaussianRational> {
        Dense::new(self.k, self.k, a.entries().to_vec())
    }

    pub fn rank(&self, a: &QiMatrix) -> usize {
        linalg::rank(&GaussianField, &self.dense(a))
    }

    /// Rank of the `k×2k` block matrix `[a | b]`.
    fn joint_rank(&self, a: &QiMatrix, b: &QiMatrix) -> usize {
        linalg::rank(&GaussianField, &self.dense(a).hcat(&self.dense(b)))
    }

    fn sample_scalar<G: Rng + ?Sized>(rng: &mut G) -> GaussianRational {
        let b = SAMPLE_ENTRY_BOUND;
        let part = |rng: &mut G| {
            let num = rng.gen_range(-b..=b);
            let mut den = rng.gen_range(-b..b);
            if den >= 0 {
                den += 1;
            }
            BigRational::new(BigInt::from(num), BigInt::from(den))
        };
        let re = part(rng);
        let im = part(rng);
        GaussianRational::new(re, im)
    }
}

impl StarRing for MatQi {
    type Elem = QiMatrix;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::MatQi { k: self.k }
    }

    fn zero(&self) -> QiMatrix {
        SquareMatrix::from_fn(self.k, |_, _| GaussianRational::zero())
    }

    fn one(&self) -> QiMatrix {
        SquareMatrix::from_fn(self.k, |r, c| {
            if r == c {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        })
    }

    fn add(&self, a: &QiMatrix, b: &QiMatrix) -> QiMatrix {
        SquareMatrix::from_fn(self.k, |r, c| a.get(r, c).add(b.get(r, c)))
    }

    fn neg(&self, a: &QiMatrix) -> QiMatrix {
        a.map(GaussianRational::neg)
    }

    fn sub(&self, a: &QiMatrix, b: &QiMatrix) -> QiMatrix {
        SquareMatrix::from_fn(self.k, |r, c| a.get(r, c).sub(b.get(r, c)))
    }

    fn mul(&self, a: &QiMatrix, b: &QiMatrix) -> QiMatrix {
        SquareMatrix::from_fn(self.k, |r, c| {
            (0..self.k).fold(GaussianRational::zero(), |acc, l| {
                acc.add(&a.get(r, l).mul(b.get(l, c)))
            })
        })
    }

    fn star(&self, a: &QiMatrix) -> QiMatrix {
        SquareMatrix::from_fn(self.k, |r, c| a.get(c, r).conj())
    }

    fn order(&self) -> Option<usize> {
        None
    }

    fn element_at(&self, _index: usize) -> QiMatrix {
        unreachable!("MatQi has no finite enumeration")
    }

    fn index_of(&self, _a: &QiMatrix) -> Option<usize> {
        None
    }
}

impl Backend for MatQi {
    fn scan_cap(&self) -> usize {
        0
    }

    /// Any exact solution of the vectorized `k²×k²` system, free entries
    /// set to zero.
    fn solve(&self, problem: &LinearProblem<QiMatrix>) -> Result<Option<QiMatrix>> {
        let (a, b) = vectorize(&GaussianField, self.k, problem);
        let Some(x) = linalg::solve(&GaussianField, &a, &b) else {
            return Ok(None);
        };
        let x = SquareMatrix::from_row_major(self.k, x);
        if !problem.is_solved_by(self, &x) {
            return Err(Error::Verification(format!(
                "elimination produced {x:?}, which does not solve the equation"
            )));
        }
        Ok(Some(x))
    }

    /// Every matrix over a field is regular; the witness is the star of a
    /// solution of `w·a*a = a`, which is even a {1,3}-inverse.
    fn inner_inverse(&self, a: &QiMatrix) -> Result<Option<QiMatrix>> {
        let w = self.solve(&LinearProblem::left(self.a_star_a(a), a.clone()))?;
        Ok(w.map(|w| self.star(&w)))
    }

    /// Index-one test `rank(a) = rank(a²)`, then `a# = y·a·x` from
    /// `a = a²x = ya²`.
    fn group_inverse_direct(&self, a: &QiMatrix) -> Result<Option<QiMatrix>> {
        let a2 = self.mul(a, a);
        if self.rank(a) != self.rank(&a2) {
            return Ok(None);
        }
        let x = self.solve(&LinearProblem::right(a2.clone(), a.clone()))?;
        let y = self.solve(&LinearProblem::left(a2, a.clone()))?;
        match (x, y) {
            (Some(x), Some(y)) => Ok(Some(self.product(&[&y, a, &x]))),
            _ => Err(Error::Verification(
                "rank(a) = rank(a²) but a ∉ a²R ∩ Ra²".into(),
            )),
        }
    }

    /// `null(a*a) = null(a)` and `null(aa*) = null(a*)`, compared through
    /// ranks since one null space always contains the other.
    fn star_cancellable(&self, a: &QiMatrix) -> Result<bool> {
        let r = self.rank(a);
        Ok(self.rank(&self.a_star_a(a)) == r && self.rank(&self.aa_star(a)) == r)
    }

    /// `aR = bR` as column-space equality.
    fn same_right_ideal(&self, a: &QiMatrix, b: &QiMatrix) -> Result<bool> {
        let ra = self.rank(a);
        Ok(ra == self.rank(b) && ra == self.joint_rank(a, b))
    }

    /// Entries `p/q + (r/s)i` with numerators and denominators in
    /// `[-5, 5]`.
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> QiMatrix {
        SquareMatrix::from_fn(self.k, |_, _| Self::sample_scalar(rng))
    }

    fn to_json(&self, a: &QiMatrix) -> Value {
        Value::Array(
            a.rows()
                .map(|row| Value::Array(row.iter().map(|v| Value::from(v.to_string())).collect()))
                .collect(),
        )
    }

    fn from_json(&self, value: &Value) -> Result<QiMatrix> {
        let cells = json_matrix(value, self.k)?;
        let mut entries = Vec::with_capacity(cells.len());
        for (idx, cell) in cells.iter().enumerate() {
            let location = || format!("row {}, column {}", idx / self.k, idx % self.k);
            let v = match cell {
                Value::String(s) => s
                    .parse::<GaussianRational>()
                    .map_err(|msg| Error::parse(location(), msg))?,
                Value::Number(n) => n
                    .as_i64()
                    .map(|v| GaussianRational::from_integers(v, 0))
                    .ok_or_else(|| Error::parse(location(), format!("`{n}` is not an integer")))?,
                other => {
                    return Err(Error::parse(
                        location(),
                        format!("expected a scalar string, found {other}"),
                    ))
                }
            };
            entries.push(v);
        }
        Ok(SquareMatrix::from_row_major(self.k, entries))
    }

    fn to_element(&self, a: &QiMatrix) -> Element {
        Element::new_unchecked(self.descriptor(), ElementValue::Qi(a.clone()))
    }

    fn from_element(&self, e: &Element) -> Result<QiMatrix> {
        match (e.ring() == self.descriptor(), e.value()) {
            (true, ElementValue::Qi(m)) => Ok(m.clone()),
            _ => Err(Error::RingMismatch {
                left: self.descriptor(),
                right: e.ring(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_conjugates_and_transposes() {
        let r = MatQi::new(1).unwrap();
        let a = r.parse_matrix(&[&["i"]]).unwrap();
        assert_eq!(r.star(&a), r.parse_matrix(&[&["-i"]]).unwrap());
        let r2 = MatQi::new(2).unwrap();
        let b = r2.parse_matrix(&[&["1", "2+i"], &["0", "3/2"]]).unwrap();
        assert_eq!(
            r2.star(&b),
            r2.parse_matrix(&[&["1", "0"], &["2-i", "3/2"]]).unwrap()
        );
    }

    #[test]
    fn solve_returns_a_verified_solution() {
        let r = MatQi::new(2).unwrap();
        let e = r.from_integers(&[&[1, 0], &[0, 0]]);
        let x = r
            .solve(&LinearProblem::right(e.clone(), e.clone()))
            .unwrap()
            .unwrap();
        assert_eq!(r.mul(&e, &x), e);
        // singular coefficient with an unreachable target
        let t = r.from_integers(&[&[0, 0], &[0, 1]]);
        assert_eq!(r.solve(&LinearProblem::right(e, t)).unwrap(), None);
    }

    #[test]
    fn group_inverse_of_nilpotent_is_absent() {
        let r = MatQi::new(2).unwrap();
        let n = r.from_integers(&[&[0, 1], &[0, 0]]);
        assert_eq!(r.group_inverse_direct(&n).unwrap(), None);
        let idem = r.from_integers(&[&[1, 1], &[0, 0]]);
        assert_eq!(r.group_inverse_direct(&idem).unwrap(), Some(idem));
    }

    #[test]
    fn ranks() {
        let r = MatQi::new(2).unwrap();
        assert_eq!(r.rank(&r.zero()), 0);
        assert_eq!(r.rank(&r.one()), 2);
        assert_eq!(r.rank(&r.from_integers(&[&[1, 1], &[2, 2]])), 1);
        assert!(r
            .star_cancellable(&r.from_integers(&[&[1, 1], &[0, 0]]))
            .unwrap());
    }
}

use serde_json::Value;

use super::{json_integer, json_matrix, Backend, LinearProblem, Shape, DEFAULT_CAP};
use crate::element::{Element, ElementValue};
use crate::error::{Error, Result};
use crate::linalg::{self, Dense};
use crate::matrix::SquareMatrix;
use crate::ring::{RingDescriptor, StarRing};
use crate::scalar::{Field, PrimeField};

/// `M_k(Z_p)` with transposition as the involution.
///
/// Canonical order is a row-major base-`p` counter: the top-left entry is
/// the most significant digit, so the order coincides with lexicographic
/// order on the row-major entry vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatZp {
    field: PrimeField,
    k: usize,
    cap: usize,
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl MatZp {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidDescriptor(format!(
                "MatZp requires a prime modulus, got p = {p}"
            )));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidDescriptor(format!(
                "MatZp modulus {p} exceeds 2^32"
            )));
        }
        if k == 0 {
            return Err(Error::InvalidDescriptor("MatZp requires k >= 1".into()));
        }
        Ok(MatZp {
            field: PrimeField::new(p),
            k,
            cap: DEFAULT_CAP,
        })
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Builds a matrix from integer rows, reducing entries mod `p`.
    pub fn matrix(&self, rows: &[&[i64]]) -> SquareMatrix<u64> {
        assert_eq!(rows.len(), self.k);
        SquareMatrix::from_fn(self.k, |r, c| self.field.reduce(rows[r][c] as i128))
    }

    fn system(&self, problem: &LinearProblem<SquareMatrix<u64>>) -> (Dense<u64>, Vec<u64>) {
        vectorize(&self.field, self.k, problem)
    }
}

/// Rewrites a one-sided matrix equation as a `k²×k²` linear system in the
/// row-major entries of the unknown.
pub(crate) fn vectorize<F: Field>(
    field: &F,
    k: usize,
    problem: &LinearProblem<SquareMatrix<F::Scalar>>,
) -> (Dense<F::Scalar>, Vec<F::Scalar>) {
    let n = k * k;
    let c = &problem.coefficient;
    let mut a = Dense::filled(n, n, field.zero());
    for i in 0..k {
        for j in 0..k {
            let row = i * k + j;
            for l in 0..k {
                match problem.shape {
                    // (c x)_ij = sum_l c_il x_lj
                    Shape::RightMul => a.set(row, l * k + j, c.get(i, l).clone()),
                    // (y c)_ij = sum_l y_il c_lj
                    Shape::LeftMul => a.set(row, i * k + l, c.get(l, j).clone()),
                }
            }
        }
    }
    (a, problem.target.entries().to_vec())
}

impl StarRing for MatZp {
    type Elem = SquareMatrix<u64>;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::MatZp {
            p: self.modulus(),
            k: self.k,
        }
    }

    fn zero(&self) -> Self::Elem {
        SquareMatrix::from_fn(self.k, |_, _| 0)
    }

    fn one(&self) -> Self::Elem {
        SquareMatrix::from_fn(self.k, |r, c| u64::from(r == c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        SquareMatrix::from_fn(self.k, |r, c| self.field.add(a.get(r, c), b.get(r, c)))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.map(|v| self.field.neg(v))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let p = self.modulus() as u128;
        SquareMatrix::from_fn(self.k, |r, c| {
            let s: u128 = (0..self.k)
                .map(|l| *a.get(r, l) as u128 * *b.get(l, c) as u128)
                .sum();
            (s % p) as u64
        })
    }

    fn star(&self, a: &Self::Elem) -> Self::Elem {
        a.transpose()
    }

    fn order(&self) -> Option<usize> {
        let digits = u32::try_from(self.k * self.k).ok()?;
        usize::try_from(self.modulus()).ok()?.checked_pow(digits)
    }

    fn element_at(&self, mut index: usize) -> Self::Elem {
        let p = self.modulus() as usize;
        let n = self.k * self.k;
        let mut entries = vec![0u64; n];
        for slot in entries.iter_mut().rev() {
            *slot = (index % p) as u64;
            index /= p;
        }
        SquareMatrix::from_row_major(self.k, entries)
    }

    fn index_of(&self, a: &Self::Elem) -> Option<usize> {
        let p = self.modulus() as usize;
        a.entries().iter().try_fold(0usize, |acc, &d| {
            acc.checked_mul(p)?.checked_add(d as usize)
        })
    }
}

impl Backend for MatZp {
    fn scan_cap(&self) -> usize {
        self.cap
    }

    /// Lexicographically first solution of the vectorized system, which is
    /// the first solution in canonical order.
    fn solve(&self, problem: &LinearProblem<Self::Elem>) -> Result<Option<Self::Elem>> {
        let (a, b) = self.system(problem);
        let Some(x) = linalg::solve_lex_first(&self.field, &a, &b) else {
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

    fn to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(
            a.rows()
                .map(|row| Value::Array(row.iter().map(|&v| Value::from(v)).collect()))
                .collect(),
        )
    }

    fn from_json(&self, value: &Value) -> Result<Self::Elem> {
        let cells = json_matrix(value, self.k)?;
        let mut entries = Vec::with_capacity(cells.len());
        for (idx, cell) in cells.iter().enumerate() {
            let (r, c) = (idx / self.k, idx % self.k);
            let v = json_integer(cell, || format!("row {r}, column {c}"))?;
            entries.push(self.field.reduce(v));
        }
        Ok(SquareMatrix::from_row_major(self.k, entries))
    }

    fn to_element(&self, a: &Self::Elem) -> Element {
        Element::new_unchecked(self.descriptor(), ElementValue::Zp(a.clone()))
    }

    fn from_element(&self, e: &Element) -> Result<Self::Elem> {
        match (e.ring() == self.descriptor(), e.value()) {
            (true, ElementValue::Zp(m)) => Ok(m.clone()),
            _ => Err(Error::RingMismatch {
                left: self.descriptor(),
                right: e.ring(),
            }),
        }
    }
}

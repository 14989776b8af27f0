//! Exact Gaussian elimination over a [`Field`].

use crate::scalar::Field;

/// Row-major dense matrix of field scalars.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense<S> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<S>,
}

impl<S: Clone> Dense<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "dense matrix data has wrong length"
        );
        Dense { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: S) -> Self {
        Dense {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `[self | other]`
    pub fn hcat(&self, other: &Dense<S>) -> Dense<S> {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(&self.data[r * self.cols..(r + 1) * self.cols]);
            data.extend_from_slice(&other.data[r * other.cols..(r + 1) * other.cols]);
        }
        Dense {
            rows: self.rows,
            cols,
            data,
        }
    }
}

/// Reduces `m` to reduced row echelon form in place, considering only the
/// first `limit` columns as pivot candidates. Returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut Dense<F::Scalar>, limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..limit.min(m.cols) {
        if row == m.rows {
            break;
        }
        let Some(found) = (row..m.rows).find(|&r| !field.is_zero(m.get(r, col))) else {
            continue;
        };
        m.swap_rows(row, found);
        let inv = field
            .inv(m.get(row, col))
            .expect("pivot is nonzero by construction");
        for c in 0..m.cols {
            let v = field.mul(m.get(row, c), &inv);
            m.set(row, c, v);
        }
        for r in 0..m.rows {
            if r == row || field.is_zero(m.get(r, col)) {
                continue;
            }
            let factor = m.get(r, col).clone();
            for c in 0..m.cols {
                let v = field.sub(m.get(r, c), &field.mul(&factor, m.get(row, c)));
                m.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Dense<F::Scalar>) -> usize {
    let mut work = m.clone();
    let cols = work.cols;
    rref(field, &mut work, cols).len()
}

/// Solves `A x = b`, setting free variables to zero. `None` if inconsistent.
pub fn solve<F: Field>(field: &F, a: &Dense<F::Scalar>, b: &[F::Scalar]) -> Option<Vec<F::Scalar>> {
    assert_eq!(a.rows, b.len());
    let rhs = Dense::new(b.len(), 1, b.to_vec());
    let mut aug = a.hcat(&rhs);
    let pivots = rref(field, &mut aug, a.cols);
    // a pivot-free row with a nonzero right-hand side is inconsistent
    for r in pivots.len()..aug.rows {
        if !field.is_zero(aug.get(r, a.cols)) {
            return None;
        }
    }
    let mut x = vec![field.zero(); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, a.cols).clone();
    }
    Some(x)
}

/// Solves `A x = b` and returns the solution that is lexicographically
/// smallest when each coordinate is compared with zero first: coordinates
/// are fixed left to right, taking zero whenever the remaining system stays
/// consistent and the forced value otherwise.
///
/// Over `Z_p` with residues ordered `0 < 1 < … < p-1` this is exactly the
/// first solution of a row-major counter scan.
pub fn solve_lex_first<F: Field>(
    field: &F,
    a: &Dense<F::Scalar>,
    b: &[F::Scalar],
) -> Option<Vec<F::Scalar>> {
    let n = a.cols;
    let mut rows = a.clone();
    let mut rhs = b.to_vec();
    let mut current = solve(field, &rows, &rhs)?;
    for i in 0..n {
        let mut pinned = Dense::filled(rows.rows + 1, n, field.zero());
        pinned.data[..rows.data.len()].clone_from_slice(&rows.data);
        pinned.set(rows.rows, i, field.one());
        rhs.push(field.zero());
        if field.is_zero(&current[i]) {
            // already zero: the current solution stays valid
        } else if let Some(sol) = solve(field, &pinned, &rhs) {
            current = sol;
        } else {
            // coordinate i is forced by the earlier choices
            *rhs.last_mut().expect("just pushed") = current[i].clone();
        }
        rows = pinned;
    }
    Some(current)
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse<F: Field>(field: &F, m: &Dense<F::Scalar>) -> Option<Dense<F::Scalar>> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut ident = Dense::filled(n, n, field.zero());
    for i in 0..n {
        ident.set(i, i, field.one());
    }
    let mut aug = m.hcat(&ident);
    let pivots = rref(field, &mut aug, n);
    if pivots.len() < n {
        return None;
    }
    let mut out = Dense::filled(n, n, field.zero());
    for r in 0..n {
        for c in 0..n {
            out.set(r, c, aug.get(r, n + c).clone());
        }
    }
    Some(out)
}

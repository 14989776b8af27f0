use std::fmt;

/// Storage for a `k×k` matrix in row-major order. Arithmetic lives in the
/// ring that owns the scalars.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareMatrix<T> {
    k: usize,
    entries: Vec<T>,
}

impl<T> SquareMatrix<T> {
    pub fn from_row_major(k: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), k * k, "expected {} entries", k * k);
        SquareMatrix { k, entries }
    }

    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let entries = (0..k * k).map(|idx| f(idx / k, idx % k)).collect();
        SquareMatrix { k, entries }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.k + c]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.k.max(1))
    }
}

impl<T: Clone> SquareMatrix<T> {
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let k = rows.len();
        let entries: Vec<T> = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        Self::from_row_major(k, entries)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            k: self.k,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.k, |r, c| self.get(c, r).clone())
    }
}

impl<T: fmt::Debug> fmt::Debug for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

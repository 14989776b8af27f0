//! Pseudoinverse over `Q(i)` by full-rank factorization, on plain
//! `Vec<Vec<_>>` matrices: `a = F·G` with `F` the pivot columns of `a` and
//! `G` the nonzero rows of its reduced echelon form, so
//! `a† = G*·(G·G*)⁻¹·(F*·F)⁻¹·F*`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use starring::backends::QiMatrix;
use starring::{GaussianRational, SquareMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C {
    re: BigRational,
    im: BigRational,
}

impl C {
    fn zero() -> C {
        C {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn one() -> C {
        C {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &C) -> C {
        C {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &C) -> C {
        C {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &C) -> C {
        C {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn conj(&self) -> C {
        C {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn inv(&self) -> C {
        let d = &self.re * &self.re + &self.im * &self.im;
        C {
            re: &self.re / &d,
            im: -(&self.im / &d),
        }
    }
}

pub type M = Vec<Vec<C>>;

pub fn from_lib(a: &QiMatrix) -> M {
    a.rows()
        .map(|row| {
            row.iter()
                .map(|g| C {
                    re: g.re.clone(),
                    im: g.im.clone(),
                })
                .collect()
        })
        .collect()
}

pub fn to_lib(a: &M) -> QiMatrix {
    let rows: Vec<Vec<GaussianRational>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| GaussianRational::new(c.re.clone(), c.im.clone()))
                .collect()
        })
        .collect();
    SquareMatrix::from_rows(&rows)
}

fn mul(a: &M, b: &M) -> M {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(C::zero(), |acc, l| acc.add(&row[l].mul(&b[l][j]))))
                .collect()
        })
        .collect()
}

fn adjoint(a: &M, rows: usize, cols: usize) -> M {
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].conj()).collect())
        .collect()
}

/// Reduced row echelon form and pivot columns.
fn rref(mut a: M) -> (M, Vec<usize>) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv();
        for x in a[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = a[r][j].mul(&f);
                    a[i][j] = a[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

fn inverse(a: &M) -> M {
    let n = a.len();
    let aug: M = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { C::one() } else { C::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(aug);
    assert_eq!(
        pivots,
        (0..n).collect::<Vec<_>>(),
        "Gram matrix of a full-rank factor is invertible"
    );
    red.into_iter().map(|row| row[n..].to_vec()).collect()
}

pub fn rank(a: &M) -> usize {
    rref(a.clone()).1.len()
}

pub fn pinv(a: &M) -> M {
    let k = a.len();
    let (red, pivots) = rref(a.clone());
    let r = pivots.len();
    if r == 0 {
        return vec![vec![C::zero(); k]; k];
    }
    let f: M = a
        .iter()
        .map(|row| pivots.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let g: M = red[..r].to_vec();
    let fs = adjoint(&f, k, r);
    let gs = adjoint(&g, r, k);
    let left = mul(&gs, &inverse(&mul(&g, &gs)));
    let right = mul(&inverse(&mul(&fs, &f)), &fs);
    mul(&left, &right)
}

/// Rank-one `u·v*` for integer vectors.
pub fn outer(u: &[i64], v: &[i64]) -> M {
    u.iter()
        .map(|&x| {
            v.iter()
                .map(|&y| C {
                    re: BigRational::from_integer((x * y).into()),
                    im: BigRational::zero(),
                })
                .collect()
        })
        .collect()
}

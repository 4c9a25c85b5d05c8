//! Square arbitrary-precision integer matrices and exact determinants.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::IntPoly;

/// Largest size accepted by [`IntMatrix::cofactor_det`].
pub const COFACTOR_MAX_SIZE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    Empty,
    NotSquare { row: usize, len: usize, size: usize },
    TooLarge { size: usize, limit: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::Empty => f.write_str("matrix must have at least one row"),
            LinalgError::NotSquare { row, len, size } => {
                write!(f, "row {row} has {len} entries, expected {size}")
            }
            LinalgError::TooLarge { size, limit } => {
                write!(f, "matrix of size {size} exceeds the limit of {limit}")
            }
        }
    }
}

impl core::error::Error for LinalgError {}

/// A square `size × size` integer matrix stored row-major. `size >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// The zero matrix. Panics if `size == 0`.
    pub fn zeros(size: usize) -> Self {
        assert!(size >= 1, "IntMatrix needs size >= 1");
        IntMatrix {
            size,
            entries: vec![BigInt::zero(); size * size],
        }
    }

    /// The identity matrix. Panics if `size == 0`.
    pub fn identity(size: usize) -> Self {
        let mut m = IntMatrix::zeros(size);
        for i in 0..size {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, LinalgError> {
        let size = rows.len();
        if size == 0 {
            return Err(LinalgError::Empty);
        }
        let mut entries = Vec::with_capacity(size * size);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != size {
                return Err(LinalgError::NotSquare {
                    row,
                    len: r.len(),
                    size,
                });
            }
            entries.extend(r);
        }
        Ok(IntMatrix { size, entries })
    }

    /// Convenience constructor for tests and small literals. Panics if not square.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("square, nonempty rows")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.size)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            size: self.size,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Sylvester matrix of `f` and `g`, whose determinant is `Res(f, g)`.
    ///
    /// Returns `None` when either polynomial is zero or both are constant
    /// (the matrix would be empty).
    pub fn sylvester(f: &IntPoly, g: &IntPoly) -> Option<IntMatrix> {
        let p = f.degree()?;
        let q = g.degree()?;
        let size = p + q;
        if size == 0 {
            return None;
        }
        let mut m = IntMatrix::zeros(size);
        for row in 0..q {
            for (k, c) in f.coeffs().iter().rev().enumerate() {
                m[(row, row + k)] = c.clone();
            }
        }
        for row in 0..p {
            for (k, c) in g.coeffs().iter().rev().enumerate() {
                m[(q + row, row + k)] = c.clone();
            }
        }
        Some(m)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each step replaces `a_ij` by `(a_kk a_ij - a_ik a_kj) / p`, where `p` is the
    /// previous pivot; the division is exact. A zero pivot is replaced by the first
    /// nonzero entry below it, flipping the sign.
    pub fn bareiss_det(&self) -> BigInt {
        let n = self.size;
        let mut a: Vec<Vec<BigInt>> = self.rows().map(<[BigInt]>::to_vec).collect();
        let mut prev = BigInt::one();
        let mut negate = false;

        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, swap);
                negate = !negate;
            }
            let (pivot_rows, rest) = a.split_at_mut(k + 1);
            let pivot_row = &pivot_rows[k];
            let pivot = &pivot_row[k];
            for row in rest.iter_mut() {
                let factor = core::mem::take(&mut row[k]);
                for j in k + 1..n {
                    let mut v = pivot * &row[j];
                    if !factor.is_zero() && !pivot_row[j].is_zero() {
                        v -= &factor * &pivot_row[j];
                    }
                    if !prev.is_one() && !v.is_zero() {
                        let (q, r) = v.div_rem(&prev);
                        assert!(r.is_zero(), "Bareiss: inexact division by previous pivot");
                        v = q;
                    }
                    row[j] = v;
                }
            }
            prev = pivot.clone();
        }
        if negate {
            -prev
        } else {
            prev
        }
    }

    /// Determinant by first-row cofactor expansion. Only for `size <= 10`.
    pub fn cofactor_det(&self) -> Result<BigInt, LinalgError> {
        if self.size > COFACTOR_MAX_SIZE {
            return Err(LinalgError::TooLarge {
                size: self.size,
                limit: COFACTOR_MAX_SIZE,
            });
        }
        let cols: Vec<usize> = (0..self.size).collect();
        Ok(self.cofactor_rec(0, &cols))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> BigInt {
        if cols.len() == 1 {
            return self[(row, cols[0])].clone();
        }
        let mut total = BigInt::zero();
        let mut rest = Vec::with_capacity(cols.len() - 1);
        for (pos, &c) in cols.iter().enumerate() {
            let entry = &self[(row, c)];
            if entry.is_zero() {
                continue;
            }
            rest.clear();
            rest.extend(cols.iter().copied().filter(|&x| x != c));
            let minor = self.cofactor_rec(row + 1, &rest);
            if pos % 2 == 0 {
                total += entry * minor;
            } else {
                total -= entry * minor;
            }
        }
        total
    }
}

/// `p(b) = Σ c_i b^i` by Horner's rule, with `b^0 = I`.
pub fn matpoly_eval(p: &IntPoly, b: &IntMatrix) -> IntMatrix {
    let n = b.size();
    let mut acc = IntMatrix::zeros(n);
    for c in p.coeffs().iter().rev() {
        acc = &acc * b;
        if !c.is_zero() {
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
    }
    acc
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.size && j < self.size, "index out of range");
        &self.entries[i * self.size + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.size && j < self.size, "index out of range");
        &mut self.entries[i * self.size + j]
    }
}

impl<'a> Mul<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        let n = self.size;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        IntMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix {
            size: self.size,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl Neg for IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        -&self
    }
}

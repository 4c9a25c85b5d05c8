//! Characteristic polynomials of paths.
//!
//! `q_n(x) = det(A(P_n) - x I_n)`, with `q_0 = 1`, `q_1 = -x` and
//! `q_n = -x q_{n-1} - q_{n-2}` for `n >= 2`. The leading coefficient is
//! `(-1)^n`, not `+1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::IntPoly;

/// Grow-on-demand table of `q_0, q_1, ...`.
///
/// Owned by its caller; share across threads by giving each worker its own.
#[derive(Debug, Clone)]
pub struct PathPolys {
    table: Vec<IntPoly>,
}

impl Default for PathPolys {
    fn default() -> Self {
        PathPolys::new()
    }
}

impl PathPolys {
    pub fn new() -> Self {
        PathPolys {
            table: vec![IntPoly::one(), -IntPoly::x()],
        }
    }

    /// `q_n`, extending the table through index `n` if needed.
    pub fn get(&mut self, n: usize) -> &IntPoly {
        while self.table.len() <= n {
            let k = self.table.len();
            let next = step(&self.table[k - 1], &self.table[k - 2]);
            self.table.push(next);
        }
        &self.table[n]
    }

    /// `[q_0, ..., q_n]`.
    pub fn up_to(&mut self, n: usize) -> &[IntPoly] {
        self.get(n);
        &self.table[..=n]
    }

    /// Number of polynomials currently cached.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

/// One step of the three-term recurrence: `-x·prev - prev2`.
pub fn step(prev: &IntPoly, prev2: &IntPoly) -> IntPoly {
    let mut c = Vec::with_capacity(prev.coeffs().len() + 1);
    c.push(num_bigint::BigInt::default());
    c.extend(prev.coeffs().iter().map(|a| -a));
    IntPoly::from_coeffs(c) - prev2
}

/// `q_n(x)`, the characteristic polynomial of the path on `n` vertices under
/// the `det(A - xI)` convention.
pub fn path_charpoly(n: usize) -> IntPoly {
    PathPolys::new().get(n).clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn base_cases() {
        assert_eq!(path_charpoly(0), IntPoly::one());
        assert_eq!(path_charpoly(1), IntPoly::from_i64s(&[0, -1]));
        assert_eq!(path_charpoly(2), IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(path_charpoly(3), IntPoly::from_i64s(&[0, 2, 0, -1]));
    }

    #[test]
    fn q3_matches_cofactor_expansion() {
        // det [[-x,1,0],[1,-x,1],[0,1,-x]] expanded along the first row:
        // -x(x^2 - 1) - 1·(-x) = -x^3 + 2x
        let minor = &IntPoly::from_i64s(&[0, 0, 1]) - &IntPoly::one();
        let expansion = &(&IntPoly::from_i64s(&[0, -1]) * &minor) + &IntPoly::x();
        assert_eq!(expansion, path_charpoly(3));
    }

    #[test]
    fn table_is_consistent_with_fresh_computation() {
        let mut t = PathPolys::new();
        let q20 = t.get(20).clone();
        assert_eq!(t.len(), 21);
        assert_eq!(q20, path_charpoly(20));
        assert_eq!(t.get(5), &path_charpoly(5));
    }

    #[test]
    fn eval_at_zero_alternates() {
        // q_n(0) = det A(P_n): 0 for odd n, (-1)^{n/2} for even n.
        let mut t = PathPolys::new();
        for n in 0..12 {
            let v = t.get(n).eval(&BigInt::from(0));
            let expect = if n % 2 == 1 {
                0
            } else if (n / 2) % 2 == 0 {
                1
            } else {
                -1
            };
            assert_eq!(v, BigInt::from(expect), "n = {n}");
        }
    }
}

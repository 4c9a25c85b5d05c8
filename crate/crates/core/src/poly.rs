//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyError {
    /// An operation that needs a nonzero polynomial was given zero.
    ZeroPolynomial,
    /// Division by the zero polynomial.
    ZeroDivisor,
    /// Exact division over the integers needs a divisor with leading coefficient ±1.
    NonUnitLeading,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => f.write_str("polynomial must be nonzero"),
            PolyError::ZeroDivisor => f.write_str("division by the zero polynomial"),
            PolyError::NonUnitLeading => {
                f.write_str("divisor leading coefficient must be +1 or -1")
            }
        }
    }
}

impl core::error::Error for PolyError {}

/// Parity of a polynomial as a function of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

/// A polynomial `c_0 + c_1 x + ... + c_d x^d`.
///
/// Coefficients are stored in ascending degree and are always normalized: the
/// last stored coefficient is nonzero, and the zero polynomial is the empty
/// vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        IntPoly {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, with `None` standing for the degree of the zero polynomial
    /// (negative infinity). `None < Some(0)` under `Option`'s ordering.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides every coefficient by `c`, panicking if any division is inexact.
    pub fn exact_div_scalar(&self, c: &BigInt) -> IntPoly {
        assert!(!c.is_zero(), "exact_div_scalar by zero");
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division: {a} / {c}");
                    q
                })
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn parity(&self) -> Parity {
        let odd_zero = self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero);
        if odd_zero {
            return Parity::Even;
        }
        let even_zero = self.coeffs.iter().step_by(2).all(Zero::is_zero);
        if even_zero {
            Parity::Odd
        } else {
            Parity::Neither
        }
    }

    /// Division by a divisor whose leading coefficient is a unit, so quotient
    /// and remainder stay integral: `self = q·divisor + r` with
    /// `deg r < deg divisor`.
    pub fn div_rem_unit(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly), PolyError> {
        let d = divisor.degree().ok_or(PolyError::ZeroDivisor)?;
        let lead = &divisor.coeffs[d];
        let negate = if lead.is_one() {
            false
        } else if (-lead).is_one() {
            true
        } else {
            return Err(PolyError::NonUnitLeading);
        };

        let mut rem = self.coeffs.clone();
        let q_len = rem.len().saturating_sub(d);
        let mut quot = vec![BigInt::zero(); q_len];
        for k in (0..q_len).rev() {
            let top = core::mem::take(&mut rem[k + d]);
            if top.is_zero() {
                continue;
            }
            let c = if negate { -top } else { top };
            for (j, b) in divisor.coeffs[..d].iter().enumerate() {
                if !b.is_zero() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Remainder of `self` modulo a divisor with leading coefficient ±1.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        self.div_rem_unit(divisor).map(|(_, r)| r)
    }

    /// Classical pseudo-remainder `prem(self, divisor) = lc(divisor)^(δ+1) · self mod divisor`,
    /// where `δ = deg self - deg divisor`. Returns `self` unchanged when its degree is
    /// already below the divisor's.
    pub fn prem(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        let d = divisor.degree().ok_or(PolyError::ZeroDivisor)?;
        let n = match self.degree() {
            Some(n) if n >= d => n,
            _ => return Ok(self.clone()),
        };
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        for k in (0..=n - d).rev() {
            let top = core::mem::take(&mut rem[k + d]);
            for c in rem.iter_mut().take(k + d) {
                if !c.is_zero() {
                    *c *= lead;
                }
            }
            if !top.is_zero() {
                for (j, b) in divisor.coeffs[..d].iter().enumerate() {
                    if !b.is_zero() {
                        rem[k + j] -= &top * b;
                    }
                }
            }
        }
        rem.truncate(d);
        Ok(IntPoly::from_coeffs(rem))
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        // Integer coefficients have no zero divisors, so the leading term survives.
        IntPoly { coeffs }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl fmt::Display for IntPoly {
    /// Descending-degree human form, e.g. `-x^3 + 2x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if i == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn add_cancels_to_lower_degree() {
        assert_eq!(&p(&[-1, 0, 1]) + &p(&[1]), p(&[0, 0, 1]));
        assert_eq!(&IntPoly::zero() + &p(&[3, 1]), p(&[3, 1]));
        assert_eq!(&p(&[0, -1]) + &p(&[0, -1]), p(&[0, -2]));
        assert!((&p(&[0, 1]) - &p(&[0, 1])).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[0, -1]) * &p(&[0, -1]), p(&[0, 0, 1]));
        assert_eq!(&p(&[2, 0, 5]) * &IntPoly::one(), p(&[2, 0, 5]));
        assert_eq!(&p(&[-1, 0, 1]) * &p(&[-1, 0, 1]), p(&[1, 0, -2, 0, 1]));
        assert!((&p(&[1, 1]) * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(p(&[4, 4]).pow(0), IntPoly::one());
        assert_eq!(p(&[0, -1]).pow(2), p(&[0, 0, 1]));
        assert_eq!(p(&[-1, 0, 1]).pow(2), p(&[1, 0, -2, 0, 1]));
        assert_eq!(p(&[1, 1]).pow(5), p(&[1, 5, 10, 10, 5, 1]));
    }

    #[test]
    fn zero_degree_is_distinct_from_constant() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::one().degree(), Some(0));
        assert!(IntPoly::zero().degree() < IntPoly::one().degree());
        assert_eq!(IntPoly::from_i64s(&[0, 0, 0]), IntPoly::zero());
    }

    #[test]
    fn parity_classification() {
        assert_eq!(p(&[-1, 0, 1]).parity(), Parity::Even);
        assert_eq!(p(&[0, 2, 0, -1]).parity(), Parity::Odd);
        assert_eq!(p(&[1, 1]).parity(), Parity::Neither);
        assert_eq!(IntPoly::zero().parity(), Parity::Even);
    }

    #[test]
    fn pseudo_rem_examples() {
        // -x^3 + 2x = (-x)(x^2 - 2)
        let (q, r) = p(&[0, 2, 0, -1]).div_rem_unit(&p(&[0, -1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, p(&[-2, 0, 1]));
        assert!(p(&[-1, 0, 1])
            .pseudo_rem(&p(&[-1, 0, 1]))
            .unwrap()
            .is_zero());
        assert!(p(&[0, 1]).pseudo_rem(&p(&[0, -1])).unwrap().is_zero());
        assert_eq!(p(&[5, 1]).pseudo_rem(&p(&[0, 0, 1])).unwrap(), p(&[5, 1]));
    }

    #[test]
    fn pseudo_rem_errors() {
        assert_eq!(
            p(&[1, 1]).pseudo_rem(&IntPoly::zero()),
            Err(PolyError::ZeroDivisor)
        );
        assert_eq!(
            p(&[1, 1]).pseudo_rem(&p(&[1, 2])),
            Err(PolyError::NonUnitLeading)
        );
    }

    #[test]
    fn classical_prem_scales_by_leading_power() {
        // prem(x^2 + 1, 2x + 1) = 2^2 (x^2 + 1) mod (2x + 1) = 5
        let r = p(&[1, 0, 1]).prem(&p(&[1, 2])).unwrap();
        assert_eq!(r, p(&[5]));
        let r = p(&[3, 1, 4, 1]).prem(&p(&[0, 0, 3])).unwrap();
        // 3^2 (x^3 + 4x^2 + x + 3) mod 3x^2 = 9x + 27
        assert_eq!(r, p(&[27, 9]));
    }

    #[test]
    fn content_and_scalar_division() {
        let a = p(&[6, -9, 12]);
        assert_eq!(a.content(), BigInt::from(3));
        assert_eq!(a.exact_div_scalar(&BigInt::from(3)), p(&[2, -3, 4]));
        assert_eq!(IntPoly::zero().content(), BigInt::zero());
    }

    #[test]
    fn display_descending() {
        assert_eq!(p(&[0, 2, 0, -1]).to_string(), "-x^3 + 2x");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[7]).to_string(), "7");
    }

    #[test]
    fn eval_horner() {
        assert_eq!(p(&[0, 2, 0, -1]).eval(&BigInt::from(2)), BigInt::from(-4));
    }
}

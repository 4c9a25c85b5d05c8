//! Integer resultants by the subresultant polynomial remainder sequence.
//!
//! `Res(f, g) = lc(f)^{deg g} · ∏_{f(α)=0} g(α)`. The Sylvester-matrix route
//! ([`crate::matrix::IntMatrix::sylvester`]) computes the same value and is kept
//! as an independent check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::poly::{IntPoly, PolyError};

fn pow(base: &BigInt, e: usize) -> BigInt {
    Pow::pow(base, e)
}

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "subresultant PRS: inexact division {a} / {b}");
    q
}

/// `Res(f, g)` over the integers.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt, PolyError> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(PolyError::ZeroPolynomial);
    };
    if df == 0 {
        return Ok(pow(&f.coeffs()[0], dg));
    }
    if dg == 0 {
        return Ok(pow(&g.coeffs()[0], df));
    }

    let (mut a, mut b, mut sign) = if df >= dg {
        (f.clone(), g.clone(), false)
    } else {
        (g.clone(), f.clone(), df % 2 == 1 && dg % 2 == 1)
    };

    let ca = a.content();
    let cb = b.content();
    let t = pow(&ca, b.degree().unwrap()) * pow(&cb, a.degree().unwrap());
    a = a.exact_div_scalar(&ca);
    b = b.exact_div_scalar(&cb);

    let mut g_coef = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = a.prem(&b)?;
        a = b;
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g_coef * pow(&h, delta);
        b = r.exact_div_scalar(&divisor);
        g_coef = a.leading_coeff().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g_coef.clone(),
            _ => exact_div(&pow(&g_coef, delta), &pow(&h, delta - 1)),
        };

        let db = b.degree().unwrap();
        if db == 0 {
            let da = a.degree().unwrap();
            let lb = b.leading_coeff().unwrap();
            let h_final = exact_div(&pow(lb, da), &pow(&h, da - 1));
            let res = t * h_final;
            return Ok(if sign { -res } else { res });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::path_charpoly;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn path_examples() {
        assert_eq!(
            resultant(&path_charpoly(1), &path_charpoly(2)).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(resultant(&p(&[0, 1]), &p(&[0, 1])).unwrap(), BigInt::zero());
    }

    #[test]
    fn linear_factors() {
        // Res((x-1)(x-2), x-3) = (1-3)(2-3) = 2
        let f = p(&[2, -3, 1]);
        assert_eq!(resultant(&f, &p(&[-3, 1])).unwrap(), BigInt::from(2));
        // Res(x-3, (x-1)(x-2)) = (3-1)(3-2) = 2
        assert_eq!(resultant(&p(&[-3, 1]), &f).unwrap(), BigInt::from(2));
    }

    #[test]
    fn non_monic_and_non_primitive() {
        // f = 2x^2 + 2 = 2(x^2+1), g = 3x - 6: Res = 2^1 · ∏ g(±i) = 2 · (3i - 6)(-3i - 6) = 2 · 45
        assert_eq!(
            resultant(&p(&[2, 0, 2]), &p(&[-6, 3])).unwrap(),
            BigInt::from(90)
        );
    }

    #[test]
    fn constants() {
        assert_eq!(
            resultant(&p(&[3]), &p(&[1, 0, 1])).unwrap(),
            BigInt::from(9)
        );
        assert_eq!(
            resultant(&p(&[1, 0, 1]), &p(&[-2])).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(resultant(&p(&[5]), &p(&[7])).unwrap(), BigInt::one());
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(
            resultant(&IntPoly::zero(), &p(&[1, 1])),
            Err(PolyError::ZeroPolynomial)
        );
        assert_eq!(
            resultant(&p(&[1, 1]), &IntPoly::zero()),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn antisymmetry_for_paths() {
        for n in 1..=12 {
            for m in 1..=12 {
                let f = path_charpoly(n);
                let g = path_charpoly(m);
                let fg = resultant(&f, &g).unwrap();
                let gf = resultant(&g, &f).unwrap();
                let expect = if (n * m) % 2 == 1 { -gf } else { gf };
                assert_eq!(fg, expect, "n = {n}, m = {m}");
            }
        }
    }
}

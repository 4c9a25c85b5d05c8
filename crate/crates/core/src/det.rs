//! The four routes to `det A(P_n □ P_m)`.

use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::charpoly::path_charpoly;
use crate::graph::Graph;
use crate::matrix::matpoly_eval;
use crate::poly::PolyError;
use crate::resultant::resultant;

pub const DEFAULT_DIRECT_CEILING: usize = 400;
pub const DEFAULT_BLOCK_CEILING: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodError {
    /// Path sizes start at 1.
    ZeroPathLength,
    /// `direct` needs `n·m <= limit`; `block` needs `m <= limit`.
    CeilingExceeded {
        method: Method,
        value: usize,
        limit: usize,
    },
    Poly(PolyError),
}

impl fmt::Display for MethodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MethodError::ZeroPathLength => f.write_str("path sizes must be at least 1"),
            MethodError::CeilingExceeded {
                method,
                value,
                limit,
            } => write!(
                f,
                "{} method: size {value} exceeds the ceiling of {limit}",
                method.name()
            ),
            MethodError::Poly(e) => write!(f, "polynomial error: {e}"),
        }
    }
}

impl core::error::Error for MethodError {}

impl From<PolyError> for MethodError {
    fn from(e: PolyError) -> Self {
        MethodError::Poly(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Direct,
    Block,
    Resultant,
    Closed,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Direct,
        Method::Block,
        Method::Resultant,
        Method::Closed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Block => "block",
            Method::Resultant => "resultant",
            Method::Closed => "closed",
        }
    }

    pub fn from_name(s: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.name() == s)
    }

    pub fn run(self, n: usize, m: usize, limits: &Limits) -> Result<BigInt, MethodError> {
        match self {
            Method::Direct => det_direct(n, m, limits.direct),
            Method::Block => det_block(n, m, limits.block),
            Method::Resultant => det_resultant(n, m),
            Method::Closed => det_closed_form(n, m),
        }
    }

    /// Whether `run` would be rejected by the size ceiling.
    pub fn exceeds(self, n: usize, m: usize, limits: &Limits) -> bool {
        match self {
            Method::Direct => n.saturating_mul(m) > limits.direct,
            Method::Block => m > limits.block,
            Method::Resultant | Method::Closed => false,
        }
    }
}

/// Size ceilings for the two matrix methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum `n·m` for [`det_direct`].
    pub direct: usize,
    /// Maximum `m` for [`det_block`].
    pub block: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            direct: DEFAULT_DIRECT_CEILING,
            block: DEFAULT_BLOCK_CEILING,
        }
    }
}

fn check_sizes(n: usize, m: usize) -> Result<(), MethodError> {
    if n == 0 || m == 0 {
        Err(MethodError::ZeroPathLength)
    } else {
        Ok(())
    }
}

fn path(n: usize) -> Graph {
    Graph::path(n).expect("n >= 1 checked by caller")
}

/// Bareiss determinant of the assembled adjacency matrix. Requires `n·m <= ceiling`.
pub fn det_direct(n: usize, m: usize, ceiling: usize) -> Result<BigInt, MethodError> {
    check_sizes(n, m)?;
    let cells = n.saturating_mul(m);
    if cells > ceiling {
        return Err(MethodError::CeilingExceeded {
            method: Method::Direct,
            value: cells,
            limit: ceiling,
        });
    }
    let g = path(n).box_product(&path(m));
    Ok(g.adjacency_matrix().bareiss_det())
}

/// `det(q_n(-A(P_m)))`, an `m × m` determinant. Requires `m <= max_m`.
pub fn det_block(n: usize, m: usize, max_m: usize) -> Result<BigInt, MethodError> {
    check_sizes(n, m)?;
    if m > max_m {
        return Err(MethodError::CeilingExceeded {
            method: Method::Block,
            value: m,
            limit: max_m,
        });
    }
    let b = -path(m).adjacency_matrix();
    Ok(matpoly_eval(&path_charpoly(n), &b).bareiss_det())
}

/// `∏ q_m(λ)` over the roots `λ` of `q_n`, computed as `(-1)^{nm} Res(q_n, q_m)`.
///
/// `Res(q_n, q_m) = lc(q_n)^m ∏ q_m(λ)` and `lc(q_n) = (-1)^n`.
pub fn det_resultant(n: usize, m: usize) -> Result<BigInt, MethodError> {
    check_sizes(n, m)?;
    let res = resultant(&path_charpoly(n), &path_charpoly(m))?;
    Ok(if (n % 2 == 1) && (m % 2 == 1) {
        -res
    } else {
        res
    })
}

/// Euclid's algorithm by remainders.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `0` if `gcd(n+1, m+1) != 1`, otherwise `(-1)^{nm/2}`.
pub fn det_closed_form(n: usize, m: usize) -> Result<BigInt, MethodError> {
    check_sizes(n, m)?;
    Ok(BigInt::from(closed_form_sign(n as u64, m as u64)))
}

/// [`det_closed_form`] as a small integer, for sweeps far past bigint territory.
pub fn closed_form_sign(n: u64, m: u64) -> i8 {
    if gcd(n + 1, m + 1) != 1 {
        return 0;
    }
    let nm = u128::from(n) * u128::from(m);
    assert!(
        nm % 2 == 0,
        "coprime n+1 = {}, m+1 = {} cannot both be even; gcd is broken",
        n + 1,
        m + 1
    );
    if (nm / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// True when the value is in `{-1, 0, 1}`.
pub fn is_unit_or_zero(v: &BigInt) -> bool {
    v.is_zero() || v.magnitude() == &num_bigint::BigUint::from(1u8)
}

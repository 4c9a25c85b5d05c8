//! Executable checks of the path-polynomial identities.
//!
//! Statements that hold "at every root `λ` of `q_k`" are checked as exact
//! divisibility by `q_k`: the difference of the two sides must leave a zero
//! remainder modulo `q_k`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Pow;

use crate::charpoly::PathPolys;
use crate::det::{det_resultant, MethodError};
use crate::poly::IntPoly;
use crate::resultant::resultant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `q_k = q_i q_{k-i} - q_{i-1} q_{k-i-1}` for `i in [k-1]`.
    Splitting,
    /// `q_{k+s} ≡ -q_{k-s} (mod q_k)` for `0 <= s <= k`.
    Shift,
    /// `q_k | q_{t(k+1)-1}` for `t >= 1`.
    Annihilation,
    /// `q_{a(k+1)+b} ≡ q_{k+1}^a q_b (mod q_k)` for `a >= 1`, `0 <= b <= k`.
    Power,
    /// `Res(q_n, q_{n+1}) = (-1)^{n(n+1)/2}`.
    ProductNPlus1,
    /// The root product is symmetric in `n` and `m`.
    Symmetry,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Splitting,
        Identity::Shift,
        Identity::Annihilation,
        Identity::Power,
        Identity::ProductNPlus1,
        Identity::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Splitting => "splitting",
            Identity::Shift => "shift",
            Identity::Annihilation => "annihilation",
            Identity::Power => "power",
            Identity::ProductNPlus1 => "product_n_plus_1",
            Identity::Symmetry => "symmetry",
        }
    }
}

/// One instance of an identity, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityCase {
    Splitting { k: usize },
    Shift { k: usize, s: usize },
    Annihilation { k: usize, t: usize },
    Power { k: usize, a: usize, b: usize },
    ProductNPlus1 { n: usize },
    Symmetry { n: usize, m: usize },
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IdentityCase::Splitting { k } => write!(f, "splitting(k={k})"),
            IdentityCase::Shift { k, s } => write!(f, "shift(k={k}, s={s})"),
            IdentityCase::Annihilation { k, t } => write!(f, "annihilation(k={k}, t={t})"),
            IdentityCase::Power { k, a, b } => write!(f, "power(k={k}, a={a}, b={b})"),
            IdentityCase::ProductNPlus1 { n } => write!(f, "product_n_plus_1(n={n})"),
            IdentityCase::Symmetry { n, m } => write!(f, "symmetry(n={n}, m={m})"),
        }
    }
}

/// Evidence that a case failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Nonzero remainder modulo `q_k`.
    Residue(IntPoly),
    /// Nonzero difference of the two sides of the splitting identity at index `i`.
    SplitResidue { i: usize, residue: IntPoly },
    /// Integers that should have been equal.
    Mismatch { expected: BigInt, actual: BigInt },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Residue(r) => write!(f, "residue {r}"),
            Witness::SplitResidue { i, residue } => write!(f, "i={i}: residue {residue}"),
            Witness::Mismatch { expected, actual } => {
                write!(f, "expected {expected}, got {actual}")
            }
        }
    }
}

/// Outcome of one case. A witness is present exactly when the case failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    case: IdentityCase,
    witness: Option<Witness>,
}

impl IdentityReport {
    pub fn pass(case: IdentityCase) -> Self {
        IdentityReport {
            case,
            witness: None,
        }
    }

    pub fn fail(case: IdentityCase, witness: Witness) -> Self {
        IdentityReport {
            case,
            witness: Some(witness),
        }
    }

    pub fn case(&self) -> IdentityCase {
        self.case
    }

    pub fn identity(&self) -> Identity {
        self.case.identity()
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityError {
    Parameter {
        case: IdentityCase,
        requirement: &'static str,
    },
    Method(MethodError),
}

impl fmt::Display for IdentityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityError::Parameter { case, requirement } => {
                write!(f, "invalid parameters for {case}: need {requirement}")
            }
            IdentityError::Method(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for IdentityError {}

impl From<MethodError> for IdentityError {
    fn from(e: MethodError) -> Self {
        IdentityError::Method(e)
    }
}

impl IdentityCase {
    pub fn identity(&self) -> Identity {
        match self {
            IdentityCase::Splitting { .. } => Identity::Splitting,
            IdentityCase::Shift { .. } => Identity::Shift,
            IdentityCase::Annihilation { .. } => Identity::Annihilation,
            IdentityCase::Power { .. } => Identity::Power,
            IdentityCase::ProductNPlus1 { .. } => Identity::ProductNPlus1,
            IdentityCase::Symmetry { .. } => Identity::Symmetry,
        }
    }

    pub fn validate(&self) -> Result<(), IdentityError> {
        let requirement = match *self {
            IdentityCase::Splitting { k } if k < 1 => "k >= 1",
            IdentityCase::Shift { k, .. } if k < 1 => "k >= 1",
            IdentityCase::Shift { k, s } if s > k => "0 <= s <= k",
            IdentityCase::Annihilation { k, t } if k < 1 || t < 1 => "k >= 1 and t >= 1",
            IdentityCase::Power { k, a, .. } if k < 1 || a < 1 => "k >= 1 and a >= 1",
            IdentityCase::Power { k, b, .. } if b > k => "0 <= b <= k",
            IdentityCase::ProductNPlus1 { n } if n < 1 => "n >= 1",
            IdentityCase::Symmetry { n, m } if n < 1 || m < 1 => "n >= 1 and m >= 1",
            _ => return Ok(()),
        };
        Err(IdentityError::Parameter {
            case: *self,
            requirement,
        })
    }

    /// Largest `j` such that checking this case reads `q_j`.
    fn max_index(&self) -> usize {
        match *self {
            IdentityCase::Splitting { k } => k,
            IdentityCase::Shift { k, s } => k + s,
            IdentityCase::Annihilation { k, t } => t * (k + 1) - 1,
            IdentityCase::Power { k, a, b } => a * (k + 1) + b,
            IdentityCase::ProductNPlus1 { n } => n + 1,
            IdentityCase::Symmetry { .. } => 0,
        }
    }

    /// Checks this case, drawing `q_j` from a shared table.
    pub fn run(&self, polys: &mut PathPolys) -> Result<IdentityReport, IdentityError> {
        self.validate()?;
        let case = *self;
        let q = polys.up_to(self.max_index());
        let report = match case {
            IdentityCase::Splitting { k } => (1..k)
                .find_map(|i| {
                    let rhs = &q[i] * &q[k - i] - &q[i - 1] * &q[k - i - 1];
                    let residue = &q[k] - &rhs;
                    (!residue.is_zero()).then_some(Witness::SplitResidue { i, residue })
                })
                .map_or(IdentityReport::pass(case), |w| {
                    IdentityReport::fail(case, w)
                }),
            IdentityCase::Shift { k, s } => divisibility(case, &(&q[k + s] + &q[k - s]), &q[k]),
            IdentityCase::Annihilation { k, t } => divisibility(case, &q[t * (k + 1) - 1], &q[k]),
            IdentityCase::Power { k, a, b } => {
                let rhs = q[k + 1].pow(a) * &q[b];
                divisibility(case, &(&q[a * (k + 1) + b] - &rhs), &q[k])
            }
            IdentityCase::ProductNPlus1 { n } => {
                let actual = resultant(&q[n], &q[n + 1]).map_err(MethodError::from)?;
                let exponent = (n * (n + 1) / 2) % 2;
                let expected: BigInt = Pow::pow(BigInt::from(-1), exponent);
                compare(case, expected, actual)
            }
            IdentityCase::Symmetry { n, m } => {
                compare(case, det_resultant(n, m)?, det_resultant(m, n)?)
            }
        };
        Ok(report)
    }
}

fn divisibility(case: IdentityCase, value: &IntPoly, modulus: &IntPoly) -> IdentityReport {
    // q_k has leading coefficient ±1, so pseudo_rem cannot fail here.
    let r = value
        .pseudo_rem(modulus)
        .expect("path polynomials have unit leading coefficient");
    if r.is_zero() {
        IdentityReport::pass(case)
    } else {
        IdentityReport::fail(case, Witness::Residue(r))
    }
}

fn compare(case: IdentityCase, expected: BigInt, actual: BigInt) -> IdentityReport {
    if expected == actual {
        IdentityReport::pass(case)
    } else {
        IdentityReport::fail(case, Witness::Mismatch { expected, actual })
    }
}

pub fn check_splitting(k: usize) -> Result<IdentityReport, IdentityError> {
    IdentityCase::Splitting { k }.run(&mut PathPolys::new())
}

pub fn check_shift(k: usize, s: usize) -> Result<IdentityReport, IdentityError> {
    IdentityCase::Shift { k, s }.run(&mut PathPolys::new())
}

pub fn check_annihilation(k: usize, t: usize) -> Result<IdentityReport, IdentityError> {
    IdentityCase::Annihilation { k, t }.run(&mut PathPolys::new())
}

pub fn check_power(k: usize, a: usize, b: usize) -> Result<IdentityReport, IdentityError> {
    IdentityCase::Power { k, a, b }.run(&mut PathPolys::new())
}

pub fn check_product_n_plus_1(n: usize) -> Result<IdentityReport, IdentityError> {
    IdentityCase::ProductNPlus1 { n }.run(&mut PathPolys::new())
}

pub fn check_symmetry(n: usize, m: usize) -> Result<IdentityReport, IdentityError> {
    IdentityCase::Symmetry { n, m }.run(&mut PathPolys::new())
}

/// Parameter ranges for a full identity suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteBounds {
    pub splitting_k: usize,
    pub shift_k: usize,
    pub annihilation_k: usize,
    pub annihilation_t: usize,
    pub power_k: usize,
    pub power_a: usize,
    pub product_n: usize,
    pub symmetry_n: usize,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        SuiteBounds {
            splitting_k: 30,
            shift_k: 20,
            annihilation_k: 15,
            annihilation_t: 5,
            power_k: 10,
            power_a: 4,
            product_n: 20,
            symmetry_n: 12,
        }
    }
}

impl SuiteBounds {
    /// Every family runs up to `max_k`; `t` and `a` keep their default ranges.
    pub fn uniform(max_k: usize) -> Self {
        SuiteBounds {
            splitting_k: max_k,
            shift_k: max_k,
            annihilation_k: max_k,
            power_k: max_k,
            product_n: max_k,
            symmetry_n: max_k,
            ..SuiteBounds::default()
        }
    }

    /// All cases in family order, then lexicographic parameter order.
    pub fn cases(&self) -> Vec<IdentityCase> {
        let mut out = Vec::new();
        out.extend((1..=self.splitting_k).map(|k| IdentityCase::Splitting { k }));
        for k in 1..=self.shift_k {
            out.extend((0..=k).map(|s| IdentityCase::Shift { k, s }));
        }
        for k in 1..=self.annihilation_k {
            out.extend((1..=self.annihilation_t).map(|t| IdentityCase::Annihilation { k, t }));
        }
        for k in 1..=self.power_k {
            for a in 1..=self.power_a {
                out.extend((0..=k).map(|b| IdentityCase::Power { k, a, b }));
            }
        }
        out.extend((1..=self.product_n).map(|n| IdentityCase::ProductNPlus1 { n }));
        for n in 1..=self.symmetry_n {
            out.extend((1..=self.symmetry_n).map(|m| IdentityCase::Symmetry { n, m }));
        }
        out
    }
}

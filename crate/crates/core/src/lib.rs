//! Exact arithmetic for determinants of box products of paths.
//!
//! The adjacency matrix of `P_n □ P_m` is handled four ways, all in exact
//! integer arithmetic:
//!
//! - [`det::det_direct`]: Bareiss elimination on the assembled `nm × nm` matrix.
//! - [`det::det_block`]: the block reduction `det(q_n(-A(P_m)))`.
//! - [`det::det_resultant`]: the root product `∏ q_m(λ)` over the roots of `q_n`,
//!   evaluated as a signed resultant.
//! - [`det::det_closed_form`]: zero unless `gcd(n+1, m+1) = 1`, else `(-1)^{nm/2}`.
//!
//! The crate is `no_std` and only needs `alloc`. IO, reports, and the CLI live
//! in the `pathbox` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod charpoly;
pub mod det;
pub mod graph;
pub mod identities;
pub mod matrix;
pub mod poly;
pub mod resultant;

pub use charpoly::{path_charpoly, PathPolys};
pub use det::{det_block, det_closed_form, det_direct, det_resultant, Limits, Method, MethodError};
pub use graph::{Graph, GraphError};
pub use identities::{Identity, IdentityCase, IdentityError, IdentityReport, SuiteBounds, Witness};
pub use matrix::{matpoly_eval, IntMatrix, LinalgError};
pub use poly::{IntPoly, Parity, PolyError};
pub use resultant::resultant;

pub use num_bigint::BigInt;

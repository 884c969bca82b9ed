//! Exact Tutte polynomials for multigraphs and ranked sets, and a verifier for
//! the generalized Brylawski linear relations among their coefficients.
//!
//! A ranked set is a finite ground set `E` with a rank function `r` such that
//! `r(S) <= min(r(E), |S|)` for every subset `S`. Its Tutte polynomial is
//!
//! ```text
//! T(x, y) = sum over S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))
//! ```
//!
//! and, writing `T = sum t_ij x^i y^j` with `m = |E|` and `r = r(E)`, for every `h >= 0`
//!
//! ```text
//! sum_{i<=h} sum_{j<=h-i} C(h-i, j) (-1)^j t_ij = (-1)^(m-r) C(h-r, h-m)
//! ```
//!
//! where the right side is zero for `h < m`.
//!
//! The crate computes `T` three independent ways (subset expansion,
//! memoized deletion–contraction, spanning-tree activities) and checks the
//! relation above along with the intermediate identities it rests on.

pub mod bipoly;
pub mod cli;
pub mod engines;
pub mod error;
pub mod identities;
pub mod structures;

pub use bipoly::{binomial, expand_hyperbola, BiPoly, UniPoly};
pub use error::{Error, Result};
pub use identities::IdentityReport;
pub use structures::{EdgeKind, Multigraph, RankedSet};

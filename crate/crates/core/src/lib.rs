//! Exact multivariate Tutte polynomials of matroids, and certificates that
//! their Galois groups are full symmetric groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`matroid`]: ground sets, rank oracles, minors, connectivity.
//! - [`poly`]: exact integer polynomials, polynomials over finite fields and
//!   the [`RankProfile`](poly::RankProfile) encoding of `Ẑ_M`.
//! - [`tutte`]: `Ẑ_M` by state sum and by deletion–contraction, the
//!   bivariate Tutte polynomial and the identity checks tying them together.
//! - [`galois`]: distinct-degree factorization, Frobenius cycle types and
//!   one-sided `S_n` certificates.
//! - [`graphs`]: graph6, biconnectivity and isomorph-free enumeration.
//! - [`corpus`]: the built-in test corpus.
//! - [`io`]: the JSON input format for matroids.

pub mod corpus;
pub mod galois;
pub mod graphs;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod tutte;

pub use matroid::{ElementSet, Matroid, MatroidError};

//! Exact polynomial arithmetic.
//!
//! - [`UniPolyZ`], [`BiPolyZ`]: dense polynomials over ℤ in one or two
//!   variables.
//! - [`MultiPolyZ`]: sparse polynomials in `q` and multilinear in the
//!   element variables `v_e`.
//! - [`FieldPoly`] over a [`FiniteField`]; [`UniPolyFp`] is the prime-field
//!   case.
//! - [`RankProfile`]: the subset-indexed exponent table that encodes `Ẑ_M`.

mod bi;
mod field;
mod multi;
mod profile;
mod symmetric;
mod uni;

pub use bi::BiPolyZ;
pub use field::{ExtensionField, FieldPoly, FiniteField, PrimeField, UniPolyFp};
pub use multi::{Assignment, Monomial, MultiPolyZ, Var};
pub use profile::RankProfile;
pub use symmetric::{elementary_symmetric, elementary_symmetric_poly};
pub use uni::UniPolyZ;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("moduli differ ({0} vs {1})")]
    FieldMismatch(String, String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("result would not be univariate: {0}")]
    Arity(String),
    #[error("product is not multilinear in v_{0}")]
    NotMultilinear(usize),
    #[error("index {index} out of range 0..={len}")]
    OutOfRange { index: usize, len: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid rank profile: {0}")]
    InvalidProfile(String),
}

/// Implements the owned-operand forms of a binary operator in terms of the
/// `&T op &T` implementation.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                std::ops::$tr::$method(&self, rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

/// Deterministic primality test for `n < 2^32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `2, 3, 5, …` up to and including `bound`.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter(|(_, &p)| p)
        .map(|(i, _)| i as u64)
        .collect()
}

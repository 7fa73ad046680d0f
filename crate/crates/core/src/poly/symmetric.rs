use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, MultiPolyZ, PolyError};
use crate::matroid::ElementSet;

/// `σ_k(values)`, the sum of all products of `k` distinct entries.
pub fn elementary_symmetric(k: usize, values: &[BigInt]) -> Result<BigInt, PolyError> {
    if k > values.len() {
        return Err(PolyError::OutOfRange {
            index: k,
            len: values.len(),
        });
    }
    // sigma[j] after processing a prefix is σ_j of that prefix
    let mut sigma = vec![BigInt::zero(); k + 1];
    sigma[0] = BigInt::one();
    for x in values {
        for j in (1..=k).rev() {
            let add = &sigma[j - 1] * x;
            sigma[j] += add;
        }
    }
    Ok(sigma.swap_remove(k))
}

/// `σ_k(v_0, …, v_{m−1})` as a polynomial.
pub fn elementary_symmetric_poly(k: usize, m: usize) -> Result<MultiPolyZ, PolyError> {
    if k > m {
        return Err(PolyError::OutOfRange { index: k, len: m });
    }
    let mut p = MultiPolyZ::zero();
    for set in ElementSet::full(m).subsets().filter(|s| s.len() == k) {
        p.add_term(Monomial::new(0, set), BigInt::one());
    }
    Ok(p)
}

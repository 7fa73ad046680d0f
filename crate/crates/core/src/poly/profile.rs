use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{FieldPoly, FiniteField, Monomial, MultiPolyZ, PolyError, UniPolyZ};
use crate::matroid::{ElementSet, MAX_GROUND_SIZE};

/// `A ↦ r(M) − r_M(A)` over all subsets of the ground set.
///
/// This is a lossless encoding of
/// `Ẑ_M(q, v) = Σ_A q^{r(M) − r_M(A)} ∏_{e∈A} v_e`: every squarefree
/// `v`-monomial occurs exactly once, with coefficient one, so the exponent of
/// `q` attached to each subset determines the polynomial. Sokal's
/// `Z̃_M = q^{−r(M)} Ẑ_M` carries the same data with exponents `−r_M(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankProfile {
    ground_size: usize,
    rank: usize,
    exponents: Vec<u8>,
}

impl RankProfile {
    /// Validates that `exponents` has one entry per subset, starts at the
    /// rank, and drops by at most one when an element is added.
    pub fn from_exponents(ground_size: usize, exponents: Vec<u8>) -> Result<Self, PolyError> {
        if ground_size > MAX_GROUND_SIZE {
            return Err(PolyError::InvalidProfile(format!(
                "ground set of size {ground_size} is too large"
            )));
        }
        if exponents.len() != 1 << ground_size {
            return Err(PolyError::InvalidProfile(format!(
                "expected {} exponents, got {}",
                1usize << ground_size,
                exponents.len()
            )));
        }
        let rank = exponents[0] as usize;
        for a in 0..exponents.len() {
            for e in 0..ground_size {
                if a >> e & 1 == 1 {
                    continue;
                }
                let (lo, hi) = (exponents[a | 1 << e], exponents[a]);
                if lo > hi || hi - lo > 1 {
                    return Err(PolyError::InvalidProfile(format!(
                        "exponent jumps from {hi} to {lo} when adding element {e} to {:?}",
                        ElementSet::from_bits(a as u32)
                    )));
                }
            }
        }
        Ok(RankProfile {
            ground_size,
            rank,
            exponents,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// `r(M)`, the degree in `q`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn exponent(&self, set: ElementSet) -> usize {
        self.exponents[set.bits() as usize] as usize
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    /// Monic in `q` iff no nonempty subset has rank zero (no loops).
    pub fn is_monic(&self) -> bool {
        self.exponents[1..].iter().all(|&e| (e as usize) < self.rank)
    }

    pub fn to_multi(&self) -> MultiPolyZ {
        let mut p = MultiPolyZ::zero();
        for (a, &e) in self.exponents.iter().enumerate() {
            p.add_term(
                Monomial::new(e as u32, ElementSet::from_bits(a as u32)),
                BigInt::one(),
            );
        }
        p
    }

    /// Inverse of [`to_multi`](Self::to_multi). Fails unless every subset of
    /// `0..ground_size` appears exactly once with coefficient one.
    pub fn from_multi(poly: &MultiPolyZ, ground_size: usize) -> Result<Self, PolyError> {
        if ground_size > MAX_GROUND_SIZE {
            return Err(PolyError::InvalidProfile(format!(
                "ground set of size {ground_size} is too large"
            )));
        }
        let mut exponents: Vec<Option<u8>> = vec![None; 1 << ground_size];
        for (m, c) in poly.terms() {
            if !c.is_one() {
                return Err(PolyError::InvalidProfile(format!(
                    "coefficient {c} on {m:?}"
                )));
            }
            let slot = exponents
                .get_mut(m.vars.bits() as usize)
                .ok_or_else(|| PolyError::InvalidProfile(format!("variable outside ground set in {m:?}")))?;
            if slot.replace(m.q as u8).is_some() {
                return Err(PolyError::InvalidProfile(format!(
                    "subset {:?} appears twice",
                    m.vars
                )));
            }
        }
        let exponents = exponents
            .into_iter()
            .enumerate()
            .map(|(a, e)| {
                e.ok_or_else(|| {
                    PolyError::InvalidProfile(format!(
                        "subset {:?} is missing",
                        ElementSet::from_bits(a as u32)
                    ))
                })
            })
            .collect::<Result<Vec<u8>, _>>()?;
        Self::from_exponents(ground_size, exponents)
    }

    /// `Ẑ_M(q, v)` with every `v_e` replaced by an integer.
    pub fn specialize_v(&self, values: &[BigInt]) -> Result<UniPolyZ, PolyError> {
        self.check_arity(values.len())?;
        let mut coeffs = vec![BigInt::zero(); self.rank + 1];
        self.walk(values, &BigInt::one(), &mut |set, prod: &BigInt| {
            coeffs[self.exponent(set)] += prod;
        }, |a, b| a * b, BigInt::is_zero);
        Ok(UniPolyZ::new(coeffs))
    }

    /// `Ẑ_M(q, v)` with every `v_e` replaced by a finite-field element.
    pub fn specialize_v_in<F: FiniteField>(
        &self,
        field: &F,
        values: &[F::Elem],
    ) -> Result<FieldPoly<F>, PolyError> {
        self.check_arity(values.len())?;
        let mut coeffs = vec![field.zero(); self.rank + 1];
        self.walk(
            values,
            &field.one(),
            &mut |set, prod: &F::Elem| {
                let slot = &mut coeffs[self.exponent(set)];
                *slot = field.add(slot, prod);
            },
            |a, b| field.mul(a, b),
            |a| field.is_zero(a),
        );
        Ok(FieldPoly::new(field.clone(), coeffs))
    }

    fn check_arity(&self, given: usize) -> Result<(), PolyError> {
        if given == self.ground_size {
            Ok(())
        } else {
            Err(PolyError::Arity(format!(
                "{given} values for {} element variables",
                self.ground_size
            )))
        }
    }

    /// Visits every subset with the product of its values, skipping subtrees
    /// whose product is already zero.
    fn walk<T: Clone>(
        &self,
        values: &[T],
        one: &T,
        visit: &mut impl FnMut(ElementSet, &T),
        mul: impl Fn(&T, &T) -> T,
        is_zero: impl Fn(&T) -> bool,
    ) {
        fn go<T: Clone>(
            e: usize,
            set: ElementSet,
            prod: &T,
            values: &[T],
            visit: &mut impl FnMut(ElementSet, &T),
            mul: &impl Fn(&T, &T) -> T,
            is_zero: &impl Fn(&T) -> bool,
        ) {
            if e == values.len() {
                visit(set, prod);
                return;
            }
            go(e + 1, set, prod, values, visit, mul, is_zero);
            let next = mul(prod, &values[e]);
            if !is_zero(&next) {
                go(e + 1, set.with(e), &next, values, visit, mul, is_zero);
            }
        }
        go(0, ElementSet::EMPTY, one, values, visit, &mul, &is_zero);
    }
}

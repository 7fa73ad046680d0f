use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use super::{is_prime, PolyError};

/// A finite field `F_{p^k}` with element type `Elem`.
pub trait FiniteField: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Eq + Debug;

    fn characteristic(&self) -> u64;
    fn extension_degree(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of the integer `n` (reduced mod `p`).
    fn from_u64(&self, n: u64) -> Self::Elem;
    /// The `index`-th element in a fixed enumeration, `index < p^k`.
    fn element(&self, index: u64) -> Self::Elem;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    /// `p^k`, saturating.
    fn order(&self) -> u64 {
        (0..self.extension_degree()).fold(1u64, |acc, _| acc.saturating_mul(self.characteristic()))
    }
}

/// `F_p` for a prime `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, PolyError> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(PolyError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl FiniteField for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn extension_degree(&self) -> u32 {
        1
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a % self.p != 0).then(|| self.pow(*a, self.p - 2))
    }
    fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }
    fn element(&self, index: u64) -> u64 {
        index % self.p
    }
}

/// `F_{p^k} = F_p[t] / (m(t))`, elements stored as `k` coefficients of a
/// polynomial in `t`. The modulus `m` is the lexicographically first monic
/// irreducible polynomial of degree `k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtensionField {
    base: PrimeField,
    /// Low-order coefficients of the monic modulus (length `k`).
    modulus: Arc<[u64]>,
}

impl ExtensionField {
    pub fn new(p: u64, degree: u32) -> Result<Self, PolyError> {
        let base = PrimeField::new(p)?;
        let k = degree.max(1) as usize;
        // Enumerate monic degree-k polynomials by their low coefficients.
        let mut low = vec![0u64; k];
        loop {
            let mut coeffs = low.clone();
            coeffs.push(1);
            let candidate = FieldPoly::new(base, coeffs);
            if candidate.is_irreducible() {
                return Ok(ExtensionField {
                    base,
                    modulus: low.into(),
                });
            }
            let mut i = 0;
            loop {
                low[i] += 1;
                if low[i] < p {
                    break;
                }
                low[i] = 0;
                i += 1;
                assert!(i < k, "an irreducible polynomial of every degree exists");
            }
        }
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.modulus.to_vec();
        m.push(1);
        m
    }

    fn k(&self) -> usize {
        self.modulus.len()
    }
}

impl Debug for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.base.p, self.k())
    }
}

impl FiniteField for ExtensionField {
    type Elem = Vec<u64>;

    fn characteristic(&self) -> u64 {
        self.base.p
    }
    fn extension_degree(&self) -> u32 {
        self.k() as u32
    }
    fn zero(&self) -> Vec<u64> {
        vec![0; self.k()]
    }
    fn one(&self) -> Vec<u64> {
        let mut e = self.zero();
        e[0] = 1;
        e
    }
    fn is_zero(&self, a: &Vec<u64>) -> bool {
        a.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        let k = self.k();
        let p = self.base.p;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // t^k = -(m_0 + m_1 t + … + m_{k-1} t^{k-1})
        for d in (k..prod.len()).rev() {
            let top = prod[d];
            if top == 0 {
                continue;
            }
            prod[d] = 0;
            for (j, m) in self.modulus.iter().enumerate() {
                prod[d - k + j] = (prod[d - k + j] + p - top * m % p) % p;
            }
        }
        prod.truncate(k);
        prod
    }
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if self.is_zero(a) {
            return None;
        }
        // a^(p^k - 2)
        let mut exp = self.order() - 2;
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        Some(acc)
    }
    fn from_u64(&self, n: u64) -> Vec<u64> {
        let mut e = self.zero();
        e[0] = n % self.base.p;
        e
    }
    fn element(&self, mut index: u64) -> Vec<u64> {
        let p = self.base.p;
        (0..self.k())
            .map(|_| {
                let d = index % p;
                index /= p;
                d
            })
            .collect()
    }
}

/// Dense univariate polynomial over a finite field. The leading coefficient
/// is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldPoly<F: FiniteField> {
    field: F,
    coeffs: Vec<F::Elem>,
}

/// Polynomials over a prime field.
pub type UniPolyFp = FieldPoly<PrimeField>;

impl UniPolyFp {
    /// Convenience constructor from integer coefficients (reduced mod `p`).
    pub fn from_u64s(p: u64, coeffs: &[u64]) -> Result<Self, PolyError> {
        let field = PrimeField::new(p)?;
        Ok(FieldPoly::new(field, coeffs.iter().map(|&c| c % p).collect()))
    }
}

impl<F: FiniteField> FieldPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        FieldPoly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        FieldPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn x(field: F) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        FieldPoly { field, coeffs }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    fn same_field(&self, other: &Self) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch(
                format!("{:?}", self.field),
                format!("{:?}", other.field),
            ))
        }
    }

    fn with_coeffs(&self, coeffs: Vec<F::Elem>) -> Self {
        FieldPoly::new(self.field.clone(), coeffs)
    }

    fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.same_field(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Ok(self.with_coeffs(
            (0..n)
                .map(|i| self.field.add(&self.coeff(i), &rhs.coeff(i)))
                .collect(),
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.same_field(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Ok(self.with_coeffs(
            (0..n)
                .map(|i| self.field.sub(&self.coeff(i), &rhs.coeff(i)))
                .collect(),
        ))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.same_field(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.field.clone()));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Ok(self.with_coeffs(out))
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.same_field(divisor)?;
        let f = &self.field;
        let Some(dd) = divisor.degree() else {
            return Err(PolyError::DivisionByZero);
        };
        let inv_lead = f.inv(divisor.leading().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if f.is_zero(&top) {
                continue;
            }
            let q = f.mul(&top, &inv_lead);
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(&rem[i + j], &f.mul(&q, d));
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((self.with_coeffs(quot), self.with_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, PolyError> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::InexactDivision)
        }
    }

    /// Scale to leading coefficient one.
    pub fn monic(&self) -> Result<Self, PolyError> {
        let Some(lead) = self.leading() else {
            return Err(PolyError::ZeroPolynomial);
        };
        let inv = self.field.inv(lead).unwrap();
        Ok(self.with_coeffs(self.coeffs.iter().map(|c| self.field.mul(c, &inv)).collect()))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        self.with_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(c, &f.from_u64(i as u64)))
                .collect(),
        )
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative())?.degree() == Some(0))
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Result<Self, PolyError> {
        let mut base = self.rem(modulus)?;
        let mut acc = FieldPoly::new(self.field.clone(), vec![self.field.one()]).rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base)?.rem(modulus)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base)?.rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^k) mod modulus`, the Frobenius of the field.
    fn frobenius_mod(&self, modulus: &Self) -> Result<Self, PolyError> {
        let p = self.field.characteristic();
        let mut h = self.clone();
        for _ in 0..self.field.extension_degree() {
            h = h.pow_mod(p, modulus)?;
        }
        Ok(h)
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, sorted
    /// ascending, by distinct-degree factorization.
    pub fn distinct_degree_parts(&self) -> Result<Vec<usize>, PolyError> {
        if !self.is_squarefree()? {
            return Err(PolyError::NotSquarefree);
        }
        let x = FieldPoly::x(self.field.clone());
        let mut rest = self.monic()?;
        let mut parts = Vec::new();
        let mut h = x.clone();
        let mut d = 0;
        while rest.degree().unwrap() >= 2 * (d + 1) {
            d += 1;
            h = h.frobenius_mod(&rest)?;
            let g = h.checked_sub(&x)?.gcd(&rest)?;
            let gd = g.degree().unwrap_or(0);
            if gd > 0 {
                parts.extend(std::iter::repeat(d).take(gd / d));
                rest = rest.div_exact(&g)?;
                h = h.rem(&rest)?;
            }
        }
        let rd = rest.degree().unwrap();
        if rd > 0 {
            parts.push(rd);
        }
        parts.sort_unstable();
        Ok(parts)
    }

    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(n) => matches!(self.distinct_degree_parts(), Ok(parts) if parts == [n]),
        }
    }
}

impl<F: FiniteField> Debug for FieldPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.field, self.coeffs)
    }
}

impl<F: FiniteField> Add for &FieldPoly<F> {
    type Output = FieldPoly<F>;
    /// Panics if the fields differ; see [`FieldPoly::checked_add`].
    fn add(self, rhs: &FieldPoly<F>) -> FieldPoly<F> {
        self.checked_add(rhs).expect("operands over the same field")
    }
}

impl<F: FiniteField> Sub for &FieldPoly<F> {
    type Output = FieldPoly<F>;
    fn sub(self, rhs: &FieldPoly<F>) -> FieldPoly<F> {
        self.checked_sub(rhs).expect("operands over the same field")
    }
}

impl<F: FiniteField> Mul for &FieldPoly<F> {
    type Output = FieldPoly<F>;
    fn mul(self, rhs: &FieldPoly<F>) -> FieldPoly<F> {
        self.checked_mul(rhs).expect("operands over the same field")
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{forward_binop, FieldPoly, PolyError, PrimeField, UniPolyFp};

/// Dense univariate polynomial over ℤ; `coeffs[i]` is the coefficient of
/// `x^i`. The highest stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPolyZ {
    coeffs: Vec<BigInt>,
}

impl UniPolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPolyZ { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// `self(inner)`.
    pub fn compose(&self, inner: &UniPolyZ) -> UniPolyZ {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPolyZ::zero(), |acc, c| &(&acc * inner) + &UniPolyZ::constant(c.clone()))
    }

    pub fn derivative(&self) -> UniPolyZ {
        UniPolyZ::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> UniPolyZ {
        UniPolyZ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> UniPolyZ {
        (0..exp).fold(UniPolyZ::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / divisor` over ℤ.
    pub fn div_exact(&self, divisor: &UniPolyZ) -> Result<UniPolyZ, PolyError> {
        let Some(dd) = divisor.degree() else {
            return Err(PolyError::DivisionByZero);
        };
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(UniPolyZ::zero());
        };
        if nd < dd {
            return Err(PolyError::InexactDivision);
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::InexactDivision);
        }
        Ok(UniPolyZ::new(quot))
    }

    /// gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, normalised to a positive leading coefficient.
    pub fn primitive_part(&self) -> UniPolyZ {
        let mut c = self.content();
        if c.is_zero() {
            return UniPolyZ::zero();
        }
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        UniPolyZ::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of
    /// `lc(divisor)^k · self` for a suitable `k`.
    fn pseudo_rem(&self, divisor: &UniPolyZ) -> UniPolyZ {
        let dd = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = rem.len() - dd;
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[shift + j] -= &top * d;
            }
        }
        UniPolyZ::new(rem)
    }

    /// Greatest common divisor in ℤ[x], via the primitive remainder sequence.
    /// The result has positive leading coefficient.
    pub fn gcd(&self, other: &UniPolyZ) -> UniPolyZ {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.scale(&content)
    }

    /// Squarefree over ℚ: `gcd(f, f')` is a constant.
    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).degree() == Some(0))
    }

    /// Coefficientwise reduction modulo the prime `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<UniPolyFp, PolyError> {
        let field = PrimeField::new(p)?;
        let modulus = BigInt::from(p);
        Ok(FieldPoly::new(
            field,
            self.coeffs
                .iter()
                .map(|c| c.mod_floor(&modulus).to_u64().unwrap())
                .collect(),
        ))
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Debug for UniPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Display for UniPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &UniPolyZ {
    type Output = UniPolyZ;
    fn add(self, rhs: &UniPolyZ) -> UniPolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolyZ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPolyZ {
    type Output = UniPolyZ;
    fn sub(self, rhs: &UniPolyZ) -> UniPolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPolyZ::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPolyZ {
    type Output = UniPolyZ;
    fn mul(self, rhs: &UniPolyZ) -> UniPolyZ {
        if self.is_zero() || rhs.is_zero() {
            return UniPolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPolyZ::new(out)
    }
}

impl Neg for &UniPolyZ {
    type Output = UniPolyZ;
    fn neg(self) -> UniPolyZ {
        UniPolyZ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for UniPolyZ {
    type Output = UniPolyZ;
    fn neg(self) -> UniPolyZ {
        -&self
    }
}

forward_binop!(UniPolyZ, Add, add);
forward_binop!(UniPolyZ, Sub, sub);
forward_binop!(UniPolyZ, Mul, mul);

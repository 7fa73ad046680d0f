use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{forward_binop, PolyError, UniPolyZ};

/// Dense polynomial in `x` and `y` over ℤ; `coeffs[i][j]` is the
/// coefficient of `x^i y^j`. Rows carry no trailing zeros and the last row
/// is nonempty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPolyZ {
    coeffs: Vec<Vec<BigInt>>,
}

impl BiPolyZ {
    pub fn new(mut coeffs: Vec<Vec<BigInt>>) -> Self {
        for row in &mut coeffs {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while coeffs.last().is_some_and(Vec::is_empty) {
            coeffs.pop();
        }
        BiPolyZ { coeffs }
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn zero() -> Self {
        BiPolyZ { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![vec![c]])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        let mut coeffs = vec![Vec::new(); i + 1];
        coeffs[i] = vec![BigInt::zero(); j + 1];
        coeffs[i][j] = c;
        Self::new(coeffs)
    }

    /// Rows indexed by `x`-degree, columns by `y`-degree.
    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn y_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|r| r.len().checked_sub(1)).max()
    }

    /// Monic as a polynomial in `x` over ℤ[y].
    pub fn is_monic_in_x(&self) -> bool {
        self.coeffs
            .last()
            .is_some_and(|r| r.len() == 1 && r[0].is_one())
    }

    pub fn pow(&self, exp: u32) -> BiPolyZ {
        (0..exp).fold(BiPolyZ::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigInt) -> BiPolyZ {
        BiPolyZ::new(
            self.coeffs
                .iter()
                .map(|r| r.iter().map(|a| a * c).collect())
                .collect(),
        )
    }

    /// Substitute `y ← y0`, leaving a polynomial in `x`.
    pub fn specialize_y(&self, y0: &BigInt) -> UniPolyZ {
        UniPolyZ::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().rev().fold(BigInt::zero(), |acc, c| acc * y0 + c))
                .collect(),
        )
    }

    /// Substitute `x ← x0`, leaving a polynomial in `y`.
    pub fn specialize_x(&self, x0: &BigInt) -> UniPolyZ {
        let width = self.y_degree().map_or(0, |d| d + 1);
        UniPolyZ::new(
            (0..width)
                .map(|j| {
                    (0..self.coeffs.len())
                        .rev()
                        .fold(BigInt::zero(), |acc, i| acc * x0 + self.coeff(i, j))
                })
                .collect(),
        )
    }

    /// Largest term in lexicographic order (`x` first).
    fn leading_term(&self) -> Option<(usize, usize, &BigInt)> {
        let i = self.coeffs.len().checked_sub(1)?;
        let j = self.coeffs[i].len() - 1;
        Some((i, j, &self.coeffs[i][j]))
    }

    /// Exact quotient over ℤ[x, y].
    pub fn div_exact(&self, divisor: &BiPolyZ) -> Result<BiPolyZ, PolyError> {
        let Some((di, dj, dc)) = divisor.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = BiPolyZ::zero();
        while let Some((ri, rj, rc)) = rem.leading_term() {
            if ri < di || rj < dj {
                return Err(PolyError::InexactDivision);
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let term = BiPolyZ::monomial(q, ri - di, rj - dj);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Ok(quot)
    }

    pub fn display(&self) -> String {
        let mut terms = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let mut mono = Vec::new();
                match i {
                    0 => {}
                    1 => mono.push("x".to_string()),
                    _ => mono.push(format!("x^{i}")),
                }
                match j {
                    0 => {}
                    1 => mono.push("y".to_string()),
                    _ => mono.push(format!("y^{j}")),
                }
                let body = if mono.is_empty() {
                    c.abs().to_string()
                } else if c.abs().is_one() {
                    mono.join("*")
                } else {
                    format!("{}*{}", c.abs(), mono.join("*"))
                };
                terms.push((c.is_negative(), body));
            }
        }
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (neg, body)) in terms.into_iter().enumerate() {
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Debug for BiPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl fmt::Display for BiPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

fn combine(a: &BiPolyZ, b: &BiPolyZ, op: impl Fn(BigInt, BigInt) -> BigInt) -> BiPolyZ {
    let rows = a.coeffs.len().max(b.coeffs.len());
    BiPolyZ::new(
        (0..rows)
            .map(|i| {
                let ra = a.coeffs.get(i).map_or(0, Vec::len);
                let rb = b.coeffs.get(i).map_or(0, Vec::len);
                (0..ra.max(rb))
                    .map(|j| op(a.coeff(i, j), b.coeff(i, j)))
                    .collect()
            })
            .collect(),
    )
}

impl Add for &BiPolyZ {
    type Output = BiPolyZ;
    fn add(self, rhs: &BiPolyZ) -> BiPolyZ {
        combine(self, rhs, |a, b| a + b)
    }
}

impl Sub for &BiPolyZ {
    type Output = BiPolyZ;
    fn sub(self, rhs: &BiPolyZ) -> BiPolyZ {
        combine(self, rhs, |a, b| a - b)
    }
}

impl Mul for &BiPolyZ {
    type Output = BiPolyZ;
    fn mul(self, rhs: &BiPolyZ) -> BiPolyZ {
        if self.is_zero() || rhs.is_zero() {
            return BiPolyZ::zero();
        }
        let width = self.y_degree().unwrap() + rhs.y_degree().unwrap() + 1;
        let mut out =
            vec![vec![BigInt::zero(); width]; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i1, r1) in self.coeffs.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (i2, r2) in rhs.coeffs.iter().enumerate() {
                    for (j2, b) in r2.iter().enumerate() {
                        out[i1 + i2][j1 + j2] += a * b;
                    }
                }
            }
        }
        BiPolyZ::new(out)
    }
}

impl Neg for &BiPolyZ {
    type Output = BiPolyZ;
    fn neg(self) -> BiPolyZ {
        self.scale(&BigInt::from(-1))
    }
}

forward_binop!(BiPolyZ, Add, add);
forward_binop!(BiPolyZ, Sub, sub);
forward_binop!(BiPolyZ, Mul, mul);

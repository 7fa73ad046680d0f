use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::{forward_binop, BiPolyZ, PolyError, UniPolyZ};
use crate::matroid::ElementSet;

/// A variable of a [`MultiPolyZ`]: `q`, or the element variable `v_e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q,
    V(usize),
}

/// `q^q · ∏_{e ∈ vars} v_e`. Ordered by the `vars` bitmask, then by `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub vars: ElementSet,
    pub q: u32,
}

impl Monomial {
    pub fn new(q: u32, vars: ElementSet) -> Self {
        Monomial { vars, q }
    }

    /// Key for the lexicographic monomial order used by division.
    fn lex_key(&self) -> (u32, u32) {
        (self.q, self.vars.bits())
    }
}

/// A partial map from variables to integers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<Var, BigInt>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// `v_e ← values[e]` for every `e`.
    pub fn from_v_values(values: &[BigInt]) -> Self {
        let mut a = Self::new();
        for (e, x) in values.iter().enumerate() {
            a.set(Var::V(e), x.clone());
        }
        a
    }

    pub fn with(mut self, var: Var, value: impl Into<BigInt>) -> Self {
        self.set(var, value.into());
        self
    }

    pub fn set(&mut self, var: Var, value: BigInt) {
        self.values.insert(var, value);
    }

    pub fn get(&self, var: Var) -> Option<&BigInt> {
        self.values.get(&var)
    }
}

/// Sparse polynomial in `q` and the element variables, multilinear in every
/// `v_e`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPolyZ {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPolyZ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::term(c, 0, ElementSet::EMPTY)
    }

    pub fn q() -> Self {
        Self::term(BigInt::one(), 1, ElementSet::EMPTY)
    }

    pub fn v(e: usize) -> Self {
        Self::term(BigInt::one(), 0, ElementSet::singleton(e))
    }

    pub fn term(c: BigInt, q: u32, vars: ElementSet) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(q, vars), c);
        p
    }

    /// `∏_{e ∈ set} (1 + v_e)`.
    pub fn product_one_plus_v(set: ElementSet) -> Self {
        let mut p = Self::zero();
        for sub in set.subsets() {
            p.add_term(Monomial::new(0, sub), BigInt::one());
        }
        p
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: Monomial) -> BigInt {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.q).max()
    }

    /// Every `v_e` that occurs.
    pub fn support(&self) -> ElementSet {
        self.terms
            .keys()
            .fold(ElementSet::EMPTY, |acc, m| acc | m.vars)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPolyZ {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, a * c);
        }
        out
    }

    /// Product, failing if some `v_e` would appear squared.
    pub fn checked_mul(&self, rhs: &MultiPolyZ) -> Result<MultiPolyZ, PolyError> {
        let mut out = Self::zero();
        for (m1, a) in &self.terms {
            for (m2, b) in &rhs.terms {
                if let Some(e) = (m1.vars & m2.vars).first() {
                    return Err(PolyError::NotMultilinear(e));
                }
                out.add_term(Monomial::new(m1.q + m2.q, m1.vars | m2.vars), a * b);
            }
        }
        Ok(out)
    }

    pub fn mul_q(&self, power: u32) -> MultiPolyZ {
        MultiPolyZ {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.q + power, m.vars), c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: Var) -> MultiPolyZ {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            match var {
                Var::Q if m.q > 0 => {
                    out.add_term(Monomial::new(m.q - 1, m.vars), c * BigInt::from(m.q));
                }
                Var::V(e) if m.vars.contains(e) => {
                    out.add_term(Monomial::new(m.q, m.vars.without(e)), c.clone());
                }
                _ => {}
            }
        }
        out
    }

    /// Substitute the assigned variables, keeping the others symbolic.
    pub fn substitute(&self, assignment: &Assignment) -> MultiPolyZ {
        let q_val = assignment.get(Var::Q);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut vars = ElementSet::EMPTY;
            for e in m.vars.iter() {
                match assignment.get(Var::V(e)) {
                    Some(x) => coeff *= x,
                    None => vars = vars.with(e),
                }
            }
            let q = match q_val {
                Some(x) => {
                    coeff *= num_traits::pow(x.clone(), m.q as usize);
                    0
                }
                None => m.q,
            };
            out.add_term(Monomial::new(q, vars), coeff);
        }
        out
    }

    /// View as a polynomial in `q` alone; fails if any `v_e` remains.
    pub fn to_univariate_q(&self) -> Result<UniPolyZ, PolyError> {
        if let Some(e) = self.support().first() {
            return Err(PolyError::Arity(format!("v_{e} is unassigned")));
        }
        let deg = self.q_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![BigInt::zero(); deg];
        for (m, c) in &self.terms {
            coeffs[m.q as usize] += c;
        }
        Ok(UniPolyZ::new(coeffs))
    }

    /// Substitute and collect into a polynomial in `q`.
    pub fn specialize(&self, assignment: &Assignment) -> Result<UniPolyZ, PolyError> {
        self.substitute(assignment).to_univariate_q()
    }

    /// Value at `q` and `v` (missing `v` entries count as zero).
    pub fn eval(&self, q: &BigInt, v: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.vars.iter().fold(
                    c * num_traits::pow(q.clone(), m.q as usize),
                    |acc, e| acc * v.get(e).cloned().unwrap_or_default(),
                )
            })
            .sum()
    }

    /// Coefficient of `q^d`, as a polynomial in the `v_e`.
    pub fn q_coefficient(&self, d: u32) -> MultiPolyZ {
        MultiPolyZ {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.q == d)
                .map(|(m, c)| (Monomial::new(0, m.vars), c.clone()))
                .collect(),
        }
    }

    /// Rename `v_e` to `v_{labels[e]}`.
    pub fn relabel(&self, labels: &[usize]) -> MultiPolyZ {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let vars = m.vars.iter().map(|e| labels[e]).collect();
            out.add_term(Monomial::new(m.q, vars), c.clone());
        }
        out
    }

    /// Substitute `q ← q_image` and every `v_e ← v_image`.
    pub fn substitute_bivariate(&self, q_image: &BiPolyZ, v_image: &BiPolyZ) -> BiPolyZ {
        let mut grouped: BTreeMap<(u32, usize), BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            *grouped.entry((m.q, m.vars.len())).or_default() += c;
        }
        let max_q = grouped.keys().map(|k| k.0).max().unwrap_or(0);
        let max_v = grouped.keys().map(|k| k.1).max().unwrap_or(0);
        let q_pows = powers(q_image, max_q as usize);
        let v_pows = powers(v_image, max_v);
        grouped
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .fold(BiPolyZ::zero(), |acc, ((a, b), c)| {
                &acc + &(&q_pows[a as usize] * &v_pows[b]).scale(&c)
            })
    }

    fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms
            .iter()
            .max_by_key(|(m, _)| m.lex_key())
            .map(|(m, c)| (*m, c))
    }

    /// Exact quotient, by division with respect to a lexicographic order.
    pub fn div_exact(&self, divisor: &MultiPolyZ) -> Result<MultiPolyZ, PolyError> {
        let Some((lead_m, lead_c)) = divisor.leading() else {
            return Err(PolyError::DivisionByZero);
        };
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quot = MultiPolyZ::zero();
        while let Some((m, c)) = rem.leading() {
            if m.q < lead_m.q || !lead_m.vars.is_subset(m.vars) {
                return Err(PolyError::InexactDivision);
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let term = MultiPolyZ::term(qc, m.q - lead_m.q, m.vars - lead_m.vars);
            let sub = term
                .checked_mul(divisor)
                .map_err(|_| PolyError::InexactDivision)?;
            rem = &rem - &sub;
            quot = &quot + &term;
        }
        Ok(quot)
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            match m.q {
                0 => {}
                1 => factors.push("q".to_string()),
                d => factors.push(format!("q^{d}")),
            }
            factors.extend(m.vars.iter().map(|e| format!("v{e}")));
            let body = if factors.is_empty() {
                c.abs().to_string()
            } else if c.abs().is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", c.abs(), factors.join("*"))
            };
            match (k, c.is_negative()) {
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

fn powers(base: &BiPolyZ, max: usize) -> Vec<BiPolyZ> {
    let mut out = vec![BiPolyZ::one()];
    for i in 0..max {
        let next = &out[i] * base;
        out.push(next);
    }
    out
}

impl fmt::Debug for MultiPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl fmt::Display for MultiPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl Add for &MultiPolyZ {
    type Output = MultiPolyZ;
    fn add(self, rhs: &MultiPolyZ) -> MultiPolyZ {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPolyZ {
    type Output = MultiPolyZ;
    fn sub(self, rhs: &MultiPolyZ) -> MultiPolyZ {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &MultiPolyZ {
    type Output = MultiPolyZ;
    fn neg(self) -> MultiPolyZ {
        self.scale(&BigInt::from(-1))
    }
}

forward_binop!(MultiPolyZ, Add, add);
forward_binop!(MultiPolyZ, Sub, sub);

/// JSON number for an arbitrary-precision integer.
pub(crate) fn json_integer(c: &BigInt) -> serde_json::Number {
    c.to_string()
        .parse()
        .expect("decimal integers are valid JSON numbers")
}

struct JsonTerm<'a>(&'a Monomial, &'a BigInt);

impl Serialize for JsonTerm<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 3)?;
        st.serialize_field("q", &self.0.q)?;
        st.serialize_field("vars", &self.0.vars.iter().collect::<Vec<_>>())?;
        st.serialize_field("coeff", &json_integer(self.1))?;
        st.end()
    }
}

/// Serialized as a list of `{"q", "vars", "coeff"}` terms in canonical order.
impl Serialize for MultiPolyZ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&JsonTerm(m, c))?;
        }
        seq.end()
    }
}

/// Serialized as the coefficient array, lowest degree first.
impl Serialize for UniPolyZ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs().iter().map(json_integer))
    }
}

/// Serialized as rows of coefficients: row `i`, column `j` is `x^i y^j`.
impl Serialize for BiPolyZ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(
            self.coeffs()
                .iter()
                .map(|row| row.iter().map(json_integer).collect::<Vec<_>>()),
        )
    }
}

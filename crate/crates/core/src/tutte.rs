//! Multivariate and bivariate Tutte polynomials.
//!
//! `Ẑ_M(q, v) = Σ_{A⊆E} q^{r(M) − r_M(A)} ∏_{e∈A} v_e` is computed either by
//! the state sum over all subsets or by deletion–contraction, and returned
//! as a [`ZHat`] wrapping a [`RankProfile`]. The bivariate polynomial is the
//! corank–nullity state sum
//! `T_M(x, y) = Σ_A (x−1)^{r(M) − r_M(A)} (y−1)^{|A| − r_M(A)}`, related to
//! `Ẑ_M` by `q ← (x−1)(y−1)`, `v_e ← y−1` and the prefactor `(y−1)^{−r(M)}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::matroid::{ElementSet, ElementStatus, Matroid, MatroidError, RankTable};
use crate::poly::{
    elementary_symmetric_poly, Assignment, BiPolyZ, MultiPolyZ, PolyError, RankProfile, UniPolyZ,
    Var,
};

/// Largest ground set accepted by [`check_identities`].
pub const MAX_IDENTITY_GROUND_SIZE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TutteError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("ground set of size {size} exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("polynomial is not monic in q: the matroid has loops")]
    HasLoops,
    #[error("a circuit needs at least 2 elements, got {0}")]
    CircuitTooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    StateSum,
    DeletionContraction,
}

/// `Ẑ_M` of a specific matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZHat {
    profile: RankProfile,
    source: String,
}

impl ZHat {
    pub fn new(profile: RankProfile, source: impl Into<String>) -> Self {
        ZHat {
            profile,
            source: source.into(),
        }
    }

    pub fn profile(&self) -> &RankProfile {
        &self.profile
    }

    /// Descriptor of the matroid this polynomial came from.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn rank(&self) -> usize {
        self.profile.rank()
    }

    pub fn ground_size(&self) -> usize {
        self.profile.ground_size()
    }

    pub fn is_monic(&self) -> bool {
        self.profile.is_monic()
    }

    pub fn to_multi(&self) -> MultiPolyZ {
        self.profile.to_multi()
    }

    /// Same polynomial, regardless of where it came from.
    pub fn same_polynomial(&self, other: &ZHat) -> bool {
        self.profile == other.profile
    }
}

pub fn zhat(m: &Matroid, strategy: Strategy) -> Result<ZHat, TutteError> {
    match strategy {
        Strategy::StateSum => zhat_state_sum(m),
        Strategy::DeletionContraction => Ok(zhat_deletion_contraction(m, true)?.0),
    }
}

fn zhat_state_sum(m: &Matroid) -> Result<ZHat, TutteError> {
    let table = m.rank_table();
    let r = table.full_rank();
    let exps = ElementSet::full(m.ground_size())
        .subsets()
        .map(|a| (r - table.get(a)) as u8)
        .collect();
    Ok(ZHat::new(
        RankProfile::from_exponents(m.ground_size(), exps)?,
        m.descriptor(),
    ))
}

/// Counters from one deletion–contraction run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RecursionStats {
    pub calls: usize,
    pub cache_hits: usize,
}

/// Deletion–contraction on the lowest-index live element, with an optional
/// memo keyed on the (deleted, contracted) pair. Loops and coloops use the
/// product rules `(1 + v_e) Ẑ_{M\e}` and `(q + v_e) Ẑ_{M/e}`; every other
/// element uses `Ẑ_M = Ẑ_{M\e} + v_e Ẑ_{M/e}`.
pub fn zhat_deletion_contraction(
    m: &Matroid,
    memoize: bool,
) -> Result<(ZHat, RecursionStats), TutteError> {
    let table = m.rank_table();
    let mut run = Recursion {
        table: &table,
        full: m.ground_set(),
        memo: memoize.then(HashMap::new),
        stats: RecursionStats::default(),
    };
    let poly = run.solve(ElementSet::EMPTY, ElementSet::EMPTY)?;
    let stats = run.stats;
    let profile = RankProfile::from_multi(&poly, m.ground_size())?;
    Ok((ZHat::new(profile, m.descriptor()), stats))
}

struct Recursion<'a> {
    table: &'a RankTable,
    full: ElementSet,
    memo: Option<HashMap<(ElementSet, ElementSet), MultiPolyZ>>,
    stats: RecursionStats,
}

impl Recursion<'_> {
    fn solve(
        &mut self,
        deleted: ElementSet,
        contracted: ElementSet,
    ) -> Result<MultiPolyZ, PolyError> {
        if let Some(hit) = self.memo.as_ref().and_then(|m| m.get(&(deleted, contracted))) {
            self.stats.cache_hits += 1;
            return Ok(hit.clone());
        }
        self.stats.calls += 1;
        let live = self.full - deleted - contracted;
        let result = match live.first() {
            None => MultiPolyZ::one(),
            Some(e) => {
                let t = self.table;
                let is_loop = t.get(contracted.with(e)) == t.get(contracted);
                let is_coloop =
                    t.get(live.without(e) | contracted) + 1 == t.get(live | contracted);
                let v = MultiPolyZ::v(e);
                if is_loop {
                    let rest = self.solve(deleted.with(e), contracted)?;
                    (&MultiPolyZ::one() + &v).checked_mul(&rest)?
                } else if is_coloop {
                    let rest = self.solve(deleted, contracted.with(e))?;
                    (&MultiPolyZ::q() + &v).checked_mul(&rest)?
                } else {
                    let del = self.solve(deleted.with(e), contracted)?;
                    let con = self.solve(deleted, contracted.with(e))?;
                    &del + &v.checked_mul(&con)?
                }
            }
        };
        if let Some(memo) = self.memo.as_mut() {
            memo.insert((deleted, contracted), result.clone());
        }
        Ok(result)
    }
}

/// `T_M(x, y)` by the corank–nullity state sum.
pub fn tutte_bivariate(m: &Matroid) -> Result<BiPolyZ, TutteError> {
    let table = m.rank_table();
    let n = m.ground_size();
    let r = table.full_rank();
    // counts[i][j]: subsets with corank i and nullity j
    let mut counts = vec![vec![0u64; n + 1]; r + 1];
    for a in ElementSet::full(n).subsets() {
        let ra = table.get(a);
        counts[r - ra][a.len() - ra] += 1;
    }
    let one = BiPolyZ::one();
    let xm1 = &BiPolyZ::x() - &one;
    let ym1 = &BiPolyZ::y() - &one;
    let x_pows: Vec<BiPolyZ> = (0..=r as u32).map(|i| xm1.pow(i)).collect();
    let y_pows: Vec<BiPolyZ> = (0..=n as u32).map(|j| ym1.pow(j)).collect();
    let mut t = BiPolyZ::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c > 0 {
                t = &t + &(&x_pows[i] * &y_pows[j]).scale(&BigInt::from(c));
            }
        }
    }
    Ok(t)
}

/// `Ẑ` of the circuit on `m` elements, written with elementary symmetric
/// polynomials: `q^n + σ_1 q^{n−1} + … + σ_{n−1} q + (σ_n + σ_{n+1})` with
/// `n = m − 1`.
pub fn circuit_closed_form(m: usize) -> Result<ZHat, TutteError> {
    if m < 2 {
        return Err(TutteError::CircuitTooSmall(m));
    }
    let n = m - 1;
    let mut poly = elementary_symmetric_poly(m, m)?;
    for i in 0..=n {
        poly = &poly + &elementary_symmetric_poly(i, m)?.mul_q((n - i) as u32);
    }
    Ok(ZHat::new(
        RankProfile::from_multi(&poly, m)?,
        format!("circuit({m})"),
    ))
}

/// `a_0, …, a_{n−1}` with `Ẑ_M = q^n + a_{n−1} q^{n−1} + … + a_0`.
pub fn coefficients_in_q(z: &ZHat) -> Result<Vec<MultiPolyZ>, TutteError> {
    if !z.is_monic() {
        return Err(TutteError::HasLoops);
    }
    let poly = z.to_multi();
    Ok((0..z.rank() as u32).map(|d| poly.q_coefficient(d)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Fail,
    /// The hypothesis of the identity never applies to this matroid.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub outcome: CheckOutcome,
    /// Number of instances checked (elements, circuits, …).
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub input: String,
    pub ground_size: usize,
    pub rank: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != CheckOutcome::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct CheckBuilder {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl CheckBuilder {
    fn new(name: &'static str) -> Self {
        CheckBuilder {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self) -> IdentityCheck {
        let outcome = match (&self.failure, self.cases) {
            (Some(_), _) => CheckOutcome::Fail,
            (None, 0) => CheckOutcome::Vacuous,
            (None, _) => CheckOutcome::Pass,
        };
        IdentityCheck {
            name: self.name,
            outcome,
            cases: self.cases,
            detail: self.failure,
        }
    }
}

/// Symbolic polynomial of a minor of `m`, with its variables renamed back
/// to `m`'s element labels.
fn minor_poly(
    m: &Matroid,
    delete: ElementSet,
    contract: ElementSet,
) -> Result<(Matroid, MultiPolyZ), TutteError> {
    let minor = m.minor(delete, contract)?;
    let removed = delete | contract;
    let labels: Vec<usize> = (0..m.ground_size()).filter(|&i| !removed.contains(i)).collect();
    let poly = zhat(&minor, Strategy::StateSum)?.to_multi().relabel(&labels);
    Ok((minor, poly))
}

/// Checks every polynomial identity relating `Ẑ_M`, its minors and `T_M`:
///
/// 1. state sum and deletion–contraction agree;
/// 2. `Ẑ_M = Ẑ_{M\e} + v_e Ẑ_{M/e}` for every element that is neither a
///    loop nor a coloop;
/// 3. `Ẑ_M = (1 + v_e) Ẑ_{M\e}` for loops, `(q + v_e) Ẑ_{M/e}` for coloops;
/// 4. `Ẑ_M(1, v) = ∏ (1 + v_e)`;
/// 5. `(y−1)^{r(M)} T_M(x, y) = Ẑ_M((x−1)(y−1), y−1)`;
/// 6. `Ẑ_M = Ẑ_{M|A} Ẑ_{M|E\A}` across a separator `A`;
/// 7. `Ẑ_{M|C}` equals the circuit closed form for every circuit `C`;
/// 8. `r(M\e) = r(M)` and `r(M/e) = r(M) − 1` for the elements of (2);
/// 9. for connected `M`, `M\e` or `M/e` is connected for every `e`.
pub fn check_identities(m: &Matroid) -> Result<IdentityReport, TutteError> {
    let n = m.ground_size();
    if n > MAX_IDENTITY_GROUND_SIZE {
        return Err(TutteError::TooLarge {
            size: n,
            cap: MAX_IDENTITY_GROUND_SIZE,
        });
    }
    let r = m.full_rank();
    let state_sum = zhat(m, Strategy::StateSum)?;
    let z = state_sum.to_multi();
    let mut checks = Vec::new();

    let mut strategies = CheckBuilder::new("state_sum_vs_deletion_contraction");
    let (dc, _) = zhat_deletion_contraction(m, true)?;
    strategies.record(dc.same_polynomial(&state_sum), || {
        "deletion-contraction disagrees with the state sum".into()
    });
    checks.push(strategies.finish());

    let mut lemma = CheckBuilder::new("deletion_contraction_identity");
    let mut products = CheckBuilder::new("loop_coloop_products");
    let mut minor_ranks = CheckBuilder::new("minor_ranks");
    for e in 0..n {
        let single = ElementSet::singleton(e);
        let v = MultiPolyZ::v(e);
        match m.element_status(e)? {
            ElementStatus::Regular => {
                let (del, z_del) = minor_poly(m, single, ElementSet::EMPTY)?;
                let (con, z_con) = minor_poly(m, ElementSet::EMPTY, single)?;
                let rhs = &z_del + &v.checked_mul(&z_con)?;
                lemma.record(rhs == z, || format!("fails at element {e}"));
                minor_ranks.record(del.full_rank() == r && con.full_rank() + 1 == r, || {
                    format!("r(M\\e) = {}, r(M/e) = {} at element {e}", del.full_rank(), con.full_rank())
                });
            }
            ElementStatus::Loop => {
                let (_, z_del) = minor_poly(m, single, ElementSet::EMPTY)?;
                let rhs = (&MultiPolyZ::one() + &v).checked_mul(&z_del)?;
                products.record(rhs == z, || format!("loop rule fails at element {e}"));
            }
            ElementStatus::Coloop => {
                let (_, z_con) = minor_poly(m, ElementSet::EMPTY, single)?;
                let rhs = (&MultiPolyZ::q() + &v).checked_mul(&z_con)?;
                products.record(rhs == z, || format!("coloop rule fails at element {e}"));
            }
        }
    }
    checks.push(lemma.finish());
    checks.push(products.finish());

    let mut at_one = CheckBuilder::new("q_equals_one_product");
    let lhs = z.substitute(&Assignment::new().with(Var::Q, BigInt::one()));
    at_one.record(lhs == MultiPolyZ::product_one_plus_v(m.ground_set()), || {
        "Ẑ(1, v) differs from ∏(1 + v_e)".into()
    });
    checks.push(at_one.finish());

    let mut bivariate = CheckBuilder::new("bivariate_substitution");
    let one = BiPolyZ::one();
    let ym1 = &BiPolyZ::y() - &one;
    let q_image = &(&BiPolyZ::x() - &one) * &ym1;
    let lhs = &ym1.pow(r as u32) * &tutte_bivariate(m)?;
    let rhs = z.substitute_bivariate(&q_image, &ym1);
    bivariate.record(lhs == rhs, || format!("(y-1)^r T = {lhs}, specialised Ẑ = {rhs}"));
    checks.push(bivariate.finish());

    let mut direct_sum = CheckBuilder::new("direct_sum_product");
    if n >= 2 {
        if let Some(sep) = m.find_separator()? {
            let other = m.ground_set() - sep;
            let (_, z1) = minor_poly(m, other, ElementSet::EMPTY)?;
            let (_, z2) = minor_poly(m, sep, ElementSet::EMPTY)?;
            direct_sum.record(z1.checked_mul(&z2)? == z, || {
                format!("product over the separator {sep:?} differs")
            });
        }
    }
    checks.push(direct_sum.finish());

    let mut circuits = CheckBuilder::new("circuit_closed_form");
    for c in m.circuits().into_iter().filter(|c| c.len() >= 2) {
        let restricted = zhat(&m.restriction(c)?, Strategy::StateSum)?;
        let closed = circuit_closed_form(c.len())?;
        circuits.record(restricted.same_polynomial(&closed), || {
            format!("circuit {c:?} differs from the closed form")
        });
    }
    checks.push(circuits.finish());
    checks.push(minor_ranks.finish());

    let mut tutte_conn = CheckBuilder::new("tutte_connectivity");
    if n >= 2 && m.is_connected()? {
        for e in 0..n {
            let ok = m.delete(e)?.is_connected()? || m.contract(e)?.is_connected()?;
            tutte_conn.record(ok, || format!("both M\\{e} and M/{e} are disconnected"));
        }
    }
    checks.push(tutte_conn.finish());

    Ok(IdentityReport {
        input: m.descriptor(),
        ground_size: n,
        rank: r,
        checks,
    })
}

/// `Ẑ_M` specialised at integer values of the `v_e`.
pub fn specialize_zhat(z: &ZHat, values: &[BigInt]) -> Result<UniPolyZ, TutteError> {
    Ok(z.profile().specialize_v(values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::elementary_symmetric_poly as sigma;

    fn triangle() -> Matroid {
        Matroid::graphic(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn single_element() {
        let z = zhat(&Matroid::uniform(1, 1).unwrap(), Strategy::StateSum).unwrap();
        assert_eq!(z.to_multi(), &MultiPolyZ::q() + &MultiPolyZ::v(0));
    }

    #[test]
    fn triangle_matches_symmetric_form() {
        let expected = &(&sigma(2, 3).unwrap() + &sigma(3, 3).unwrap())
            + &(&sigma(1, 3).unwrap().mul_q(1) + &MultiPolyZ::q().mul_q(1));
        for strategy in [Strategy::StateSum, Strategy::DeletionContraction] {
            assert_eq!(zhat(&triangle(), strategy).unwrap().to_multi(), expected);
        }
    }

    #[test]
    fn rank_one_connected() {
        // q - 1 + ∏(v_e + 1)
        for size in 1..=4 {
            let z = zhat(&Matroid::uniform(1, size).unwrap(), Strategy::DeletionContraction)
                .unwrap()
                .to_multi();
            let expected = &(&MultiPolyZ::q() - &MultiPolyZ::one())
                + &MultiPolyZ::product_one_plus_v(ElementSet::full(size));
            assert_eq!(z, expected);
        }
    }

    #[test]
    fn bivariate_examples() {
        let t = tutte_bivariate(&triangle()).unwrap();
        assert_eq!(t, BiPolyZ::from_i64s(&[&[0, 1], &[1], &[1]]));
        let coloop = tutte_bivariate(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert_eq!(coloop, BiPolyZ::x());
        let lp = tutte_bivariate(&Matroid::uniform(0, 1).unwrap()).unwrap();
        assert_eq!(lp, BiPolyZ::y());
    }

    #[test]
    fn circuit_forms() {
        let two = circuit_closed_form(2).unwrap().to_multi();
        let expected = &MultiPolyZ::q()
            + &(&(&MultiPolyZ::v(0) + &MultiPolyZ::v(1))
                + &MultiPolyZ::v(0).checked_mul(&MultiPolyZ::v(1)).unwrap());
        assert_eq!(two, expected);
        for m in 2..=7 {
            let uniform = zhat(&Matroid::uniform(m - 1, m).unwrap(), Strategy::StateSum).unwrap();
            assert!(circuit_closed_form(m).unwrap().same_polynomial(&uniform), "m = {m}");
        }
        assert_eq!(circuit_closed_form(1).unwrap_err(), TutteError::CircuitTooSmall(1));
    }

    #[test]
    fn coefficient_slices() {
        let z = zhat(&triangle(), Strategy::StateSum).unwrap();
        let a = coefficients_in_q(&z).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a[1], sigma(1, 3).unwrap());
        assert_eq!(a[0], &sigma(2, 3).unwrap() + &sigma(3, 3).unwrap());

        let u11 = zhat(&Matroid::uniform(1, 1).unwrap(), Strategy::StateSum).unwrap();
        assert_eq!(coefficients_in_q(&u11).unwrap(), vec![MultiPolyZ::v(0)]);

        let u13 = zhat(&Matroid::uniform(1, 3).unwrap(), Strategy::StateSum).unwrap();
        let expected =
            &MultiPolyZ::product_one_plus_v(ElementSet::full(3)) - &MultiPolyZ::one();
        assert_eq!(coefficients_in_q(&u13).unwrap(), vec![expected]);

        let looped = Matroid::graphic(2, vec![(0, 0), (0, 1)]).unwrap();
        let zl = zhat(&looped, Strategy::StateSum).unwrap();
        assert_eq!(coefficients_in_q(&zl).unwrap_err(), TutteError::HasLoops);
    }

    #[test]
    fn memo_is_invisible() {
        let k4 = Matroid::graphic(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        let (with, _) = zhat_deletion_contraction(&k4, true).unwrap();
        let (without, stats) = zhat_deletion_contraction(&k4, false).unwrap();
        assert_eq!(with, without);
        assert_eq!(stats.cache_hits, 0);
    }

    #[test]
    fn identities_on_triangle() {
        let report = check_identities(&triangle()).unwrap();
        assert!(report.all_pass(), "{report:?}");
        for name in [
            "state_sum_vs_deletion_contraction",
            "deletion_contraction_identity",
            "q_equals_one_product",
            "bivariate_substitution",
            "circuit_closed_form",
            "minor_ranks",
            "tutte_connectivity",
        ] {
            assert_eq!(report.check(name).unwrap().outcome, CheckOutcome::Pass, "{name}");
        }
        assert_eq!(report.check("loop_coloop_products").unwrap().outcome, CheckOutcome::Vacuous);
        assert_eq!(report.check("direct_sum_product").unwrap().outcome, CheckOutcome::Vacuous);
    }

    #[test]
    fn identities_on_loop_and_bridge() {
        let g = Matroid::graphic(2, vec![(0, 0), (0, 1)]).unwrap();
        let report = check_identities(&g).unwrap();
        assert!(report.all_pass(), "{report:?}");
        let outcome = |name| report.check(name).unwrap().outcome;
        assert_eq!(outcome("loop_coloop_products"), CheckOutcome::Pass);
        assert_eq!(outcome("q_equals_one_product"), CheckOutcome::Pass);
        assert_eq!(outcome("bivariate_substitution"), CheckOutcome::Pass);
        assert_eq!(outcome("deletion_contraction_identity"), CheckOutcome::Vacuous);
    }

    #[test]
    fn direct_sum_of_coloops() {
        let u11 = Matroid::uniform(1, 1).unwrap();
        let sum = Matroid::direct_sum(&u11, &u11).unwrap();
        let z = zhat(&sum, Strategy::StateSum).unwrap().to_multi();
        let expected = (&MultiPolyZ::q() + &MultiPolyZ::v(0))
            .checked_mul(&(&MultiPolyZ::q() + &MultiPolyZ::v(1)))
            .unwrap();
        assert_eq!(z, expected);
        let report = check_identities(&sum).unwrap();
        assert_eq!(report.check("direct_sum_product").unwrap().outcome, CheckOutcome::Pass);
    }

    #[test]
    fn size_cap() {
        let big = Matroid::uniform(2, 17).unwrap();
        assert_eq!(
            check_identities(&big).unwrap_err(),
            TutteError::TooLarge { size: 17, cap: 16 }
        );
    }

    #[test]
    fn specialisation_example() {
        let z = zhat(&triangle(), Strategy::StateSum).unwrap();
        let vals: Vec<BigInt> = [1, 2, 3].into_iter().map(BigInt::from).collect();
        assert_eq!(specialize_zhat(&z, &vals).unwrap(), UniPolyZ::from_i64s(&[17, 6, 1]));
        // q ← (x−1)(y−1), v ← y−1 gives (y−1)^2 (x^2 + x + y)
        let one = BiPolyZ::one();
        let ym1 = &BiPolyZ::y() - &one;
        let q_image = &(&BiPolyZ::x() - &one) * &ym1;
        let spec = z.to_multi().substitute_bivariate(&q_image, &ym1);
        let t = BiPolyZ::from_i64s(&[&[0, 1], &[1], &[1]]);
        assert_eq!(spec, &ym1.pow(2) * &t);
    }
}

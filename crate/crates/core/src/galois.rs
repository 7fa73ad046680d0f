//! Galois groups by Frobenius cycle types.
//!
//! If `f` is monic over an integrally closed domain `R` and its image under a
//! ring map `R → k` into a field is separable, the Galois group of the image
//! embeds in the Galois group of `f` over the fraction field of `R`. Over a
//! finite field the image group is cyclic, generated by Frobenius, whose
//! cycle type is the list of irreducible factor degrees. Collecting enough
//! cycle types proves the group contains all of `S_n`:
//!
//! - a single part `n` is an `n`-cycle, so the group is transitive;
//! - a part `ℓ` prime with `n/2 < ℓ < n` powers to an `ℓ`-cycle, which makes
//!   a transitive group primitive;
//! - exactly one part `2` with every other part odd powers to a
//!   transposition, and a primitive group with a transposition is `S_n`.
//!
//! These certificates are one-sided: failing to find them is reported as
//! `Inconclusive`, never as a smaller group.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graphs::{self, SimpleGraph};
use crate::linalg::exact_rank;
use crate::matroid::{Matroid, MatroidError};
use crate::poly::{
    is_prime, primes_up_to, ExtensionField, FiniteField, PolyError, UniPolyZ, Var,
};
use crate::tutte::{coefficients_in_q, tutte_bivariate, zhat, Strategy, TutteError, ZHat};

pub const DEFAULT_PRIME_BOUND: u64 = 10_000;
pub const DEFAULT_MAX_SAMPLES: usize = 512;
/// Specializations tried before giving up on a squarefree one.
pub const SPECIALIZATION_ATTEMPTS: usize = 32;
/// Consecutive finite-field samples without a new witness before the
/// sampler moves to the next extension degree.
pub const STALE_SAMPLES_PER_FIELD: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is zero or constant")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("no squarefree specialization after {0} attempts")]
    Degenerate(usize),
    #[error("matroid is not connected")]
    NotConnected,
    #[error("matroid has loops")]
    HasLoops,
    #[error("y0 = 1 collapses the substitution v_e = y - 1")]
    InvalidY0,
    #[error(transparent)]
    Tutte(#[from] TutteError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Irreducible factor degrees of `f` over a finite field of characteristic
/// `prime`, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreePattern {
    pub prime: u64,
    pub parts: Vec<usize>,
}

impl DegreePattern {
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// A single part: the Frobenius is an `n`-cycle.
    pub fn is_full_cycle(&self) -> bool {
        self.parts.len() == 1
    }

    /// Exactly one part `2`, all others odd.
    pub fn yields_transposition(&self) -> bool {
        self.parts.iter().filter(|&&d| d == 2).count() == 1
            && self.parts.iter().all(|&d| d == 2 || d % 2 == 1)
    }

    /// The prime part `ℓ` with `n/2 < ℓ < n`, if any.
    pub fn long_prime_part(&self) -> Option<usize> {
        let n = self.degree();
        self.parts
            .iter()
            .copied()
            .find(|&l| 2 * l > n && l < n && is_prime(l as u64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternOutcome {
    Pattern(DegreePattern),
    /// `p` divides the leading coefficient or `f mod p` is not squarefree.
    Rejected,
}

pub fn degree_pattern_mod_p(f: &UniPolyZ, p: u64) -> Result<PatternOutcome, GaloisError> {
    if !is_prime(p) {
        return Err(GaloisError::NotPrime(p));
    }
    let lead = f.leading().ok_or(GaloisError::ConstantPolynomial)?;
    if lead.is_multiple_of(&BigInt::from(p)) {
        return Ok(PatternOutcome::Rejected);
    }
    let reduced = f.reduce_mod(p)?;
    match reduced.distinct_degree_parts() {
        Ok(parts) => Ok(PatternOutcome::Pattern(DegreePattern { prime: p, parts })),
        Err(PolyError::NotSquarefree) => Ok(PatternOutcome::Rejected),
        Err(e) => Err(e.into()),
    }
}

/// A degree pattern used as evidence, serialized as `[p, parts]`, or
/// `[p, parts, ℓ]` for a long prime cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pattern: DegreePattern,
    pub cycle: Option<usize>,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2 + self.cycle.is_some() as usize))?;
        seq.serialize_element(&self.pattern.prime)?;
        seq.serialize_element(&self.pattern.parts)?;
        if let Some(l) = self.cycle {
            seq.serialize_element(&l)?;
        }
        seq.end()
    }
}

/// Cycle-type evidence that a Galois group of degree `n` is `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnCertificate {
    #[serde(skip)]
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transitive: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transposition: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime_cycle: Option<Witness>,
}

impl SnCertificate {
    fn empty(degree: usize) -> Self {
        SnCertificate {
            degree,
            transitive: None,
            transposition: None,
            prime_cycle: None,
        }
    }

    /// Every present witness has its shape, and the witnesses required for
    /// this degree are present: the `n`-cycle for `n ≥ 2`, a transposition
    /// for `n ≥ 3`, a long prime cycle for `n ≥ 4`.
    pub fn is_valid(&self) -> bool {
        let n = self.degree;
        let fits = |w: &Witness| w.pattern.degree() == n;
        let transitive_ok = self.transitive.as_ref().map_or(n < 2, |w| {
            fits(w) && w.pattern.is_full_cycle() && w.cycle.is_none()
        });
        let transposition_ok = self.transposition.as_ref().map_or(n < 3, |w| {
            fits(w) && w.pattern.yields_transposition() && w.cycle.is_none()
        });
        let prime_cycle_ok = self.prime_cycle.as_ref().map_or(n < 4, |w| {
            fits(w)
                && w.cycle.is_some_and(|l| {
                    w.pattern.parts.contains(&l) && 2 * l > n && l < n && is_prime(l as u64)
                })
        });
        transitive_ok && transposition_ok && prime_cycle_ok
    }
}

/// Accumulates witnesses from a stream of patterns.
#[derive(Debug, Clone)]
struct Collector {
    cert: SnCertificate,
}

impl Collector {
    fn new(degree: usize) -> Self {
        Collector {
            cert: SnCertificate::empty(degree),
        }
    }

    /// Records the first witness of each kind; returns whether anything new
    /// was recorded.
    fn offer(&mut self, pattern: &DegreePattern) -> bool {
        let n = self.cert.degree;
        let mut fresh = false;
        if self.cert.transitive.is_none() && pattern.is_full_cycle() {
            self.cert.transitive = Some(Witness {
                pattern: pattern.clone(),
                cycle: None,
            });
            fresh = true;
        }
        if n >= 3 && self.cert.transposition.is_none() && pattern.yields_transposition() {
            self.cert.transposition = Some(Witness {
                pattern: pattern.clone(),
                cycle: None,
            });
            fresh = true;
        }
        if n >= 4 && self.cert.prime_cycle.is_none() {
            if let Some(l) = pattern.long_prime_part() {
                self.cert.prime_cycle = Some(Witness {
                    pattern: pattern.clone(),
                    cycle: Some(l),
                });
                fresh = true;
            }
        }
        fresh
    }

    /// The `n`-cycle is always required: for `n = 1` it only records a
    /// prime where `f` has a good reduction.
    fn complete(&self) -> bool {
        let n = self.cert.degree;
        self.cert.transitive.is_some()
            && (n < 3 || self.cert.transposition.is_some())
            && (n < 4 || self.cert.prime_cycle.is_some())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    Sn(SnCertificate),
    Inconclusive { prime_bound: u64 },
}

impl Certification {
    pub fn certificate(&self) -> Option<&SnCertificate> {
        match self {
            Certification::Sn(c) => Some(c),
            Certification::Inconclusive { .. } => None,
        }
    }
}

/// Scans primes up to `prime_bound` for a certificate that the Galois group
/// of `f` over ℚ is the full symmetric group.
pub fn certify_sn(f: &UniPolyZ, prime_bound: u64) -> Result<Certification, GaloisError> {
    let n = match f.degree() {
        None | Some(0) => return Err(GaloisError::ConstantPolynomial),
        Some(n) => n,
    };
    if !f.is_squarefree()? {
        return Err(GaloisError::NotSquarefree);
    }
    let mut collector = Collector::new(n);
    for p in primes_up_to(prime_bound) {
        if let PatternOutcome::Pattern(pattern) = degree_pattern_mod_p(f, p)? {
            collector.offer(&pattern);
            if collector.complete() {
                return Ok(Certification::Sn(collector.cert));
            }
        }
    }
    Ok(Certification::Inconclusive { prime_bound })
}

/// Seed for one input, derived from the global seed and a canonical key so
/// that results do not depend on scheduling.
pub fn derive_seed(global: u64, key: &str) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(global.to_le_bytes());
    hasher.update(key.as_bytes());
    let digest = hasher.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    pub assignment: Vec<BigInt>,
    pub poly: UniPolyZ,
}

/// `Ẑ_M(q, v)` at `v = values`, accepted only if squarefree over ℚ.
pub fn specialize_at(z: &ZHat, values: &[BigInt]) -> Result<UniPolyZ, GaloisError> {
    let f = z.profile().specialize_v(values)?;
    if f.is_squarefree()? {
        Ok(f)
    } else {
        Err(GaloisError::NotSquarefree)
    }
}

/// Squarefree specializations of `Ẑ_M` at distinct `v_e ∈ [1, 10|E|]`,
/// drawn from a seeded stream. Gives up after [`SPECIALIZATION_ATTEMPTS`]
/// draws, squarefree or not.
struct Specializations<'a> {
    z: &'a ZHat,
    rng: ChaCha8Rng,
    draws: usize,
}

impl<'a> Specializations<'a> {
    fn new(z: &'a ZHat, seed: u64) -> Result<Self, GaloisError> {
        if !z.is_monic() {
            return Err(GaloisError::HasLoops);
        }
        Ok(Specializations {
            z,
            rng: ChaCha8Rng::seed_from_u64(seed),
            draws: 0,
        })
    }
}

impl Iterator for Specializations<'_> {
    type Item = Result<Specialization, GaloisError>;

    fn next(&mut self) -> Option<Self::Item> {
        let size = self.z.ground_size();
        while self.draws < SPECIALIZATION_ATTEMPTS {
            self.draws += 1;
            let assignment: Vec<BigInt> = index::sample(&mut self.rng, 10 * size, size)
                .into_iter()
                .map(|i| BigInt::from(i + 1))
                .collect();
            match specialize_at(self.z, &assignment) {
                Ok(poly) => return Some(Ok(Specialization { assignment, poly })),
                Err(GaloisError::NotSquarefree) => continue,
                Err(e) => return Some(Err(e)),
            }
        }
        None
    }
}

/// The first squarefree specialization from the stream seeded by `seed`.
pub fn specialize_for_verification(z: &ZHat, seed: u64) -> Result<Specialization, GaloisError> {
    Specializations::new(z, seed)?
        .next()
        .unwrap_or(Err(GaloisError::Degenerate(SPECIALIZATION_ATTEMPTS)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Sn,
    Inconclusive,
    NotConnected,
    Degenerate,
}

/// Outcome of one verification run, serialized as one NDJSON line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub input: String,
    /// Vertex count for graphs, ground set size for matroids.
    pub n: usize,
    /// Degree of the polynomial, `r(M)`.
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y0: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    pub irreducible_witness_prime: Option<u64>,
    pub certificate: Option<SnCertificate>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime_bound: Option<u64>,
    /// Specializations drawn, including the one reported.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attempts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    /// Field over which each finite-field witness was observed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_fields: Option<BTreeMap<&'static str, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inference: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    fn new(input: String, n: usize, rank: usize, status: Status) -> Self {
        VerificationReport {
            input,
            n,
            rank,
            assignment: None,
            y0: None,
            characteristic: None,
            polynomial: None,
            irreducible_witness_prime: None,
            certificate: None,
            status,
            prime_bound: None,
            attempts: None,
            samples: None,
            witness_fields: None,
            inference: None,
            wall_time_ms: None,
        }
    }

    fn record(&mut self, outcome: Certification, base: &str) {
        match outcome {
            Certification::Sn(cert) => {
                self.irreducible_witness_prime =
                    cert.transitive.as_ref().map(|w| w.pattern.prime);
                self.inference = Some(format!(
                    "specialized group S_{} embeds in the generic group over {base}, \
                     which lies in S_{}; hence equality",
                    cert.degree, cert.degree
                ));
                self.certificate = Some(cert);
                self.status = Status::Sn;
            }
            Certification::Inconclusive { prime_bound } => {
                self.prime_bound = Some(prime_bound);
                self.status = Status::Inconclusive;
            }
        }
    }
}

fn small_int(c: &BigInt) -> i64 {
    i64::try_from(c).expect("specialization values are small")
}

fn connected(m: &Matroid) -> Result<bool, GaloisError> {
    Ok(m.ground_size() > 0 && m.is_connected()?)
}

/// Galois group of `Ẑ_M` over `ℚ(v)`, certified at an integer
/// specialization. Specializations are drawn until one yields a
/// certificate, at most [`SPECIALIZATION_ATTEMPTS`] times; the report shows
/// the last one tried.
pub fn verify_theorem_main(
    m: &Matroid,
    seed: u64,
    prime_bound: u64,
) -> Result<VerificationReport, GaloisError> {
    let key = m.descriptor();
    let mut report = VerificationReport::new(key.clone(), m.ground_size(), m.full_rank(), Status::NotConnected);
    if !connected(m)? {
        return Ok(report);
    }
    let z = zhat(m, Strategy::StateSum)?;
    let mut stream = Specializations::new(&z, derive_seed(seed, &key))?;
    let mut last = None;
    for spec in stream.by_ref() {
        let spec = spec?;
        let outcome = certify_sn(&spec.poly, prime_bound)?;
        let done = matches!(outcome, Certification::Sn(_));
        last = Some((spec, outcome));
        if done {
            break;
        }
    }
    report.attempts = Some(stream.draws);
    match last {
        None => report.status = Status::Degenerate,
        Some((spec, outcome)) => {
            report.assignment = Some(spec.assignment.iter().map(small_int).collect());
            report.polynomial = Some(spec.poly.display_in("q"));
            report.record(outcome, "Q(v)");
        }
    }
    Ok(report)
}

/// Galois group of `Ẑ_M` over `F_p(v)`, from the Frobenius cycle types of
/// many specializations `v ↦ F_{p^k}`. Each squarefree sample embeds its
/// cyclic group in the generic group, so witnesses may be pooled. Sampling
/// starts over `F_p` and moves to `F_{p^{k+1}}` after
/// [`STALE_SAMPLES_PER_FIELD`] samples without a new witness.
pub fn verify_theorem_mod_p(
    m: &Matroid,
    p: u64,
    seed: u64,
    max_samples: usize,
) -> Result<VerificationReport, GaloisError> {
    if !is_prime(p) {
        return Err(GaloisError::NotPrime(p));
    }
    let key = m.descriptor();
    let mut report = VerificationReport::new(key.clone(), m.ground_size(), m.full_rank(), Status::NotConnected);
    report.characteristic = Some(p);
    if !connected(m)? {
        return Ok(report);
    }
    let z = zhat(m, Strategy::StateSum)?;
    if !z.is_monic() {
        return Err(GaloisError::HasLoops);
    }
    let size = m.ground_size();
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &format!("{key}@{p}")));
    let mut collector = Collector::new(z.rank());
    let mut fields: BTreeMap<&'static str, String> = BTreeMap::new();
    let mut k = 1u32;
    let mut field = ExtensionField::new(p, k)?;
    let mut stale = 0;
    let mut used = 0;
    while used < max_samples && !collector.complete() {
        used += 1;
        let order = field.order();
        let indices: Vec<u64> = if order >= size as u64 {
            index::sample(&mut rng, order as usize, size)
                .into_iter()
                .map(|i| i as u64)
                .collect()
        } else {
            (0..size).map(|_| rng.gen_range(0..order)).collect()
        };
        let values: Vec<_> = indices.iter().map(|&i| field.element(i)).collect();
        let f = z.profile().specialize_v_in(&field, &values)?;
        let fresh = match f.distinct_degree_parts() {
            Ok(parts) => {
                let before = collector.cert.clone();
                let fresh = collector.offer(&DegreePattern { prime: p, parts });
                if fresh {
                    let name = format!("{field:?}");
                    for (role, had, has) in [
                        ("transitive", before.transitive.is_some(), collector.cert.transitive.is_some()),
                        ("transposition", before.transposition.is_some(), collector.cert.transposition.is_some()),
                        ("prime_cycle", before.prime_cycle.is_some(), collector.cert.prime_cycle.is_some()),
                    ] {
                        if has && !had {
                            fields.insert(role, name.clone());
                        }
                    }
                }
                fresh
            }
            Err(PolyError::NotSquarefree) => false,
            Err(e) => return Err(e.into()),
        };
        if fresh {
            stale = 0;
        } else {
            stale += 1;
            if stale >= STALE_SAMPLES_PER_FIELD {
                stale = 0;
                k += 1;
                field = ExtensionField::new(p, k)?;
            }
        }
    }
    report.samples = Some(used);
    if collector.complete() {
        report.witness_fields = Some(fields);
        report.record(Certification::Sn(collector.cert), &format!("F_{p}(v)"));
    } else {
        report.status = Status::Inconclusive;
    }
    Ok(report)
}

/// Certifies `T(x, y)` at `y = y0, y0 + 1, …` (skipping 1) until one
/// specialization yields a certificate. Values where `T(x, y)` is not
/// squarefree, or where the scan up to `prime_bound` finds no certificate,
/// are passed over; a specialization may have a smaller group than the
/// generic one without contradicting it.
fn certify_bivariate(
    mut report: VerificationReport,
    y0: i64,
    prime_bound: u64,
    mut at: impl FnMut(&BigInt) -> Result<UniPolyZ, GaloisError>,
) -> Result<VerificationReport, GaloisError> {
    if y0 == 1 {
        return Err(GaloisError::InvalidY0);
    }
    let mut y = y0;
    let mut last = None;
    let mut draws = 0;
    while draws < SPECIALIZATION_ATTEMPTS {
        draws += 1;
        let f = at(&BigInt::from(y))?;
        if f.is_squarefree()? {
            let outcome = certify_sn(&f, prime_bound)?;
            let done = matches!(outcome, Certification::Sn(_));
            last = Some((y, f, outcome));
            if done {
                break;
            }
        }
        y += if y + 1 == 1 { 2 } else { 1 };
    }
    report.attempts = Some(draws);
    match last {
        None => report.status = Status::Degenerate,
        Some((y, f, outcome)) => {
            report.y0 = Some(y);
            report.polynomial = Some(f.display_in("x"));
            report.record(outcome, "Q(y)");
        }
    }
    Ok(report)
}

/// Galois group of `T_M(x, y)` over `ℚ(y)`, certified at `y = y0`.
pub fn verify_conjecture_bivariate(
    m: &Matroid,
    y0: i64,
    prime_bound: u64,
) -> Result<VerificationReport, GaloisError> {
    if y0 == 1 {
        return Err(GaloisError::InvalidY0);
    }
    let report = VerificationReport::new(m.descriptor(), m.ground_size(), m.full_rank(), Status::NotConnected);
    if !connected(m)? {
        return Ok(report);
    }
    let t = tutte_bivariate(m)?;
    certify_bivariate(report, y0, prime_bound, |y| Ok(t.specialize_y(y)))
}

/// [`verify_conjecture_bivariate`] for the cycle matroid of `g`, evaluated
/// on vertex subsets so that graphs with more than 24 edges are accepted.
pub fn verify_conjecture_graph(
    g: &SimpleGraph,
    y0: i64,
    prime_bound: u64,
) -> Result<VerificationReport, GaloisError> {
    if y0 == 1 {
        return Err(GaloisError::InvalidY0);
    }
    let rank = g.vertex_count() - g.component_count();
    let report = VerificationReport::new(g.to_string(), g.vertex_count(), rank, Status::NotConnected);
    if !graphs::cycle_matroid_is_connected(g) {
        return Ok(report);
    }
    certify_bivariate(report, y0, prime_bound, |y| {
        Ok(graphs::tutte_at_y(g, y).expect("y differs from 1"))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobianReport {
    pub input: String,
    pub rank: usize,
    pub ground_size: usize,
    pub points: Vec<Vec<i64>>,
    /// Rank of the Jacobian of `(a_0, …, a_{n−1})` at each point.
    pub ranks: Vec<usize>,
    /// Some point reached rank `n`.
    pub independent: bool,
}

/// `∂a_i/∂v_e` at `point`, one row per coefficient `a_i` of `Ẑ_M`.
pub fn jacobian_at(z: &ZHat, point: &[BigInt]) -> Result<Vec<Vec<BigInt>>, GaloisError> {
    let coeffs = coefficients_in_q(z)?;
    let zero = BigInt::zero();
    Ok(coeffs
        .iter()
        .map(|a| {
            (0..z.ground_size())
                .map(|e| a.derivative(Var::V(e)).eval(&zero, point))
                .collect()
        })
        .collect())
}

/// Algebraic independence of the coefficients of `Ẑ_M` in `q` over ℚ via the
/// Jacobian criterion: rank `n` at one point implies generic rank `n`.
pub fn jacobian_independence_check(
    m: &Matroid,
    num_points: usize,
    seed: u64,
) -> Result<JacobianReport, GaloisError> {
    if !connected(m)? {
        return Err(GaloisError::NotConnected);
    }
    let key = m.descriptor();
    let z = zhat(m, Strategy::StateSum)?;
    let size = m.ground_size();
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &format!("{key}/jacobian")));
    let mut points = Vec::with_capacity(num_points);
    let mut ranks = Vec::with_capacity(num_points);
    for _ in 0..num_points {
        let point: Vec<i64> = (0..size).map(|_| rng.gen_range(1..=10 * size as i64)).collect();
        let big: Vec<BigInt> = point.iter().map(|&v| BigInt::from(v)).collect();
        ranks.push(exact_rank(&jacobian_at(&z, &big)?));
        points.push(point);
    }
    let rank = z.rank();
    Ok(JacobianReport {
        input: key,
        rank,
        ground_size: size,
        independent: ranks.iter().any(|&r| r == rank),
        points,
        ranks,
    })
}

/// Discriminant of a cubic `a x³ + b x² + c x + d`.
pub fn cubic_discriminant(f: &UniPolyZ) -> Option<BigInt> {
    if f.degree() != Some(3) {
        return None;
    }
    let [d, c, b, a] = [0, 1, 2, 3].map(|i| f.coeff(i));
    let disc = &b * &b * &c * &c - BigInt::from(4) * &a * &c * &c * &c
        - BigInt::from(4) * &b * &b * &b * &d
        - BigInt::from(27) * &a * &a * &d * &d
        + BigInt::from(18) * &a * &b * &c * &d;
    Some(disc)
}

/// Whether `n` is the square of an integer.
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

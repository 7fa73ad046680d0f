//! Matroids given by rank oracles.
//!
//! Elements are numbered densely `0..ground_size` and subsets are bitmasks
//! ([`ElementSet`]), so every ground set is capped at [`MAX_GROUND_SIZE`]
//! elements. Four concrete representations are supported (graphic, uniform,
//! linear over ℚ, explicit bases) plus minors and direct sums of them.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::exact_rank;

/// Largest supported ground set.
pub const MAX_GROUND_SIZE: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("element {element} is outside the ground set of size {ground_size}")]
    ElementOutOfRange { element: usize, ground_size: usize },
    #[error("ground set of size {0} exceeds the cap of {MAX_GROUND_SIZE} elements")]
    TooLarge(usize),
    #[error("deleted and contracted sets overlap")]
    OverlappingMinor,
    #[error("operation needs a nonempty ground set")]
    EmptyGroundSet,
    #[error("uniform matroid rank {rank} exceeds size {size}")]
    InvalidUniform { rank: usize, size: usize },
    #[error("edge ({0}, {1}) references a vertex outside the graph")]
    InvalidEdge(usize, usize),
    #[error("matrix rows have different lengths")]
    RaggedMatrix,
    #[error("invalid basis list: {0}")]
    InvalidBases(String),
}

/// A subset of the ground set, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, 1, …, n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n >= 32 {
            ElementSet(u32::MAX)
        } else {
            ElementSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < 32 && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !(1 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element plus one (0 for the empty set).
    pub fn span(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let mask = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur | !mask).wrapping_add(1) & mask)
            };
            Some(ElementSet(cur))
        })
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl Not for ElementSet {
    type Output = ElementSet;
    fn not(self) -> Self {
        ElementSet(!self.0)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, ElementSet::with)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Classification of a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ElementStatus {
    Loop,
    Coloop,
    Regular,
}

/// The concrete form behind a [`Matroid`].
#[derive(Debug, Clone)]
pub enum Representation {
    /// Cycle matroid of a (multi)graph; elements are the edges in order.
    /// An edge `(u, u)` is a loop.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Uniform {
        rank: usize,
        size: usize,
    },
    /// Column matroid of an integer matrix, over ℚ.
    Linear { rows: Vec<Vec<BigInt>> },
    Bases {
        size: usize,
        bases: Vec<ElementSet>,
    },
    /// `base \ deleted / contracted`, relabelled densely: element `i` of the
    /// minor is element `live[i]` of `base`. `base` is never itself a minor.
    Minor {
        base: Arc<Matroid>,
        deleted: ElementSet,
        contracted: ElementSet,
        live: Vec<usize>,
    },
    /// Elements of `second` are shifted past those of `first`.
    DirectSum {
        first: Arc<Matroid>,
        second: Arc<Matroid>,
    },
}

/// An immutable matroid with a rank oracle.
#[derive(Debug, Clone)]
pub struct Matroid {
    ground_size: usize,
    repr: Representation,
}

impl Matroid {
    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, MatroidError> {
        check_size(edges.len())?;
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(MatroidError::InvalidEdge(u, v));
        }
        Ok(Matroid {
            ground_size: edges.len(),
            repr: Representation::Graphic { vertices, edges },
        })
    }

    pub fn uniform(rank: usize, size: usize) -> Result<Self, MatroidError> {
        check_size(size)?;
        if rank > size {
            return Err(MatroidError::InvalidUniform { rank, size });
        }
        Ok(Matroid {
            ground_size: size,
            repr: Representation::Uniform { rank, size },
        })
    }

    /// Column matroid of `rows` (each inner vector is one row).
    pub fn linear(rows: Vec<Vec<BigInt>>) -> Result<Self, MatroidError> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(MatroidError::RaggedMatrix);
        }
        check_size(width)?;
        Ok(Matroid {
            ground_size: width,
            repr: Representation::Linear { rows },
        })
    }

    /// Matroid from an explicit basis list. The list must be nonempty and all
    /// bases must have the same cardinality; the basis-exchange axiom is not
    /// verified.
    pub fn from_bases(size: usize, bases: Vec<ElementSet>) -> Result<Self, MatroidError> {
        check_size(size)?;
        let Some(first) = bases.first() else {
            return Err(MatroidError::InvalidBases("no bases given".into()));
        };
        if bases.iter().any(|b| b.len() != first.len()) {
            return Err(MatroidError::InvalidBases(
                "bases have different cardinalities".into(),
            ));
        }
        if let Some(b) = bases.iter().find(|b| !b.is_subset(ElementSet::full(size))) {
            return Err(MatroidError::InvalidBases(format!(
                "basis {b:?} is not within the ground set"
            )));
        }
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        Ok(Matroid {
            ground_size: size,
            repr: Representation::Bases { size, bases },
        })
    }

    pub fn direct_sum(first: &Matroid, second: &Matroid) -> Result<Self, MatroidError> {
        let size = first.ground_size + second.ground_size;
        check_size(size)?;
        Ok(Matroid {
            ground_size: size,
            repr: Representation::DirectSum {
                first: Arc::new(first.clone()),
                second: Arc::new(second.clone()),
            },
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.ground_size)
    }

    pub fn representation(&self) -> &Representation {
        &self.repr
    }

    fn check_subset(&self, set: ElementSet) -> Result<(), MatroidError> {
        match (set - self.ground_set()).first() {
            Some(element) => Err(MatroidError::ElementOutOfRange {
                element,
                ground_size: self.ground_size,
            }),
            None => Ok(()),
        }
    }

    /// `r_M(A)`.
    pub fn rank(&self, set: ElementSet) -> Result<usize, MatroidError> {
        self.check_subset(set)?;
        Ok(self.rank_unchecked(set))
    }

    /// `r(M) = r_M(E)`.
    pub fn full_rank(&self) -> usize {
        self.rank_unchecked(self.ground_set())
    }

    pub(crate) fn rank_unchecked(&self, set: ElementSet) -> usize {
        match &self.repr {
            Representation::Graphic { vertices, edges } => graphic_rank(*vertices, edges, set),
            Representation::Uniform { rank, .. } => set.len().min(*rank),
            Representation::Linear { rows } => {
                let sub: Vec<Vec<BigInt>> = rows
                    .iter()
                    .map(|row| set.iter().map(|c| row[c].clone()).collect())
                    .collect();
                exact_rank(&sub)
            }
            Representation::Bases { bases, .. } => {
                bases.iter().map(|&b| (b & set).len()).max().unwrap_or(0)
            }
            Representation::Minor {
                base,
                contracted,
                live,
                ..
            } => {
                let lifted = lift(live, set);
                base.rank_unchecked(lifted | *contracted) - base.rank_unchecked(*contracted)
            }
            Representation::DirectSum { first, second } => {
                let n1 = first.ground_size;
                let low = set & ElementSet::full(n1);
                let high = ElementSet::from_bits(set.bits() >> n1);
                first.rank_unchecked(low) + second.rank_unchecked(high)
            }
        }
    }

    /// Ranks of all `2^|E|` subsets, indexed by bitmask.
    pub fn rank_table(&self) -> RankTable {
        let n = self.ground_size;
        let ranks: Vec<u8> = match &self.repr {
            Representation::Minor {
                base,
                contracted,
                live,
                ..
            } => {
                let base_table = base.rank_table();
                let offset = base_table.get(*contracted);
                let mut lifted = vec![0u32; 1 << n];
                let mut out = vec![0u8; 1 << n];
                out[0] = 0;
                for a in 1..(1usize << n) {
                    let low = a.trailing_zeros() as usize;
                    lifted[a] = lifted[a & (a - 1)] | 1 << live[low];
                    let r = base_table.get(ElementSet(lifted[a]) | *contracted) - offset;
                    out[a] = r as u8;
                }
                out
            }
            Representation::DirectSum { first, second } => {
                let t1 = first.rank_table();
                let t2 = second.rank_table();
                let n1 = first.ground_size;
                (0..(1u32 << n))
                    .map(|a| {
                        (t1.get(ElementSet(a & ((1 << n1) - 1))) + t2.get(ElementSet(a >> n1)))
                            as u8
                    })
                    .collect()
            }
            _ => (0..(1u32 << n))
                .map(|a| self.rank_unchecked(ElementSet(a)) as u8)
                .collect(),
        };
        RankTable {
            ground_size: n,
            ranks,
        }
    }

    /// `M \ delete / contract`, with the surviving elements relabelled
    /// `0..k` in increasing order. Minors of minors flatten onto the
    /// original base matroid.
    pub fn minor(&self, delete: ElementSet, contract: ElementSet) -> Result<Matroid, MatroidError> {
        self.check_subset(delete)?;
        self.check_subset(contract)?;
        if !delete.is_disjoint(contract) {
            return Err(MatroidError::OverlappingMinor);
        }
        let (base, base_deleted, base_contracted, base_live) = match &self.repr {
            Representation::Minor {
                base,
                deleted,
                contracted,
                live,
            } => (
                Arc::clone(base),
                *deleted | lift(live, delete),
                *contracted | lift(live, contract),
                live.clone(),
            ),
            _ => (
                Arc::new(self.clone()),
                delete,
                contract,
                (0..self.ground_size).collect(),
            ),
        };
        let removed = delete | contract;
        let live: Vec<usize> = (0..self.ground_size)
            .filter(|&i| !removed.contains(i))
            .map(|i| base_live[i])
            .collect();
        Ok(Matroid {
            ground_size: live.len(),
            repr: Representation::Minor {
                base,
                deleted: base_deleted,
                contracted: base_contracted,
                live,
            },
        })
    }

    /// `M | A`: delete everything outside `set`.
    pub fn restriction(&self, set: ElementSet) -> Result<Matroid, MatroidError> {
        self.minor(self.ground_set() - set, ElementSet::EMPTY)
    }

    pub fn delete(&self, e: usize) -> Result<Matroid, MatroidError> {
        self.minor(ElementSet::singleton(e), ElementSet::EMPTY)
    }

    pub fn contract(&self, e: usize) -> Result<Matroid, MatroidError> {
        self.minor(ElementSet::EMPTY, ElementSet::singleton(e))
    }

    /// Labels (in this matroid's numbering) of a minor's elements, as
    /// positions in the base matroid. Identity for non-minors.
    pub fn base_labels(&self) -> Vec<usize> {
        match &self.repr {
            Representation::Minor { live, .. } => live.clone(),
            _ => (0..self.ground_size).collect(),
        }
    }

    pub fn element_status(&self, e: usize) -> Result<ElementStatus, MatroidError> {
        self.check_subset(ElementSet::singleton(e))?;
        if self.rank_unchecked(ElementSet::singleton(e)) == 0 {
            return Ok(ElementStatus::Loop);
        }
        let full = self.ground_set();
        if self.rank_unchecked(full.without(e)) + 1 == self.rank_unchecked(full) {
            Ok(ElementStatus::Coloop)
        } else {
            Ok(ElementStatus::Regular)
        }
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.ground_size).all(|e| self.rank_unchecked(ElementSet::singleton(e)) > 0)
    }

    /// A proper nonempty separator `A` (with `r(A) + r(E\A) = r(E)`) that
    /// contains element 0, or `None` when there is none.
    pub fn find_separator(&self) -> Result<Option<ElementSet>, MatroidError> {
        if self.ground_size == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        let table = self.rank_table();
        Ok(separator_in(&table))
    }

    /// Matroid connectivity. Rank-0 matroids are never connected; a single
    /// element is connected iff it is not a loop.
    pub fn is_connected(&self) -> Result<bool, MatroidError> {
        if self.ground_size == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        let table = self.rank_table();
        Ok(table.get(self.ground_set()) > 0 && separator_in(&table).is_none())
    }

    /// All circuits, sorted by size and then by bitmask.
    pub fn circuits(&self) -> Vec<ElementSet> {
        circuits_in(&self.rank_table())
    }

    /// Stable textual key describing the matroid.
    pub fn descriptor(&self) -> String {
        match &self.repr {
            Representation::Graphic { vertices, edges } => {
                let es: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                format!("graphic({vertices};{})", es.join(","))
            }
            Representation::Uniform { rank, size } => format!("uniform({rank},{size})"),
            Representation::Linear { rows } => {
                let rs: Vec<String> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(ToString::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                format!("linear([{}])", rs.join(";"))
            }
            Representation::Bases { size, bases } => {
                let bs: Vec<String> = bases.iter().map(|b| format!("{:x}", b.bits())).collect();
                format!("bases({size};{})", bs.join(","))
            }
            Representation::Minor {
                base,
                deleted,
                contracted,
                ..
            } => format!(
                "minor({};del={:x};con={:x})",
                base.descriptor(),
                deleted.bits(),
                contracted.bits()
            ),
            Representation::DirectSum { first, second } => {
                format!("sum({},{})", first.descriptor(), second.descriptor())
            }
        }
    }
}

fn check_size(n: usize) -> Result<(), MatroidError> {
    if n > MAX_GROUND_SIZE {
        Err(MatroidError::TooLarge(n))
    } else {
        Ok(())
    }
}

fn lift(live: &[usize], set: ElementSet) -> ElementSet {
    set.iter().map(|i| live[i]).collect()
}

fn graphic_rank(vertices: usize, edges: &[(usize, usize)], set: ElementSet) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut merges = 0;
    for e in set.iter() {
        let (u, v) = edges[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            merges += 1;
        }
    }
    merges
}

/// Precomputed ranks of every subset of a ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    ground_size: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn get(&self, set: ElementSet) -> usize {
        self.ranks[set.bits() as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.get(ElementSet::full(self.ground_size))
    }
}

fn separator_in(table: &RankTable) -> Option<ElementSet> {
    let n = table.ground_size;
    let full = ElementSet::full(n);
    let total = table.full_rank();
    // Every separator pair has one side containing element 0.
    (0..1u32 << (n - 1))
        .map(|rest| ElementSet(rest << 1 | 1))
        .filter(|&a| a != full)
        .find(|&a| table.get(a) + table.get(full - a) == total)
}

fn circuits_in(table: &RankTable) -> Vec<ElementSet> {
    let n = table.ground_size;
    let mut out: Vec<ElementSet> = ElementSet::full(n)
        .subsets()
        .filter(|&a| {
            !a.is_empty()
                && table.get(a) + 1 == a.len()
                && a.iter().all(|e| table.get(a.without(e)) + 1 == a.len())
        })
        .collect();
    out.sort_by_key(|a| (a.len(), a.bits()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    fn triangle() -> Matroid {
        Matroid::graphic(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    /// Rank by Gaussian elimination over ℚ.
    fn rational_rank(rows: &[Vec<i64>], cols: &[usize]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| BigRational::from_integer(r[c].into())).collect())
            .collect();
        let mut rank = 0;
        for c in 0..cols.len() {
            let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = BigRational::one() / m[rank][c].clone();
            for i in 0..m.len() {
                if i != rank && !m[i][c].is_zero() {
                    let factor = m[i][c].clone() * inv.clone();
                    for j in 0..cols.len() {
                        let t = m[rank][j].clone() * factor.clone();
                        m[i][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn element_set_basics() {
        let s = set(&[0, 2, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.subsets().count(), 8);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.span(), 6);
        assert_eq!(ElementSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(triangle().rank(ElementSet::full(3)).unwrap(), 2);
        assert_eq!(Matroid::uniform(2, 4).unwrap().rank(set(&[0, 1, 3])).unwrap(), 2);
        let rows: Vec<Vec<i64>> = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let lin = Matroid::linear(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap();
        assert_eq!(rational_rank(&rows, &[0, 1, 2]), 2);
        assert_eq!(lin.rank(ElementSet::full(3)).unwrap(), 2);
        assert!(matches!(
            triangle().rank(set(&[3])),
            Err(MatroidError::ElementOutOfRange { element: 3, .. })
        ));
    }

    #[test]
    fn linear_rank_matches_rational_elimination() {
        let rows: Vec<Vec<i64>> = vec![
            vec![1, 2, 0, 3, -1, 4],
            vec![2, 4, 1, 0, 5, 7],
            vec![3, 6, 1, 3, 4, 11],
        ];
        let lin = Matroid::linear(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap();
        for a in ElementSet::full(6).subsets() {
            let cols: Vec<usize> = a.iter().collect();
            assert_eq!(lin.rank(a).unwrap(), rational_rank(&rows, &cols), "{a:?}");
        }
    }

    #[test]
    fn minor_examples() {
        let m = triangle();
        let c = m.contract(0).unwrap();
        assert_eq!(c.ground_size(), 2);
        assert_eq!(c.rank(set(&[0])).unwrap(), 1);
        assert_eq!(c.rank(set(&[1])).unwrap(), 1);
        assert_eq!(c.rank(set(&[0, 1])).unwrap(), 1);
        for a in c.ground_set().subsets() {
            // r_{M/e}(A) = r_M(A ∪ e) - r_M(e), with relabelling 0->1, 1->2
            let lifted: ElementSet = a.iter().map(|i| i + 1).collect();
            assert_eq!(
                c.rank(a).unwrap(),
                m.rank(lifted.with(0)).unwrap() - m.rank(set(&[0])).unwrap()
            );
        }

        let d = m.delete(0).unwrap();
        assert_eq!(d.rank(set(&[0, 1])).unwrap(), 2);
        assert_eq!(d.element_status(0).unwrap(), ElementStatus::Coloop);

        let id = m.minor(ElementSet::EMPTY, ElementSet::EMPTY).unwrap();
        for a in m.ground_set().subsets() {
            assert_eq!(id.rank(a).unwrap(), m.rank(a).unwrap());
        }

        assert_eq!(
            m.minor(set(&[0]), set(&[0])).unwrap_err(),
            MatroidError::OverlappingMinor
        );
    }

    #[test]
    fn minors_flatten() {
        let k4 = Matroid::graphic(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        let two_step = k4.delete(1).unwrap().contract(2).unwrap();
        // element 2 of K4\1 is element 3 of K4
        let one_step = k4.minor(set(&[1]), set(&[3])).unwrap();
        match two_step.representation() {
            Representation::Minor {
                deleted,
                contracted,
                live,
                base,
            } => {
                assert!(!matches!(base.representation(), Representation::Minor { .. }));
                assert_eq!(*deleted, set(&[1]));
                assert_eq!(*contracted, set(&[3]));
                assert_eq!(live, &vec![0, 2, 4, 5]);
            }
            other => panic!("expected a minor, got {other:?}"),
        }
        assert_eq!(two_step.rank_table(), one_step.rank_table());
    }

    #[test]
    fn element_status_examples() {
        let with_loop = Matroid::graphic(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(with_loop.element_status(0).unwrap(), ElementStatus::Loop);
        let k2 = Matroid::graphic(2, vec![(0, 1)]).unwrap();
        assert_eq!(k2.element_status(0).unwrap(), ElementStatus::Coloop);
        for e in 0..3 {
            assert_eq!(triangle().element_status(e).unwrap(), ElementStatus::Regular);
        }
    }

    #[test]
    fn connectivity_examples() {
        assert!(triangle().is_connected().unwrap());
        assert!(!Matroid::uniform(2, 2).unwrap().is_connected().unwrap());
        assert!(Matroid::uniform(1, 2).unwrap().is_connected().unwrap());
        assert!(Matroid::uniform(1, 1).unwrap().is_connected().unwrap());
        assert!(!Matroid::uniform(0, 1).unwrap().is_connected().unwrap());
        assert!(!Matroid::uniform(0, 3).unwrap().is_connected().unwrap());
        assert_eq!(
            Matroid::uniform(0, 0).unwrap().is_connected().unwrap_err(),
            MatroidError::EmptyGroundSet
        );
        // C4 is connected; a path is not
        let c4 = Matroid::graphic(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(c4.is_connected().unwrap());
        let p3 = Matroid::graphic(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(!p3.is_connected().unwrap());
    }

    #[test]
    fn circuit_examples() {
        assert_eq!(triangle().circuits(), vec![set(&[0, 1, 2])]);
        let u24 = Matroid::uniform(2, 4).unwrap().circuits();
        assert_eq!(u24.len(), 4);
        assert!(u24.iter().all(|c| c.len() == 3));
        assert!(Matroid::uniform(3, 3).unwrap().circuits().is_empty());
        let with_loop = Matroid::graphic(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(with_loop.circuits(), vec![set(&[0])]);
    }

    #[test]
    fn direct_sum_examples() {
        let u11 = Matroid::uniform(1, 1).unwrap();
        let s = Matroid::direct_sum(&u11, &u11).unwrap();
        assert_eq!(s.full_rank(), 2);
        assert!(!s.is_connected().unwrap());
        let t = Matroid::direct_sum(&triangle(), &Matroid::uniform(2, 4).unwrap()).unwrap();
        assert_eq!(t.full_rank(), 4);
        assert_eq!(t.rank(set(&[0, 3, 4, 5])).unwrap(), 1 + 2);
        let big = Matroid::uniform(3, 13).unwrap();
        assert_eq!(
            Matroid::direct_sum(&big, &big).unwrap_err(),
            MatroidError::TooLarge(26)
        );
    }

    #[test]
    fn bases_match_graphic() {
        let g = Matroid::graphic(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let r = g.full_rank();
        let bases: Vec<ElementSet> = g
            .ground_set()
            .subsets()
            .filter(|&a| a.len() == r && g.rank(a).unwrap() == r)
            .collect();
        let b = Matroid::from_bases(5, bases).unwrap();
        assert_eq!(b.rank_table(), g.rank_table());
        assert!(Matroid::from_bases(3, vec![set(&[0]), set(&[1, 2])]).is_err());
    }
}

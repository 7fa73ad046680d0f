//! Small simple graphs: graph6 I/O, biconnectivity, isomorph-free
//! enumeration and cycle matroids.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::matroid::{Matroid, MatroidError};
use crate::poly::UniPolyZ;

/// Largest order accepted by [`SimpleGraph`].
pub const MAX_ORDER: usize = 10;
/// Orders supported by [`enumerate_biconnected`].
pub const ENUMERATION_ORDERS: std::ops::RangeInclusive<usize> = 3..=7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph6 parse error: {0}")]
    Parse(String),
    #[error("graph of order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),
    #[error("order {0} is outside the enumeration range 3..=7")]
    OrderOutOfRange(usize),
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<GraphError> },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Simple undirected graph on at most [`MAX_ORDER`] vertices, with edges
/// `(u, v)`, `u < v`, sorted in graph6 bit order (by `v`, then `u`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

/// Position of the pair `u < v` in graph6 bit order.
fn pair_index(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertex_count > MAX_ORDER {
            return Err(GraphError::TooLarge(vertex_count));
        }
        let mut mask = 0u64;
        for &(a, b) in edges {
            let (u, v) = (a.min(b), a.max(b));
            if u == v || v >= vertex_count {
                return Err(GraphError::InvalidEdge(a, b));
            }
            let bit = 1u64 << pair_index(u, v);
            if mask & bit != 0 {
                return Err(GraphError::InvalidEdge(a, b));
            }
            mask |= bit;
        }
        Ok(Self::from_mask(vertex_count, mask))
    }

    /// Graph whose edge set is the bit set `mask` in graph6 bit order.
    fn from_mask(vertex_count: usize, mask: u64) -> Self {
        let mut edges = Vec::new();
        for v in 1..vertex_count {
            for u in 0..v {
                if mask >> pair_index(u, v) & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge set as a bit set in graph6 bit order.
    pub fn edge_mask(&self) -> u64 {
        self.edges
            .iter()
            .fold(0, |m, &(u, v)| m | 1 << pair_index(u, v))
    }

    /// Neighbourhoods as vertex bit sets.
    pub fn adjacency(&self) -> Vec<u16> {
        let mut adj = vec![0u16; self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn component_count(&self) -> usize {
        components(&self.adjacency())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit_graph6(self))
    }
}

fn components(adj: &[u16]) -> usize {
    let n = adj.len();
    let mut unseen: u16 = if n == 0 { 0 } else { u16::MAX >> (16 - n) };
    let mut count = 0;
    while unseen != 0 {
        count += 1;
        let mut frontier = unseen & unseen.wrapping_neg();
        unseen &= !frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & unseen;
            unseen &= !fresh;
            frontier |= fresh;
        }
    }
    count
}

/// Decodes one graph6 line. A trailing newline is ignored.
pub fn parse_graph6(line: &str) -> Result<SimpleGraph, GraphError> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| GraphError::Parse("empty line".into()))?;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Parse(format!("byte {b} at offset {i} is outside 63..=126")));
        }
    }
    if first == 126 {
        return Err(GraphError::Parse("orders above 62 are not supported".into()));
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(GraphError::TooLarge(n));
    }
    let bits = pair_count(n);
    let needed = bits.div_ceil(6);
    if body.len() != needed {
        return Err(GraphError::Parse(format!(
            "expected {needed} data bytes for order {n}, got {}",
            body.len()
        )));
    }
    let mut mask = 0u64;
    for k in 0..bits {
        let byte = body[k / 6] - 63;
        if byte >> (5 - k % 6) & 1 == 1 {
            mask |= 1 << k;
        }
    }
    Ok(SimpleGraph::from_mask(n, mask))
}

pub fn emit_graph6(g: &SimpleGraph) -> String {
    let bits = pair_count(g.vertex_count);
    let mask = g.edge_mask();
    let mut out = vec![63 + g.vertex_count as u8];
    for chunk in 0..bits.div_ceil(6) {
        let mut byte = 0u8;
        for offset in 0..6 {
            let k = chunk * 6 + offset;
            if k < bits && mask >> k & 1 == 1 {
                byte |= 1 << (5 - offset);
            }
        }
        out.push(63 + byte);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a graph6 file: one graph per line, blank lines and an optional
/// `>>graph6<<` header are skipped.
pub fn parse_graph6_file(text: &str) -> Result<Vec<SimpleGraph>, GraphError> {
    let mut graphs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.strip_prefix(">>graph6<<").unwrap_or(raw).trim_end();
        if line.is_empty() {
            continue;
        }
        graphs.push(parse_graph6(line).map_err(|e| GraphError::Line {
            line: i + 1,
            source: Box::new(e),
        })?);
    }
    Ok(graphs)
}

/// Connected, at least 3 vertices, and no articulation vertex.
pub fn is_biconnected(g: &SimpleGraph) -> bool {
    biconnected_adj(&g.adjacency())
}

fn biconnected_adj(adj: &[u16]) -> bool {
    let n = adj.len();
    if n < 3 {
        return false;
    }
    // iterative DFS from vertex 0 computing discovery times and lowpoints
    let mut disc = [usize::MAX; MAX_ORDER];
    let mut low = [0usize; MAX_ORDER];
    let mut parent = [usize::MAX; MAX_ORDER];
    let mut pending = [0u16; MAX_ORDER];
    let mut stack = vec![0usize];
    disc[0] = 0;
    low[0] = 0;
    pending[0] = adj[0];
    let mut time = 1;
    let mut root_children = 0;
    while let Some(&v) = stack.last() {
        if pending[v] != 0 {
            let w = pending[v].trailing_zeros() as usize;
            pending[v] &= pending[v] - 1;
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                parent[w] = v;
                pending[w] = adj[w];
                if v == 0 {
                    root_children += 1;
                }
                stack.push(w);
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != usize::MAX {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    time == n && root_children == 1
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![perm.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
        out.push(perm.clone());
    }
}

/// Edge mask after renaming vertex `v` to `perm[v]`.
fn relabel_mask(pairs: &[(usize, usize)], mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = pairs[k];
        let (a, b) = (perm[u], perm[v]);
        out |= 1 << pair_index(a.min(b), a.max(b));
    }
    out
}

fn pairs_of(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(pair_count(n));
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

fn adjacency_of(n: usize, pairs: &[(usize, usize)], mask: u64) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    let mut rest = mask;
    while rest != 0 {
        let k = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (u, v) = pairs[k];
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// One representative per isomorphism class among graphs on `n` vertices
/// accepted by `keep`: a mask is kept iff no vertex permutation maps it to
/// a smaller mask. Output is sorted by mask.
fn enumerate_minimal(n: usize, keep: impl Fn(&[u16]) -> bool) -> Vec<SimpleGraph> {
    let pairs = pairs_of(n);
    let perms = permutations(n);
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        if !keep(&adjacency_of(n, &pairs, mask)) {
            continue;
        }
        if perms.iter().all(|p| relabel_mask(&pairs, mask, p) >= mask) {
            out.push(SimpleGraph::from_mask(n, mask));
        }
    }
    out
}

/// All biconnected simple graphs on `n` vertices up to isomorphism, each
/// represented by its minimum edge mask over all vertex permutations and
/// listed in increasing mask order.
pub fn enumerate_biconnected(n: usize) -> Result<Vec<SimpleGraph>, GraphError> {
    if !ENUMERATION_ORDERS.contains(&n) {
        return Err(GraphError::OrderOutOfRange(n));
    }
    Ok(enumerate_minimal(n, biconnected_adj))
}

/// All connected simple graphs on `n ≤ 7` vertices up to isomorphism.
pub fn enumerate_connected(n: usize) -> Result<Vec<SimpleGraph>, GraphError> {
    if n > *ENUMERATION_ORDERS.end() {
        return Err(GraphError::OrderOutOfRange(n));
    }
    Ok(enumerate_minimal(n, |adj| components(adj) <= 1))
}

/// Isomorphism invariant of a graph: the minimum edge mask over the
/// relabelings that list vertices in nondecreasing degree order.
pub fn degree_sorted_form(g: &SimpleGraph) -> u64 {
    let n = g.vertex_count;
    let pairs = pairs_of(n);
    let adj = g.adjacency();
    let mask = g.edge_mask();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| adj[v].count_ones());
    // slots[i] holds the vertex placed at position i
    let mut best = u64::MAX;
    let mut slots = by_degree.clone();
    let class_bounds: Vec<(usize, usize)> = {
        let mut bounds = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || adj[by_degree[i]].count_ones() != adj[by_degree[start]].count_ones() {
                bounds.push((start, i));
                start = i;
            }
        }
        bounds
    };
    fn go(
        class: usize,
        bounds: &[(usize, usize)],
        slots: &mut Vec<usize>,
        pairs: &[(usize, usize)],
        mask: u64,
        best: &mut u64,
    ) {
        if class == bounds.len() {
            let mut perm = vec![0; slots.len()];
            for (pos, &v) in slots.iter().enumerate() {
                perm[v] = pos;
            }
            *best = (*best).min(relabel_mask(pairs, mask, &perm));
            return;
        }
        let (lo, hi) = bounds[class];
        let members: Vec<usize> = slots[lo..hi].to_vec();
        for order in permutations(hi - lo) {
            for (i, &j) in order.iter().enumerate() {
                slots[lo + i] = members[j];
            }
            go(class + 1, bounds, slots, pairs, mask, best);
        }
        slots[lo..hi].copy_from_slice(&members);
    }
    go(0, &class_bounds, &mut slots, &pairs, mask, &mut best);
    best
}

/// Independent enumeration used to cross-check [`enumerate_biconnected`]:
/// filters all labeled biconnected graphs and deduplicates them by
/// [`degree_sorted_form`]. Returns one graph per class, in increasing order
/// of that form.
pub fn enumerate_biconnected_by_degree_form(n: usize) -> Result<Vec<SimpleGraph>, GraphError> {
    if !ENUMERATION_ORDERS.contains(&n) {
        return Err(GraphError::OrderOutOfRange(n));
    }
    let pairs = pairs_of(n);
    let mut forms = BTreeSet::new();
    for mask in 0..1u64 << pairs.len() {
        if biconnected_adj(&adjacency_of(n, &pairs, mask)) {
            forms.insert(degree_sorted_form(&SimpleGraph::from_mask(n, mask)));
        }
    }
    Ok(forms
        .into_iter()
        .map(|m| SimpleGraph::from_mask(n, m))
        .collect())
}

/// Cycle matroid with one element per edge, in edge order.
pub fn cycle_matroid(g: &SimpleGraph) -> Result<Matroid, GraphError> {
    Ok(Matroid::graphic(g.vertex_count, g.edges.clone())?)
}

/// Whether the cycle matroid is connected, decided on the graph: after
/// dropping isolated vertices the graph must be biconnected or a single
/// edge.
pub fn cycle_matroid_is_connected(g: &SimpleGraph) -> bool {
    let adj = g.adjacency();
    let live: Vec<usize> = (0..g.vertex_count).filter(|&v| adj[v] != 0).collect();
    match live.len() {
        0 | 1 => false,
        2 => true,
        _ => {
            let mut index = [0usize; MAX_ORDER];
            for (i, &v) in live.iter().enumerate() {
                index[v] = i;
            }
            let compact: Vec<u16> = live
                .iter()
                .map(|&v| {
                    let mut m = 0u16;
                    for w in 0..g.vertex_count {
                        if adj[v] >> w & 1 == 1 {
                            m |= 1 << index[w];
                        }
                    }
                    m
                })
                .collect();
            biconnected_adj(&compact)
        }
    }
}

/// `T_G(x, y0)` as a polynomial in `x`, without enumerating edge subsets.
///
/// With `w = y0 − 1` and `u = x − 1`, the random-cluster sum
/// `Z(S) = Σ_{A ⊆ E(S)} (w u)^{k(A)} w^{|A|}` over the subgraph induced on a
/// vertex set `S` satisfies `T_G(u + 1, y0) = Z(V) / (u^{k(G)} w^{|V|})`. It is
/// built from the connected-spanning-subgraph sums `C(S)`:
///
/// ```text
/// y0^{e(S)} = Σ_{T ⊆ S, min S ∈ T} C(T) y0^{e(S∖T)}
/// Z(S)      = Σ_{T ⊆ S, min S ∈ T} w C(T) u Z(S∖T)
/// ```
///
/// Returns `None` when `y0 = 1`.
pub fn tutte_at_y(g: &SimpleGraph, y0: &BigInt) -> Option<UniPolyZ> {
    let w: BigInt = y0 - 1;
    if w.is_zero() {
        return None;
    }
    let n = g.vertex_count;
    let adj = g.adjacency();
    let full = (1usize << n) - 1;
    let inner_edges = |s: usize| -> usize {
        (0..n)
            .filter(|&v| s >> v & 1 == 1)
            .map(|v| (adj[v] as usize & s).count_ones() as usize)
            .sum::<usize>()
            / 2
    };
    let y_pows: Vec<BigInt> = std::iter::successors(Some(BigInt::one()), |p| Some(p * y0))
        .take(g.edge_count() + 1)
        .collect();
    let total: Vec<BigInt> = (0..=full).map(|s| y_pows[inner_edges(s)].clone()).collect();

    let mut connected = vec![BigInt::zero(); full + 1];
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut c = total[s].clone();
        // proper subsets T = low ∪ r with r ⊊ rest
        let mut r = rest;
        while r != 0 {
            r = (r - 1) & rest;
            let t = low | r;
            c -= &connected[t] * &total[s & !t];
        }
        connected[s] = c;
    }

    // cluster[s]: coefficients in u
    let mut cluster: Vec<Vec<BigInt>> = vec![Vec::new(); full + 1];
    cluster[0] = vec![BigInt::one()];
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut acc = vec![BigInt::zero(); s.count_ones() as usize + 1];
        let mut r = rest;
        loop {
            let t = low | r;
            let weight = &w * &connected[t];
            if !weight.is_zero() {
                for (i, c) in cluster[s & !t].iter().enumerate() {
                    acc[i + 1] += &weight * c;
                }
            }
            if r == 0 {
                break;
            }
            r = (r - 1) & rest;
        }
        cluster[s] = acc;
    }

    let k = g.component_count();
    let scale = num_traits::pow(w, n);
    let in_u: Vec<BigInt> = cluster[full]
        .iter()
        .enumerate()
        .filter_map(|(i, c)| {
            if i < k {
                debug_assert!(c.is_zero());
                None
            } else {
                debug_assert!((c % &scale).is_zero());
                Some(c / &scale)
            }
        })
        .collect();
    let shift = UniPolyZ::from_i64s(&[-1, 1]);
    Some(UniPolyZ::new(in_u).compose(&shift))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tutte::tutte_bivariate;

    fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, edges).unwrap()
    }

    /// Biconnectivity by deleting each vertex in turn.
    fn biconnected_by_deletion(g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        if n < 3 || !g.is_connected() {
            return false;
        }
        (0..n).all(|v| {
            let edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .filter(|&&(a, b)| a != v && b != v)
                .map(|&(a, b)| (a - (a > v) as usize, b - (b > v) as usize))
                .collect();
            SimpleGraph::new(n - 1, &edges).unwrap().is_connected()
        })
    }

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("Bw").unwrap(), graph(3, &[(0, 1), (0, 2), (1, 2)]));
        assert_eq!(parse_graph6("A_").unwrap(), graph(2, &[(0, 1)]));
        assert!(matches!(parse_graph6("B\x07"), Err(GraphError::Parse(_))));
        assert!(matches!(parse_graph6("D"), Err(GraphError::Parse(_))));
        assert!(matches!(parse_graph6("Bww"), Err(GraphError::Parse(_))));
        assert_eq!(parse_graph6("K???????????").unwrap_err(), GraphError::TooLarge(12));
        assert_eq!(parse_graph6("@").unwrap().vertex_count(), 1);
        assert_eq!(parse_graph6("Bw\n").unwrap().edge_count(), 3);
    }

    #[test]
    fn graph6_file_with_header() {
        let gs = parse_graph6_file(">>graph6<<Bw\nA_\n\nCF\n").unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[1], graph(2, &[(0, 1)]));
        let err = parse_graph6_file("Bw\nB\x07\n").unwrap_err();
        assert!(matches!(err, GraphError::Line { line: 2, .. }));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(SimpleGraph::new(3, &[(0, 0)]).is_err());
        assert!(SimpleGraph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(3, &[(0, 3)]).is_err());
        assert_eq!(SimpleGraph::new(11, &[]).unwrap_err(), GraphError::TooLarge(11));
    }

    #[test]
    fn biconnectivity_examples() {
        assert!(is_biconnected(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])));
        assert!(!is_biconnected(&graph(3, &[(0, 1), (1, 2)])));
        let bowtie = graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
        assert!(!is_biconnected(&bowtie));
        assert!(!is_biconnected(&graph(2, &[(0, 1)])));
        assert!(!is_biconnected(&graph(1, &[])));
    }

    #[test]
    fn lowpoint_matches_vertex_deletion() {
        for n in 1..=6 {
            let pairs = pairs_of(n);
            for mask in 0..1u64 << pairs.len() {
                let g = SimpleGraph::from_mask(n, mask);
                assert_eq!(is_biconnected(&g), biconnected_by_deletion(&g), "{g}");
            }
        }
    }

    #[test]
    fn small_enumerations() {
        let counts: Vec<usize> = (3..=6).map(|n| enumerate_biconnected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 10, 56]);
        let four = enumerate_biconnected(4).unwrap();
        let edge_counts: Vec<usize> = four.iter().map(SimpleGraph::edge_count).collect();
        assert_eq!(edge_counts, vec![4, 5, 6]);
        assert_eq!(enumerate_biconnected(8).unwrap_err(), GraphError::OrderOutOfRange(8));
        let connected: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn every_labeled_graph_has_one_representative() {
        for n in 3..=5 {
            let reps = enumerate_biconnected(n).unwrap();
            let rep_forms: Vec<u64> = reps.iter().map(degree_sorted_form).collect();
            let distinct: BTreeSet<u64> = rep_forms.iter().copied().collect();
            assert_eq!(distinct.len(), reps.len());
            let pairs = pairs_of(n);
            for mask in 0..1u64 << pairs.len() {
                let g = SimpleGraph::from_mask(n, mask);
                if is_biconnected(&g) {
                    let f = degree_sorted_form(&g);
                    assert_eq!(rep_forms.iter().filter(|&&r| r == f).count(), 1);
                }
            }
        }
    }

    #[test]
    fn graph6_round_trip() {
        for n in 3..=6 {
            for g in enumerate_biconnected(n).unwrap() {
                assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
            }
        }
    }

    #[test]
    fn cycle_matroid_examples() {
        let tri = cycle_matroid(&graph(3, &[(0, 1), (0, 2), (1, 2)])).unwrap();
        assert_eq!(tri.full_rank(), 2);
        assert_eq!(tri.circuits().len(), 1);
        let c4 = cycle_matroid(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])).unwrap();
        assert_eq!(c4.full_rank(), 3);
        assert!(c4.is_connected().unwrap());
        let star = cycle_matroid(&graph(4, &[(0, 1), (0, 2), (0, 3)])).unwrap();
        assert!((0..3).all(|e| {
            star.element_status(e).unwrap() == crate::matroid::ElementStatus::Coloop
        }));
    }

    #[test]
    fn matroid_connectivity_on_graphs() {
        for n in 1..=5 {
            let pairs = pairs_of(n);
            for mask in 0..1u64 << pairs.len() {
                let g = SimpleGraph::from_mask(n, mask);
                let m = cycle_matroid(&g).unwrap();
                let expected = m.ground_size() > 0 && m.is_connected().unwrap();
                assert_eq!(cycle_matroid_is_connected(&g), expected, "{g}");
            }
        }
    }

    #[test]
    fn vertex_recurrence_matches_state_sum() {
        for n in 1..=5 {
            let pairs = pairs_of(n);
            for mask in (0..1u64 << pairs.len()).step_by(3) {
                let g = SimpleGraph::from_mask(n, mask);
                let t = tutte_bivariate(&cycle_matroid(&g).unwrap()).unwrap();
                for y0 in [-3i64, 0, 2, 5] {
                    let y0 = BigInt::from(y0);
                    assert_eq!(tutte_at_y(&g, &y0).unwrap(), t.specialize_y(&y0), "{g} at {y0}");
                }
            }
        }
        assert!(tutte_at_y(&graph(2, &[(0, 1)]), &BigInt::one()).is_none());
    }
}

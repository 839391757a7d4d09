//! Prime graphs `Γ(G)`: vertices are the primes dividing `|G|`, and `p ~ q`
//! iff `G` has an element of order `pq`.
//!
//! For the groups handled here the adjacency rule is closed-form:
//!
//! * `Γ(S_n)`: `p ~ q` iff `p + q <= n`.
//! * `Γ(A_n)`: odd `p ~ q` iff `p + q <= n`; `2 ~ p` iff `p + 2 <= n - 2`.
//!
//! [`PrimeGraph::from_spectrum`] builds the same graphs straight from a list
//! of element orders and serves as the cross-check for both rules.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::arith::{is_prime_u64, PrimeSieve};
use crate::error::{Error, Result};
use crate::spectrum::{Family, GroupKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphSource {
    Group(GroupKind),
    Spectrum,
    Imported,
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Group(g) => write!(f, "{g}"),
            GraphSource::Spectrum => f.write_str("from-spectrum"),
            GraphSource::Imported => f.write_str("imported"),
        }
    }
}

/// Undirected simple graph on an increasing list of primes, stored as one
/// bitset row per vertex.
///
/// Equality compares vertices and edges only; the [`GraphSource`] is
/// descriptive.
#[derive(Debug, Clone)]
pub struct PrimeGraph {
    vertices: Vec<u64>,
    words: usize,
    rows: Vec<u64>,
    source: GraphSource,
}

/// Vertex degrees in increasing-prime order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreePattern(pub Vec<u32>);

impl DegreePattern {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('(')?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_char(')')
    }
}

impl PrimeGraph {
    fn empty(vertices: Vec<u64>, source: GraphSource) -> Self {
        let words = vertices.len().div_ceil(64);
        PrimeGraph {
            rows: vec![0; words * vertices.len()],
            vertices,
            words,
            source,
        }
    }

    /// `Γ(S_n)`, `n >= 2`.
    pub fn symmetric(n: u64) -> Result<Self> {
        Self::symmetric_in(&PrimeSieve::new(n), n)
    }

    /// `Γ(A_n)`, `n >= 5`.
    pub fn alternating(n: u64) -> Result<Self> {
        Self::alternating_in(&PrimeSieve::new(n), n)
    }

    pub fn of_group(g: GroupKind) -> Result<Self> {
        match g.family() {
            Family::Symmetric => Self::symmetric(g.degree()),
            Family::Alternating => Self::alternating(g.degree()),
        }
    }

    /// [`PrimeGraph::symmetric`] reusing a caller-owned sieve covering `n`.
    pub fn symmetric_in(sieve: &PrimeSieve, n: u64) -> Result<Self> {
        let kind = GroupKind::symmetric(n)?;
        let mut g = Self::empty(sieve.primes_up_to(n)?, GraphSource::Group(kind));
        for i in 0..g.vertices.len() {
            let p = g.vertices[i];
            let end = g.count_leq(n - p);
            g.fill_row(i, 0, end);
        }
        Ok(g)
    }

    /// [`PrimeGraph::alternating`] reusing a caller-owned sieve covering `n`.
    pub fn alternating_in(sieve: &PrimeSieve, n: u64) -> Result<Self> {
        if n < 5 {
            return Err(Error::UnsupportedDegree { degree: n, min: 5 });
        }
        let kind = GroupKind::alternating(n)?;
        let mut g = Self::empty(sieve.primes_up_to(n)?, GraphSource::Group(kind));
        // vertex 0 is the prime 2
        let twos = g.count_leq(n - 4);
        g.fill_row(0, 1, twos);
        for i in 1..g.vertices.len() {
            let p = g.vertices[i];
            let end = g.count_leq(n - p);
            g.fill_row(i, 1, end);
            if i < twos {
                g.set(i, 0);
            }
        }
        Ok(g)
    }

    /// Edge `p ~ q` iff `p·q` is one of `orders`.
    pub fn from_spectrum(primes: &[u64], orders: &[u64]) -> Result<Self> {
        let vertices = Self::checked_vertices(primes)?;
        let orders: BTreeSet<u64> = orders.iter().copied().collect();
        let mut g = Self::empty(vertices, GraphSource::Spectrum);
        for i in 0..g.vertices.len() {
            for j in i + 1..g.vertices.len() {
                let pq = g.vertices[i].checked_mul(g.vertices[j]);
                if pq.is_some_and(|pq| orders.contains(&pq)) {
                    g.set(i, j);
                    g.set(j, i);
                }
            }
        }
        Ok(g)
    }

    /// Graph from an explicit edge list, e.g. when reading exported JSON.
    pub fn from_edges(primes: &[u64], edges: &[(u64, u64)]) -> Result<Self> {
        let vertices = Self::checked_vertices(primes)?;
        let mut g = Self::empty(vertices, GraphSource::Imported);
        for &(p, q) in edges {
            let (i, j) = match (g.index_of(p), g.index_of(q)) {
                (Some(i), Some(j)) if i != j => (i, j),
                _ => {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "edge {p}--{q} is a loop or uses an unknown vertex"
                    )))
                }
            };
            g.set(i, j);
            g.set(j, i);
        }
        Ok(g)
    }

    fn checked_vertices(primes: &[u64]) -> Result<Vec<u64>> {
        let mut vertices = primes.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(Error::InvalidArgument(
                "a prime graph needs a vertex".into(),
            ));
        }
        if let Some(&bad) = vertices.iter().find(|&&p| !is_prime_u64(p)) {
            return Err(Error::InvalidArgument(alloc::format!(
                "vertex {bad} is not prime"
            )));
        }
        Ok(vertices)
    }

    fn count_leq(&self, x: u64) -> usize {
        self.vertices.partition_point(|&q| q <= x)
    }

    /// Sets row `i` to the index range `[lo, hi)` minus the diagonal.
    fn fill_row(&mut self, i: usize, lo: usize, hi: usize) {
        let row = &mut self.rows[i * self.words..(i + 1) * self.words];
        if lo < hi {
            let (first, last) = (lo / 64, (hi - 1) / 64);
            for (w, word) in row.iter_mut().enumerate().take(last + 1).skip(first) {
                let start = if w == first { lo % 64 } else { 0 };
                let end = if w == last { (hi - 1) % 64 + 1 } else { 64 };
                let high = if end == 64 { u64::MAX } else { (1 << end) - 1 };
                *word |= high & !((1 << start) - 1);
            }
        }
        row[i / 64] &= !(1 << (i % 64));
    }

    fn set(&mut self, i: usize, j: usize) {
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    fn bit(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn source(&self) -> GraphSource {
        self.source
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.vertices.binary_search(&p).ok()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        match (self.index_of(p), self.index_of(q)) {
            (Some(i), Some(j)) => self.bit(i, j),
            _ => false,
        }
    }

    pub fn neighbors(&self, p: u64) -> Vec<u64> {
        let Some(i) = self.index_of(p) else {
            return Vec::new();
        };
        (0..self.vertices.len())
            .filter(|&j| self.bit(i, j))
            .map(|j| self.vertices[j])
            .collect()
    }

    /// Edges `(p, q)` with `p < q`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.bit(i, j) {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let twice: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        twice as usize / 2
    }

    pub fn degree_pattern(&self) -> DegreePattern {
        DegreePattern(
            (0..self.vertices.len())
                .map(|i| self.row(i).iter().map(|w| w.count_ones()).sum())
                .collect(),
        )
    }

    /// `Λ(G)`: vertices adjacent to every other vertex.
    pub fn lambda_set(&self) -> Vec<u64> {
        let full = self.vertices.len() as u32 - 1;
        self.degree_pattern()
            .0
            .iter()
            .zip(&self.vertices)
            .filter(|(&d, _)| d == full)
            .map(|(_, &p)| p)
            .collect()
    }

    /// Connected components, each increasing; ordered by smallest vertex, so
    /// the component of 2 comes first when 2 is a vertex.
    pub fn connected_components(&self) -> Vec<Vec<u64>> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut members = Vec::new();
            while let Some(i) = stack.pop() {
                members.push(i);
                for (j, visited) in seen.iter_mut().enumerate() {
                    if !*visited && self.bit(i, j) {
                        *visited = true;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            components.push(members.into_iter().map(|i| self.vertices[i]).collect());
        }
        components
    }

    /// `self ⊆ other`: every vertex and every edge of `self` occurs in `other`.
    pub fn is_subgraph_of(&self, other: &PrimeGraph) -> bool {
        if self.vertices == other.vertices {
            return self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0);
        }
        self.vertices.iter().all(|&p| other.index_of(p).is_some())
            && self.edges().into_iter().all(|(p, q)| other.has_edge(p, q))
    }

    /// Graphviz rendering with vertices labelled by their primes.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{}\" {{", self.source);
        for p in &self.vertices {
            let _ = writeln!(out, "  {p};");
        }
        for (p, q) in self.edges() {
            let _ = writeln!(out, "  {p} -- {q};");
        }
        out.push_str("}\n");
        out
    }
}

impl PartialEq for PrimeGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.rows == other.rows
    }
}

impl Eq for PrimeGraph {}

/// Identical vertex sets and identical edge sets; no relabelling.
pub fn graphs_equal(a: &PrimeGraph, b: &PrimeGraph) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_degrees(n: u64, alternating: bool) -> Vec<u32> {
        let primes: Vec<u64> = (2..=n).filter(|&p| is_prime_u64(p)).collect();
        let adj = |p: u64, q: u64| {
            if alternating && (p == 2 || q == 2) {
                p.max(q) + 4 <= n
            } else {
                p + q <= n
            }
        };
        primes
            .iter()
            .map(|&p| primes.iter().filter(|&&q| q != p && adj(p, q)).count() as u32)
            .collect()
    }

    #[test]
    fn symmetric_examples() {
        let g27 = PrimeGraph::symmetric(27).unwrap();
        assert_eq!(g27.degree_pattern().0, [8, 8, 7, 7, 5, 5, 4, 4, 2]);
        let g3 = PrimeGraph::symmetric(3).unwrap();
        assert_eq!(g3.vertices(), [2, 3]);
        assert_eq!(g3.edge_count(), 0);
        let g10 = PrimeGraph::symmetric(10).unwrap();
        assert_eq!(g10.vertices(), [2, 3, 5, 7]);
        assert_eq!(g10.degree_pattern().0, [3, 3, 2, 2]);
        assert!(PrimeGraph::symmetric(1).is_err());
    }

    #[test]
    fn alternating_examples() {
        let g5 = PrimeGraph::alternating(5).unwrap();
        assert_eq!(g5.vertices(), [2, 3, 5]);
        assert_eq!(g5.edge_count(), 0);
        let g27 = PrimeGraph::alternating(27).unwrap();
        // 3 + 23 <= 27, and 23 + 2 <= 27 - 2
        assert_eq!(g27.neighbors(23), [2, 3]);
        let g10 = PrimeGraph::alternating(10).unwrap();
        assert_eq!(g10.degree_pattern().0, [2, 3, 2, 1]);
        assert_eq!(g10.neighbors(2), [3, 5]);
        assert_eq!(g10.neighbors(7), [3]);
        assert_eq!(
            PrimeGraph::alternating(4),
            Err(Error::UnsupportedDegree { degree: 4, min: 5 })
        );
    }

    #[test]
    fn builders_match_brute_force() {
        for n in (2..=200).chain([257, 311, 600, 1024, 1500]) {
            let s = PrimeGraph::symmetric(n).unwrap();
            assert_eq!(s.degree_pattern().0, brute_degrees(n, false), "S_{n}");
            if n >= 5 {
                let a = PrimeGraph::alternating(n).unwrap();
                assert_eq!(a.degree_pattern().0, brute_degrees(n, true), "A_{n}");
            }
        }
    }

    #[test]
    fn from_spectrum_examples() {
        let g = PrimeGraph::from_spectrum(&[2, 3, 5], &[1, 2, 3, 5]).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = PrimeGraph::from_spectrum(&[2], &[1, 2]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        let g = PrimeGraph::from_spectrum(&[2, 3], &[1, 2, 3, 6]).unwrap();
        assert_eq!(g.edges(), [(2, 3)]);
        assert!(PrimeGraph::from_spectrum(&[], &[1]).is_err());
        assert!(PrimeGraph::from_spectrum(&[2, 9], &[1]).is_err());
    }

    #[test]
    fn lambda_examples() {
        let s27 = PrimeGraph::symmetric(27).unwrap();
        assert_eq!(s27.lambda_set(), [2, 3]);
        let a125 = PrimeGraph::alternating(125).unwrap();
        let lambda = a125.lambda_set();
        for p in [2, 3, 5, 7, 11] {
            assert!(lambda.contains(&p), "{p}");
        }
        let edgeless = PrimeGraph::from_spectrum(&[2, 3, 5], &[1]).unwrap();
        assert!(edgeless.lambda_set().is_empty());
    }

    #[test]
    fn component_examples() {
        let s27 = PrimeGraph::symmetric(27).unwrap();
        assert_eq!(s27.connected_components().len(), 1);
        let a5 = PrimeGraph::alternating(5).unwrap();
        assert_eq!(a5.connected_components(), [vec![2], vec![3], vec![5]]);
        // Γ(S_13): 11 ~ 2 only, 13 isolated
        let s13 = PrimeGraph::symmetric(13).unwrap();
        assert_eq!(s13.connected_components(), [vec![2, 3, 5, 7, 11], vec![13]]);
    }

    #[test]
    fn equality_examples() {
        let s3 = PrimeGraph::symmetric(3).unwrap();
        let s4 = PrimeGraph::symmetric(4).unwrap();
        assert!(graphs_equal(&s3, &s4));
        assert!(graphs_equal(&s3, &s3));
        let s26 = PrimeGraph::symmetric(26).unwrap();
        let s27 = PrimeGraph::symmetric(27).unwrap();
        assert!(graphs_equal(&s26, &s27));
        let s8 = PrimeGraph::symmetric(8).unwrap();
        let s9 = PrimeGraph::symmetric(9).unwrap();
        assert!(!graphs_equal(&s8, &s9));
        // same edges, different vertex sets
        let s5 = PrimeGraph::symmetric(5).unwrap();
        assert!(!graphs_equal(&s4, &s5));
    }

    #[test]
    fn subgraph_relation() {
        let s7 = PrimeGraph::symmetric(7).unwrap();
        let s8 = PrimeGraph::symmetric(8).unwrap();
        assert!(s7.is_subgraph_of(&s8));
        assert!(!s8.is_subgraph_of(&s7));
        assert!(s8.has_edge(3, 5) && !s7.has_edge(3, 5));
        let s6 = PrimeGraph::symmetric(6).unwrap();
        assert!(s6.is_subgraph_of(&s7));
    }

    #[test]
    fn dot_output() {
        let dot = PrimeGraph::symmetric(5).unwrap().to_dot();
        assert!(dot.starts_with("graph \"S_5\" {\n"));
        assert!(dot.lines().any(|l| l.trim() == "2 -- 3;"));
        assert!(dot.contains("2 -- 3"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn degree_pattern_display() {
        let d = PrimeGraph::symmetric(27).unwrap().degree_pattern();
        assert_eq!(alloc::format!("{d}"), "(8, 8, 7, 7, 5, 5, 4, 4, 2)");
    }

    #[test]
    fn from_edges_round_trip() {
        let s30 = PrimeGraph::symmetric(30).unwrap();
        let copy = PrimeGraph::from_edges(s30.vertices(), &s30.edges()).unwrap();
        assert_eq!(copy, s30);
        assert_eq!(copy.source(), GraphSource::Imported);
        assert!(PrimeGraph::from_edges(&[2, 3], &[(2, 2)]).is_err());
        assert!(PrimeGraph::from_edges(&[2, 3], &[(2, 5)]).is_err());
    }
}

//! Simple undirected graphs on dense `0..n` vertex ids.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        assert_ne!(a, b, "loop edge");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A subset of `0..n`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(n: usize, vertices: I) -> Result<Self> {
        let mut s = Self::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from the low `n` bits of `mask` (requires `n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        let mut s = Self::new(n);
        if n > 0 {
            let keep = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// The set as a bitmask, if the universe fits in 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Size of the universe `0..n`.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: VertexId) {
        assert!(v < self.n, "vertex {v} outside universe {}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: VertexId) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.n && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut s = Self::new(self.n);
        for v in 0..self.n {
            if !self.contains(v) {
                s.insert(v);
            }
        }
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> Self {
        assert_eq!(self.n, other.n);
        VertexSet {
            n: self.n,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// A simple undirected graph. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, loops and duplicates.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].u, w[0].v));
        }
        Ok(Self::from_sorted_edges(n, edges))
    }

    /// Trusted constructor: `edges` must be normalized, in range and duplicate-free.
    pub(crate) fn from_edges_unchecked(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Self::from_sorted_edges(n, edges)
    }

    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adjacency,
        }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adjacency
            .iter()
            .map(Vec::len)
            .min()
            .ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Neighborhoods as bitmasks; only valid for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs at most 64 vertices");
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Result<Vec<VertexSet>> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        Ok(out)
    }

    /// A single vertex counts as connected.
    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.connected_components()?.len() == 1)
    }

    /// Two color classes of a proper 2-coloring, or `None` for an odd cycle.
    /// Each component's smallest vertex gets the first color.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let colors = self.two_coloring()?;
        let mut first = VertexSet::new(self.n);
        let mut second = VertexSet::new(self.n);
        for (v, c) in colors.into_iter().enumerate() {
            if c {
                second.insert(v);
            } else {
                first.insert(v);
            }
        }
        Some((first, second))
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for &w in &self.adjacency[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    /// The subgraph induced by `a`, reindexed densely. The second value maps
    /// new ids back to the original ones.
    pub fn induced_subgraph(&self, a: &VertexSet) -> (Graph, Vec<VertexId>) {
        let keep: Vec<VertexId> = a.iter().filter(|&v| v < self.n).collect();
        let mut remap = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            remap[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| remap[e.u] != usize::MAX && remap[e.v] != usize::MAX)
            .map(|e| Edge::new(remap[e.u], remap[e.v]))
            .collect();
        (Graph::from_edges_unchecked(keep.len(), edges), keep)
    }

    /// Edges with one endpoint in `a` and the other in `b`.
    pub fn boundary_edges(&self, a: &VertexSet, b: &VertexSet) -> Result<Vec<Edge>> {
        if let Some(v) = a.iter().find(|&v| b.contains(v)) {
            return Err(Error::OverlappingSets(v));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| {
                (a.contains(e.u) && b.contains(e.v)) || (b.contains(e.u) && a.contains(e.v))
            })
            .copied()
            .collect())
    }

    /// Number of edges with exactly one endpoint in `side`.
    pub fn boundary_size(&self, side: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|e| side.contains(e.u) != side.contains(e.v))
            .count()
    }

    /// Number of edges with both endpoints in `side`.
    pub fn inner_edge_count(&self, side: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|e| side.contains(e.u) && side.contains(e.v))
            .count()
    }

    /// Whether `side` induces a connected subgraph (false for the empty set).
    pub fn induces_connected(&self, side: &VertexSet) -> bool {
        let Some(start) = side.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if side.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == side.len()
    }
}

/// Bitmask-level helpers for graphs with at most 64 vertices.
pub(crate) mod mask {
    /// Whether `set` induces a connected subgraph; false for the empty set.
    pub fn is_connected(adj: &[u64], set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let mut reached = set & set.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & set & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached == set
    }

    pub fn boundary(adj: &[u64], set: u64) -> u32 {
        let mut total = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            total += (adj[v] & !set).count_ones();
        }
        total
    }

    #[cfg(test)]
    pub fn inner_edges(adj: &[u64], set: u64) -> u32 {
        let mut twice = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (adj[v] & set).count_ones();
        }
        twice / 2
    }

    pub fn full(n: usize) -> u64 {
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }
}

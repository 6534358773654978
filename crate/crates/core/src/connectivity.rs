//! Global edge connectivity.
//!
//! [`edge_connectivity`] runs Stoer–Wagner minimum-cut phases with a fixed
//! vertex order. [`brute_force_min_cut`] and [`enumerate_min_cuts`] scan all
//! `2^(n-1)` bipartitions with vertex 0 on the black side, walking them in
//! Gray-code order so each step updates the boundary size in O(1).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{chunk_bounds, Exec};
use crate::graph::{mask, Edge, Graph, VertexSet};

pub const BRUTE_FORCE_CAP: usize = 20;

/// A black/white vertex bipartition and the edges crossing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub black: VertexSet,
    pub white: VertexSet,
    pub edges: Vec<Edge>,
}

impl Cut {
    /// The cut separating `black` from its complement. Both sides must be nonempty.
    pub fn from_black(g: &Graph, black: VertexSet) -> Result<Cut> {
        if black.universe() != g.vertex_count() {
            return Err(Error::MalformedPartition(format!(
                "set over {} vertices used with a graph on {}",
                black.universe(),
                g.vertex_count()
            )));
        }
        let white = black.complement();
        if black.is_empty() || white.is_empty() {
            return Err(Error::MalformedPartition("one side is empty".into()));
        }
        let edges = g.boundary_edges(&black, &white)?;
        Ok(Cut {
            black,
            white,
            edges,
        })
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Whether deleting the cut edges leaves no path from black to white.
    pub fn separates(&self, g: &Graph) -> bool {
        let removed: std::collections::HashSet<Edge> = self.edges.iter().copied().collect();
        let Some(start) = self.black.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::new(g.vertex_count());
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen.contains(w) && !removed.contains(&Edge::new(v, w)) {
                    if self.white.contains(w) {
                        return false;
                    }
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        !self.white.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub lambda: usize,
    /// Absent for a disconnected graph.
    pub witness: Option<Cut>,
}

pub fn edge_connectivity(g: &Graph) -> Result<CutResult> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { need: 2, got: n });
    }
    if !g.is_connected()? {
        return Ok(CutResult {
            lambda: 0,
            witness: None,
        });
    }
    let (lambda, side) = stoer_wagner(g);
    let mut black = VertexSet::from_vertices(n, side)?;
    if !black.contains(0) {
        black = black.complement();
    }
    let witness = Cut::from_black(g, black)?;
    debug_assert_eq!(witness.size(), lambda);
    Ok(CutResult {
        lambda,
        witness: Some(witness),
    })
}

/// Returns the minimum cut value and one side of a minimum cut.
fn stoer_wagner(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut weight = vec![vec![0usize; n]; n];
    for e in g.edges() {
        weight[e.u][e.v] += 1;
        weight[e.v][e.u] += 1;
    }
    let mut groups: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = (usize::MAX, Vec::new());

    while active.len() > 1 {
        let mut attach = vec![0usize; n];
        let mut added = vec![false; n];
        let mut prev = active[0];
        let mut last = active[0];
        for step in 0..active.len() {
            // maximum adjacency; ties go to the earliest vertex in `active`
            let mut pick = usize::MAX;
            for &v in &active {
                if !added[v] && (pick == usize::MAX || attach[v] > attach[pick]) {
                    pick = v;
                }
            }
            added[pick] = true;
            if step == active.len() - 1 {
                if attach[pick] < best.0 {
                    let mut side = groups[pick].clone();
                    side.sort_unstable();
                    best = (attach[pick], side);
                }
            } else {
                for &v in &active {
                    if !added[v] {
                        attach[v] += weight[pick][v];
                    }
                }
            }
            prev = last;
            last = pick;
        }
        // merge `last` into `prev`
        let moved = std::mem::take(&mut groups[last]);
        groups[prev].extend(moved);
        for &v in &active {
            weight[prev][v] += weight[last][v];
            weight[v][prev] = weight[prev][v];
        }
        weight[prev][prev] = 0;
        active.retain(|&v| v != last);
    }
    best
}

/// Visits every black set `1 | gray(k) << 1` for `k` in `lo..hi`, passing
/// the mask and its boundary size.
fn gray_walk(adj: &[u64], lo: u64, hi: u64, mut visit: impl FnMut(u64, u32)) {
    if lo >= hi {
        return;
    }
    let gray = |k: u64| k ^ (k >> 1);
    let mut black = 1 | gray(lo) << 1;
    let mut boundary = mask::boundary(adj, black);
    visit(black, boundary);
    for k in lo + 1..hi {
        let v = k.trailing_zeros() as usize + 1;
        let bit = 1u64 << v;
        let deg = adj[v].count_ones();
        if black & bit == 0 {
            let inside = (adj[v] & black).count_ones();
            boundary = boundary + deg - 2 * inside;
            black |= bit;
        } else {
            black &= !bit;
            let inside = (adj[v] & black).count_ones();
            boundary = boundary + 2 * inside - deg;
        }
        visit(black, boundary);
    }
}

fn check_cap(g: &Graph, what: &'static str) -> Result<()> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices { need: 2, got: n });
    }
    if n > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what,
            n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    Ok(())
}

/// Smallest boundary over all bipartitions; ties go to the numerically
/// smallest black mask (vertex 0 is always black).
pub fn brute_force_min_cut(g: &Graph) -> Result<CutResult> {
    brute_force_min_cut_with(g, Exec::default())
}

pub fn brute_force_min_cut_with(g: &Graph, exec: Exec) -> Result<CutResult> {
    check_cap(g, "brute-force minimum cut")?;
    let n = g.vertex_count();
    let adj = g.adjacency_masks();
    let full = mask::full(n);
    let total = 1u64 << (n - 1);
    let chunks = chunk_bounds(total, exec);
    let (value, black) = exec
        .min_indexed(chunks.len(), |i| {
            let (lo, hi) = chunks[i];
            let mut best: Option<(u32, u64)> = None;
            gray_walk(&adj, lo, hi, |black, boundary| {
                if black != full && best.is_none_or(|b| (boundary, black) < b) {
                    best = Some((boundary, black));
                }
            });
            best
        })
        .expect("at least one proper bipartition");
    if value == 0 {
        return Ok(CutResult {
            lambda: 0,
            witness: None,
        });
    }
    Ok(CutResult {
        lambda: value as usize,
        witness: Some(Cut::from_black(g, VertexSet::from_mask(n, black))?),
    })
}

/// Every bipartition with minimum boundary whose two sides each induce a
/// connected subgraph, with vertex 0 black, sorted by black mask.
pub fn enumerate_min_cuts(g: &Graph) -> Result<Vec<Cut>> {
    enumerate_min_cuts_with(g, Exec::default())
}

pub fn enumerate_min_cuts_with(g: &Graph, exec: Exec) -> Result<Vec<Cut>> {
    check_cap(g, "minimum cut enumeration")?;
    let lambda = brute_force_min_cut_with(g, exec)?.lambda as u32;
    let n = g.vertex_count();
    let adj = g.adjacency_masks();
    let full = mask::full(n);
    let chunks = chunk_bounds(1u64 << (n - 1), exec);
    let found: Vec<Vec<u64>> = exec.map_indexed(chunks.len(), |i| {
        let (lo, hi) = chunks[i];
        let mut out = Vec::new();
        gray_walk(&adj, lo, hi, |black, boundary| {
            if boundary == lambda
                && black != full
                && mask::is_connected(&adj, black)
                && mask::is_connected(&adj, full & !black)
            {
                out.push(black);
            }
        });
        out
    });
    let mut masks: Vec<u64> = found.into_iter().flatten().collect();
    masks.sort_unstable();
    masks
        .into_iter()
        .map(|m| Cut::from_black(g, VertexSet::from_mask(n, m)))
        .collect()
}

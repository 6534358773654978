//! Exhaustive enumeration of small labeled graphs.
//!
//! The `k`-th bit of an edge mask selects the `k`-th pair of `0..n` in
//! lexicographic order `(0,1), (0,2), ..., (n-2,n-1)`. Graphs are produced
//! in increasing mask order.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const DEFAULT_ENUMERATION_CAP: usize = 5;

/// A labeled graph together with the edge mask it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeled {
    pub mask: u64,
    pub graph: Graph,
}

impl Labeled {
    /// Stable identifier such as `n4m27`.
    pub fn id(&self) -> String {
        format!("n{}m{}", self.graph.vertex_count(), self.mask)
    }
}

pub fn pair_list(n: usize) -> Vec<Edge> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
        .collect()
}

pub fn from_mask(n: usize, mask: u64) -> Graph {
    let edges = pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges_unchecked(n, edges)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("enumeration needs n >= 1".into()));
    }
    if n > cap || n > 11 {
        return Err(Error::CapExceeded {
            what: "graph enumeration",
            n,
            cap: cap.min(11),
        });
    }
    Ok(())
}

/// Every labeled simple graph on `n` vertices.
pub fn all_graphs(n: usize, cap: usize) -> Result<impl Iterator<Item = Labeled>> {
    check_cap(n, cap)?;
    let pairs = n * (n - 1) / 2;
    Ok((0..1u64 << pairs).map(move |mask| Labeled {
        mask,
        graph: from_mask(n, mask),
    }))
}

/// Every labeled connected simple graph on `n` vertices, capped at the default.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Labeled>> {
    enumerate_connected_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_connected_with_cap(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = Labeled>> {
    Ok(all_graphs(n, cap)?.filter(|l| l.graph.is_connected().unwrap_or(false)))
}

/// All connected labeled graphs with `min_n..=max_n` vertices.
pub fn connected_range(min_n: usize, max_n: usize) -> Result<Vec<Labeled>> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        out.extend(enumerate_connected_with_cap(n, max_n.max(DEFAULT_ENUMERATION_CAP))?);
    }
    Ok(out)
}

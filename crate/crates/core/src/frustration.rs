//! Bipartite edge frustration, maximum cut and the partition functional ρ.
//!
//! * `φ(G)`: fewest edges whose deletion leaves `G` bipartite, equal to
//!   `|E(G)| - maxcut(G)`.
//! * `ρ(G)`: minimum of `2 φ(G[A]) + |[A, V∖A]|` over nonempty `A ⊆ V(G)`.
//! * `ψ(G, H) = ρ(G) |E(H)| + 2 φ(H) |E(G)|`.
//!
//! All argmin/argmax witnesses are broken towards the numerically smallest
//! bitmask.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{chunk_bounds, Exec};
use crate::graph::{mask, Edge, Graph, VertexSet};

pub const MAX_CUT_CAP: usize = 24;
pub const RHO_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxCut {
    pub value: usize,
    /// The side containing vertex 0 (empty only for the empty graph).
    pub side: VertexSet,
    pub other: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrustrationResult {
    pub phi: usize,
    pub witness_coloring: (VertexSet, VertexSet),
    pub frustrated_edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoResult {
    pub rho: usize,
    pub witness_a: VertexSet,
    pub witness_b: VertexSet,
    pub witness_a1: VertexSet,
    pub witness_a2: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiResult {
    pub psi: usize,
    pub rho_g: usize,
    pub phi_h: usize,
    pub edges_g: usize,
    pub edges_h: usize,
}

fn check_cap(g: &Graph, what: &'static str, cap: usize) -> Result<()> {
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            what,
            n: g.vertex_count(),
            cap,
        });
    }
    Ok(())
}

pub fn max_cut_exact(g: &Graph) -> Result<MaxCut> {
    max_cut_exact_with(g, Exec::default())
}

pub fn max_cut_exact_with(g: &Graph, exec: Exec) -> Result<MaxCut> {
    check_cap(g, "exact max-cut", MAX_CUT_CAP)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(MaxCut {
            value: 0,
            side: VertexSet::new(0),
            other: VertexSet::new(0),
        });
    }
    let adj = g.adjacency_masks();
    let chunks = chunk_bounds(1u64 << (n - 1), exec);
    // maximize value, then minimize mask: minimize (-value, mask)
    let (neg_value, side) = exec
        .min_indexed(chunks.len(), |i| {
            let (lo, hi) = chunks[i];
            let mut best: Option<(i64, u64)> = None;
            walk_sides(&adj, lo, hi, |side, crossing| {
                let key = (-(crossing as i64), side);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            });
            best
        })
        .expect("nonempty search space");
    let side = VertexSet::from_mask(n, side);
    Ok(MaxCut {
        value: (-neg_value) as usize,
        other: side.complement(),
        side,
    })
}

/// Gray-code walk over sides `1 | gray(k) << 1`, passing each side's boundary.
fn walk_sides(adj: &[u64], lo: u64, hi: u64, mut visit: impl FnMut(u64, u32)) {
    let gray = |k: u64| k ^ (k >> 1);
    let mut side = 1 | gray(lo) << 1;
    let mut crossing = mask::boundary(adj, side);
    visit(side, crossing);
    for k in lo + 1..hi {
        let v = k.trailing_zeros() as usize + 1;
        let bit = 1u64 << v;
        let deg = adj[v].count_ones();
        if side & bit == 0 {
            crossing = crossing + deg - 2 * (adj[v] & side).count_ones();
            side |= bit;
        } else {
            side &= !bit;
            crossing = crossing + 2 * (adj[v] & side).count_ones() - deg;
        }
        visit(side, crossing);
    }
}

pub fn frustration(g: &Graph) -> Result<FrustrationResult> {
    let cut = max_cut_exact(g)?;
    let frustrated_edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| cut.side.contains(e.u) == cut.side.contains(e.v))
        .copied()
        .collect();
    debug_assert_eq!(frustrated_edges.len(), g.edge_count() - cut.value);
    Ok(FrustrationResult {
        phi: g.edge_count() - cut.value,
        witness_coloring: (cut.side, cut.other),
        frustrated_edges,
    })
}

pub fn rho(g: &Graph) -> Result<RhoResult> {
    rho_with(g, Exec::default())
}

/// Exact ρ by subset search. `inner[S]` counts edges inside `S`, so
/// `φ(G[A]) = min over A1 ⊆ A of inner[A1] + inner[A ∖ A1]` and
/// `|[A, V∖A]| = Σ_{v∈A} deg(v) - 2 inner[A]`.
pub fn rho_with(g: &Graph, exec: Exec) -> Result<RhoResult> {
    check_cap(g, "rho", RHO_CAP)?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let adj = g.adjacency_masks();
    let subsets = 1usize << n;
    let mut inner = vec![0u32; subsets];
    let mut degree_sum = vec![0u32; subsets];
    for s in 1..subsets {
        let v = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        inner[s] = inner[rest] + (adj[v] & rest as u64).count_ones();
        degree_sum[s] = degree_sum[rest] + adj[v].count_ones();
    }

    let phi_of = |a: usize| -> (u32, usize) {
        // smallest-mask A1 achieving the minimum
        let mut best = (inner[a], 0usize);
        let mut sub = a;
        while sub != 0 {
            let val = inner[sub] + inner[a & !sub];
            if (val, sub) < best {
                best = (val, sub);
            }
            sub = (sub - 1) & a;
        }
        best
    };

    let chunks = chunk_bounds(subsets as u64 - 1, exec);
    let (value, a) = exec
        .min_indexed(chunks.len(), |i| {
            let (lo, hi) = chunks[i];
            (lo + 1..hi + 1)
                .map(|a| {
                    let a = a as usize;
                    let (phi, _) = phi_of(a);
                    (2 * phi + degree_sum[a] - 2 * inner[a], a)
                })
                .min()
        })
        .expect("nonempty vertex set");
    let (_, a1) = phi_of(a);
    let a2 = a & !a1;
    let full = mask::full(n) as usize;
    let set = |m: usize| VertexSet::from_mask(n, m as u64);
    Ok(RhoResult {
        rho: value as usize,
        witness_a: set(a),
        witness_b: set(full & !a),
        witness_a1: set(a1),
        witness_a2: set(a2),
    })
}

pub fn psi(g: &Graph, h: &Graph) -> Result<PsiResult> {
    let rho_g = rho(g)?.rho;
    let phi_h = frustration(h)?.phi;
    Ok(PsiResult {
        psi: rho_g * h.edge_count() + 2 * phi_h * g.edge_count(),
        rho_g,
        phi_h,
        edges_g: g.edge_count(),
        edges_h: h.edge_count(),
    })
}

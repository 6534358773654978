//! Direct (tensor, Kronecker) products and their layer structure.
//!
//! `(g1, h1)` and `(g2, h2)` are adjacent in `G × H` when `g1 g2` is an edge
//! of `G` and `h1 h2` is an edge of `H`. Vertex `(g, h)` is stored at index
//! `g * |V(H)| + h`, so every H-layer is a contiguous index range.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    graph: Graph,
    n_g: usize,
    n_h: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LayerKind {
    /// `H_x = {(x, h) : h ∈ V(H)}`, anchored at `x ∈ V(G)`.
    H,
    /// `G_y = {(g, y) : g ∈ V(G)}`, anchored at `y ∈ V(H)`.
    G,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub kind: LayerKind,
    pub anchor: VertexId,
    pub vertices: VertexSet,
}

pub fn direct_product(g: &Graph, h: &Graph) -> Result<ProductGraph> {
    let (n_g, n_h) = (g.vertex_count(), h.vertex_count());
    if n_g == 0 || n_h == 0 {
        return Err(Error::EmptyGraph);
    }
    let idx = |a: usize, b: usize| a * n_h + b;
    let mut edges = Vec::with_capacity(2 * g.edge_count() * h.edge_count());
    for e in g.edges() {
        for f in h.edges() {
            edges.push(Edge::new(idx(e.u, f.u), idx(e.v, f.v)));
            edges.push(Edge::new(idx(e.u, f.v), idx(e.v, f.u)));
        }
    }
    Ok(ProductGraph {
        graph: Graph::from_edges_unchecked(n_g * n_h, edges),
        n_g,
        n_h,
    })
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn factor_orders(&self) -> (usize, usize) {
        (self.n_g, self.n_h)
    }

    pub fn index(&self, g: VertexId, h: VertexId) -> VertexId {
        debug_assert!(g < self.n_g && h < self.n_h);
        g * self.n_h + h
    }

    pub fn pair(&self, v: VertexId) -> (VertexId, VertexId) {
        (v / self.n_h, v % self.n_h)
    }

    pub fn layer(&self, kind: LayerKind, anchor: VertexId) -> Result<Layer> {
        let limit = match kind {
            LayerKind::H => self.n_g,
            LayerKind::G => self.n_h,
        };
        if anchor >= limit {
            return Err(Error::VertexOutOfRange {
                vertex: anchor,
                n: limit,
            });
        }
        let vertices = match kind {
            LayerKind::H => VertexSet::from_vertices(
                self.graph.vertex_count(),
                (0..self.n_h).map(|h| self.index(anchor, h)),
            ),
            LayerKind::G => VertexSet::from_vertices(
                self.graph.vertex_count(),
                (0..self.n_g).map(|g| self.index(g, anchor)),
            ),
        }?;
        Ok(Layer {
            kind,
            anchor,
            vertices,
        })
    }

    /// `S × T` as a set of product vertices.
    pub fn rectangle(&self, s: &VertexSet, t: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.graph.vertex_count());
        for a in s.iter() {
            for b in t.iter() {
                out.insert(self.index(a, b));
            }
        }
        out
    }
}

/// Weichsel's criterion: `G × H` is connected iff both factors are connected
/// and at least one is not bipartite. A factor without edges gives an
/// edgeless product, connected only when it is a single vertex.
pub fn weichsel_connected(g: &Graph, h: &Graph) -> bool {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return false;
    }
    if g.edge_count() == 0 || h.edge_count() == 0 {
        return g.vertex_count() * h.vertex_count() == 1;
    }
    g.is_connected().unwrap_or(false)
        && h.is_connected().unwrap_or(false)
        && !(g.is_bipartite() && h.is_bipartite())
}

/// The two components of `G × K2` for connected bipartite `G` with classes
/// `A` (containing vertex 0) and `B`, where `V(K2) = {0, 1}`:
/// `(A × {0}) ∪ (B × {1})` and `(A × {1}) ∪ (B × {0})`.
pub fn k2_components(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let (a, b) = g.bipartition().ok_or(Error::NotBipartite)?;
    let total = 2 * g.vertex_count();
    let mut first = VertexSet::new(total);
    let mut second = VertexSet::new(total);
    for x in a.iter() {
        first.insert(2 * x);
        second.insert(2 * x + 1);
    }
    for x in b.iter() {
        first.insert(2 * x + 1);
        second.insert(2 * x);
    }
    Ok((first, second))
}

//! Structural types of edge cuts in `G × H`.
//!
//! A cut is described by its black side. Types are checked on the given
//! coloring and on the swapped one:
//!
//! | type | black side |
//! |------|------------|
//! | 1 | `B' × V(H)` |
//! | 2 | `V(G) × B''` |
//! | 3 | a single vertex (or all but one) |
//! | 4 | `(A1 × C) ∪ (A2 × D)` with `A1 ⊔ A2 = V(G)`, `{C, D}` a bipartition of `H`, or the same with the factors' roles swapped; no layer in either direction is monochromatic |
//! | 5 | `(A1 × C) ∪ (A2 × D)` with the remaining H-layers `A0 × V(H)` white, `A0 ≠ ∅` |
//! | 6 | `(X × C1) ∪ (Y × C2)` for a bipartition `{X, Y}` of `G`, remaining G-layers `V(G) × C0` white, `C0 ≠ ∅` |
//! | 7 | as 5, with both entirely black and entirely white H-layers |
//! | 8 | as 6, with both entirely black and entirely white G-layers |
//!
//! Types 4, 5 and 7 read the H-layers `H_x`: each one is black, white, or
//! split along one fixed bipartition `{C, D}` of `H`. Types 4, 6 and 8 read
//! the G-layers in the same way against a bipartition of `G`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::connectivity::{brute_force_min_cut, enumerate_min_cuts, Cut};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::product::{direct_product, LayerKind, ProductGraph};

pub const LOW_TYPES: std::ops::RangeInclusive<u8> = 1..=6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Black,
    White,
}

/// Evidence for one matched type, enough to rebuild the black side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TypeWitness {
    /// The side colored `color` equals `side × V(H)`.
    Type1 { color: Color, side: VertexSet },
    /// The side colored `color` equals `V(G) × side`.
    Type2 { color: Color, side: VertexSet },
    /// The side colored `color` is the single vertex `vertex`.
    Type3 { color: Color, vertex: VertexId },
    /// Layers of `direction` read against the bipartition `{classes.0,
    /// classes.1}` of the factor they copy. The side colored `color` is the
    /// union of `anchor × classes.0` over `first`, `anchor × classes.1`
    /// over `second`, and the full layers anchored in `full`; layers
    /// anchored in `empty` carry none of it.
    Diagonal {
        cut_type: u8,
        direction: LayerKind,
        color: Color,
        classes: (VertexSet, VertexSet),
        first: VertexSet,
        second: VertexSet,
        full: VertexSet,
        empty: VertexSet,
    },
}

impl TypeWitness {
    pub fn cut_type(&self) -> u8 {
        match self {
            TypeWitness::Type1 { .. } => 1,
            TypeWitness::Type2 { .. } => 2,
            TypeWitness::Type3 { .. } => 3,
            TypeWitness::Diagonal { cut_type, .. } => *cut_type,
        }
    }

    /// Rebuilds the black side of the classified cut from the witness alone.
    pub fn reconstruct_black(&self, p: &ProductGraph) -> VertexSet {
        let (n_g, n_h) = p.factor_orders();
        let (side, color) = match self {
            TypeWitness::Type1 { color, side } => (p.rectangle(side, &VertexSet::full(n_h)), *color),
            TypeWitness::Type2 { color, side } => (p.rectangle(&VertexSet::full(n_g), side), *color),
            TypeWitness::Type3 { color, vertex } => {
                let mut s = VertexSet::new(n_g * n_h);
                s.insert(*vertex);
                (s, *color)
            }
            TypeWitness::Diagonal {
                direction,
                color,
                classes,
                first,
                second,
                full,
                ..
            } => {
                let (c, d) = classes;
                let s = match direction {
                    LayerKind::H => p
                        .rectangle(first, c)
                        .union(&p.rectangle(second, d))
                        .union(&p.rectangle(full, &VertexSet::full(n_h))),
                    LayerKind::G => p
                        .rectangle(c, first)
                        .union(&p.rectangle(d, second))
                        .union(&p.rectangle(&VertexSet::full(n_g), full)),
                };
                (s, *color)
            }
        };
        match color {
            Color::Black => side,
            Color::White => side.complement(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutTypeSet {
    pub matched: BTreeSet<u8>,
    /// Smallest matched type; `None` means the cut is unstructured.
    pub canonical: Option<u8>,
    pub witnesses: Vec<TypeWitness>,
}

impl CutTypeSet {
    pub fn is_structured(&self) -> bool {
        !self.matched.is_empty()
    }

    pub fn has_low_type(&self) -> bool {
        self.matched.iter().any(|t| LOW_TYPES.contains(t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum LayerState {
    Black,
    White,
    Split(VertexSet),
}

/// Color pattern of every layer of `kind`, indexed by anchor.
fn layer_states(p: &ProductGraph, black: &VertexSet, kind: LayerKind) -> Vec<LayerState> {
    let (n_g, n_h) = p.factor_orders();
    let (anchors, span) = match kind {
        LayerKind::H => (n_g, n_h),
        LayerKind::G => (n_h, n_g),
    };
    (0..anchors)
        .map(|a| {
            let mut part = VertexSet::new(span);
            for t in 0..span {
                let v = match kind {
                    LayerKind::H => p.index(a, t),
                    LayerKind::G => p.index(t, a),
                };
                if black.contains(v) {
                    part.insert(t);
                }
            }
            if part.is_empty() {
                LayerState::White
            } else if part.len() == span {
                LayerState::Black
            } else {
                LayerState::Split(part)
            }
        })
        .collect()
}

fn is_bipartition(f: &Graph, c: &VertexSet) -> bool {
    f.edges().iter().all(|e| c.contains(e.u) != c.contains(e.v))
}

/// Reads layers of `kind` against a bipartition of `factor` and reports the
/// diagonal type it forms, if any.
fn diagonal_witness(
    states: &[LayerState],
    factor: &Graph,
    kind: LayerKind,
) -> Option<TypeWitness> {
    let span = factor.vertex_count();
    let anchors = states.len();
    let c = states.iter().find_map(|s| match s {
        LayerState::Split(part) => Some(part.clone()),
        _ => None,
    })?;
    if !is_bipartition(factor, &c) {
        return None;
    }
    let d = c.complement();
    let mut first = VertexSet::new(anchors);
    let mut second = VertexSet::new(anchors);
    let mut full = VertexSet::new(anchors);
    let mut empty = VertexSet::new(anchors);
    for (a, s) in states.iter().enumerate() {
        match s {
            LayerState::Black => full.insert(a),
            LayerState::White => empty.insert(a),
            LayerState::Split(part) if *part == c => first.insert(a),
            LayerState::Split(part) if *part == d => second.insert(a),
            LayerState::Split(_) => return None,
        }
    }
    debug_assert_eq!(span, c.universe());
    let (cut_type, color) = match (full.is_empty(), empty.is_empty()) {
        (true, true) if !first.is_empty() && !second.is_empty() => (4, Color::Black),
        (true, true) => return None,
        (true, false) => (if kind == LayerKind::H { 5 } else { 6 }, Color::Black),
        (false, true) => {
            // swap colors: the complement has white layers where these are black
            std::mem::swap(&mut full, &mut empty);
            std::mem::swap(&mut first, &mut second);
            (if kind == LayerKind::H { 5 } else { 6 }, Color::White)
        }
        (false, false) => (if kind == LayerKind::H { 7 } else { 8 }, Color::Black),
    };
    Some(TypeWitness::Diagonal {
        cut_type,
        direction: kind,
        color,
        classes: (c, d),
        first,
        second,
        full,
        empty,
    })
}

pub fn classify_cut(g: &Graph, h: &Graph, cut: &Cut) -> Result<CutTypeSet> {
    let p = direct_product(g, h)?;
    classify_black(&p, g, h, &cut.black, &cut.white)
}

/// Classifies the partition with the given black side.
pub fn classify_black_side(g: &Graph, h: &Graph, black: &VertexSet) -> Result<CutTypeSet> {
    let p = direct_product(g, h)?;
    classify_black(&p, g, h, black, &black.complement())
}

fn classify_black(
    p: &ProductGraph,
    g: &Graph,
    h: &Graph,
    black: &VertexSet,
    white: &VertexSet,
) -> Result<CutTypeSet> {
    let n = p.graph().vertex_count();
    if black.universe() != n || white.universe() != n {
        return Err(Error::MalformedPartition(format!(
            "sets must range over the {n} product vertices"
        )));
    }
    if !black.is_disjoint(white) || black.len() + white.len() != n {
        return Err(Error::MalformedPartition(
            "black and white must partition the product".into(),
        ));
    }
    if black.is_empty() || white.is_empty() {
        return Err(Error::MalformedPartition("one side is empty".into()));
    }

    let mut witnesses = Vec::new();
    let h_states = layer_states(p, black, LayerKind::H);
    let g_states = layer_states(p, black, LayerKind::G);

    if h_states.iter().all(|s| !matches!(s, LayerState::Split(_))) {
        let side = VertexSet::from_vertices(
            g.vertex_count(),
            h_states
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == LayerState::Black)
                .map(|(x, _)| x),
        )?;
        witnesses.push(TypeWitness::Type1 {
            color: Color::Black,
            side,
        });
    }
    if g_states.iter().all(|s| !matches!(s, LayerState::Split(_))) {
        let side = VertexSet::from_vertices(
            h.vertex_count(),
            g_states
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == LayerState::Black)
                .map(|(y, _)| y),
        )?;
        witnesses.push(TypeWitness::Type2 {
            color: Color::Black,
            side,
        });
    }
    if black.len() == 1 {
        witnesses.push(TypeWitness::Type3 {
            color: Color::Black,
            vertex: black.iter().next().unwrap(),
        });
    } else if white.len() == 1 {
        witnesses.push(TypeWitness::Type3 {
            color: Color::White,
            vertex: white.iter().next().unwrap(),
        });
    }

    let h_diag = diagonal_witness(&h_states, h, LayerKind::H);
    let g_diag = diagonal_witness(&g_states, g, LayerKind::G);
    witnesses.extend(h_diag);
    witnesses.extend(g_diag);
    witnesses.sort_by_key(TypeWitness::cut_type);
    witnesses.dedup_by_key(|w| w.cut_type());

    let matched: BTreeSet<u8> = witnesses.iter().map(TypeWitness::cut_type).collect();
    Ok(CutTypeSet {
        canonical: matched.iter().next().copied(),
        matched,
        witnesses,
    })
}

/// Whether `g` is a path on three vertices or a 4-cycle (any labeling).
pub fn is_p3_or_c4(g: &Graph) -> bool {
    let connected = g.vertex_count() > 0 && g.is_connected().unwrap_or(false);
    match (g.vertex_count(), g.edge_count()) {
        (3, 2) => connected,
        (4, 4) => connected && (0..4).all(|v| g.degree(v) == 2),
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedCut {
    pub cut: Cut,
    pub types: CutTypeSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub lambda: usize,
    /// A factor is P3 or C4, where unstructured minimum cuts are allowed.
    pub exempt: bool,
    pub cuts: Vec<ClassifiedCut>,
    pub unstructured: usize,
    pub violation: bool,
    pub low_type_exists: bool,
}

/// Classifies every minimum cut of `G × H` (sides connected).
pub fn check_structure_theorem(g: &Graph, h: &Graph) -> Result<StructureReport> {
    let p = direct_product(g, h)?;
    let lambda = brute_force_min_cut(p.graph())?.lambda;
    let mut cuts = Vec::new();
    for cut in enumerate_min_cuts(p.graph())? {
        let types = classify_black(&p, g, h, &cut.black, &cut.white)?;
        cuts.push(ClassifiedCut { cut, types });
    }
    let exempt = is_p3_or_c4(g) || is_p3_or_c4(h);
    let unstructured = cuts.iter().filter(|c| !c.types.is_structured()).count();
    Ok(StructureReport {
        lambda,
        exempt,
        violation: lambda > 0 && !exempt && unstructured > 0,
        low_type_exists: cuts.iter().any(|c| c.types.has_low_type()),
        unstructured,
        cuts,
    })
}

pub fn exists_low_type_min_cut(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(check_structure_theorem(g, h)?.low_type_exists)
}

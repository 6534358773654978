//! Closed-form edge connectivity of `G × H` and witness cuts for each term:
//!
//! `λ(G × H) = min{ 2λ(G)|E(H)|, 2λ(H)|E(G)|, δ(G)δ(H), ψ(G, H), ψ(H, G) }`.

use serde::Serialize;

use crate::connectivity::{brute_force_min_cut, edge_connectivity, Cut, BRUTE_FORCE_CAP};
use crate::error::{Error, Result};
use crate::frustration::{frustration, psi, rho};
use crate::graph::{Graph, VertexSet};
use crate::product::{direct_product, ProductGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Term {
    Type1,
    Type2,
    Delta,
    PsiGh,
    PsiHg,
}

impl Term {
    pub const ALL: [Term; 5] = [Term::Type1, Term::Type2, Term::Delta, Term::PsiGh, Term::PsiHg];
    /// Order in which ties are resolved when picking the witness.
    pub const WITNESS_ORDER: [Term; 5] =
        [Term::Delta, Term::Type1, Term::Type2, Term::PsiGh, Term::PsiHg];

    pub fn label(self) -> &'static str {
        match self {
            Term::Type1 => "type1",
            Term::Type2 => "type2",
            Term::Delta => "delta",
            Term::PsiGh => "psi_gh",
            Term::PsiHg => "psi_hg",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaBreakdown {
    pub term_type1: usize,
    pub term_type2: usize,
    pub term_delta: usize,
    pub term_psi_gh: usize,
    pub term_psi_hg: usize,
    pub lambda: usize,
    pub achieving_terms: Vec<Term>,
    /// A cut of the product of size `lambda`; absent when `lambda == 0`.
    pub witness: Option<Cut>,
}

impl FormulaBreakdown {
    pub fn term(&self, t: Term) -> usize {
        match t {
            Term::Type1 => self.term_type1,
            Term::Type2 => self.term_type2,
            Term::Delta => self.term_delta,
            Term::PsiGh => self.term_psi_gh,
            Term::PsiHg => self.term_psi_hg,
        }
    }
}

/// λ of a factor, with the single-vertex graph taken as 0.
fn factor_lambda(g: &Graph) -> Result<usize> {
    match g.vertex_count() {
        0 => Err(Error::EmptyGraph),
        1 => Ok(0),
        _ => Ok(edge_connectivity(g)?.lambda),
    }
}

fn check_product_size(g: &Graph, h: &Graph) -> Result<()> {
    let n = g.vertex_count() * h.vertex_count();
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if n < 2 {
        return Err(Error::TooFewVertices { need: 2, got: n });
    }
    Ok(())
}

pub fn lambda_product_formula(g: &Graph, h: &Graph) -> Result<FormulaBreakdown> {
    check_product_size(g, h)?;
    let (eg, eh) = (g.edge_count(), h.edge_count());
    let term_type1 = 2 * factor_lambda(g)? * eh;
    let term_type2 = 2 * factor_lambda(h)? * eg;
    let term_delta = g.min_degree()? * h.min_degree()?;
    let term_psi_gh = psi(g, h)?.psi;
    let term_psi_hg = psi(h, g)?.psi;

    let mut out = FormulaBreakdown {
        term_type1,
        term_type2,
        term_delta,
        term_psi_gh,
        term_psi_hg,
        lambda: 0,
        achieving_terms: Vec::new(),
        witness: None,
    };
    out.lambda = Term::ALL.iter().map(|&t| out.term(t)).min().unwrap();
    out.achieving_terms = Term::ALL
        .into_iter()
        .filter(|&t| out.term(t) == out.lambda)
        .collect();
    if out.lambda > 0 {
        for t in Term::WITNESS_ORDER {
            if !out.achieving_terms.contains(&t) {
                continue;
            }
            if let Some(cut) = construct_cut(g, h, t)? {
                if cut.size() == out.lambda {
                    out.witness = Some(cut);
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// The construction for one term, or `None` when it does not yield two
/// nonempty sides.
pub fn construct_cut(g: &Graph, h: &Graph, term: Term) -> Result<Option<Cut>> {
    match term {
        Term::Type1 => construct_type1_cut(g, h).map(Some),
        Term::Type2 => construct_type2_cut(g, h).map(Some),
        Term::Delta => construct_delta_cut(g, h).map(Some),
        Term::PsiGh => Ok(construct_psi_cut(g, h)?.cut),
        Term::PsiHg => Ok(construct_psi_cut_transposed(g, h)?.cut),
    }
}

fn connected_min_cut_side(g: &Graph) -> Result<VertexSet> {
    let res = edge_connectivity(g)?;
    res.witness.map(|w| w.black).ok_or(Error::Disconnected)
}

/// Black side `X × V(H)` for a minimum-cut side `X` of `G`; size `2λ(G)|E(H)|`.
pub fn construct_type1_cut(g: &Graph, h: &Graph) -> Result<Cut> {
    let x = connected_min_cut_side(g)?;
    let p = direct_product(g, h)?;
    let black = p.rectangle(&x, &VertexSet::full(h.vertex_count()));
    Cut::from_black(p.graph(), black)
}

/// Black side `V(G) × Y` for a minimum-cut side `Y` of `H`; size `2λ(H)|E(G)|`.
pub fn construct_type2_cut(g: &Graph, h: &Graph) -> Result<Cut> {
    let y = connected_min_cut_side(h)?;
    let p = direct_product(g, h)?;
    let black = p.rectangle(&VertexSet::full(g.vertex_count()), &y);
    Cut::from_black(p.graph(), black)
}

/// The edges around a vertex `(u, v)` of minimum product degree `δ(G)δ(H)`.
pub fn construct_delta_cut(g: &Graph, h: &Graph) -> Result<Cut> {
    check_product_size(g, h)?;
    let min_vertex = |f: &Graph| (0..f.vertex_count()).min_by_key(|&v| (f.degree(v), v)).unwrap();
    let p = direct_product(g, h)?;
    let v = p.index(min_vertex(g), min_vertex(h));
    Cut::from_black(p.graph(), VertexSet::from_vertices(p.graph().vertex_count(), [v])?)
}

/// Result of the diagonal construction behind `ψ(G, H)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiConstruction {
    /// `ψ(G, H)`, an upper bound on the size of `cut`.
    pub psi: usize,
    /// `None` when the assignment leaves one side empty.
    pub cut: Option<Cut>,
}

/// Colors `(A1 × C) ∪ (A2 × D)` black and everything else white, where
/// `{A, B}` attains `ρ(G)`, `A = A1 ∪ A2` attains `φ(G[A])` and `{C, D}`
/// attains `φ(H)`.
pub fn construct_psi_cut(g: &Graph, h: &Graph) -> Result<PsiConstruction> {
    let p = direct_product(g, h)?;
    let bound = psi(g, h)?.psi;
    let r = rho(g)?;
    let (c, d) = frustration(h)?.witness_coloring;
    let black = p
        .rectangle(&r.witness_a1, &c)
        .union(&p.rectangle(&r.witness_a2, &d));
    Ok(PsiConstruction {
        psi: bound,
        cut: side_cut(&p, black)?,
    })
}

/// The `ψ(H, G)` construction, expressed in the vertex encoding of `G × H`.
pub fn construct_psi_cut_transposed(g: &Graph, h: &Graph) -> Result<PsiConstruction> {
    let swapped = construct_psi_cut(h, g)?;
    let p = direct_product(g, h)?;
    let cut = match swapped.cut {
        None => None,
        Some(c) => {
            let (n_g, n_h) = (g.vertex_count(), h.vertex_count());
            let black = VertexSet::from_vertices(
                n_g * n_h,
                // (y, x) in H × G sits at y * n_g + x
                c.black.iter().map(|v| p.index(v % n_g, v / n_g)),
            )?;
            side_cut(&p, black)?
        }
    };
    Ok(PsiConstruction {
        psi: swapped.psi,
        cut,
    })
}

fn side_cut(p: &ProductGraph, black: VertexSet) -> Result<Option<Cut>> {
    if black.is_empty() || black.len() == p.graph().vertex_count() {
        return Ok(None);
    }
    Cut::from_black(p.graph(), black).map(Some)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Oracle {
    /// Exhaustive bipartition scan (products up to 20 vertices).
    BruteForce,
    /// Deterministic Stoer–Wagner.
    MinCutAlgorithm,
}

impl Oracle {
    /// Brute force when the product is small enough, otherwise Stoer–Wagner.
    pub fn auto(product_order: usize) -> Oracle {
        if product_order <= BRUTE_FORCE_CAP {
            Oracle::BruteForce
        } else {
            Oracle::MinCutAlgorithm
        }
    }

    pub fn lambda(self, g: &Graph) -> Result<usize> {
        match self {
            Oracle::BruteForce => Ok(brute_force_min_cut(g)?.lambda),
            Oracle::MinCutAlgorithm => Ok(edge_connectivity(g)?.lambda),
        }
    }
}

/// Size of one term's construction next to the closed-form value it targets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionCheck {
    pub term: Term,
    pub term_value: usize,
    /// `None` when the construction does not produce a proper cut.
    pub cut_size: Option<usize>,
    pub separates: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub formula: usize,
    pub oracle: usize,
    pub oracle_kind: Oracle,
    pub equal: bool,
    pub breakdown: FormulaBreakdown,
    pub constructions: Vec<ConstructionCheck>,
    /// The smallest constructed cut.
    pub best_witness: Option<Cut>,
}

pub fn verify_formula(g: &Graph, h: &Graph) -> Result<VerifyReport> {
    let n = g.vertex_count() * h.vertex_count();
    verify_formula_with(g, h, Oracle::auto(n))
}

pub fn verify_formula_with(g: &Graph, h: &Graph, oracle_kind: Oracle) -> Result<VerifyReport> {
    let breakdown = lambda_product_formula(g, h)?;
    let p = direct_product(g, h)?;
    let oracle = oracle_kind.lambda(p.graph())?;

    let connected = |f: &Graph| f.vertex_count() >= 2 && f.is_connected().unwrap_or(false);
    let mut constructions = Vec::new();
    let mut best_witness: Option<Cut> = None;
    for term in Term::ALL {
        let applicable = match term {
            Term::Type1 => connected(g),
            Term::Type2 => connected(h),
            _ => true,
        };
        let cut = if applicable { construct_cut(g, h, term)? } else { None };
        constructions.push(ConstructionCheck {
            term,
            term_value: breakdown.term(term),
            cut_size: cut.as_ref().map(Cut::size),
            separates: cut.as_ref().is_some_and(|c| c.separates(p.graph())),
        });
        if let Some(c) = cut {
            if best_witness.as_ref().is_none_or(|b| c.size() < b.size()) {
                best_witness = Some(c);
            }
        }
    }
    Ok(VerifyReport {
        formula: breakdown.lambda,
        oracle,
        oracle_kind,
        equal: breakdown.lambda == oracle,
        breakdown,
        constructions,
        best_witness,
    })
}

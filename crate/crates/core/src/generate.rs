//! Deterministic graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A named family together with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Hypercube(u32),
    Petersen,
    Random { n: usize, p: f64, seed: u64 },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Complete(n) => complete(n),
        Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
        Family::Hypercube(d) => hypercube(d),
        Family::Petersen => Ok(petersen()),
        Family::Random { n, p, seed } => random(n, p, seed),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs at least 1 vertex".into()));
    }
    Ok(Graph::from_edges_unchecked(
        n,
        (1..n).map(|v| Edge::new(v - 1, v)).collect(),
    ))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Ok(Graph::from_edges_unchecked(
        n,
        (0..n).map(|v| Edge::new(v, (v + 1) % n)).collect(),
    ))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs at least 1 vertex".into()));
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
        .collect();
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// K_{a,b} with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("both sides of K_{a,b} must be nonempty".into()));
    }
    let edges = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| Edge::new(u, v)))
        .collect();
    Ok(Graph::from_edges_unchecked(a + b, edges))
}

pub fn hypercube(d: u32) -> Result<Graph> {
    if d > 16 {
        return Err(Error::InvalidParameter(format!("hypercube dimension {d} above 16")));
    }
    let n = 1usize << d;
    let edges = (0..n)
        .flat_map(|v| (0..d).map(move |i| (v, v ^ (1 << i))))
        .filter(|&(v, w)| v < w)
        .map(|(v, w)| Edge::new(v, w))
        .collect();
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push(Edge::new(i, (i + 1) % 5));
        edges.push(Edge::new(5 + i, 5 + (i + 2) % 5));
        edges.push(Edge::new(i, i + 5));
    }
    Graph::from_edges_unchecked(10, edges)
}

/// Erdős–Rényi G(n, p) from a ChaCha8 stream seeded with `seed`.
pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_with(n, p, &mut rng)
}

pub fn random_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push(Edge::new(u, v));
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// Draws G(n, p) until the sample is connected.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if n == 0 || p <= 0.0 && n > 1 {
        return Err(Error::InvalidParameter(
            "a connected sample needs n >= 1 and p > 0 (for n > 1)".into(),
        ));
    }
    loop {
        let g = random_with(n, p, rng)?;
        if g.is_connected()? {
            return Ok(g);
        }
    }
}

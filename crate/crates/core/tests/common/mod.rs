//! Naive reference implementations used as oracles by the integration tests.
//! Nothing here calls into the algorithms under test beyond reading a graph's
//! vertex count and edge list.

#![allow(dead_code)]

use prodcut::Graph;

pub fn edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

/// Adjacency matrix built straight from the edge list.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in edge_pairs(g) {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Number of connected components by repeated flood fill over the matrix.
pub fn component_count(g: &Graph) -> usize {
    components(g).len()
}

/// Components as sorted vertex lists, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let m = matrix(g);
    let n = m.len();
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[s] = id;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for (w, &adj) in m[v].iter().enumerate() {
                if adj && label[w] == usize::MAX {
                    label[w] = id;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A graph has an odd closed walk iff it is not bipartite. Tracks which
/// vertices are reachable from `s` by walks of each parity.
pub fn has_odd_closed_walk(g: &Graph) -> bool {
    let m = matrix(g);
    let n = m.len();
    (0..n).any(|s| {
        let mut even = vec![false; n];
        let mut odd = vec![false; n];
        even[s] = true;
        for _ in 0..2 * n {
            let mut ne = even.clone();
            let mut no = odd.clone();
            for v in 0..n {
                for w in 0..n {
                    if m[v][w] {
                        no[w] |= even[v];
                        ne[w] |= odd[v];
                    }
                }
            }
            even = ne;
            odd = no;
        }
        odd[s]
    })
}

/// `|E| - maxcut`, by trying every 2-coloring.
pub fn naive_phi(n: usize, edges: &[(usize, usize)]) -> usize {
    if n == 0 {
        return 0;
    }
    (0u32..1 << n)
        .map(|c| {
            edges
                .iter()
                .filter(|&&(u, v)| (c >> u & 1) == (c >> v & 1))
                .count()
        })
        .min()
        .unwrap()
}

pub fn naive_max_cut(n: usize, edges: &[(usize, usize)]) -> usize {
    edges.len() - naive_phi(n, edges)
}

/// Edges of `G[A]` renumbered onto `0..|A|`.
pub fn naive_induced(edges: &[(usize, usize)], a: &[usize]) -> Vec<(usize, usize)> {
    let pos = |x: usize| a.iter().position(|&y| y == x);
    edges
        .iter()
        .filter_map(|&(u, v)| Some((pos(u)?, pos(v)?)))
        .collect()
}

/// min over nonempty `A` of `2 phi(G[A]) + |[A, V \ A]|`.
pub fn naive_rho(g: &Graph) -> usize {
    let n = g.vertex_count();
    let edges = edge_pairs(g);
    (1u32..1 << n)
        .map(|s| {
            let a: Vec<usize> = (0..n).filter(|&x| s >> x & 1 == 1).collect();
            let inner = naive_induced(&edges, &a);
            let crossing = edges
                .iter()
                .filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1))
                .count();
            2 * naive_phi(a.len(), &inner) + crossing
        })
        .min()
        .unwrap()
}

/// Minimum number of crossing edges over all proper bipartitions.
/// Zero for disconnected graphs.
pub fn naive_lambda(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!((2..=24).contains(&n));
    let edges = edge_pairs(g);
    (1u32..(1 << n) - 1)
        .map(|s| {
            edges
                .iter()
                .filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1))
                .count()
        })
        .min()
        .unwrap()
}

/// `c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)`.
pub fn connected_counts(max_n: usize) -> Vec<u64> {
    let binom = |n: u64, k: u64| -> u64 { (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1)) };
    let pairs = |n: u64| n * n.saturating_sub(1) / 2;
    let mut c = vec![0u64; max_n + 1];
    for n in 1..=max_n as u64 {
        let mut v = 1u64 << pairs(n);
        for k in 1..n {
            v -= binom(n - 1, k - 1) * c[k as usize] * (1u64 << pairs(n - k));
        }
        c[n as usize] = v;
    }
    c
}

/// Adjacency of `G × H` straight from the definition, on pairs `(g, h)`.
pub fn naive_product_adjacent(g: &Graph, h: &Graph, a: (usize, usize), b: (usize, usize)) -> bool {
    let (mg, mh) = (matrix(g), matrix(h));
    mg[a.0][b.0] && mh[a.1][b.1]
}

pub fn is_path3(g: &Graph) -> bool {
    let mut d: Vec<usize> = matrix(g)
        .iter()
        .map(|row| row.iter().filter(|&&x| x).count())
        .collect();
    d.sort_unstable();
    d == [1, 1, 2]
}

pub fn is_cycle4(g: &Graph) -> bool {
    let m = matrix(g);
    g.vertex_count() == 4
        && m.iter().all(|row| row.iter().filter(|&&x| x).count() == 2)
        && component_count(g) == 1
}

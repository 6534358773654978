mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use prodcut::connectivity::{brute_force_min_cut, edge_connectivity, enumerate_min_cuts};
use prodcut::enumerate::{all_graphs, connected_range, enumerate_connected_with_cap};
use prodcut::formula::lambda_product_formula;
use prodcut::frustration::{frustration, max_cut_exact, rho};
use prodcut::generate::{complete, cycle, random_with};
use prodcut::product::direct_product;
use prodcut::structure::{check_structure_theorem, classify_black_side, classify_cut};
use prodcut::{Exec, Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

#[test]
fn connected_counts_match_recurrence() {
    let expected = connected_counts(5);
    assert_eq!(&expected[1..], &[1, 1, 4, 38, 728]);
    for (n, &want) in expected.iter().enumerate().skip(1) {
        let got = enumerate_connected_with_cap(n, 5).unwrap().count() as u64;
        assert_eq!(got, want, "n = {n}");
    }
    assert_eq!(connected_range(2, 4).unwrap().len(), 43);
}

#[test]
fn connectivity_and_bipartiteness_match_naive_checks() {
    for n in 1..=6 {
        for lg in all_graphs(n, 6).unwrap() {
            let g = &lg.graph;
            assert_eq!(g.is_connected().unwrap(), component_count(g) == 1);
            assert_eq!(g.connected_components().unwrap().len(), component_count(g));
            assert_eq!(g.is_bipartite(), !has_odd_closed_walk(g), "{}", lg.id());
        }
    }
}

#[test]
fn stoer_wagner_matches_bipartition_scan_exhaustively() {
    for n in 2..=5 {
        for lg in all_graphs(n, 5).unwrap() {
            let g = &lg.graph;
            let want = naive_lambda(g);
            assert_eq!(edge_connectivity(g).unwrap().lambda, want, "{}", lg.id());
            assert_eq!(brute_force_min_cut(g).unwrap().lambda, want, "{}", lg.id());
        }
    }
}

#[test]
fn stoer_wagner_matches_bipartition_scan_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for i in 0..400 {
        let n = 6 + i % 5;
        let p = [0.3, 0.5, 0.7][i % 3];
        let g = random_with(n, p, &mut rng).unwrap();
        let want = naive_lambda(&g);
        let sw = edge_connectivity(&g).unwrap();
        assert_eq!(sw.lambda, want);
        if let Some(w) = sw.witness {
            assert_eq!(w.size(), want);
            assert!(w.separates(&g));
        }
        assert_eq!(brute_force_min_cut(&g).unwrap().lambda, want);
    }
}

#[test]
fn frustration_matches_coloring_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..300 {
        let n = 1 + i % 10;
        let g = random_with(n, 0.5, &mut rng).unwrap();
        let edges = edge_pairs(&g);
        let phi = naive_phi(n, &edges);
        let f = frustration(&g).unwrap();
        assert_eq!(f.phi, phi);
        assert_eq!(f.frustrated_edges.len(), phi);
        assert_eq!(max_cut_exact(&g).unwrap().value, naive_max_cut(n, &edges));
        // the reported coloring really leaves exactly phi edges monochromatic
        let (c, _) = &f.witness_coloring;
        let mono = edges
            .iter()
            .filter(|&&(u, v)| c.contains(u) == c.contains(v))
            .count();
        assert_eq!(mono, phi);
    }
}

#[test]
fn rho_matches_naive_partition_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for i in 0..200 {
        let n = 1 + i % 8;
        let g = random_with(n, 0.5, &mut rng).unwrap();
        let r = rho(&g).unwrap();
        assert_eq!(r.rho, naive_rho(&g));
        // witnesses reproduce the value
        let a = r.witness_a.to_vec();
        let inner = naive_induced(&edge_pairs(&g), &a);
        let crossing = g.boundary_size(&r.witness_a);
        assert_eq!(r.rho, 2 * naive_phi(a.len(), &inner) + crossing);
        assert_eq!(r.witness_a1.union(&r.witness_a2), r.witness_a);
        assert!(r.witness_a1.is_disjoint(&r.witness_a2));
    }
}

#[test]
fn product_matches_definition_and_degrees_multiply() {
    let graphs: Vec<Graph> = (1..=4)
        .flat_map(|n| all_graphs(n, 4).unwrap().map(|l| l.graph))
        .collect();
    for g in graphs.iter().step_by(3) {
        for h in graphs.iter().step_by(5) {
            let p = direct_product(g, h).unwrap();
            let (ng, nh) = (g.vertex_count(), h.vertex_count());
            assert_eq!(p.graph().edge_count(), 2 * g.edge_count() * h.edge_count());
            for a in 0..ng * nh {
                let pa = (a / nh, a % nh);
                assert_eq!(p.pair(a), pa);
                assert_eq!(p.graph().degree(a), g.degree(pa.0) * h.degree(pa.1));
                for b in 0..ng * nh {
                    let pb = (b / nh, b % nh);
                    assert_eq!(p.graph().has_edge(a, b), naive_product_adjacent(g, h, pa, pb));
                }
            }
        }
    }
}

#[test]
fn product_lambda_is_symmetric_and_bounded_by_min_degree() {
    let graphs = connected_range(2, 4).unwrap();
    for g in &graphs {
        for h in &graphs {
            let gh = direct_product(&g.graph, &h.graph).unwrap();
            let hg = direct_product(&h.graph, &g.graph).unwrap();
            let l1 = brute_force_min_cut(gh.graph()).unwrap().lambda;
            let l2 = brute_force_min_cut(hg.graph()).unwrap().lambda;
            assert_eq!(l1, l2);
            assert!(l1 <= gh.graph().min_degree().unwrap());
            let f1 = lambda_product_formula(&g.graph, &h.graph).unwrap();
            let f2 = lambda_product_formula(&h.graph, &g.graph).unwrap();
            assert_eq!(f1.lambda, f2.lambda);
            assert_eq!((f1.term_type1, f1.term_psi_gh), (f2.term_type2, f2.term_psi_hg));
        }
    }
}

#[test]
fn enumerated_min_cuts_match_naive_listing() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for i in 0..150 {
        let n = 2 + i % 8;
        let g = random_with(n, 0.5, &mut rng).unwrap();
        let lambda = naive_lambda(&g);
        let mut want = BTreeSet::new();
        for s in 1u32..(1 << n) - 1 {
            if s & 1 == 0 {
                continue;
            }
            let black = VertexSet::from_mask(n, s as u64);
            let white = black.complement();
            let size = g.boundary_size(&black);
            let sides_connected = [&black, &white].iter().all(|side| {
                let (sub, _) = g.induced_subgraph(side);
                component_count(&sub) == 1
            });
            if size == lambda && sides_connected {
                want.insert(black.to_vec());
            }
        }
        let got: BTreeSet<Vec<usize>> = enumerate_min_cuts(&g)
            .unwrap()
            .into_iter()
            .map(|c| c.black.to_vec())
            .collect();
        assert_eq!(got, want);
    }
}

/// Black sides of the diagonal patterns: every layer of the chosen direction
/// is black, white, or one of the two classes of a bipartition.
fn diagonal_types(g: &Graph, h: &Graph, black: &VertexSet) -> BTreeSet<u8> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut out = BTreeSet::new();
    for (anchors, span, factor, along_h) in [(ng, nh, h, true), (nh, ng, g, false)] {
        let fedges = edge_pairs(factor);
        for c in 1u32..(1 << span) - 1 {
            if !fedges.iter().all(|&(u, v)| (c >> u & 1) != (c >> v & 1)) {
                continue;
            }
            for code in 0u32..4u32.pow(anchors as u32) {
                let states: Vec<u32> = (0..anchors).map(|a| code / 4u32.pow(a as u32) % 4).collect();
                let mut pattern = VertexSet::new(ng * nh);
                for (a, &st) in states.iter().enumerate() {
                    for t in 0..span {
                        let in_c = c >> t & 1 == 1;
                        let on = match st {
                            0 => true,
                            1 => false,
                            2 => in_c,
                            _ => !in_c,
                        };
                        if on {
                            pattern.insert(if along_h { a * nh + t } else { t * nh + a });
                        }
                    }
                }
                if pattern != *black {
                    continue;
                }
                let full = states.contains(&0);
                let empty = states.contains(&1);
                let split = states.iter().any(|&s| s >= 2);
                let both = states.contains(&2) && states.contains(&3);
                let t = match (full, empty) {
                    (false, false) if both => 4,
                    (false, false) => continue,
                    (true, true) if split => 7,
                    _ if split => 5,
                    _ => continue,
                };
                out.insert(if t == 4 || along_h { t } else { t + 1 });
            }
        }
    }
    out
}

fn naive_types(g: &Graph, h: &Graph, black: &VertexSet) -> BTreeSet<u8> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut out = diagonal_types(g, h, black);
    let h_mono = (0..ng).all(|x| (0..nh).all(|y| black.contains(x * nh + y) == black.contains(x * nh)));
    let g_mono = (0..nh).all(|y| (0..ng).all(|x| black.contains(x * nh + y) == black.contains(y)));
    if h_mono {
        out.insert(1);
    }
    if g_mono {
        out.insert(2);
    }
    if black.len() == 1 || black.len() == ng * nh - 1 {
        out.insert(3);
    }
    out
}

#[test]
fn classification_matches_pattern_enumeration() {
    let graphs = connected_range(2, 4).unwrap();
    let mut seen = BTreeSet::new();
    for g in &graphs {
        for h in &graphs {
            for cut in enumerate_min_cuts(direct_product(&g.graph, &h.graph).unwrap().graph()).unwrap() {
                let types = classify_cut(&g.graph, &h.graph, &cut).unwrap();
                let want = naive_types(&g.graph, &h.graph, &cut.black);
                assert_eq!(types.matched, want, "{} x {} black {:?}", g.id(), h.id(), cut.black.to_vec());
                seen.extend(want);
            }
        }
    }
    // minimum cuts along a whole factor never win at this size
    assert_eq!(seen, BTreeSet::from([3, 4, 5, 6]));
}

#[test]
fn witnesses_rebuild_the_classified_cut() {
    let graphs = connected_range(2, 4).unwrap();
    for g in graphs.iter().step_by(2) {
        for h in &graphs {
            let p = direct_product(&g.graph, &h.graph).unwrap();
            for cut in enumerate_min_cuts(p.graph()).unwrap() {
                let types = classify_cut(&g.graph, &h.graph, &cut).unwrap();
                for w in &types.witnesses {
                    assert_eq!(w.reconstruct_black(&p), cut.black, "type {}", w.cut_type());
                }
            }
        }
    }
}

#[test]
fn mixed_layer_types_recolor_to_lower_types() {
    // G-layers of C6 x K3 read against the bipartition evens / odds of C6
    let c6 = cycle(6).unwrap();
    let k3 = complete(3).unwrap();
    let p = direct_product(&c6, &k3).unwrap();
    let evens = VertexSet::from_vertices(6, [0, 2, 4]).unwrap();
    let layer = |y: usize| VertexSet::from_vertices(3, [y]).unwrap();
    let split = p.rectangle(&evens, &layer(0));
    let full = p.rectangle(&VertexSet::full(6), &layer(1));

    let t8 = classify_black_side(&c6, &k3, &split.union(&full)).unwrap();
    assert_eq!(t8.canonical, Some(8));
    // whitening the full layer leaves a type 6 cut
    let t6 = classify_black_side(&c6, &k3, &split).unwrap();
    assert!(t6.matched.contains(&6) && !t6.matched.contains(&8));
    // and blackening it from the other side as well
    let t6 = classify_black_side(&c6, &k3, &split.union(&full).union(&p.rectangle(&VertexSet::full(6), &layer(2)))).unwrap();
    assert!(t6.matched.contains(&6) && !t6.matched.contains(&8));
}

#[test]
fn mixed_type_min_cuts_come_with_low_type_min_cuts() {
    let graphs = connected_range(2, 4).unwrap();
    for g in &graphs {
        for h in &graphs {
            let r = check_structure_theorem(&g.graph, &h.graph).unwrap();
            let has = |t: u8| r.cuts.iter().any(|c| c.types.matched.contains(&t));
            if has(8) {
                assert!(has(6) || has(3));
            }
            if has(7) {
                assert!(has(5) || has(3));
            }
        }
    }
}

#[test]
fn no_unstructured_min_cuts_in_the_small_sweep() {
    let graphs = connected_range(2, 4).unwrap();
    for g in &graphs {
        for h in &graphs {
            let exempt = |x: &Graph| is_path3(x) || is_cycle4(x);
            let r = check_structure_theorem(&g.graph, &h.graph).unwrap();
            assert_eq!(r.exempt, exempt(&g.graph) || exempt(&h.graph));
            assert!(r.lambda == 0 || r.unstructured == 0, "{} x {}", g.id(), h.id());
        }
    }
}

fn connected_mask(adj: &[u32], s: u32) -> bool {
    let mut seen = s & s.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let next = adj[v] & s & !seen;
        seen |= next;
        frontier |= next;
    }
    seen == s
}

/// A triangle, a bridge to a degree-2 vertex, a second bridge to a 4-cycle.
/// Times P3 this has minimum cuts of size 2 that split twin vertices of P3.
#[test]
fn unstructured_min_cuts_exist_next_to_p3() {
    let h = Graph::from_edge_list(
        8,
        &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (4, 7)],
    )
    .unwrap();
    let p3 = prodcut::generate::path(3).unwrap();
    let p = direct_product(&p3, &h).unwrap();
    let n = p.graph().vertex_count();
    let lambda = edge_connectivity(p.graph()).unwrap().lambda;
    assert_eq!(lambda, 2);
    assert_eq!(lambda_product_formula(&p3, &h).unwrap().lambda, 2);

    let mut adj = vec![0u32; n];
    for (u, v) in edge_pairs(p.graph()) {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = (1u32 << n) - 1;
    let (mut min_cuts, mut unstructured) = (0, 0);
    for half in 0..1u32 << (n - 1) {
        let s = half << 1 | 1;
        if s == full {
            continue;
        }
        let size: u32 = (0..n).filter(|&v| s >> v & 1 == 1).map(|v| (adj[v] & !s).count_ones()).sum();
        if size as usize != lambda || !connected_mask(&adj, s) || !connected_mask(&adj, full & !s) {
            continue;
        }
        min_cuts += 1;
        let black = VertexSet::from_mask(n, s as u64);
        if !classify_black_side(&p3, &h, &black).unwrap().is_structured() {
            unstructured += 1;
        }
    }
    assert!(min_cuts > unstructured);
    assert!(unstructured > 0);

    // the explicit one: 4-cycle classes {5, 7} / {4, 6}, plus the middle vertex 3
    let set = |vs: &[usize]| VertexSet::from_vertices(8, vs.iter().copied()).unwrap();
    let layer = |x: usize| VertexSet::from_vertices(3, [x]).unwrap();
    let black = p
        .rectangle(&layer(0), &set(&[5, 7]))
        .union(&p.rectangle(&layer(1), &set(&[4, 6])))
        .union(&p.rectangle(&layer(2), &set(&[3, 5, 7])));
    assert_eq!(p.graph().boundary_size(&black), 2);
    assert!(!classify_black_side(&p3, &h, &black).unwrap().is_structured());
}

#[test]
fn sequential_and_parallel_agree() {
    let k4 = complete(4).unwrap();
    let c5 = cycle(5).unwrap();
    let p = direct_product(&k4, &c5).unwrap();
    use prodcut::connectivity::{brute_force_min_cut_with, enumerate_min_cuts_with};
    use prodcut::frustration::{max_cut_exact_with, rho_with};
    assert_eq!(
        brute_force_min_cut_with(p.graph(), Exec::Sequential).unwrap(),
        brute_force_min_cut_with(p.graph(), Exec::Parallel).unwrap()
    );
    assert_eq!(
        enumerate_min_cuts_with(p.graph(), Exec::Sequential).unwrap(),
        enumerate_min_cuts_with(p.graph(), Exec::Parallel).unwrap()
    );
    let g = random_with(14, 0.4, &mut ChaCha8Rng::seed_from_u64(4)).unwrap();
    assert_eq!(rho_with(&g, Exec::Sequential).unwrap(), rho_with(&g, Exec::Parallel).unwrap());
    assert_eq!(
        max_cut_exact_with(&g, Exec::Sequential).unwrap(),
        max_cut_exact_with(&g, Exec::Parallel).unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lambda_never_exceeds_min_degree(g in graph_strategy(9)) {
        prop_assume!(g.vertex_count() >= 2);
        let l = edge_connectivity(&g).unwrap().lambda;
        prop_assert!(l <= g.min_degree().unwrap());
        prop_assert_eq!(l, naive_lambda(&g));
    }

    #[test]
    fn max_cut_matches_enumeration(g in graph_strategy(10)) {
        let edges = edge_pairs(&g);
        prop_assert_eq!(max_cut_exact(&g).unwrap().value, naive_max_cut(g.vertex_count(), &edges));
    }

    #[test]
    fn bipartition_agrees_with_odd_walks(g in graph_strategy(8)) {
        prop_assert_eq!(g.is_bipartite(), !has_odd_closed_walk(&g));
        if let Some((a, b)) = g.bipartition() {
            prop_assert!(g.edges().iter().all(|e| a.contains(e.u) != a.contains(e.v)));
            prop_assert_eq!(a.len() + b.len(), g.vertex_count());
        }
    }

    #[test]
    fn formula_matches_product_min_cut(g in graph_strategy(4), h in graph_strategy(4)) {
        prop_assume!(g.vertex_count() * h.vertex_count() >= 2);
        let p = direct_product(&g, &h).unwrap();
        let f = lambda_product_formula(&g, &h).unwrap();
        prop_assert_eq!(f.lambda, naive_lambda(p.graph()));
    }
}

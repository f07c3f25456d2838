//! Cross-checks against brute-force oracles written from scratch here.

use std::collections::{BTreeSet, VecDeque};

use qindex_core::constructions::{blow_up, cycle, BlowupVector};
use qindex_core::enumerate::{connected_by_size, graphs_by_order};
use qindex_core::graph::Graph;
use qindex_core::odd_cycle::{avoids_short_odd_cycles, is_bipartite, odd_girth, shortest_odd_cycle};
use qindex_core::poly::largest_real_root;
use qindex_core::spectral::{char_poly, q_index, signless_laplacian};
use qindex_core::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_graphs(max: usize) -> Vec<Graph> {
    (1..=max).flat_map(|n| graphs_by_order(n, 0)).map(|f| f.to_graph()).collect()
}

fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

fn bfs_connected(g: &Graph) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if g.has_edge(u, v) && !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Lengths of all cycles, by depth-first search from each smallest vertex.
fn cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    fn dfs(g: &Graph, start: usize, cur: usize, len: usize, used: &mut Vec<bool>, out: &mut BTreeSet<usize>) {
        for v in 0..g.order() {
            if !g.has_edge(cur, v) {
                continue;
            }
            if v == start && len >= 3 {
                out.insert(len);
            } else if v > start && !used[v] {
                used[v] = true;
                dfs(g, start, v, len + 1, used, out);
                used[v] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.order() {
        let mut used = vec![false; g.order()];
        used[s] = true;
        dfs(g, s, s, 1, &mut used, &mut out);
    }
    out
}

/// Minimum adjacency string over all relabellings.
fn brute_canonical(g: &Graph) -> Vec<bool> {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = g.order();
    permutations(n)
        .into_iter()
        .map(|p| {
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .map(|(u, v)| g.has_edge(p[u], p[v]))
                .collect::<Vec<bool>>()
        })
        .min()
        .unwrap()
}

#[test]
fn connectivity_matches_bfs() {
    for g in all_graphs(7) {
        assert_eq!(g.is_connected(), bfs_connected(&g), "{g:?}");
    }
}

#[test]
fn handshake_and_cut_identity() {
    for g in all_graphs(6) {
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        let all = g.vertices();
        for bits in 0..1u64 << g.order() {
            let s = VertexSet::from_bits(bits);
            let t = all.difference(s);
            let cut = g.edges_between(s, t).unwrap();
            assert_eq!(2 * cut + 2 * g.edges_within(s) + 2 * g.edges_within(t), 2 * g.size());
            let deg_s: usize = s.iter().map(|v| g.deg(v)).sum();
            assert_eq!(deg_s, 2 * g.edges_within(s) + cut);
        }
    }
}

#[test]
fn odd_girth_matches_cycle_search() {
    for g in all_graphs(7) {
        let lengths = cycle_lengths(&g);
        let expected = lengths.iter().copied().find(|l| l % 2 == 1);
        assert_eq!(odd_girth(&g), expected, "{g:?}");
        assert_eq!(is_bipartite(&g), expected.is_none());
        match shortest_odd_cycle(&g) {
            None => assert!(expected.is_none()),
            Some(c) => {
                assert_eq!(Some(c.len()), expected);
                let distinct: VertexSet = c.iter().copied().collect();
                assert_eq!(distinct.len(), c.len());
                assert!((0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()])));
            }
        }
        for k in 2..4 {
            if avoids_short_odd_cycles(&g, k) && !is_bipartite(&g) {
                assert!(avoids_short_odd_cycles(&g, k - 1));
            }
        }
    }
}

#[test]
fn order_enumeration_matches_labelled_enumeration() {
    for n in 1..=6 {
        for k in 0..=2 {
            let oracle: BTreeSet<Vec<bool>> = labelled_graphs(n)
                .filter(|g| k == 0 || cycle_lengths(g).iter().all(|&l| l % 2 == 0 || l > 2 * k + 1))
                .map(|g| brute_canonical(&g))
                .collect();
            let ours = graphs_by_order(n, k);
            assert_eq!(ours.len(), oracle.len(), "n={n} k={k}");
            let mapped: BTreeSet<Vec<bool>> = ours.iter().map(|f| brute_canonical(&f.to_graph())).collect();
            assert_eq!(mapped, oracle, "n={n} k={k}");
        }
    }
}

#[test]
fn size_enumeration_matches_labelled_enumeration() {
    // connected graphs with e edges live on at most e + 1 vertices
    let m = 5;
    for k in 0..=2 {
        let levels = connected_by_size(m, k);
        for e in 1..=m {
            let mut oracle: BTreeSet<(usize, Vec<bool>)> = BTreeSet::new();
            for n in 2..=e + 1 {
                for g in labelled_graphs(n) {
                    if g.size() == e
                        && bfs_connected(&g)
                        && (k == 0 || cycle_lengths(&g).iter().all(|&l| l % 2 == 0 || l > 2 * k + 1))
                    {
                        oracle.insert((n, brute_canonical(&g)));
                    }
                }
            }
            let ours: BTreeSet<(usize, Vec<bool>)> =
                levels[e - 1].iter().map(|f| (f.order(), brute_canonical(&f.to_graph()))).collect();
            assert_eq!(levels[e - 1].len(), ours.len());
            assert_eq!(ours, oracle, "e={e} k={k}");
        }
    }
}

#[test]
fn adding_an_edge_increases_q() {
    for g in all_graphs(7).into_iter().filter(|g| g.is_connected()) {
        let n = g.order();
        let Some((u, v)) = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !g.has_edge(u, v))
        else {
            continue;
        };
        let mut b = g.to_builder();
        b.add_edge(u, v).unwrap();
        let gap = q_index(&b.build()).unwrap() - q_index(&g).unwrap();
        assert!(gap > 1e-9, "{g:?} gap {gap}");
    }
}

#[test]
fn exact_and_numeric_paths_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = all_graphs(6);
    for _ in 0..150 {
        let n = rng.gen_range(2..=9);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.4)).collect();
        graphs.push(Graph::from_edges(n, edges).unwrap());
    }
    graphs.push(blow_up(&cycle(7).unwrap(), &BlowupVector::leading(3, 7).unwrap()).unwrap());
    for g in graphs {
        let p = char_poly(&signless_laplacian(&g));
        let q = q_index(&g).unwrap();
        let root = largest_real_root(&p, None).unwrap();
        assert!((root - q).abs() <= 1e-9, "{g:?}: root {root} q {q}");
        if g.order() <= 6 {
            assert!(p.eval_f64(q).abs() <= 1e-6, "{g:?}: p(q) = {}", p.eval_f64(q));
        }
    }
}

use proptest::prelude::*;

use qindex_core::bounds::{degree_avg_bound, edge_degree_bound};
use qindex_core::constructions::{
    blow_up, disjoint_union, find_internal_paths, rotate_edge, subdivide_edge, BlowupVector,
};
use qindex_core::enumerate::graphs_by_order;
use qindex_core::graph::Graph;
use qindex_core::odd_cycle::{is_admissible, odd_girth};
use qindex_core::partitions::{is_equitable, quotient, VertexPartition};
use qindex_core::spectral::{perron_vector, q_index, signless_laplacian};
use qindex_core::{canonical_form, IntMatrix};

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .enumerate()
        .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

fn connected(n: usize, bits: u64) -> Graph {
    // add a spanning path so the sample is connected
    let g = graph_from_bits(n, bits);
    let mut b = g.to_builder();
    for v in 1..n {
        if !b.has_edge(v - 1, v) {
            b.add_edge(v - 1, v).unwrap();
        }
    }
    b.build()
}

#[test]
fn identity_blow_up_is_isomorphic() {
    for n in 1..=7 {
        for f in graphs_by_order(n, 0) {
            let h = f.to_graph();
            let g = blow_up(&h, &BlowupVector::new(vec![1; n]).unwrap()).unwrap();
            assert_eq!(canonical_form(&g), f);
        }
    }
}

#[test]
fn singleton_partitions_are_equitable() {
    for f in graphs_by_order(5, 0) {
        let g = f.to_graph();
        let m = signless_laplacian(&g);
        let b = quotient(&m, &VertexPartition::singletons(g.order())).unwrap();
        assert!(b.is_equitable());
        assert_eq!(b.to_int_matrix(), Some(m));
    }
}

proptest! {
    #[test]
    fn blow_up_size_formula(n in 1usize..=7, bits: u64, mult in proptest::collection::vec(1usize..=3, 7)) {
        let h = graph_from_bits(n, bits);
        let r = BlowupVector::new(mult[..n].to_vec()).unwrap();
        let g = blow_up(&h, &r).unwrap();
        let e = r.entries();
        prop_assert_eq!(g.order(), e.iter().sum::<usize>());
        prop_assert_eq!(g.size(), h.edges().map(|(i, j)| e[i] * e[j]).sum::<usize>());
        // cells are independent
        for cell in r.partition().cells() {
            prop_assert_eq!(g.edges_within(*cell), 0);
        }
    }

    #[test]
    fn rotation_toward_larger_perron_entry(n in 3usize..=8, bits: u64, pick: usize) {
        let g = connected(n, bits);
        let x = perron_vector(&g).unwrap().entries;
        let options: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|v| g.neighbors(v).iter().map(move |from| (v, from)))
            .flat_map(|(v, from)| (0..n).map(move |to| (v, from, to)))
            .filter(|&(v, from, to)| to != v && to != from && !g.has_edge(v, to) && x[to] >= x[from])
            .collect();
        prop_assume!(!options.is_empty());
        let (v, from, to) = options[pick % options.len()];
        let gap = q_index(&rotate_edge(&g, v, from, to).unwrap()).unwrap() - q_index(&g).unwrap();
        prop_assert!(gap > -1e-9, "gap {}", gap);
    }

    #[test]
    fn subdivision_on_internal_path_decreases(n in 4usize..=8, bits: u64, pick: usize) {
        let g = connected(n, bits);
        let paths = find_internal_paths(&g);
        prop_assume!(!paths.is_empty());
        let p = &paths[pick % paths.len()];
        let edges: Vec<_> = p.edges().collect();
        let (u, v) = edges[pick / paths.len() % edges.len()];
        let gap = q_index(&g).unwrap() - q_index(&subdivide_edge(&g, u, v).unwrap()).unwrap();
        prop_assert!(gap > -1e-9, "gap {}", gap);
    }

    #[test]
    fn union_q_is_max(a in 1usize..=6, b in 1usize..=6, x: u64, y: u64) {
        let g = graph_from_bits(a, x);
        let h = graph_from_bits(b, y);
        let u = disjoint_union(&g, &h).unwrap();
        let expected = q_index(&g).unwrap().max(q_index(&h).unwrap());
        prop_assert!((q_index(&u).unwrap() - expected).abs() < 1e-10);
    }

    #[test]
    fn degree_bounds_hold(n in 2usize..=9, bits: u64) {
        let g = connected(n, bits);
        let q = q_index(&g).unwrap();
        prop_assert!(q <= edge_degree_bound(&g).unwrap() + 1e-8);
        prop_assert!(q <= degree_avg_bound(&g).unwrap() + 1e-8);
    }

    #[test]
    fn odd_girth_is_odd_and_admissibility_nests(n in 1usize..=10, bits: u64) {
        let g = graph_from_bits(n, bits);
        if let Some(l) = odd_girth(&g) {
            prop_assert!(l % 2 == 1 && l >= 3);
        }
        for k in 2..=4 {
            if is_admissible(&g, k) {
                prop_assert!(is_admissible(&g, k - 1));
            }
        }
    }

    #[test]
    fn merging_twin_cells_keeps_equitability(a in 1usize..=4, b in 1usize..=4, c in 1usize..=4) {
        // C6 blown up symmetrically about cell 0: cells 1, 5 and cells 2, 4 mirror each other
        let r = BlowupVector::new(vec![a, b, c, 1, c, b]).unwrap();
        let g = blow_up(&qindex_core::constructions::cycle(6).unwrap(), &r).unwrap();
        let m: IntMatrix = signless_laplacian(&g);
        let p = r.partition();
        prop_assert!(is_equitable(&m, &p).unwrap());
        let merged = p.merge(1, 5).unwrap().merge(2, 4).unwrap();
        prop_assert!(is_equitable(&m, &merged).unwrap());
    }
}

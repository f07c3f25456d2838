//! Isomorph-free generation of the class of graphs with no odd cycle of
//! length at most `2k+1` (`k = 0`: all graphs).
//!
//! The class is closed under taking induced and ordinary subgraphs, so it is
//! generated level by level from canonical representatives:
//!
//! * by order, adding a vertex whose neighbourhood has no two members joined
//!   by an odd walk of length `<= 2k-1`;
//! * connected graphs by size, adding a pendant edge or an edge `ab` whose
//!   shortest even `a-b` walk has length `>= 2k+2`.
//!
//! Children of each level are generated in parallel, then sorted and
//! deduplicated, so output never depends on the thread count.

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{Graph, MAX_ORDER};
use crate::odd_cycle::{ParityDistances, UNREACHABLE};

fn dedup(mut forms: Vec<CanonicalForm>) -> Vec<CanonicalForm> {
    forms.par_sort_unstable();
    forms.dedup();
    forms
}

fn with_vertex(g: &Graph, nbrs: u64) -> Graph {
    let n = g.order();
    let mut rows = g.rows().to_vec();
    for (v, row) in rows.iter_mut().enumerate() {
        if nbrs >> v & 1 == 1 {
            *row |= 1 << n;
        }
    }
    rows.push(nbrs);
    Graph::from_rows(rows).expect("valid extension")
}

/// Neighbourhoods allowed for a new vertex.
fn allowed_neighbourhoods(g: &Graph, k: usize) -> Vec<u64> {
    let n = g.order();
    if k == 0 {
        return (0..1u64 << n).collect();
    }
    let d = ParityDistances::new(g);
    let limit = (2 * k - 1) as u32;
    // conflict[v]: vertices joined to v by a short odd walk
    let conflict: Vec<u64> =
        (0..n).map(|a| (0..n).filter(|&b| d.odd(a, b) <= limit).fold(0u64, |m, b| m | 1 << b)).collect();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64, 0u64)];
    while let Some((v, chosen, blocked)) = stack.pop() {
        if v == n {
            out.push(chosen);
            continue;
        }
        stack.push((v + 1, chosen, blocked));
        if blocked >> v & 1 == 0 && conflict[v] >> v & 1 == 0 {
            stack.push((v + 1, chosen | 1 << v, blocked | conflict[v]));
        }
    }
    out
}

/// Every graph of order `n` in the class, one canonical form per isomorphism
/// class, sorted. Disconnected and bipartite graphs are included.
pub fn graphs_by_order(n: usize, k: usize) -> Vec<CanonicalForm> {
    assert!(n <= MAX_ORDER);
    if n == 0 {
        return vec![canonical_form(&Graph::empty(0).unwrap())];
    }
    let mut level = vec![canonical_form(&Graph::empty(1).unwrap())];
    for _ in 1..n {
        let children: Vec<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|parent| {
                let g = parent.to_graph();
                allowed_neighbourhoods(&g, k).into_iter().map(move |s| canonical_form(&with_vertex(&g, s)))
            })
            .collect();
        level = dedup(children);
    }
    level
}

fn with_edge(g: &Graph, a: usize, b: usize) -> Graph {
    let mut rows = g.rows().to_vec();
    if b == rows.len() {
        rows.push(0);
    }
    rows[a] |= 1 << b;
    rows[b] |= 1 << a;
    Graph::from_rows(rows).expect("valid extension")
}

fn edge_children(g: &Graph, k: usize) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    if n < MAX_ORDER {
        out.extend((0..n).map(|v| with_edge(g, v, n)));
    }
    let d = (k > 0).then(|| ParityDistances::new(g));
    let need = (2 * k + 2) as u32;
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let ok = match &d {
                None => true,
                Some(d) => {
                    let e = d.even(a, b);
                    e == UNREACHABLE || e >= need
                }
            };
            if ok {
                out.push(with_edge(g, a, b));
            }
        }
    }
    out
}

/// Connected graphs in the class with exactly `e` edges, for `e = 1..=m`;
/// entry `e - 1` holds the sorted canonical forms of size `e`.
pub fn connected_by_size(m: usize, k: usize) -> Vec<Vec<CanonicalForm>> {
    let mut levels: Vec<Vec<CanonicalForm>> = Vec::with_capacity(m);
    if m == 0 {
        return levels;
    }
    levels.push(vec![canonical_form(&Graph::from_edges(2, [(0, 1)]).unwrap())]);
    for _ in 1..m {
        let children: Vec<CanonicalForm> = levels
            .last()
            .unwrap()
            .par_iter()
            .flat_map_iter(|parent| edge_children(&parent.to_graph(), k).into_iter().map(|c| canonical_form(&c)))
            .collect();
        levels.push(dedup(children));
    }
    levels
}

/// One component choice: edge count and index into that level.
type Part = (usize, usize);

/// Multisets of connected components drawn from `levels` whose sizes sum to
/// `m`, with at least two components and at least one flagged component.
/// `flag[e-1][i]` marks the components that must appear at least once.
pub fn component_multisets(levels: &[Vec<CanonicalForm>], flag: &[Vec<bool>], m: usize) -> Vec<Vec<Part>> {
    fn rec(
        levels: &[Vec<CanonicalForm>],
        flag: &[Vec<bool>],
        left: usize,
        max: Part,
        cur: &mut Vec<Part>,
        out: &mut Vec<Vec<Part>>,
    ) {
        if left == 0 {
            if cur.len() >= 2 && cur.iter().any(|&(e, i)| flag[e - 1][i]) {
                out.push(cur.clone());
            }
            return;
        }
        // non-increasing parts in (edges, index) order
        for e in (1..=left.min(max.0)).rev() {
            let top = if e == max.0 { max.1 } else { levels[e - 1].len().saturating_sub(1) };
            if levels[e - 1].is_empty() {
                continue;
            }
            for i in (0..=top).rev() {
                cur.push((e, i));
                rec(levels, flag, left - e, (e, i), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if m == 0 || levels.len() < m {
        return out;
    }
    let start = (m, levels[m - 1].len().saturating_sub(1));
    rec(levels, flag, m, start, &mut Vec::new(), &mut out);
    out
}

/// Disjoint union of the chosen components.
pub fn assemble(levels: &[Vec<CanonicalForm>], parts: &[Part]) -> Option<Graph> {
    let order: usize = parts.iter().map(|&(e, i)| levels[e - 1][i].order()).sum();
    if order > MAX_ORDER {
        return None;
    }
    let mut rows = Vec::with_capacity(order);
    for &(e, i) in parts {
        let off = rows.len();
        rows.extend(levels[e - 1][i].to_graph().rows().iter().map(|r| r << off));
    }
    Some(Graph::from_rows(rows).expect("valid union"))
}

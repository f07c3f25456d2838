//! Canonical labelling by individualization and refinement.
//!
//! The certificate of a discrete ordered partition is the adjacency rows
//! relabelled by cell position; the canonical form is the largest certificate
//! over the search tree. Refinement only depends on the graph and the cell
//! sequence, never on vertex names, so isomorphic inputs explore the same
//! tree up to relabelling. Branches on twin vertices are pruned because
//! swapping twins is an automorphism.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// Order limit for [`is_isomorphic`].
pub const ISO_ORDER_CAP: usize = 16;

/// Canonical adjacency rows; equal forms mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    pub fn graph6(&self) -> String {
        graph6::encode(&self.to_graph())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

type Cells = Vec<Vec<usize>>;

fn mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1u64 << v)
}

/// Coarsest equitable refinement of `cells`, splitting by neighbour counts
/// in ascending order.
fn refine(g: &Graph, cells: &mut Cells) {
    let adj = g.rows();
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = mask(&cells[s]);
            for ci in 0..cells.len() {
                if cells[ci].len() == 1 {
                    continue;
                }
                let count = |v: usize| (adj[v] & splitter).count_ones();
                let first = count(cells[ci][0]);
                if cells[ci].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[ci].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Cells = Vec::new();
                let mut last = None;
                for (c, v) in keyed {
                    if last != Some(c) {
                        parts.push(Vec::new());
                        last = Some(c);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(ci..=ci, parts);
                continue 'restart;
            }
        }
        return;
    }
}

fn certificate(g: &Graph, cells: &Cells) -> (Vec<u64>, Vec<usize>) {
    let n = g.order();
    let mut pos = vec![0usize; n];
    for (i, c) in cells.iter().enumerate() {
        pos[c[0]] = i;
    }
    let rows = (0..n)
        .map(|i| {
            let v = cells[i][0];
            VertexSet::from_bits(g.rows()[v]).iter().fold(0u64, |m, u| m | 1u64 << pos[u])
        })
        .collect();
    (rows, pos)
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let adj = g.rows();
    adj[u] & !(1u64 << v) == adj[v] & !(1u64 << u)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, mut cells: Cells) {
        refine(self.g, &mut cells);
        if cells.len() == self.g.order() {
            let cand = certificate(self.g, &cells);
            if self.best.as_ref().is_none_or(|b| cand.0 > b.0) {
                self.best = Some(cand);
            }
            return;
        }
        let target = (0..cells.len()).filter(|&i| cells[i].len() > 1).min_by_key(|&i| cells[i].len()).unwrap();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&r| are_twins(self.g, r, v)) {
                continue;
            }
            tried.push(v);
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
            let mut next = cells.clone();
            next.splice(target..=target, [vec![v], rest]);
            self.run(next);
        }
    }
}

/// Canonical form and the labelling `v -> position` that produces it.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    if g.order() == 0 {
        return (CanonicalForm { rows: Vec::new() }, Vec::new());
    }
    let mut search = Search { g, best: None };
    search.run(vec![(0..g.order()).collect()]);
    let (rows, pos) = search.best.expect("search reaches a leaf");
    (CanonicalForm { rows }, pos)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.order() > ISO_ORDER_CAP {
            return Err(Error::CapExceeded { what: "order", value: g.order(), cap: ISO_ORDER_CAP });
        }
    }
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    Ok(d1 == d2 && canonical_form(g1) == canonical_form(g2))
}

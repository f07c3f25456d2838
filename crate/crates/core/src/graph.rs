//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex. Graphs are immutable
//! once built; every transformation in [`crate::constructions`] returns a new
//! value.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// A set of vertex indices of one graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub fn all(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn range(start: usize, end: usize) -> Self {
        (start..end).collect()
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph with vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        Ok(Graph { order, adj: vec![0; order] })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(order)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds a graph from adjacency rows, checking symmetry and the absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mask = VertexSet::all(order).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row >> u & 1 == 1 {
                return Err(Error::InvalidParameter(format!("bad adjacency row {u}")));
            }
            for v in VertexSet(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::InvalidParameter(format!("adjacency not symmetric at ({u}, {v})")));
                }
            }
        }
        Ok(Graph { order, adj: rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        Graph { order: rows.len(), adj: rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::all(self.order)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order })
        }
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    /// Degree without a range check; panics on out-of-range `v`.
    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.deg(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| VertexSet(self.adj[u]).iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of edges with one end in `s` and the other in `t`.
    pub fn edges_between(&self, s: VertexSet, t: VertexSet) -> Result<usize> {
        if !s.is_disjoint(t) {
            return Err(Error::OverlappingSets);
        }
        for v in s.union(t) {
            self.check(v)?;
        }
        Ok(s.iter().map(|u| (self.adj[u] & t.bits()).count_ones() as usize).sum())
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|u| (self.adj[u] & s.bits()).count_ones() as usize).sum::<usize>() / 2
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & !seen.bits());
            seen = seen.union(frontier);
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// A graph with no vertices is treated as connected, as is a single vertex.
    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.component_of(0) == self.vertices()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Subgraph induced on `s`, relabelled in ascending order of the original indices.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let index: Vec<usize> = s.iter().collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in index.iter().enumerate() {
            pos[v] = i;
        }
        let rows = index
            .iter()
            .map(|&v| VertexSet(self.adj[v] & s.bits()).iter().fold(0u64, |acc, u| acc | 1u64 << pos[u]))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.order];
        for u in 0..self.order {
            rows[perm[u]] = VertexSet(self.adj[u]).iter().fold(0u64, |acc, v| acc | 1u64 << perm[v]);
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder { adj: self.adj.clone() }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Mutable staging area for building a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        Ok(GraphBuilder { adj: vec![0; order] })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Appends a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.adj.len() >= MAX_ORDER {
            return Err(Error::OrderTooLarge(self.adj.len() + 1));
        }
        self.adj.push(0);
        Ok(self.adj.len() - 1)
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.adj.len() })
        }
    }

    /// Adds edge `uv`; adding an existing edge is a no-op, loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at {u}")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        self.check(u)?;
        self.check(v)?;
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u] >> v & 1 == 1
    }

    pub fn build(self) -> Graph {
        Graph::from_rows_unchecked(self.adj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blow_up, cycle, cycle_star, star, BlowupVector};

    #[test]
    fn degree_examples() {
        let c5 = cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v).unwrap() == 2));
        assert_eq!(star(5).unwrap().degree(0).unwrap(), 5);
        let g = blow_up(&cycle(7).unwrap(), &BlowupVector::new(vec![2, 1, 1, 1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(g.degree(0).unwrap(), 2);
        assert_eq!(g.degree(1).unwrap(), 2);
        assert!(matches!(c5.degree(5), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn edges_between_examples() {
        let k23 = Graph::from_edges(5, (0..2).flat_map(|u| (2..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(k23.edges_between(VertexSet::range(0, 2), VertexSet::range(2, 5)).unwrap(), 6);
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.edges_between(VertexSet::singleton(0), VertexSet::singleton(2)).unwrap(), 0);
        assert_eq!(c5.edges_between(VertexSet::range(0, 2), VertexSet::range(1, 3)), Err(Error::OverlappingSets));
    }

    #[test]
    fn connectivity_examples() {
        assert!(cycle(7).unwrap().is_connected());
        let c5_k2 = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)]).unwrap();
        assert!(!c5_k2.is_connected());
        assert!(cycle_star(1, 8).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(cycle(9).unwrap().max_degree(), 2);
        assert_eq!(cycle_star(1, 8).unwrap().max_degree(), 5);
        assert_eq!(star(5).unwrap().max_degree(), 5);
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn order_cap() {
        assert!(Graph::empty(64).is_ok());
        assert_eq!(Graph::empty(65), Err(Error::OrderTooLarge(65)));
    }
}

//! Bipartiteness, odd girth and the forbidden-short-odd-cycle class.
//!
//! Everything here runs breadth-first search on the bipartite double cover:
//! state `(v, p)` records the parity `p` of a walk ending at `v`. The
//! shortest odd closed walk through `s` is the distance from `(s, 0)` to
//! `(s, 1)`, and the minimum over `s` is the odd girth.

use std::collections::VecDeque;

use crate::graph::Graph;

pub const UNREACHABLE: u32 = u32::MAX;

/// Shortest even- and odd-length walks between every ordered pair of vertices.
#[derive(Clone, Debug)]
pub struct ParityDistances {
    n: usize,
    even: Vec<u32>,
    odd: Vec<u32>,
}

impl ParityDistances {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut even = vec![UNREACHABLE; n * n];
        let mut odd = vec![UNREACHABLE; n * n];
        for s in 0..n {
            let (e, o) = cover_bfs(g, s);
            even[s * n..(s + 1) * n].copy_from_slice(&e);
            odd[s * n..(s + 1) * n].copy_from_slice(&o);
        }
        ParityDistances { n, even, odd }
    }

    pub fn even(&self, a: usize, b: usize) -> u32 {
        self.even[a * self.n + b]
    }

    pub fn odd(&self, a: usize, b: usize) -> u32 {
        self.odd[a * self.n + b]
    }
}

/// Distances from `(s, 0)` to every `(v, 0)` and `(v, 1)`.
fn cover_bfs(g: &Graph, s: usize) -> (Vec<u32>, Vec<u32>) {
    let n = g.order();
    let mut dist = [vec![UNREACHABLE; n], vec![UNREACHABLE; n]];
    dist[0][s] = 0;
    let mut queue = VecDeque::from([(s, 0usize)]);
    while let Some((u, p)) = queue.pop_front() {
        let d = dist[p][u];
        for v in g.neighbors(u) {
            if dist[1 - p][v] == UNREACHABLE {
                dist[1 - p][v] = d + 1;
                queue.push_back((v, 1 - p));
            }
        }
    }
    let [e, o] = dist;
    (e, o)
}

/// Two-colouring by breadth-first search.
pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_some()
}

/// Colour of every vertex under some proper two-colouring, if one exists.
/// The smallest vertex of each component gets colour `false`.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.order();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for v in g.neighbors(u) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(Option::unwrap).collect())
}

/// Length of a shortest odd cycle; `None` when the graph is bipartite.
pub fn odd_girth(g: &Graph) -> Option<usize> {
    (0..g.order()).map(|s| cover_bfs(g, s).1[s]).filter(|&d| d != UNREACHABLE).min().map(|d| d as usize)
}

/// Vertices of one shortest odd cycle in cyclic order, or `None` when bipartite.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let girth = odd_girth(g)? as u32;
    let s = (0..g.order()).find(|&s| cover_bfs(g, s).1[s] == girth)?;
    let n = g.order();
    // BFS again keeping parents on the cover
    let mut dist = [vec![UNREACHABLE; n], vec![UNREACHABLE; n]];
    let mut parent = [vec![usize::MAX; n], vec![usize::MAX; n]];
    dist[0][s] = 0;
    let mut queue = VecDeque::from([(s, 0usize)]);
    while let Some((u, p)) = queue.pop_front() {
        for v in g.neighbors(u) {
            if dist[1 - p][v] == UNREACHABLE {
                dist[1 - p][v] = dist[p][u] + 1;
                parent[1 - p][v] = u;
                queue.push_back((v, 1 - p));
            }
        }
    }
    let mut cycle = Vec::with_capacity(girth as usize);
    let (mut v, mut p) = (s, 1usize);
    while !(v == s && p == 0) {
        cycle.push(v);
        v = parent[p][v];
        p = 1 - p;
    }
    cycle.reverse();
    // a minimum odd closed walk is a simple cycle
    debug_assert_eq!(cycle.len(), girth as usize);
    cycle.rotate_right(1);
    Some(cycle)
}

/// No odd cycle of length at most `2k+1`; `k = 0` imposes nothing.
pub fn avoids_short_odd_cycles(g: &Graph, k: usize) -> bool {
    k == 0 || odd_girth(g).is_none_or(|l| l >= 2 * k + 3)
}

/// Non-bipartite with odd girth at least `2k+3`.
pub fn is_admissible(g: &Graph, k: usize) -> bool {
    odd_girth(g).is_some_and(|l| l >= 2 * k + 3)
}

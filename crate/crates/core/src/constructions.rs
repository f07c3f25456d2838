//! Named graph families and the edge transformations used by the extremal
//! arguments.
//!
//! Index layouts are fixed so partitions can be rebuilt from index ranges:
//!
//! * `cycle(n)`: `i ~ i+1 (mod n)`.
//! * `path(n)`: `i ~ i+1`.
//! * `star(l)`: vertex 0 is the center, leaves are `1..=l`.
//! * `complete_bipartite(a, b)`: sides `0..a` and `a..a+b`.
//! * `blow_up(h, r)`: cell `i` occupies the contiguous range starting at
//!   `r[0] + .. + r[i-1]`.
//! * `identify(g1, u1, g2, u2)`: `g1` keeps its indices, the vertices of `g2`
//!   other than `u2` follow in order, and `u2` becomes `u1`.
//! * `cycle_star(k, m)`: cycle `0..2k+3` with hub 0, leaves `2k+3..m`.
//! * `s_nk(n, k)`: clique `0..k`, independent set `k..n`.
//! * `g0(n, k)`: see [`g0`].

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::partitions::VertexPartition;

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// `g` followed by `h`, no edges between them.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.order();
    Graph::from_edges(off + h.order(), g.edges().chain(h.edges().map(|(u, v)| (u + off, v + off))))
}

/// Positive multiplicities, one per vertex of a base graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupVector(Vec<usize>);

impl BlowupVector {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidParameter("blow-up multiplicities must be >= 1".into()));
        }
        Ok(BlowupVector(entries))
    }

    /// `(first, 1, 1, ..)` of the given length.
    pub fn leading(first: usize, len: usize) -> Result<Self> {
        let mut v = vec![1; len];
        if let Some(e) = v.first_mut() {
            *e = first;
        }
        Self::new(v)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Start index of every cell in the blown-up graph.
    pub fn offsets(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &e| {
                let start = *acc;
                *acc += e;
                Some(start)
            })
            .collect()
    }

    /// The cells `V_i` of the blow-up as a partition.
    pub fn partition(&self) -> VertexPartition {
        let cells = self.offsets().iter().zip(&self.0).map(|(&s, &e)| VertexSet::range(s, s + e)).collect();
        VertexPartition::new(self.total(), cells).expect("blow-up cells form a partition")
    }
}

/// Replaces vertex `i` of `h` by an independent set of `r[i]` vertices, joining
/// cells completely whenever the base vertices are adjacent.
pub fn blow_up(h: &Graph, r: &BlowupVector) -> Result<Graph> {
    if r.entries().len() != h.order() {
        return Err(Error::InvalidParameter(format!(
            "blow-up vector has length {}, base graph has order {}",
            r.entries().len(),
            h.order()
        )));
    }
    let off = r.offsets();
    let e = r.entries();
    let mut b = GraphBuilder::new(r.total())?;
    for (i, j) in h.edges() {
        for a in off[i]..off[i] + e[i] {
            for c in off[j]..off[j] + e[j] {
                b.add_edge(a, c)?;
            }
        }
    }
    Ok(b.build())
}

/// Merges `u1` of `g1` with `u2` of `g2` into one vertex carrying all their edges.
pub fn identify(g1: &Graph, u1: usize, g2: &Graph, u2: usize) -> Result<Graph> {
    g1.degree(u1)?;
    g2.degree(u2)?;
    let n1 = g1.order();
    let map = |v: usize| match v.cmp(&u2) {
        std::cmp::Ordering::Equal => u1,
        std::cmp::Ordering::Less => n1 + v,
        std::cmp::Ordering::Greater => n1 + v - 1,
    };
    Graph::from_edges(n1 + g2.order() - 1, g1.edges().chain(g2.edges().map(|(a, b)| (map(a), map(b)))))
}

/// `C_{2k+3}` with the center of `K_{1,m-2k-3}` identified with cycle vertex 0.
pub fn cycle_star(k: usize, m: usize) -> Result<Graph> {
    if k == 0 || m < 2 * k + 3 {
        return Err(Error::InvalidParameter(format!("cycle_star needs k >= 1 and m >= 2k+3, got k={k}, m={m}")));
    }
    identify(&cycle(2 * k + 3)?, 0, &star(m - 2 * k - 3)?, 0)
}

/// Orbit partition of [`cycle_star`]: `{hub}`, the leaves (when present),
/// then the mirror pairs `{i, 2k+3-i}` for `i = 1..=k+1`.
pub fn cycle_star_partition(k: usize, m: usize) -> Result<VertexPartition> {
    if k == 0 || m < 2 * k + 3 {
        return Err(Error::InvalidParameter(format!("bad cycle_star parameters k={k}, m={m}")));
    }
    let len = 2 * k + 3;
    let mut cells = vec![VertexSet::singleton(0)];
    if m > len {
        cells.push(VertexSet::range(len, m));
    }
    for i in 1..=k + 1 {
        cells.push([i, len - i].into_iter().collect());
    }
    VertexPartition::new(m, cells)
}

/// Extremal graph for fixed order: `C_{2k+3}` blown up by `(n-2k-2, 1, .., 1)`.
pub fn order_extremal(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k + 3 {
        return Err(Error::InvalidParameter(format!("need k >= 1 and n >= 2k+3, got n={n}, k={k}")));
    }
    blow_up(&cycle(2 * k + 3)?, &BlowupVector::leading(n - 2 * k - 2, 2 * k + 3)?)
}

/// Join of a `k`-clique with an independent set of `n-k` vertices.
pub fn s_nk(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n <= k {
        return Err(Error::InvalidParameter(format!("s_nk needs n > k >= 1, got n={n}, k={k}")));
    }
    Graph::from_edges(n, (0..k).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// [`s_nk`] plus the edge `(k, k+1)` inside the independent set.
pub fn s_nk_plus(n: usize, k: usize) -> Result<Graph> {
    if n < k + 2 {
        return Err(Error::InvalidParameter(format!("s_nk_plus needs n-k >= 2, got n={n}, k={k}")));
    }
    let mut b = s_nk(n, k)?.to_builder();
    b.add_edge(k, k + 1)?;
    Ok(b.build())
}

/// The auxiliary graph `G0` on `n-2k+4` vertices together with its 4-cell partition.
///
/// With `s = n-2k-2`:
/// * `V1 = {0, 1}`: hubs, each adjacent to all of `V2`;
/// * `V2 = 2..s+2`: independent set;
/// * `V3 = {s+2, s+3}`: `s+2 ~ 0` and `s+3 ~ 1`;
/// * `V4 = {s+4, s+5}`: pendants, `s+4 ~ s+2` and `s+5 ~ s+3`.
///
/// The Q-quotient of this partition is
/// `[[s+1, s, 1, 0], [2, 2, 0, 0], [1, 0, 2, 1], [0, 0, 1, 1]]`.
pub fn g0(n: usize, k: usize) -> Result<(Graph, VertexPartition)> {
    if k < 2 || n < 2 * k + 3 {
        return Err(Error::InvalidParameter(format!("g0 needs k >= 2 and n >= 2k+3, got n={n}, k={k}")));
    }
    let s = n - 2 * k - 2;
    let order = s + 6;
    let mut b = GraphBuilder::new(order)?;
    for hub in 0..2 {
        for v in 2..s + 2 {
            b.add_edge(hub, v)?;
        }
        b.add_edge(hub, s + 2 + hub)?;
        b.add_edge(s + 2 + hub, s + 4 + hub)?;
    }
    let part = VertexPartition::new(
        order,
        vec![
            VertexSet::range(0, 2),
            VertexSet::range(2, s + 2),
            VertexSet::range(s + 2, s + 4),
            VertexSet::range(s + 4, s + 6),
        ],
    )?;
    Ok((b.build(), part))
}

/// Injective vertex map sending [`g0`] into [`order_extremal`] for the same
/// `(n, k)`: `V2` onto the large cell, the hubs onto its two cycle
/// neighbours, then `V3` and `V4` along the cycle on either side.
pub fn g0_embedding(n: usize, k: usize) -> Result<Vec<usize>> {
    if k < 2 || n < 2 * k + 3 {
        return Err(Error::InvalidParameter(format!("bad g0 parameters n={n}, k={k}")));
    }
    let s = n - 2 * k - 2;
    let len = 2 * k + 3;
    // cycle vertex i >= 1 sits at index s + i - 1 in the blow-up
    let cyc = |i: usize| s + i - 1;
    let mut map = vec![0; s + 6];
    map[0] = cyc(1);
    map[1] = cyc(len - 1);
    for j in 0..s {
        map[2 + j] = j;
    }
    map[s + 2] = cyc(2);
    map[s + 3] = cyc(len - 2);
    map[s + 4] = cyc(3);
    map[s + 5] = cyc(len - 3);
    Ok(map)
}

/// True when `map` is injective into `h` and sends every edge of `g` to an edge of `h`.
pub fn is_subgraph_under(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if map.len() != g.order() || map.iter().any(|&v| v >= h.order()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    image.len() == map.len() && g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

/// Replaces edge `(from, v)` with `(to, v)`.
pub fn rotate_edge(g: &Graph, v: usize, from: usize, to: usize) -> Result<Graph> {
    for x in [v, from, to] {
        g.degree(x)?;
    }
    if !g.has_edge(v, from) {
        return Err(Error::MissingEdge(v, from));
    }
    if to == v {
        return Err(Error::InvalidParameter("rotation target equals pivot".into()));
    }
    if g.has_edge(v, to) {
        return Err(Error::EdgeExists(v, to));
    }
    let mut b = g.to_builder();
    b.remove_edge(v, from)?;
    b.add_edge(v, to)?;
    Ok(b.build())
}

/// Replaces edge `uv` by the path `u w v`; `w` gets index `g.order()`.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    g.degree(u)?;
    g.degree(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::MissingEdge(u, v));
    }
    let mut b = g.to_builder();
    let w = b.add_vertex()?;
    b.remove_edge(u, v)?;
    b.add_edge(u, w)?;
    b.add_edge(w, v)?;
    Ok(b.build())
}

/// A path (or cycle, when the ends coincide) whose ends have degree at
/// least 3 and whose interior vertices all have degree 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalPath {
    vertices: Vec<usize>,
}

impl InternalPath {
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        check_thread(g, &vertices)?;
        let (a, b) = (vertices[0], *vertices.last().unwrap());
        if g.deg(a) < 3 || g.deg(b) < 3 {
            return Err(Error::InvalidPath("end vertices need degree >= 3".into()));
        }
        if a == b && vertices.len() < 4 {
            return Err(Error::InvalidPath("internal cycle too short".into()));
        }
        Ok(InternalPath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_cycle(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Consecutive vertices adjacent, interior vertices of degree 2 and not
/// repeated; the ends may coincide.
fn check_thread(g: &Graph, vertices: &[usize]) -> Result<()> {
    if vertices.len() < 2 {
        return Err(Error::InvalidPath("need at least two vertices".into()));
    }
    for &v in vertices {
        g.degree(v)?;
    }
    if let Some(w) = vertices.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
    }
    let interior = &vertices[1..vertices.len() - 1];
    if let Some(&v) = interior.iter().find(|&&v| g.deg(v) != 2) {
        return Err(Error::InvalidPath(format!("interior vertex {v} has degree {}", g.deg(v))));
    }
    let mut seen = VertexSet::empty();
    for &v in &vertices[..vertices.len() - 1] {
        if seen.contains(v) {
            return Err(Error::InvalidPath(format!("vertex {v} repeated")));
        }
        seen.insert(v);
    }
    let last = *vertices.last().unwrap();
    if last != vertices[0] && seen.contains(last) {
        return Err(Error::InvalidPath(format!("vertex {last} repeated")));
    }
    Ok(())
}

/// Deletes the interior of a path whose interior vertices have degree 2 and
/// joins its ends by an edge. Remaining vertices keep their relative order.
///
/// Accepts any such segment, in particular a sub-path of an internal path.
pub fn contract_path_to_edge(g: &Graph, path: &[usize]) -> Result<Graph> {
    check_thread(g, path)?;
    if path.len() < 3 {
        return Err(Error::InvalidPath("need at least three vertices".into()));
    }
    let (a, b) = (path[0], path[path.len() - 1]);
    if a == b {
        return Err(Error::InvalidPath("cannot contract a cycle to an edge".into()));
    }
    if g.has_edge(a, b) {
        return Err(Error::EdgeExists(a, b));
    }
    let interior: VertexSet = path[1..path.len() - 1].iter().copied().collect();
    let keep = g.vertices().difference(interior);
    let pos = |v: usize| (keep.bits() & ((1u64 << v) - 1)).count_ones() as usize;
    let mut b2 = g.induced(keep).to_builder();
    b2.add_edge(pos(a), pos(b))?;
    Ok(b2.build())
}

/// All maximal internal paths and internal cycles, each reported once.
pub fn find_internal_paths(g: &Graph) -> Vec<InternalPath> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for u in (0..g.order()).filter(|&u| g.deg(u) >= 3) {
        for w in g.neighbors(u) {
            let mut walk = vec![u, w];
            let mut prev = u;
            let mut cur = w;
            while g.deg(cur) == 2 && cur != u {
                let next = g.neighbors(cur).difference(VertexSet::singleton(prev)).first();
                match next {
                    Some(n) => {
                        prev = cur;
                        cur = n;
                        walk.push(n);
                    }
                    None => break,
                }
            }
            if g.deg(cur) < 3 {
                continue;
            }
            let rev: Vec<usize> = walk.iter().rev().copied().collect();
            let canonical = if rev < walk { rev } else { walk };
            if !out.contains(&canonical) {
                out.push(canonical);
            }
        }
    }
    out.sort();
    out.into_iter().map(|vertices| InternalPath { vertices }).collect()
}

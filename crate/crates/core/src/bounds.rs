//! Degree-based upper bounds on the Q-index and the equality classes
//! (regular, semi-regular bipartite).

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::odd_cycle::bipartition;
use crate::spectral::q_index;

/// `max { d(u) + d(v) : uv an edge }`.
pub fn edge_degree_bound(g: &Graph) -> Result<f64> {
    g.edges().map(|(u, v)| (g.deg(u) + g.deg(v)) as f64).reduce(f64::max).ok_or(Error::NoEdges)
}

/// `m(u) = (1/d(u)) * sum of d(v) over neighbours v`, exactly.
pub fn avg_neighbor_degree_exact(g: &Graph, u: usize) -> Result<Ratio<i64>> {
    let d = g.degree(u)?;
    if d == 0 {
        return Err(Error::IsolatedVertex(u));
    }
    let total: usize = g.neighbors(u).iter().map(|v| g.deg(v)).sum();
    Ok(Ratio::new(total as i64, d as i64))
}

pub fn avg_neighbor_degree(g: &Graph, u: usize) -> Result<f64> {
    avg_neighbor_degree_exact(g, u).map(|r| r.to_f64().unwrap_or(f64::NAN))
}

/// `max { d(u) + m(u) }`, exactly.
pub fn degree_avg_bound_exact(g: &Graph) -> Result<Ratio<i64>> {
    let mut best: Option<Ratio<i64>> = None;
    for u in 0..g.order() {
        let x = avg_neighbor_degree_exact(g, u)? + g.deg(u) as i64;
        best = Some(best.map_or(x, |b| b.max(x)));
    }
    best.ok_or(Error::NoEdges)
}

pub fn degree_avg_bound(g: &Graph) -> Result<f64> {
    degree_avg_bound_exact(g).map(|r| r.to_f64().unwrap_or(f64::NAN))
}

pub fn is_regular(g: &Graph) -> bool {
    let mut d = (0..g.order()).map(|v| g.deg(v));
    match d.next() {
        Some(first) => d.all(|x| x == first),
        None => true,
    }
}

/// Bipartite with a colouring whose classes each have constant degree.
/// Components may be coloured independently, so every component must carry
/// the same unordered pair of side degrees.
pub fn is_semiregular_bipartite(g: &Graph) -> bool {
    let Some(colour) = bipartition(g) else {
        return false;
    };
    if g.size() == 0 {
        return true;
    }
    let mut pair: Option<(usize, usize)> = None;
    for comp in g.components() {
        let mut sides = [None::<usize>, None::<usize>];
        for v in comp {
            let side = &mut sides[colour[v] as usize];
            match *side {
                None => *side = Some(g.deg(v)),
                Some(d) if d != g.deg(v) => return false,
                Some(_) => {}
            }
        }
        // an isolated vertex next to edges has no partner side
        let (Some(a), Some(b)) = (sides[0], sides[1]) else {
            return false;
        };
        let p = (a.min(b), a.max(b));
        if pair.is_some_and(|q| q != p) {
            return false;
        }
        pair = Some(p);
    }
    true
}

/// Tolerance for calling a bound tight.
pub const EQUALITY_TOL: f64 = 1e-8;
/// Gaps in `(EQUALITY_TOL, REVIEW_TOL)` are flagged rather than judged.
pub const REVIEW_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tightness {
    Tight,
    Strict,
    Review,
}

impl Tightness {
    pub fn classify(bound: f64, q: f64) -> Self {
        let gap = (bound - q).abs();
        if gap <= EQUALITY_TOL {
            Tightness::Tight
        } else if gap < REVIEW_TOL {
            Tightness::Review
        } else {
            Tightness::Strict
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub q: f64,
    pub edge_degree_bound: f64,
    pub degree_avg_bound: f64,
    pub regular: bool,
    pub semiregular_bipartite: bool,
    pub edge_bound_tightness: Tightness,
    pub avg_bound_tightness: Tightness,
}

impl BoundsReport {
    /// Both bounds hold, and each is tight exactly on the equality class.
    /// Only meaningful for connected graphs.
    pub fn consistent(&self) -> bool {
        let class = self.regular || self.semiregular_bipartite;
        let ok = |t: Tightness, bound: f64| {
            self.q <= bound + EQUALITY_TOL
                && match t {
                    Tightness::Tight => class,
                    Tightness::Strict => !class,
                    Tightness::Review => true,
                }
        };
        ok(self.edge_bound_tightness, self.edge_degree_bound) && ok(self.avg_bound_tightness, self.degree_avg_bound)
    }

    pub fn needs_review(&self) -> bool {
        self.edge_bound_tightness == Tightness::Review || self.avg_bound_tightness == Tightness::Review
    }
}

pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    let q = q_index(g)?;
    let e = edge_degree_bound(g)?;
    let a = degree_avg_bound(g)?;
    Ok(BoundsReport {
        q,
        edge_degree_bound: e,
        degree_avg_bound: a,
        regular: is_regular(g),
        semiregular_bipartite: is_semiregular_bipartite(g),
        edge_bound_tightness: Tightness::classify(e, q),
        avg_bound_tightness: Tightness::classify(a, q),
    })
}

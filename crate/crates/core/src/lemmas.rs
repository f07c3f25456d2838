//! Property suites that re-check the structural facts behind the extremal
//! results on concrete instances: quotient eigenvalues, edge rotation,
//! subdivision, the two degree bounds, and the polynomial identities for the
//! auxiliary graphs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{bounds_report, Tightness};
use crate::canon::canonical_form;
use crate::constructions::{
    blow_up, contract_path_to_edge, cycle, cycle_star, cycle_star_partition, find_internal_paths, g0, g0_embedding,
    is_subgraph_under, order_extremal, rotate_edge, subdivide_edge, BlowupVector,
};
use crate::enumerate::graphs_by_order;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitions::{quotient, verify_quotient_eigenvalue, VertexPartition};
use crate::poly::largest_real_root;
use crate::spectral::{
    char_poly, f_difference_factored, f_polynomial, perron_vector, q_index, reference_f, reference_g,
    signless_laplacian,
};

/// Threshold for strict spectral comparisons.
pub const GAP_TOL: f64 = 1e-9;
/// Agreement required between a Q-index and its quotient root.
pub const QUOTIENT_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Suite {
    #[serde(rename = "2.1")]
    Quotient,
    #[serde(rename = "2.2")]
    Rotation,
    #[serde(rename = "2.3")]
    Subdivision,
    #[serde(rename = "2.4")]
    EdgeDegree,
    #[serde(rename = "2.5")]
    DegreeAverage,
    #[serde(rename = "3.1")]
    AuxiliaryG0,
    #[serde(rename = "3.3")]
    CycleSixBlowup,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Quotient,
        Suite::Rotation,
        Suite::Subdivision,
        Suite::EdgeDegree,
        Suite::DegreeAverage,
        Suite::AuxiliaryG0,
        Suite::CycleSixBlowup,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Quotient => "2.1",
            Suite::Rotation => "2.2",
            Suite::Subdivision => "2.3",
            Suite::EdgeDegree => "2.4",
            Suite::DegreeAverage => "2.5",
            Suite::AuxiliaryG0 => "3.1",
            Suite::CycleSixBlowup => "3.3",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random instances for the rotation and subdivision suites.
    pub instances: usize,
    /// Largest order enumerated by the degree-bound suites.
    pub max_order: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 20_240_601, instances: 300, max_order: 7 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: Suite,
    pub instances: usize,
    pub failures: usize,
    pub inconclusive: usize,
    pub review: usize,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            schema: crate::search::SCHEMA,
            suite,
            instances: 0,
            failures: 0,
            inconclusive: 0,
            review: 0,
            pass: true,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.instances += 1;
        if !pass {
            self.failures += 1;
            self.pass = false;
        }
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    /// Records a strict comparison `gap > GAP_TOL`; tiny gaps count as inconclusive.
    fn strict(&mut self, name: impl Into<String>, gap: f64) {
        if gap.abs() <= GAP_TOL {
            self.inconclusive += 1;
            self.instances += 1;
            self.checks.push(Check { name: name.into(), pass: true, detail: format!("inconclusive gap {gap:.3e}") });
        } else {
            self.check(name, gap > GAP_TOL, format!("gap {gap:.6e}"));
        }
    }

    /// Inconclusive instances must stay under 1% of the total.
    fn finish(mut self) -> Self {
        if self.inconclusive * 100 >= self.instances.max(1) && self.inconclusive > 0 {
            self.pass = false;
        }
        self
    }

    pub fn inconclusive_rate(&self) -> f64 {
        self.inconclusive as f64 / self.instances.max(1) as f64
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let report = match suite {
        Suite::Quotient => quotient_suite()?,
        Suite::Rotation => rotation_suite(opts)?,
        Suite::Subdivision => subdivision_suite(opts)?,
        Suite::EdgeDegree => bound_suite(Suite::EdgeDegree, opts)?,
        Suite::DegreeAverage => bound_suite(Suite::DegreeAverage, opts)?,
        Suite::AuxiliaryG0 => g0_suite()?,
        Suite::CycleSixBlowup => c6_suite()?,
    };
    Ok(report.finish())
}

/// Every canonical construction with its documented equitable partition.
pub fn canonical_partitions() -> Result<Vec<(String, Graph, VertexPartition)>> {
    let mut out = Vec::new();
    for k in 2..=4 {
        for n in 2 * k + 3..=2 * k + 9 {
            let (g, p) = g0(n, k)?;
            out.push((format!("g0({n},{k})"), g, p));
        }
    }
    for k in 1..=4 {
        let len = 2 * k + 3;
        for n in len..=len + 6 {
            let r = BlowupVector::leading(n - 2 * k - 2, len)?;
            out.push((format!("blow_up(C{len},{:?})", r.entries()), order_extremal(n, k)?, r.partition()));
        }
        for m in len..=len + 8 {
            out.push((format!("cycle_star({k},{m})"), cycle_star(k, m)?, cycle_star_partition(k, m)?));
        }
    }
    for n1 in 1..=5 {
        for n2 in 1..=5 {
            let r = BlowupVector::new(vec![n1, n2, 1, 1, 1, 1])?;
            out.push((format!("blow_up(C6,{:?})", r.entries()), blow_up(&cycle(6)?, &r)?, r.partition()));
        }
    }
    Ok(out)
}

fn quotient_suite() -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Quotient);
    for (name, g, p) in canonical_partitions()? {
        let rep = verify_quotient_eigenvalue(&g, &p)?;
        r.check(name, rep.agrees(QUOTIENT_TOL), format!("difference {:.3e}", rep.difference));
    }
    Ok(r)
}

/// Connected `G(n, p)` sample by rejection.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("order within range");
        if g.is_connected() {
            return g;
        }
    }
}

/// A rotation `(v, from, to)` with `x_to >= x_from`, if one exists.
fn pick_rotation(rng: &mut ChaCha8Rng, g: &Graph) -> Result<Option<(usize, usize, usize)>> {
    let x = perron_vector(g)?.entries;
    let mut options = Vec::new();
    for v in 0..g.order() {
        for from in g.neighbors(v) {
            for to in 0..g.order() {
                if to != v && to != from && !g.has_edge(v, to) && x[to] >= x[from] {
                    options.push((v, from, to));
                }
            }
        }
    }
    Ok(options.choose(rng).copied())
}

fn rotation_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Rotation);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x22);
    // a pendant of C5 with a star moved from a cycle vertex onto the hub
    let base = cycle_star(1, 8)?;
    let mut b = base.to_builder();
    b.remove_edge(0, 7)?;
    b.add_edge(2, 7)?;
    let low = b.build();
    let gap = q_index(&rotate_edge(&low, 7, 2, 0)?)? - q_index(&low)?;
    r.strict("pendant onto hub", gap);
    let mut attempts = 0;
    while r.instances < opts.instances + 1 {
        attempts += 1;
        if attempts > 100 * opts.instances.max(1) {
            return Err(Error::InvalidParameter("could not generate rotation instances".into()));
        }
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.2..0.7);
        let g = random_connected(&mut rng, n, p);
        let Some((v, from, to)) = pick_rotation(&mut rng, &g)? else {
            continue;
        };
        let gap = q_index(&rotate_edge(&g, v, from, to)?)? - q_index(&g)?;
        r.strict(format!("{} rotate ({v},{from})->({v},{to})", crate::graph6::encode(&g)), gap);
    }
    Ok(r)
}

fn subdivision_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::Subdivision);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x23);
    // the cycle of C5 with a pendant star is an internal cycle
    let g = cycle_star(1, 8)?;
    let gap = q_index(&g)? - q_index(&subdivide_edge(&g, 1, 2)?)?;
    r.strict("cycle_star(1,8) subdivide (1,2)", gap);
    let mut attempts = 0;
    while r.instances < opts.instances + 1 {
        attempts += 1;
        if attempts > 1000 * opts.instances.max(1) {
            return Err(Error::InvalidParameter("could not generate subdivision instances".into()));
        }
        let n = rng.gen_range(4..=8);
        let p = rng.gen_range(0.2..0.5);
        let g = random_connected(&mut rng, n, p);
        let paths = find_internal_paths(&g);
        let Some(path) = paths.choose(&mut rng) else {
            continue;
        };
        let edges: Vec<(usize, usize)> = path.edges().collect();
        let &(u, v) = edges.choose(&mut rng).expect("paths have an edge");
        let gap = q_index(&g)? - q_index(&subdivide_edge(&g, u, v)?)?;
        r.strict(format!("{} subdivide ({u},{v})", crate::graph6::encode(&g)), gap);
    }
    Ok(r)
}

fn bound_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut r = SuiteReport::new(suite);
    let mut stats = (0usize, 0usize);
    for n in 2..=opts.max_order {
        for f in graphs_by_order(n, 0) {
            let g = f.to_graph();
            if !g.is_connected() {
                continue;
            }
            let b = bounds_report(&g)?;
            let (bound, t) = match suite {
                Suite::EdgeDegree => (b.edge_degree_bound, b.edge_bound_tightness),
                _ => (b.degree_avg_bound, b.avg_bound_tightness),
            };
            let class = b.regular || b.semiregular_bipartite;
            stats.0 += 1;
            if t == Tightness::Tight {
                stats.1 += 1;
            }
            if t == Tightness::Review {
                r.review += 1;
            }
            let holds = b.q <= bound + crate::bounds::EQUALITY_TOL;
            let equality_ok = match t {
                Tightness::Tight => class,
                Tightness::Strict => !class,
                Tightness::Review => true,
            };
            if !(holds && equality_ok) {
                r.check(crate::graph6::encode(&g), false, format!("q={} bound={} class={class}", b.q, bound));
            } else {
                r.instances += 1;
            }
        }
    }
    let name = match suite {
        Suite::EdgeDegree => "max d(u)+d(v) over edges",
        _ => "max d(u)+m(u) over vertices",
    };
    r.checks.push(Check {
        name: name.into(),
        pass: r.failures == 0,
        detail: format!(
            "{} connected graphs of order 2..={}, {} tight, {} flagged for review",
            stats.0, opts.max_order, stats.1, r.review
        ),
    });
    Ok(r)
}

fn g0_matrix(s: i64) -> Vec<Vec<i64>> {
    vec![vec![s + 1, s, 1, 0], vec![2, 2, 0, 0], vec![1, 0, 2, 1], vec![0, 0, 1, 1]]
}

fn g0_suite() -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::AuxiliaryG0);
    for k in 2..=4usize {
        for n in 2 * k + 3..=2 * k + 9 {
            let tag = format!("n={n} k={k}");
            let (g, p) = g0(n, k)?;
            let b = quotient(&signless_laplacian(&g), &p)?;
            let s = (n - 2 * k - 2) as i64;
            r.check(
                format!("{tag} quotient"),
                b.is_equitable() && b.equals_int(&g0_matrix(s)),
                format!("equitable={}", b.is_equitable()),
            );
            let reference = reference_g(n, k)?;
            let cp = b.to_int_matrix().map(|m| char_poly(&m));
            r.check(format!("{tag} characteristic polynomial"), cp.as_ref() == Some(&reference), reference.to_string());
            let host = order_extremal(n, k)?;
            let map = g0_embedding(n, k)?;
            r.check(
                format!("{tag} proper subgraph"),
                is_subgraph_under(&g, &host, &map) && g.size() < host.size(),
                format!("{} of {} edges", g.size(), host.size()),
            );
            let root = largest_real_root(&reference, None)?;
            let lower = (n as f64) - 2.0 * k as f64 + 1.0 - 3.0 / (2.0 * (n as f64 - 2.0 * k as f64 + 4.0));
            let q = q_index(&host)?;
            r.check(
                format!("{tag} root above bound"),
                root - lower > GAP_TOL,
                format!("root {root:.12} bound {lower:.12}"),
            );
            r.check(format!("{tag} blow-up above root"), q - root > GAP_TOL, format!("q {q:.12}"));
            r.check(format!("{tag} blow-up above bound"), q - lower > GAP_TOL, format!("margin {:.6e}", q - lower));
        }
    }
    Ok(r)
}

/// `C_{2k+3}` blown up at two consecutive cells.
fn c_odd_blowup(k: usize, n1: usize, n2: usize) -> Result<Graph> {
    let mut e = vec![1; 2 * k + 3];
    e[0] = n1;
    e[1] = n2;
    blow_up(&cycle(2 * k + 3)?, &BlowupVector::new(e)?)
}

fn c6_suite() -> Result<SuiteReport> {
    let mut r = SuiteReport::new(Suite::CycleSixBlowup);
    let k = 2usize;
    for n in 8..=12usize {
        let s = n - 2 * k - 1;
        for n1 in 1..s {
            let n2 = s - n1;
            let tag = format!("n={n} n1={n1} n2={n2}");
            let cells = BlowupVector::new(vec![n1, n2, 1, 1, 1, 1])?;
            let c6 = blow_up(&cycle(6)?, &cells)?;
            let b = quotient(&signless_laplacian(&c6), &cells.partition())?;
            let cp = b.to_int_matrix().map(|m| char_poly(&m));
            let f = reference_f(n1, n2, k, n)?;
            r.check(format!("{tag} quotient polynomial"), cp.as_ref() == Some(&f), f.to_string());
            // the path through the last three singleton cells of the C7 blow-up
            let c7 = c_odd_blowup(k, n1, n2)?;
            let base = n1 + n2;
            let contracted = contract_path_to_edge(&c7, &[base + 4, base + 3, base + 2])?;
            r.check(
                format!("{tag} contraction"),
                canonical_form(&contracted) == canonical_form(&c6),
                format!("order {}", contracted.order()),
            );
            if n2 >= 2 {
                let diff = &f - &f_polynomial(n1 as i64 + 1, n2 as i64 - 1);
                let factored = f_difference_factored(n1 as i64, k as i64, n as i64);
                r.check(
                    format!("{tag} difference"),
                    diff == factored,
                    format!(
                        "({})*x(x-3)(x^2-{}x+{}) = {}",
                        2 * n1 as i64 + 2 * k as i64 + 2 - n as i64,
                        n - 2 * k + 2,
                        n - 2 * k + 3,
                        factored
                    ),
                );
            }
        }
    }
    Ok(r)
}

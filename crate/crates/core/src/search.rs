//! Exhaustive extremal search over admissible graphs and certification of the
//! extremal constructions.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::{cycle_star, order_extremal};
use crate::enumerate::{assemble, component_multisets, connected_by_size, graphs_by_order};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::odd_cycle::is_bipartite;
use crate::spectral::q_index;

pub const DEFAULT_ORDER_CAP: usize = 9;
pub const DEFAULT_SIZE_CAP: usize = 12;
pub const EDGE_BOUNDS_CAP: usize = 8;
pub const TIE_TOL: f64 = 1e-8;
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub order_cap: usize,
    pub size_cap: usize,
    pub tolerance: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { order_cap: DEFAULT_ORDER_CAP, size_cap: DEFAULT_SIZE_CAP, tolerance: TIE_TOL }
    }
}

impl SearchConfig {
    /// True when a cap was raised above its default.
    pub fn above_defaults(&self) -> bool {
        self.order_cap > DEFAULT_ORDER_CAP || self.size_cap > DEFAULT_SIZE_CAP
    }
}

/// Rounds to 12 significant digits so reports print identically everywhere.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub(crate) fn ser_round<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*x))
}

pub(crate) fn ser_round_opt<S: Serializer>(x: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_f64(round12(*v)),
        None => s.serialize_none(),
    }
}

fn ser_forms<S: Serializer>(forms: &[CanonicalForm], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(forms.iter().map(CanonicalForm::graph6))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Order,
    Size,
}

/// Disconnected candidates in a size search, assembled from connected components.
#[derive(Clone, Debug, Serialize)]
pub struct DisconnectedCoverage {
    pub candidates: usize,
    #[serde(serialize_with = "ser_round_opt")]
    pub best_q: Option<f64>,
    /// Best `max(A(m1), F(e))` over component budgets, from per-size tables.
    #[serde(serialize_with = "ser_round_opt")]
    pub table_best_q: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub schema: u32,
    pub mode: SearchMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub k: usize,
    #[serde(serialize_with = "ser_round_opt")]
    pub max_q: Option<f64>,
    #[serde(serialize_with = "ser_forms")]
    pub maximizers: Vec<CanonicalForm>,
    pub count_enumerated: usize,
    pub count_admissible: usize,
    pub tolerance_used: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disconnected: Option<DisconnectedCoverage>,
    #[serde(skip)]
    pub runtime: Duration,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    Ok(())
}

fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        return Err(Error::CapExceeded { what, value, cap });
    }
    Ok(())
}

/// Admissible graphs of order `n`, one per isomorphism class, sorted by canonical form.
pub fn enumerate_admissible_by_order(n: usize, k: usize, cfg: &SearchConfig) -> Result<Vec<Graph>> {
    check_k(k)?;
    check_cap("order", n, cfg.order_cap)?;
    Ok(graphs_by_order(n, k).into_iter().map(|f| f.to_graph()).filter(|g| !is_bipartite(g)).collect())
}

fn maximizers(scored: &[(CanonicalForm, f64)], tol: f64) -> (Option<f64>, Vec<CanonicalForm>) {
    let Some(max) = scored.iter().map(|x| x.1).reduce(f64::max) else {
        return (None, Vec::new());
    };
    let mut forms: Vec<CanonicalForm> = scored.iter().filter(|x| x.1 >= max - tol).map(|x| x.0.clone()).collect();
    forms.sort();
    forms.dedup();
    (Some(max), forms)
}

pub fn max_q_by_order(n: usize, k: usize, cfg: &SearchConfig) -> Result<SearchReport> {
    check_k(k)?;
    check_cap("order", n, cfg.order_cap)?;
    let start = Instant::now();
    let all = graphs_by_order(n, k);
    let scored: Vec<(CanonicalForm, f64)> = all
        .par_iter()
        .filter_map(|f| {
            let g = f.to_graph();
            (!is_bipartite(&g)).then(|| q_index(&g).map(|q| (f.clone(), q)))
        })
        .collect::<Result<_>>()?;
    let (max_q, maximizers) = maximizers(&scored, cfg.tolerance);
    Ok(SearchReport {
        schema: SCHEMA,
        mode: SearchMode::Order,
        n: Some(n),
        m: None,
        k,
        max_q,
        maximizers,
        count_enumerated: all.len(),
        count_admissible: scored.len(),
        tolerance_used: cfg.tolerance,
        disconnected: None,
        runtime: start.elapsed(),
    })
}

/// Connected class graphs by size with their Q-index and bipartiteness.
struct SizeTables {
    levels: Vec<Vec<CanonicalForm>>,
    q: Vec<Vec<f64>>,
    bipartite: Vec<Vec<bool>>,
}

impl SizeTables {
    fn build(m: usize, k: usize) -> Result<Self> {
        let levels = connected_by_size(m, k);
        let mut q = Vec::with_capacity(m);
        let mut bipartite = Vec::with_capacity(m);
        for level in &levels {
            let rows: Vec<(f64, bool)> = level
                .par_iter()
                .map(|f| {
                    let g = f.to_graph();
                    q_index(&g).map(|q| (q, is_bipartite(&g)))
                })
                .collect::<Result<_>>()?;
            q.push(rows.iter().map(|r| r.0).collect());
            bipartite.push(rows.iter().map(|r| r.1).collect());
        }
        Ok(SizeTables { levels, q, bipartite })
    }

    fn non_bipartite_flags(&self) -> Vec<Vec<bool>> {
        self.bipartite.iter().map(|l| l.iter().map(|b| !b).collect()).collect()
    }

    /// Best connected Q-index at size `e`, optionally admissible only.
    fn best(&self, e: usize, admissible: bool) -> Option<f64> {
        self.q[e - 1]
            .iter()
            .zip(&self.bipartite[e - 1])
            .filter(|(_, &b)| !(admissible && b))
            .map(|(&q, _)| q)
            .reduce(f64::max)
    }

    /// `max over m1 of max(A(m1), max_{e <= m-m1} F(e))`, with `A` the best
    /// admissible connected value and `F` the best class value.
    fn composed_best(&self, m: usize) -> Option<f64> {
        (1..m)
            .filter_map(|m1| {
                let a = self.best(m1, true)?;
                let f = (1..=m - m1).filter_map(|e| self.best(e, false)).reduce(f64::max)?;
                Some(a.max(f))
            })
            .reduce(f64::max)
    }
}

/// Admissible graphs with exactly `m` edges and no isolated vertices,
/// connected ones first, then disconnected ones assembled from components.
pub fn enumerate_admissible_by_size(m: usize, k: usize, cfg: &SearchConfig) -> Result<Vec<Graph>> {
    check_k(k)?;
    check_cap("size", m, cfg.size_cap)?;
    if m == 0 {
        return Ok(Vec::new());
    }
    let levels = connected_by_size(m, k);
    let flag: Vec<Vec<bool>> =
        levels.iter().map(|l| l.iter().map(|f| !is_bipartite(&f.to_graph())).collect()).collect();
    let mut out: Vec<Graph> =
        levels[m - 1].iter().zip(&flag[m - 1]).filter(|(_, &nb)| nb).map(|(f, _)| f.to_graph()).collect();
    out.extend(component_multisets(&levels, &flag, m).iter().filter_map(|parts| assemble(&levels, parts)));
    Ok(out)
}

pub fn max_q_by_size(m: usize, k: usize, cfg: &SearchConfig) -> Result<SearchReport> {
    check_k(k)?;
    check_cap("size", m, cfg.size_cap)?;
    let start = Instant::now();
    let empty = SearchReport {
        schema: SCHEMA,
        mode: SearchMode::Size,
        n: None,
        m: Some(m),
        k,
        max_q: None,
        maximizers: Vec::new(),
        count_enumerated: 0,
        count_admissible: 0,
        tolerance_used: cfg.tolerance,
        disconnected: None,
        runtime: Duration::ZERO,
    };
    if m == 0 {
        return Ok(empty);
    }
    let t = SizeTables::build(m, k)?;
    let mut scored: Vec<(CanonicalForm, f64)> = t.levels[m - 1]
        .iter()
        .zip(&t.q[m - 1])
        .zip(&t.bipartite[m - 1])
        .filter(|(_, &b)| !b)
        .map(|((f, &q), _)| (f.clone(), q))
        .collect();
    let connected_admissible = scored.len();

    let flags = t.non_bipartite_flags();
    let multisets = component_multisets(&t.levels, &flags, m);
    let disconnected: Vec<(Vec<(usize, usize)>, f64)> = multisets
        .into_iter()
        .filter(|parts| assemble(&t.levels, parts).is_some())
        .map(|parts| {
            let q = parts.iter().map(|&(e, i)| t.q[e - 1][i]).fold(0.0, f64::max);
            (parts, q)
        })
        .collect();
    let best_disconnected = disconnected.iter().map(|d| d.1).reduce(f64::max);
    let overall = scored.iter().map(|s| s.1).chain(best_disconnected).reduce(f64::max);
    if let Some(max) = overall {
        // only disconnected graphs tied with the maximum need canonical forms
        let tied: Vec<(CanonicalForm, f64)> = disconnected
            .par_iter()
            .filter(|d| d.1 >= max - cfg.tolerance)
            .map(|(parts, q)| (canonical_form(&assemble(&t.levels, parts).unwrap()), *q))
            .collect();
        scored.extend(tied);
    }
    let (max_q, maximizers) = maximizers(&scored, cfg.tolerance);
    Ok(SearchReport {
        max_q,
        maximizers,
        count_enumerated: t.levels.iter().map(Vec::len).sum::<usize>() + disconnected.len(),
        count_admissible: connected_admissible + disconnected.len(),
        disconnected: Some(DisconnectedCoverage {
            candidates: disconnected.len(),
            best_q: best_disconnected,
            table_best_q: t.composed_best(m),
        }),
        runtime: start.elapsed(),
        ..empty
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub schema: u32,
    pub theorem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub k: usize,
    pub pass: bool,
    pub construction: String,
    #[serde(serialize_with = "ser_round")]
    pub construction_q: f64,
    #[serde(serialize_with = "ser_round_opt")]
    pub max_q: Option<f64>,
    pub q_matches: bool,
    pub single_class: bool,
    pub construction_is_maximizer: bool,
    pub search: SearchReport,
}

fn certify(theorem: &str, construction: Graph, search: SearchReport, tol: f64) -> Result<CertificateReport> {
    let cq = q_index(&construction)?;
    let form = canonical_form(&construction);
    let q_matches = search.max_q.is_some_and(|q| (q - cq).abs() <= tol);
    let single_class = search.maximizers.len() == 1;
    let construction_is_maximizer = search.maximizers.contains(&form);
    Ok(CertificateReport {
        schema: SCHEMA,
        theorem: theorem.to_string(),
        n: search.n,
        m: search.m,
        k: search.k,
        pass: q_matches && single_class && construction_is_maximizer,
        construction: form.graph6(),
        construction_q: cq,
        max_q: search.max_q,
        q_matches,
        single_class,
        construction_is_maximizer,
        search,
    })
}

/// Fixed order: the maximum over admissible graphs is attained only by
/// `C_{2k+3}` blown up by `(n-2k-2, 1, .., 1)`.
pub fn certify_theorem_1_3(n: usize, k: usize, cfg: &SearchConfig) -> Result<CertificateReport> {
    if k < 2 || n < 2 * k + 3 {
        return Err(Error::InvalidParameter(format!("need k >= 2 and n >= 2k+3, got n={n}, k={k}")));
    }
    let search = max_q_by_order(n, k, cfg)?;
    certify("1.3", order_extremal(n, k)?, search, cfg.tolerance)
}

/// Fixed size: the maximum over admissible graphs without isolated vertices
/// is attained only by `C_{2k+3}` with a pendant star at one cycle vertex.
pub fn certify_theorem_1_4(m: usize, k: usize, cfg: &SearchConfig) -> Result<CertificateReport> {
    if k < 1 || m < 2 * k + 3 {
        return Err(Error::InvalidParameter(format!("need k >= 1 and m >= 2k+3, got m={m}, k={k}")));
    }
    let search = max_q_by_size(m, k, cfg)?;
    certify("1.4", cycle_star(k, m)?, search, cfg.tolerance)
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeBoundsReport {
    pub schema: u32,
    pub n: usize,
    pub triangle_free_graphs: usize,
    pub mantel_bound: usize,
    pub max_edges_triangle_free: usize,
    pub mantel_attaining: Vec<String>,
    pub non_bipartite_graphs: usize,
    pub erdos_bound: usize,
    pub max_edges_non_bipartite: Option<usize>,
    pub erdos_attaining: Vec<String>,
    pub pass: bool,
}

/// Exhaustive check of `m <= floor(n^2/4)` for triangle-free graphs and
/// `m <= floor((n-1)^2/4) + 1` for non-bipartite triangle-free graphs, with
/// attaining graphs. The second bound is vacuous when no non-bipartite
/// triangle-free graph of order `n` exists.
pub fn classical_edge_bounds(n: usize) -> Result<EdgeBoundsReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    check_cap("order", n, EDGE_BOUNDS_CAP)?;
    let graphs: Vec<Graph> = graphs_by_order(n, 1).iter().map(CanonicalForm::to_graph).collect();
    let mantel = n * n / 4;
    let erdos = (n - 1) * (n - 1) / 4 + 1;
    let max_tf = graphs.iter().map(Graph::size).max().unwrap_or(0);
    let nb: Vec<&Graph> = graphs.iter().filter(|g| !is_bipartite(g)).collect();
    let max_nb = nb.iter().map(|g| g.size()).max();
    let attaining = |gs: &mut dyn Iterator<Item = &Graph>, bound: usize| -> Vec<String> {
        gs.filter(|g| g.size() == bound).map(crate::graph6::encode).collect()
    };
    let mantel_attaining = attaining(&mut graphs.iter(), mantel);
    let erdos_attaining = attaining(&mut nb.iter().copied(), erdos);
    let pass = max_tf == mantel
        && !mantel_attaining.is_empty()
        && match max_nb {
            None => true,
            Some(x) => x == erdos && !erdos_attaining.is_empty(),
        };
    Ok(EdgeBoundsReport {
        schema: SCHEMA,
        n,
        triangle_free_graphs: graphs.len(),
        mantel_bound: mantel,
        max_edges_triangle_free: max_tf,
        mantel_attaining,
        non_bipartite_graphs: nb.len(),
        erdos_bound: erdos,
        max_edges_non_bipartite: max_nb,
        erdos_attaining,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blow_up, cycle, BlowupVector};
    use crate::odd_cycle::is_admissible;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn round12_examples() {
        assert_eq!(round12(4.0), 4.0);
        assert_eq!(round12(1.0 / 3.0), 0.333333333333);
        assert_eq!(round12(6.999999999999999), 7.0);
    }

    #[test]
    fn order_enumeration_examples() {
        let g = enumerate_admissible_by_order(7, 2, &cfg()).unwrap();
        assert_eq!(g.len(), 1);
        assert!(crate::canon::is_isomorphic(&g[0], &cycle(7).unwrap()).unwrap());
        let c5 = canonical_form(&cycle(5).unwrap());
        assert!(enumerate_admissible_by_order(5, 1, &cfg()).unwrap().iter().any(|g| canonical_form(g) == c5));
        let b = canonical_form(&blow_up(&cycle(7).unwrap(), &BlowupVector::leading(2, 7).unwrap()).unwrap());
        assert!(enumerate_admissible_by_order(8, 2, &cfg()).unwrap().iter().any(|g| canonical_form(g) == b));
    }

    #[test]
    fn caps_and_parameters() {
        assert!(matches!(max_q_by_order(10, 2, &cfg()), Err(Error::CapExceeded { .. })));
        assert!(matches!(max_q_by_size(13, 2, &cfg()), Err(Error::CapExceeded { .. })));
        assert!(max_q_by_order(7, 0, &cfg()).is_err());
        assert!(classical_edge_bounds(9).is_err());
        assert!(certify_theorem_1_3(7, 1, &cfg()).is_err());
        assert!(certify_theorem_1_4(6, 2, &cfg()).is_err());
    }

    #[test]
    fn size_enumeration_examples() {
        for (m, k) in [(5, 1), (8, 1), (11, 2)] {
            let gs = enumerate_admissible_by_size(m, k, &cfg()).unwrap();
            let target = canonical_form(&cycle_star(k, m).unwrap());
            assert!(gs.iter().any(|g| canonical_form(g) == target));
            for g in &gs {
                assert!(is_admissible(g, k));
                assert_eq!(g.size(), m);
                assert!(!g.has_isolated_vertex());
            }
        }
        // two disjoint pentagons
        let gs = enumerate_admissible_by_size(10, 1, &cfg()).unwrap();
        assert!(gs.iter().any(|g| g.components().len() == 2 && g.order() == 10 && g.max_degree() == 2));
    }

    #[test]
    fn order_search_examples() {
        let r = max_q_by_order(7, 2, &cfg()).unwrap();
        assert!((r.max_q.unwrap() - 4.0).abs() < 1e-10);
        assert_eq!(r.maximizers, vec![canonical_form(&cycle(7).unwrap())]);
        assert_eq!(r.count_admissible, 1);
        let r = max_q_by_order(8, 2, &cfg()).unwrap();
        assert_eq!(r.maximizers, vec![canonical_form(&order_extremal(8, 2).unwrap())]);
    }

    #[test]
    fn size_search_examples() {
        let r = max_q_by_size(8, 1, &cfg()).unwrap();
        assert_eq!(r.maximizers, vec![canonical_form(&cycle_star(1, 8).unwrap())]);
        let d = r.disconnected.as_ref().unwrap();
        // the table shortcut and the explicit union agree
        assert!((d.best_q.unwrap() - d.table_best_q.unwrap()).abs() < 1e-12);
        assert!(d.best_q.unwrap() < r.max_q.unwrap());
    }

    #[test]
    fn certificates() {
        assert!(certify_theorem_1_3(7, 2, &cfg()).unwrap().pass);
        let r = certify_theorem_1_4(9, 1, &cfg()).unwrap();
        assert!(r.pass);
        let r = certify_theorem_1_4(7, 2, &cfg()).unwrap();
        assert!(r.pass);
        assert_eq!(r.search.maximizers, vec![canonical_form(&cycle(7).unwrap())]);
    }

    #[test]
    fn edge_bound_examples() {
        let r = classical_edge_bounds(5).unwrap();
        assert_eq!(r.max_edges_triangle_free, 6);
        assert_eq!(r.max_edges_non_bipartite, Some(5));
        assert_eq!(r.erdos_bound, 5);
        assert!(r.pass);
        let r = classical_edge_bounds(4).unwrap();
        assert_eq!(r.max_edges_triangle_free, 4);
        assert_eq!(r.max_edges_non_bipartite, None);
        assert!(r.pass);
    }

    #[test]
    fn report_json_shape() {
        let r = max_q_by_order(7, 2, &cfg()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["maximizers"][0], canonical_form(&cycle(7).unwrap()).graph6());
        assert!(v.get("runtime").is_none());
    }
}

//! Vertex partitions, quotient matrices and the equitable-partition
//! eigenvalue check.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::poly::largest_real_root;
use crate::spectral::{char_poly, q_index, signless_laplacian, IntMatrix};

/// Ordered partition of `0..order` into non-empty cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    order: usize,
    cells: Vec<VertexSet>,
}

impl VertexPartition {
    pub fn new(order: usize, cells: Vec<VertexSet>) -> Result<Self> {
        let all = VertexSet::all(order);
        let mut seen = VertexSet::empty();
        for (i, &c) in cells.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::PartitionMismatch(format!("cell {i} is empty")));
            }
            if !c.difference(all).is_empty() {
                return Err(Error::PartitionMismatch(format!("cell {i} has out-of-range vertices")));
            }
            if !c.is_disjoint(seen) {
                return Err(Error::PartitionMismatch(format!("cell {i} overlaps an earlier cell")));
            }
            seen = seen.union(c);
        }
        if seen != all {
            return Err(Error::PartitionMismatch("cells do not cover every vertex".into()));
        }
        Ok(VertexPartition { order, cells })
    }

    pub fn from_lists(order: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut cells = Vec::with_capacity(lists.len());
        for l in lists {
            let set: VertexSet = l.iter().copied().filter(|&v| v < 64).collect();
            if set.len() != l.len() {
                return Err(Error::PartitionMismatch(format!("bad cell {l:?}")));
            }
            cells.push(set);
        }
        Self::new(order, cells)
    }

    pub fn singletons(order: usize) -> Self {
        VertexPartition { order, cells: (0..order).map(VertexSet::singleton).collect() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    /// Merges cells `i` and `j` into position `min(i, j)`.
    pub fn merge(&self, i: usize, j: usize) -> Result<Self> {
        if i == j || i >= self.cells.len() || j >= self.cells.len() {
            return Err(Error::InvalidParameter(format!("cannot merge cells {i} and {j}")));
        }
        let (a, b) = (i.min(j), i.max(j));
        let mut cells = self.cells.clone();
        let gone = cells.remove(b);
        cells[a] = cells[a].union(gone);
        Ok(VertexPartition { order: self.order, cells })
    }
}

/// `b_ij` is the average row sum of block `M_ij`; `equitable` records whether
/// every block has constant row sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    entries: Vec<Vec<Ratio<i64>>>,
    equitable: bool,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Ratio<i64> {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Ratio<i64>>] {
        &self.entries
    }

    pub fn is_equitable(&self) -> bool {
        self.equitable
    }

    /// Integer copy of the matrix when every entry is an integer.
    pub fn to_int_matrix(&self) -> Option<IntMatrix> {
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.is_integer().then(|| e.to_integer())).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        IntMatrix::from_rows(rows).ok()
    }

    /// True when every entry equals the corresponding integer in `rows`.
    pub fn equals_int(&self, rows: &[Vec<i64>]) -> bool {
        rows.len() == self.dim()
            && self
                .entries
                .iter()
                .zip(rows)
                .all(|(a, b)| a.len() == b.len() && a.iter().zip(b).all(|(x, &y)| *x == Ratio::from_integer(y)))
    }
}

fn block_row_sums(m: &IntMatrix, p: &VertexPartition) -> Result<Vec<Vec<Vec<i64>>>> {
    if m.dim() != p.order() {
        return Err(Error::PartitionMismatch(format!(
            "matrix has dimension {}, partition covers {} vertices",
            m.dim(),
            p.order()
        )));
    }
    Ok(p.cells()
        .iter()
        .map(|&ci| {
            p.cells().iter().map(|&cj| ci.iter().map(|u| cj.iter().map(|v| m.get(u, v)).sum()).collect()).collect()
        })
        .collect())
}

pub fn quotient(m: &IntMatrix, p: &VertexPartition) -> Result<QuotientMatrix> {
    let sums = block_row_sums(m, p)?;
    let mut equitable = true;
    let entries = sums
        .iter()
        .map(|row| {
            row.iter()
                .map(|block| {
                    if block.iter().any(|&s| s != block[0]) {
                        equitable = false;
                    }
                    let total: i64 = block.iter().sum();
                    Ratio::new(total, block.len() as i64)
                })
                .collect()
        })
        .collect();
    Ok(QuotientMatrix { entries, equitable })
}

pub fn is_equitable(m: &IntMatrix, p: &VertexPartition) -> Result<bool> {
    Ok(block_row_sums(m, p)?.iter().flatten().all(|block| block.iter().all(|&s| s == block[0])))
}

/// Q-index of a graph next to the largest root of its quotient's characteristic polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientEigenReport {
    pub q_index: f64,
    pub quotient_root: f64,
    pub difference: f64,
}

impl QuotientEigenReport {
    pub fn agrees(&self, tol: f64) -> bool {
        self.difference <= tol
    }
}

/// Compares `q(g)` with the largest eigenvalue of the Q-quotient of an
/// equitable partition. Requires a connected graph so that `Q` is irreducible.
pub fn verify_quotient_eigenvalue(g: &Graph, p: &VertexPartition) -> Result<QuotientEigenReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let qm = signless_laplacian(g);
    let b = quotient(&qm, p)?;
    if !b.is_equitable() {
        return Err(Error::NotEquitable);
    }
    let bi = b.to_int_matrix().ok_or(Error::NotEquitable)?;
    let q = q_index(g)?;
    let root = largest_real_root(&char_poly(&bi), None)?;
    Ok(QuotientEigenReport { q_index: q, quotient_root: root, difference: (q - root).abs() })
}

/// Display helper: integers as numbers, other entries as `p/q` strings.
pub fn ratio_to_json_string(r: &Ratio<i64>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else if r.is_zero() {
        "0".into()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn ratio_to_f64(r: &Ratio<i64>) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blow_up, cycle, g0, path, star, BlowupVector};

    #[test]
    fn c6_bipartition() {
        let c6 = cycle(6).unwrap();
        let p = VertexPartition::from_lists(6, &[vec![0, 2, 4], vec![1, 3, 5]]).unwrap();
        let b = quotient(&signless_laplacian(&c6), &p).unwrap();
        assert!(b.is_equitable());
        assert!(b.equals_int(&[vec![2, 2], vec![2, 2]]));
    }

    #[test]
    fn g0_quotient_matches_displayed_matrix() {
        let (g, p) = g0(11, 2).unwrap();
        let b = quotient(&signless_laplacian(&g), &p).unwrap();
        assert!(b.is_equitable());
        assert!(b.equals_int(&[vec![6, 5, 1, 0], vec![2, 2, 0, 0], vec![1, 0, 2, 1], vec![0, 0, 1, 1]]));
    }

    #[test]
    fn c6_blow_up_quotient() {
        let (n1, n2) = (3i64, 2i64);
        let r = BlowupVector::new(vec![3, 2, 1, 1, 1, 1]).unwrap();
        let g = blow_up(&cycle(6).unwrap(), &r).unwrap();
        let b = quotient(&signless_laplacian(&g), &r.partition()).unwrap();
        assert!(b.is_equitable());
        let expect = vec![
            vec![1 + n2, n2, 0, 0, 0, 1],
            vec![n1, 1 + n1, 1, 0, 0, 0],
            vec![0, n2, 1 + n2, 1, 0, 0],
            vec![0, 0, 1, 2, 1, 0],
            vec![0, 0, 0, 1, 2, 1],
            vec![n1, 0, 0, 0, 1, 1 + n1],
        ];
        assert!(b.equals_int(&expect));
    }

    #[test]
    fn equitability_examples() {
        let c5 = signless_laplacian(&cycle(5).unwrap());
        assert!(is_equitable(&c5, &VertexPartition::singletons(5)).unwrap());
        let p3 = signless_laplacian(&path(3).unwrap());
        let p = VertexPartition::from_lists(3, &[vec![0, 2], vec![1]]).unwrap();
        assert!(is_equitable(&p3, &p).unwrap());
        let mut b = star(3).unwrap().to_builder();
        b.add_edge(1, 2).unwrap();
        let m = signless_laplacian(&b.build());
        let p = VertexPartition::from_lists(4, &[vec![0], vec![1, 2, 3]]).unwrap();
        assert!(!is_equitable(&m, &p).unwrap());
        let q = quotient(&m, &p).unwrap();
        assert!(!q.is_equitable());
        // leaf-block row sums are 3, 3, 1
        assert_eq!(q.entry(1, 1), Ratio::new(7, 3));
        assert!(quotient(&m, &VertexPartition::singletons(3)).is_err());
    }

    #[test]
    fn singleton_quotient_is_matrix() {
        let g = crate::constructions::cycle_star(1, 8).unwrap();
        let m = signless_laplacian(&g);
        let b = quotient(&m, &VertexPartition::singletons(8)).unwrap();
        assert!(b.is_equitable());
        assert_eq!(b.to_int_matrix().unwrap(), m);
    }

    #[test]
    fn partition_validation() {
        assert!(VertexPartition::from_lists(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(VertexPartition::from_lists(3, &[vec![0, 1]]).is_err());
        assert!(VertexPartition::from_lists(3, &[vec![0, 1, 2], vec![]]).is_err());
        assert!(VertexPartition::from_lists(2, &[vec![0, 0], vec![1]]).is_err());
        let p = VertexPartition::singletons(4).merge(3, 1).unwrap();
        assert_eq!(p.cells()[1], [1, 3].into_iter().collect());
    }

    #[test]
    fn quotient_eigenvalue_examples() {
        let (g, p) = g0(11, 2).unwrap();
        assert!(verify_quotient_eigenvalue(&g, &p).unwrap().agrees(1e-8));
        let r = BlowupVector::new(vec![2, 2, 1, 1, 1, 1]).unwrap();
        let g = blow_up(&cycle(6).unwrap(), &r).unwrap();
        assert!(verify_quotient_eigenvalue(&g, &r.partition()).unwrap().agrees(1e-8));
        let rep = verify_quotient_eigenvalue(&cycle(7).unwrap(), &VertexPartition::singletons(7)).unwrap();
        assert!((rep.q_index - 4.0).abs() < 1e-10 && (rep.quotient_root - 4.0).abs() < 1e-10);

        let two = crate::constructions::disjoint_union(&cycle(3).unwrap(), &cycle(3).unwrap()).unwrap();
        assert_eq!(verify_quotient_eigenvalue(&two, &VertexPartition::singletons(6)).unwrap_err(), Error::Disconnected);
        let p = VertexPartition::from_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(verify_quotient_eigenvalue(&path(4).unwrap(), &p).unwrap_err(), Error::NotEquitable);
    }
}

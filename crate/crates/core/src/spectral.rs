//! Signless Laplacian assembly, Q-index and Perron vector by power
//! iteration, exact characteristic polynomials, and the closed-form
//! polynomials of the extremal constructions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntegerPolynomial;

/// Square integer matrix, row-major. Q-matrices are symmetric; quotient
/// matrices in general are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix { dim, entries: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        Ok(IntMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// `Q(G) = D(G) + A(G)`.
pub fn signless_laplacian(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for u in 0..n {
        m.set(u, u, g.deg(u) as i64);
        for v in g.neighbors(u) {
            m.set(u, v, 1);
        }
    }
    m
}

const RESIDUAL_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 1_000_000;

/// Dominant eigenpair of `Q` of a connected graph; unit vector, all-ones start.
fn power_iteration(g: &Graph) -> Result<(f64, Vec<f64>)> {
    let n = g.order();
    if n == 0 {
        return Ok((0.0, Vec::new()));
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let deg: Vec<f64> = (0..n).map(|v| g.deg(v) as f64).collect();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for _ in 0..MAX_ITERATIONS {
        for v in 0..n {
            y[v] = deg[v] * x[v] + nbrs[v].iter().map(|&u| x[u]).sum::<f64>();
        }
        let rho: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x.iter().zip(&y).map(|(a, b)| (b - rho * a).abs()).fold(0.0, f64::max);
        if residual <= RESIDUAL_TOL * rho.max(1.0) {
            return Ok((rho, x));
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(Error::NoConvergence(MAX_ITERATIONS))
}

/// Largest eigenvalue of `Q(G)`; for disconnected graphs the maximum over components.
pub fn q_index(g: &Graph) -> Result<f64> {
    if g.is_connected() {
        return power_iteration(g).map(|(q, _)| q);
    }
    g.components()
        .into_iter()
        .map(|c| power_iteration(&g.induced(c)).map(|(q, _)| q))
        .try_fold(0.0f64, |acc, q| q.map(|q| acc.max(q)))
}

/// Positive unit eigenvector of `Q(G)` for the Q-index of a connected graph.
#[derive(Clone, Debug, Serialize)]
pub struct PerronVector {
    pub eigenvalue: f64,
    pub entries: Vec<f64>,
}

pub fn perron_vector(g: &Graph) -> Result<PerronVector> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (eigenvalue, entries) = power_iteration(g)?;
    Ok(PerronVector { eigenvalue, entries })
}

/// `det(xI - M)` with exact integer coefficients, by the division-free
/// Samuelson–Berkowitz recurrence.
pub fn char_poly(m: &IntMatrix) -> IntegerPolynomial {
    let n = m.dim();
    let big = |v: i64| BigInt::from(v);
    // highest degree first
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let mut t = vec![BigInt::one(), -big(m.get(r, r))];
        let mut w: Vec<BigInt> = (0..r).map(|i| big(m.get(i, r))).collect();
        for _ in 0..r {
            let rw: BigInt = (0..r).map(|j| big(m.get(r, j)) * &w[j]).sum();
            t.push(-rw);
            w = (0..r).map(|i| (0..r).map(|j| big(m.get(i, j)) * &w[j]).sum()).collect();
        }
        let next = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &t[i - j] * &v[j]).fold(BigInt::zero(), |acc, x| acc + x))
            .collect();
        v = next;
    }
    v.reverse();
    IntegerPolynomial::new(v)
}

/// `x (x^3 - (n-2k+4) x^2 + (3n-6k+5) x - (n-2k+4))`, the characteristic
/// polynomial of the quotient of [`crate::constructions::g0`].
pub fn reference_g(n: usize, k: usize) -> Result<IntegerPolynomial> {
    if k < 2 || n < 2 * k + 3 {
        return Err(Error::InvalidParameter(format!("reference_g needs k >= 2 and n >= 2k+3, got n={n}, k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    let a = n - 2 * k + 4;
    let b = 3 * n - 6 * k + 5;
    Ok(IntegerPolynomial::from_i64(&[0, -a, b, -a, 1]))
}

/// Characteristic polynomial of the 6×6 quotient of `C6 ∘ (n1, n2, 1, 1, 1, 1)`,
/// written in `s = n1 + n2` and `p = n1 n2`. Accepts any integers so that
/// algebraic identities can be checked outside the graph range.
pub fn f_polynomial(n1: i64, n2: i64) -> IntegerPolynomial {
    let s = n1 + n2;
    let p = n1 * n2;
    IntegerPolynomial::from_i64(&[
        0,
        -(s * s + 12 * p + (3 * p + 5) * s + 4),
        6 * s * s + 13 * p + (4 * p + 21) * s + 18,
        -(5 * s * s + 6 * p + (p + 27) * s + 30),
        s * s + 13 * s + p + 23,
        -2 * (s + 4),
        1,
    ])
}

/// [`f_polynomial`] restricted to `n1 + n2 = n - 2k - 1` with `n1, n2 >= 1`.
pub fn reference_f(n1: usize, n2: usize, k: usize, n: usize) -> Result<IntegerPolynomial> {
    if n1 == 0 || n2 == 0 || n1 + n2 + 2 * k + 1 != n {
        return Err(Error::InvalidParameter(format!(
            "reference_f needs n1, n2 >= 1 and n1 + n2 = n - 2k - 1, got n1={n1}, n2={n2}, k={k}, n={n}"
        )));
    }
    Ok(f_polynomial(n1 as i64, n2 as i64))
}

/// `(2 n1 + 2k + 2 - n) x (x - 3) (x^2 - (n-2k+2) x + (n-2k+3))`, which
/// equals `f(n1, n2, x) - f(n1 + 1, n2 - 1, x)` when `n1 + n2 = n - 2k - 1`.
pub fn f_difference_factored(n1: i64, k: i64, n: i64) -> IntegerPolynomial {
    let lead = IntegerPolynomial::constant(2 * n1 + 2 * k + 2 - n);
    let quad = IntegerPolynomial::from_i64(&[n - 2 * k + 3, -(n - 2 * k + 2), 1]);
    &(&(&lead * &IntegerPolynomial::x()) * &IntegerPolynomial::linear_root(3)) * &quad
}

//! Adjacency spectra: eigenvalues, graph energy, the spectral radius, and
//! exact integer traces of adjacency powers.
//!
//! Eigenvalues come from a dense symmetric eigensolver and are checked
//! against the residual contract `||A v - lambda v|| <= tol * ||A||` before
//! being returned. The spectral radius is computed independently by power
//! iteration on `A + I`, which converges for every connected graph because
//! the Perron eigenvalue of `A + I` strictly dominates in modulus.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default eigenpair residual tolerance, relative to the spectral norm.
pub const DEFAULT_EIGEN_TOL: f64 = 1e-10;

/// Default absolute residual tolerance for the power iteration.
pub const DEFAULT_POWER_TOL: f64 = 1e-10;

/// Largest exponent accepted by [`trace_power`]. Traces beyond this are
/// astronomically large for all but trivial graphs.
pub const TRACE_POWER_CAP: u32 = 16;

const POWER_ITERATION_BUDGET: usize = 200_000;
const EIGEN_SWEEP_BUDGET: usize = 100_000;

/// Adjacency eigenvalues sorted in non-increasing order.
#[derive(Clone, Debug)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Largest eigenvalue; `None` for the empty graph.
    pub fn lambda1(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    /// Sum of absolute eigenvalues.
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l.abs()).sum()
    }
}

pub(crate) fn dense_adjacency(g: &Graph) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(g.n(), g.n());
    for &(u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

/// Computes all adjacency eigenvalues. Every returned eigenpair satisfied
/// `||A v - lambda v|| <= tol * max(||A||, 1)` or an error is raised.
pub fn eigenvalues(g: &Graph, tol: f64) -> Result<Spectrum> {
    if g.n() == 0 {
        return Ok(Spectrum {
            eigenvalues: Vec::new(),
        });
    }
    let a = dense_adjacency(g);
    let eigen = a
        .clone()
        .try_symmetric_eigen(f64::EPSILON, EIGEN_SWEEP_BUDGET)
        .ok_or(Error::EigenNonConvergence)?;
    let norm = eigen
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, l| acc.max(l.abs()));
    let bound = tol * norm.max(1.0);
    for j in 0..g.n() {
        let v = eigen.eigenvectors.column(j);
        let residual = (&a * v - eigen.eigenvalues[j] * v).norm();
        if residual > bound {
            return Err(Error::EigenResidual { residual, bound });
        }
    }
    let mut vals: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| b.partial_cmp(a).expect("adjacency eigenvalues are finite"));
    Ok(Spectrum { eigenvalues: vals })
}

/// Graph energy: the sum of absolute adjacency eigenvalues.
pub fn energy_exact(g: &Graph) -> Result<f64> {
    Ok(eigenvalues(g, DEFAULT_EIGEN_TOL)?.energy())
}

/// Spectral radius of a connected graph by power iteration on `A + I`,
/// stopped once the eigenpair residual drops to `tol`. Regular graphs
/// converge on the first step because the all-ones vector is exact.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "spectral_radius",
        });
    }
    let n = g.n();
    // Unnormalized all-ones start: for a d-regular graph the first sweep
    // already gives w = (d + 1) v in exact integer arithmetic, so the
    // returned radius is the degree with no rounding at all.
    let mut v = DVector::from_element(n, 1.0);
    for _ in 0..POWER_ITERATION_BUDGET {
        // w = (A + I) v, assembled from neighbor lists.
        let mut w = v.clone();
        for u in 0..n {
            let mut acc = 0.0;
            for &x in g.neighbors(u) {
                acc += v[x];
            }
            w[u] += acc;
        }
        let vv: f64 = v.dot(&v);
        let theta = v.dot(&w) / vv;
        let residual = (&w - theta * &v).norm() / vv.sqrt();
        if residual <= tol {
            return Ok(theta - 1.0);
        }
        let norm = w.norm();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NonFinite("power iteration"));
        }
        v = w / norm;
    }
    Err(Error::PowerIterationStalled {
        tol,
        iters: POWER_ITERATION_BUDGET,
    })
}

/// Exact number of closed walks of length `p`, i.e. `tr(A^p)`, by checked
/// 128-bit integer matrix powers. `p = 0` gives `n`; `p` beyond
/// [`TRACE_POWER_CAP`] and any entry overflow are explicit errors.
pub fn trace_power(g: &Graph, p: u32) -> Result<u128> {
    if p > TRACE_POWER_CAP {
        return Err(Error::TracePowerCap {
            p,
            cap: TRACE_POWER_CAP,
        });
    }
    if p == 0 {
        return Ok(g.n() as u128);
    }
    let n = g.n();
    let mut base = vec![vec![0u128; n]; n];
    for &(u, v) in g.edges() {
        base[u][v] = 1;
        base[v][u] = 1;
    }
    // Exponentiation by squaring; entries are walk counts, so any overflow
    // en route is an overflow of some entry of an A^k with k <= p.
    let mut result: Option<Vec<Vec<u128>>> = None;
    let mut exp = p;
    loop {
        if exp & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => checked_matmul(&r, &base).ok_or(Error::TraceOverflow { p })?,
            });
        }
        exp >>= 1;
        if exp == 0 {
            break;
        }
        base = checked_matmul(&base, &base).ok_or(Error::TraceOverflow { p })?;
    }
    let result = result.expect("p >= 1 always selects at least one factor");
    let mut trace: u128 = 0;
    for (i, row) in result.iter().enumerate() {
        trace = trace.checked_add(row[i]).ok_or(Error::TraceOverflow { p })?;
    }
    Ok(trace)
}

fn checked_matmul(a: &[Vec<u128>], b: &[Vec<u128>]) -> Option<Vec<Vec<u128>>> {
    let n = a.len();
    let mut out = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                let prod = aik.checked_mul(b[k][j])?;
                out[i][j] = out[i][j].checked_add(prod)?;
            }
        }
    }
    Some(out)
}

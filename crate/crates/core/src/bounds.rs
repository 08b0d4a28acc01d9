//! Closed-form upper bounds on graph energy.
//!
//! Truncating the even-power trace series after `K` terms gives a chain of
//! bounds `E(G) <= S_3 <= S_2 <= S_1`, each expressible through counts of
//! small subgraphs instead of eigenvalues. [`bound1`], [`bound2`] and
//! [`bound3`] evaluate those closed forms; the classical Cauchy-Schwarz
//! bound `sqrt(2mn)` is included as [`mcclelland`] for comparison. By the
//! AM-GM inequality `sqrt(2mn) <= bound1` always holds, while `bound3` can
//! drop below `sqrt(2mn)` on sparse graphs.
//!
//! All series-derived bounds require a connected graph with at least one
//! edge, so the spectral radius is positive and the underlying expansion
//! is defined.

use num::traits::Pow;
use num::{BigInt, BigRational};

use crate::census::{census_formulas, moments_from_census, SubgraphCensus};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::series::{self, series_coefficient_alt};
use crate::spectral::{self, DEFAULT_EIGEN_TOL, DEFAULT_POWER_TOL};

fn lambda1_checked(g: &Graph, op: &'static str) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected { op });
    }
    if g.m() == 0 {
        return Err(Error::NoEdges { op });
    }
    spectral::spectral_radius(g, DEFAULT_POWER_TOL)
}

/// The Cauchy-Schwarz energy bound `sqrt(2mn)`. Total on all graphs.
pub fn mcclelland(g: &Graph) -> f64 {
    (2.0 * g.m() as f64 * g.n() as f64).sqrt()
}

/// First-order series bound `S_1 = (lambda1 / 2) n + m / lambda1`.
pub fn bound1(g: &Graph) -> Result<f64> {
    let lam = lambda1_checked(g, "first series bound")?;
    Ok(lam / 2.0 * g.n() as f64 + g.m() as f64 / lam)
}

/// Second-order series bound
/// `S_2 = (3 lambda1 / 8) n + (6 lambda1^2 - 1) / (4 lambda1^3) m
///        - p3 / (2 lambda1^3) - c4 / lambda1^3`.
pub fn bound2(g: &Graph) -> Result<f64> {
    let lam = lambda1_checked(g, "second series bound")?;
    let c = census_formulas(g)?;
    let lam3 = lam.powi(3);
    Ok(3.0 * lam / 8.0 * g.n() as f64
        + (6.0 * lam * lam - 1.0) / (4.0 * lam3) * g.m() as f64
        - c.p3 as f64 / (2.0 * lam3)
        - c.c4 as f64 / lam3)
}

/// Third-order series bound, evaluated through the trace form
/// `S_3 = lambda1 (n + tr B / 2 - tr B^2 / 8 + tr B^3 / 16)` with the
/// traces of `B = (A / lambda1)^2 - I` reconstructed from the subgraph
/// census.
///
/// Collecting terms per fragment, with `L = lambda1`, the bound reads
/// `sum(coefficient * count)` over the table below. The unit tests pin
/// this table against the trace form.
///
/// | count | coefficient                         |
/// |-------|-------------------------------------|
/// | `n`   | `5 L / 16`                          |
/// | `m`   | `(15 L^4 - 5 L^2 + 1) / (8 L^5)`    |
/// | `p3`  | `-(5 L^2 - 3) / (4 L^5)`            |
/// | `c3`  | `3 / (2 L^5)`                       |
/// | `s13` | `3 / (4 L^5)`                       |
/// | `p4`  | `3 / (8 L^5)`                       |
/// | `c4`  | `-(10 L^2 - 12) / (4 L^5)`          |
/// | `d4`  | `9 / (4 L^5)`                       |
/// | `f`   | `3 / (4 L^5)`                       |
/// | `h`   | `3 / (2 L^5)`                       |
/// | `c6`  | `3 / (4 L^5)`                       |
pub fn bound3(g: &Graph) -> Result<f64> {
    let lam = lambda1_checked(g, "third series bound")?;
    let c = census_formulas(g)?;
    Ok(bound3_from_moments(g.n(), lam, &c))
}

fn bound3_from_moments(n: usize, lam: f64, c: &SubgraphCensus) -> f64 {
    let (t2, t4, t6) = moments_from_census(c);
    let n = n as f64;
    let (t2, t4, t6) = (t2 as f64, t4 as f64, t6 as f64);
    let l2 = lam * lam;
    let trb1 = t2 / l2 - n;
    let trb2 = t4 / (l2 * l2) - 2.0 * t2 / l2 + n;
    let trb3 = t6 / (l2 * l2 * l2) - 3.0 * t4 / (l2 * l2) + 3.0 * t2 / l2 - n;
    lam * (n + trb1 / 2.0 - trb2 / 8.0 + trb3 / 16.0)
}

/// [`bound3`] specialized to connected cubic graphs of girth at least
/// five, where `lambda1 = 3` and the triangle, quadrilateral, diamond,
/// pendant-quadrilateral and bowtie counts all vanish. Only the hexagon
/// count remains graph-specific once `n` fixes `m = 3n/2`, `p3 = 3n`,
/// `s13 = n` and `p4 = 6n`.
pub fn fullerene_bound(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::NotFullereneLike("graph is disconnected".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::NotFullereneLike(format!(
            "not cubic: vertex {v} has degree {}",
            g.degree(v)
        )));
    }
    let c = census_formulas(g)?;
    if c.c3 > 0 {
        return Err(Error::NotFullereneLike(format!(
            "girth below five: {} triangles",
            c.c3
        )));
    }
    if c.c4 > 0 {
        return Err(Error::NotFullereneLike(format!(
            "girth below five: {} quadrilaterals",
            c.c4
        )));
    }
    let lam = spectral::spectral_radius(g, DEFAULT_POWER_TOL)?;
    let l2 = lam * lam;
    let l5 = l2 * l2 * lam;
    Ok(5.0 * lam / 16.0 * g.n() as f64
        + (15.0 * l2 * l2 - 5.0 * l2 + 1.0) / (8.0 * l5) * c.m as f64
        - (5.0 * l2 - 3.0) / (4.0 * l5) * c.p3 as f64
        + 3.0 / (8.0 * l5) * c.p4 as f64
        + 3.0 / (4.0 * l5) * c.s13 as f64
        + 3.0 / (4.0 * l5) * c.c6 as f64)
}

/// Leading correction from a fragment family: a fragment class whose
/// count is `eta` and whose first contribution to `tr B^k` enters at
/// order `k` shifts the partial sums by
/// `lambda1 * C(1/2, k) * eta / lambda1^{2k}`. Negative for even `k`.
pub fn fragment_first_term(eta: u64, k: u32, lambda1: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::FragmentOrderZero);
    }
    if !lambda1.is_finite() || lambda1 <= 0.0 {
        return Err(Error::NonFinite("fragment spectral radius"));
    }
    let exponent = 2 * i64::from(k) - 1;
    let lam = BigRational::from_float(lambda1).ok_or(Error::NonFinite("fragment spectral radius"))?;
    match i32::try_from(exponent) {
        Ok(e) => {
            let term = series_coefficient_alt(k) * BigRational::from(BigInt::from(eta))
                / lam.pow(e);
            Ok(series::ratio_to_f64(&term))
        }
        // Exponent beyond i32 is far past f64 underflow anyway.
        Err(_) => Ok(0.0),
    }
}

/// The whole chain for one graph: exact energy next to every bound.
/// `fullerene` is populated only when [`fullerene_bound`] applies.
#[derive(Clone, Copy, Debug)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub energy: f64,
    pub mcclelland: f64,
    pub bound1: f64,
    pub bound2: f64,
    pub bound3: f64,
    pub fullerene: Option<f64>,
}

/// Evaluates the exact energy and the full bound chain. Requires a
/// connected graph with at least one edge.
pub fn bound_chain_report(g: &Graph) -> Result<BoundReport> {
    let energy = spectral::eigenvalues(g, DEFAULT_EIGEN_TOL)?.energy();
    let b1 = bound1(g)?;
    let b2 = bound2(g)?;
    let b3 = bound3(g)?;
    let fullerene = match fullerene_bound(g) {
        Ok(v) => Some(v),
        Err(Error::NotFullereneLike(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(BoundReport {
        n: g.n(),
        m: g.m(),
        energy,
        mcclelland: mcclelland(g),
        bound1: b1,
        bound2: b2,
        bound3: b3,
        fullerene,
    })
}

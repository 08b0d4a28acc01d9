//! The even-power trace series for graph energy.
//!
//! For a connected graph with spectral radius `lambda1`, let
//! `B = (A / lambda1)^2 - I`. `B` is negative semidefinite with spectrum in
//! `[-1, 0]`, and expanding `|lambda| = lambda1 * sqrt(1 + beta)` per
//! eigenvalue gives
//!
//! ```text
//! E(G) = lambda1 * tr sum_{k>=0} C(1/2, k) B^k
//!      = lambda1 * sum_{k>=0} C(1/2, k) sum_{l<=k} C(k, l) (-1)^{k-l} tr(A^{2l}) / lambda1^{2l}
//! ```
//!
//! where `C(1/2, k)` is the generalized binomial coefficient. The first
//! coefficients are:
//!
//! | k | 0 | 1   | 2    | 3    | 4      | 5     |
//! |---|---|-----|------|------|--------|-------|
//! | C | 1 | 1/2 | -1/8 | 1/16 | -5/128 | 7/256 |
//!
//! Truncating after `K` terms yields the partial sums `S_K`, which are
//! upper bounds on the energy and decrease monotonically in `K`.
//!
//! Numerically the binomial sum for `tr B^k` cancels catastrophically in
//! floating point once `k` is large, so the whole pipeline is exact: the
//! traces `tr(A^{2l})` are exact big integers, the coefficients are exact
//! big rationals, and the supplied `lambda1` is mapped to the exact
//! rational value of its `f64` bit pattern. Division by `lambda1` powers
//! therefore happens inside exact arithmetic and only the final result is
//! rounded to `f64`. For regular graphs the power iteration returns the
//! degree exactly and the computation is exact end to end.
//!
//! Convergence is geometric when `B` has no eigenvalue at `-1`, i.e. when
//! the adjacency matrix is nonsingular. A singular adjacency matrix (C4 is
//! the smallest cycle example) puts mass at the series boundary and the
//! remainder decays only like `K^{-1/2}`; [`converge`] reports
//! `converged = false` in that regime rather than pretending otherwise.

use num::bigint::Sign;
use num::{BigInt, BigRational, BigUint, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{self, DEFAULT_POWER_TOL};

/// Default truncation depth for [`converge`].
pub const DEFAULT_K_MAX: usize = 512;

/// Default stopping tolerance on `|S_K - S_{K-1}|` for [`converge`].
pub const DEFAULT_CONVERGE_TOL: f64 = 1e-9;

/// A caller-supplied spectral radius must match the recomputed one this
/// closely.
pub const LAMBDA1_VALIDATION_TOL: f64 = 1e-8;

/// Generalized binomial coefficient `C(1/2, k)` as an exact rational,
/// from the falling-factorial definition.
pub fn binomial_half(k: u32) -> BigRational {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut num = BigRational::one();
    for i in 0..k {
        num *= &half - BigRational::from(BigInt::from(i));
    }
    let mut fact = BigInt::one();
    for i in 1..=k {
        fact *= BigInt::from(i);
    }
    num / BigRational::from(fact)
}

/// The same coefficient in central-binomial form,
/// `C(2k, k) * (-1)^{k+1} / (4^k * (2k - 1))`. Kept as an independent
/// route so the identity with [`binomial_half`] stays testable.
pub fn series_coefficient_alt(k: u32) -> BigRational {
    let mut central = BigInt::one();
    for i in 0..k {
        // C(2k, k) built incrementally: C(2(i+1), i+1) = C(2i, i) * 2(2i+1)/(i+1).
        central = central * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 1);
    }
    let sign = if k % 2 == 0 { -1 } else { 1 };
    let num = central * BigInt::from(sign);
    let den = BigInt::from(4).pow(k) * (BigInt::from(2) * BigInt::from(k) - BigInt::one());
    BigRational::new(num, den)
}

/// Rounds a big rational to `f64` without overflowing on huge numerators
/// or denominators. Values below 2^-128 in magnitude collapse to zero.
pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.numer().is_zero() {
        return 0.0;
    }
    let negative = r.numer().sign() == Sign::Minus;
    let scaled: BigUint = (r.numer().magnitude() << 128usize) / r.denom().magnitude();
    let f = scaled.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(128);
    if negative {
        -f
    } else {
        f
    }
}

/// Incremental exact evaluation of `tr B^k` and the partial sums `S_k`.
struct ExactSeries {
    x: BigRational,    // 1 / lambda1^2, exact
    lam: BigRational,  // lambda1, exact image of the f64
    a2: Vec<Vec<BigUint>>,
    power: Option<Vec<Vec<BigUint>>>, // A^{2l} for the largest l so far
    y: Vec<BigRational>,              // y[l] = tr(A^{2l}) * x^l
    xpow: BigRational,                // x^{y.len() - 1}
    binom: Vec<BigInt>,               // row C(k, l) for the last emitted k
    half: BigRational,                // C(1/2, k) for the last emitted k
    acc: BigRational,                 // sum_{j<=k} C(1/2, j) tr B^j
    next_k: usize,
}

impl ExactSeries {
    fn new(g: &Graph, lambda1: f64) -> Result<ExactSeries> {
        if !lambda1.is_finite() || lambda1 <= 0.0 {
            return Err(Error::NonFinite("series spectral radius"));
        }
        let lam = BigRational::from_float(lambda1).ok_or(Error::NonFinite("series spectral radius"))?;
        let n = g.n();
        let mut a2 = vec![vec![BigUint::ZERO; n]; n];
        for i in 0..n {
            for &j in g.neighbors(i) {
                for &k in g.neighbors(j) {
                    a2[i][k] += 1u32;
                }
            }
        }
        Ok(ExactSeries {
            x: (&lam * &lam).recip(),
            lam,
            a2,
            power: None,
            y: vec![BigRational::from(BigInt::from(n))],
            xpow: BigRational::one(),
            binom: Vec::new(),
            half: BigRational::one(),
            acc: BigRational::zero(),
            next_k: 0,
        })
    }

    fn extend_traces(&mut self, l: usize) {
        while self.y.len() <= l {
            let next = match &self.power {
                None => self.a2.clone(),
                Some(p) => big_matmul(p, &self.a2),
            };
            let trace: BigUint = (0..next.len()).map(|i| next[i][i].clone()).sum();
            self.power = Some(next);
            self.xpow *= &self.x;
            let t = BigRational::from(BigInt::from(trace));
            self.y.push(t * &self.xpow);
        }
    }

    /// Emits `(tr B^k, S_k)` for the next `k`, starting at `k = 0`.
    fn step(&mut self) -> (BigRational, BigRational) {
        let k = self.next_k;
        self.extend_traces(k);
        if k == 0 {
            self.binom = vec![BigInt::one()];
        } else {
            // In-place Pascal update to the row C(k, .).
            self.binom.push(BigInt::one());
            for l in (1..k).rev() {
                let left = self.binom[l - 1].clone();
                self.binom[l] += left;
            }
            let half_prev = self.half.clone();
            let step = (BigRational::new(BigInt::one(), BigInt::from(2))
                - BigRational::from(BigInt::from(k as i64 - 1)))
                / BigRational::from(BigInt::from(k as i64));
            self.half = half_prev * step;
        }
        let mut tb = BigRational::zero();
        for l in 0..=k {
            let term = BigRational::from(self.binom[l].clone()) * &self.y[l];
            if (k - l) % 2 == 0 {
                tb += term;
            } else {
                tb -= term;
            }
        }
        self.acc += &self.half * &tb;
        let s = &self.lam * &self.acc;
        self.next_k += 1;
        (tb, s)
    }
}

fn big_matmul(a: &[Vec<BigUint>], b: &[Vec<BigUint>]) -> Vec<Vec<BigUint>> {
    let n = a.len();
    let mut out = vec![vec![BigUint::ZERO; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == BigUint::ZERO {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn precheck(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "series expansion",
        });
    }
    if g.m() == 0 {
        return Err(Error::NoEdges {
            op: "series expansion",
        });
    }
    spectral::spectral_radius(g, DEFAULT_POWER_TOL)
}

/// `tr B^k` for `B = (A / lambda1)^2 - I`, evaluated exactly from integer
/// traces of even adjacency powers. The supplied `lambda1` is validated
/// against the graph's recomputed spectral radius.
pub fn trace_b_power(g: &Graph, lambda1: f64, k: usize) -> Result<f64> {
    let computed = precheck(g)?;
    if !(lambda1 - computed).abs().le(&LAMBDA1_VALIDATION_TOL) {
        return Err(Error::SpectralRadiusMismatch {
            supplied: lambda1,
            computed,
            tol: LAMBDA1_VALIDATION_TOL,
        });
    }
    let mut engine = ExactSeries::new(g, lambda1)?;
    let mut last = engine.step();
    for _ in 0..k {
        last = engine.step();
    }
    Ok(ratio_to_f64(&last.0))
}

/// The truncated expansion up to `k_max`, with all intermediate values.
#[derive(Clone, Debug)]
pub struct SeriesExpansion {
    pub lambda1: f64,
    /// `tr B^k` for `k = 0..=k_max`.
    pub b_traces: Vec<f64>,
    /// `S_k` for `k = 0..=k_max`; non-increasing upper bounds on the energy.
    pub partial_sums: Vec<f64>,
}

/// Computes `tr B^k` and `S_k` for every `k <= k_max`.
pub fn expansion(g: &Graph, k_max: usize) -> Result<SeriesExpansion> {
    let lambda1 = precheck(g)?;
    let mut engine = ExactSeries::new(g, lambda1)?;
    let mut b_traces = Vec::with_capacity(k_max + 1);
    let mut partial_sums = Vec::with_capacity(k_max + 1);
    for _ in 0..=k_max {
        let (tb, s) = engine.step();
        b_traces.push(ratio_to_f64(&tb));
        partial_sums.push(ratio_to_f64(&s));
    }
    Ok(SeriesExpansion {
        lambda1,
        b_traces,
        partial_sums,
    })
}

/// The partial sum `S_K = lambda1 * sum_{k<=K} C(1/2, k) tr B^k`.
pub fn partial_sum(g: &Graph, k: usize) -> Result<f64> {
    Ok(expansion(g, k)?.partial_sums[k])
}

/// Outcome of iterating the partial sums until they stall or the depth cap
/// is hit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Convergence {
    pub estimate: f64,
    pub k_used: usize,
    pub converged: bool,
}

/// Iterates `S_K` until `|S_K - S_{K-1}| <= tol` or `K = k_max`. With a
/// singular adjacency matrix the tail decays like `K^{-1/2}` and the
/// tolerance is typically never reached; the partial sums still upper-bound
/// the energy.
pub fn converge(g: &Graph, tol: f64, k_max: usize) -> Result<Convergence> {
    let lambda1 = precheck(g)?;
    let mut engine = ExactSeries::new(g, lambda1)?;
    let (_, mut prev) = engine.step();
    for k in 1..=k_max {
        let (_, s) = engine.step();
        let diff = ratio_to_f64(&(&s - &prev).abs());
        prev = s;
        if diff <= tol {
            return Ok(Convergence {
                estimate: ratio_to_f64(&prev),
                k_used: k,
                converged: true,
            });
        }
    }
    Ok(Convergence {
        estimate: ratio_to_f64(&prev),
        k_used: k_max,
        converged: false,
    })
}

//! End-to-end acceptance checks. Each test covers one numbered criterion,
//! prints exactly one `criterion N: PASS/FAIL` line with the measured
//! values, and only then asserts. Run with `--nocapture` to see the lines
//! for passing tests too.
//!
//! Golden table cells are compared in integer milli-units:
//! `|1000 x - printed_milli| <= 0.5` is the exact-arithmetic form of
//! "within 5e-4 of the printed value". Several cells sit exactly on the
//! boundary (e.g. 14.0625 printed as 14.062), and a naive
//! `(x - 14.062).abs() <= 5e-4` comparison fails there by one part in
//! 2^52 because 14.062 is not a binary fraction.

use std::time::{Duration, Instant};

use graph_energy::{
    binomial_half, bound1, bound2, bound3, census_bruteforce, census_formulas, energy_exact,
    expansion, fragment_first_term, generate, mcclelland, moments_from_census, partial_sum,
    series_coefficient_alt, spectral_radius, trace_power, Family, Graph, DEFAULT_POWER_TOL,
};
use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `5e-4` absolute on a printed 3-decimal cell, in milli-units.
const TABLE_CELL_TOL_MILLI: f64 = 0.5;
/// `1e-3` absolute on the one 4-decimal cell, in tenth-milli units.
const FOUR_DECIMAL_TOL_TENTH_MILLI: f64 = 10.0;
const TABLE_RUNTIME_BUDGET: Duration = Duration::from_secs(1);
const SERIES_ORACLE_TOL: f64 = 1e-8;
const CHAIN_SLACK: f64 = 1e-9;
const CLOSED_FORM_TOL: f64 = 1e-12;
const FRAGMENT_TOL: f64 = 1e-12;
const CONVERGENCE_BAND: f64 = 0.1;
const COEFFICIENT_GUARD_GAP: f64 = 0.04;

/// (energy, sqrt(2mn), first, second, third bound) for one graph.
fn chain_row(g: &Graph) -> [f64; 5] {
    [
        energy_exact(g).unwrap(),
        mcclelland(g),
        bound1(g).unwrap(),
        bound2(g).unwrap(),
        bound3(g).unwrap(),
    ]
}

fn random_connected(rng: &mut ChaCha8Rng, n_max: usize) -> Graph {
    let n = rng.gen_range(2..=n_max);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let p: f64 = rng.gen_range(0.1..0.8);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn random_any(rng: &mut ChaCha8Rng, n_max: usize) -> Graph {
    let n = rng.gen_range(1..=n_max);
    let p: f64 = rng.gen_range(0.0..1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn criterion_1_cycle_table() {
    let printed_milli: [(usize, [i64; 5]); 8] = [
        (3, [4000, 4243, 4500, 4219, 4113]),
        (4, [4000, 5657, 6000, 5500, 5250]),
        (5, [6472, 7071, 7500, 7031, 6836]),
        (6, [8000, 8485, 9000, 8438, 8227]),
        (7, [8988, 9899, 10500, 9844, 9570]),
        (8, [9657, 11314, 12000, 11250, 10938]),
        (9, [11517, 12728, 13500, 12656, 12305]),
        (10, [12944, 14142, 15000, 14062, 13672]),
    ];
    let columns = ["energy", "sqrt(2mn)", "bound1", "bound2", "bound3"];
    let start = Instant::now();
    let rows: Vec<(usize, [f64; 5])> = printed_milli
        .iter()
        .map(|&(n, _)| (n, chain_row(&generate(Family::Cycle, n).unwrap())))
        .collect();
    let elapsed = start.elapsed();
    let mut bad = Vec::new();
    for ((n, got), (_, want)) in rows.iter().zip(printed_milli.iter()) {
        for (c, (&x, &milli)) in got.iter().zip(want.iter()).enumerate() {
            let diff = (x * 1000.0 - milli as f64).abs();
            if diff > TABLE_CELL_TOL_MILLI {
                bad.push(format!(
                    "C_{n} {}: computed {x:.7} vs printed {:.3} (off by {:.7})",
                    columns[c],
                    milli as f64 / 1000.0,
                    diff / 1000.0
                ));
            }
        }
    }
    if bad.is_empty() {
        println!(
            "criterion 1: PASS — all 40 cycle-table cells within 5e-4, computed in {elapsed:?}"
        );
    } else {
        println!(
            "criterion 1: FAIL — {} of 40 cells off (computed in {elapsed:?}): {}",
            bad.len(),
            bad.join("; ")
        );
    }
    assert!(
        elapsed < TABLE_RUNTIME_BUDGET,
        "table took {elapsed:?}, budget {TABLE_RUNTIME_BUDGET:?}"
    );
    assert!(bad.is_empty(), "{}", bad.join("; "));
}

#[test]
fn criterion_2_cubic_table_builtin_row() {
    let g = generate(Family::Dodecahedron, 20).unwrap();
    let row = chain_row(&g);
    let mut bad = Vec::new();
    // First four cells print with 3 decimals, the last with 4.
    for (x, milli, name) in [
        (row[0], 29416, "energy"),
        (row[1], 34641, "sqrt(2mn)"),
        (row[2], 40000, "bound1"),
        (row[3], 36111, "bound2"),
    ] {
        let diff = (x * 1000.0 - milli as f64).abs();
        if diff > TABLE_CELL_TOL_MILLI {
            bad.push(format!("{name}: {x:.7} vs {:.3}", milli as f64 / 1000.0));
        }
    }
    let b3_diff = (row[4] * 10000.0 - 344753.0).abs();
    if b3_diff > FOUR_DECIMAL_TOL_TENTH_MILLI {
        bad.push(format!("bound3: {:.7} vs 34.4753", row[4]));
    }
    // On a connected cubic graph the first two bounds collapse to closed
    // forms in n alone: sqrt(2mn) = n sqrt(3) and bound1 = 2n.
    let n = g.n() as f64;
    if (row[1] - n * 3f64.sqrt()).abs() > CLOSED_FORM_TOL {
        bad.push(format!("sqrt(2mn) != n sqrt(3): {}", row[1]));
    }
    if (row[2] - 2.0 * n).abs() > CLOSED_FORM_TOL {
        bad.push(format!("bound1 != 2n: {}", row[2]));
    }
    if bad.is_empty() {
        println!(
            "criterion 2: PASS — n=20 row ({:.3}, {:.3}, {:.0}, {:.3}, {:.4}) matches within tolerance",
            row[0], row[1], row[2], row[3], row[4]
        );
    } else {
        println!("criterion 2: FAIL — {}", bad.join("; "));
    }
    assert!(bad.is_empty(), "{}", bad.join("; "));
}

#[test]
fn criterion_3_series_equals_eigenvalue_route() {
    // The eigenvalue route evaluates the same truncations directly from the
    // spectrum: lambda1 * sum_k C(1/2,k) * sum_j ((lambda_j/lambda1)^2 - 1)^k.
    fn eigen_partial_sums(g: &Graph, k_max: usize) -> Vec<f64> {
        let lam = spectral_radius(g, DEFAULT_POWER_TOL).unwrap();
        let spec = graph_energy::eigenvalues(g, graph_energy::DEFAULT_EIGEN_TOL).unwrap();
        let betas: Vec<f64> = spec
            .eigenvalues()
            .iter()
            .map(|l| (l / lam) * (l / lam) - 1.0)
            .collect();
        let mut powers = vec![1.0; betas.len()];
        let mut acc = 0.0;
        let mut out = Vec::with_capacity(k_max + 1);
        for k in 0..=k_max {
            if k > 0 {
                for (p, b) in powers.iter_mut().zip(&betas) {
                    *p *= b;
                }
            }
            let tr: f64 = powers.iter().sum();
            acc += binomial_half(k as u32).to_f64().unwrap() * tr;
            out.push(lam * acc);
        }
        out
    }

    let mut population = Vec::new();
    for n in 3..=10 {
        population.push(generate(Family::Cycle, n).unwrap());
    }
    for n in 2..=10 {
        population.push(generate(Family::Path, n).unwrap());
        population.push(generate(Family::Star, n).unwrap());
        population.push(generate(Family::Complete, n).unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e21e5);
    for _ in 0..60 {
        population.push(random_connected(&mut rng, 10));
    }

    let mut worst = 0.0f64;
    for g in &population {
        let oracle = eigen_partial_sums(g, 8);
        for (k, want) in oracle.iter().enumerate() {
            let got = partial_sum(g, k).unwrap();
            worst = worst.max((got - want).abs());
        }
    }
    let ok = worst <= SERIES_ORACLE_TOL;
    println!(
        "criterion 3: {} — {} graphs, K <= 8, max |series - eigenvalue route| = {worst:.3e}",
        if ok { "PASS" } else { "FAIL" },
        population.len()
    );
    assert!(ok, "worst deviation {worst:.3e} > {SERIES_ORACLE_TOL:.0e}");
}

#[test]
fn criterion_4_monotone_chain_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xcba1);
    let mut violations = Vec::new();
    for i in 0..200 {
        let g = random_connected(&mut rng, 12);
        let e = energy_exact(&g).unwrap();
        let (b1, b2, b3) = (
            bound1(&g).unwrap(),
            bound2(&g).unwrap(),
            bound3(&g).unwrap(),
        );
        let mc = mcclelland(&g);
        for (label, lo, hi) in [
            ("E <= S3", e, b3),
            ("S3 <= S2", b3, b2),
            ("S2 <= S1", b2, b1),
            ("sqrt(2mn) <= S1", mc, b1),
        ] {
            if lo > hi + CHAIN_SLACK {
                violations.push(format!("graph {i} (n={}): {label} ({lo} > {hi})", g.n()));
            }
        }
    }
    if violations.is_empty() {
        println!("criterion 4: PASS — chain held on 200 random connected graphs (n <= 12)");
    } else {
        println!("criterion 4: FAIL — {}", violations.join("; "));
    }
    assert!(violations.is_empty(), "{}", violations.join("; "));
}

#[test]
fn criterion_5_census_routes_and_moments() {
    fn check(g: &Graph, failures: &mut Vec<String>, what: &str) {
        let fast = census_formulas(g).unwrap();
        let slow = census_bruteforce(g).unwrap();
        if fast != slow {
            failures.push(format!("{what}: formulas {fast:?} != bruteforce {slow:?}"));
            return;
        }
        let (t2, t4, t6) = moments_from_census(&fast);
        for (p, want) in [(2u32, t2), (4, t4), (6, t6)] {
            let direct = trace_power(g, p).unwrap();
            if want != direct {
                failures.push(format!("{what}: census moment p={p} {want} != trace {direct}"));
            }
        }
    }

    let mut failures = Vec::new();
    let mut connected_count = 0u64;
    for n in 1..=7usize {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                pairs.push((u, v));
            }
        }
        for mask in 0u32..(1u32 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            connected_count += 1;
            check(&g, &mut failures, &format!("n={n} mask={mask}"));
            if !failures.is_empty() {
                break;
            }
        }
        if !failures.is_empty() {
            break;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xce0505);
    for i in 0..200 {
        let g = random_any(&mut rng, 9);
        check(&g, &mut failures, &format!("random {i}"));
    }
    if failures.is_empty() {
        println!(
            "criterion 5: PASS — {connected_count} exhaustive connected graphs (n <= 7) and 200 random graphs (n <= 9), integer-exact agreement"
        );
    } else {
        println!("criterion 5: FAIL — {}", failures.join("; "));
    }
    assert!(failures.is_empty(), "{}", failures.join("; "));
}

#[test]
fn criterion_6_coefficient_identity() {
    for k in 0..=30u32 {
        assert_eq!(
            series_coefficient_alt(k),
            binomial_half(k),
            "coefficient forms disagree at k = {k}"
        );
    }
    println!("criterion 6: PASS — both coefficient forms identical as exact rationals, k = 0..30");
}

#[test]
fn criterion_7_fragment_first_term() {
    let mut worst = 0.0f64;
    for lam in [2.0f64, 3.0] {
        let want = -5.0 / (8.0 * lam.powi(7));
        let got = fragment_first_term(16, 4, lam).unwrap();
        worst = worst.max((got - want).abs());
    }
    let ok = worst <= FRAGMENT_TOL;
    println!(
        "criterion 7: {} — eta=16 at order 4 equals -5/(8 lambda1^7); max deviation {worst:.3e}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "deviation {worst:.3e} > {FRAGMENT_TOL:.0e}");
}

#[test]
fn criterion_8_quadrilateral_tail() {
    // C4 has nullity 2, so half its spectral mass sits at the boundary
    // eigenvalue of B and the series tail decays like K^{-1/2}.
    let c4 = generate(Family::Cycle, 4).unwrap();
    let exp = expansion(&c4, 512).unwrap();
    let sums = &exp.partial_sums;
    let mut monotone = true;
    for k in 1..=500 {
        if sums[k] > sums[k - 1] {
            monotone = false;
        }
    }
    let remainder = (sums[500] - 4.0).abs();
    let first_inside = (1..=512).find(|&k| (sums[k] - 4.0).abs() <= CONVERGENCE_BAND);
    let ok = monotone && remainder <= CONVERGENCE_BAND;
    println!(
        "criterion 8: {} — monotone: {monotone}; |S_500(C4) - 4| = {remainder:.9} vs band {CONVERGENCE_BAND}; first K inside band: {first_inside:?}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(monotone, "partial sums not monotone");
    assert!(
        remainder <= CONVERGENCE_BAND,
        "|S_500(C4) - 4| = {remainder:.9} > {CONVERGENCE_BAND}"
    );
}

#[test]
fn criterion_9_coefficient_regression_guard() {
    // A plausible-looking variant of the third-bound coefficient table
    // circulates with five entries off by factor-of-two slips (m, c4, p4,
    // s13, d4, f, c6). It must NOT reproduce the known triangle value;
    // the trace form must. This pins the choice of the trace form as the
    // source of truth.
    let g = generate(Family::Cycle, 3).unwrap();
    let c = census_formulas(&g).unwrap();
    let lam = spectral_radius(&g, DEFAULT_POWER_TOL).unwrap();
    let (l2, n) = (lam * lam, g.n() as f64);
    let l5 = l2 * l2 * lam;
    let variant = 5.0 * lam / 16.0 * n
        + (30.0 * l2 * l2 - 12.0 * l2 + 1.0) / (16.0 * l5) * c.m as f64
        - (5.0 * l2 - 3.0) / (4.0 * l5) * c.p3 as f64
        - (7.0 * l2 - 12.0) / (4.0 * l5) * c.c4 as f64
        + 3.0 / (2.0 * l5) * c.c3 as f64
        + 3.0 / (4.0 * l5) * c.p4 as f64
        + 3.0 / (2.0 * l5) * c.s13 as f64
        + 9.0 / (2.0 * l5) * c.d4 as f64
        + 3.0 / (2.0 * l5) * c.f as f64
        + 3.0 / (2.0 * l5) * c.h as f64
        + 3.0 / (2.0 * l5) * c.c6 as f64;
    let trace_form = bound3(&g).unwrap();
    let variant_gap = (variant - 4.113).abs();
    let trace_gap_milli = (trace_form * 1000.0 - 4113.0).abs();
    let ok = variant_gap > COEFFICIENT_GUARD_GAP && trace_gap_milli <= TABLE_CELL_TOL_MILLI;
    println!(
        "criterion 9: {} — variant coefficients give {variant:.9} (off by {variant_gap:.6} > {COEFFICIENT_GUARD_GAP}), trace form gives {trace_form:.9} (within 5e-4 of 4.113)",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(
        variant_gap > COEFFICIENT_GUARD_GAP,
        "variant unexpectedly close: {variant}"
    );
    assert!(
        trace_gap_milli <= TABLE_CELL_TOL_MILLI,
        "trace form off: {trace_form}"
    );
}

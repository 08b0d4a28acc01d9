//! Exact counts of the small subgraphs that control the low even traces
//! of an adjacency matrix.
//!
//! The counted fragments, in struct order, are the edge (`m`), the path on
//! three vertices (`p3`), the triangle (`c3`), the star on four vertices
//! (`s13`), the path on four vertices (`p4`), the quadrilateral (`c4`),
//! the diamond `K4 - e` (`d4`), the quadrilateral with a pendant edge
//! (`f`), the bowtie of two triangles sharing a vertex (`h`), and the
//! hexagon (`c6`). All counts are of subgraphs, not induced subgraphs:
//! a triangle contains three of the paths counted by `p3`.
//!
//! These ten counts determine the traces of `A^2`, `A^4` and `A^6`:
//!
//! ```text
//! tr A^2 = 2m
//! tr A^4 = 2m +  4 p3 + 8 c4
//! tr A^6 = 2m + 12 p3 + 24 c3 + 48 c4 + 12 s13 + 6 p4 + 36 d4
//!             + 12 f + 24 h + 12 c6
//! ```
//!
//! Two independent routes are provided. [`census_bruteforce`] enumerates
//! vertex subsets and counts spanning embeddings through a precomputed
//! pattern table, which is transparent but exponential in spirit and
//! capped at [`BRUTEFORCE_VERTEX_CAP`] vertices. [`census_formulas`]
//! evaluates degree- and trace-based closed forms in `O(n * m)` integer
//! arithmetic; every implied division is checked for exactness so a broken
//! formula fails loudly instead of rounding.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// [`census_bruteforce`] refuses graphs with more vertices than this; the
/// subset enumeration is a cross-check, not a production path.
pub const BRUTEFORCE_VERTEX_CAP: usize = 60;

/// Subgraph counts of every fragment that contributes to the traces of
/// `A^2`, `A^4` and `A^6`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SubgraphCensus {
    pub m: u64,
    pub p3: u64,
    pub c3: u64,
    pub s13: u64,
    pub p4: u64,
    pub c4: u64,
    pub d4: u64,
    pub f: u64,
    pub h: u64,
    pub c6: u64,
}

/// `(tr A^2, tr A^4, tr A^6)` reconstructed from a census via the
/// closed-walk identities in the module docs.
pub fn moments_from_census(c: &SubgraphCensus) -> (u128, u128, u128) {
    let m = c.m as u128;
    let t2 = 2 * m;
    let t4 = 2 * m + 4 * c.p3 as u128 + 8 * c.c4 as u128;
    let t6 = 2 * m
        + 12 * c.p3 as u128
        + 24 * c.c3 as u128
        + 48 * c.c4 as u128
        + 12 * c.s13 as u128
        + 6 * c.p4 as u128
        + 36 * c.d4 as u128
        + 12 * c.f as u128
        + 24 * c.h as u128
        + 12 * c.c6 as u128;
    (t2, t4, t6)
}

// Fragment edge lists on locally numbered vertices, with automorphism
// group orders. The brute-force route divides labeled embeddings by the
// automorphism count, so these constants are load-bearing; the unit tests
// pin each fragment's count on its own graph to exactly one.
const P3_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2)];
const C3_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (0, 2)];
const S13_EDGES: &[(usize, usize)] = &[(0, 1), (0, 2), (0, 3)];
const P4_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3)];
const C4_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (0, 3)];
const D4_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)];
const F_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)];
const H_EDGES: &[(usize, usize)] = &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)];
const C6_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)];

fn permutations(size: usize) -> Vec<Vec<usize>> {
    fn rec(avail: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if avail.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..avail.len() {
            let v = avail.remove(i);
            cur.push(v);
            rec(avail, cur, out);
            cur.pop();
            avail.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..size).collect(), &mut Vec::new(), &mut out);
    out
}

/// For every edge mask on `size` vertices, the number of spanning
/// subgraphs isomorphic to each fragment: labeled embeddings divided by
/// the automorphism order.
fn build_table<const NF: usize>(
    size: usize,
    fragments: [(&[(usize, usize)], u64); NF],
) -> Vec<[u64; NF]> {
    let mut pair_idx = vec![vec![0usize; size]; size];
    let mut npairs = 0;
    for i in 0..size {
        for j in (i + 1)..size {
            pair_idx[i][j] = npairs;
            pair_idx[j][i] = npairs;
            npairs += 1;
        }
    }
    let perms = permutations(size);
    let mut table = vec![[0u64; NF]; 1 << npairs];
    for (mask, row) in table.iter_mut().enumerate() {
        for (fi, (edges, aut)) in fragments.iter().enumerate() {
            let mut embeddings = 0u64;
            for p in &perms {
                if edges
                    .iter()
                    .all(|&(a, b)| mask >> pair_idx[p[a]][p[b]] & 1 == 1)
                {
                    embeddings += 1;
                }
            }
            debug_assert_eq!(embeddings % aut, 0);
            row[fi] = embeddings / aut;
        }
    }
    table
}

static TABLE3: OnceLock<Vec<[u64; 2]>> = OnceLock::new();
static TABLE4: OnceLock<Vec<[u64; 4]>> = OnceLock::new();
static TABLE5: OnceLock<Vec<[u64; 2]>> = OnceLock::new();
static TABLE6: OnceLock<Vec<[u64; 1]>> = OnceLock::new();

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n || k == 0 {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Counts every fragment by enumerating vertex subsets of sizes three to
/// six and classifying the induced edge pattern. Exact but exponential;
/// refuses graphs beyond [`BRUTEFORCE_VERTEX_CAP`] vertices.
pub fn census_bruteforce(g: &Graph) -> Result<SubgraphCensus> {
    let n = g.n();
    if n > BRUTEFORCE_VERTEX_CAP {
        return Err(Error::CensusTooLarge {
            n,
            cap: BRUTEFORCE_VERTEX_CAP,
        });
    }
    let t3 = TABLE3.get_or_init(|| build_table(3, [(P3_EDGES, 2), (C3_EDGES, 6)]));
    let t4 = TABLE4.get_or_init(|| {
        build_table(
            4,
            [(S13_EDGES, 6), (P4_EDGES, 2), (C4_EDGES, 8), (D4_EDGES, 4)],
        )
    });
    let t5 = TABLE5.get_or_init(|| build_table(5, [(F_EDGES, 2), (H_EDGES, 8)]));
    let t6 = TABLE6.get_or_init(|| build_table(6, [(C6_EDGES, 12)]));

    let mut census = SubgraphCensus {
        m: g.m() as u64,
        ..SubgraphCensus::default()
    };
    let mask_of = |sub: &[usize]| -> usize {
        let mut mask = 0usize;
        let mut bit = 0;
        for a in 0..sub.len() {
            for b in (a + 1)..sub.len() {
                if g.has_edge(sub[a], sub[b]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    };
    for_each_subset(n, 3, |sub| {
        let row = &t3[mask_of(sub)];
        census.p3 += row[0];
        census.c3 += row[1];
    });
    for_each_subset(n, 4, |sub| {
        let row = &t4[mask_of(sub)];
        census.s13 += row[0];
        census.p4 += row[1];
        census.c4 += row[2];
        census.d4 += row[3];
    });
    for_each_subset(n, 5, |sub| {
        let row = &t5[mask_of(sub)];
        census.f += row[0];
        census.h += row[1];
    });
    for_each_subset(n, 6, |sub| {
        census.c6 += t6[mask_of(sub)][0];
    });
    Ok(census)
}

fn choose2(x: u128) -> u128 {
    x * x.saturating_sub(1) / 2
}

fn choose3(x: u128) -> u128 {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

fn exact_div(num: u128, den: u128, what: &str) -> Result<u128> {
    if num % den != 0 {
        return Err(Error::CensusInconsistent(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(num / den)
}

fn exact_sub(a: u128, b: u128, what: &str) -> Result<u128> {
    a.checked_sub(b).ok_or_else(|| {
        Error::CensusInconsistent(format!("{what}: correction {b} exceeds raw count {a}"))
    })
}

fn narrow(x: u128, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::CensusInconsistent(format!("{what}: count exceeds u64")))
}

/// Counts every fragment through closed forms in the degrees, the common
/// neighbor counts, and the traces of `A^4` and `A^6`, in `O(n * m)`
/// integer arithmetic. Inclusion-exclusion corrections and trace
/// inversions are checked for exactness.
pub fn census_formulas(g: &Graph) -> Result<SubgraphCensus> {
    let n = g.n();
    let mut p3 = 0u128;
    let mut s13 = 0u128;
    let mut t4 = 0u128;
    let mut t6 = 0u128;
    let mut f_raw = 0u128;
    let mut h_pairs = 0u128;
    let mut a2row = vec![0u64; n];
    let mut a3row = vec![0u64; n];
    for i in 0..n {
        a2row.fill(0);
        for &u in g.neighbors(i) {
            for &w in g.neighbors(u) {
                a2row[w] += 1;
            }
        }
        let di = a2row[i] as u128;
        p3 += choose2(di);
        s13 += choose3(di);
        // Off-diagonal entries of A^2 are common neighbor counts; a pair of
        // common neighbors of {i, j} closes a quadrilateral through i.
        let mut cyc4_i = 0u128;
        for (j, &c) in a2row.iter().enumerate() {
            t4 += (c as u128) * (c as u128);
            if j != i {
                cyc4_i += choose2(c as u128);
            }
        }
        f_raw += di * cyc4_i;
        for (j, slot) in a3row.iter_mut().enumerate() {
            let mut s = 0u64;
            for &u in g.neighbors(j) {
                s += a2row[u];
            }
            *slot = s;
        }
        for &v in a3row.iter() {
            t6 += (v as u128) * (v as u128);
        }
        // The diagonal of A^3 is twice the triangle count at the vertex.
        h_pairs += choose2((a3row[i] / 2) as u128);
    }

    let m = g.m() as u128;
    let mut tri3 = 0u128;
    let mut d4 = 0u128;
    let mut p4_raw = 0u128;
    for &(u, v) in g.edges() {
        let c = g.common_neighbors(u, v) as u128;
        tri3 += c;
        d4 += choose2(c);
        p4_raw += (g.degree(u) as u128 - 1) * (g.degree(v) as u128 - 1);
    }
    let c3 = exact_div(tri3, 3, "triangles")?;
    let c4 = exact_div(
        exact_sub(t4, 2 * m + 4 * p3, "tr A^4 inversion")?,
        8,
        "quadrilaterals",
    )?;
    let p4 = exact_sub(p4_raw, 3 * c3, "paths on four vertices")?;
    let f = exact_sub(f_raw, 8 * c4 + 2 * d4, "pendant quadrilaterals")?;
    let h = exact_sub(h_pairs, 2 * d4, "bowties")?;
    let lower = 2 * m + 12 * p3 + 24 * c3 + 48 * c4 + 12 * s13 + 6 * p4 + 36 * d4 + 12 * f + 24 * h;
    let c6 = exact_div(
        exact_sub(t6, lower, "tr A^6 inversion")?,
        12,
        "hexagons",
    )?;
    Ok(SubgraphCensus {
        m: g.m() as u64,
        p3: narrow(p3, "p3")?,
        c3: narrow(c3, "c3")?,
        s13: narrow(s13, "s13")?,
        p4: narrow(p4, "p4")?,
        c4: narrow(c4, "c4")?,
        d4: narrow(d4, "d4")?,
        f: narrow(f, "f")?,
        h: narrow(h, "h")?,
        c6: narrow(c6, "c6")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, Graph};
    use crate::spectral::trace_power;

    fn diamond() -> Graph {
        Graph::from_edges(4, D4_EDGES.iter().copied()).unwrap()
    }

    #[test]
    fn diamond_census_both_routes() {
        let want = SubgraphCensus {
            m: 5,
            p3: 8,
            c3: 2,
            s13: 2,
            p4: 6,
            c4: 1,
            d4: 1,
            f: 0,
            h: 0,
            c6: 0,
        };
        assert_eq!(census_bruteforce(&diamond()).unwrap(), want);
        assert_eq!(census_formulas(&diamond()).unwrap(), want);
    }

    #[test]
    fn each_fragment_counts_itself_once() {
        // Pins the automorphism divisors: a wrong order would make a
        // fragment count itself 0 or >1 times on its own graph.
        let cases: [(&[(usize, usize)], usize, fn(&SubgraphCensus) -> u64); 9] = [
            (P3_EDGES, 3, |c| c.p3),
            (C3_EDGES, 3, |c| c.c3),
            (S13_EDGES, 4, |c| c.s13),
            (P4_EDGES, 4, |c| c.p4),
            (C4_EDGES, 4, |c| c.c4),
            (D4_EDGES, 4, |c| c.d4),
            (F_EDGES, 5, |c| c.f),
            (H_EDGES, 5, |c| c.h),
            (C6_EDGES, 6, |c| c.c6),
        ];
        for (edges, n, pick) in cases {
            let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
            let b = census_bruteforce(&g).unwrap();
            assert_eq!(pick(&b), 1, "bruteforce on {edges:?}");
            let f = census_formulas(&g).unwrap();
            assert_eq!(b, f, "routes disagree on {edges:?}");
        }
    }

    #[test]
    fn petersen_census() {
        let g = crate::testutil::petersen();
        let want = SubgraphCensus {
            m: 15,
            p3: 30,
            c3: 0,
            s13: 10,
            p4: 60,
            c4: 0,
            d4: 0,
            f: 0,
            h: 0,
            c6: 10,
        };
        assert_eq!(census_formulas(&g).unwrap(), want);
        assert_eq!(census_bruteforce(&g).unwrap(), want);
    }

    #[test]
    fn dodecahedron_census() {
        let g = generate(Family::Dodecahedron, 20).unwrap();
        let want = SubgraphCensus {
            m: 30,
            p3: 60,
            c3: 0,
            s13: 20,
            p4: 120,
            c4: 0,
            d4: 0,
            f: 0,
            h: 0,
            c6: 0,
        };
        assert_eq!(census_formulas(&g).unwrap(), want);
        assert_eq!(census_bruteforce(&g).unwrap(), want);
    }

    #[test]
    fn census_moments_match_power_traces() {
        for g in [
            generate(Family::Cycle, 3).unwrap(),
            generate(Family::Cycle, 4).unwrap(),
            generate(Family::Star, 7).unwrap(),
            crate::testutil::petersen(),
        ] {
            let c = census_formulas(&g).unwrap();
            let (t2, t4, t6) = moments_from_census(&c);
            assert_eq!(t2, trace_power(&g, 2).unwrap());
            assert_eq!(t4, trace_power(&g, 4).unwrap());
            assert_eq!(t6, trace_power(&g, 6).unwrap());
        }
    }

    #[test]
    fn disconnected_graphs_are_fine() {
        // Two disjoint triangles: censuses are sums over components.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let c = census_formulas(&g).unwrap();
        assert_eq!(c.c3, 2);
        assert_eq!(c.p3, 6);
        assert_eq!(c.h, 0);
        assert_eq!(census_bruteforce(&g).unwrap(), c);
    }

    #[test]
    fn bruteforce_cap_is_enforced() {
        let edges: Vec<(usize, usize)> = (0..60).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(61, edges).unwrap();
        assert!(matches!(
            census_bruteforce(&g),
            Err(Error::CensusTooLarge { n: 61, cap: 60 })
        ));
        assert!(census_formulas(&g).is_ok());
    }
}

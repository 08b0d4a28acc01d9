//! Simple undirected graphs: construction, parsing, generation, validation.
//!
//! Two interchange formats are supported:
//!
//! * **edge list**: one `u v` pair per line, `#` starts a comment, blank
//!   lines are ignored, and an optional first non-comment line `n <count>`
//!   fixes the vertex count (needed to round-trip isolated vertices).
//!   Duplicate edges collapse silently; self-loops are rejected with the
//!   offending line number.
//! * **graph6**: the 6-bit printable encoding. Every byte must lie in
//!   `63..=126`, the header is either one byte (`n <= 62`) or `126` plus
//!   three bytes (`63 <= n <= 258047`), and the upper triangle is packed
//!   column by column, most significant bit first. Unused trailing bits
//!   must be zero; anything else is rejected as malformed.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Hard cap on vertex count. Dense bit rows and cubic eigensolves make
/// larger graphs unusable long before this limit bites.
pub const MAX_VERTICES: usize = 10_000;

/// A simple undirected graph on vertices `0..n`.
///
/// Invariants: no self-loops, no duplicate edges, every endpoint `< n`.
/// Edges are stored sorted with `u < v`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    rows: Vec<Vec<u64>>,
}

impl Graph {
    /// Builds a graph from an edge iterator, collapsing duplicates.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        let words = n.div_ceil(64);
        let mut neighbors = vec![Vec::new(); n];
        let mut rows = vec![vec![0u64; words]; n];
        for &(u, v) in &set {
            neighbors[u].push(v);
            neighbors[v].push(u);
            rows[u][v / 64] |= 1 << (v % 64);
            rows[v][u / 64] |= 1 << (u % 64);
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
            neighbors,
            rows,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// Number of common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.rows[u]
            .iter()
            .zip(&self.rows[v])
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// True when every vertex is reachable from vertex 0. The empty graph
    /// counts as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// The image of the graph under a vertex permutation; `perm[v]` is the
    /// new label of `v`. Used to check relabeling invariance.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Serializes to the edge-list format with an `n <count>` header, so
    /// isolated vertices survive a round trip.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u, v);
        }
        out
    }

    /// Serializes to graph6.
    pub fn to_graph6(&self) -> String {
        let mut bytes = Vec::new();
        if self.n <= 62 {
            bytes.push(63 + self.n as u8);
        } else {
            // 258047 = 2^18 - 1, the ceiling of the 4-byte header.
            bytes.push(126);
            bytes.push(63 + ((self.n >> 12) & 63) as u8);
            bytes.push(63 + ((self.n >> 6) & 63) as u8);
            bytes.push(63 + (self.n & 63) as u8);
        }
        let mut group = 0u8;
        let mut filled = 0u8;
        for j in 1..self.n {
            for i in 0..j {
                group = group << 1 | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    bytes.push(63 + group);
                    group = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push(63 + (group << (6 - filled)));
        }
        String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
    }
}

/// Parses the edge-list format described in the module docs.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut max_vertex: Option<usize> = None;
    let mut saw_data = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "n" && !saw_data {
            if tokens.len() != 2 {
                return Err(Error::EdgeList {
                    line,
                    msg: "header must be `n <count>`".into(),
                });
            }
            let count: usize = tokens[1].parse().map_err(|_| Error::EdgeList {
                line,
                msg: format!("invalid vertex count `{}`", tokens[1]),
            })?;
            declared = Some(count);
            saw_data = true;
            continue;
        }
        saw_data = true;
        if tokens.len() != 2 {
            return Err(Error::EdgeList {
                line,
                msg: format!("expected two vertex indices, got {} tokens", tokens.len()),
            });
        }
        let parse = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| Error::EdgeList {
                line,
                msg: format!("invalid vertex index `{}`", t),
            })
        };
        let u = parse(tokens[0])?;
        let v = parse(tokens[1])?;
        if u == v {
            return Err(Error::EdgeList {
                line,
                msg: format!("self-loop {} {}", u, v),
            });
        }
        max_vertex = Some(max_vertex.map_or(u.max(v), |m| m.max(u.max(v))));
        edges.push((u, v, line));
    }

    let n = match declared {
        Some(count) => {
            if let Some(mv) = max_vertex {
                if mv >= count {
                    let &(u, v, line) = edges
                        .iter()
                        .find(|&&(u, v, _)| u >= count || v >= count)
                        .expect("an edge produced the out-of-range maximum");
                    return Err(Error::EdgeList {
                        line,
                        msg: format!("edge {} {} exceeds declared count {}", u, v, count),
                    });
                }
            }
            count
        }
        None => max_vertex.map_or(0, |m| m + 1),
    };
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

/// Parses a graph6 string (surrounding ASCII whitespace is tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte {:#04x} at position {} is outside 63..=126",
                b, i
            )));
        }
    }
    let (n, data) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6(
                "8-byte vertex counts exceed the supported range".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated extended header".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        if n < 63 {
            return Err(Error::Graph6(format!(
                "extended header used for n = {}, which fits one byte",
                n
            )));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::Graph6(format!(
            "vertex count {} exceeds the supported maximum {}",
            n, MAX_VERTICES
        )));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {} data bytes for n = {}, got {}",
            expected,
            n,
            data.len()
        )));
    }
    let bit = |pos: usize| data[pos / 6] - 63 >> (5 - pos % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(pos) {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    for trailing in pos..expected * 6 {
        if bit(trailing) {
            return Err(Error::Graph6("nonzero trailing padding bits".into()));
        }
    }
    Graph::from_edges(n, edges)
}

/// Named generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Path,
    Star,
    Complete,
    Dodecahedron,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Dodecahedron => "dodecahedron",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "cycle" => Ok(Family::Cycle),
            "path" => Ok(Family::Path),
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            "dodecahedron" => Ok(Family::Dodecahedron),
            other => Err(Error::UnknownFamily(other.into())),
        }
    }
}

/// Chord offsets of the dodecahedral graph in LCF form, applied twice
/// around a 20-cycle. Yields the 3-regular girth-5 skeleton of the
/// regular dodecahedron.
const DODECAHEDRON_LCF: [i64; 10] = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4];

/// Builds the `n`-vertex member of a family. `star` counts the center,
/// so `generate(Family::Star, 4)` is the 3-ray star.
pub fn generate(family: Family, n: usize) -> Result<Graph> {
    let too_small = |min: usize| Error::FamilyTooSmall {
        family: family.name(),
        min,
        n,
    };
    match family {
        Family::Cycle => {
            if n < 3 {
                return Err(too_small(3));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path => {
            if n < 1 {
                return Err(too_small(1));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Star => {
            if n < 2 {
                return Err(too_small(2));
            }
            Graph::from_edges(n, (1..n).map(|i| (0, i)))
        }
        Family::Complete => {
            if n < 1 {
                return Err(too_small(1));
            }
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::Dodecahedron => {
            if n != 20 {
                return Err(Error::FamilyFixedOrder {
                    family: "dodecahedron",
                    expected: 20,
                    n,
                });
            }
            let mut edges: Vec<(usize, usize)> = (0..20).map(|i| (i, (i + 1) % 20)).collect();
            for i in 0..20 {
                let d = DODECAHEDRON_LCF[i % 10];
                let j = (i as i64 + d).rem_euclid(20) as usize;
                edges.push((i, j));
            }
            Graph::from_edges(20, edges)
        }
    }
}

/// Structural summary produced by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub n: usize,
    pub m: usize,
    pub is_simple: bool,
    pub is_connected: bool,
    pub degree_sequence: Vec<usize>,
}

/// Recomputes the simple-graph invariants and connectivity from scratch.
pub fn validate(g: &Graph) -> ValidationReport {
    let mut simple = true;
    let mut last: Option<(usize, usize)> = None;
    for &(u, v) in g.edges() {
        if u == v || u >= g.n() || v >= g.n() || last == Some((u, v)) {
            simple = false;
        }
        last = Some((u, v));
    }
    ValidationReport {
        n: g.n(),
        m: g.m(),
        is_simple: simple,
        is_connected: g.is_connected(),
        degree_sequence: g.degree_sequence(),
    }
}

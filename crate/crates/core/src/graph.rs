//! Simple undirected graphs on vertices `0..n-1`, the text formats the CLI
//! speaks, and the elementary predicates everything else is built from.
//!
//! Graphs are immutable in normal use: every algorithm takes `&Graph` and
//! operations that need a modified copy clone first. Adjacency is stored as
//! one bit row per vertex, symmetric and irreflexive by construction.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bits::BitRow;
use crate::error::{Error, Result};

/// A set of vertex ids, kept sorted and duplicate-free.
///
/// Serializes as a plain JSON array of ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

/// Which form of the minimum-degree hypothesis to check.
///
/// `Strict` demands `delta > (3r-4)n/(3r-1)`; `Tight` relaxes to `>=`,
/// which is the regime where the extremal graphs appear.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThresholdMode {
    Strict,
    Tight,
}

impl ThresholdMode {
    /// The comparison as a human-readable formula over `delta` and `n`,
    /// e.g. `"5*delta >= 2*n"` for r = 2 in tight mode.
    pub fn requirement(self, r: usize) -> String {
        let op = match self {
            ThresholdMode::Strict => ">",
            ThresholdMode::Tight => ">=",
        };
        format!("{}*delta {} {}*n", 3 * r - 1, op, 3 * r - 4)
    }
}

impl std::fmt::Display for ThresholdMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ThresholdMode::Strict => write!(f, "strict"),
            ThresholdMode::Tight => write!(f, "tight"),
        }
    }
}

/// Text formats for graph input and output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// First line `n m`, then `m` lines `u v`.
    EdgeList,
    /// The standard 6-bit-packed ASCII encoding of the upper triangle.
    Graph6,
}

/// Simple undirected graph: no self-loops, symmetric adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<BitRow>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: (0..n).map(|_| BitRow::zeros(n)).collect(),
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::domain(format!(
                "vertex id {} out of range (n={})",
                u.max(v),
                self.n
            )));
        }
        if u == v {
            return Err(Error::domain(format!("self-loop at vertex {u}")));
        }
        self.rows[u].set(v);
        self.rows[v].set(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n && u != v {
            self.rows[u].clear(v);
            self.rows[v].clear(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitRow::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].get(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn row(&self, v: usize) -> &BitRow {
        &self.rows[v]
    }

    /// Minimum vertex degree. The empty graph has none.
    pub fn min_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or_else(|| Error::domain("min_degree of the empty graph is undefined"))
    }

    /// All common neighbors of two distinct vertices.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<VertexSet> {
        if u == v {
            return Err(Error::domain(format!(
                "common_neighbors requires distinct vertices, got {u} twice"
            )));
        }
        Ok(self.rows[u].and(&self.rows[v]).ones().collect())
    }

    /// True iff every pair in `s` is adjacent. The empty set and singletons
    /// are cliques.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members = s.as_slice();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// If non-adjacency is an equivalence relation, returns its classes (the
    /// parts of the complete multipartite structure), ordered by smallest
    /// member. Otherwise `None`.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<VertexSet>> {
        let classes = self.twin_classes();
        // In a complete multipartite graph the parts are exactly the
        // open-neighborhood twin classes, and adjacency is uniform across
        // classes, so checking one representative pair per class pair
        // suffices.
        for i in 0..classes.len() {
            for j in (i + 1)..classes.len() {
                if !self.has_edge(classes[i][0], classes[j][0]) {
                    return None;
                }
            }
        }
        Some(classes.into_iter().map(VertexSet::new).collect())
    }

    /// Groups vertices by open neighborhood. Classes are ordered by smallest
    /// member, members ascending. Twins are never adjacent, so every class
    /// is an independent set.
    pub(crate) fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut index: HashMap<&BitRow, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            match index.get(&self.rows[v]) {
                Some(&i) => classes[i].push(v),
                None => {
                    index.insert(&self.rows[v], classes.len());
                    classes.push(vec![v]);
                }
            }
        }
        classes
    }

    /// Smallest (lexicographically ordered) triple `(x, y, z)` with
    /// `xy, xz` non-edges and `yz` an edge, or `None` exactly when the graph
    /// is complete multipartite.
    pub fn find_bad_triple(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                if y == x || self.has_edge(x, y) {
                    continue;
                }
                for z in 0..self.n {
                    if z == x || z == y || self.has_edge(x, z) {
                        continue;
                    }
                    if self.has_edge(y, z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    // ------------------------------------------------------------------
    // Text formats
    // ------------------------------------------------------------------

    pub fn parse(text: &str, format: GraphFormat) -> Result<Self> {
        match format {
            GraphFormat::EdgeList => parse_edgelist(text),
            GraphFormat::Graph6 => parse_graph6(text),
        }
    }

    pub fn to_text(&self, format: GraphFormat) -> String {
        match format {
            GraphFormat::EdgeList => self.to_edgelist(),
            GraphFormat::Graph6 => self.to_graph6(),
        }
    }

    fn to_edgelist(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    fn to_graph6(&self) -> String {
        let mut bytes = encode_graph6_order(self.n);
        let mut acc: u8 = 0;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc <<= 1;
                if self.has_edge(i, j) {
                    acc |= 1;
                }
                filled += 1;
                if filled == 6 {
                    bytes.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(bytes).expect("graph6 bytes are ASCII")
    }
}

/// Pure-integer threshold test: in strict mode `(3r-1)*delta > (3r-4)*n`,
/// in tight mode `>=`. Cross-multiplying avoids the non-integral fraction
/// entirely, so boundary cases cannot be mis-certified by rounding.
pub fn meets_threshold(g: &Graph, r: usize, mode: ThresholdMode) -> Result<bool> {
    if r < 2 {
        return Err(Error::domain(format!("r must be at least 2, got {r}")));
    }
    let delta = g.min_degree()?;
    let lhs = (3 * r as u128 - 1) * delta as u128;
    let rhs = (3 * r as u128 - 4) * g.vertex_count() as u128;
    Ok(match mode {
        ThresholdMode::Strict => lhs > rhs,
        ThresholdMode::Tight => lhs >= rhs,
    })
}

fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty input, expected header \"n m\""))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(
            header_line,
            format!("malformed header {header:?}, expected \"n m\""),
        ));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| Error::parse(header_line, format!("invalid vertex count {:?}", fields[0])))?;
    let m: usize = fields[1]
        .parse()
        .map_err(|_| Error::parse(header_line, format!("invalid edge count {:?}", fields[1])))?;

    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line_no, line) in lines {
        if seen == m {
            return Err(Error::parse(
                line_no,
                format!("unexpected extra line, header declared {m} edges"),
            ));
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(
                line_no,
                format!("malformed edge line {line:?}, expected \"u v\""),
            ));
        }
        let mut ends = [0usize; 2];
        for (slot, f) in ends.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| Error::parse(line_no, format!("invalid vertex id {f:?}")))?;
        }
        let (u, v) = (ends[0], ends[1]);
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex id {} out of range (n={n})", u.max(v)),
            ));
        }
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
        }
        g.add_edge(u, v).expect("validated endpoints");
        seen += 1;
    }
    if seen < m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("header declared {m} edges but only {seen} present"),
        ));
    }
    Ok(g)
}

fn encode_graph6_order(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut v = vec![126];
        for shift in [12, 6, 0] {
            v.push(((n >> shift) & 63) as u8 + 63);
        }
        v
    } else {
        let mut v = vec![126, 126];
        for shift in [30, 24, 18, 12, 6, 0] {
            v.push(((n >> shift) & 63) as u8 + 63);
        }
        v
    }
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let b = s.as_bytes();
    let bad_byte = |offset: usize| {
        Error::parse(
            1,
            format!("invalid graph6 byte at offset {offset}, expected printable ASCII 63..=126"),
        )
    };
    for (i, &c) in b.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(bad_byte(i));
        }
    }
    if b.is_empty() {
        return Err(Error::parse(1, "empty graph6 input"));
    }

    let (n, data_start) = if b[0] != 126 {
        ((b[0] - 63) as usize, 1)
    } else if b.len() > 1 && b[1] != 126 {
        if b.len() < 4 {
            return Err(Error::parse(1, "truncated graph6 vertex count"));
        }
        let mut n = 0usize;
        for &c in &b[1..4] {
            n = (n << 6) | (c - 63) as usize;
        }
        (n, 4)
    } else {
        if b.len() < 8 {
            return Err(Error::parse(1, "truncated graph6 vertex count"));
        }
        let mut n = 0usize;
        for &c in &b[2..8] {
            n = (n << 6) | (c - 63) as usize;
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = data_start + bits.div_ceil(6);
    if b.len() != expected {
        return Err(Error::parse(
            1,
            format!(
                "graph6 length mismatch: {} bytes for n={n}, expected {expected}",
                b.len()
            ),
        ));
    }

    let bit = |k: usize| (b[data_start + k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    // nauty zero-pads the final group; nonzero padding means corruption.
    for pad in k..bits.div_ceil(6) * 6 {
        if bit(pad) {
            return Err(Error::parse(1, "nonzero padding bits in graph6 data"));
        }
    }
    Ok(g)
}

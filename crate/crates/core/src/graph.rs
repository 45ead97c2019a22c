//! Finite simple graphs: construction, named families, degree data,
//! inductive dimension and the two on-disk formats (Graph JSON and plain
//! edge lists).

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An undirected graph on the vertices `0..n` without loops or multi-edges.
///
/// Immutable after construction. The edge list is kept sorted with `u < v`
/// and adjacency lists are sorted ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges.len())
            .finish()
    }
}

/// Builds a graph from `n` and an edge list in any order, possibly with
/// duplicates. Self-loops and out-of-range endpoints are rejected.
pub fn make_graph(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
    let mut normalized = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::Construction(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::Construction(format!("self-loop at vertex {u}")));
        }
        normalized.push((u.min(v), u.max(v)));
    }
    normalized.sort_unstable();
    normalized.dedup();
    Ok(SimpleGraph::from_sorted_edges(n, normalized))
}

impl SimpleGraph {
    /// `edges` must already be normalized, sorted and deduplicated.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SimpleGraph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Ascending list of vertex degrees.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn connected_components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components() <= 1
    }

    /// Subgraph induced on `vertices` (sorted ascending), relabelled `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let position: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for w in &self.adj[v] {
                if let Some(&j) = position.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges.sort_unstable();
        SimpleGraph::from_sorted_edges(vertices.len(), edges)
    }

    /// Inductive dimension: `-1` for the empty graph, otherwise one plus the
    /// mean inductive dimension of the unit spheres. Exact.
    pub fn inductive_dimension(&self) -> BigRational {
        let all: Vec<usize> = (0..self.n).collect();
        let mut memo = HashMap::new();
        inductive_dimension_of(self, &all, &mut memo)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson::from(self)).expect("graph serializes")
    }

    /// Plain edge-list text, one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("# n = {}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

// Vertex sets are sorted subsets of the host graph; unit spheres of nested
// spheres repeat a lot, hence the memo.
fn inductive_dimension_of(
    g: &SimpleGraph,
    vertices: &[usize],
    memo: &mut HashMap<Vec<usize>, BigRational>,
) -> BigRational {
    if vertices.is_empty() {
        return -BigRational::one();
    }
    if let Some(known) = memo.get(vertices) {
        return known.clone();
    }
    let mut total = BigRational::zero();
    for &x in vertices {
        let sphere = intersect_sorted(g.neighbors(x), vertices);
        total += inductive_dimension_of(g, &sphere, memo);
    }
    let n = BigRational::from_integer(BigInt::from(vertices.len()));
    let dim = BigRational::one() + total / n;
    memo.insert(vertices.to_vec(), dim.clone());
    dim
}

/// Named graph families used throughout the test corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_k`, `k >= 1`.
    Complete(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `C_n` joined with one hub vertex (index `n`).
    Wheel(usize),
    /// `K_{2,2,2}`.
    Octahedron,
    /// Square `0-1-2-3` with the roof triangle `1-2-4`.
    House,
    /// Triangulated `p x q` grid with wrap-around and one diagonal per square.
    /// Its clique complex is a torus only when `p, q >= 4`; a side of 3
    /// makes each wrapped row or column a triangle.
    Torus(usize, usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(k) => write!(f, "complete-{k}"),
            Family::Cycle(n) => write!(f, "cycle-{n}"),
            Family::Wheel(n) => write!(f, "wheel-{n}"),
            Family::Octahedron => write!(f, "octahedron"),
            Family::House => write!(f, "house"),
            Family::Torus(p, q) => write!(f, "torus-{p}x{q}"),
        }
    }
}

/// Parses the [`Display`](fmt::Display) form: `complete-4`, `cycle-8`,
/// `wheel-6`, `octahedron`, `house`, `torus-4x4`.
impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Argument(format!(
                "unknown family {s:?}; expected complete-K, cycle-N, wheel-N, octahedron, house or torus-PxQ"
            ))
        };
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let (name, arg) = match s.split_once('-') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        match (name, arg) {
            ("complete", Some(a)) => Ok(Family::Complete(num(a)?)),
            ("cycle", Some(a)) => Ok(Family::Cycle(num(a)?)),
            ("wheel", Some(a)) => Ok(Family::Wheel(num(a)?)),
            ("octahedron", None) => Ok(Family::Octahedron),
            ("house", None) => Ok(Family::House),
            ("torus", Some(a)) => {
                let (p, q) = a.split_once('x').ok_or_else(bad)?;
                Ok(Family::Torus(num(p)?, num(q)?))
            }
            _ => Err(bad()),
        }
    }
}

pub fn generate(family: Family) -> Result<SimpleGraph> {
    let too_small = |what: &str, got: usize, min: usize| {
        Err(Error::Argument(format!("{what} needs at least {min}, got {got}")))
    };
    match family {
        Family::Complete(k) => {
            if k < 1 {
                return too_small("complete graph", k, 1);
            }
            let mut edges = Vec::new();
            for u in 0..k {
                for v in u + 1..k {
                    edges.push((u, v));
                }
            }
            make_graph(k, &edges)
        }
        Family::Cycle(n) => {
            if n < 3 {
                return too_small("cycle", n, 3);
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            make_graph(n, &edges)
        }
        Family::Wheel(n) => {
            if n < 3 {
                return too_small("wheel", n, 3);
            }
            let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            edges.extend((0..n).map(|i| (i, n)));
            make_graph(n + 1, &edges)
        }
        Family::Octahedron => {
            let mut edges = Vec::new();
            for u in 0..6 {
                for v in u + 1..6 {
                    if u / 2 != v / 2 {
                        edges.push((u, v));
                    }
                }
            }
            make_graph(6, &edges)
        }
        Family::House => make_graph(5, &[(0, 1), (0, 3), (1, 2), (1, 4), (2, 3), (2, 4)]),
        Family::Torus(p, q) => {
            if p < 3 {
                return too_small("torus side p", p, 3);
            }
            if q < 3 {
                return too_small("torus side q", q, 3);
            }
            let at = |i: usize, j: usize| (i % p) * q + (j % q);
            let mut edges = Vec::with_capacity(3 * p * q);
            for i in 0..p {
                for j in 0..q {
                    edges.push((at(i, j), at(i + 1, j)));
                    edges.push((at(i, j), at(i, j + 1)));
                    edges.push((at(i, j), at(i + 1, j + 1)));
                }
            }
            make_graph(p * q, &edges)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

pub fn from_json(text: &str) -> Result<SimpleGraph> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
    let edges: Vec<_> = parsed.edges.iter().map(|e| (e[0], e[1])).collect();
    make_graph(parsed.n, &edges)
}

/// Parses `u v` lines; `#` starts a comment. The vertex count is the largest
/// index plus one.
pub fn from_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected two vertex indices, found {:?}",
                lineno + 1,
                line
            )));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| Error::Parse(format!("line {}: {s:?}: {e}", lineno + 1)))
        };
        let (u, v) = (parse(fields[0])?, parse(fields[1])?);
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    make_graph(n, &edges)
}

/// Accepts either format: JSON when the first non-blank character is `{`.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_edge_list(text)
    }
}

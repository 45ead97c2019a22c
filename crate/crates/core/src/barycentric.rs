//! Barycentric refinement `G -> G_1`: the vertices of `G_1` are the complete
//! subgraphs of `G`, adjacent when one strictly contains the other.

use serde::Serialize;

use crate::complex::{CliqueComplex, Simplex};
use crate::counting::{trajectory, FVector};
use crate::graph::SimpleGraph;
use crate::{Error, Limits, Result};

#[derive(Debug, Clone)]
pub struct RefinedGraph {
    pub graph: SimpleGraph,
    /// Vertex `i` of `graph` is the simplex `parents[i]` of the previous level.
    pub parents: Vec<Simplex>,
    pub level: usize,
}

#[derive(Serialize)]
struct RefinedJson<'a> {
    n: usize,
    edges: Vec<[usize; 2]>,
    parents: &'a [Simplex],
    level: usize,
}

impl RefinedGraph {
    /// Level zero: every vertex is its own parent.
    pub fn base(g: &SimpleGraph) -> Self {
        RefinedGraph {
            graph: g.clone(),
            parents: (0..g.vertex_count()).map(|v| Simplex::new(vec![v])).collect(),
            level: 0,
        }
    }

    /// Graph JSON plus `"parents"` and `"level"`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&RefinedJson {
            n: self.graph.vertex_count(),
            edges: self.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
            parents: &self.parents,
            level: self.level,
        })
        .expect("refined graph serializes")
    }
}

/// Refinement of an already built complex.
pub fn refine_complex(c: &CliqueComplex) -> SimpleGraph {
    let mut edges = Vec::new();
    for (i, s) in c.simplices().iter().enumerate() {
        for face in s.proper_faces() {
            let j = c.index_of(&face).expect("complex is closed under faces");
            edges.push((j, i));
        }
    }
    // faces precede their cofaces in canonical order, so j < i already
    edges.sort_unstable();
    SimpleGraph::from_sorted_edges(c.len(), edges)
}

pub fn refine(g: &SimpleGraph) -> Result<RefinedGraph> {
    refine_with(g, &Limits::default(), 1)
}

fn refine_with(g: &SimpleGraph, limits: &Limits, level: usize) -> Result<RefinedGraph> {
    if g.vertex_count() == 0 {
        return Err(Error::Argument("cannot refine the empty graph".into()));
    }
    let c = CliqueComplex::build_with_cap(g, limits.max_simplices)?;
    let graph = refine_complex(&c);
    Ok(RefinedGraph {
        graph,
        parents: c.simplices().to_vec(),
        level,
    })
}

/// Projected f-vectors of levels `0..=m`, from the subdivision transfer map.
pub fn projected_f_vectors(g: &SimpleGraph, m: usize, limits: &Limits) -> Result<Vec<FVector>> {
    let c = CliqueComplex::build_with_cap(g, limits.max_simplices)?;
    Ok(trajectory(&FVector::from_counts(&c.f_vector()), m))
}

fn refine_iter_preflight(g: &SimpleGraph, m: usize, limits: &Limits) -> Result<()> {
    for f in &projected_f_vectors(g, m - 1, limits)? {
        let total = f.total();
        if total > limits.max_simplices.into() {
            return Err(Error::Capacity {
                what: "projected refinement vertex count",
                needed: u128::try_from(&total).unwrap_or(u128::MAX),
                cap: limits.max_simplices as u128,
            });
        }
    }
    Ok(())
}

/// `m`-fold refinement. Fails before building anything when some
/// intermediate complex would exceed `limits.max_simplices`.
pub fn refine_iter(g: &SimpleGraph, m: usize, limits: &Limits) -> Result<RefinedGraph> {
    if m > 0 {
        refine_iter_preflight(g, m, limits)?;
    }
    let mut current = RefinedGraph::base(g);
    for level in 1..=m {
        current = refine_with(&current.graph, limits, level)?;
    }
    Ok(current)
}

/// Like [`refine_iter`], also returning the measured f-vector of every
/// level `0..=m`.
pub fn refine_iter_with_f_vectors(
    g: &SimpleGraph,
    m: usize,
    limits: &Limits,
) -> Result<(RefinedGraph, Vec<Vec<u64>>)> {
    if m > 0 {
        if g.vertex_count() == 0 {
            return Err(Error::Argument("cannot refine the empty graph".into()));
        }
        refine_iter_preflight(g, m, limits)?;
    }
    let mut current = RefinedGraph::base(g);
    let mut f_vectors = Vec::with_capacity(m + 1);
    for level in 0..=m {
        let c = CliqueComplex::build_with_cap(&current.graph, limits.max_simplices)?;
        f_vectors.push(c.f_vector());
        if level < m {
            current = RefinedGraph {
                graph: refine_complex(&c),
                parents: c.simplices().to_vec(),
                level: level + 1,
            };
        }
    }
    Ok((current, f_vectors))
}

/// Colour of each vertex = dimension of its parent simplex. Panics if two
/// adjacent vertices share a colour, which strict containment rules out.
pub fn dimension_coloring(r: &RefinedGraph) -> Vec<usize> {
    let colors: Vec<usize> = r.parents.iter().map(Simplex::dim).collect();
    for &(u, v) in r.graph.edges() {
        assert_ne!(colors[u], colors[v], "edge {u}-{v} is monochromatic");
    }
    colors
}

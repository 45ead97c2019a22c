//! Whitney (clique) complexes: every complete subgraph of a graph, in a
//! canonical order, with the local and global counts derived from them.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::{Error, Limits, Result};

/// A complete subgraph, stored as its strictly ascending vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts and deduplicates `vertices`. Panics on an empty list.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        assert!(!vertices.is_empty(), "a simplex has at least one vertex");
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// The face obtained by dropping the `i`-th vertex.
    pub fn facet(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    pub fn is_proper_face_of(&self, other: &Simplex) -> bool {
        self.0.len() < other.0.len() && self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }

    /// All nonempty proper faces, in no particular order.
    pub fn proper_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let size = self.0.len();
        let full = (1u64 << size) - 1;
        (1..full).map(move |mask| {
            Simplex(
                (0..size)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }
}

/// Summary of a Gauss-Bonnet check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussBonnetReport {
    pub sum: String,
    pub chi: i64,
    pub ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HandshakeReport {
    pub k: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub ok: bool,
}

/// All complete subgraphs of a host graph.
///
/// Simplices are ordered by cardinality, then lexicographically. Because the
/// blocks are contiguous, the global index of a `k`-simplex minus
/// `offset(k)` is its position in the `k`-chain basis; orientation is the
/// ascending vertex order.
#[derive(Debug, Clone)]
pub struct CliqueComplex {
    host: SimpleGraph,
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    offsets: Vec<usize>,
}

impl CliqueComplex {
    pub fn build(g: &SimpleGraph) -> Result<Self> {
        Self::build_with_cap(g, Limits::DEFAULT_MAX_SIMPLICES)
    }

    /// Enumerates maximal cliques with a pivoting Bron-Kerbosch search and
    /// closes them under taking faces.
    pub fn build_with_cap(g: &SimpleGraph, max_simplices: usize) -> Result<Self> {
        let mut all: HashSet<Vec<usize>> = HashSet::new();
        let mut overflow = false;
        for_each_maximal_clique(g, |clique| {
            if overflow {
                return;
            }
            let size = clique.len();
            for mask in 1u64..(1u64 << size) {
                let face: Vec<usize> = (0..size)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| clique[i])
                    .collect();
                all.insert(face);
            }
            if all.len() > max_simplices {
                overflow = true;
            }
        });
        if overflow {
            return Err(Error::Capacity {
                what: "clique complex simplex count",
                needed: all.len() as u128,
                cap: max_simplices as u128,
            });
        }
        let mut simplices: Vec<Vec<usize>> = all.into_iter().collect();
        simplices.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let simplices: Vec<Simplex> = simplices.into_iter().map(Simplex).collect();

        let top = simplices.last().map_or(0, |s| s.0.len());
        // offsets[k] = first index of a k-simplex; offsets[top] = total
        let mut offsets = vec![0usize; top + 1];
        for s in &simplices {
            offsets[s.0.len()] += 1;
        }
        for k in 1..=top {
            offsets[k] += offsets[k - 1];
        }

        let index = simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(CliqueComplex {
            host: g.clone(),
            simplices,
            index,
            offsets,
        })
    }

    pub fn host(&self) -> &SimpleGraph {
        &self.host
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Dimension of the largest simplex, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }

    /// Number of distinct dimensions present (`d + 1`).
    pub fn levels(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Global index of the first `k`-simplex.
    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k.min(self.levels())]
    }

    /// The ordered `k`-chain basis.
    pub fn simplices_of_dim(&self, k: usize) -> &[Simplex] {
        if k >= self.levels() {
            return &[];
        }
        &self.simplices[self.offsets[k]..self.offsets[k + 1]]
    }

    pub fn f_vector(&self) -> Vec<u64> {
        (0..self.levels())
            .map(|k| (self.offsets[k + 1] - self.offsets[k]) as u64)
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    /// `V_k(x)` for every vertex: row `x`, column `k` counts the `k`-simplices
    /// of the unit sphere `S(x)`, i.e. the `(k+1)`-simplices containing `x`.
    pub fn sphere_counts_all(&self) -> Vec<Vec<u64>> {
        let width = self.levels().saturating_sub(1);
        let mut counts = vec![vec![0u64; width]; self.host.vertex_count()];
        for s in &self.simplices[self.offset(1)..] {
            let k = s.dim() - 1;
            for &x in &s.0 {
                counts[x][k] += 1;
            }
        }
        counts
    }

    pub fn sphere_counts(&self, x: usize) -> Vec<u64> {
        let width = self.levels().saturating_sub(1);
        let mut counts = vec![0u64; width];
        for s in &self.simplices[self.offset(1)..] {
            if s.0.binary_search(&x).is_ok() {
                counts[s.dim() - 1] += 1;
            }
        }
        counts
    }

    /// `K(x) = 1 - V_0/2 + V_1/3 - V_2/4 + ...`
    pub fn curvature(&self, x: usize) -> BigRational {
        curvature_from_counts(&self.sphere_counts(x))
    }

    pub fn curvatures(&self) -> Vec<BigRational> {
        self.sphere_counts_all()
            .iter()
            .map(|c| curvature_from_counts(c))
            .collect()
    }

    pub fn check_gauss_bonnet(&self) -> GaussBonnetReport {
        let sum: BigRational = self
            .curvatures()
            .into_iter()
            .fold(BigRational::zero(), |acc, k| acc + k);
        let chi = self.euler_characteristic();
        let ok = sum == BigRational::from_integer(BigInt::from(chi));
        GaussBonnetReport {
            sum: sum.to_string(),
            chi,
            ok,
        }
    }

    /// `sum_x V_k(x) = (k + 2) v_{k+1}`; beyond the top dimension both sides are 0.
    pub fn check_handshake(&self, k: usize) -> HandshakeReport {
        let lhs: u64 = self
            .sphere_counts_all()
            .iter()
            .map(|c| c.get(k).copied().unwrap_or(0))
            .sum();
        let rhs = (k as u64 + 2) * self.f_vector().get(k + 1).copied().unwrap_or(0);
        HandshakeReport {
            k,
            lhs,
            rhs,
            ok: lhs == rhs,
        }
    }

    /// `vertex,V0,...,V{d-1},curvature_num,curvature_den`
    pub fn curvature_csv(&self) -> String {
        let width = self.levels().saturating_sub(1);
        let mut out = String::from("vertex");
        for k in 0..width {
            write!(out, ",V{k}").unwrap();
        }
        out.push_str(",curvature_num,curvature_den\n");
        for (x, counts) in self.sphere_counts_all().iter().enumerate() {
            let k = curvature_from_counts(counts);
            write!(out, "{x}").unwrap();
            for c in counts {
                write!(out, ",{c}").unwrap();
            }
            writeln!(out, ",{},{}", k.numer(), k.denom()).unwrap();
        }
        out
    }
}

fn curvature_from_counts(counts: &[u64]) -> BigRational {
    let mut k = BigRational::one();
    for (j, &c) in counts.iter().enumerate() {
        let term = BigRational::new(BigInt::from(c), BigInt::from(j as u64 + 2));
        if j % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    k
}

/// Calls `emit` once per maximal clique (vertices ascending). Isolated
/// vertices are maximal cliques of size one.
pub fn for_each_maximal_clique<F: FnMut(&[usize])>(g: &SimpleGraph, mut emit: F) {
    // Outer loop in vertex order; candidates are later neighbours and the
    // exclusion set earlier ones, so each maximal clique is reported once.
    let mut clique = Vec::new();
    for v in 0..g.vertex_count() {
        let (earlier, later): (Vec<usize>, Vec<usize>) =
            g.neighbors(v).iter().partition(|&&w| w < v);
        clique.push(v);
        expand(g, &mut clique, later, earlier, &mut emit);
        clique.pop();
    }
}

fn expand<F: FnMut(&[usize])>(
    g: &SimpleGraph,
    clique: &mut Vec<usize>,
    mut candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    emit: &mut F,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            let mut sorted = clique.clone();
            sorted.sort_unstable();
            emit(&sorted);
        }
        return;
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&u| count_common(g.neighbors(u), &candidates))
        .expect("candidates nonempty");
    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&u| !g.is_adjacent(pivot, u))
        .collect();
    for u in branch {
        let nbrs = g.neighbors(u);
        let next_candidates = intersect(&candidates, nbrs);
        let next_excluded = intersect(&excluded, nbrs);
        clique.push(u);
        expand(g, clique, next_candidates, next_excluded, emit);
        clique.pop();
        candidates.retain(|&w| w != u);
        let pos = excluded.partition_point(|&w| w < u);
        excluded.insert(pos, u);
    }
}

fn count_common(a: &[usize], b: &[usize]) -> usize {
    intersect(a, b).len()
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
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

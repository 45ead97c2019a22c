//! Integer-exact assembly of the scalar Laplacian, exterior derivatives,
//! Hodge Laplacians and the Dirac operator of a clique complex.

use std::fmt::Write as _;

use crate::complex::CliqueComplex;
use crate::eigen::{symmetric_eigenvalues, DenseMatrix, Spectrum};
use crate::graph::SimpleGraph;
use crate::{Error, Result};

/// Sparse integer matrix in canonical triplet form: sorted by `(row, col)`,
/// no duplicates, no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl OperatorMatrix {
    pub fn from_triplets(rows: usize, cols: usize, mut entries: Vec<(usize, usize, i64)>) -> Self {
        entries.sort_unstable_by_key(|&(i, j, _)| (i, j));
        let mut merged: Vec<(usize, usize, i64)> = Vec::with_capacity(entries.len());
        for (i, j, v) in entries {
            debug_assert!(i < rows && j < cols);
            match merged.last_mut() {
                Some(last) if last.0 == i && last.1 == j => last.2 += v,
                _ => merged.push((i, j, v)),
            }
        }
        merged.retain(|&(_, _, v)| v != 0);
        OperatorMatrix {
            rows,
            cols,
            entries: merged,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        OperatorMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries
            .binary_search_by_key(&(i, j), |&(r, c, _)| (r, c))
            .map_or(0, |pos| self.entries[pos].2)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn transpose(&self) -> Self {
        let flipped = self.entries.iter().map(|&(i, j, v)| (j, i, v)).collect();
        Self::from_triplets(self.cols, self.rows, flipped)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let all = self.entries.iter().chain(&other.entries).copied().collect();
        Self::from_triplets(self.rows, self.cols, all)
    }

    pub fn scale(&self, factor: i64) -> Self {
        let scaled = self.entries.iter().map(|&(i, j, v)| (i, j, v * factor)).collect();
        Self::from_triplets(self.rows, self.cols, scaled)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut row_start = vec![0usize; other.rows + 1];
        for &(i, _, _) in &other.entries {
            row_start[i + 1] += 1;
        }
        for i in 0..other.rows {
            row_start[i + 1] += row_start[i];
        }
        let mut products = Vec::new();
        for &(i, k, a) in &self.entries {
            for &(_, j, b) in &other.entries[row_start[k]..row_start[k + 1]] {
                products.push((i, j, a * b));
            }
        }
        Self::from_triplets(self.rows, other.cols, products)
    }

    /// Sum of each row.
    pub fn row_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rows];
        for &(i, _, v) in &self.entries {
            sums[i] += v;
        }
        sums
    }

    pub fn trace(&self) -> i64 {
        self.entries.iter().filter(|e| e.0 == e.1).map(|e| e.2).sum()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        assert_eq!(self.rows, self.cols, "dense conversion needs a square matrix");
        let mut m = DenseMatrix::zeros(self.rows);
        for &(i, j, v) in &self.entries {
            m.set(i, j, v as f64);
        }
        m
    }

    pub fn eigenvalues(&self, max_n: usize) -> Result<Spectrum> {
        if self.rows != self.cols {
            return Err(Error::Argument(format!(
                "eigenvalues need a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if self.rows > max_n {
            return Err(Error::Capacity {
                what: "dense eigensolve order",
                needed: self.rows as u128,
                cap: max_n as u128,
            });
        }
        symmetric_eigenvalues(&self.to_dense(), max_n)
    }

    /// The `rows x cols` sub-block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let picked = self
            .entries
            .iter()
            .filter(|&&(i, j, _)| i >= r0 && i < r0 + rows && j >= c0 && j < c0 + cols)
            .map(|&(i, j, v)| (i - r0, j - c0, v))
            .collect();
        Self::from_triplets(rows, cols, picked)
    }

    /// Matrix-Market-style text: a size header, then 1-based `i j value` lines.
    pub fn to_matrix_market(&self) -> String {
        let mut out = String::from("%%MatrixMarket matrix coordinate integer general\n");
        writeln!(out, "{} {} {}", self.rows, self.cols, self.entries.len()).unwrap();
        for &(i, j, v) in &self.entries {
            writeln!(out, "{} {} {}", i + 1, j + 1, v).unwrap();
        }
        out
    }
}

/// `L = B - A`.
pub fn scalar_laplacian(g: &SimpleGraph) -> OperatorMatrix {
    let mut entries = Vec::with_capacity(g.vertex_count() + 2 * g.edge_count());
    for v in 0..g.vertex_count() {
        entries.push((v, v, g.degree(v) as i64));
    }
    for &(u, v) in g.edges() {
        entries.push((u, v, -1));
        entries.push((v, u, -1));
    }
    OperatorMatrix::from_triplets(g.vertex_count(), g.vertex_count(), entries)
}

/// `d_k : C^k -> C^{k+1}`, a `v_{k+1} x v_k` matrix whose row for a
/// `(k+1)`-simplex `s` has `(-1)^i` in the column of `s` minus its `i`-th vertex.
pub fn exterior_derivative(c: &CliqueComplex, k: usize) -> Result<OperatorMatrix> {
    if k + 1 >= c.levels() {
        return Err(Error::Argument(format!(
            "exterior derivative d_{k} needs {}-simplices; the complex has dimension {:?}",
            k + 1,
            c.dimension()
        )));
    }
    Ok(exterior_derivative_unchecked(c, k))
}

fn exterior_derivative_unchecked(c: &CliqueComplex, k: usize) -> OperatorMatrix {
    let rows = c.simplices_of_dim(k + 1);
    let (row_off, col_off) = (c.offset(k + 1), c.offset(k));
    let cols = c.simplices_of_dim(k).len();
    let mut entries = Vec::with_capacity(rows.len() * (k + 2));
    for (r, s) in rows.iter().enumerate() {
        debug_assert_eq!(c.index_of(s), Some(row_off + r));
        for i in 0..=k + 1 {
            let face = s.facet(i);
            let col = c.index_of(&face).expect("faces are present") - col_off;
            entries.push((r, col, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    OperatorMatrix::from_triplets(rows.len(), cols, entries)
}

/// `L_k = d_k^T d_k + d_{k-1} d_{k-1}^T`, dropping the terms that do not exist.
pub fn hodge_laplacian(c: &CliqueComplex, k: usize) -> Result<OperatorMatrix> {
    if k >= c.levels() {
        return Err(Error::Argument(format!(
            "no {k}-forms: the complex has dimension {:?}",
            c.dimension()
        )));
    }
    let size = c.simplices_of_dim(k).len();
    let mut l = OperatorMatrix::zeros(size, size);
    if k + 1 < c.levels() {
        let d = exterior_derivative_unchecked(c, k);
        l = l.add(&d.transpose().mul(&d));
    }
    if k >= 1 {
        let d = exterior_derivative_unchecked(c, k - 1);
        l = l.add(&d.mul(&d.transpose()));
    }
    Ok(l)
}

pub fn hodge_laplacians(c: &CliqueComplex) -> Vec<OperatorMatrix> {
    (0..c.levels())
        .map(|k| hodge_laplacian(c, k).expect("k within range"))
        .collect()
}

/// `D = d + d^*` on the full chain space, indexed by the complex's global
/// simplex order.
pub fn dirac(c: &CliqueComplex) -> OperatorMatrix {
    let mut entries = Vec::new();
    for k in 0..c.levels().saturating_sub(1) {
        let d = exterior_derivative_unchecked(c, k);
        let (r0, c0) = (c.offset(k + 1), c.offset(k));
        for &(i, j, v) in d.entries() {
            entries.push((r0 + i, c0 + j, v));
            entries.push((c0 + j, r0 + i, v));
        }
    }
    OperatorMatrix::from_triplets(c.len(), c.len(), entries)
}

/// `L_0 ⊕ L_1 ⊕ ... ⊕ L_d` laid out along the global simplex order.
pub fn block_hodge(c: &CliqueComplex) -> OperatorMatrix {
    let mut entries = Vec::new();
    for (k, l) in hodge_laplacians(c).iter().enumerate() {
        let off = c.offset(k);
        entries.extend(l.entries().iter().map(|&(i, j, v)| (off + i, off + j, v)));
    }
    OperatorMatrix::from_triplets(c.len(), c.len(), entries)
}

/// `d_{k+1} d_k = 0` for every `k`.
pub fn check_d_squared(c: &CliqueComplex) -> bool {
    (0..c.levels().saturating_sub(2)).all(|k| {
        let dk = exterior_derivative_unchecked(c, k);
        let dk1 = exterior_derivative_unchecked(c, k + 1);
        dk1.mul(&dk).is_zero()
    })
}

/// `b_k = #{λ in spec(L_k) : λ < zero_tol * max(1, λ_max)}`.
pub fn betti_numbers(c: &CliqueComplex, zero_tol: f64, max_n: usize) -> Result<Vec<usize>> {
    hodge_laplacians(c)
        .iter()
        .map(|l| Ok(l.eigenvalues(max_n)?.kernel_dimension(zero_tol)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barycentric::refine;
    use crate::graph::{generate, Family};

    fn complex(f: Family) -> CliqueComplex {
        CliqueComplex::build(&generate(f).unwrap()).unwrap()
    }

    fn dense_rows(m: &OperatorMatrix) -> Vec<Vec<i64>> {
        (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
            .collect()
    }

    #[test]
    fn house_laplacian_matches_display() {
        let l = scalar_laplacian(&generate(Family::House).unwrap());
        assert_eq!(
            dense_rows(&l),
            vec![
                vec![2, -1, 0, -1, 0],
                vec![-1, 3, -1, 0, -1],
                vec![0, -1, 3, -1, -1],
                vec![-1, 0, -1, 2, 0],
                vec![0, -1, -1, 0, 2],
            ]
        );
        assert!(l.row_sums().iter().all(|&s| s == 0));
        assert!(l.is_symmetric());
    }

    #[test]
    fn refined_triangle_laplacian_is_a_permutation_of_the_display() {
        // printed with the hub (triangle vertex) in position 3
        let printed = vec![
            vec![3, -1, 0, -1, -1, 0, 0],
            vec![-1, 3, -1, -1, 0, 0, 0],
            vec![0, -1, 3, -1, 0, 0, -1],
            vec![-1, -1, -1, 6, -1, -1, -1],
            vec![-1, 0, 0, -1, 3, -1, 0],
            vec![0, 0, 0, -1, -1, 3, -1],
            vec![0, 0, -1, -1, 0, -1, 3],
        ];
        let g1 = refine(&generate(Family::Complete(3)).unwrap()).unwrap().graph;
        let ours = dense_rows(&scalar_laplacian(&g1));
        // both are wheels W6; find the rim order of each and compare
        let rim = |m: &Vec<Vec<i64>>, hub: usize| -> Vec<usize> {
            let mut order = vec![if hub == 0 { 1 } else { 0 }];
            while order.len() < 6 {
                let last = *order.last().unwrap();
                let next = (0..7)
                    .find(|&j| j != hub && m[last][j] == -1 && !order.contains(&j))
                    .unwrap();
                order.push(next);
            }
            order
        };
        let (hub_p, hub_o) = (3, 6);
        let (rp, ro) = (rim(&printed, hub_p), rim(&ours, hub_o));
        let mut perm = vec![0; 7];
        perm[hub_p] = hub_o;
        for (a, b) in rp.iter().zip(&ro) {
            perm[*a] = *b;
        }
        for i in 0..7 {
            for j in 0..7 {
                assert_eq!(printed[i][j], ours[perm[i]][perm[j]]);
            }
        }
    }

    #[test]
    fn complete_graph_laplacian_shape() {
        let l = scalar_laplacian(&generate(Family::Complete(5)).unwrap());
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(l.get(i, j), if i == j { 4 } else { -1 });
            }
        }
    }

    #[test]
    fn exterior_derivative_of_triangle() {
        let c = complex(Family::Complete(3));
        let d0 = exterior_derivative(&c, 0).unwrap();
        // rows 01, 02, 12; the face without vertex i carries (-1)^i
        assert_eq!(
            dense_rows(&d0),
            vec![vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]
        );
        assert!(d0.row_sums().iter().all(|&s| s == 0));
        let d1 = exterior_derivative(&c, 1).unwrap();
        assert_eq!(dense_rows(&d1), vec![vec![1, -1, 1]]);
        assert!(d1.mul(&d0).is_zero());
        assert!(matches!(exterior_derivative(&c, 2), Err(Error::Argument(_))));
    }

    #[test]
    fn l0_is_the_scalar_laplacian() {
        for f in [Family::Cycle(4), Family::House, Family::Octahedron, Family::Wheel(5)] {
            let c = complex(f);
            let d0 = exterior_derivative(&c, 0).unwrap();
            let l = scalar_laplacian(c.host());
            assert_eq!(d0.transpose().mul(&d0), l);
            assert_eq!(hodge_laplacian(&c, 0).unwrap(), l);
        }
    }

    #[test]
    fn triangle_hodge_blocks_match_display() {
        let c = complex(Family::Complete(3));
        let dsq = block_hodge(&c);
        let mut want = vec![vec![0; 7]; 7];
        for i in 0..3 {
            for j in 0..3 {
                want[i][j] = if i == j { 2 } else { -1 };
            }
        }
        for i in 3..7 {
            want[i][i] = 3;
        }
        assert_eq!(dense_rows(&dsq), want);
        let d = dirac(&c);
        assert!(d.is_symmetric());
        assert_eq!(d.mul(&d), dsq);
    }

    #[test]
    fn betti_numbers_of_small_complexes() {
        let lim = 6000;
        assert_eq!(betti_numbers(&complex(Family::Cycle(5)), 1e-8, lim).unwrap(), vec![1, 1]);
        assert_eq!(betti_numbers(&complex(Family::Octahedron), 1e-8, lim).unwrap(), vec![1, 0, 1]);
        assert_eq!(betti_numbers(&complex(Family::Complete(3)), 1e-8, lim).unwrap(), vec![1, 0, 0]);
        assert_eq!(betti_numbers(&complex(Family::Torus(4, 4)), 1e-8, lim).unwrap(), vec![1, 2, 1]);
        let oct = complex(Family::Octahedron);
        let l2 = hodge_laplacian(&oct, 2).unwrap();
        assert_eq!(l2.rows(), 8);
        assert_eq!(l2.eigenvalues(lim).unwrap().kernel_dimension(1e-8), 1);
    }

    #[test]
    fn matrix_market_export() {
        let l = scalar_laplacian(&generate(Family::Complete(2)).unwrap());
        assert_eq!(
            l.to_matrix_market(),
            "%%MatrixMarket matrix coordinate integer general\n2 2 4\n1 1 1\n1 2 -1\n2 1 -1\n2 2 1\n"
        );
    }
}

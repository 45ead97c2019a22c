//! Dense symmetric eigenvalues: Householder reduction to tridiagonal form,
//! then implicit QL iteration with Wilkinson-style shifts.

use serde::Serialize;

use crate::{Error, Result};

/// Row-major square matrix of reals.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Argument("matrix rows must all have length n".into()));
        }
        Ok(DenseMatrix {
            n,
            data: rows.concat(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
    }

    pub fn add(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] += value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Largest absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().map(|v| v.abs()).sum())
            .fold(0.0, f64::max)
    }

    /// Sum of absolute entries of `self - other`.
    pub fn entrywise_l1_distance(&self, other: &DenseMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .sum()
    }
}

/// Ascending eigenvalues together with the tolerance that goes with them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    /// Accuracy contract: `1e-9 * max(1, inf_norm)`.
    pub tolerance: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// Cut-off below which an eigenvalue counts as zero.
    pub fn zero_cutoff(&self, zero_tol: f64) -> f64 {
        zero_tol * self.max().abs().max(1.0)
    }

    pub fn kernel_dimension(&self, zero_tol: f64) -> usize {
        let cut = self.zero_cutoff(zero_tol);
        self.values.iter().filter(|&&v| v < cut).count()
    }

    /// Smallest eigenvalue above the zero cut-off.
    pub fn ground_state(&self, zero_tol: f64) -> Option<f64> {
        let cut = self.zero_cutoff(zero_tol);
        self.values.iter().copied().find(|&v| v >= cut)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,eigenvalue\n");
        for (i, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{i},{v}\n"));
        }
        out
    }
}

const MAX_SWEEPS: usize = 60;

/// All eigenvalues of a symmetric matrix, ascending.
///
/// `max_n` bounds the order of the matrix; larger inputs get a capacity error
/// instead of a partial spectrum.
pub fn symmetric_eigenvalues(a: &DenseMatrix, max_n: usize) -> Result<Spectrum> {
    if a.n > max_n {
        return Err(Error::Capacity {
            what: "dense eigensolve order",
            needed: a.n as u128,
            cap: max_n as u128,
        });
    }
    if !a.is_symmetric() {
        return Err(Error::Argument("eigensolver input is not symmetric".into()));
    }
    let tolerance = 1e-9 * a.inf_norm().max(1.0);
    let (mut diag, mut off) = tridiagonalize(a.clone());
    ql_implicit(&mut diag, &mut off)?;
    diag.sort_by(f64::total_cmp);
    Ok(Spectrum {
        values: diag,
        tolerance,
    })
}

/// Householder reduction. Returns the diagonal and the sub-diagonal, where
/// `off[i]` couples `i` and `i + 1` (`off[n-1] = 0`).
fn tridiagonalize(mut a: DenseMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = a.n;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut w = vec![0.0; n];
    for k in 0..n {
        diag[k] = a.get(k, k);
        if k + 1 >= n {
            break;
        }
        let start = k + 1;
        let len = n - start;
        // column k below the diagonal equals row k right of it
        let x = &a.data[k * n + start..(k + 1) * n];
        let scale: f64 = x.iter().map(|t| t.abs()).sum();
        if len == 1 || scale == 0.0 {
            off[k] = x[0];
            continue;
        }
        let mut norm2 = 0.0;
        for (vi, &xi) in v[..len].iter_mut().zip(x) {
            *vi = xi / scale;
            norm2 += *vi * *vi;
        }
        let norm = norm2.sqrt();
        let alpha = if v[0] > 0.0 { -norm } else { norm };
        off[k] = scale * alpha;
        // H = I - tau u u^T with u = v - alpha e_1
        v[0] -= alpha;
        let unorm2 = norm2 - 2.0 * alpha * (v[0] + alpha) + alpha * alpha;
        if unorm2 == 0.0 {
            continue;
        }
        let tau = 2.0 / unorm2;

        // p = tau * A22 u, rows of A22 are contiguous
        for i in 0..len {
            let row = &a.data[(start + i) * n + start..(start + i + 1) * n];
            let dot: f64 = row.iter().zip(&v[..len]).map(|(r, u)| r * u).sum();
            w[i] = tau * dot;
        }
        let pu: f64 = w[..len].iter().zip(&v[..len]).map(|(p, u)| p * u).sum();
        let half = 0.5 * tau * pu;
        for i in 0..len {
            w[i] -= half * v[i];
        }
        // A22 -= u w^T + w u^T
        for i in 0..len {
            let (ui, wi) = (v[i], w[i]);
            let row = &mut a.data[(start + i) * n + start..(start + i + 1) * n];
            for ((r, &uj), &wj) in row.iter_mut().zip(&v[..len]).zip(&w[..len]) {
                *r -= ui * wj + wi * uj;
            }
        }
    }
    (diag, off)
}

fn ql_implicit(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    e[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_SWEEPS {
                return Err(Error::NoConvergence {
                    index: l,
                    iterations: MAX_SWEEPS,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "got {got:?}, want {want:?}");
        }
    }

    #[test]
    fn small_matrices() {
        let empty = symmetric_eigenvalues(&DenseMatrix::zeros(0), 10).unwrap();
        assert!(empty.is_empty());
        let zero = symmetric_eigenvalues(&DenseMatrix::zeros(5), 10).unwrap();
        assert_close(&zero.values, &[0.0; 5], 0.0);
        let one = DenseMatrix::from_rows(&[vec![-3.5]]).unwrap();
        assert_close(&symmetric_eigenvalues(&one, 10).unwrap().values, &[-3.5], 0.0);
        let two = DenseMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        assert_close(&symmetric_eigenvalues(&two, 10).unwrap().values, &[1.0, 3.0], 1e-14);
    }

    #[test]
    fn complete_graph_laplacian() {
        for n in 2..9 {
            let m = DenseMatrix::from_fn(n, |i, j| if i == j { (n - 1) as f64 } else { -1.0 });
            let s = symmetric_eigenvalues(&m, 100).unwrap();
            let mut want = vec![n as f64; n];
            want[0] = 0.0;
            assert_close(&s.values, &want, 1e-12);
        }
    }

    #[test]
    fn diagonal_is_preserved() {
        let m = DenseMatrix::from_fn(6, |i, j| if i == j { [5.0, -1.0, 3.0, 0.0, 2.0, 2.0][i] } else { 0.0 });
        let s = symmetric_eigenvalues(&m, 10).unwrap();
        assert_close(&s.values, &[-1.0, 0.0, 2.0, 2.0, 3.0, 5.0], 0.0);
    }

    #[test]
    fn rejects_asymmetric_and_oversized() {
        let m = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(symmetric_eigenvalues(&m, 10), Err(Error::Argument(_))));
        match symmetric_eigenvalues(&DenseMatrix::zeros(11), 10) {
            Err(Error::Capacity { needed, cap, .. }) => assert_eq!((needed, cap), (11, 10)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn spectrum_helpers() {
        let s = Spectrum {
            values: vec![0.0, 1e-12, 0.5, 4.0],
            tolerance: 1e-9,
        };
        assert_eq!(s.kernel_dimension(1e-8), 2);
        assert_eq!(s.ground_state(1e-8), Some(0.5));
        assert_eq!(s.to_csv(), "index,eigenvalue\n0,0\n1,0.000000000001\n2,0.5\n3,4\n");
    }
}

//! Distribution functions of spectra and degree sequences, the distances
//! between them, the one-dimensional closed form and renormalization, and
//! the trace/majorization inequalities that tie spectra to degrees.

use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::Serialize;

use crate::barycentric::{projected_f_vectors, refine};
use crate::complex::CliqueComplex;
use crate::eigen::{symmetric_eigenvalues, DenseMatrix};
use crate::graph::{generate, Family, SimpleGraph};
use crate::operators::{block_hodge, dirac, hodge_laplacians, scalar_laplacian};
use crate::{Error, Limits, Result};

pub const DEFAULT_ZERO_TOL: f64 = 1e-8;

/// Ascending values seen as the step function `F(x) = values[ceil(n x)]`
/// (1-based) on `(0, 1]`, with `F(0) = values[1]`.
///
/// Each value occupies the cell `((k-1)/n, k/n]`, so the function is left
/// continuous and `F(k/n)` is the `k`-th smallest value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumProfile {
    values: Vec<f64>,
}

impl SpectrumProfile {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Argument("a profile needs at least one value".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Argument("profile values must be finite".into()));
        }
        values.sort_by(f64::total_cmp);
        Ok(SpectrumProfile { values })
    }

    pub fn from_degrees(g: &SimpleGraph) -> Result<Self> {
        Self::new(g.degree_sequence().into_iter().map(|d| d as f64).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Value on cell `k` (1-based).
    fn cell(&self, k: usize) -> f64 {
        self.values[k.clamp(1, self.values.len()) - 1]
    }

    pub fn eval(&self, x: f64) -> f64 {
        let n = self.values.len() as f64;
        let t = n * x.clamp(0.0, 1.0);
        // snap to the grid so that F(k/n) is the k-th value despite rounding
        let nearest = t.round();
        let k = if (t - nearest).abs() < 1e-9 { nearest } else { t.ceil() };
        self.cell(k as usize)
    }

    /// `int_0^1 F`, i.e. the mean value.
    pub fn l1_norm(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub fn max(&self) -> f64 {
        *self.values.last().expect("nonempty")
    }

    /// `(x, F(x))` at the breakpoints `k/n`, as CSV.
    pub fn to_csv(&self) -> String {
        let n = self.values.len();
        let mut out = String::from("x,F(x)\n");
        for (k, v) in self.values.iter().enumerate() {
            writeln!(out, "{},{}", (k + 1) as f64 / n as f64, v).unwrap();
        }
        out
    }

    /// Histogram of the values on `[min, max]` with `bins` equal bins; the
    /// density-of-states view of the profile.
    pub fn histogram(&self, bins: usize) -> Histogram {
        let bins = bins.max(1);
        let lo = self.values[0];
        let hi = self.max();
        let width = if hi > lo { (hi - lo) / bins as f64 } else { 1.0 };
        let mut counts = vec![0usize; bins];
        for &v in &self.values {
            let b = (((v - lo) / width) as usize).min(bins - 1);
            counts[b] += 1;
        }
        Histogram { lo, width, counts }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub lo: f64,
    pub width: f64,
    pub counts: Vec<usize>,
}

pub fn profile(values: Vec<f64>) -> Result<SpectrumProfile> {
    SpectrumProfile::new(values)
}

/// Common refinement of the grids `{i/n}` and `{j/m}`: each cell as
/// `(left, right, value_p, value_q)`, compared exactly in integers.
fn common_cells(p: &SpectrumProfile, q: &SpectrumProfile) -> Vec<(f64, f64, f64, f64)> {
    let (n, m) = (p.len(), q.len());
    let (mut i, mut j) = (1usize, 1usize);
    let mut left = 0.0;
    let mut cells = Vec::with_capacity(n + m);
    while i <= n && j <= m {
        // compare i/n with j/m
        let (a, b) = ((i as u128) * (m as u128), (j as u128) * (n as u128));
        let right = if a <= b { i as f64 / n as f64 } else { j as f64 / m as f64 };
        cells.push((left, right, p.cell(i), q.cell(j)));
        left = right;
        match a.cmp(&b) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    cells
}

/// `int_0^1 |F_p - F_q|`, exact over the common grid.
pub fn l1_distance(p: &SpectrumProfile, q: &SpectrumProfile) -> f64 {
    common_cells(p, q)
        .iter()
        .map(|&(l, r, a, b)| (r - l) * (a - b).abs())
        .sum()
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(0.0 < a && a < b && b < 1.0) {
        return Err(Error::Argument(format!(
            "interval [{a}, {b}] must satisfy 0 < a < b < 1"
        )));
    }
    Ok(())
}

/// `max |F_p(x) - F_q(x)|` for `x` in `[a, b]`. Both functions are constant
/// on the cells of the common grid, so every cell meeting `[a, b]` is
/// inspected once.
pub fn sup_distance_on(p: &SpectrumProfile, q: &SpectrumProfile, a: f64, b: f64) -> Result<f64> {
    check_interval(a, b)?;
    Ok(common_cells(p, q)
        .iter()
        .filter(|&&(l, r, _, _)| r >= a && l < b)
        .map(|&(_, _, u, v)| (u - v).abs())
        .fold(0.0, f64::max))
}

/// `sup |F(x) - f(x)|` over `[a, b]` for a continuous nondecreasing `f`.
/// On each cell the extremes of `|value - f|` sit at the cell ends.
pub fn sup_distance_to_curve(
    p: &SpectrumProfile,
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
) -> Result<f64> {
    check_interval(a, b)?;
    let n = p.len();
    let mut sup = 0.0f64;
    for k in 1..=n {
        let (l, r) = ((k - 1) as f64 / n as f64, k as f64 / n as f64);
        if r < a || l >= b {
            continue;
        }
        let v = p.cell(k);
        let (lo, hi) = (l.max(a), r.min(b));
        sup = sup.max((v - f(lo)).abs()).max((v - f(hi)).abs());
    }
    Ok(sup)
}

/// `4 sin^2(pi x / 2)`, the limiting spectral function of one-dimensional
/// refinements.
pub fn limit_curve_d1(x: f64) -> f64 {
    let s = (PI * x / 2.0).sin();
    4.0 * s * s
}

/// `(2/pi) arcsin(sqrt(x)/2)` on `[0, 4]`.
pub fn arcsin_cdf(x: f64) -> Result<f64> {
    if !(0.0..=4.0).contains(&x) {
        return Err(Error::Argument(format!("arcsin CDF is defined on [0, 4], got {x}")));
    }
    Ok(2.0 / PI * (x.sqrt() / 2.0).min(1.0).asin())
}

/// `T(z) = 4z - z^2`.
pub fn quadratic_map(z: f64) -> f64 {
    4.0 * z - z * z
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RenormalizationReport {
    pub n: usize,
    /// `T(K)` vanishes between vertices at odd distance on `C_2n`.
    pub decoupled: bool,
    /// Restriction to even indices `2i -> i` equals `L(C_n)`.
    pub even_block_matches: bool,
    /// Restriction to odd indices `2i+1 -> i` equals `L(C_n)`.
    pub odd_block_matches: bool,
    /// `max |T(spec C_2n) - (spec C_n twice)|`, both sorted.
    pub spectral_error: f64,
    pub ok: bool,
}

/// With `K = L(C_2n)`, checks that `T(K) = 4K - K^2` splits into two copies
/// of `L(C_n)` on the even and odd sublattices, and that `T` maps the
/// spectrum of `C_2n` onto that of `C_n` with multiplicity two.
pub fn check_renormalization_d1(n: usize) -> Result<RenormalizationReport> {
    if n < 3 {
        return Err(Error::Argument(format!("renormalization needs n >= 3, got {n}")));
    }
    let big = scalar_laplacian(&generate(Family::Cycle(2 * n))?);
    let small = scalar_laplacian(&generate(Family::Cycle(n))?);
    let t_k = big.scale(4).add(&big.mul(&big).scale(-1));

    let decoupled = t_k.entries().iter().all(|&(i, j, _)| (i + j) % 2 == 0);
    let sub = |parity: usize| {
        (0..n).all(|i| (0..n).all(|j| t_k.get(2 * i + parity, 2 * j + parity) == small.get(i, j)))
    };
    let even_block_matches = sub(0);
    let odd_block_matches = sub(1);

    let limit = 4 * n + 1;
    let mut mapped: Vec<f64> = big
        .eigenvalues(limit)?
        .values
        .into_iter()
        .map(quadratic_map)
        .collect();
    mapped.sort_by(f64::total_cmp);
    let mut doubled: Vec<f64> = small
        .eigenvalues(limit)?
        .values
        .into_iter()
        .flat_map(|v| [v, v])
        .collect();
    doubled.sort_by(f64::total_cmp);
    let spectral_error = mapped
        .iter()
        .zip(&doubled)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    let ok = decoupled && even_block_matches && odd_block_matches && spectral_error <= 1e-8;
    Ok(RenormalizationReport {
        n,
        decoupled,
        even_block_matches,
        odd_block_matches,
        spectral_error,
        ok,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LidskiiReport {
    /// `sum_j |alpha_j - beta_j|` with both spectra ascending.
    pub lhs: f64,
    /// `sum_ij |A - B|_ij`.
    pub rhs: f64,
    pub ok: bool,
}

pub fn lidskii_bound(a: &DenseMatrix, b: &DenseMatrix) -> Result<LidskiiReport> {
    if a.size() != b.size() {
        return Err(Error::Argument(format!(
            "Lidskii bound needs equal sizes, got {} and {}",
            a.size(),
            b.size()
        )));
    }
    let cap = a.size();
    let alpha = symmetric_eigenvalues(a, cap)?;
    let beta = symmetric_eigenvalues(b, cap)?;
    let lhs = alpha
        .values
        .iter()
        .zip(&beta.values)
        .map(|(x, y)| (x - y).abs())
        .sum();
    let rhs = a.entrywise_l1_distance(b);
    Ok(LidskiiReport {
        lhs,
        rhs,
        ok: lhs <= rhs + 1e-8,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchurGroneReport {
    /// Ascending partial sums of eigenvalues never exceed those of degrees.
    pub schur_ok: bool,
    /// Totals agree (trace identity).
    pub trace_ok: bool,
    /// Smallest `sum d - sum lambda` over `t < n` (ascending order).
    pub schur_min_slack: f64,
    /// `None` when the graph is disconnected or has fewer than two vertices.
    pub grone_ok: Option<bool>,
    /// Smallest `sum mu - sum d` over `k <= n - 1` (descending order).
    pub grone_min_slack: Option<f64>,
    pub ok: bool,
}

pub fn check_schur_grone(g: &SimpleGraph, max_eig: usize) -> Result<SchurGroneReport> {
    let n = g.vertex_count();
    let lambda = scalar_laplacian(g).eigenvalues(max_eig)?.values;
    let degrees: Vec<f64> = g.degree_sequence().into_iter().map(|d| d as f64).collect();
    let total: f64 = degrees.iter().sum();
    let tol = 1e-8 * total.max(1.0);

    let (mut sum_l, mut sum_d) = (0.0, 0.0);
    let mut schur_min_slack = f64::INFINITY;
    for t in 0..n {
        sum_l += lambda[t];
        sum_d += degrees[t];
        if t + 1 < n {
            schur_min_slack = schur_min_slack.min(sum_d - sum_l);
        }
    }
    let schur_ok = schur_min_slack >= -tol || n <= 1;
    let trace_ok = (sum_l - sum_d).abs() <= tol;

    let (grone_ok, grone_min_slack) = if n >= 2 && g.is_connected() {
        let (mut sm, mut sd) = (0.0, 0.0);
        let mut slack = f64::INFINITY;
        for k in 0..n - 1 {
            sm += lambda[n - 1 - k];
            sd += degrees[n - 1 - k];
            slack = slack.min(sm - sd);
        }
        (Some(slack >= -tol), Some(slack))
    } else {
        (None, None)
    };
    let ok = schur_ok && trace_ok && grone_ok.unwrap_or(true);
    Ok(SchurGroneReport {
        schur_ok,
        trace_ok,
        schur_min_slack: if n <= 1 { 0.0 } else { schur_min_slack },
        grone_ok,
        grone_min_slack,
        ok,
    })
}

/// Spectra of every `L_k`.
pub fn hodge_spectra(c: &CliqueComplex, max_eig: usize) -> Result<Vec<Vec<f64>>> {
    hodge_laplacians(c)
        .iter()
        .map(|l| Ok(l.eigenvalues(max_eig)?.values))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McKeanSingerReport {
    pub chi: i64,
    /// `(t, str exp(-tL))`
    pub supertraces: Vec<(f64, f64)>,
    pub max_error: f64,
    pub ok: bool,
}

/// `sum_k (-1)^k sum_{λ in spec L_k} exp(-tλ) = χ` for each `t`.
pub fn mckean_singer(c: &CliqueComplex, t_values: &[f64], max_eig: usize) -> Result<McKeanSingerReport> {
    if let Some(t) = t_values.iter().find(|t| !(**t >= 0.0)) {
        return Err(Error::Argument(format!("heat time must be >= 0, got {t}")));
    }
    let spectra = hodge_spectra(c, max_eig)?;
    Ok(mckean_singer_from_spectra(c.euler_characteristic(), &spectra, t_values))
}

pub fn mckean_singer_from_spectra(chi: i64, spectra: &[Vec<f64>], t_values: &[f64]) -> McKeanSingerReport {
    let supertraces: Vec<(f64, f64)> = t_values
        .iter()
        .map(|&t| {
            let s = spectra
                .iter()
                .enumerate()
                .map(|(k, spec)| {
                    let tr: f64 = spec.iter().map(|&l| (-t * l).exp()).sum();
                    if k % 2 == 0 {
                        tr
                    } else {
                        -tr
                    }
                })
                .sum();
            (t, s)
        })
        .collect();
    let max_error = supertraces
        .iter()
        .map(|&(_, s)| (s - chi as f64).abs())
        .fold(0.0, f64::max);
    McKeanSingerReport {
        chi,
        supertraces,
        max_error,
        ok: max_error <= 1e-6,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupersymmetryReport {
    /// `D^2` equals `⊕ L_k` entry for entry.
    pub blocks_exact: bool,
    /// `max |spec(D^2) - ⋃ spec(L_k)|`, both sorted.
    pub union_error: f64,
    /// Nonzero eigenvalue counts of even and odd forms.
    pub even_nonzero: usize,
    pub odd_nonzero: usize,
    /// `max |even - odd|` over the sorted nonzero spectra.
    pub pairing_error: f64,
    pub ok: bool,
}

pub fn check_supersymmetry(c: &CliqueComplex, zero_tol: f64, max_eig: usize) -> Result<SupersymmetryReport> {
    let d = dirac(c);
    let dsq = d.mul(&d);
    let blocks_exact = dsq == block_hodge(c);
    let full = dsq.eigenvalues(max_eig)?.values;
    let spectra = hodge_spectra(c, max_eig)?;
    let mut union: Vec<f64> = spectra.iter().flatten().copied().collect();
    union.sort_by(f64::total_cmp);
    let max_abs = |a: &[f64], b: &[f64]| {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    };
    let union_error = if union.len() == full.len() {
        max_abs(&union, &full)
    } else {
        f64::INFINITY
    };

    let top = union.last().copied().unwrap_or(0.0);
    let cut = zero_tol * top.max(1.0);
    let nonzero = |parity: usize| {
        let mut v: Vec<f64> = spectra
            .iter()
            .enumerate()
            .filter(|(k, _)| k % 2 == parity)
            .flat_map(|(_, s)| s.iter().copied())
            .filter(|&l| l >= cut)
            .collect();
        v.sort_by(f64::total_cmp);
        v
    };
    let (even, odd) = (nonzero(0), nonzero(1));
    let pairing_error = if even.len() == odd.len() {
        max_abs(&even, &odd)
    } else {
        f64::INFINITY
    };
    let ok = blocks_exact && union_error <= 1e-8 && pairing_error <= 1e-8;
    Ok(SupersymmetryReport {
        blocks_exact,
        union_error,
        even_nonzero: even.len(),
        odd_nonzero: odd.len(),
        pairing_error,
        ok,
    })
}

/// One row per refinement level.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelStats {
    pub level: usize,
    pub v0: usize,
    pub v1: usize,
    pub l1_norm: f64,
    /// Distances to the next level; `None` on the last level.
    pub l1_dist_next: Option<f64>,
    pub sup_dist_next: Option<f64>,
    /// Smallest nonzero Laplacian eigenvalue.
    pub lambda1: Option<f64>,
    pub max_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub interval: (f64, f64),
    pub levels: Vec<LevelStats>,
    /// Set when the requested depth exceeded a cap and the table stops early.
    pub partial: bool,
    #[serde(skip)]
    pub profiles: Vec<SpectrumProfile>,
}

impl ConvergenceReport {
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<f64>| v.map_or(String::new(), |x| x.to_string());
        let mut out = String::from("level,v0,v1,l1norm,l1dist_next,supdist_next,lambda1,maxdeg\n");
        for r in &self.levels {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.level,
                r.v0,
                r.v1,
                r.l1_norm,
                opt(r.l1_dist_next),
                opt(r.sup_dist_next),
                opt(r.lambda1),
                r.max_degree
            )
            .unwrap();
        }
        out
    }
}

/// Refines `g0` level by level up to `depth`, recording the scalar spectral
/// profile of each level. Stops early, flagged `partial`, when the next level
/// would not fit the caps.
pub fn convergence_experiment(
    g0: &SimpleGraph,
    depth: usize,
    interval: (f64, f64),
    limits: &Limits,
) -> Result<ConvergenceReport> {
    let (a, b) = interval;
    check_interval(a, b)?;
    let projected = projected_f_vectors(g0, depth, limits)?;
    let mut reachable = 0;
    for (m, f) in projected.iter().enumerate() {
        let v0 = f.0.first().cloned().unwrap_or_default();
        let parent_total = if m == 0 { v0.clone() } else { projected[m - 1].total() };
        if v0 > limits.max_eig.into() || parent_total > limits.max_simplices.into() {
            break;
        }
        reachable = m + 1;
    }
    if reachable == 0 {
        return Err(Error::Capacity {
            what: "level-0 eigensolve order",
            needed: g0.vertex_count() as u128,
            cap: limits.max_eig as u128,
        });
    }
    let partial = reachable < depth + 1;

    let mut graphs = vec![g0.clone()];
    for _ in 1..reachable {
        let next = refine(graphs.last().unwrap())?.graph;
        graphs.push(next);
    }
    let mut profiles = Vec::with_capacity(graphs.len());
    let mut levels = Vec::with_capacity(graphs.len());
    for (m, g) in graphs.iter().enumerate() {
        let spec = scalar_laplacian(g).eigenvalues(limits.max_eig)?;
        let lambda1 = spec.ground_state(DEFAULT_ZERO_TOL);
        let p = SpectrumProfile::new(spec.values)?;
        levels.push(LevelStats {
            level: m,
            v0: g.vertex_count(),
            v1: g.edge_count(),
            l1_norm: p.l1_norm(),
            l1_dist_next: None,
            sup_dist_next: None,
            lambda1,
            max_degree: g.max_degree(),
        });
        profiles.push(p);
    }
    for m in 0..profiles.len().saturating_sub(1) {
        levels[m].l1_dist_next = Some(l1_distance(&profiles[m], &profiles[m + 1]));
        levels[m].sup_dist_next = Some(sup_distance_on(&profiles[m], &profiles[m + 1], a, b)?);
    }
    Ok(ConvergenceReport {
        interval,
        levels,
        partial,
        profiles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(v: &[f64]) -> SpectrumProfile {
        SpectrumProfile::new(v.to_vec()).unwrap()
    }

    #[test]
    fn step_function_convention() {
        let p = prof(&[3.0, 0.0, 3.0]);
        assert_eq!(p.eval(0.0), 0.0);
        assert_eq!(p.eval(1.0 / 3.0), 0.0);
        assert_eq!(p.eval(0.34), 3.0);
        assert_eq!(p.eval(2.0 / 3.0), 3.0);
        assert_eq!(p.eval(1.0), 3.0);
        let single = prof(&[5.0]);
        for x in [0.0, 0.3, 1.0] {
            assert_eq!(single.eval(x), 5.0);
        }
        assert!(SpectrumProfile::new(vec![]).is_err());
        assert!(SpectrumProfile::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn house_degree_profile() {
        let p = SpectrumProfile::from_degrees(&generate(Family::House).unwrap()).unwrap();
        let steps: Vec<f64> = (1..=5).map(|k| p.eval(k as f64 / 5.0)).collect();
        assert_eq!(steps, vec![2.0, 2.0, 2.0, 3.0, 3.0]);
    }

    #[test]
    fn norms_and_distances() {
        assert_eq!(prof(&[2.5; 4]).l1_norm(), 2.5);
        let (p, q) = (prof(&[0.0, 2.0]), prof(&[1.0, 1.0]));
        assert_eq!(l1_distance(&p, &q), 1.0);
        assert_eq!(l1_distance(&p, &p), 0.0);
        assert_eq!(l1_distance(&prof(&[1.0]), &prof(&[4.0, 4.0, 4.0])), 3.0);
        assert_eq!(sup_distance_on(&p, &p, 0.1, 0.9).unwrap(), 0.0);
        assert_eq!(sup_distance_on(&prof(&[1.0]), &prof(&[3.5; 7]), 0.2, 0.4).unwrap(), 2.5);
        assert!(sup_distance_on(&p, &q, 0.5, 0.5).is_err());
        assert!(sup_distance_on(&p, &q, 0.0, 0.5).is_err());
        // mixed grids: thirds against halves
        let (a, b) = (prof(&[0.0, 1.0, 2.0]), prof(&[0.0, 2.0]));
        // cells (0,1/3],(1/3,1/2],(1/2,2/3],(2/3,1] -> |0-0|,|1-0|,|1-2|,|2-2|
        assert!((l1_distance(&a, &b) - (1.0 / 6.0 + 1.0 / 6.0)).abs() < 1e-15);
        assert_eq!(sup_distance_on(&a, &b, 0.05, 0.3).unwrap(), 0.0);
        assert_eq!(sup_distance_on(&a, &b, 0.05, 0.95).unwrap(), 1.0);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(limit_curve_d1(0.0), 0.0);
        assert!((limit_curve_d1(1.0) - 4.0).abs() < 1e-15);
        assert!((limit_curve_d1(0.5) - 2.0).abs() < 1e-15);
        assert_eq!(arcsin_cdf(0.0).unwrap(), 0.0);
        assert!((arcsin_cdf(4.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((arcsin_cdf(2.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(arcsin_cdf(-0.1).is_err() && arcsin_cdf(4.1).is_err());
        for i in 0..=10 {
            let x = i as f64 / 10.0;
            assert!((arcsin_cdf(limit_curve_d1(x)).unwrap() - x).abs() < 1e-12);
        }
    }

    #[test]
    fn renormalization_small_cases() {
        for n in [3, 4, 5, 8] {
            let r = check_renormalization_d1(n).unwrap();
            assert!(r.ok, "{r:?}");
        }
        assert!(check_renormalization_d1(2).is_err());
        assert_eq!(quadratic_map(0.0), 0.0);
    }

    #[test]
    fn renormalized_c8_is_two_c4() {
        // rows of 4K - K^2 for K = L(C_8)
        let k = scalar_laplacian(&generate(Family::Cycle(8)).unwrap());
        let t = k.scale(4).add(&k.mul(&k).scale(-1));
        let row0: Vec<i64> = (0..8).map(|j| t.get(0, j)).collect();
        assert_eq!(row0, vec![2, 0, -1, 0, 0, 0, -1, 0]);
        let row3: Vec<i64> = (0..8).map(|j| t.get(3, j)).collect();
        assert_eq!(row3, vec![0, -1, 0, 2, 0, -1, 0, 0]);
    }

    #[test]
    fn lidskii_examples() {
        let a = scalar_laplacian(&generate(Family::Cycle(4)).unwrap()).to_dense();
        let r = lidskii_bound(&a, &a).unwrap();
        assert_eq!((r.lhs, r.rhs, r.ok), (0.0, 0.0, true));
        let mut b = a.clone();
        for i in 0..4 {
            b.add(i, i, 1.0);
        }
        let r = lidskii_bound(&a, &b).unwrap();
        assert!((r.lhs - 4.0).abs() < 1e-12 && r.rhs == 4.0 && r.ok);
        assert!(lidskii_bound(&a, &DenseMatrix::zeros(3)).is_err());
    }

    #[test]
    fn schur_grone_on_triangle_and_house() {
        let r = check_schur_grone(&generate(Family::Complete(3)).unwrap(), 100).unwrap();
        assert!(r.ok && r.grone_ok == Some(true));
        // ascending sums (0,3,6) vs degrees (2,4,6)
        assert!((r.schur_min_slack - 1.0).abs() < 1e-12);
        let r = check_schur_grone(&generate(Family::House).unwrap(), 100).unwrap();
        assert!(r.ok);
        let two_parts = crate::graph::make_graph(4, &[(0, 1), (2, 3)]).unwrap();
        let r = check_schur_grone(&two_parts, 100).unwrap();
        assert!(r.ok && r.grone_ok.is_none());
    }

    #[test]
    fn mckean_singer_small() {
        let c = CliqueComplex::build(&generate(Family::Complete(3)).unwrap()).unwrap();
        let r = mckean_singer(&c, &[0.0, 1.0, 50.0], 100).unwrap();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.chi, 1);
        assert!(mckean_singer(&c, &[-1.0], 100).is_err());
    }

    #[test]
    fn histogram_counts_everything() {
        let p = prof(&[0.0, 0.5, 1.0, 1.0, 4.0]);
        let h = p.histogram(4);
        assert_eq!(h.counts, vec![2, 2, 0, 1]);
        assert_eq!(prof(&[2.0, 2.0]).histogram(3).counts, vec![2, 0, 0]);
    }

    #[test]
    fn profile_csv() {
        assert_eq!(prof(&[1.0, 0.0]).to_csv(), "x,F(x)\n0.5,0\n1,1\n");
    }
}

//! Exact f-vector dynamics under barycentric subdivision.
//!
//! A `k`-simplex of the refinement is a chain `x_0 ⊊ x_1 ⊊ ... ⊊ x_k` of
//! simplices of the parent. Chains ending in a fixed `j`-simplex correspond
//! to ordered set partitions of its `j + 1` vertices into `k + 1` blocks, of
//! which there are `(k+1)! S(j+1, k+1)`. Summing over the top simplex gives a
//! triangular linear map on f-vectors.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Stirling number of the second kind via `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] * BigUint::from(j) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// f-vector `(v_0, ..., v_d)` with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<BigUint>);

impl FVector {
    pub fn from_counts(counts: &[u64]) -> Self {
        FVector(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn dimension(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let v = BigInt::from(v.clone());
                if k % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }

    /// Entries as `u64` when every one of them fits.
    pub fn to_u64(&self) -> Option<Vec<u64>> {
        self.0.iter().map(|v| u64::try_from(v).ok()).collect()
    }
}

/// The `(d+1) x (d+1)` upper-triangular subdivision matrix, entry `(k, j)`
/// equal to `(k+1)! S(j+1, k+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    entries: Vec<Vec<BigUint>>,
}

pub fn transfer_matrix(d: usize) -> TransferMatrix {
    let entries = (0..=d)
        .map(|k| {
            (0..=d)
                .map(|j| {
                    if k <= j {
                        factorial(k + 1) * stirling2(j + 1, k + 1)
                    } else {
                        BigUint::zero()
                    }
                })
                .collect()
        })
        .collect();
    TransferMatrix { entries }
}

impl TransferMatrix {
    pub fn dimension(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entry(&self, k: usize, j: usize) -> &BigUint {
        &self.entries[k][j]
    }

    /// Diagonal of the triangular matrix, hence its eigenvalues.
    pub fn eigenvalues(&self) -> Vec<BigUint> {
        (0..self.entries.len()).map(|k| self.entries[k][k].clone()).collect()
    }

    pub fn apply(&self, f: &FVector) -> FVector {
        assert_eq!(f.0.len(), self.entries.len(), "f-vector length mismatch");
        FVector(
            self.entries
                .iter()
                .map(|row| row.iter().zip(&f.0).map(|(a, v)| a * v).sum())
                .collect(),
        )
    }
}

/// f-vector after `m` refinements.
pub fn evolve(f: &FVector, m: usize) -> FVector {
    trajectory(f, m).pop().expect("trajectory is nonempty")
}

/// f-vectors of levels `0..=m`.
pub fn trajectory(f: &FVector, m: usize) -> Vec<FVector> {
    let mut out = vec![f.clone()];
    let Some(d) = f.dimension() else {
        out.extend(std::iter::repeat(f.clone()).take(m));
        return out;
    };
    let t = transfer_matrix(d);
    for _ in 0..m {
        let next = t.apply(out.last().unwrap());
        out.push(next);
    }
    out
}

/// Families with known closed forms for their f-vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClosedFormFamily {
    K2,
    K3,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormReport {
    pub family: ClosedFormFamily,
    pub m: usize,
    pub closed_form: Vec<String>,
    pub evolved: Vec<String>,
    pub ok: bool,
}

fn pow_half(base: u64, exp: i64) -> BigRational {
    // base^exp for exp >= -1, exact
    if exp < 0 {
        BigRational::new(BigInt::one(), BigInt::from(base))
    } else {
        BigRational::from_integer(BigInt::from(base).pow(exp as u32))
    }
}

/// Evaluates the closed forms
/// `K2: v0 = 1 + 2^m, v1 = 2^m` and
/// `K3: v0 = 1 - 3*2^(m-1) + 3*2^m + 2^(m-1)*3^m,
///      v1 = 3(-2^(m-1) + 2^m + 2^(m-1)*3^m), v2 = 6^m`
/// in rational arithmetic and compares with [`evolve`].
pub fn closed_form_check(family: ClosedFormFamily, m: usize) -> ClosedFormReport {
    let mi = m as i64;
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let (closed, start): (Vec<BigRational>, Vec<u64>) = match family {
        ClosedFormFamily::K2 => {
            let p = pow_half(2, mi);
            (vec![int(1) + &p, p], vec![2, 1])
        }
        ClosedFormFamily::K3 => {
            let half = pow_half(2, mi - 1);
            let two_m = pow_half(2, mi);
            let three_m = pow_half(3, mi);
            let v0 = int(1) - int(3) * &half + int(3) * &two_m + &half * &three_m;
            let v1 = int(3) * (-&half + &two_m + &half * &three_m);
            let v2 = pow_half(6, mi);
            (vec![v0, v1, v2], vec![3, 3, 1])
        }
    };
    let evolved = evolve(&FVector::from_counts(&start), m);
    let ok = closed.len() == evolved.0.len()
        && closed
            .iter()
            .zip(&evolved.0)
            .all(|(c, e)| *c == BigRational::from_integer(BigInt::from(e.clone())));
    ClosedFormReport {
        family,
        m,
        closed_form: closed.iter().map(ToString::to_string).collect(),
        evolved: evolved.0.iter().map(ToString::to_string).collect(),
        ok,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRatio {
    pub m: usize,
    /// `v_0(G_m) / v_0(G_{m-1})`
    pub ratio: BigRational,
    /// `|ratio - (d+1)!|`
    pub gap: BigRational,
}

pub fn growth_ratios(f0: &FVector, m_max: usize) -> Vec<GrowthRatio> {
    let levels = trajectory(f0, m_max);
    let limit = BigRational::from_integer(BigInt::from(factorial(f0.0.len())));
    levels
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let ratio = BigRational::new(
                BigInt::from(w[1].0[0].clone()),
                BigInt::from(w[0].0[0].clone()),
            );
            let gap = (&ratio - &limit).abs();
            GrowthRatio {
                m: i + 1,
                ratio,
                gap,
            }
        })
        .collect()
}

/// `m,v0,...,vd,ratio_num,ratio_den`; the ratio columns are empty at `m = 0`.
pub fn trajectory_csv(f0: &FVector, depth: usize) -> String {
    let levels = trajectory(f0, depth);
    let ratios = growth_ratios(f0, depth);
    let mut out = String::from("m");
    for k in 0..f0.0.len() {
        write!(out, ",v{k}").unwrap();
    }
    out.push_str(",ratio_num,ratio_den\n");
    for (m, f) in levels.iter().enumerate() {
        write!(out, "{m}").unwrap();
        for v in &f.0 {
            write!(out, ",{v}").unwrap();
        }
        match m.checked_sub(1).and_then(|i| ratios.get(i)) {
            Some(r) => writeln!(out, ",{},{}", r.ratio.numer(), r.ratio.denom()).unwrap(),
            None => out.push_str(",,\n"),
        }
    }
    out
}

//! Independent reference computations checked against the library.

use baryspec::barycentric::refine_complex;
use baryspec::counting::{factorial, stirling2, transfer_matrix};
use baryspec::operators::{betti_numbers, exterior_derivative, hodge_laplacian, scalar_laplacian};
use baryspec::spectral::{
    l1_distance, limit_curve_d1, sup_distance_on, sup_distance_to_curve, DEFAULT_ZERO_TOL,
};
use baryspec::{generate, make_graph, CliqueComplex, Family, SimpleGraph, SpectrumProfile};
use num_bigint::BigUint;

/// `S(n, k) = (1/k!) sum_j (-1)^j C(k, j) (k - j)^n`, in signed big integers.
fn stirling_explicit(n: usize, k: usize) -> BigUint {
    use num_bigint::BigInt;
    let mut sum = BigInt::from(0);
    let mut binom = BigInt::from(1);
    for j in 0..=k {
        let term = &binom * BigInt::from(k - j).pow(n as u32);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    let kf: BigInt = (1..=k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i));
    (sum / kf).to_biguint().expect("nonnegative")
}

#[test]
fn stirling_matches_explicit_sum() {
    for n in 0..25 {
        for k in 0..=n {
            assert_eq!(stirling2(n, k), stirling_explicit(n, k), "S({n},{k})");
        }
    }
}

#[test]
fn transfer_entries_and_eigenvalues() {
    for d in 0..7 {
        let t = transfer_matrix(d);
        for k in 0..=d {
            for j in 0..=d {
                let want = if j < k {
                    BigUint::from(0u32)
                } else {
                    factorial(k + 1) * stirling_explicit(j + 1, k + 1)
                };
                assert_eq!(t.entry(k, j), &want, "d={d} ({k},{j})");
            }
        }
        let eig: Vec<BigUint> = (1..=d + 1).map(factorial).collect();
        assert_eq!(t.eigenvalues(), eig);
    }
}

/// Exact rank over the rationals by fraction-free elimination.
fn exact_rank(rows: usize, cols: usize, get: impl Fn(usize, usize) -> i64) -> usize {
    let mut m: Vec<Vec<i128>> = (0..rows)
        .map(|i| (0..cols).map(|j| get(i, j) as i128).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for j in 0..cols {
                    m[r][j] = m[r][j] * a - m[rank][j] * b;
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn betti_by_rank(c: &CliqueComplex) -> Vec<usize> {
    let f = c.f_vector();
    let levels = f.len();
    let ranks: Vec<usize> = (0..levels.saturating_sub(1))
        .map(|k| {
            let d = exterior_derivative(c, k).unwrap();
            exact_rank(d.rows(), d.cols(), |i, j| d.get(i, j))
        })
        .collect();
    (0..levels)
        .map(|k| {
            let out = ranks.get(k).copied().unwrap_or(0);
            let inc = if k == 0 { 0 } else { ranks[k - 1] };
            f[k] as usize - out - inc
        })
        .collect()
}

#[test]
fn betti_numbers_match_exact_ranks() {
    let graphs = [
        Family::Complete(3),
        Family::Complete(5),
        Family::Cycle(6),
        Family::House,
        Family::Wheel(6),
        Family::Octahedron,
        Family::Torus(4, 4),
    ];
    for f in graphs {
        let c = CliqueComplex::build(&generate(f).unwrap()).unwrap();
        let spectral = betti_numbers(&c, DEFAULT_ZERO_TOL, 6000).unwrap();
        assert_eq!(spectral, betti_by_rank(&c), "{f}");
    }
    let torus = CliqueComplex::build(&generate(Family::Torus(4, 4)).unwrap()).unwrap();
    assert_eq!(betti_by_rank(&torus), vec![1, 2, 1]);
    let house = CliqueComplex::build(&generate(Family::House).unwrap()).unwrap();
    assert_eq!(betti_by_rank(&house), vec![1, 1, 0]);
}

#[test]
fn hodge_zero_is_the_scalar_laplacian() {
    for f in [Family::Cycle(4), Family::House, Family::Octahedron, Family::Complete(5)] {
        let g = generate(f).unwrap();
        let c = CliqueComplex::build(&g).unwrap();
        assert_eq!(hodge_laplacian(&c, 0).unwrap(), scalar_laplacian(&g), "{f}");
    }
}

/// Sphere counts by brute force over the neighbourhood subsets.
fn sphere_counts_brute(g: &SimpleGraph, x: usize) -> Vec<u64> {
    let nb = g.neighbors(x).to_vec();
    let mut counts = vec![0u64; nb.len()];
    for mask in 1u32..(1 << nb.len()) {
        let members: Vec<usize> = (0..nb.len()).filter(|i| mask >> i & 1 == 1).map(|i| nb[i]).collect();
        let clique = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.is_adjacent(u, v)));
        if clique {
            counts[members.len() - 1] += 1;
        }
    }
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

#[test]
fn sphere_counts_match_brute_force() {
    for f in [Family::House, Family::Wheel(7), Family::Octahedron, Family::Complete(5)] {
        let g = generate(f).unwrap();
        let c = CliqueComplex::build(&g).unwrap();
        for x in 0..g.vertex_count() {
            let mut got = c.sphere_counts(x);
            while got.last() == Some(&0) {
                got.pop();
            }
            assert_eq!(got, sphere_counts_brute(&g, x), "{f} vertex {x}");
        }
    }
}

#[test]
fn refinement_edges_are_strict_containment() {
    let g = generate(Family::House).unwrap();
    let c = CliqueComplex::build(&g).unwrap();
    let r = refine_complex(&c);
    let s = c.simplices();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            let contained = s[i].is_proper_face_of(&s[j]) || s[j].is_proper_face_of(&s[i]);
            assert_eq!(r.is_adjacent(i, j), contained, "{:?} {:?}", s[i], s[j]);
        }
    }
}

/// `L1` distance sampled at the midpoints of the `1/(n m)` grid, on which
/// both step functions are constant.
fn l1_by_sampling(p: &SpectrumProfile, q: &SpectrumProfile) -> f64 {
    let cells = p.len() * q.len();
    (0..cells)
        .map(|i| {
            let x = (i as f64 + 0.5) / cells as f64;
            (p.eval(x) - q.eval(x)).abs()
        })
        .sum::<f64>()
        / cells as f64
}

#[test]
fn l1_distance_matches_fine_sampling() {
    let k3 = scalar_laplacian(&generate(Family::Complete(3)).unwrap());
    let oct = scalar_laplacian(&generate(Family::Octahedron).unwrap());
    let house = scalar_laplacian(&generate(Family::House).unwrap());
    let profiles: Vec<SpectrumProfile> = [k3, oct, house]
        .iter()
        .map(|l| SpectrumProfile::new(l.eigenvalues(100).unwrap().values).unwrap())
        .collect();
    for p in &profiles {
        for q in &profiles {
            assert!((l1_distance(p, q) - l1_by_sampling(p, q)).abs() < 1e-12);
        }
    }
    let a = SpectrumProfile::new(vec![0.0, 2.0]).unwrap();
    let b = SpectrumProfile::new(vec![1.0, 1.0]).unwrap();
    assert!((l1_distance(&a, &b) - 1.0).abs() < 1e-15);
}

/// Sup of `|F - f|` sampled densely; a lower bound that converges to the sup.
fn sup_by_sampling(p: &SpectrumProfile, f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let steps = 200_000;
    (0..=steps)
        .map(|i| {
            let x = a + (b - a) * i as f64 / steps as f64;
            (p.eval(x) - f(x)).abs()
        })
        .fold(0.0, f64::max)
}

#[test]
fn c8_against_the_limit_curve() {
    let g = generate(Family::Cycle(8)).unwrap();
    let p = SpectrumProfile::new(scalar_laplacian(&g).eigenvalues(100).unwrap().values).unwrap();
    let exact = sup_distance_to_curve(&p, limit_curve_d1, 0.1, 0.9).unwrap();
    let sampled = sup_by_sampling(&p, limit_curve_d1, 0.1, 0.9);
    assert!(exact >= sampled - 1e-12 && exact - sampled < 1e-3, "{exact} vs {sampled}");
    // eigenvalues of C_n come in equal pairs, so every other cell lags one
    // grid step behind the curve; the gap is 2 sin(pi / n), well above 0.25
    let want = 2.0 * (std::f64::consts::PI / 8.0).sin();
    assert!((exact - want).abs() < 1e-12, "{exact} vs {want}");
}

#[test]
fn sup_distance_between_profiles_matches_sampling() {
    let c6 = scalar_laplacian(&generate(Family::Cycle(6)).unwrap()).eigenvalues(10).unwrap().values;
    let c9 = scalar_laplacian(&generate(Family::Cycle(9)).unwrap()).eigenvalues(10).unwrap().values;
    let (p, q) = (SpectrumProfile::new(c6).unwrap(), SpectrumProfile::new(c9).unwrap());
    let exact = sup_distance_on(&p, &q, 0.2, 0.8).unwrap();
    let sampled = sup_by_sampling(&p, |x| q.eval(x), 0.2, 0.8);
    assert!((exact - sampled).abs() < 1e-12, "{exact} vs {sampled}");
}

#[test]
fn inductive_dimension_of_cycles_and_wheels() {
    use num_rational::BigRational;
    let one = BigRational::from_integer(1.into());
    for n in 4..9 {
        assert_eq!(generate(Family::Cycle(n)).unwrap().inductive_dimension(), one);
    }
    let two = BigRational::from_integer(2.into());
    assert_eq!(generate(Family::Octahedron).unwrap().inductive_dimension(), two);
    // a triangle with a pendant vertex
    let g = make_graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
    // dims of unit spheres: {1,2}: 1, {0,2}: 1, {0,1,3}: edge + point = 2/3, {2}: 0
    let want = BigRational::new(1.into(), 1.into())
        + (BigRational::from_integer(2.into()) + BigRational::new(2.into(), 3.into()))
            / BigRational::from_integer(4.into());
    assert_eq!(g.inductive_dimension(), want);
}

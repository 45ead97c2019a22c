//! Named identity suites run against a graph and, optionally, its refinements.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::barycentric::{refine_complex, refine_iter};
use crate::complex::CliqueComplex;
use crate::counting::{evolve, FVector};
use crate::eigen::DenseMatrix;
use crate::graph::SimpleGraph;
use crate::operators::{betti_numbers, check_d_squared, scalar_laplacian};
use crate::spectral::{
    check_renormalization_d1, check_schur_grone, check_supersymmetry, lidskii_bound, mckean_singer,
    DEFAULT_ZERO_TOL,
};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Euler,
    GaussBonnet,
    Handshake,
    Schur,
    Grone,
    McKean,
    Susy,
    Lidskii,
    Renorm,
    Betti,
}

impl Suite {
    pub const ALL_NAMES: [&'static str; 11] = [
        "all",
        "euler",
        "gaussbonnet",
        "handshake",
        "schur",
        "grone",
        "mckean",
        "susy",
        "lidskii",
        "renorm",
        "betti",
    ];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Euler => "euler",
            Suite::GaussBonnet => "gaussbonnet",
            Suite::Handshake => "handshake",
            Suite::Schur => "schur",
            Suite::Grone => "grone",
            Suite::McKean => "mckean",
            Suite::Susy => "susy",
            Suite::Lidskii => "lidskii",
            Suite::Renorm => "renorm",
            Suite::Betti => "betti",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "euler" => Suite::Euler,
            "gaussbonnet" => Suite::GaussBonnet,
            "handshake" => Suite::Handshake,
            "schur" => Suite::Schur,
            "grone" => Suite::Grone,
            "mckean" => Suite::McKean,
            "susy" => Suite::Susy,
            "lidskii" => Suite::Lidskii,
            "renorm" => Suite::Renorm,
            "betti" => Suite::Betti,
            other => {
                return Err(Error::Argument(format!(
                    "unknown suite {other:?}; expected one of {}",
                    Suite::ALL_NAMES.join("|")
                )))
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOptions {
    pub limits: Limits,
    /// Seed for the random matrices of the Lidskii suite.
    pub seed: u64,
    pub zero_tol: f64,
    pub heat_times: Vec<f64>,
    /// Cycle length for the renormalization suite.
    pub renorm_n: usize,
    pub lidskii_sizes: Vec<usize>,
    pub lidskii_trials: usize,
    /// Also run the graph suites on refinements `1..=levels`.
    pub levels: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            limits: Limits::default(),
            seed: 0,
            zero_tol: DEFAULT_ZERO_TOL,
            heat_times: vec![0.0, 0.5, 1.0, 5.0],
            renorm_n: 8,
            lidskii_sizes: vec![4, 6, 8, 12],
            lidskii_trials: 100,
            levels: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub ok: bool,
    pub detail: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<CheckOutcome>,
    pub ok: bool,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Runs `suite` on `g` (and its first `opts.levels` refinements for the
/// graph-dependent suites). Capacity errors abort the run.
pub fn run_suite(g: &SimpleGraph, suite: Suite, opts: &CheckOptions) -> Result<CheckReport> {
    let mut checks = Vec::new();
    for level in 0..=opts.levels {
        let host = if level == 0 {
            g.clone()
        } else {
            refine_iter(g, level, &opts.limits)?.graph
        };
        let c = CliqueComplex::build_with_cap(&host, opts.limits.max_simplices)?;
        graph_checks(&host, &c, level, suite, opts, &mut checks)?;
    }
    if suite.includes(Suite::Lidskii) {
        lidskii_checks(g, opts, &mut checks)?;
    }
    if suite.includes(Suite::Renorm) {
        let r = check_renormalization_d1(opts.renorm_n)?;
        checks.push(outcome(format!("renorm[n={}]", opts.renorm_n), r.ok, json!(r)));
    }
    let ok = checks.iter().all(|c| c.ok);
    Ok(CheckReport { checks, ok })
}

fn outcome(name: String, ok: bool, detail: serde_json::Value) -> CheckOutcome {
    CheckOutcome { name, ok, detail }
}

fn graph_checks(
    g: &SimpleGraph,
    c: &CliqueComplex,
    level: usize,
    suite: Suite,
    opts: &CheckOptions,
    out: &mut Vec<CheckOutcome>,
) -> Result<()> {
    let tag = |name: &str| format!("{name}[level {level}]");
    let max_eig = opts.limits.max_eig;

    if suite.includes(Suite::Euler) {
        let f = c.f_vector();
        let chi = c.euler_characteristic();
        let predicted = evolve(&FVector::from_counts(&f), 1);
        let next = if c.len() > opts.limits.max_simplices || g.vertex_count() == 0 {
            None
        } else {
            Some(CliqueComplex::build_with_cap(&refine_complex(c), opts.limits.max_simplices)?)
        };
        let (next_f, next_chi, f_ok, chi_ok) = match &next {
            Some(n) => {
                let nf = n.f_vector();
                let f_ok = FVector::from_counts(&nf) == predicted;
                (Some(nf), Some(n.euler_characteristic()), f_ok, n.euler_characteristic() == chi)
            }
            None => (None, None, true, true),
        };
        let transfer_chi_ok = predicted.euler_characteristic() == chi.into();
        out.push(outcome(
            tag("euler"),
            f_ok && chi_ok && transfer_chi_ok,
            json!({
                "f_vector": f,
                "chi": chi,
                "refined_f_vector": next_f,
                "refined_chi": next_chi,
                "predicted_f_vector": predicted.0.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "f_vector_matches_prediction": f_ok,
                "chi_invariant": chi_ok && transfer_chi_ok,
            }),
        ));
    }
    if suite.includes(Suite::GaussBonnet) {
        let r = c.check_gauss_bonnet();
        out.push(outcome(tag("gaussbonnet"), r.ok, json!(r)));
    }
    if suite.includes(Suite::Handshake) {
        let reports: Vec<_> = (0..c.levels().max(1)).map(|k| c.check_handshake(k)).collect();
        let ok = reports.iter().all(|r| r.ok);
        out.push(outcome(tag("handshake"), ok, json!(reports)));
    }
    if suite.includes(Suite::Schur) || suite.includes(Suite::Grone) {
        let r = check_schur_grone(g, max_eig)?;
        if suite.includes(Suite::Schur) {
            out.push(outcome(
                tag("schur"),
                r.schur_ok && r.trace_ok,
                json!({"schur_ok": r.schur_ok, "trace_ok": r.trace_ok, "min_slack": r.schur_min_slack}),
            ));
        }
        if suite.includes(Suite::Grone) {
            out.push(outcome(
                tag("grone"),
                r.grone_ok.unwrap_or(true),
                json!({"applicable": r.grone_ok.is_some(), "grone_ok": r.grone_ok, "min_slack": r.grone_min_slack}),
            ));
        }
    }
    if suite.includes(Suite::McKean) {
        let r = mckean_singer(c, &opts.heat_times, max_eig)?;
        out.push(outcome(tag("mckean"), r.ok, json!(r)));
    }
    if suite.includes(Suite::Susy) {
        let dd = check_d_squared(c);
        out.push(outcome(tag("dd_zero"), dd, json!({ "ok": dd })));
        let r = check_supersymmetry(c, opts.zero_tol, max_eig)?;
        out.push(outcome(tag("susy"), r.ok, json!(r)));
    }
    if suite.includes(Suite::Betti) {
        let b = betti_numbers(c, opts.zero_tol, max_eig)?;
        let alt: i64 = b
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum();
        let chi = c.euler_characteristic();
        out.push(outcome(
            tag("betti"),
            alt == chi,
            json!({"betti": b, "alternating_sum": alt, "chi": chi}),
        ));
    }
    Ok(())
}

fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let v = rng.gen_range(-1.0..1.0);
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    m
}

fn lidskii_checks(g: &SimpleGraph, opts: &CheckOptions, out: &mut Vec<CheckOutcome>) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for &n in &opts.lidskii_sizes {
        let mut failures = 0usize;
        let mut min_slack = f64::INFINITY;
        for _ in 0..opts.lidskii_trials {
            let a = random_symmetric(n, &mut rng);
            let b = random_symmetric(n, &mut rng);
            let r = lidskii_bound(&a, &b)?;
            min_slack = min_slack.min(r.rhs - r.lhs);
            failures += usize::from(!r.ok);
        }
        out.push(outcome(
            format!("lidskii[random n={n}]"),
            failures == 0,
            json!({"trials": opts.lidskii_trials, "failures": failures, "min_slack": min_slack, "seed": opts.seed}),
        ));
    }
    // the Laplacian against its own degree diagonal
    if g.vertex_count() > 0 && g.vertex_count() <= opts.limits.max_eig {
        let l = scalar_laplacian(g).to_dense();
        let n = l.size();
        let diag = DenseMatrix::from_fn(n, |i, j| if i == j { l.get(i, i) } else { 0.0 });
        let r = lidskii_bound(&l, &diag)?;
        out.push(outcome("lidskii[laplacian vs degrees]".into(), r.ok, json!(r)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::ALL_NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().to_string(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn full_suite_passes_on_octahedron() {
        let g = generate(Family::Octahedron).unwrap();
        let opts = CheckOptions {
            lidskii_trials: 10,
            ..CheckOptions::default()
        };
        let r = run_suite(&g, Suite::All, &opts).unwrap();
        let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
        assert!(r.ok, "failed: {failed:?}");
        for name in ["euler", "gaussbonnet", "handshake", "schur", "grone", "mckean", "dd_zero", "susy", "betti"] {
            assert!(r.checks.iter().any(|c| c.name == format!("{name}[level 0]")), "{name}");
        }
        assert!(r.checks.iter().any(|c| c.name.starts_with("lidskii")));
        assert!(r.checks.iter().any(|c| c.name == "renorm[n=8]"));
    }

    #[test]
    fn single_suite_selects_only_its_checks() {
        let g = generate(Family::Complete(3)).unwrap();
        let opts = CheckOptions {
            levels: 1,
            ..CheckOptions::default()
        };
        let r = run_suite(&g, Suite::Betti, &opts).unwrap();
        let names: Vec<_> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["betti[level 0]", "betti[level 1]"]);
        assert!(r.ok);
    }

    #[test]
    fn lidskii_is_seed_deterministic() {
        let g = generate(Family::Cycle(5)).unwrap();
        let opts = CheckOptions {
            seed: 42,
            lidskii_trials: 5,
            ..CheckOptions::default()
        };
        let a = serde_json::to_string(&run_suite(&g, Suite::Lidskii, &opts).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite(&g, Suite::Lidskii, &opts).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

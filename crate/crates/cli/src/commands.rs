use std::fmt::Write as _;
use std::path::PathBuf;

use serde_json::{json, Value};

use baryspec::checks::{run_suite, CheckOptions, Suite};
use baryspec::counting::trajectory_csv;
use baryspec::operators::{dirac, hodge_laplacian, scalar_laplacian};
use baryspec::plot::{line_plot, Series};
use baryspec::spectral::{
    convergence_experiment, l1_distance, limit_curve_d1, sup_distance_on, sup_distance_to_curve,
    ConvergenceReport,
};
use baryspec::{
    generate, graph::parse_graph, refine_iter_with_f_vectors, CliqueComplex, Family, FVector,
    Limits, SimpleGraph,
};

use crate::output::{emit, read_text, to_compact, to_pretty, Stamp};
use crate::{Cli, CliError, Command, FamilyName, GraphFormat, Source};

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    let stamp = Stamp::new(cli);
    let limits = cli.limits();
    match &cli.command {
        Command::Gen {
            family,
            k,
            n,
            p,
            q,
            format,
            out,
        } => {
            let g = generate(family_from_flags(*family, *k, *n, *p, *q)?)?;
            let text = match format {
                GraphFormat::Json => to_compact(&stamp.stamp_json(g.to_json_value())),
                GraphFormat::Edges => stamp.comment_lines() + &g.to_edge_list(),
            };
            emit(out.as_deref(), &text)?;
        }
        Command::Refine {
            source,
            levels,
            out,
            fvector_csv,
        } => {
            let (g, _) = load(source)?;
            let (refined, f_vectors) = refine_iter_with_f_vectors(&g, *levels, &limits)?;
            let v: Value = serde_json::from_str(&refined.to_json()).expect("valid JSON");
            emit(out.as_deref(), &to_compact(&stamp.stamp_json(v)))?;
            if let Some(path) = fvector_csv {
                emit(Some(path), &(stamp.comment_lines() + &f_vector_table(&f_vectors)))?;
            }
        }
        Command::Spectrum {
            source,
            operator,
            out,
        } => {
            let (g, _) = load(source)?;
            let matrix = match operator.as_str() {
                "scalar" => scalar_laplacian(&g),
                "dirac" => dirac(&CliqueComplex::build_with_cap(&g, limits.max_simplices)?),
                other => {
                    let k = other
                        .strip_prefix("hodge:")
                        .and_then(|k| k.parse::<usize>().ok())
                        .ok_or_else(|| {
                            CliError::Usage(format!(
                                "unknown operator {other:?}; expected scalar, hodge:K or dirac"
                            ))
                        })?;
                    hodge_laplacian(&CliqueComplex::build_with_cap(&g, limits.max_simplices)?, k)?
                }
            };
            let spectrum = matrix.eigenvalues(limits.max_eig)?;
            emit(out.as_deref(), &(stamp.comment_lines() + &spectrum.to_csv()))?;
        }
        Command::Check {
            source,
            suite,
            n,
            levels,
            out,
        } => {
            let (g, _) = load(source)?;
            let suite: Suite = suite.parse()?;
            let opts = CheckOptions {
                limits,
                seed: cli.seed,
                renorm_n: *n,
                levels: *levels,
                ..CheckOptions::default()
            };
            let report = run_suite(&g, suite, &opts)?;
            let v = serde_json::to_value(&report).expect("report serializes");
            emit(out.as_deref(), &to_pretty(&stamp.stamp_json(v)))?;
            if !report.ok {
                let names: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
                return Err(CliError::CheckFailed(names.join(", ")));
            }
        }
        Command::Converge {
            source,
            depth,
            interval,
            compare,
            compare_depth,
            out_csv,
            out_json,
            out_svg,
        } => converge(
            &stamp,
            &limits,
            source,
            *depth,
            interval,
            compare.as_deref(),
            compare_depth.unwrap_or(*depth),
            [out_csv, out_json, out_svg],
        )?,
        Command::Fvector { source, depth, out } => {
            let (g, _) = load(source)?;
            let c = CliqueComplex::build_with_cap(&g, limits.max_simplices)?;
            let csv = trajectory_csv(&FVector::from_counts(&c.f_vector()), *depth);
            emit(out.as_deref(), &(stamp.comment_lines() + &csv))?;
        }
    }
    Ok(0)
}

fn family_from_flags(
    family: FamilyName,
    k: Option<usize>,
    n: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
) -> Result<Family, CliError> {
    let need = |v: Option<usize>, flag: &str, what: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for {what}")))
    };
    Ok(match family {
        FamilyName::Complete => Family::Complete(need(k, "k", "complete")?),
        FamilyName::Cycle => Family::Cycle(need(n, "n", "cycle")?),
        FamilyName::Wheel => Family::Wheel(need(n, "n", "wheel")?),
        FamilyName::Octahedron => Family::Octahedron,
        FamilyName::House => Family::House,
        FamilyName::Torus => Family::Torus(need(p, "p", "torus")?, need(q, "q", "torus")?),
    })
}

/// The graph and a display name for it.
fn load(source: &Source) -> Result<(SimpleGraph, String), CliError> {
    match (&source.input, &source.graph) {
        (Some(path), _) => {
            let g = parse_graph(&read_text(path)?)?;
            let name = path
                .file_stem()
                .map_or_else(|| "stdin".to_string(), |s| s.to_string_lossy().into_owned());
            Ok((g, name))
        }
        (None, Some(name)) => load_named(name),
        (None, None) => Err(CliError::Usage("one of --input or --graph is required".into())),
    }
}

fn load_named(name: &str) -> Result<(SimpleGraph, String), CliError> {
    let family: Family = name.parse()?;
    Ok((generate(family)?, family.to_string()))
}

fn f_vector_table(f_vectors: &[Vec<u64>]) -> String {
    let width = f_vectors.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::from("level");
    for k in 0..width {
        write!(out, ",v{k}").unwrap();
    }
    out.push('\n');
    for (level, f) in f_vectors.iter().enumerate() {
        write!(out, "{level}").unwrap();
        for k in 0..width {
            write!(out, ",{}", f.get(k).copied().unwrap_or(0)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn parse_interval(s: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Usage(format!("--interval expects a,b with 0 < a < b < 1, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    if !(0.0 < a && a < b && b < 1.0) {
        return Err(bad());
    }
    Ok((a, b))
}

#[allow(clippy::too_many_arguments)]
fn converge(
    stamp: &Stamp,
    limits: &Limits,
    source: &Source,
    depth: usize,
    interval: &str,
    compare: Option<&str>,
    compare_depth: usize,
    [out_csv, out_json, out_svg]: [&Option<PathBuf>; 3],
) -> Result<(), CliError> {
    let (a, b) = parse_interval(interval)?;
    let (g, name) = load(source)?;
    let report = convergence_experiment(&g, depth, (a, b), limits)?;
    if report.partial {
        eprintln!(
            "warning: {name} stops at level {} of {depth} (caps)",
            report.levels.len() - 1
        );
    }
    let one_dimensional = CliqueComplex::build_with_cap(&g, limits.max_simplices)?.levels() <= 2;

    let mut json_v = serde_json::to_value(&report).expect("report serializes");
    json_v["graph"] = json!(name);
    if one_dimensional {
        let sups = report
            .profiles
            .iter()
            .map(|p| sup_distance_to_curve(p, limit_curve_d1, a, b))
            .collect::<Result<Vec<_>, _>>()?;
        json_v["limit_curve"] = json!({ "curve": "4 sin^2(pi x / 2)", "sup_distance": sups });
    }
    let other = match compare {
        Some(other_name) => {
            let (h, other_name) = load_named(other_name)?;
            let other = convergence_experiment(&h, compare_depth, (a, b), limits)?;
            json_v["comparison"] = comparison_json(&other_name, &report, &other, a, b)?;
            Some((other_name, other))
        }
        None => None,
    };

    if out_csv.is_none() && out_json.is_none() && out_svg.is_none() {
        emit(None, &(stamp.comment_lines() + &report.to_csv()))?;
    }
    if let Some(path) = out_csv {
        emit(Some(path), &(stamp.comment_lines() + &report.to_csv()))?;
    }
    if let Some(path) = out_json {
        emit(Some(path), &to_pretty(&stamp.stamp_json(json_v)))?;
    }
    if let Some(path) = out_svg {
        let mut series: Vec<Series> = report
            .profiles
            .iter()
            .enumerate()
            .rev()
            .take(4)
            .map(|(m, p)| Series::from_profile(format!("{name} level {m}"), p))
            .collect();
        if let Some((other_name, other)) = &other {
            if let Some(p) = other.profiles.last() {
                let m = other.profiles.len() - 1;
                series.push(Series::from_profile(format!("{other_name} level {m}"), p));
            }
        }
        if one_dimensional {
            series.push(Series::from_fn("4 sin^2(pi x/2)", 400, limit_curve_d1));
        }
        let svg = line_plot(&format!("Spectral function F(x): {name}"), "x", "F(x)", &series, None);
        emit(Some(path), &stamp.stamp_svg(&svg))?;
    }
    Ok(())
}

/// Pairs levels from the top of both runs and records their distances.
fn comparison_json(
    other_name: &str,
    mine: &ConvergenceReport,
    other: &ConvergenceReport,
    a: f64,
    b: f64,
) -> Result<Value, CliError> {
    let (n1, n2) = (mine.profiles.len(), other.profiles.len());
    let mut pairs = Vec::new();
    for i in 0..n1.min(n2) {
        let (l1, l2) = (n1 - 1 - i, n2 - 1 - i);
        let (p, q) = (&mine.profiles[l1], &other.profiles[l2]);
        pairs.push(json!({
            "level": l1,
            "other_level": l2,
            "sup_distance": sup_distance_on(p, q, a, b)?,
            "l1_distance": l1_distance(p, q),
        }));
    }
    Ok(json!({ "graph": other_name, "pairs": pairs }))
}

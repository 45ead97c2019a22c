//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` so the page never has to catch exceptions.

use baryspec::counting::trajectory;
use baryspec::operators::scalar_laplacian;
use baryspec::spectral::{check_renormalization_d1, limit_curve_d1, sup_distance_to_curve};
use baryspec::{refine_iter, CliqueComplex, Family, FVector, Limits, SpectrumProfile};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Dense eigensolves above this order take too long for an interactive page.
pub const MAX_EIG: usize = 1500;
const MAX_SIMPLICES: usize = 200_000;
const MAX_DEPTH: u32 = 12;

fn limits() -> Limits {
    Limits { max_simplices: MAX_SIMPLICES, max_eig: MAX_EIG }
}

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn parse_family(name: &str) -> Result<Family, String> {
    name.trim().parse::<Family>().map_err(|e| e.to_string())
}

fn profile(family: &str, level: u32) -> Result<Value, String> {
    let f = parse_family(family)?;
    let g = baryspec::generate(f).map_err(|e| e.to_string())?;
    let r = refine_iter(&g, level as usize, &limits()).map_err(|e| e.to_string())?;
    let values = scalar_laplacian(&r.graph)
        .eigenvalues(MAX_EIG)
        .map_err(|e| e.to_string())?
        .values;
    let p = SpectrumProfile::new(values).map_err(|e| e.to_string())?;
    let one_dim = CliqueComplex::build(&g).ok().and_then(|c| c.dimension()) == Some(1);
    let limit_sup = if one_dim {
        Some(sup_distance_to_curve(&p, limit_curve_d1, 0.05, 0.95).map_err(|e| e.to_string())?)
    } else {
        None
    };
    Ok(json!({
        "family": f.to_string(),
        "level": level,
        "vertices": r.graph.vertex_count(),
        "edges": r.graph.edge_count(),
        "max_degree": r.graph.max_degree(),
        "l1_norm": p.l1_norm(),
        "values": p.values(),
        "one_dimensional": one_dim,
        "limit_sup_distance": limit_sup,
    }))
}

fn fvectors(family: &str, depth: u32) -> Result<Value, String> {
    if depth > MAX_DEPTH {
        return Err(format!("depth {depth} exceeds {MAX_DEPTH}"));
    }
    let g = baryspec::generate(parse_family(family)?).map_err(|e| e.to_string())?;
    let c = CliqueComplex::build(&g).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<String>> = trajectory(&FVector::from_counts(&c.f_vector()), depth as usize)
        .iter()
        .map(|f| f.0.iter().map(|x| x.to_string()).collect())
        .collect();
    Ok(json!({ "family": family.trim(), "levels": rows }))
}

fn renormalization(n: u32) -> Result<Value, String> {
    if n as usize * 2 > MAX_EIG {
        return Err(format!("n = {n} needs an eigensolve above {MAX_EIG}"));
    }
    let r = check_renormalization_d1(n as usize).map_err(|e| e.to_string())?;
    serde_json::to_value(r).map_err(|e| e.to_string())
}

/// Laplacian spectrum of a family after `level` refinements, plus the
/// sup distance to `4 sin^2(pi x / 2)` on `[0.05, 0.95]` for graphs of
/// dimension one.
#[wasm_bindgen]
pub fn profile_json(family: &str, level: u32) -> String {
    respond(profile(family, level))
}

/// Exact f-vectors of levels `0..=depth`, as decimal strings.
#[wasm_bindgen]
pub fn fvector_json(family: &str, depth: u32) -> String {
    respond(fvectors(family, depth))
}

/// Checks that `4K - K^2` on `C_2n` splits into two copies of `L(C_n)`.
#[wasm_bindgen]
pub fn renormalization_json(n: u32) -> String {
    respond(renormalization(n))
}

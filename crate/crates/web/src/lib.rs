//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes and returns plain strings (graph text or JSON) so the
//! page needs no generated glue beyond wasm-bindgen's.

use hubcover::generators::parse_manifest;
use hubcover::io::parse_graph;
use hubcover::matcher::{build_indices, choose_plan, find_solutions, format_match, GraphStats, MatchMode};
use hubcover::solvers::{solve, Algorithm, SolverConfig};
use hubcover::Graph;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph the page will generate; the exact solver stays interactive below it.
pub const MAX_VERTICES: usize = 400;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn graph_json(g: &Graph) -> Value {
    let names: Vec<String> = (0..g.n()).map(|v| g.name(v)).collect();
    json!({ "n": g.n(), "names": names, "edges": g.edges() })
}

/// Generates the graph described by one manifest line (`class=mesh2d dims=6x6 seed=1`)
/// and solves it.
pub fn generate_and_solve_impl(spec: &str, algo: &str, time_limit: f64) -> Result<String, String> {
    let inst = parse_manifest(spec).map_err(err)?;
    let [inst] = inst.as_slice() else {
        return Err("expected exactly one instance line".into());
    };
    if inst.spec.n() > MAX_VERTICES {
        return Err(format!("at most {MAX_VERTICES} vertices"));
    }
    let g = inst.generate().map_err(err)?;
    solve_graph(&g, algo, time_limit)
}

/// Solves a graph given in the text graph format.
pub fn solve_text_impl(text: &str, algo: &str, time_limit: f64) -> Result<String, String> {
    let g = parse_graph(text).map_err(err)?;
    solve_graph(&g, algo, time_limit)
}

fn solve_graph(g: &Graph, algo: &str, time_limit: f64) -> Result<String, String> {
    let algo: Algorithm = algo.parse().map_err(err)?;
    let cfg = SolverConfig::default().with_time_limit(time_limit);
    let s = solve(g, algo, &cfg).map_err(err)?;
    let mut out = graph_json(g);
    out["cover"] = json!(s.cover);
    out["objective"] = json!(s.objective);
    out["status"] = json!(s.status.to_string());
    out["lower_bound"] = json!(s.lower_bound);
    out["time_s"] = json!(s.solve_time);
    Ok(out.to_string())
}

/// Cheapest hub-cover plan of `query` against `data`.
pub fn plan_impl(query: &str, data: &str, mode: &str) -> Result<String, String> {
    let q = parse_graph(query).map_err(err)?;
    let d = parse_graph(data).map_err(err)?;
    let mode: MatchMode = mode.parse().map_err(err)?;
    let stats = GraphStats::new(&d);
    let plan = choose_plan(&q, &stats, mode).map_err(err)?;
    let steps: Vec<Value> = plan
        .entries
        .iter()
        .map(|e| json!({ "vertex": q.name(e.vertex), "mark": e.mark.to_string() }))
        .collect();
    Ok(json!({ "steps": steps, "cost": plan.estimated_cost(&q, &stats, mode) }).to_string())
}

/// Matches of `query` in `data`: the total count and the first `limit` matches.
pub fn match_impl(query: &str, data: &str, mode: &str, limit: usize) -> Result<String, String> {
    let q = parse_graph(query).map_err(err)?;
    let d = parse_graph(data).map_err(err)?;
    let mode: MatchMode = mode.parse().map_err(err)?;
    let plan = choose_plan(&q, &GraphStats::new(&d), mode).map_err(err)?;
    let (h, s) = build_indices(&d);
    let found = find_solutions(&plan, &q, &d, &h, &s, mode).map_err(err)?;
    let shown: Vec<String> = found.iter().take(limit).map(|m| format_match(&q, &d, m)).collect();
    Ok(json!({ "count": found.len(), "matches": shown }).to_string())
}

#[wasm_bindgen]
pub fn generate_and_solve(spec: &str, algo: &str, time_limit: f64) -> Result<String, JsValue> {
    generate_and_solve_impl(spec, algo, time_limit).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn solve_text(text: &str, algo: &str, time_limit: f64) -> Result<String, JsValue> {
    solve_text_impl(text, algo, time_limit).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn plan(query: &str, data: &str, mode: &str) -> Result<String, JsValue> {
    plan_impl(query, data, mode).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn find_matches(query: &str, data: &str, mode: &str, limit: usize) -> Result<String, JsValue> {
    match_impl(query, data, mode, limit).map_err(|e| JsValue::from_str(&e))
}

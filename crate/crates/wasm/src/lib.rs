//! Browser bindings for the demo page in `www/`. Every export returns a JSON
//! string so the page can stay plain JavaScript.

use overdet::flagcover::{radius_chain as chain, run_polytope};
use overdet::report::{analyze_source, catalog_source, AnalysisOptions, CATALOG};
use overdet::Rational;
use wasm_bindgen::prelude::*;

fn js_err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// `[{name, description, source}, ...]`
#[wasm_bindgen]
pub fn catalog() -> String {
    let items: Vec<serde_json::Value> = CATALOG
        .iter()
        .map(|(name, description, source)| serde_json::json!({ "name": name, "description": description, "source": source }))
        .collect();
    serde_json::Value::Array(items).to_string()
}

#[wasm_bindgen]
pub fn catalog_text(name: &str) -> Option<String> {
    catalog_source(name).map(str::to_string)
}

/// Full analysis of a system in the text format. Omega sampling is kept
/// small so the page stays responsive.
#[wasm_bindgen]
pub fn analyze_system(
    source: &str,
    seed: u64,
    samples: usize,
    omega: bool,
    query_dims: Vec<i64>,
) -> Result<String, JsValue> {
    let opts = AnalysisOptions { seed, samples, omega, flagcover: false, query_dims, ..AnalysisOptions::default() };
    analyze_source(source, &opts).map(|r| r.to_json()).map_err(js_err)
}

/// Plain text rendering of the same report.
#[wasm_bindgen]
pub fn analyze_system_text(source: &str, seed: u64) -> Result<String, JsValue> {
    let opts = AnalysisOptions { seed, samples: 200, omega: false, flagcover: false, ..AnalysisOptions::default() };
    analyze_source(source, &opts).map(|r| r.to_text()).map_err(js_err)
}

/// Radius bookkeeping for `b = c^{m+1}`; `c` is a rational like `1/8`.
#[wasm_bindgen]
pub fn radius_chain(m: u32, d: u32, c: &str) -> Result<String, JsValue> {
    let c: Rational = c.trim().parse().map_err(|_| js_err(format!("not a rational: {c}")))?;
    if c <= Rational::from_integer(0.into()) {
        return Err(js_err("c must be positive"));
    }
    serde_json::to_string(&chain(m, d, &c)).map_err(js_err)
}

/// Partition and telescoping checks on `segment` or `triangle`.
#[wasm_bindgen]
pub fn flag_cover(name: &str, seed: u64) -> Result<String, JsValue> {
    let report = run_polytope(name, seed).map_err(js_err)?;
    serde_json::to_string(&report).map_err(js_err)
}

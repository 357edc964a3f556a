//! Browser bindings. Each export returns a JSON string; the `*_json`
//! functions hold the logic so they can be tested natively.

use cliquevec::stanley_reisner::MAX_FULL_TABLE_VERTICES;
use cliquevec::{
    betti_linear_strand, betti_table_full, connectivity_with, format_graph, is_chordal, parse_graph, realize, validate,
    word_to_bvector, word_to_graph, CliqueVector, Convention, Graph, GraphFormat, SdWord,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn graph_value(g: &Graph) -> Value {
    json!({
        "n": g.vertex_count(),
        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        "graph6": format_graph(g, GraphFormat::Graph6),
    })
}

/// Realizes clique vector `c` (comma separated) as a k-connected threshold
/// graph, or explains the rejection.
pub fn realize_json(c: &str, k: usize) -> Result<String, String> {
    let c: CliqueVector = c.parse().map_err(|e| format!("{e}"))?;
    let v = validate(&c, k);
    let out = match (&v.verdict, realize(&c, k)) {
        (Ok(()), Ok(r)) => json!({
            "valid": true,
            "b": r.b,
            "word": r.word,
            "connectivity": r.connectivity,
            "graph": graph_value(&r.graph),
        }),
        (Err(reason), _) => json!({ "valid": false, "b": v.b, "reason": reason.to_string() }),
        (Ok(()), Err(e)) => return Err(e.to_string()),
    };
    Ok(out.to_string())
}

/// Threshold graph, b-vector and clique vector of an SD-word.
pub fn explore_word_json(word: &str) -> Result<String, String> {
    let w: SdWord = word.trim().to_ascii_uppercase().parse().map_err(|e| format!("{e}"))?;
    let g = word_to_graph(&w).map_err(|e| e.to_string())?;
    let b = word_to_bvector(&w);
    let c = b.clique_vector().map_err(|e| e.to_string())?;
    let kappa = connectivity_with(&g, Convention::Inclusive).map_err(|e| e.to_string())?;
    Ok(json!({ "word": w, "b": b, "c": c, "connectivity": kappa, "graph": graph_value(&g) }).to_string())
}

/// Chordality, clique vector, connectivity and Betti numbers of a graph in
/// edge-list or graph6 text.
pub fn analyze_graph_json(text: &str) -> Result<String, String> {
    let g = parse_graph(text, GraphFormat::detect(text)).map_err(|e| e.to_string())?;
    if g.vertex_count() == 0 {
        return Err("the graph has no vertices".into());
    }
    let peo = is_chordal(&g).map_err(|e| e.to_string())?;
    let c = g.clique_vector_bruteforce().map_err(|e| e.to_string())?;
    let kappa = connectivity_with(&g, Convention::Inclusive).map_err(|e| e.to_string())?;
    let classical = connectivity_with(&g, Convention::Classical).map_err(|e| e.to_string())?;
    let strand = betti_linear_strand(&g).map_err(|e| e.to_string())?;
    let table = if g.vertex_count() <= MAX_FULL_TABLE_VERTICES {
        let t = betti_table_full(&g).map_err(|e| e.to_string())?;
        json!({
            "entries": t.entries().map(|((i, j), v)| [i as u64, j as u64, v]).collect::<Vec<_>>(),
            "projective_dimension": t.projective_dimension(),
            "depth": t.depth(),
            "two_linear": t.has_two_linear_resolution(),
        })
    } else {
        Value::Null
    };
    Ok(json!({
        "graph": graph_value(&g),
        "chordal": peo.is_some(),
        "elimination_order": peo.as_ref().map(|p| p.order().to_vec()),
        "c": c,
        "b": c.b_vector(),
        "connectivity": kappa,
        "classical_connectivity": classical,
        "valid_up_to": (0..=c.clique_number()).take_while(|&k| validate(&c, k).is_valid()).last(),
        "linear_strand": strand.iter().map(|(i, v)| [i as u64, i as u64 + 1, v]).collect::<Vec<_>>(),
        "betti_connectivity": strand.connectivity(),
        "betti_table": table,
    })
    .to_string())
}

#[wasm_bindgen(js_name = realize)]
pub fn realize_js(c: &str, k: usize) -> Result<String, JsValue> {
    realize_json(c, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = exploreWord)]
pub fn explore_word_js(word: &str) -> Result<String, JsValue> {
    explore_word_json(word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = analyzeGraph)]
pub fn analyze_graph_js(text: &str) -> Result<String, JsValue> {
    analyze_graph_json(text).map_err(|e| JsValue::from_str(&e))
}

//! Browser bindings: paste a graph, see whether its great shadow is planar,
//! and get either a drawing or a `K_{3,3}` witness.
//!
//! Every export returns a JSON string so the page can stay plain JavaScript.
//! Failures come back as `{"error": "..."}` rather than exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use great_shadow::embedding::{draw_even_cycle_shadow, render_shadow, Drawing, LayoutOptions};
use great_shadow::io::parse_graph;
use great_shadow::witness::shadow_witness;
use great_shadow::{classify, great_shadow as shadow_of};

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn drawing_json(d: &Drawing) -> Value {
    json!({
        "svg": d.to_svg(),
        "vertices": d.positions.len(),
        "edges": d.edges.len(),
        "crossings": d.crossing_count(),
    })
}

/// Verdict for the pasted graph plus its certificate: the cycle tree, the
/// odd cycle or the theta, and for non-planar shadows a checked witness.
#[wasm_bindgen]
pub fn classify_graph(text: &str) -> String {
    let g = match parse_graph(text) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let verdict = classify(&g);
    let witness = match shadow_witness(&g) {
        Ok(w) => w,
        Err(e) => return error(e),
    };
    let valid = witness.as_ref().map(|w| w.check(&shadow_of(&g).graph).is_ok());
    json!({
        "order": g.order(),
        "size": g.size(),
        "planar_shadow": verdict.is_bipartite_cactus(),
        "verdict": verdict,
        "witness": witness,
        "witness_valid": valid,
    })
    .to_string()
}

/// SVG drawing of `S(G)` when `G` is a bipartite cactus.
#[wasm_bindgen]
pub fn draw_shadow(text: &str) -> String {
    let g = match parse_graph(text) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    if !classify(&g).is_bipartite_cactus() {
        return error("S(G) is not planar");
    }
    match render_shadow(&g) {
        Ok(d) => drawing_json(&d).to_string(),
        Err(e) => error(e),
    }
}

/// Two-circle layout of `S(C_k)` for even `k`, with inner and outer radius
/// ratios `d_in < 1 < d_out`.
#[wasm_bindgen]
pub fn even_cycle_layout(k: usize, d_in: f64, d_out: f64) -> String {
    match draw_even_cycle_shadow(k, LayoutOptions { d_in, d_out }) {
        Ok(layout) => drawing_json(&Drawing::from_layout(&layout)).to_string(),
        Err(e) => error(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn triangle_has_a_valid_witness() {
        let v = parse(&classify_graph("n=3\n0 1\n1 2\n0 2\n"));
        assert_eq!(v["planar_shadow"], false);
        assert_eq!(v["witness_valid"], true);
    }

    #[test]
    fn square_draws_without_crossings() {
        let v = parse(&draw_shadow("n=4\n0 1\n1 2\n2 3\n3 0\n"));
        assert_eq!(v["crossings"], 0);
        assert_eq!(v["edges"], 16);
        assert!(parse(&draw_shadow("n=3\n0 1\n1 2\n0 2\n"))["error"].is_string());
    }

    #[test]
    fn layout_radii_are_checked() {
        assert_eq!(parse(&even_cycle_layout(6, 0.5, 1.5))["crossings"], 0);
        assert!(parse(&even_cycle_layout(6, 1.2, 1.5))["error"].is_string());
        assert!(parse(&even_cycle_layout(5, 0.5, 1.5))["error"].is_string());
        assert!(parse(&classify_graph("n=2\n0 5\n"))["error"].is_string());
    }
}

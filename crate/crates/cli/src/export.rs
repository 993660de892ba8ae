//! JSON, DOT and SVG renderings of results.

use std::fmt::Write;

use serde_json::{json, Value};
use tda_core::{MapperGraph, PersistencePair};

/// `[dimension, birth, death]`, with `null` for an infinite death.
pub fn pair_json(p: &PersistencePair) -> Value {
    let death = if p.is_essential() {
        Value::Null
    } else {
        json!(p.death)
    };
    json!([p.dimension, p.birth, death])
}

pub fn mapper_json(g: &MapperGraph) -> Value {
    let nodes: Vec<Value> = g
        .nodes
        .iter()
        .enumerate()
        .map(|(id, n)| {
            json!({
                "id": id,
                "interval": n.interval_index,
                "cluster": n.cluster_index,
                "size": n.size(),
                "centroid": n.centroid,
                "members": n.members,
            })
        })
        .collect();
    json!({
        "nodes": nodes,
        "edges": g.edges,
        "components": g.component_count(),
        "cycle_rank": g.cycle_rank(),
    })
}

/// Undirected DOT graph; nodes are labelled `Ui.cj (count)` and pinned at
/// their centroids rescaled into the unit square.
pub fn mapper_dot(g: &MapperGraph) -> String {
    let coord = |k: usize| -> Vec<f64> {
        g.nodes
            .iter()
            .map(|n| n.centroid.get(k).copied().unwrap_or(0.0))
            .collect()
    };
    let unit = |values: Vec<f64>| -> Vec<f64> {
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let span = hi - lo;
        values
            .iter()
            .map(|v| if span > 0.0 { (v - lo) / span } else { 0.5 })
            .collect()
    };
    let (xs, ys) = (unit(coord(0)), unit(coord(1)));

    let mut out = String::from("graph mapper {\n  node [shape=circle];\n");
    for (id, n) in g.nodes.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{id} [label=\"U{}.c{} ({})\", pos=\"{:.4},{:.4}!\"];",
            n.interval_index,
            n.cluster_index,
            n.size(),
            xs[id],
            ys[id]
        );
    }
    for &(a, b) in &g.edges {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
    out.push_str("}\n");
    out
}

const PALETTE: [&str; 4] = ["#d62728", "#2ca02c", "#1f77b4", "#9467bd"];

fn color(dim: usize) -> &'static str {
    PALETTE[dim % PALETTE.len()]
}

fn svg_open(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    out.push_str(
        "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">\
         <path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n",
    );
}

/// One horizontal bar per pair, stacked by dimension then birth. Infinite
/// bars stop at `max_scale` with an arrowhead.
pub fn barcode_svg(pairs: &[PersistencePair], max_scale: f64, axis_label: &str) -> String {
    let (left, plot_width, row) = (60.0, 500.0, 10.0);
    let height = 50.0 + row * pairs.len() as f64;
    let span = if max_scale > 0.0 { max_scale } else { 1.0 };
    let x = |v: f64| left + plot_width * v.min(span) / span;

    let mut out = String::new();
    svg_open(&mut out, left + plot_width + 40.0, height);
    let _ = writeln!(
        out,
        "<line class=\"axis\" x1=\"{left}\" y1=\"{y:.2}\" x2=\"{x2}\" y2=\"{y:.2}\" stroke=\"black\"/>",
        y = height - 30.0,
        x2 = left + plot_width
    );
    let _ = writeln!(
        out,
        "<text x=\"{left}\" y=\"{:.2}\" font-size=\"11\">{axis_label}: 0 to {max_scale:.4}</text>",
        height - 12.0
    );
    for (k, p) in pairs.iter().enumerate() {
        let y = 20.0 + row * k as f64;
        let end = if p.is_essential() { max_scale } else { p.death };
        let marker = if p.is_essential() {
            " marker-end=\"url(#arrow)\""
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "<line class=\"bar dim-{}\" x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"{}\" stroke-width=\"4\"{marker}/>",
            p.dimension,
            x(p.birth),
            x(end),
            color(p.dimension)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Birth-death scatter with the diagonal; infinite deaths are drawn at
/// `max_scale` as hollow marks.
pub fn diagram_svg(pairs: &[PersistencePair], max_scale: f64, axis_label: &str) -> String {
    let (margin, side) = (50.0, 400.0);
    let span = if max_scale > 0.0 { max_scale } else { 1.0 };
    let px = |v: f64| margin + side * v.min(span) / span;
    let py = |v: f64| margin + side - side * v.min(span) / span;

    let mut out = String::new();
    svg_open(&mut out, side + 2.0 * margin, side + 2.0 * margin);
    let _ = writeln!(
        out,
        "<rect class=\"frame\" x=\"{margin}\" y=\"{margin}\" width=\"{side}\" height=\"{side}\" fill=\"none\" stroke=\"black\"/>"
    );
    let _ = writeln!(
        out,
        "<line class=\"diagonal\" x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"gray\" stroke-dasharray=\"4,3\"/>",
        px(0.0),
        py(0.0),
        px(span),
        py(span)
    );
    let _ = writeln!(
        out,
        "<text x=\"{margin}\" y=\"{:.2}\" font-size=\"11\">birth ({axis_label})</text>",
        side + margin + 30.0
    );
    for p in pairs {
        let death = if p.is_essential() { max_scale } else { p.death };
        let (class, fill) = if p.is_essential() {
            ("pair essential", "none")
        } else {
            ("pair", color(p.dimension))
        };
        let _ = writeln!(
            out,
            "<circle class=\"{class} dim-{}\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"{fill}\" stroke=\"{}\"/>",
            p.dimension,
            px(p.birth),
            py(death),
            color(p.dimension)
        );
    }
    out.push_str("</svg>\n");
    out
}

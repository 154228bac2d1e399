//! Stable text renderings of word graphs: Graphviz DOT and JSON. Both
//! list vertices in sorted word order and edges in the graph's stored
//! order (ascending endpoint indices), so reruns are byte-identical.

use std::fmt::Write as _;

use redwords_core::wordgraph::WordGraph;
use serde_json::{json, Value};

pub fn render_dot(g: &WordGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{} {}\" {{", g.spec(), g.element());
    let _ = writeln!(s, "  node [shape=box];");
    for w in g.words() {
        let _ = writeln!(s, "  \"{w}\";");
    }
    for e in g.edges() {
        let _ = writeln!(
            s,
            "  \"{}\" -- \"{}\" [label=\"{}\"];",
            g.words()[e.u as usize],
            g.words()[e.v as usize],
            e.label.name()
        );
    }
    let _ = writeln!(s, "}}");
    s
}

pub fn graph_json(g: &WordGraph) -> Value {
    let spec = g.spec();
    json!({
        "family": spec.family().to_string(),
        "n": spec.n(),
        "element": g.element().to_string(),
        "length": g.element().length(),
        "word_count": g.vertex_count(),
        "edge_count": g.edge_count(),
        "l2_size": g.l2_size(),
        "flats": g.flat_table().flats().iter().map(|x| x.name()).collect::<Vec<_>>(),
        "vertices": g.words().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "edges": g
            .edges()
            .iter()
            .map(|e| json!({"source": e.u, "target": e.v, "label": e.label.name()}))
            .collect::<Vec<_>>(),
    })
}

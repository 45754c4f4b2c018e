use super::Graph;
use crate::vertex_set::VertexSet;
use std::fmt::Write;

/// Graphviz rendering; vertices in `highlight` are filled.
pub fn to_dot(g: &Graph, highlight: VertexSet) -> String {
    let mut out = String::new();
    let name = g.name().unwrap_or("G").replace('"', "'");
    writeln!(out, "graph \"{name}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in 0..g.order() {
        if highlight.contains(v) {
            writeln!(out, "  {v} [style=filled, fillcolor=gray];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn renders_edges() {
        let dot = to_dot(&path(3).unwrap(), VertexSet::singleton(1));
        assert!(dot.starts_with("graph \"P3\" {"));
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
        assert!(dot.contains("1 [style=filled"));
    }
}

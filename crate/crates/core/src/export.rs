//! DOT, GraphML and JSON renderings of a graph. Output depends only on the
//! graph, so the same graph always serializes to the same bytes.

use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{EdgeTag, LabeledDigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Graphml,
    Json,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(Self::Dot),
            "graphml" => Ok(Self::Graphml),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format `{other}` (expected dot, graphml or json)")),
        }
    }
}

pub fn export(g: &LabeledDigraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(g),
        ExportFormat::Graphml => to_graphml(g),
        ExportFormat::Json => to_json(g),
    }
}

fn edge_color(tag: EdgeTag) -> &'static str {
    match tag {
        EdgeTag::Covariant => "green",
        EdgeTag::Contravariant => "red",
        _ => "black",
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Bottom-to-top layout; covariant edges green, contravariant red.
pub fn to_dot(g: &LabeledDigraph) -> String {
    let mut out = String::from("digraph subtyping {\n  rankdir=BT;\n  node [shape=box];\n");
    for v in g.vertices() {
        writeln!(out, "  {};", dot_quote(v)).unwrap();
    }
    for (a, b, tag) in g.edges() {
        writeln!(
            out,
            "  {} -> {} [color={}, tag={}];",
            dot_quote(a),
            dot_quote(b),
            edge_color(tag),
            tag
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

pub fn to_graphml(g: &LabeledDigraph) -> String {
    let mut out = String::from(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
        "  <key id=\"tag\" for=\"edge\" attr.name=\"tag\" attr.type=\"string\"/>\n",
        "  <graph id=\"subtyping\" edgedefault=\"directed\">\n",
    ));
    for v in g.vertices() {
        writeln!(out, "    <node id=\"{}\"/>", xml_escape(v)).unwrap();
    }
    for (a, b, tag) in g.edges() {
        writeln!(
            out,
            "    <edge source=\"{}\" target=\"{}\"><data key=\"tag\">{}</data></edge>",
            xml_escape(a),
            xml_escape(b),
            tag
        )
        .unwrap();
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

#[derive(Serialize)]
struct JsonEdge<'a> {
    from: &'a str,
    to: &'a str,
    tag: EdgeTag,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    vertices: Vec<&'a str>,
    edges: Vec<JsonEdge<'a>>,
}

/// `{"vertices": [...], "edges": [{"from", "to", "tag"}...]}`, sorted.
pub fn to_json(g: &LabeledDigraph) -> String {
    let doc = JsonGraph {
        vertices: g.vertices().collect(),
        edges: g
            .edges()
            .map(|(from, to, tag)| JsonEdge { from, to, tag })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
    s.push('\n');
    s
}

//! Graph serialization: graph6 (short form), edge-list JSON and DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Graph, ReducedGraph};
use crate::error::{Error, Result};
use crate::group::Group;

/// Largest vertex count the single-byte graph6 header can express.
pub const GRAPH6_MAX_VERTICES: usize = 62;

pub fn to_graph6(graph: &Graph) -> Result<String> {
    let n = graph.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    // upper triangle, column by column
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | graph.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let err = |msg: &str| Error::parse("graph6", msg.to_owned());
    let (&head, body) = bytes.split_first().ok_or_else(|| err("empty input"))?;
    if head == 126 {
        return Err(err("long-form header (more than 62 vertices) is not supported"));
    }
    if !(63..=125).contains(&head) {
        return Err(err("bad vertex-count byte"));
    }
    let n = (head - 63) as usize;
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(err(&format!("expected {needed} data bytes for {n} vertices, got {}", body.len())));
    }
    if body.iter().any(|b| !(63..=126).contains(b)) {
        return Err(err("data byte out of range"));
    }
    let mut bits = body
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| (b - 63) >> k & 1 == 1));
    let mut graph = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if bits.next().unwrap() {
                graph.add_edge(i, j);
            }
        }
    }
    Ok(graph)
}

/// `{"n": 4, "edges": [[0, 1], ...]}` with 0-indexed endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeList {
    fn from(graph: &Graph) -> Self {
        EdgeList {
            n: graph.vertex_count(),
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(list: EdgeList) -> Result<Graph> {
        Graph::from_edges(list.n, list.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn to_edge_list_json(graph: &Graph) -> String {
    serde_json::to_string(&EdgeList::from(graph)).expect("edge list serializes")
}

pub fn from_edge_list_json(text: &str) -> Result<Graph> {
    let list: EdgeList = serde_json::from_str(text).map_err(|e| Error::parse("edge-list JSON", e.to_string()))?;
    Graph::try_from(list)
}

/// Undirected DOT; `labels[v]` becomes the node label when given.
pub fn to_dot(graph: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..graph.vertex_count() {
        match labels {
            Some(labels) => writeln!(out, "  {v} [label=\"{}\"];", labels[v]).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Power graph nodes labelled with element index and order.
pub fn power_graph_dot(g: &Group, graph: &Graph) -> String {
    let labels: Vec<String> = (0..graph.vertex_count())
        .map(|x| format!("{x} (order {})", g.element_order(x)))
        .collect();
    to_dot(graph, Some(&labels))
}

/// Quotient nodes keep the representative's vertex id and show the class size.
pub fn reduced_graph_dot(reduced: &ReducedGraph) -> String {
    let sizes = reduced.class_sizes();
    let mut out = String::from("graph {\n");
    for (c, &rep) in reduced.representatives.iter().enumerate() {
        writeln!(out, "  {rep} [label=\"{rep} (class size {})\"];", sizes[c]).unwrap();
    }
    for (a, b) in reduced.quotient.edges() {
        writeln!(out, "  {} -- {};", reduced.representatives[a], reduced.representatives[b]).unwrap();
    }
    out.push_str("}\n");
    out
}

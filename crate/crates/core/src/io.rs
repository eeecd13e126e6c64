//! Graph file formats: JSON schema, DOT, and plain edge lists.
//!
//! JSON schema (field order fixed, arrays 0-indexed):
//! `{"n": int, "rotation": [[int]], "outer_face": [int,int,int],
//!   "labels": [string], "colors": [string]}`

use crate::graph::{Color, GraphError, SimpleGraph, Triangulation, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("format error: {0}")]
    Format(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub rotation: Vec<Vec<VertexId>>,
    pub outer_face: [VertexId; 3],
    pub labels: Vec<String>,
    pub colors: Vec<Color>,
}

impl GraphJson {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.n(),
            rotation: g.rotation().to_vec(),
            outer_face: g.outer_face().unwrap_or([0, 1, 2]),
            labels: g.labels().to_vec(),
            colors: g.colors().to_vec(),
        }
    }

    /// Lax import: adjacency must be simple and symmetric, no face checks.
    pub fn into_graph(self) -> Result<SimpleGraph, IoError> {
        if self.rotation.len() != self.n {
            return Err(IoError::Format(format!(
                "n = {} but rotation has {} entries",
                self.n,
                self.rotation.len()
            )));
        }
        let g = SimpleGraph::with_metadata(
            self.rotation,
            self.labels,
            self.colors,
            Some(self.outer_face),
        )?;
        Ok(g)
    }

    /// Strict import: the rotation system must be a maximal planar embedding.
    pub fn into_triangulation(self) -> Result<Triangulation, IoError> {
        Ok(Triangulation::new(self.into_graph()?)?)
    }
}

pub fn to_json(g: &SimpleGraph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("serializable");
    s.push('\n');
    s
}

pub fn graph_from_json(s: &str) -> Result<SimpleGraph, IoError> {
    let j: GraphJson = serde_json::from_str(s)?;
    j.into_graph()
}

pub fn triangulation_from_json(s: &str) -> Result<Triangulation, IoError> {
    let j: GraphJson = serde_json::from_str(s)?;
    j.into_triangulation()
}

/// DOT export; labels become node attributes, colors are carried verbatim.
pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        let color = serde_json::to_value(g.color(v)).expect("color");
        out.push_str(&format!(
            "  {} [label=\"{}\" role={}];\n",
            v,
            g.label(v),
            color
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// One "u v" pair per line, u < v, ascending.
pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_from_edge_list(s: &str) -> Result<SimpleGraph, IoError> {
    let mut edges = Vec::new();
    let mut max = 0usize;
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = (
            it.next()
                .ok_or_else(|| IoError::Format(format!("line {}: missing u", lineno + 1)))?,
            it.next()
                .ok_or_else(|| IoError::Format(format!("line {}: missing v", lineno + 1)))?,
        );
        let u: usize = u
            .parse()
            .map_err(|_| IoError::Format(format!("line {}: bad vertex id", lineno + 1)))?;
        let v: usize = v
            .parse()
            .map_err(|_| IoError::Format(format!("line {}: bad vertex id", lineno + 1)))?;
        max = max.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(IoError::Format("empty edge list".into()));
    }
    Ok(SimpleGraph::from_edges(max + 1, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> SimpleGraph {
        let rotation = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        let mut g = SimpleGraph::new(rotation).unwrap();
        g.set_outer_face([0, 1, 2]);
        g
    }

    #[test]
    fn json_round_trip_is_exact() {
        let g = k4();
        let s = to_json(&g);
        let h = graph_from_json(&s).unwrap();
        assert_eq!(g, h);
        assert_eq!(to_json(&h), s);
    }

    #[test]
    fn json_field_order_is_fixed() {
        let s = to_json(&k4());
        let n = s.find("\"n\"").unwrap();
        let r = s.find("\"rotation\"").unwrap();
        let o = s.find("\"outer_face\"").unwrap();
        let l = s.find("\"labels\"").unwrap();
        let c = s.find("\"colors\"").unwrap();
        assert!(n < r && r < o && o < l && l < c);
    }

    #[test]
    fn edge_list_round_trip_preserves_edges() {
        let g = k4();
        let s = to_edge_list(&g);
        assert_eq!(s, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        let h = graph_from_edge_list(&s).unwrap();
        assert_eq!(g.edges(), h.edges());
    }

    #[test]
    fn strict_import_rejects_bad_embedding() {
        // rotation lists symmetric but scrambled: face walk fails
        let j = GraphJson {
            n: 4,
            rotation: vec![vec![1, 2, 3], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            outer_face: [0, 1, 2],
            labels: vec!["a".into(), "b".into(), "c".into(), "d".into()],
            colors: vec![Color::Plain; 4],
        };
        assert!(j.into_triangulation().is_err());
    }
}

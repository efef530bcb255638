use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{DirectedGraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    AdjList,
}

impl FromStr for ExportFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "adjlist" => Ok(ExportFormat::AdjList),
            other => Err(GraphError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    names: Vec<String>,
    edges: Vec<[usize; 2]>,
}

impl DirectedGraph {
    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => self.to_json(),
            ExportFormat::AdjList => self.to_adjlist(),
        }
    }

    /// `digraph`, one `vN [label=...]` line per vertex and one `u -> v` line
    /// per edge, loops included.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cayley {\n");
        for (v, name) in self.names().iter().enumerate() {
            let _ = writeln!(out, "  v{v} [label=\"{}\"];", escape(name));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{u} -> v{v};");
        }
        out.push_str("}\n");
        out
    }

    /// `{"n", "names", "edges"}` with edges sorted.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n: self.vertex_count(),
            names: self.names().to_vec(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph JSON is always serializable")
    }

    /// One `name: n1 n2 ...` line per vertex.
    pub fn to_adjlist(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            out.push_str(self.name(v));
            out.push(':');
            for &w in self.out_neighbors(v) {
                out.push(' ');
                out.push_str(self.name(w));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let doc: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        if doc.names.len() != doc.n {
            return Err(GraphError::Json(format!(
                "n = {} but {} names",
                doc.n,
                doc.names.len()
            )));
        }
        DirectedGraph::from_edges(doc.names, doc.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

fn escape(name: &str) -> String {
    name.replace('\\', "\\\\").replace('"', "\\\"")
}

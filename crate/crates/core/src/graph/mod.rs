//! Directed Cayley graphs of quandles and the analyses run on them.
//!
//! Graphs are directed, may carry loops, and never carry multi-edges: the
//! adjacency of each vertex is a sorted, deduplicated list of out-neighbours.

mod analysis;
mod components;
mod export;
mod iso;
mod takasaki;

pub use analysis::{ComponentSummary, GraphAnalysis};
pub use components::{ComponentDecomposition, ComponentKind};
pub use export::ExportFormat;
pub use iso::DEFAULT_ISOMORPHISM_CAP;
pub use takasaki::{takasaki_z_edge, takasaki_z_window, TakasakiWindow};

use thiserror::Error;

use crate::quandle::Quandle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set is not strongly connected: no path from {from} to {to}")]
    NotStronglyConnected { from: usize, to: usize },
    #[error("graph on {n} vertices exceeds the isomorphism cap {cap}")]
    IsomorphismCapExceeded { n: usize, cap: usize },
    #[error("unknown export format {0:?} (expected dot, json or adjlist)")]
    UnknownFormat(String),
    #[error("malformed graph JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    adj: Vec<Vec<usize>>,
    names: Vec<String>,
}

impl DirectedGraph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let n = names.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].push(v);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(DirectedGraph { adj, names })
    }

    /// `Γ_Q`: an edge `x -> x ▷ y` for every `y`.
    pub fn cayley(q: &Quandle) -> Self {
        let n = q.order();
        let adj = (0..n)
            .map(|x| {
                let mut out: Vec<usize> = (0..n).map(|y| q.rhd(x, y)).collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        DirectedGraph {
            adj,
            names: q.names().to_vec(),
        }
    }

    /// `K_n` with a loop at every vertex, vertices named `0..n`.
    pub fn complete(n: usize) -> Self {
        DirectedGraph {
            adj: vec![(0..n).collect(); n],
            names: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.adj.len(),
            })
        }
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.adj.len()];
        for out in &self.adj {
            for &v in out {
                deg[v] += 1;
            }
        }
        deg
    }

    /// `(out-degree, in-degree)` per vertex, counting distinct neighbours; a
    /// loop adds one to each.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .map(Vec::len)
            .zip(self.in_degrees())
            .collect()
    }

    pub fn has_loop_everywhere(&self) -> bool {
        (0..self.adj.len()).all(|v| self.has_loop(v))
    }

    /// Only loops, one at every vertex.
    pub fn is_edgeless(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(v, out)| out.as_slice() == [v])
    }

    /// Every ordered pair of distinct vertices joined, plus a loop at each
    /// vertex.
    pub fn is_complete(&self) -> bool {
        let n = self.adj.len();
        self.adj.iter().all(|out| out.len() == n)
    }

    /// `a -> c` implies `c -> a`.
    pub fn is_symmetric(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(u, out)| out.iter().all(|&v| self.has_edge(v, u)))
    }

    /// First edge without a reverse, if any.
    pub fn asymmetric_edge(&self) -> Option<(usize, usize)> {
        self.edges().into_iter().find(|&(u, v)| !self.has_edge(v, u))
    }

    /// Vertices reachable from `v` by directed paths (including `v`), sorted.
    pub fn reachable_from(&self, v: usize) -> Vec<usize> {
        let dist = self.bfs(v);
        (0..self.adj.len()).filter(|&u| dist[u].is_some()).collect()
    }

    pub(crate) fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Restriction to `vertices`, relabelled densely in the given order with
    /// names preserved.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<DirectedGraph, GraphError> {
        let mut position = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            position[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut out: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (position[w] != usize::MAX).then_some(position[w]))
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        let names = vertices.iter().map(|&v| self.names[v].clone()).collect();
        Ok(DirectedGraph { adj, names })
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> DirectedGraph {
        let n = self.adj.len();
        let mut adj = vec![Vec::new(); n];
        let mut names = vec![String::new(); n];
        for v in 0..n {
            names[perm[v]] = self.names[v].clone();
            let mut out: Vec<usize> = self.adj[v].iter().map(|&w| perm[w]).collect();
            out.sort_unstable();
            adj[perm[v]] = out;
        }
        DirectedGraph { adj, names }
    }

    /// True when `map` sends edges to edges and non-edges to non-edges.
    pub fn is_isomorphism_witness(&self, other: &DirectedGraph, map: &[usize]) -> bool {
        let n = self.adj.len();
        if other.vertex_count() != n || map.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &m in map {
            if m >= n || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        self.edge_count() == other.edge_count()
            && self.edges().iter().all(|&(u, v)| other.has_edge(map[u], map[v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Automorphism, FiniteGroup};

    #[test]
    fn trivial_quandle_graph_is_loops_only() {
        let g = DirectedGraph::cayley(&Quandle::trivial(3).unwrap());
        assert_eq!(g.edges(), [(0, 0), (1, 1), (2, 2)]);
        assert!(g.is_edgeless());
        assert!(g.is_symmetric());
        assert!(g.degrees().iter().all(|&d| d == (1, 1)));
    }

    #[test]
    fn r4_edges() {
        let g = DirectedGraph::cayley(&Quandle::dihedral(4).unwrap());
        assert_eq!(
            g.edges(),
            [(0, 0), (0, 2), (1, 1), (1, 3), (2, 0), (2, 2), (3, 1), (3, 3)]
        );
        assert!(!g.is_complete());
        assert!(!g.is_edgeless());
    }

    #[test]
    fn odd_dihedral_quandle_is_complete() {
        let g = DirectedGraph::cayley(&Quandle::dihedral(5).unwrap());
        assert!(g.is_complete());
        assert!(g.degrees().iter().all(|&d| d == (5, 5)));
        assert!(DirectedGraph::complete(4).is_complete());
    }

    #[test]
    fn conjugation_graph_is_symmetric() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let g = DirectedGraph::cayley(&Quandle::conjugation(&s3).unwrap());
        assert!(g.is_symmetric());
        let transpositions: Vec<usize> =
            s3.elements().filter(|&x| s3.element_order(x) == 2).collect();
        let sub = g.induced_subgraph(&transpositions).unwrap();
        assert!(sub.is_complete());
        assert_eq!(sub.vertex_count(), 3);
    }

    #[test]
    fn dihedral_group_inner_graph_is_not_symmetric() {
        let d5 = FiniteGroup::dihedral(5).unwrap();
        let phi = Automorphism::inner(&d5, d5.element_by_name("r").unwrap()).unwrap();
        let g = DirectedGraph::cayley(&Quandle::generalized_alexander(&d5, &phi).unwrap());
        assert!(!g.is_symmetric());
        let e = d5.element_by_name("e").unwrap();
        let r2 = d5.element_by_name("r^2").unwrap();
        assert!(g.has_edge(e, r2));
        assert!(!g.has_edge(r2, e));
    }

    #[test]
    fn induced_subgraph_edge_cases() {
        let g = DirectedGraph::cayley(&Quandle::dihedral(6).unwrap());
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        assert!(matches!(
            g.induced_subgraph(&[0, 9]),
            Err(GraphError::VertexOutOfRange { vertex: 9, n: 6 })
        ));
        let evens = g.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!(evens.names(), ["0", "2", "4"]);
        assert!(evens.is_complete());
    }

    #[test]
    fn from_edges_collapses_duplicates() {
        let names = vec!["a".into(), "b".into()];
        let g = DirectedGraph::from_edges(names.clone(), [(0, 1), (0, 1), (1, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(DirectedGraph::from_edges(names, [(0, 2)]).is_err());
    }
}

use serde::{Deserialize, Serialize};

use super::DirectedGraph;
use crate::quandle::Quandle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub vertices: Vec<String>,
    pub size: usize,
    pub diameter: usize,
    pub complete: bool,
}

/// The numbers `analyze` reports for a quandle's Cayley graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphAnalysis {
    pub label: String,
    pub order: usize,
    pub involutory: bool,
    pub trivial: bool,
    pub edgeless: bool,
    pub symmetric: bool,
    pub edge_count: usize,
    /// `[min, max]`
    pub out_degree: [usize; 2],
    pub in_degree: [usize; 2],
    /// Strong components, ordered by smallest vertex.
    pub components: Vec<ComponentSummary>,
}

fn range(values: impl Iterator<Item = usize>) -> [usize; 2] {
    values.fold([usize::MAX, 0], |[lo, hi], v| [lo.min(v), hi.max(v)])
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

/// `a` when every value equals `a`, else the comma-separated list.
fn uniform(values: &[usize]) -> (bool, String) {
    match values.split_first() {
        Some((first, rest)) if rest.iter().all(|v| v == first) => (true, first.to_string()),
        _ => (
            false,
            values.iter().map(usize::to_string).collect::<Vec<_>>().join(", "),
        ),
    }
}

fn degree_text([lo, hi]: [usize; 2]) -> String {
    if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}..{hi}")
    }
}

impl GraphAnalysis {
    pub fn of(q: &Quandle) -> Self {
        let graph = DirectedGraph::cayley(q);
        let degrees = graph.degrees();
        let scc = graph.strongly_connected_components();
        let components = scc
            .components
            .iter()
            .map(|c| {
                let sub = graph.induced_subgraph(c).expect("component vertices are in range");
                ComponentSummary {
                    vertices: c.iter().map(|&v| graph.name(v).to_string()).collect(),
                    size: c.len(),
                    diameter: graph
                        .component_diameter(c)
                        .expect("strong components are strongly connected"),
                    complete: sub.is_complete(),
                }
            })
            .collect();
        GraphAnalysis {
            label: q.label().to_string(),
            order: q.order(),
            involutory: q.is_involutory(),
            trivial: q.is_trivial(),
            edgeless: graph.is_edgeless(),
            symmetric: graph.is_symmetric(),
            edge_count: graph.edge_count(),
            out_degree: range(degrees.iter().map(|d| d.0)),
            in_degree: range(degrees.iter().map(|d| d.1)),
            components,
        }
    }

    /// One line, e.g. `1 component, size 5, complete, degrees 5/5` or
    /// `edgeless, 7 components`.
    pub fn summary(&self) -> String {
        let count = self.components.len();
        if self.edgeless {
            return format!("edgeless, {}", plural(count, "component"));
        }
        let sizes: Vec<usize> = self.components.iter().map(|c| c.size).collect();
        let diameters: Vec<usize> = self.components.iter().map(|c| c.diameter).collect();
        let mut parts = vec![plural(count, "component")];
        let (same, text) = uniform(&sizes);
        parts.push(format!("{} {text}", if same { "size" } else { "sizes" }));
        if self.components.iter().all(|c| c.complete) {
            parts.push("complete".into());
        } else {
            let (same, text) = uniform(&diameters);
            parts.push(format!("{} {text}", if same { "diameter" } else { "diameters" }));
        }
        parts.push(format!(
            "degrees {}/{}",
            degree_text(self.out_degree),
            degree_text(self.in_degree)
        ));
        if !self.symmetric {
            parts.push("not symmetric".into());
        }
        parts.join(", ")
    }

    /// Multi-line human-readable report ending with [`summary`](Self::summary).
    pub fn to_text(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!(
            "quandle: {}\norder: {}\ninvolutory: {}\ntrivial: {}\nsymmetric: {}\nedges: {}\nout-degree: {}\nin-degree: {}\ncomponents: {}\n",
            self.label,
            self.order,
            yes(self.involutory),
            yes(self.trivial),
            yes(self.symmetric),
            self.edge_count,
            degree_text(self.out_degree),
            degree_text(self.in_degree),
            self.components.len()
        );
        for (i, c) in self.components.iter().enumerate() {
            out.push_str(&format!(
                "  [{i}] size {}, diameter {}, {}: {}\n",
                c.size,
                c.diameter,
                if c.complete { "complete" } else { "not complete" },
                c.vertices.join(" ")
            ));
        }
        out.push_str(&format!("summary: {}\n", self.summary()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Automorphism, FiniteGroup};

    #[test]
    fn dihedral_quandle_summary() {
        let a = GraphAnalysis::of(&Quandle::dihedral(5).unwrap());
        assert_eq!(a.summary(), "1 component, size 5, complete, degrees 5/5");
        assert!(a.involutory && a.symmetric);
    }

    #[test]
    fn dihedral_group_summary() {
        let g = FiniteGroup::dihedral(6).unwrap();
        let phi = Automorphism::inner(&g, g.element_by_name("r").unwrap()).unwrap();
        let a = GraphAnalysis::of(&Quandle::generalized_alexander(&g, &phi).unwrap());
        assert_eq!(a.summary(), "4 components, size 3, diameter 2, degrees 2/2, not symmetric");
    }

    #[test]
    fn trivial_summary() {
        let a = GraphAnalysis::of(&Quandle::trivial(7).unwrap());
        assert_eq!(a.summary(), "edgeless, 7 components");
        assert!(a.to_text().contains("components: 7\n"));
    }
}

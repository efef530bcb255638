use serde::{Deserialize, Serialize};

use super::{DirectedGraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Strong,
    Weak,
}

/// Components as sorted vertex lists, ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub kind: ComponentKind,
    pub components: Vec<Vec<usize>>,
}

impl ComponentDecomposition {
    fn canonical(kind: ComponentKind, mut components: Vec<Vec<usize>>) -> Self {
        for c in &mut components {
            c.sort_unstable();
        }
        components.sort_by_key(|c| c[0]);
        ComponentDecomposition { kind, components }
    }

    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    pub fn component_of(&self, v: usize) -> Option<&[usize]> {
        self.components
            .iter()
            .find(|c| c.binary_search(&v).is_ok())
            .map(Vec::as_slice)
    }
}

impl DirectedGraph {
    /// Tarjan's algorithm with an explicit stack.
    pub fn strongly_connected_components(&self) -> ComponentDecomposition {
        const UNVISITED: usize = usize::MAX;
        let n = self.vertex_count();
        let mut index = vec![UNVISITED; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut components = Vec::new();
        let mut next_index = 0;
        // (vertex, position in its adjacency list)
        let mut call: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if index[root] != UNVISITED {
                continue;
            }
            call.push((root, 0));
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if *pos == 0 && index[v] == UNVISITED {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                let out = self.out_neighbors(v);
                if *pos < out.len() {
                    let w = out[*pos];
                    *pos += 1;
                    if index[w] == UNVISITED {
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut component = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        component.push(w);
                        if w == v {
                            break;
                        }
                    }
                    components.push(component);
                }
            }
        }
        ComponentDecomposition::canonical(ComponentKind::Strong, components)
    }

    /// Components of the symmetrised edge relation.
    pub fn weakly_connected_components(&self) -> ComponentDecomposition {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (u, v) in self.edges() {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = find(&mut parent, v);
            groups[r].push(v);
        }
        let components = groups.into_iter().filter(|g| !g.is_empty()).collect();
        ComponentDecomposition::canonical(ComponentKind::Weak, components)
    }

    /// Largest shortest-path length between ordered pairs inside `component`.
    /// Fails if some pair is not joined by a directed path.
    pub fn component_diameter(&self, component: &[usize]) -> Result<usize, GraphError> {
        for &v in component {
            self.check_vertex(v)?;
        }
        let mut diameter = 0;
        for &source in component {
            let dist = self.bfs(source);
            for &target in component {
                match dist[target] {
                    Some(d) => diameter = diameter.max(d),
                    None => {
                        return Err(GraphError::NotStronglyConnected {
                            from: source,
                            to: target,
                        })
                    }
                }
            }
        }
        Ok(diameter)
    }
}

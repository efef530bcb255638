use super::DirectedGraph;

/// Edge `a -> c` in the Cayley graph of the Takasaki quandle of the integers:
/// some integer `b` has `c = 2b - a`, i.e. `a + c` is even.
pub fn takasaki_z_edge(a: i64, c: i64) -> bool {
    (a + c).rem_euclid(2) == 0
}

/// The Takasaki graph of the integers restricted to `-w..=w`.
#[derive(Debug, Clone)]
pub struct TakasakiWindow {
    pub width: i64,
    pub graph: DirectedGraph,
}

impl TakasakiWindow {
    /// Graph vertex for integer `a`.
    pub fn vertex(&self, a: i64) -> usize {
        (a + self.width) as usize
    }

    pub fn value(&self, v: usize) -> i64 {
        v as i64 - self.width
    }
}

pub fn takasaki_z_window(w: usize) -> TakasakiWindow {
    let width = w as i64;
    let values: Vec<i64> = (-width..=width).collect();
    let names = values.iter().map(i64::to_string).collect();
    let edges = values.iter().enumerate().flat_map(|(i, &a)| {
        values
            .iter()
            .enumerate()
            .filter(move |&(_, &c)| takasaki_z_edge(a, c))
            .map(move |(j, _)| (i, j))
    });
    let graph = DirectedGraph::from_edges(names, edges).expect("window vertices are in range");
    TakasakiWindow { width, graph }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_predicate() {
        assert!(takasaki_z_edge(0, 4));
        assert!(!takasaki_z_edge(1, 2));
        assert!(!takasaki_z_edge(0, 1));
        assert!(takasaki_z_edge(-3, 5));
        assert!((-10..=10).all(|a| takasaki_z_edge(a, a)));
    }

    #[test]
    fn small_windows() {
        let w1 = takasaki_z_window(1);
        let scc = w1.graph.strongly_connected_components();
        let values: Vec<Vec<i64>> = scc
            .components
            .iter()
            .map(|c| c.iter().map(|&v| w1.value(v)).collect())
            .collect();
        assert_eq!(values, vec![vec![-1, 1], vec![0]]);

        let w2 = takasaki_z_window(2);
        let mut sizes = w2.graph.strongly_connected_components().sizes();
        sizes.sort();
        assert_eq!(sizes, [2, 3]);
        assert!(w2.graph.is_symmetric());
    }
}

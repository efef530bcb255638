use std::collections::{BTreeMap, VecDeque};

use super::{DirectedGraph, GraphError};

pub const DEFAULT_ISOMORPHISM_CAP: usize = 64;

type Signature = (usize, Vec<usize>, Vec<usize>);

impl DirectedGraph {
    pub fn is_isomorphic(&self, other: &DirectedGraph) -> Result<Option<Vec<usize>>, GraphError> {
        self.is_isomorphic_capped(other, DEFAULT_ISOMORPHISM_CAP)
    }

    /// Exact directed-graph isomorphism. Returns a witness `map` with
    /// `u -> v` in `self` iff `map[u] -> map[v]` in `other`.
    ///
    /// Vertices are first split into classes by (out-degree, in-degree, loop)
    /// and refined by neighbour classes, computed jointly on both graphs so
    /// class ids agree. Backtracking then only pairs vertices of the same
    /// class and checks adjacency against everything already mapped.
    pub fn is_isomorphic_capped(
        &self,
        other: &DirectedGraph,
        cap: usize,
    ) -> Result<Option<Vec<usize>>, GraphError> {
        for n in [self.vertex_count(), other.vertex_count()] {
            if n > cap {
                return Err(GraphError::IsomorphismCapExceeded { n, cap });
            }
        }
        let n = self.vertex_count();
        if other.vertex_count() != n || other.edge_count() != self.edge_count() {
            return Ok(None);
        }
        let (colors_a, colors_b) = refine_jointly(self, other);
        let mut hist_a = colors_a.clone();
        let mut hist_b = colors_b.clone();
        hist_a.sort_unstable();
        hist_b.sort_unstable();
        if hist_a != hist_b {
            return Ok(None);
        }

        let order = search_order(self, &colors_a);
        let mut state = Search {
            a: self,
            b: other,
            colors_a: &colors_a,
            colors_b: &colors_b,
            order: &order,
            map: vec![usize::MAX; n],
            used: vec![false; n],
        };
        let found = state.extend(0);
        Ok(found.then_some(state.map))
    }
}

fn refine_jointly(a: &DirectedGraph, b: &DirectedGraph) -> (Vec<usize>, Vec<usize>) {
    let initial = |g: &DirectedGraph| -> Vec<(usize, usize, bool)> {
        g.degrees()
            .into_iter()
            .enumerate()
            .map(|(v, (o, i))| (o, i, g.has_loop(v)))
            .collect()
    };
    let mut ids: BTreeMap<(usize, usize, bool), usize> = BTreeMap::new();
    for key in initial(a).into_iter().chain(initial(b)) {
        let next = ids.len();
        ids.entry(key).or_insert(next);
    }
    let mut ca: Vec<usize> = initial(a).iter().map(|k| ids[k]).collect();
    let mut cb: Vec<usize> = initial(b).iter().map(|k| ids[k]).collect();
    let mut classes = ids.len();

    let in_lists = |g: &DirectedGraph| -> Vec<Vec<usize>> {
        let mut ins = vec![Vec::new(); g.vertex_count()];
        for (u, v) in g.edges() {
            ins[v].push(u);
        }
        ins
    };
    let (ins_a, ins_b) = (in_lists(a), in_lists(b));

    loop {
        let signature = |g: &DirectedGraph, ins: &[Vec<usize>], c: &[usize], v: usize| -> Signature {
            let mut outs: Vec<usize> = g.out_neighbors(v).iter().map(|&w| c[w]).collect();
            let mut inc: Vec<usize> = ins[v].iter().map(|&w| c[w]).collect();
            outs.sort_unstable();
            inc.sort_unstable();
            (c[v], outs, inc)
        };
        let sa: Vec<Signature> = (0..a.vertex_count())
            .map(|v| signature(a, &ins_a, &ca, v))
            .collect();
        let sb: Vec<Signature> = (0..b.vertex_count())
            .map(|v| signature(b, &ins_b, &cb, v))
            .collect();
        let mut ids: BTreeMap<&Signature, usize> = BTreeMap::new();
        for s in sa.iter().chain(&sb) {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        let refined = ids.len();
        ca = sa.iter().map(|s| ids[s]).collect();
        cb = sb.iter().map(|s| ids[s]).collect();
        if refined == classes {
            return (ca, cb);
        }
        classes = refined;
    }
}

/// Breadth-first order over the underlying undirected graph, each new
/// component started from its vertex in the rarest class, so most placed
/// vertices have an already-mapped neighbour to prune against.
fn search_order(g: &DirectedGraph, colors: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in colors {
        *class_size.entry(c).or_default() += 1;
    }
    let mut neighbors = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        if u != v {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
    }
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&v| (class_size[&colors[v]], v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in seeds {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    a: &'a DirectedGraph,
    b: &'a DirectedGraph,
    colors_a: &'a [usize],
    colors_b: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.b.vertex_count() {
            if self.used[w] || self.colors_b[w] != self.colors_a[v] || !self.consistent(depth, v, w)
            {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        false
    }

    fn consistent(&self, depth: usize, v: usize, w: usize) -> bool {
        if self.a.has_loop(v) != self.b.has_loop(w) {
            return false;
        }
        self.order[..depth].iter().all(|&u| {
            let mu = self.map[u];
            self.a.has_edge(u, v) == self.b.has_edge(mu, w)
                && self.a.has_edge(v, u) == self.b.has_edge(w, mu)
        })
    }
}

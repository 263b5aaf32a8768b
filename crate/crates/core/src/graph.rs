//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so every structural
//! query reduces to word operations. Graphs are immutable values: every
//! "mutation" returns a new graph.

use std::fmt;
use thiserror::Error;

/// Hard cap on the vertex count; adjacency rows must fit one machine word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be between 1 and {MAX_VERTICES}, got {n}")]
    OrderOutOfRange { n: usize },
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) not present")]
    MissingEdge { u: usize, v: usize },
    #[error("edge set is empty")]
    EmptyEdgeSet,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph contains no cycle")]
    Acyclic,
    #[error("edge set is not an edge cut")]
    NotAnEdgeCut,
    #[error("cut must leave exactly two components, found {count}")]
    NotTwoComponents { count: usize },
    #[error("operation requires at least two vertices")]
    SingleVertex,
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// One connected piece of a graph, together with the host vertex each
/// component vertex came from.
#[derive(Debug, Clone)]
pub struct Component {
    pub graph: Graph,
    /// `vertex_map[i]` is the host id of component vertex `i`.
    pub vertex_map: Vec<usize>,
}

/// An edge cut, optionally remembering the side `S` that induced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub edges: Vec<(usize, usize)>,
    /// Bitmask of the inducing vertex subset, when known.
    pub side: Option<u64>,
}

impl EdgeCut {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeCut { edges, side: None }
    }

    /// The cut `[S, V\S]` induced by the vertex subset `side`.
    pub fn from_side(g: &Graph, side: u64) -> Self {
        let mut edges = Vec::new();
        for (u, v) in g.edges() {
            if (side >> u & 1) != (side >> v & 1) {
                edges.push((u, v));
            }
        }
        EdgeCut {
            edges,
            side: Some(side),
        }
    }

    /// Checks that every edge exists in `g` and that deleting them strictly
    /// increases the number of components.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::EmptyEdgeSet);
        }
        let before = g.components().len();
        let after = g.delete_edges(&self.edges)?.components().len();
        if after <= before {
            return Err(GraphError::NotAnEdgeCut);
        }
        Ok(())
    }
}

/// Result of splitting a connected graph along an edge cut into exactly two
/// parts.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub g1: Graph,
    pub g2: Graph,
    /// Host ids of `g1`'s vertices.
    pub map1: Vec<usize>,
    /// Host ids of `g2`'s vertices.
    pub map2: Vec<usize>,
}

/// Center of a tree found by iterated leaf removal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeCenter {
    Vertex(usize),
    Edge(usize, usize),
}

impl Graph {
    /// Builds a graph from an explicit edge list.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange { n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            if adj[u] >> v & 1 == 1 {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adj,
        })
    }

    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n, m, adj }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let higher = if u + 1 >= 64 {
                0
            } else {
                self.adj[u] & !((1u64 << (u + 1)) - 1)
            };
            let mut it = BitIter(higher);
            while let Some(v) = it.next() {
                out.push((u, v));
            }
        }
        out
    }

    /// Degree sequence sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    fn reachable_from(&self, start: usize, alive: u64) -> u64 {
        let mut visited = 1u64 << start;
        loop {
            let mut frontier = 0u64;
            let mut bits = BitIter(visited);
            while let Some(v) = bits.next() {
                frontier |= self.adj[v];
            }
            frontier &= alive & !visited;
            if frontier == 0 {
                return visited;
            }
            visited |= frontier;
        }
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0, self.full_mask()) == self.full_mask()
    }

    /// Induced subgraph on the vertices in `mask`, relabeled in increasing id
    /// order. Returns the subgraph and the host ids of its vertices.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = BitIter(mask).collect();
        let mut adj = vec![0u64; map.len()];
        for (i, &vi) in map.iter().enumerate() {
            for (j, &vj) in map.iter().enumerate() {
                if self.adj[vi] >> vj & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        (Graph::from_rows(adj), map)
    }

    /// Connected components with vertex maps back into the host graph.
    pub fn components(&self) -> Vec<Component> {
        let mut out = Vec::new();
        let mut remaining = self.full_mask();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mask = self.reachable_from(start, remaining);
            let (graph, vertex_map) = self.induced(mask);
            out.push(Component { graph, vertex_map });
            remaining &= !mask;
        }
        out
    }

    /// `m - n + 1` for a connected graph.
    pub fn cyclomatic_number(&self) -> Result<usize, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(self.m + 1 - self.n)
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n && self.is_connected()
    }

    /// Same vertex set with the listed edges removed.
    pub fn delete_edges(&self, f: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = self.adj.clone();
        let mut removed = 0usize;
        for &(u, v) in f {
            if !self.has_edge(u, v) {
                return Err(GraphError::MissingEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            if adj[u] >> v & 1 == 0 {
                // listed twice
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
            removed += 1;
        }
        Ok(Graph {
            n: self.n,
            m: self.m - removed,
            adj,
        })
    }

    fn check_cut_preconditions(&self, f: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if f.is_empty() {
            return Err(GraphError::EmptyEdgeSet);
        }
        self.delete_edges(f)
    }

    /// Does deleting `f` disconnect the graph?
    pub fn is_edge_cut(&self, f: &[(usize, usize)]) -> Result<bool, GraphError> {
        let deleted = self.check_cut_preconditions(f)?;
        Ok(!deleted.is_connected())
    }

    /// Is `f` an edge cut whose edges all leave a common vertex on one side?
    ///
    /// Concretely: some vertex `v` is an endpoint of every edge of `f`, and
    /// after deleting `f` no other endpoint stays in `v`'s component. The
    /// component of `v` is then a side `S` with `f = [S, V\S]`.
    pub fn is_star_cut(&self, f: &[(usize, usize)]) -> Result<bool, GraphError> {
        let deleted = self.check_cut_preconditions(f)?;
        let (a, b) = f[0];
        'cand: for v in [a, b] {
            for &(x, y) in f {
                if x != v && y != v {
                    continue 'cand;
                }
            }
            let comp = deleted.reachable_from(v, deleted.full_mask());
            let mut ok = true;
            for &(x, y) in f {
                let other = if x == v { y } else { x };
                if comp >> other & 1 == 1 {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Splits along an edge cut that leaves exactly two components. The part
    /// containing vertex 0 comes first.
    pub fn decompose_by_cut(&self, cut: &EdgeCut) -> Result<Decomposition, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if cut.edges.is_empty() {
            return Err(GraphError::EmptyEdgeSet);
        }
        let deleted = self.delete_edges(&cut.edges)?;
        let comps = deleted.components();
        match comps.len() {
            1 => Err(GraphError::NotAnEdgeCut),
            2 => {
                let mut it = comps.into_iter();
                let first = it.next().unwrap();
                let second = it.next().unwrap();
                // components() starts from vertex 0, so `first` contains it
                Ok(Decomposition {
                    g1: first.graph,
                    g2: second.graph,
                    map1: first.vertex_map,
                    map2: second.vertex_map,
                })
            }
            count => Err(GraphError::NotTwoComponents { count }),
        }
    }

    /// The 2-core: result of repeatedly deleting vertices of degree at most 1.
    /// Errors on trees, where pruning would exhaust the graph.
    pub fn pruned_core(&self) -> Result<Graph, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.m + 1 == self.n {
            return Err(GraphError::Acyclic);
        }
        let mut alive = self.full_mask();
        loop {
            let mut removed = false;
            let mut bits = BitIter(alive);
            while let Some(v) = bits.next() {
                if (self.adj[v] & alive).count_ones() <= 1 {
                    alive &= !(1 << v);
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        debug_assert!(alive != 0);
        Ok(self.induced(alive).0)
    }

    fn connected_without_edges(&self, skip: &[(usize, usize)]) -> bool {
        let mut adj = self.adj.clone();
        for &(u, v) in skip {
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
        let full = self.full_mask();
        let mut visited = 1u64;
        loop {
            let mut frontier = 0u64;
            let mut bits = BitIter(visited);
            while let Some(v) = bits.next() {
                frontier |= adj[v];
            }
            frontier &= full & !visited;
            if frontier == 0 {
                return visited == full;
            }
            visited |= frontier;
        }
    }

    /// Minimum number of edges whose removal disconnects the graph.
    ///
    /// For maximum degree at most 3 the value is at most 3, so an exhaustive
    /// search over small cuts is exact; otherwise falls back to max-flow.
    pub fn edge_connectivity(&self) -> Result<usize, GraphError> {
        if self.n < 2 {
            return Err(GraphError::SingleVertex);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.max_degree() <= 3 {
            let edges = self.edges();
            for k in 1..=3usize.min(edges.len()) {
                let mut idx: Vec<usize> = (0..k).collect();
                loop {
                    let cut: Vec<(usize, usize)> = idx.iter().map(|&i| edges[i]).collect();
                    if !self.connected_without_edges(&cut) {
                        return Ok(k);
                    }
                    if !next_combination(&mut idx, edges.len()) {
                        break;
                    }
                }
            }
        }
        self.edge_connectivity_flow()
    }

    fn edge_connectivity_flow(&self) -> Result<usize, GraphError> {
        let n = self.n;
        let mut best = usize::MAX;
        for t in 1..n {
            let mut cap = vec![0i32; n * n];
            for (u, v) in self.edges() {
                cap[u * n + v] = 1;
                cap[v * n + u] = 1;
            }
            let mut flow = 0usize;
            loop {
                // BFS augmenting path 0 -> t
                let mut parent = vec![usize::MAX; n];
                parent[0] = 0;
                let mut queue = std::collections::VecDeque::new();
                queue.push_back(0usize);
                while let Some(u) = queue.pop_front() {
                    for v in 0..n {
                        if parent[v] == usize::MAX && cap[u * n + v] > 0 {
                            parent[v] = u;
                            queue.push_back(v);
                        }
                    }
                }
                if parent[t] == usize::MAX {
                    break;
                }
                let mut v = t;
                while v != 0 {
                    let u = parent[v];
                    cap[u * n + v] -= 1;
                    cap[v * n + u] += 1;
                    v = u;
                }
                flow += 1;
                if flow >= best {
                    break;
                }
            }
            best = best.min(flow);
        }
        Ok(best)
    }

    /// Jordan center by iterated leaf stripping: one surviving vertex or one
    /// surviving adjacent pair.
    pub fn tree_center(&self) -> Result<TreeCenter, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        if self.n == 1 {
            return Ok(TreeCenter::Vertex(0));
        }
        let mut alive = self.full_mask();
        let mut count = self.n;
        while count > 2 {
            let mut leaves = 0u64;
            let mut bits = BitIter(alive);
            while let Some(v) = bits.next() {
                if (self.adj[v] & alive).count_ones() == 1 {
                    leaves |= 1 << v;
                }
            }
            alive &= !leaves;
            count -= leaves.count_ones() as usize;
        }
        let survivors: Vec<usize> = BitIter(alive).collect();
        match survivors.as_slice() {
            [v] => Ok(TreeCenter::Vertex(*v)),
            [u, v] => Ok(TreeCenter::Edge(*u, *v)),
            _ => unreachable!("leaf stripping of a tree ends at 1 or 2 vertices"),
        }
    }

    /// New graph with one extra vertex adjacent to the vertices in `nbrs`.
    pub(crate) fn with_vertex_added(&self, nbrs: u64) -> Graph {
        let n = self.n + 1;
        debug_assert!(n <= MAX_VERTICES);
        let mut adj = self.adj.clone();
        adj.push(nbrs);
        let new = self.n;
        let mut bits = BitIter(nbrs);
        while let Some(v) = bits.next() {
            adj[v] |= 1 << new;
        }
        Graph {
            n,
            m: self.m + nbrs.count_ones() as usize,
            adj,
        }
    }

    /// New graph with vertex `v` removed; higher ids shift down by one.
    pub(crate) fn with_vertex_deleted(&self, v: usize) -> Graph {
        let mask = self.full_mask() & !(1 << v);
        self.induced(mask).0
    }

    pub(crate) fn with_edge_added(&self, u: usize, v: usize) -> Graph {
        debug_assert!(!self.has_edge(u, v) && u != v);
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Graph {
            n: self.n,
            m: self.m + 1,
            adj,
        }
    }
}

/// Advances `idx` to the next k-combination of `0..total` in lexicographic
/// order. Returns false when exhausted.
pub(crate) fn next_combination(idx: &mut [usize], total: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + total - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Iterates set bit positions of a word, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::NamedGraph;

    fn named(n: NamedGraph) -> Graph {
        n.build().unwrap()
    }

    #[test]
    fn build_basic() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        let k23 = named(NamedGraph::CompleteBipartite(2, 3));
        assert_eq!(k23.m(), 6);
        assert_eq!(k23.degree_sequence(), vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn build_rejections() {
        assert_eq!(
            Graph::build(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { v: 2, n: 2 })
        );
        assert_eq!(
            Graph::build(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop { v: 1 }));
        assert_eq!(Graph::build(0, &[]), Err(GraphError::OrderOutOfRange { n: 0 }));
        assert_eq!(
            Graph::build(65, &[]),
            Err(GraphError::OrderOutOfRange { n: 65 })
        );
    }

    #[test]
    fn max_degree_cases() {
        assert_eq!(named(NamedGraph::S1).max_degree(), 0);
        assert_eq!(named(NamedGraph::K33).max_degree(), 3);
        assert_eq!(named(NamedGraph::Q).max_degree(), 3);
    }

    #[test]
    fn cyclomatic_cases() {
        assert_eq!(named(NamedGraph::Path(6)).cyclomatic_number().unwrap(), 0);
        assert_eq!(named(NamedGraph::K23).cyclomatic_number().unwrap(), 2);
        assert_eq!(named(NamedGraph::K33).cyclomatic_number().unwrap(), 4);
        let disconnected = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            disconnected.cyclomatic_number(),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn connectivity_and_components() {
        assert!(named(NamedGraph::K22).is_connected());
        assert_eq!(named(NamedGraph::K22).components().len(), 1);
        let split = named(NamedGraph::S2).delete_edges(&[(0, 1)]).unwrap();
        let comps = split.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.graph.n() == 1));
        // Q minus its center edge: two 3-vertex stars
        let q = named(NamedGraph::Q);
        let comps = q.delete_edges(&[(0, 1)]).unwrap().components();
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!(c.graph.n(), 3);
            assert_eq!(c.graph.m(), 2);
        }
    }

    #[test]
    fn delete_edges_cases() {
        let k22 = named(NamedGraph::K22);
        let p4ish = k22.delete_edges(&[(0, 2)]).unwrap();
        assert_eq!(p4ish.m(), 3);
        assert!(p4ish.is_tree());
        assert_eq!(p4ish.degree_sequence(), vec![2, 2, 1, 1]);

        let same = k22.delete_edges(&[]).unwrap();
        assert_eq!(same, k22);

        // K33 minus a perfect matching is 2-regular on 6 vertices (C6)
        let k33 = named(NamedGraph::K33);
        let c6 = k33.delete_edges(&[(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(c6.m(), 6);
        assert!(c6.is_connected());
        assert!((0..6).all(|v| c6.degree(v) == 2));

        assert_eq!(
            k22.delete_edges(&[(0, 1)]),
            Err(GraphError::MissingEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn edge_cut_and_star_cut() {
        let p4 = named(NamedGraph::Path(4));
        assert!(p4.is_edge_cut(&[(1, 2)]).unwrap());
        assert!(p4.is_star_cut(&[(1, 2)]).unwrap());

        let k22 = named(NamedGraph::K22);
        assert!(!k22.is_edge_cut(&[(0, 2)]).unwrap());

        // both edges at one degree-2 vertex of K23 isolate it
        let k23 = named(NamedGraph::K23);
        let v = (0..5).find(|&v| k23.degree(v) == 2).unwrap();
        let cut: Vec<(usize, usize)> = k23.neighbors(v).map(|u| (v, u)).collect();
        assert!(k23.is_edge_cut(&cut).unwrap());
        assert!(k23.is_star_cut(&cut).unwrap());

        assert_eq!(p4.is_edge_cut(&[]), Err(GraphError::EmptyEdgeSet));
        assert_eq!(
            p4.is_edge_cut(&[(0, 3)]),
            Err(GraphError::MissingEdge { u: 0, v: 3 })
        );
    }

    #[test]
    fn star_cut_needs_common_endpoint_on_cut_side() {
        // C4 plus pendants: two edges at different vertices form a cut but not a star
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap();
        let f = [(0, 4), (2, 5)];
        assert!(g.is_edge_cut(&f).unwrap());
        assert!(!g.is_star_cut(&f).unwrap());
    }

    #[test]
    fn decompose_cases() {
        let q = named(NamedGraph::Q);
        let d = q.decompose_by_cut(&EdgeCut::new(vec![(0, 1)])).unwrap();
        assert_eq!(d.g1.n() + d.g2.n(), 6);
        assert_eq!(d.g1.n(), 3);
        assert_eq!(d.g1.degree_sequence(), vec![2, 1, 1]);
        assert_eq!(d.g2.degree_sequence(), vec![2, 1, 1]);

        let p4 = named(NamedGraph::Path(4));
        let d = p4.decompose_by_cut(&EdgeCut::new(vec![(1, 2)])).unwrap();
        assert_eq!((d.g1.n(), d.g2.n()), (2, 2));
        assert_eq!(d.map1, vec![0, 1]);
        assert_eq!(d.map2, vec![2, 3]);

        // 3 components is an error the caller can react to
        let star = named(NamedGraph::Star(4));
        let err = star.decompose_by_cut(&EdgeCut::new(vec![(0, 1), (0, 2), (0, 3)]));
        assert_eq!(err.unwrap_err(), GraphError::NotTwoComponents { count: 4 });

        let not_cut = named(NamedGraph::K22).decompose_by_cut(&EdgeCut::new(vec![(0, 2)]));
        assert_eq!(not_cut.unwrap_err(), GraphError::NotAnEdgeCut);
    }

    #[test]
    fn pendant_cut_of_k23_extension() {
        // K23 plus a pendant at a degree-2 vertex; the pendant edge splits 5+1
        let g = Graph::build(
            6,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let d = g.decompose_by_cut(&EdgeCut::new(vec![(2, 5)])).unwrap();
        assert_eq!((d.g1.n(), d.g2.n()), (5, 1));
        assert_eq!(d.g1.m(), 6);
    }

    #[test]
    fn pruned_core_cases() {
        let k33 = named(NamedGraph::K33);
        assert_eq!(k33.pruned_core().unwrap(), k33);

        // C4 with a pendant path of length 3 prunes back to C4
        let g = Graph::build(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6)])
            .unwrap();
        let core = g.pruned_core().unwrap();
        assert_eq!(core.n(), 4);
        assert_eq!(core.m(), 4);
        assert!((0..4).all(|v| core.degree(v) == 2));

        assert_eq!(
            named(NamedGraph::Path(5)).pruned_core(),
            Err(GraphError::Acyclic)
        );
    }

    #[test]
    fn pruned_core_idempotent_preserves_cyclomatic() {
        let g = Graph::build(8, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (4, 6), (6, 7)])
            .unwrap();
        let core = g.pruned_core().unwrap();
        assert_eq!(core.pruned_core().unwrap(), core);
        assert_eq!(
            core.cyclomatic_number().unwrap(),
            g.cyclomatic_number().unwrap()
        );
    }

    #[test]
    fn edge_connectivity_cases() {
        assert_eq!(named(NamedGraph::Path(5)).edge_connectivity().unwrap(), 1);
        assert_eq!(named(NamedGraph::Cycle(5)).edge_connectivity().unwrap(), 2);
        assert_eq!(named(NamedGraph::K33).edge_connectivity().unwrap(), 3);
        assert_eq!(
            named(NamedGraph::S1).edge_connectivity(),
            Err(GraphError::SingleVertex)
        );
        // flow route agrees on a graph above the degree cap
        let k5 = NamedGraph::CompleteBipartite(4, 4).build().unwrap();
        assert_eq!(k5.edge_connectivity().unwrap(), 4);
    }

    #[test]
    fn edge_connectivity_bounded_by_min_degree() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let kappa = g.edge_connectivity().unwrap();
        let min_deg = (0..5).map(|v| g.degree(v)).min().unwrap();
        assert!(kappa <= min_deg);
    }

    #[test]
    fn tree_center_cases() {
        assert_eq!(
            named(NamedGraph::Path(5)).tree_center().unwrap(),
            TreeCenter::Vertex(2)
        );
        assert_eq!(
            named(NamedGraph::Path(4)).tree_center().unwrap(),
            TreeCenter::Edge(1, 2)
        );
        assert_eq!(
            named(NamedGraph::Q).tree_center().unwrap(),
            TreeCenter::Edge(0, 1)
        );
        assert_eq!(
            named(NamedGraph::K22).tree_center(),
            Err(GraphError::NotATree)
        );
        assert_eq!(
            named(NamedGraph::S1).tree_center().unwrap(),
            TreeCenter::Vertex(0)
        );
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for g in [
            named(NamedGraph::K33),
            named(NamedGraph::Q),
            named(NamedGraph::Cycle(7)),
            named(NamedGraph::Star(9)),
        ] {
            let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.m());
        }
    }

    #[test]
    fn edge_cut_from_side() {
        let k22 = named(NamedGraph::K22);
        let cut = EdgeCut::from_side(&k22, 0b0011);
        assert_eq!(cut.edges.len(), 4);
        cut.validate(&k22).unwrap();
    }
}

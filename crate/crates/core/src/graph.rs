//! Simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex index. Shadow vertices of a graph of order `n` live at `v + n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
}

/// A simple, loopless, undirected graph.
///
/// Adjacency lists are kept sorted and the edge list holds each edge once as
/// `(min, max)` in lexicographic order, so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.order(),
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ends.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); order];
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { adj, edges: list })
    }

    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
            edges: Vec::new(),
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.order()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().0 == 1
    }

    /// Subgraph induced on `vertices`, relabelled to `0..k` in the given
    /// order. Returns the subgraph and the map back to host indices.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        let sub = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (sub, vertices.to_vec())
    }

    /// Spanning subgraph keeping only the edges accepted by `keep`.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(Vertex, Vertex) -> bool) -> Graph {
        let edges: Vec<_> = self.edges.iter().copied().filter(|&(u, v)| keep(u, v)).collect();
        Graph::new(self.order(), edges).expect("edge subgraph of a simple graph")
    }

    /// Disjoint union with vertices of `other` shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::new(off + other.order(), edges).expect("disjoint union of simple graphs")
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order());
        Graph::new(self.order(), self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling by a permutation")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path is empty")]
    Empty,
    #[error("vertex {0} repeated")]
    RepeatedVertex(Vertex),
    #[error("{0}-{1} is not an edge of the host graph")]
    NotAnEdge(Vertex, Vertex),
    #[error("closed walk needs at least three vertices")]
    TooShortCycle,
}

/// A simple path or cycle given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePath {
    pub vertices: Vec<Vertex>,
    pub closed: bool,
}

impl CyclePath {
    pub fn cycle(vertices: Vec<Vertex>) -> Self {
        CyclePath { vertices, closed: true }
    }

    pub fn path(vertices: Vec<Vertex>) -> Self {
        CyclePath { vertices, closed: false }
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of edges traversed.
    pub fn edge_count(&self) -> usize {
        match (self.closed, self.vertices.len()) {
            (_, 0) => 0,
            (true, k) => k,
            (false, k) => k - 1,
        }
    }

    pub fn is_odd_cycle(&self) -> bool {
        self.closed && self.len() >= 3 && self.len() % 2 == 1
    }

    /// Checks adjacency and simplicity against `host`.
    pub fn validate(&self, host: &Graph) -> Result<(), PathError> {
        if self.vertices.is_empty() {
            return Err(PathError::Empty);
        }
        if self.closed && self.vertices.len() < 3 {
            return Err(PathError::TooShortCycle);
        }
        let mut seen = vec![false; host.order()];
        for &v in &self.vertices {
            if v >= host.order() {
                return Err(PathError::NotAnEdge(v, v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PathError::RepeatedVertex(v));
            }
        }
        for w in self.vertices.windows(2) {
            if !host.has_edge(w[0], w[1]) {
                return Err(PathError::NotAnEdge(w[0], w[1]));
            }
        }
        if self.closed {
            let (first, last) = (self.vertices[0], *self.vertices.last().unwrap());
            if !host.has_edge(last, first) {
                return Err(PathError::NotAnEdge(last, first));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_small_complete_graphs() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.size(), 3);
        assert!(k3.vertices().all(|v| k3.degree(v) == 2));
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert!(k2.has_edge(1, 0));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, order: 2 })
        );
    }

    #[test]
    fn json_round_trip_validates() {
        let g: Graph = serde_json::from_str(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn cycle_path_validation() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(CyclePath::cycle(vec![0, 1, 2, 3]).validate(&c4).is_ok());
        assert_eq!(
            CyclePath::cycle(vec![0, 1, 3]).validate(&c4),
            Err(PathError::NotAnEdge(1, 3))
        );
        assert_eq!(
            CyclePath::path(vec![0, 1, 0]).validate(&c4),
            Err(PathError::RepeatedVertex(0))
        );
    }
}

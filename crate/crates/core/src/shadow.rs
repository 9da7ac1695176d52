//! The great shadow `S(G)`, the small shadow `s(G)` and the Mycielskian.
//!
//! For a graph of order `n`, the shadow of `v` is `v + n`; the Mycielskian's
//! central vertex is `2n`.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShadowKind {
    GreatShadow,
    SmallShadow,
    Mycielskian,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShadowGraph {
    pub graph: Graph,
    pub original_order: usize,
    pub kind: ShadowKind,
}

impl ShadowGraph {
    /// `v ↦ v'`.
    pub fn shadow_of(&self, v: Vertex) -> Vertex {
        debug_assert!(v < self.original_order);
        v + self.original_order
    }

    /// `v' ↦ v`, or `None` for originals and the central vertex.
    pub fn original_of(&self, s: Vertex) -> Option<Vertex> {
        let n = self.original_order;
        (n..2 * n).contains(&s).then(|| s - n)
    }

    pub fn is_shadow(&self, x: Vertex) -> bool {
        self.original_of(x).is_some()
    }

    /// Central vertex of a Mycielskian.
    pub fn center(&self) -> Option<Vertex> {
        (self.kind == ShadowKind::Mycielskian).then_some(2 * self.original_order)
    }

    /// Shadow map as `(v, v')` pairs.
    pub fn shadow_map(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.original_order).map(|v| (v, self.shadow_of(v))).collect()
    }

    /// Checks the structural invariants of the expansion against `original`.
    pub fn check_invariants(&self, original: &Graph) -> Result<(), String> {
        let n = self.original_order;
        let m = original.size();
        if n != original.order() {
            return Err("original order mismatch".into());
        }
        let (order, size) = match self.kind {
            ShadowKind::GreatShadow => (2 * n, 3 * m + n),
            ShadowKind::SmallShadow => (2 * n, 3 * m),
            ShadowKind::Mycielskian => (2 * n + 1, 3 * m + n),
        };
        if self.graph.order() != order || self.graph.size() != size {
            return Err(format!(
                "expected {order} vertices and {size} edges, found {} and {}",
                self.graph.order(),
                self.graph.size()
            ));
        }
        for &(x, y) in self.graph.edges() {
            if self.is_shadow(x) && self.is_shadow(y) {
                return Err(format!("shadow vertices {x} and {y} adjacent"));
            }
        }
        let (induced, _) = self.graph.induced_subgraph(&(0..n).collect::<Vec<_>>());
        if &induced != original {
            return Err("original graph is not the induced subgraph on 0..n".into());
        }
        Ok(())
    }
}

fn shadow_edges(g: &Graph, with_spokes: bool) -> Vec<(Vertex, Vertex)> {
    let n = g.order();
    let mut edges = Vec::with_capacity(3 * g.size() + n);
    for &(u, v) in g.edges() {
        edges.push((u, v));
        edges.push((u, v + n));
        edges.push((v, u + n));
    }
    if with_spokes {
        edges.extend((0..n).map(|v| (v, v + n)));
    }
    edges
}

/// `S(G)`: every `v'` is adjacent to `v` and to all neighbours of `v`.
pub fn great_shadow(g: &Graph) -> ShadowGraph {
    let n = g.order();
    ShadowGraph {
        graph: Graph::new(2 * n, shadow_edges(g, true)).expect("shadow edges are distinct"),
        original_order: n,
        kind: ShadowKind::GreatShadow,
    }
}

/// `s(G)`: as `S(G)` without the edges `vv'`.
pub fn small_shadow(g: &Graph) -> ShadowGraph {
    let n = g.order();
    ShadowGraph {
        graph: Graph::new(2 * n, shadow_edges(g, false)).expect("shadow edges are distinct"),
        original_order: n,
        kind: ShadowKind::SmallShadow,
    }
}

/// `μ(G)`: the small shadow plus a vertex `c = 2n` joined to every shadow.
pub fn mycielskian(g: &Graph) -> ShadowGraph {
    let n = g.order();
    let mut edges = shadow_edges(g, false);
    edges.extend((n..2 * n).map(|s| (s, 2 * n)));
    ShadowGraph {
        graph: Graph::new(2 * n + 1, edges).expect("mycielskian edges are distinct"),
        original_order: n,
        kind: ShadowKind::Mycielskian,
    }
}

pub fn build(g: &Graph, kind: ShadowKind) -> ShadowGraph {
    match kind {
        ShadowKind::GreatShadow => great_shadow(g),
        ShadowKind::SmallShadow => small_shadow(g),
        ShadowKind::Mycielskian => mycielskian(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn shadow_of_k2_is_the_diamond() {
        let s = great_shadow(&complete(2));
        // u=0, v=1, u'=2, v'=3
        assert_eq!(s.graph.edges(), &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(s.check_invariants(&complete(2)).is_ok());
    }

    #[test]
    fn shadow_of_k1_is_an_edge() {
        let s = great_shadow(&Graph::empty(1));
        assert_eq!(s.graph.edges(), &[(0, 1)]);
    }

    #[test]
    fn shadow_of_k3_has_twelve_edges() {
        let s = great_shadow(&complete(3));
        assert_eq!((s.graph.order(), s.graph.size()), (6, 12));
    }

    #[test]
    fn small_shadow_examples() {
        let s = small_shadow(&complete(2));
        // v'-u-v-u' : 3-0-1-2
        assert_eq!(s.graph.edges(), &[(0, 1), (0, 3), (1, 2)]);
        let s1 = small_shadow(&Graph::empty(1));
        assert_eq!((s1.graph.order(), s1.graph.size()), (2, 0));
        let s4 = small_shadow(&cycle(4));
        assert_eq!((s4.graph.order(), s4.graph.size()), (8, 12));
        assert!(s4.check_invariants(&cycle(4)).is_ok());
    }

    #[test]
    fn mycielskian_examples() {
        let k1 = mycielskian(&Graph::empty(1));
        assert_eq!(k1.graph.edges(), &[(1, 2)]);
        assert_eq!(k1.center(), Some(2));
        let groetzsch = mycielskian(&cycle(5));
        assert_eq!((groetzsch.graph.order(), groetzsch.graph.size()), (11, 20));
        assert!(groetzsch.check_invariants(&cycle(5)).is_ok());
    }
}

//! Bipartite-cactus recognition with certificates, the cycle tree, and the
//! block criterion for planarity of the small shadow.

use serde::Serialize;
use thiserror::Error;

use crate::blocks::{block_decomposition, Block, BlockDecomposition};
use crate::cycles::find_odd_cycle;
use crate::graph::{CyclePath, Graph, Vertex};
use crate::theta::{find_theta, ThetaSubdivision};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("graph is not a cactus")]
    NotCactus(Box<ThetaSubdivision>),
    #[error("the criterion needs a nontrivial graph")]
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "id", rename_all = "snake_case")]
pub enum TreeNode {
    Cut(Vertex),
    /// Index into [`CycleTree::cycles`].
    Cycle(usize),
}

/// Cut vertices and collapsed cycles of a cactus. Tree edges join a cut
/// vertex to each cycle through it, and two cut vertices joined by a bridge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleTree {
    pub cut_vertices: Vec<Vertex>,
    /// Each cycle in cyclic order, starting from its smallest vertex.
    pub cycles: Vec<Vec<Vertex>>,
    pub edges: Vec<(TreeNode, TreeNode)>,
}

impl CycleTree {
    pub fn node_count(&self) -> usize {
        self.cut_vertices.len() + self.cycles.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = TreeNode> + '_ {
        self.cut_vertices
            .iter()
            .map(|&v| TreeNode::Cut(v))
            .chain((0..self.cycles.len()).map(TreeNode::Cycle))
    }

    /// Union–find acyclicity check over the node set.
    pub fn is_forest(&self) -> bool {
        let nodes: Vec<TreeNode> = self.nodes().collect();
        let index = |t: &TreeNode| nodes.binary_search(t).expect("edge endpoint is a node");
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }
}

/// Builds the cycle tree. Fails with a theta certificate on non-cacti.
pub fn cycle_tree(g: &Graph) -> Result<CycleTree, RecognitionError> {
    if let Some(th) = find_theta(g) {
        return Err(RecognitionError::NotCactus(Box::new(th)));
    }
    Ok(cycle_tree_of(g, &block_decomposition(g)))
}

fn cycle_tree_of(_g: &Graph, bd: &BlockDecomposition) -> CycleTree {
    let mut cycles = Vec::new();
    let mut edges = Vec::new();
    for block in &bd.blocks {
        if let Some(order) = block.cycle_order() {
            let id = cycles.len();
            for &x in &block.vertices {
                if bd.is_cut_vertex(x) {
                    edges.push((TreeNode::Cut(x), TreeNode::Cycle(id)));
                }
            }
            cycles.push(order);
        } else if block.is_bridge() {
            let (a, b) = block.edges[0];
            if bd.is_cut_vertex(a) && bd.is_cut_vertex(b) {
                edges.push((TreeNode::Cut(a), TreeNode::Cut(b)));
            }
        }
    }
    edges.sort();
    CycleTree {
        cut_vertices: bd.cut_vertices.clone(),
        cycles,
        edges,
    }
}

/// The three outcomes of recognition, each with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    BipartiteCactus { cycle_tree: CycleTree },
    NotBipartite { odd_cycle: CyclePath },
    NotCactus { theta: ThetaSubdivision },
}

impl Verdict {
    pub fn is_bipartite_cactus(&self) -> bool {
        matches!(self, Verdict::BipartiteCactus { .. })
    }

    /// Re-checks the carried certificate against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        match self {
            Verdict::BipartiteCactus { cycle_tree } => {
                cycle_tree.is_forest()
                    && cycle_tree.cycles.iter().all(|c| c.len() % 2 == 0)
                    && cycle_tree
                        .cycles
                        .iter()
                        .all(|c| CyclePath::cycle(c.clone()).validate(g).is_ok())
            }
            Verdict::NotBipartite { odd_cycle } => {
                odd_cycle.is_odd_cycle() && odd_cycle.validate(g).is_ok()
            }
            Verdict::NotCactus { theta } => theta.validate(g).is_ok(),
        }
    }
}

/// Odd cycles are looked for first, so a theta certificate only ever comes
/// from a bipartite graph.
pub fn classify(g: &Graph) -> Verdict {
    if let Some(odd_cycle) = find_odd_cycle(g) {
        return Verdict::NotBipartite { odd_cycle };
    }
    if let Some(theta) = find_theta(g) {
        return Verdict::NotCactus { theta };
    }
    Verdict::BipartiteCactus {
        cycle_tree: cycle_tree_of(g, &block_decomposition(g)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockShape {
    K2,
    K3,
    Diamond,
    K4,
    EvenCycle,
    Other,
}

pub fn block_shape(block: &Block) -> BlockShape {
    match (block.vertices.len(), block.edges.len()) {
        (2, 1) => BlockShape::K2,
        (3, 3) => BlockShape::K3,
        (4, 5) => BlockShape::Diamond,
        (4, 6) => BlockShape::K4,
        (v, e) if v == e && v >= 4 && v % 2 == 0 => BlockShape::EvenCycle,
        _ => BlockShape::Other,
    }
}

/// First violated condition of the small-shadow criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum SmallShadowViolation {
    /// A block is not `K_2`, `K_3`, `K_4^-`, `K_4` or an even cycle.
    ForbiddenBlock { block: Vec<Vertex> },
    /// A cut vertex has degree above two inside one of its blocks.
    CutVertexDegree { vertex: Vertex, block: Vec<Vertex> },
    /// All three vertices of a triangle block are cut vertices.
    TriangleAllCut { block: Vec<Vertex> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallShadowDecision {
    pub planar: bool,
    pub violation: Option<SmallShadowViolation>,
}

/// Decides planarity of `s(G)` from the block structure of `G`. Components
/// are judged independently; isolated vertices are harmless.
pub fn small_shadow_planar(g: &Graph) -> Result<SmallShadowDecision, RecognitionError> {
    if g.order() <= 1 {
        return Err(RecognitionError::Trivial);
    }
    let bd = block_decomposition(g);
    let violation = bd.blocks.iter().find_map(|block| {
        let shape = block_shape(block);
        if shape == BlockShape::Other {
            return Some(SmallShadowViolation::ForbiddenBlock {
                block: block.vertices.clone(),
            });
        }
        if let Some(&vertex) = block
            .vertices
            .iter()
            .find(|&&x| bd.is_cut_vertex(x) && block.degree_of(x) > 2)
        {
            return Some(SmallShadowViolation::CutVertexDegree {
                vertex,
                block: block.vertices.clone(),
            });
        }
        if shape == BlockShape::K3 && block.vertices.iter().all(|&x| bd.is_cut_vertex(x)) {
            return Some(SmallShadowViolation::TriangleAllCut {
                block: block.vertices.clone(),
            });
        }
        None
    });
    Ok(SmallShadowDecision {
        planar: violation.is_none(),
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{c4_plus_pendant, complete, cycle, path, theta};

    #[test]
    fn classify_examples() {
        assert!(matches!(classify(&complete(3)), Verdict::NotBipartite { .. }));
        let v = classify(&c4_plus_pendant());
        assert!(v.is_bipartite_cactus());
        assert!(v.validate(&c4_plus_pendant()));
        let (g, _) = theta(2, 4, 2);
        match classify(&g) {
            Verdict::NotCactus { theta } => {
                assert!(theta.validate(&g).is_ok());
                assert_eq!(theta.ell() % 2, 0);
            }
            other => panic!("expected a theta, got {other:?}"),
        }
    }

    #[test]
    fn cycle_tree_examples() {
        let t = cycle_tree(&c4_plus_pendant()).unwrap();
        assert_eq!(t.cut_vertices, vec![0]);
        assert_eq!(t.cycles.len(), 1);
        assert_eq!(t.edges, vec![(TreeNode::Cut(0), TreeNode::Cycle(0))]);

        let c6 = cycle_tree(&cycle(6)).unwrap();
        assert!(c6.cut_vertices.is_empty());
        assert_eq!(c6.cycles.len(), 1);
        assert!(c6.edges.is_empty());

        // two C4 sharing vertex 0
        let g = Graph::new(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
        )
        .unwrap();
        let t = cycle_tree(&g).unwrap();
        assert_eq!(t.cut_vertices, vec![0]);
        assert_eq!(
            t.edges,
            vec![
                (TreeNode::Cut(0), TreeNode::Cycle(0)),
                (TreeNode::Cut(0), TreeNode::Cycle(1))
            ]
        );
        assert!(t.is_forest());

        let p = cycle_tree(&path(5)).unwrap();
        assert_eq!(p.edges, vec![(TreeNode::Cut(1), TreeNode::Cut(2)), (TreeNode::Cut(2), TreeNode::Cut(3))]);
    }

    #[test]
    fn cycle_tree_rejects_non_cactus() {
        assert!(matches!(cycle_tree(&complete(4)), Err(RecognitionError::NotCactus(_))));
    }

    #[test]
    fn small_shadow_criterion_examples() {
        assert!(small_shadow_planar(&complete(4)).unwrap().planar);
        let k5 = small_shadow_planar(&complete(5)).unwrap();
        assert!(matches!(k5.violation, Some(SmallShadowViolation::ForbiddenBlock { .. })));
        // triangle 0-1-2 whose corners each carry another triangle
        let g = Graph::new(
            9,
            [
                (0, 1), (1, 2), (2, 0),
                (0, 3), (3, 4), (4, 0),
                (1, 5), (5, 6), (6, 1),
                (2, 7), (7, 8), (8, 2),
            ],
        )
        .unwrap();
        let d = small_shadow_planar(&g).unwrap();
        assert_eq!(
            d.violation,
            Some(SmallShadowViolation::TriangleAllCut { block: vec![0, 1, 2] })
        );
        assert_eq!(small_shadow_planar(&Graph::empty(1)), Err(RecognitionError::Trivial));
    }
}

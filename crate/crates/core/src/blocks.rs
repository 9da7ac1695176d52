//! Biconnected components (blocks) and cut vertices.

use serde::Serialize;

use crate::graph::{Graph, Vertex};

/// A maximal 2-connected subgraph, or a bridge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
    /// Sorted `(min, max)` edge list.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A block is a cycle exactly when `|E| = |V| >= 3`.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Degree of `v` counting only edges of this block.
    pub fn degree_of(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Adjacency restricted to the block, indexed by host vertex.
    pub(crate) fn local_adjacency(&self, host_order: usize) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); host_order];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Vertices of a cycle block in cyclic order, starting at the smallest
    /// vertex and continuing towards its smaller neighbour.
    pub fn cycle_order(&self) -> Option<Vec<Vertex>> {
        if !self.is_cycle() {
            return None;
        }
        let pos = |v: Vertex| self.vertices.binary_search(&v).unwrap();
        let mut nbrs = vec![Vec::with_capacity(2); self.vertices.len()];
        for &(a, b) in &self.edges {
            nbrs[pos(a)].push(b);
            nbrs[pos(b)].push(a);
        }
        let start = self.vertices[0];
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = *nbrs[0].iter().min().unwrap();
        while cur != start {
            order.push(cur);
            let next = nbrs[pos(cur)].iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

/// Blocks and cut vertices of a graph. Isolated vertices belong to no block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Ordered by smallest contained vertex, then lexicographically.
    pub blocks: Vec<Block>,
    /// Sorted.
    pub cut_vertices: Vec<Vertex>,
    /// For every vertex, the indices of blocks containing it.
    pub vertex_blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Tarjan–Hopcroft biconnectivity with an explicit stack.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut frames: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = frames.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*idx) {
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push((e.0.min(e.1), e.0.max(e.1)));
                    if e == (parent, v) {
                        break;
                    }
                }
                edges.sort_unstable();
                let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                vertices.sort_unstable();
                vertices.dedup();
                blocks.push(Block { vertices, edges });
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            vertex_blocks[v].push(i);
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        vertex_blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    #[test]
    fn c4_with_pendant() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let bd = block_decomposition(&g);
        assert_eq!(bd.blocks.len(), 2);
        assert!(bd.blocks[0].is_cycle());
        assert!(bd.blocks[1].is_bridge());
        assert_eq!(bd.cut_vertices, vec![0]);
        assert_eq!(bd.blocks[0].cycle_order().unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn k4_is_one_block() {
        let bd = block_decomposition(&complete(4));
        assert_eq!(bd.blocks.len(), 1);
        assert!(bd.cut_vertices.is_empty());
        assert_eq!(bd.blocks[0].edges.len(), 6);
    }

    #[test]
    fn path_blocks_are_edges() {
        let bd = block_decomposition(&path(5));
        assert_eq!(bd.blocks.len(), 4);
        assert!(bd.blocks.iter().all(Block::is_bridge));
        assert_eq!(bd.cut_vertices, vec![1, 2, 3]);
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        // bowtie plus a tail and an isolated vertex
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6)])
            .unwrap();
        let bd = block_decomposition(&g);
        let mut all: Vec<_> = bd.blocks.iter().flat_map(|b| b.edges.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, g.edges());
        assert_eq!(bd.cut_vertices, vec![2, 4, 5]);
        assert!(bd.vertex_blocks[7].is_empty());
        assert_eq!(cycle(6).order(), 6);
    }
}

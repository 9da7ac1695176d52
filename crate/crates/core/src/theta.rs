//! Located theta subgraphs: three internally disjoint `u`–`v` paths.
//!
//! `θ(ℓ, m, n)` has side paths with `ℓ` and `n` interior vertices and a
//! middle path with `m - 2` interior vertices, so the two fundamental cycles
//! through the middle path have orders `ℓ + m` and `m + n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks::{block_decomposition, Block};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSubdivision {
    pub u: Vertex,
    pub v: Vertex,
    /// `a_1..a_ℓ`, with `a_1` adjacent to `u` and `a_ℓ` adjacent to `v`.
    pub a: Vec<Vertex>,
    /// `ξ_1..ξ_{m-2}`; empty when `u` and `v` are adjacent.
    pub xi: Vec<Vertex>,
    /// `b_1..b_n`.
    pub b: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("endvertices coincide")]
    SameEnds,
    #[error("side path has no interior vertex")]
    EmptySide,
    #[error("vertex {0} appears twice")]
    Repeated(Vertex),
    #[error("{0}-{1} is not an edge of the host")]
    NotAnEdge(Vertex, Vertex),
}

impl ThetaSubdivision {
    pub fn ell(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> usize {
        self.xi.len() + 2
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn params(&self) -> (usize, usize, usize) {
        (self.ell(), self.m(), self.n())
    }

    fn full(&self, inner: &[Vertex]) -> Vec<Vertex> {
        let mut p = Vec::with_capacity(inner.len() + 2);
        p.push(self.u);
        p.extend_from_slice(inner);
        p.push(self.v);
        p
    }

    /// The three paths from `u` to `v`: `a`-side, middle, `b`-side.
    pub fn paths(&self) -> [Vec<Vertex>; 3] {
        [self.full(&self.a), self.full(&self.xi), self.full(&self.b)]
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut all = vec![self.u, self.v];
        all.extend(self.a.iter().chain(&self.xi).chain(&self.b));
        all
    }

    /// Swaps the roles of the two side paths.
    pub fn swap_sides(&mut self) {
        std::mem::swap(&mut self.a, &mut self.b);
    }

    pub fn validate(&self, host: &Graph) -> Result<(), ThetaError> {
        if self.u == self.v {
            return Err(ThetaError::SameEnds);
        }
        if self.a.is_empty() || self.b.is_empty() {
            return Err(ThetaError::EmptySide);
        }
        let mut seen = std::collections::HashSet::new();
        for x in self.vertices() {
            if !seen.insert(x) {
                return Err(ThetaError::Repeated(x));
            }
        }
        for p in self.paths() {
            for w in p.windows(2) {
                if !host.has_edge(w[0], w[1]) {
                    return Err(ThetaError::NotAnEdge(w[0], w[1]));
                }
            }
        }
        Ok(())
    }

    /// The theta as a standalone graph on `vertices()` order.
    pub fn subgraph(&self) -> (Graph, Vec<Vertex>) {
        let verts = self.vertices();
        let local = |x: Vertex| verts.iter().position(|&y| y == x).unwrap();
        let edges: Vec<_> = self
            .paths()
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (local(w[0]), local(w[1]))).collect::<Vec<_>>())
            .collect();
        (Graph::new(verts.len(), edges).expect("theta paths are simple"), verts)
    }
}

/// Finds a theta in the first block (in block order) with more edges than
/// vertices. `None` exactly when every block is a bridge or a cycle.
pub fn find_theta(g: &Graph) -> Option<ThetaSubdivision> {
    let bd = block_decomposition(g);
    bd.blocks
        .iter()
        .find(|b| b.edges.len() > b.vertices.len())
        .map(|b| theta_in_block(g, b))
}

fn theta_in_block(g: &Graph, block: &Block) -> ThetaSubdivision {
    let adj = block.local_adjacency(g.order());
    let cycle = dfs_cycle(&adj, block.vertices[0]);
    let mut on_cycle = vec![usize::MAX; g.order()];
    for (i, &c) in cycle.iter().enumerate() {
        on_cycle[c] = i;
    }
    let k = cycle.len();
    let cycle_edge = |x: Vertex, y: Vertex| {
        let (i, j) = (on_cycle[x], on_cycle[y]);
        i != usize::MAX && j != usize::MAX && ((i + 1) % k == j || (j + 1) % k == i)
    };

    let ear = cycle
        .iter()
        .find_map(|&x| {
            adj[x]
                .iter()
                .filter(|&&y| !cycle_edge(x, y))
                .find_map(|&y| ear_from(&adj, &on_cycle, x, y))
        })
        .expect("a block with more edges than vertices has an ear");

    let (x, z) = (ear[0], *ear.last().unwrap());
    let (px, pz) = (on_cycle[x], on_cycle[z]);
    let forward: Vec<Vertex> = (0..=(pz + k - px) % k).map(|s| cycle[(px + s) % k]).collect();
    let backward: Vec<Vertex> = (0..=(px + k - pz) % k).map(|s| cycle[(px + k - s) % k]).collect();

    let mut paths = [ear, forward, backward];
    if x > z {
        for p in &mut paths {
            p.reverse();
        }
    }
    // The middle path is the ear unless a cycle arc is a single edge, which
    // can only serve as the middle.
    let mid = paths.iter().position(|p| p.len() == 2).unwrap_or(0);
    paths.swap(0, mid);
    let [middle, mut s1, mut s2] = paths;
    let interior = |p: &Vec<Vertex>| p[1..p.len() - 1].to_vec();
    if (s2.len(), std::cmp::Reverse(s2[1])) > (s1.len(), std::cmp::Reverse(s1[1])) {
        std::mem::swap(&mut s1, &mut s2);
    }
    ThetaSubdivision {
        u: middle[0],
        v: *middle.last().unwrap(),
        a: interior(&s1),
        xi: interior(&middle),
        b: interior(&s2),
    }
}

/// First cycle found by an iterative DFS from `root`: the tree path closed by
/// the first back edge.
fn dfs_cycle(adj: &[Vec<Vertex>], root: Vertex) -> Vec<Vertex> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[root] = 0;
    let mut stack = vec![(root, 0usize)];
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        let Some(&w) = adj[v].get(*idx) else {
            stack.pop();
            continue;
        };
        *idx += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cyc = vec![v];
            let mut cur = v;
            while cur != w {
                cur = parent[cur];
                cyc.push(cur);
            }
            cyc.reverse();
            return cyc;
        }
    }
    unreachable!("2-connected block with a cycle");
}

/// An ear starting with edge `x-y`: either the chord itself or a BFS path
/// through off-cycle vertices to another cycle vertex.
fn ear_from(adj: &[Vec<Vertex>], on_cycle: &[usize], x: Vertex, y: Vertex) -> Option<Vec<Vertex>> {
    if on_cycle[y] != usize::MAX {
        return Some(vec![x, y]);
    }
    let mut prev = vec![usize::MAX; adj.len()];
    prev[y] = x;
    let mut queue = VecDeque::from([y]);
    while let Some(c) = queue.pop_front() {
        for &d in &adj[c] {
            if d == x || prev[d] != usize::MAX {
                continue;
            }
            if on_cycle[d] != usize::MAX {
                let mut p = vec![d, c];
                let mut cur = c;
                while cur != y {
                    cur = prev[cur];
                    p.push(cur);
                }
                p.push(x);
                p.reverse();
                return Some(p);
            }
            prev[d] = c;
            queue.push_back(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, theta};

    #[test]
    fn diamond_is_theta_121() {
        let (g, _) = theta(1, 2, 1);
        let th = find_theta(&g).unwrap();
        assert_eq!(th.params(), (1, 2, 1));
        assert!(th.validate(&g).is_ok());
    }

    #[test]
    fn cactus_has_no_theta() {
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(find_theta(&bowtie).is_none());
        assert!(find_theta(&cycle(7)).is_none());
    }

    #[test]
    fn k4_theta_validates() {
        let g = complete(4);
        let th = find_theta(&g).unwrap();
        assert!(th.validate(&g).is_ok());
        // four vertices leave room only for the diamond shape
        assert_eq!(th.params(), (1, 2, 1));
    }

    #[test]
    fn longer_side_takes_the_a_role() {
        let (g, _) = theta(1, 4, 5);
        let th = find_theta(&g).unwrap();
        assert!(th.validate(&g).is_ok());
        assert!(th.ell() >= th.n());
        let mut got = [th.ell(), th.m() - 2, th.n()];
        got.sort_unstable();
        assert_eq!(got, [1, 2, 5]);
    }
}

//! Bipartiteness with an odd-cycle certificate.

use std::collections::VecDeque;

use crate::graph::{CyclePath, Graph, Vertex};

/// Either a proper 2-colouring of every component, or an odd cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Coloring(Vec<bool>),
    OddCycle(CyclePath),
}

/// BFS 2-colouring. On the first monochromatic edge `xy` the odd cycle is
/// closed through the lowest common ancestor of `x` and `y` in the BFS tree.
pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.order();
    let mut color = vec![false; n];
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        depth[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    color[y] = !color[x];
                    parent[y] = x;
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return Bipartition::OddCycle(close_cycle(x, y, &parent, &depth));
                }
            }
        }
    }
    Bipartition::Coloring(color)
}

fn close_cycle(x: Vertex, y: Vertex, parent: &[Vertex], depth: &[usize]) -> CyclePath {
    let (mut a, mut b) = (x, y);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    up_b.pop();
    up_a.extend(up_b.into_iter().rev());
    CyclePath::cycle(up_a)
}

pub fn find_odd_cycle(g: &Graph) -> Option<CyclePath> {
    match bipartition(g) {
        Bipartition::OddCycle(c) => Some(c),
        Bipartition::Coloring(_) => None,
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    matches!(bipartition(g), Bipartition::Coloring(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, petersen};

    #[test]
    fn triangle_is_its_own_odd_cycle() {
        let c = find_odd_cycle(&complete(3)).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.validate(&complete(3)).is_ok());
    }

    #[test]
    fn even_cycle_is_bipartite() {
        let g = cycle(6);
        match bipartition(&g) {
            Bipartition::Coloring(col) => {
                assert!(g.edges().iter().all(|&(u, v)| col[u] != col[v]));
            }
            Bipartition::OddCycle(c) => panic!("unexpected odd cycle {c:?}"),
        }
    }

    #[test]
    fn petersen_odd_cycle() {
        let g = petersen();
        let c = find_odd_cycle(&g).unwrap();
        assert!(c.is_odd_cycle());
        assert!(c.validate(&g).is_ok());
        // girth 5, and BFS closes the first conflict at depth 2 on both sides
        assert_eq!(c.len(), 5);
    }
}

//! Graphs up to isomorphism on few vertices.
//!
//! All graphs on `n` vertices arise from graphs on `n - 1` vertices by
//! adding a vertex with an arbitrary neighbourhood. Duplicates are removed
//! with a canonical code: the lexicographically largest upper-triangle
//! adjacency bit string over all vertex orders that refine a degree-based
//! partition, which is isomorphism-invariant.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Largest order the bitmask representation handles.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Dense adjacency as bit rows.
#[derive(Clone)]
struct Bits {
    n: usize,
    rows: Vec<u16>,
}

impl Bits {
    fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    fn from_code(n: usize, code: u64) -> Self {
        let mut rows = vec![0u16; n];
        let pairs = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if code >> (pairs - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Bits { n, rows }
    }

    fn to_graph(&self) -> Graph {
        let edges = (0..self.n).flat_map(|i| (i + 1..self.n).filter(move |&j| self.has(i, j)).map(move |j| (i, j)));
        Graph::new(self.n, edges.collect::<Vec<_>>()).expect("bit rows are simple")
    }

    fn code_under(&self, perm: &[usize]) -> u64 {
        let mut code = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code = code << 1 | u64::from(self.has(perm[i], perm[j]));
            }
        }
        code
    }

    /// Cells of vertices sharing degree and neighbour-degree multiset,
    /// ordered by that invariant.
    fn cells(&self) -> Vec<Vec<usize>> {
        let mut keyed: Vec<((u32, Vec<u32>), usize)> = (0..self.n)
            .map(|v| {
                let mut nd: Vec<u32> = (0..self.n).filter(|&w| self.has(v, w)).map(|w| self.degree(w)).collect();
                nd.sort_unstable();
                ((self.degree(v), nd), v)
            })
            .collect();
        keyed.sort();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for (i, (key, v)) in keyed.iter().enumerate() {
            if i > 0 && keyed[i - 1].0 == *key {
                cells.last_mut().unwrap().push(*v);
            } else {
                cells.push(vec![*v]);
            }
        }
        cells
    }

    fn canonical_code(&self) -> u64 {
        let cells = self.cells();
        let mut perm = Vec::with_capacity(self.n);
        let mut best = 0u64;
        let mut cells = cells;
        best_code(self, &mut cells, 0, &mut perm, &mut best);
        best
    }
}

fn best_code(g: &Bits, cells: &mut [Vec<usize>], c: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if c == cells.len() {
        *best = (*best).max(g.code_under(perm));
        return;
    }
    permute_cell(g, cells, c, 0, perm, best);
}

/// Heap-free recursive permutation of cell `c` from position `k` on.
fn permute_cell(g: &Bits, cells: &mut [Vec<usize>], c: usize, k: usize, perm: &mut Vec<usize>, best: &mut u64) {
    let len = cells[c].len();
    if k == len {
        let before = perm.len();
        perm.extend_from_slice(&cells[c]);
        best_code(g, cells, c + 1, perm, best);
        perm.truncate(before);
        return;
    }
    for i in k..len {
        cells[c].swap(k, i);
        permute_cell(g, cells, c, k + 1, perm, best);
        cells[c].swap(k, i);
    }
}

/// Canonical code of a graph, equal for exactly the isomorphic ones.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.order() <= MAX_ENUMERATION_ORDER, "order above enumeration bound");
    let mut rows = vec![0u16; g.order()];
    for &(u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    Bits { n: g.order(), rows }.canonical_code()
}

/// All graphs on `n` vertices, one per isomorphism class, in canonical
/// code order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    graph_codes(n).into_iter().map(|c| Bits::from_code(n, c).to_graph()).collect()
}

fn graph_codes(n: usize) -> BTreeSet<u64> {
    assert!(n <= MAX_ENUMERATION_ORDER, "order above enumeration bound");
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = Bits::from_code(k, code);
            for mask in 0u16..(1 << k) {
                let mut rows = base.rows.clone();
                rows.push(mask);
                for (v, row) in rows.iter_mut().enumerate().take(k) {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << k;
                    }
                }
                next.insert(Bits { n: k + 1, rows }.canonical_code());
            }
        }
        level = next;
    }
    if n == 0 {
        BTreeSet::new()
    } else {
        level
    }
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};

    #[test]
    fn known_counts() {
        let all: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
        let conn: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let c = cycle(6);
        let shuffled = c.relabel(&[3, 0, 5, 1, 4, 2]);
        assert_eq!(canonical_code(&c), canonical_code(&shuffled));
        assert_ne!(canonical_code(&c), canonical_code(&path(6)));
    }
}

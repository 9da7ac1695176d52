//! Standard graph families and seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex};
use crate::theta::ThetaSubdivision;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::new(a + b, edges).unwrap()
}

/// The cycle `0-1-...-(n-1)-0`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The path `0-1-...-(n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// `C_4` on `0..4` with a pendant vertex `4` hanging off vertex `0`.
pub fn c4_plus_pendant() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap()
}

/// `θ(ℓ, m, n)`: `u = 0`, `v = 1`, then `a_1..a_ℓ`, `ξ_1..ξ_{m-2}`, `b_1..b_n`
/// in consecutive indices.
pub fn theta(l: usize, m: usize, n: usize) -> (Graph, ThetaSubdivision) {
    assert!(l >= 1 && n >= 1 && m >= 2, "theta needs l, n >= 1 and m >= 2");
    let (u, v) = (0, 1);
    let mut next = 2;
    let mut take = |k: usize| {
        let run: Vec<Vertex> = (next..next + k).collect();
        next += k;
        run
    };
    let a = take(l);
    let xi = take(m - 2);
    let b = take(n);
    let mut edges = Vec::new();
    for inner in [&a, &xi, &b] {
        let full: Vec<Vertex> = std::iter::once(u)
            .chain(inner.iter().copied())
            .chain(std::iter::once(v))
            .collect();
        edges.extend(full.windows(2).map(|w| (w[0], w[1])));
    }
    let g = Graph::new(l + m + n, edges).unwrap();
    (g, ThetaSubdivision { u, v, a, xi, b })
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Keeps each edge of `g` independently with probability `p`.
pub fn random_edge_subgraph<R: Rng>(g: &Graph, p: f64, rng: &mut R) -> Graph {
    g.edge_subgraph(|_, _| rng.gen_bool(p))
}

/// A connected cactus on exactly `n` vertices whose blocks are bridges and
/// cycles. With `even_only`, every cycle has even length. Labels are shuffled.
pub fn random_cactus<R: Rng>(n: usize, even_only: bool, rng: &mut R) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let anchor = rng.gen_range(0..count);
        let room = n - count;
        let max_len = room + 1;
        let min_len = if even_only { 4 } else { 3 };
        if max_len >= min_len && rng.gen_bool(0.5) {
            let mut len = rng.gen_range(min_len..=max_len.min(10));
            if even_only && len % 2 == 1 {
                len -= 1;
            }
            let mut prev = anchor;
            for _ in 1..len {
                edges.push((prev, count));
                prev = count;
                count += 1;
            }
            edges.push((prev, anchor));
        } else {
            edges.push((anchor, count));
            count += 1;
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b]))).unwrap()
}

/// A uniformly random labelled tree via a random attachment process.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b]))).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).size(), 10);
        assert_eq!(complete_bipartite(3, 3).size(), 9);
        assert_eq!(petersen().size(), 15);
        assert!(petersen().vertices().all(|v| petersen().degree(v) == 3));
        let (g, th) = theta(4, 6, 4);
        assert_eq!(g.order(), 14);
        assert_eq!(g.size(), 5 + 5 + 5);
        assert!(th.validate(&g).is_ok());
    }

    #[test]
    fn random_cacti_are_connected_with_right_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..40 {
            let g = random_cactus(n, true, &mut rng);
            assert_eq!(g.order(), n);
            assert!(g.is_connected());
        }
    }
}

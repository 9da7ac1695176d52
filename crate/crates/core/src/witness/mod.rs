//! Explicit `K_{3,3}` subdivisions in great shadows.
//!
//! An odd cycle `v_0 v_1 … v_{2k}` yields branch sets `{v_{2k}, v_0, v_1}`
//! and their shadows; seven of the nine pairs are edges of `S(C)` and the
//! other two are joined by paths that alternate between cycle vertices and
//! shadows. A theta whose paths all have the same parity yields a witness
//! from two vertices of its longest side path, one endvertex, and shadows.

mod search;

pub use search::{k33_search, k5_search, SearchBound, SearchError};

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CyclePath, Graph, Vertex};
use crate::recognition::{classify, Verdict};
use crate::shadow::{great_shadow, ShadowGraph, ShadowKind};
use crate::theta::ThetaSubdivision;

/// A subdivided `K_{3,3}`: `paths[3 * i + j]` runs from `delta1[i]` to
/// `delta2[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K33Witness {
    pub delta1: [Vertex; 3],
    pub delta2: [Vertex; 3],
    pub paths: Vec<Vec<Vertex>>,
}

/// A subdivided `K_5`: paths follow the lexicographic order of pairs `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K5Witness {
    pub branches: [Vertex; 5],
    pub paths: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum WitnessViolation {
    #[error("branch vertex {0} listed twice")]
    RepeatedBranch(Vertex),
    #[error("expected {expected} paths, found {found}")]
    PathCount { expected: usize, found: usize },
    #[error("path {index} does not join its branch vertices")]
    BadEndpoints { index: usize },
    #[error("path {index} repeats vertex {vertex}")]
    RepeatedInPath { index: usize, vertex: Vertex },
    #[error("path {index}: {from}-{to} is not an edge")]
    NotAnEdge { index: usize, from: Vertex, to: Vertex },
    #[error("internal vertex {vertex} is a branch vertex")]
    InternalBranch { vertex: Vertex },
    #[error("internal vertex {vertex} shared by two paths")]
    SharedInternal { vertex: Vertex },
}

fn validate_subdivision(
    host: &Graph,
    branches: &[Vertex],
    pairs: &[(Vertex, Vertex)],
    paths: &[Vec<Vertex>],
) -> Result<(), WitnessViolation> {
    let mut seen = HashSet::new();
    for &b in branches {
        if !seen.insert(b) {
            return Err(WitnessViolation::RepeatedBranch(b));
        }
    }
    if paths.len() != pairs.len() {
        return Err(WitnessViolation::PathCount {
            expected: pairs.len(),
            found: paths.len(),
        });
    }
    let mut internal = HashSet::new();
    for (index, (path, &(s, t))) in paths.iter().zip(pairs).enumerate() {
        if path.len() < 2 || path[0] != s || path[path.len() - 1] != t {
            return Err(WitnessViolation::BadEndpoints { index });
        }
        let mut local = HashSet::new();
        for &x in path {
            if !local.insert(x) {
                return Err(WitnessViolation::RepeatedInPath { index, vertex: x });
            }
        }
        for w in path.windows(2) {
            if !host.has_edge(w[0], w[1]) {
                return Err(WitnessViolation::NotAnEdge {
                    index,
                    from: w[0],
                    to: w[1],
                });
            }
        }
        for &x in &path[1..path.len() - 1] {
            if seen.contains(&x) {
                return Err(WitnessViolation::InternalBranch { vertex: x });
            }
            if !internal.insert(x) {
                return Err(WitnessViolation::SharedInternal { vertex: x });
            }
        }
    }
    Ok(())
}

impl K33Witness {
    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.delta1
            .iter()
            .flat_map(|&a| self.delta2.iter().map(move |&b| (a, b)))
            .collect()
    }

    pub fn path(&self, i: usize, j: usize) -> &[Vertex] {
        &self.paths[3 * i + j]
    }

    pub fn check(&self, host: &Graph) -> Result<(), WitnessViolation> {
        let branches: Vec<Vertex> = self.delta1.iter().chain(&self.delta2).copied().collect();
        validate_subdivision(host, &branches, &self.pairs(), &self.paths)
    }

    /// Applies a vertex map to every branch vertex and path.
    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> K33Witness {
        K33Witness {
            delta1: self.delta1.map(&f),
            delta2: self.delta2.map(&f),
            paths: self.paths.iter().map(|p| p.iter().map(|&x| f(x)).collect()).collect(),
        }
    }
}

impl K5Witness {
    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        let b = self.branches;
        (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (b[i], b[j])))
            .collect()
    }

    pub fn check(&self, host: &Graph) -> Result<(), WitnessViolation> {
        validate_subdivision(host, &self.branches, &self.pairs(), &self.paths)
    }
}

/// Boolean form of [`K33Witness::check`].
pub fn validate_k33(host: &Graph, w: &K33Witness) -> bool {
    w.check(host).is_ok()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("witness constructions need a great shadow")]
    NotGreatShadow,
    #[error("cycle has even length {0}")]
    EvenCycle(usize),
    #[error("cycle needs at least three vertices")]
    TooShort,
    #[error("cycle is not a cycle of the original graph")]
    CycleNotInHost,
    #[error("theta is not a subgraph of the original graph")]
    ThetaNotInHost,
    #[error("theta({0}, {1}, {2}) mixes parities and contains an odd cycle")]
    MixedParity(usize, usize, usize),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("exhaustive search found no K3,3 subdivision")]
    NotFound,
}

fn original_graph(sg: &ShadowGraph) -> Graph {
    let n = sg.original_order;
    sg.graph.induced_subgraph(&(0..n).collect::<Vec<_>>()).0
}

/// Pairs `v_i` with its shadow on one parity of `i` and the original on the
/// other, for an index range walked in the given order.
fn alternate(
    sg: &ShadowGraph,
    seq: &[Vertex],
    indices: impl Iterator<Item = usize>,
    shadow_when_odd: bool,
) -> Vec<Vertex> {
    indices
        .map(|i| {
            let x = seq[i - 1];
            if (i % 2 == 1) == shadow_when_odd {
                sg.shadow_of(x)
            } else {
                x
            }
        })
        .collect()
}

/// `K_{3,3}` in `S(G)` from an odd cycle `c = v_0 … v_{2k}` of `G`, with
/// `Δ_1 = {u, v, w} = {v_{2k}, v_0, v_1}` and `Δ_2` their shadows.
pub fn k33_from_odd_cycle(sg: &ShadowGraph, c: &CyclePath) -> Result<K33Witness, WitnessError> {
    if sg.kind != ShadowKind::GreatShadow {
        return Err(WitnessError::NotGreatShadow);
    }
    let len = c.len();
    if len < 3 {
        return Err(WitnessError::TooShort);
    }
    if len.is_multiple_of(2) {
        return Err(WitnessError::EvenCycle(len));
    }
    if !c.closed || c.validate(&original_graph(sg)).is_err() {
        return Err(WitnessError::CycleNotInHost);
    }
    let cyc = &c.vertices;
    let two_k = len - 1;
    let (u, v, w) = (cyc[two_k], cyc[0], cyc[1]);
    let s = |x| sg.shadow_of(x);
    // P1 = v_1, v'_2, v_3, …, v'_{2k} from w to u'
    let p1: Vec<Vertex> = (1..=two_k)
        .map(|i| if i % 2 == 1 { cyc[i] } else { s(cyc[i]) })
        .collect();
    // P2 = v'_1, v_2, v'_3, …, v_{2k} from w' to u
    let mut p2: Vec<Vertex> = (1..=two_k)
        .map(|i| if i % 2 == 1 { s(cyc[i]) } else { cyc[i] })
        .collect();
    p2.reverse();
    let paths = vec![
        vec![u, s(u)],
        vec![u, s(v)],
        p2,
        vec![v, s(u)],
        vec![v, s(v)],
        vec![v, s(w)],
        p1,
        vec![w, s(v)],
        vec![w, s(w)],
    ];
    Ok(K33Witness {
        delta1: [u, v, w],
        delta2: [s(u), s(v), s(w)],
        paths,
    })
}

/// `K_{3,3}` in `S(G)` from a theta of `G` whose three paths share a parity.
///
/// When all three parameters are odd the construction needs `ℓ >= 3`; the
/// side paths are swapped if only `n` is long enough, and `θ(1, m, 1)` falls
/// back to exhaustive search inside `S(θ)`.
pub fn k33_from_theta(sg: &ShadowGraph, th: &ThetaSubdivision) -> Result<K33Witness, WitnessError> {
    if sg.kind != ShadowKind::GreatShadow {
        return Err(WitnessError::NotGreatShadow);
    }
    if th.validate(&original_graph(sg)).is_err() {
        return Err(WitnessError::ThetaNotInHost);
    }
    let (l, m, n) = th.params();
    if l % 2 != m % 2 || m % 2 != n % 2 {
        return Err(WitnessError::MixedParity(l, m, n));
    }
    let mut th = th.clone();
    if l % 2 == 1 && l < 3 {
        if n >= 3 {
            th.swap_sides();
        } else {
            return theta_fallback(sg, &th);
        }
    }
    Ok(if l % 2 == 0 { even_theta(sg, &th) } else { odd_theta(sg, &th) })
}

fn even_theta(sg: &ShadowGraph, th: &ThetaSubdivision) -> K33Witness {
    let s = |x| sg.shadow_of(x);
    let (u, v, a, xi, b) = (th.u, th.v, &th.a, &th.xi, &th.b);
    let l = a.len();
    let (a1, a2) = (a[0], a[1]);

    // P_{u'v} = u', ξ_1, ξ'_2, …, v
    let mut p_up_v = vec![s(u)];
    p_up_v.extend(alternate(sg, xi, 1..=xi.len(), false));
    p_up_v.push(v);
    // P_{a'_1 v} = a'_1, u, ξ'_1, ξ_2, …, v
    let mut p_a1p_v = vec![s(a1), u];
    p_a1p_v.extend(alternate(sg, xi, 1..=xi.len(), true));
    p_a1p_v.push(v);
    // P_{a'_2 v} = a'_2, a_3, a'_4, …, a'_ℓ, v
    let mut p_a2p_v = vec![s(a2)];
    p_a2p_v.extend(alternate(sg, a, 3..=l, false));
    p_a2p_v.push(v);
    // P_{u'a_2} = u', b_1, …, b_n, v', a_ℓ, a'_{ℓ-1}, …, a'_3, a_2
    let mut p_up_a2 = vec![s(u)];
    p_up_a2.extend(b.iter().copied());
    p_up_a2.push(s(v));
    p_up_a2.extend(alternate(sg, a, (3..=l).rev(), true));
    p_up_a2.push(a2);

    let rev = |mut p: Vec<Vertex>| {
        p.reverse();
        p
    };
    K33Witness {
        delta1: [a1, a2, v],
        delta2: [s(a1), s(a2), s(u)],
        paths: vec![
            vec![a1, s(a1)],
            vec![a1, s(a2)],
            vec![a1, s(u)],
            vec![a2, s(a1)],
            vec![a2, s(a2)],
            rev(p_up_a2),
            rev(p_a1p_v),
            rev(p_a2p_v),
            rev(p_up_v),
        ],
    }
}

fn odd_theta(sg: &ShadowGraph, th: &ThetaSubdivision) -> K33Witness {
    let s = |x| sg.shadow_of(x);
    let (u, v, a, xi, b) = (th.u, th.v, &th.a, &th.xi, &th.b);
    let l = a.len();
    let (a1, a2) = (a[0], a[1]);

    // P_{uv} = u, ξ'_1, ξ_2, …, v
    let mut p_u_v = vec![u];
    p_u_v.extend(alternate(sg, xi, 1..=xi.len(), true));
    p_u_v.push(v);
    // P_{a_1 v} = a_1, u', ξ_1, ξ'_2, …, v
    let mut p_a1_v = vec![a1, s(u)];
    p_a1_v.extend(alternate(sg, xi, 1..=xi.len(), false));
    p_a1_v.push(v);
    // P_{a_2 v} = a_2, a'_3, a_4, …, a'_ℓ, v
    let mut p_a2_v = vec![a2];
    p_a2_v.extend(alternate(sg, a, 3..=l, true));
    p_a2_v.push(v);
    // P_{u a'_2} = u, b_1, …, b_n, v', a_ℓ, a'_{ℓ-1}, …, a_3, a'_2
    let mut p_u_a2p = vec![u];
    p_u_a2p.extend(b.iter().copied());
    p_u_a2p.push(s(v));
    p_u_a2p.extend(alternate(sg, a, (3..=l).rev(), false));
    p_u_a2p.push(s(a2));

    K33Witness {
        delta1: [a1, a2, u],
        delta2: [s(a1), s(a2), v],
        paths: vec![
            vec![a1, s(a1)],
            vec![a1, s(a2)],
            p_a1_v,
            vec![a2, s(a1)],
            vec![a2, s(a2)],
            p_a2_v,
            vec![u, s(a1)],
            p_u_a2p,
            p_u_v,
        ],
    }
}

/// Exhaustive search in `S(θ)`, mapped back into `sg`.
fn theta_fallback(sg: &ShadowGraph, th: &ThetaSubdivision) -> Result<K33Witness, WitnessError> {
    let (local, verts) = th.subgraph();
    let k = verts.len();
    let shadow = great_shadow(&local);
    let found = k33_search(&shadow.graph, SearchBound::default())?.ok_or(WitnessError::NotFound)?;
    Ok(found.map_vertices(|x| if x < k { verts[x] } else { sg.shadow_of(verts[x - k]) }))
}

/// A `K_{3,3}` in `S(G)` when `G` is not a bipartite cactus, built from the
/// certificate `classify` returns.
pub fn shadow_witness(g: &Graph) -> Result<Option<K33Witness>, WitnessError> {
    let sg = great_shadow(g);
    match classify(g) {
        Verdict::BipartiteCactus { .. } => Ok(None),
        Verdict::NotBipartite { odd_cycle } => k33_from_odd_cycle(&sg, &odd_cycle).map(Some),
        Verdict::NotCactus { theta } => k33_from_theta(&sg, &theta).map(Some),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, theta};

    #[test]
    fn triangle_witness_is_the_k33_of_s_k3() {
        let g = complete(3);
        let sg = great_shadow(&g);
        let c = CyclePath::cycle(vec![0, 1, 2]);
        let w = k33_from_odd_cycle(&sg, &c).unwrap();
        assert_eq!(w.delta1, [2, 0, 1]);
        assert_eq!(w.delta2, [5, 3, 4]);
        assert!(w.paths.iter().all(|p| p.len() == 2));
        assert!(validate_k33(&sg.graph, &w));
    }

    #[test]
    fn five_cycle_paths_have_three_edges() {
        let g = cycle(5);
        let sg = great_shadow(&g);
        let w = k33_from_odd_cycle(&sg, &CyclePath::cycle(vec![0, 1, 2, 3, 4])).unwrap();
        assert!(validate_k33(&sg.graph, &w));
        // P1 = v1, v'2, v3, v'4 ; P2 (reversed) = v4, v'3, v2, v'1
        assert_eq!(w.path(2, 0), &[1, 7, 3, 9]);
        assert_eq!(w.path(0, 2), &[4, 8, 2, 6]);
    }

    #[test]
    fn even_cycle_rejected() {
        let sg = great_shadow(&cycle(4));
        assert_eq!(
            k33_from_odd_cycle(&sg, &CyclePath::cycle(vec![0, 1, 2, 3])),
            Err(WitnessError::EvenCycle(4))
        );
    }

    #[test]
    fn theta_cases_validate() {
        for (l, m, n) in [(4, 6, 4), (5, 7, 3), (2, 2, 2), (3, 3, 1), (1, 3, 3)] {
            let (g, th) = theta(l, m, n);
            let sg = great_shadow(&g);
            let w = k33_from_theta(&sg, &th).unwrap();
            assert_eq!(w.check(&sg.graph), Ok(()), "theta({l},{m},{n})");
        }
    }

    #[test]
    fn theta_121_style_falls_back_to_search() {
        let (g, th) = theta(1, 3, 1);
        let sg = great_shadow(&g);
        let w = k33_from_theta(&sg, &th).unwrap();
        assert!(validate_k33(&sg.graph, &w));
    }

    #[test]
    fn mixed_parity_rejected() {
        let (g, th) = theta(2, 3, 2);
        let sg = great_shadow(&g);
        assert_eq!(k33_from_theta(&sg, &th), Err(WitnessError::MixedParity(2, 3, 2)));
    }

    #[test]
    fn validator_catches_broken_witnesses() {
        let sg = great_shadow(&cycle(5));
        let good = k33_from_odd_cycle(&sg, &CyclePath::cycle(vec![0, 1, 2, 3, 4])).unwrap();
        let mut shared = good.clone();
        // route the v-v' pair through an internal vertex of P1
        shared.paths[4] = vec![0, 7, 3, 9, 4, 5];
        assert!(!validate_k33(&sg.graph, &shared));
        let mut non_edge = good.clone();
        non_edge.paths[0] = vec![4, 1, 9];
        assert!(matches!(
            non_edge.check(&sg.graph),
            Err(WitnessViolation::NotAnEdge { .. })
        ));
    }
}

//! Independent planarity oracle and the exhaustive equivalence sweep.
//!
//! Nothing here calls recognition, witness construction or embedding code;
//! the sweep compares the oracle against `classify` from the outside.

mod enumerate;
mod lr;

pub use enumerate::{all_graphs, canonical_code, connected_graphs, MAX_ENUMERATION_ORDER};
pub use lr::is_planar;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::io::to_graph6;
use crate::recognition::classify;
use crate::shadow::great_shadow;
use crate::witness::{K33Witness, K5Witness};

/// Default bound on `max_n` for the sweep.
pub const DEFAULT_SWEEP_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {order} vertices, bound is {max}")]
    BoundExceeded { order: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Kuratowski {
    K33(K33Witness),
    K5(K5Witness),
}

/// Follows a path from branch vertex `b` through `first` to the next
/// branch vertex.
fn trace(h: &Graph, is_branch: &[bool], b: Vertex, first: Vertex) -> Vec<Vertex> {
    let mut path = vec![b, first];
    let (mut prev, mut cur) = (b, first);
    while !is_branch[cur] {
        let next = h.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree two");
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// A Kuratowski subdivision from an edge-minimal non-planar subgraph, or
/// `None` for planar input.
pub fn kuratowski_witness(g: &Graph, max_vertices: usize) -> Result<Option<Kuratowski>, OracleError> {
    if g.order() > max_vertices {
        return Err(OracleError::BoundExceeded {
            order: g.order(),
            max: max_vertices,
        });
    }
    if is_planar(g) {
        return Ok(None);
    }
    let mut keep: Vec<(Vertex, Vertex)> = g.edges().to_vec();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if is_planar(&Graph::new(g.order(), trial.iter().copied()).expect("subset of edges")) {
            i += 1;
        } else {
            keep = trial;
        }
    }
    let h = Graph::new(g.order(), keep).expect("subset of edges");
    let branch: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) >= 3).collect();
    let mut is_branch = vec![false; h.order()];
    for &b in &branch {
        is_branch[b] = true;
    }
    // (branch, branch) -> path, each path once from its smaller end
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    for &b in &branch {
        for &w in h.neighbors(b) {
            let p = trace(&h, &is_branch, b, w);
            if b < *p.last().unwrap() {
                paths.push(p);
            }
        }
    }
    let find = |s: Vertex, t: Vertex| -> Vec<Vertex> {
        paths
            .iter()
            .find_map(|p| {
                if p[0] == s && p[p.len() - 1] == t {
                    Some(p.clone())
                } else if p[0] == t && p[p.len() - 1] == s {
                    Some(p.iter().rev().copied().collect())
                } else {
                    None
                }
            })
            .expect("branch vertices are joined")
    };
    let witness = if branch.len() == 5 {
        let b = [branch[0], branch[1], branch[2], branch[3], branch[4]];
        let paths = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).map(|(i, j)| find(b[i], b[j])).collect();
        Kuratowski::K5(K5Witness { branches: b, paths })
    } else {
        let joined = |s: Vertex, t: Vertex| paths.iter().any(|p| (p[0], p[p.len() - 1]) == (s.min(t), s.max(t)));
        let (d1, d2): (Vec<Vertex>, Vec<Vertex>) = branch.iter().partition(|&&x| x == branch[0] || !joined(branch[0], x));
        let delta1 = [d1[0], d1[1], d1[2]];
        let delta2 = [d2[0], d2[1], d2[2]];
        let paths = delta1.iter().flat_map(|&a| delta2.iter().map(move |&b| (a, b))).map(|(a, b)| find(a, b)).collect();
        Kuratowski::K33(K33Witness { delta1, delta2, paths })
    };
    Ok(Some(witness))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub order: usize,
    pub graphs: usize,
    pub bipartite_cacti: usize,
    pub planar_shadows: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub graph6: String,
    pub oracle_planar: bool,
    pub bipartite_cactus: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub graphs_checked: usize,
    pub per_order: Vec<OrderCounts>,
    pub discrepancies: Vec<Discrepancy>,
    pub edge_law_violations: Vec<String>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty() && self.edge_law_violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("max_n = {max_n} exceeds the sweep limit {limit}")]
    TooLarge { max_n: usize, limit: usize },
}

struct Check {
    order: usize,
    planar: bool,
    cactus: bool,
    edge_law: bool,
    graph6: String,
}

fn check(g: &Graph) -> Check {
    let s = great_shadow(g);
    Check {
        order: g.order(),
        planar: is_planar(&s.graph),
        cactus: classify(g).is_bipartite_cactus(),
        edge_law: s.graph.order() == 2 * g.order() && s.graph.size() == 3 * g.size() + g.order(),
        graph6: to_graph6(g),
    }
}

#[cfg(feature = "parallel")]
fn check_all(graphs: &[Graph]) -> Vec<Check> {
    use rayon::prelude::*;
    graphs.par_iter().map(check).collect()
}

#[cfg(not(feature = "parallel"))]
fn check_all(graphs: &[Graph]) -> Vec<Check> {
    graphs.iter().map(check).collect()
}

/// Compares oracle planarity of `S(G)` with the bipartite-cactus verdict on
/// every given graph. Discrepancies are sorted by order, then graph6.
pub fn sweep_graphs(graphs: &[Graph]) -> SweepReport {
    let checks = check_all(graphs);
    let mut per_order: Vec<OrderCounts> = Vec::new();
    let mut discrepancies = Vec::new();
    let mut edge_law_violations = Vec::new();
    for c in &checks {
        let slot = match per_order.iter().position(|o| o.order == c.order) {
            Some(i) => i,
            None => {
                per_order.push(OrderCounts {
                    order: c.order,
                    graphs: 0,
                    bipartite_cacti: 0,
                    planar_shadows: 0,
                });
                per_order.len() - 1
            }
        };
        let o = &mut per_order[slot];
        o.graphs += 1;
        o.bipartite_cacti += usize::from(c.cactus);
        o.planar_shadows += usize::from(c.planar);
        if c.planar != c.cactus {
            discrepancies.push((c.order, Discrepancy {
                graph6: c.graph6.clone(),
                oracle_planar: c.planar,
                bipartite_cactus: c.cactus,
            }));
        }
        if !c.edge_law {
            edge_law_violations.push(c.graph6.clone());
        }
    }
    per_order.sort_by_key(|o| o.order);
    discrepancies.sort_by(|a, b| (a.0, &a.1.graph6).cmp(&(b.0, &b.1.graph6)));
    edge_law_violations.sort();
    SweepReport {
        graphs_checked: checks.len(),
        per_order,
        discrepancies: discrepancies.into_iter().map(|(_, d)| d).collect(),
        edge_law_violations,
    }
}

/// Sweep over every connected graph on `1..=max_n` vertices.
pub fn equivalence_sweep(max_n: usize, limit: usize) -> Result<SweepReport, SweepError> {
    let limit = limit.min(MAX_ENUMERATION_ORDER);
    if max_n > limit {
        return Err(SweepError::TooLarge { max_n, limit });
    }
    let graphs: Vec<Graph> = (1..=max_n).flat_map(connected_graphs).collect();
    Ok(sweep_graphs(&graphs))
}

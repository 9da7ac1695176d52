//! Combinatorial planar embeddings of great shadows and their drawings.
//!
//! The certificate is a [`RotationSystem`]: a cyclic neighbour order at every
//! vertex, an outer face, and the Euler identity `n - m + f = 2` per
//! component. Geometry only appears when a drawing is rendered.

mod fpp;
mod glue;
mod layout;
mod render;

pub use glue::{embed_shadow, glue_bridge, glue_shared_edge};
pub use layout::{draw_even_cycle_shadow, CircularLayout, LayoutOptions};
pub use render::{render, render_shadow, segments_cross, Drawing, Polyline, RenderError};

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// A directed edge `(tail, head)`.
pub type Dart = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation at {0} lists {1} but not the other way round")]
    Asymmetric(Vertex, Vertex),
    #[error("rotation at {0} repeats a neighbour")]
    RepeatedNeighbour(Vertex),
    #[error("edge {0}-{1} is not in the embedding")]
    MissingEdge(Vertex, Vertex),
    #[error("edge {0}-{1} is not on the outer face")]
    NotExposed(Vertex, Vertex),
    #[error("pieces overlap in vertex {0}")]
    Overlap(Vertex),
    #[error("even-cycle layouts need an even cycle of order at least 4, got {0}")]
    BadCycleOrder(usize),
    #[error("radii must satisfy 0 < d_in < 1 < d_out")]
    BadRadius,
    #[error("graph is not a bipartite cactus")]
    NotBipartiteCactus,
    #[error("Euler check failed on the component of {root}: n={n} m={m} f={f}")]
    Euler { root: Vertex, n: usize, m: usize, f: usize },
}

/// Cyclic neighbour orders plus an outer face given by one of its darts.
///
/// Faces are traced with `(x, y) -> (y, succ_y(x))`, where `succ_y` is the
/// next entry of `y`'s rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: BTreeMap<Vertex, Vec<Vertex>>,
    outer: Option<Dart>,
}

impl RotationSystem {
    /// Checks that every edge appears at both ends exactly once. The outer
    /// dart defaults to the smallest one.
    pub fn new(
        rotation: BTreeMap<Vertex, Vec<Vertex>>,
        outer: Option<Dart>,
    ) -> Result<Self, EmbeddingError> {
        for (&x, nbrs) in &rotation {
            let distinct: BTreeSet<_> = nbrs.iter().collect();
            if distinct.len() != nbrs.len() {
                return Err(EmbeddingError::RepeatedNeighbour(x));
            }
            for &y in nbrs {
                if !rotation.get(&y).is_some_and(|r| r.contains(&x)) {
                    return Err(EmbeddingError::Asymmetric(x, y));
                }
            }
        }
        let mut rs = RotationSystem { rotation, outer: None };
        rs.outer = match outer {
            Some((x, y)) if rs.has_edge(x, y) => Some((x, y)),
            Some((x, y)) => return Err(EmbeddingError::MissingEdge(x, y)),
            None => rs.darts().next(),
        };
        Ok(rs)
    }

    pub(crate) fn from_parts(rotation: BTreeMap<Vertex, Vec<Vertex>>, outer: Option<Dart>) -> Self {
        let rs = RotationSystem { rotation, outer };
        debug_assert!(RotationSystem::new(rs.rotation.clone(), rs.outer).is_ok());
        rs
    }

    /// The embedding of a single edge, `S(K_1)`.
    pub fn edge(x: Vertex, y: Vertex) -> Self {
        RotationSystem {
            rotation: BTreeMap::from([(x, vec![y]), (y, vec![x])]),
            outer: Some((x, y)),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.rotation.keys().copied()
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.rotation.contains_key(&x)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, x: Vertex) -> &[Vertex] {
        self.rotation.get(&x).map_or(&[], Vec::as_slice)
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        self.rotation(x).contains(&y)
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut e: Vec<_> = self.darts().filter(|&(x, y)| x < y).collect();
        e.sort_unstable();
        e
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.rotation
            .iter()
            .flat_map(|(&x, nbrs)| nbrs.iter().map(move |&y| (x, y)))
    }

    /// Neighbour after `from` in the rotation at `at`.
    pub fn succ(&self, at: Vertex, from: Vertex) -> Vertex {
        let r = &self.rotation[&at];
        let i = r.iter().position(|&y| y == from).expect("dart in rotation");
        r[(i + 1) % r.len()]
    }

    pub fn next_dart(&self, (x, y): Dart) -> Dart {
        (y, self.succ(y, x))
    }

    /// The face walk starting at `d`.
    pub fn face_of(&self, d: Dart) -> Vec<Dart> {
        let mut face = vec![d];
        let mut cur = self.next_dart(d);
        while cur != d {
            face.push(cur);
            cur = self.next_dart(cur);
        }
        face
    }

    /// All faces, each starting at its smallest dart, in dart order.
    /// Isolated vertices contribute no walk.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = BTreeSet::new();
        let mut faces = Vec::new();
        for d in self.darts() {
            if seen.contains(&d) {
                continue;
            }
            let face = self.face_of(d);
            seen.extend(face.iter().copied());
            faces.push(face);
        }
        faces
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer
    }

    pub fn outer_face(&self) -> Vec<Dart> {
        self.outer.map(|d| self.face_of(d)).unwrap_or_default()
    }

    pub fn on_outer_face(&self, d: Dart) -> bool {
        self.outer_face().contains(&d)
    }

    /// Connected components as sorted vertex lists, ordered by first vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for x in self.vertices() {
            if !seen.insert(x) {
                continue;
            }
            let mut comp = vec![x];
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for &z in self.rotation(y) {
                    if seen.insert(z) {
                        comp.push(z);
                        stack.push(z);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// `n - m + f = 2` on every component; an isolated vertex has one face.
    pub fn euler_check(&self) -> Result<(), EmbeddingError> {
        let mut face_count: HashMap<Vertex, usize> = HashMap::new();
        let comps = self.components();
        let mut root_of = HashMap::new();
        for c in &comps {
            for &x in c {
                root_of.insert(x, c[0]);
            }
        }
        for f in self.faces() {
            *face_count.entry(root_of[&f[0].0]).or_default() += 1;
        }
        for c in &comps {
            let n = c.len();
            let m = c.iter().map(|&x| self.rotation(x).len()).sum::<usize>() / 2;
            let f = if m == 0 { 1 } else { face_count[&c[0]] };
            if n + f != m + 2 {
                return Err(EmbeddingError::Euler { root: c[0], n, m, f });
            }
        }
        Ok(())
    }

    /// Redesignates the outer face to one containing `x-y`: the current
    /// outer face if it already does, otherwise the face of the dart `(x, y)`.
    pub fn expose_edge(&self, x: Vertex, y: Vertex) -> Result<Self, EmbeddingError> {
        if !self.has_edge(x, y) {
            return Err(EmbeddingError::MissingEdge(x, y));
        }
        let outer = self.outer_face();
        let mut rs = self.clone();
        if !outer.contains(&(x, y)) && !outer.contains(&(y, x)) {
            rs.outer = Some((x, y));
        }
        Ok(rs)
    }

    /// The reflected embedding: every rotation reversed, so every face walk
    /// is reversed too.
    pub fn mirror(&self) -> Self {
        RotationSystem {
            rotation: self
                .rotation
                .iter()
                .map(|(&x, r)| (x, r.iter().rev().copied().collect()))
                .collect(),
            outer: self.outer.map(|(x, y)| (y, x)),
        }
    }

    /// Union of two embeddings on disjoint vertex sets; keeps `self`'s outer
    /// face.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self, EmbeddingError> {
        if let Some(x) = other.vertices().find(|&x| self.contains(x)) {
            return Err(EmbeddingError::Overlap(x));
        }
        let mut rotation = self.rotation.clone();
        rotation.extend(other.rotation.iter().map(|(&x, r)| (x, r.clone())));
        Ok(RotationSystem {
            rotation,
            outer: self.outer.or(other.outer),
        })
    }

    /// The underlying graph; vertices must be exactly `0..vertex_count()`.
    pub fn to_graph(&self) -> Option<Graph> {
        let n = self.vertex_count();
        if self.rotation.keys().enumerate().any(|(i, &x)| i != x) {
            return None;
        }
        Graph::new(n, self.edges()).ok()
    }

    pub(crate) fn rotation_map(&self) -> &BTreeMap<Vertex, Vec<Vertex>> {
        &self.rotation
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            vertices: self
                .rotation
                .iter()
                .map(|(&id, r)| VertexRotation {
                    id,
                    rotation: r.clone(),
                })
                .collect(),
            outer_face: self.outer_face(),
            face_count: self.faces().len(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexRotation {
    pub id: Vertex,
    pub rotation: Vec<Vertex>,
}

/// Serialized form: per-vertex cyclic order and the outer face walk.
#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingJson {
    pub vertices: Vec<VertexRotation>,
    pub outer_face: Vec<Dart>,
    pub face_count: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> RotationSystem {
        // 0 in the middle of triangle 1-2-3
        RotationSystem::new(
            BTreeMap::from([
                (0, vec![1, 2, 3]),
                (1, vec![0, 3, 2]),
                (2, vec![0, 1, 3]),
                (3, vec![0, 2, 1]),
            ]),
            None,
        )
        .unwrap()
    }

    #[test]
    fn k4_has_four_triangular_faces() {
        let rs = k4();
        let faces = rs.faces();
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert!(rs.euler_check().is_ok());
        assert_eq!(rs.to_graph().unwrap().size(), 6);
    }

    #[test]
    fn twisted_rotation_fails_euler() {
        let bad = RotationSystem::new(
            BTreeMap::from([
                (0, vec![1, 2, 3]),
                (1, vec![0, 2, 3]),
                (2, vec![0, 1, 3]),
                (3, vec![0, 1, 2]),
            ]),
            None,
        )
        .unwrap();
        assert!(matches!(bad.euler_check(), Err(EmbeddingError::Euler { .. })));
    }

    #[test]
    fn asymmetric_rotation_rejected() {
        let r = BTreeMap::from([(0, vec![1]), (1, vec![])]);
        assert_eq!(RotationSystem::new(r, None), Err(EmbeddingError::Asymmetric(0, 1)));
    }

    #[test]
    fn expose_and_mirror() {
        let rs = k4();
        let outer = rs.outer_face();
        let (x, y) = outer[0];
        assert_eq!(rs.expose_edge(x, y).unwrap(), rs);
        let (p, q) = rs
            .edges()
            .into_iter()
            .find(|&(p, q)| !outer.contains(&(p, q)) && !outer.contains(&(q, p)))
            .unwrap();
        let moved = rs.expose_edge(p, q).unwrap();
        assert!(moved.on_outer_face((p, q)));
        assert_eq!(moved.faces().len(), rs.faces().len());
        assert_eq!(rs.expose_edge(0, 9), Err(EmbeddingError::MissingEdge(0, 9)));

        let m = rs.mirror();
        assert!(m.euler_check().is_ok());
        assert!(m.on_outer_face((y, x)));
    }

    #[test]
    fn single_edge_and_isolated_vertex() {
        let e = RotationSystem::edge(0, 1);
        assert_eq!(e.faces().len(), 1);
        assert!(e.euler_check().is_ok());
        let iso = RotationSystem::new(BTreeMap::from([(5, vec![])]), None).unwrap();
        assert!(iso.euler_check().is_ok());
        assert!(e.disjoint_union(&iso).unwrap().euler_check().is_ok());
        assert_eq!(e.disjoint_union(&e), Err(EmbeddingError::Overlap(0)));
    }
}

//! Circular layout of the great shadow of an even cycle.
//!
//! The cycle sits on the unit circle with uniform angles. Numbering the
//! cycle `v_1 … v_{2k}`, shadows of odd-indexed vertices go outside at
//! distance `d_out` and shadows of even-indexed ones inside at `d_in`, each
//! on the ray through its original.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::{EmbeddingError, RotationSystem};
use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LayoutOptions {
    pub d_in: f64,
    pub d_out: f64,
}

impl Default for LayoutOptions {
    fn default() -> Self {
        LayoutOptions { d_in: 0.5, d_out: 1.5 }
    }
}

impl LayoutOptions {
    fn check(&self) -> Result<(), EmbeddingError> {
        let ok = self.d_in > 0.0 && self.d_in < 1.0 && self.d_out > 1.0 && self.d_out.is_finite();
        if ok {
            Ok(())
        } else {
            Err(EmbeddingError::BadRadius)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CircularLayout {
    pub center: (f64, f64),
    pub options: LayoutOptions,
    /// Cycle vertices in cyclic order; `cycle[0]` is `v_1`.
    pub cycle: Vec<Vertex>,
    /// `shadows[i]` is the shadow of `cycle[i]`.
    pub shadows: Vec<Vertex>,
    pub positions: BTreeMap<Vertex, (f64, f64)>,
    pub edges: Vec<(Vertex, Vertex)>,
}

/// Layout of `S(C_{2k})` on the labels of `great_shadow(cycle(2k))`:
/// cycle vertices `0..2k`, shadows `2k..4k`.
pub fn draw_even_cycle_shadow(
    cycle_order: usize,
    options: LayoutOptions,
) -> Result<CircularLayout, EmbeddingError> {
    let cycle: Vec<Vertex> = (0..cycle_order).collect();
    let shadows: Vec<Vertex> = (cycle_order..2 * cycle_order).collect();
    CircularLayout::with_labels(&cycle, &shadows, options)
}

impl CircularLayout {
    pub fn with_labels(
        cycle: &[Vertex],
        shadows: &[Vertex],
        options: LayoutOptions,
    ) -> Result<Self, EmbeddingError> {
        let len = cycle.len();
        if len < 4 || len % 2 == 1 || shadows.len() != len {
            return Err(EmbeddingError::BadCycleOrder(len));
        }
        options.check()?;
        let mut positions = BTreeMap::new();
        let mut edges = Vec::with_capacity(4 * len);
        for i in 0..len {
            let angle = TAU * i as f64 / len as f64;
            let (s, c) = angle.sin_cos();
            // index i is v_{i+1}; odd paper indices put the shadow outside
            let r = if i % 2 == 0 { options.d_out } else { options.d_in };
            positions.insert(cycle[i], (c, s));
            positions.insert(shadows[i], (r * c, r * s));
            let next = (i + 1) % len;
            let prev = (i + len - 1) % len;
            edges.push(ordered(cycle[i], cycle[next]));
            edges.push(ordered(cycle[i], shadows[i]));
            edges.push(ordered(shadows[i], cycle[next]));
            edges.push(ordered(shadows[i], cycle[prev]));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(CircularLayout {
            center: (0.0, 0.0),
            options,
            cycle: cycle.to_vec(),
            shadows: shadows.to_vec(),
            positions,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Rotation system induced by the layout: neighbours sorted by angle.
    /// The outer face is the unbounded one, through `v'_1 v_2`.
    pub fn rotation_system(&self) -> RotationSystem {
        let mut nbrs: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &(x, y) in &self.edges {
            nbrs.entry(x).or_default().push(y);
            nbrs.entry(y).or_default().push(x);
        }
        for (x, list) in nbrs.iter_mut() {
            let (px, py) = self.positions[x];
            list.sort_by(|a, b| {
                let ang = |w: &Vertex| {
                    let (wx, wy) = self.positions[w];
                    (wy - py).atan2(wx - px)
                };
                ang(a).total_cmp(&ang(b))
            });
        }
        let rs = RotationSystem::from_parts(nbrs, None);
        // edge v'_1 v_2 separates the triangle v_1 v_2 v'_1 from the
        // unbounded face v'_1 v_2 v'_3 v_4 …
        let (v1, s1, v2) = (self.cycle[0], self.shadows[0], self.cycle[1]);
        let outer = [(s1, v2), (v2, s1)]
            .into_iter()
            .find(|&d| rs.face_of(d).len() > 3)
            .unwrap_or((v1, s1));
        let mut rs = rs;
        rs.outer = Some(outer);
        rs
    }
}

fn ordered(x: Vertex, y: Vertex) -> (Vertex, Vertex) {
    (x.min(y), x.max(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;
    use crate::shadow::great_shadow;

    #[test]
    fn c4_layout_counts_and_radii() {
        let l = draw_even_cycle_shadow(4, LayoutOptions::default()).unwrap();
        // 3m + n = 16 edges
        assert_eq!((l.vertex_count(), l.edge_count()), (8, 16));
        let norm = |v| {
            let (x, y): (f64, f64) = l.positions[&v];
            x.hypot(y)
        };
        for i in 0..4 {
            assert!((norm(i) - 1.0).abs() < 1e-12);
        }
        assert!((norm(4) - 1.5).abs() < 1e-12);
        assert!((norm(5) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn layout_edges_match_the_shadow() {
        for len in [4, 6, 16] {
            let l = draw_even_cycle_shadow(len, LayoutOptions::default()).unwrap();
            assert_eq!(l.edges, great_shadow(&cycle(len)).graph.edges());
        }
    }

    #[test]
    fn induced_rotation_is_planar() {
        for len in [4, 6, 8, 16, 30] {
            let rs = draw_even_cycle_shadow(len, LayoutOptions::default())
                .unwrap()
                .rotation_system();
            assert!(rs.euler_check().is_ok(), "C{len}");
        }
    }

    #[test]
    fn odd_and_short_cycles_rejected() {
        assert_eq!(
            draw_even_cycle_shadow(5, LayoutOptions::default()),
            Err(EmbeddingError::BadCycleOrder(5))
        );
        assert!(draw_even_cycle_shadow(2, LayoutOptions::default()).is_err());
        let bad = LayoutOptions { d_in: 1.2, d_out: 1.5 };
        assert_eq!(draw_even_cycle_shadow(6, bad), Err(EmbeddingError::BadRadius));
    }
}

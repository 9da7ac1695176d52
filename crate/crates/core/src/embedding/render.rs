//! Drawings with explicit coordinates, crossing detection and SVG output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use super::fpp::grid_drawing;
use super::layout::{CircularLayout, LayoutOptions};
use super::{embed_shadow, EmbeddingError, RotationSystem};
use crate::graph::{Graph, Vertex};

/// Intersection tolerance in drawing units.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RenderError {
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("edges {0:?} and {1:?} cross")]
    Crossing((Vertex, Vertex), (Vertex, Vertex)),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polyline {
    pub from: Vertex,
    pub to: Vertex,
    /// Every point of the polyline, endpoints included.
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Drawing {
    pub positions: BTreeMap<Vertex, (f64, f64)>,
    pub edges: Vec<Polyline>,
    /// Vertices at or above this label are drawn as shadows.
    pub shadow_start: Option<Vertex>,
}

fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn dist_to_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0)
    };
    let (qx, qy) = (a.0 + t * dx, a.1 + t * dy);
    (p.0 - qx).hypot(p.1 - qy)
}

/// Whether segments `ab` and `cd` meet anywhere other than at a shared
/// endpoint. Touching within `tol` counts as meeting.
pub fn segments_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64), tol: f64) -> bool {
    let same = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).hypot(p.1 - q.1) <= tol;
    let shared = [(a, c), (a, d), (b, c), (b, d)]
        .into_iter()
        .filter(|&(p, q)| same(p, q))
        .count();
    if shared >= 2 {
        return true; // coincident segments
    }
    if shared == 1 {
        // meeting at the common endpoint is fine; overlapping beyond it is not
        let (p, q) = if same(a, c) || same(a, d) { (b, a) } else { (a, b) };
        let (r, s) = if same(c, q) { (d, c) } else { (c, d) };
        return dist_to_segment(p, s, r) <= tol && !same(p, s)
            || dist_to_segment(r, q, p) <= tol && !same(r, q);
    }
    if dist_to_segment(a, c, d) <= tol
        || dist_to_segment(b, c, d) <= tol
        || dist_to_segment(c, a, b) <= tol
        || dist_to_segment(d, a, b) <= tol
    {
        return true;
    }
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    o1 * o2 < 0.0 && o3 * o4 < 0.0
}

impl Drawing {
    fn straight(positions: BTreeMap<Vertex, (f64, f64)>, edges: &[(Vertex, Vertex)]) -> Self {
        let edges = edges
            .iter()
            .map(|&(from, to)| Polyline {
                from,
                to,
                points: vec![positions[&from], positions[&to]],
            })
            .collect();
        Drawing {
            positions,
            edges,
            shadow_start: None,
        }
    }

    pub fn from_layout(layout: &CircularLayout) -> Self {
        Drawing::straight(layout.positions.clone(), &layout.edges)
    }

    /// Pairs of edges (by index) whose polylines meet improperly, plus
    /// vertices lying on edges they are not incident to (reported as the
    /// edge paired with itself).
    pub fn crossings(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            for (&v, &p) in &self.positions {
                if v == e.from || v == e.to {
                    continue;
                }
                if e.points.windows(2).any(|s| dist_to_segment(p, s[0], s[1]) <= TOLERANCE) {
                    out.push((i, i));
                }
            }
            for (j, f) in self.edges.iter().enumerate().skip(i + 1) {
                let hit = e.points.windows(2).any(|s| {
                    f.points
                        .windows(2)
                        .any(|t| segments_cross(s[0], s[1], t[0], t[1], TOLERANCE))
                });
                if hit {
                    out.push((i, j));
                }
            }
        }
        out.dedup();
        out
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings().len()
    }

    fn checked(self) -> Result<Self, RenderError> {
        match self.crossings().first() {
            None => Ok(self),
            Some(&(i, j)) => {
                let e = |k: usize| (self.edges[k].from, self.edges[k].to);
                Err(RenderError::Crossing(e(i), e(j)))
            }
        }
    }

    pub fn bounding_box(&self) -> ((f64, f64), (f64, f64)) {
        let pts = self.positions.values().chain(self.edges.iter().flat_map(|e| &e.points));
        pts.fold(
            ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY)),
            |((x0, y0), (x1, y1)), &(x, y)| ((x0.min(x), y0.min(y)), (x1.max(x), y1.max(y))),
        )
    }

    fn label(&self, v: Vertex) -> String {
        match self.shadow_start {
            Some(s) if v >= s => format!("{}'", v - s),
            _ => v.to_string(),
        }
    }

    /// Deterministic SVG with a viewBox that pads the bounding box by 5%.
    pub fn to_svg(&self) -> String {
        if self.positions.is_empty() {
            return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\"></svg>\n".into();
        }
        let ((x0, y0), (x1, y1)) = self.bounding_box();
        let extent = (x1 - x0).max(y1 - y0).max(1e-6);
        let margin = 0.05 * extent;
        let pts: Vec<(f64, f64)> = self.positions.values().copied().collect();
        let mut nearest = f64::INFINITY;
        for (i, p) in pts.iter().enumerate() {
            for q in &pts[i + 1..] {
                nearest = nearest.min((p.0 - q.0).hypot(p.1 - q.1));
            }
        }
        let r = (0.3 * nearest).min(0.02 * extent).max(1e-3 * extent);
        let stroke = r / 4.0;
        // y is flipped so the drawing reads with the y axis pointing up
        let (vx, vy, vw, vh) = (x0 - margin, -y1 - margin, x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
        let mut s = String::new();
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx:.4} {vy:.4} {vw:.4} {vh:.4}\" width=\"800\" height=\"{:.0}\">",
            800.0 * vh / vw
        );
        let _ = writeln!(s, "<g stroke=\"#444\" stroke-width=\"{stroke:.4}\" fill=\"none\">");
        for e in &self.edges {
            let pts: Vec<String> = e.points.iter().map(|&(x, y)| format!("{x:.4},{:.4}", -y)).collect();
            let _ = writeln!(s, "<polyline points=\"{}\"/>", pts.join(" "));
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(
            s,
            "<g stroke=\"#000\" stroke-width=\"{stroke:.4}\" font-size=\"{:.4}\" text-anchor=\"middle\" dominant-baseline=\"central\">",
            r
        );
        for (&v, &(x, y)) in &self.positions {
            let shadow = self.shadow_start.is_some_and(|st| v >= st);
            let (fill, ink) = if shadow { ("#fff", "#000") } else { ("#222", "#fff") };
            let _ = writeln!(s, "<circle cx=\"{x:.4}\" cy=\"{:.4}\" r=\"{r:.4}\" fill=\"{fill}\"/>", -y);
            let _ = writeln!(
                s,
                "<text x=\"{x:.4}\" y=\"{:.4}\" fill=\"{ink}\" stroke=\"none\">{}</text>",
                -y,
                self.label(v)
            );
        }
        let _ = writeln!(s, "</g>\n</svg>");
        s
    }
}

/// Straight-line drawing of an Euler-certified embedding, one component
/// after another along the x axis. Crossings are reported as errors.
pub fn render(rs: &RotationSystem) -> Result<Drawing, RenderError> {
    rs.euler_check()?;
    let mut positions = BTreeMap::new();
    let mut offset = 0.0;
    for comp in rs.components() {
        let coords: Vec<(Vertex, (f64, f64))> = match comp.len() {
            1 => vec![(comp[0], (0.0, 0.0))],
            2 => vec![(comp[0], (0.0, 0.0)), (comp[1], (0.0, 1.0))],
            _ => {
                let sub = restrict(rs, &comp);
                let mut c: Vec<_> = grid_drawing(&sub)
                    .into_iter()
                    .map(|(v, (x, y))| (v, (x as f64, y as f64)))
                    .collect();
                c.sort_by_key(|&(v, _)| v);
                c
            }
        };
        let min_x = coords.iter().map(|c| c.1 .0).fold(f64::INFINITY, f64::min);
        let max_x = coords.iter().map(|c| c.1 .0).fold(f64::NEG_INFINITY, f64::max);
        for (v, (x, y)) in coords {
            positions.insert(v, (x - min_x + offset, y));
        }
        offset += max_x - min_x + 2.0;
    }
    Drawing::straight(positions, &rs.edges()).checked()
}

fn restrict(rs: &RotationSystem, comp: &[Vertex]) -> RotationSystem {
    let rotation = comp.iter().map(|&v| (v, rs.rotation(v).to_vec())).collect();
    let outer = rs.outer_dart().filter(|d| comp.binary_search(&d.0).is_ok());
    RotationSystem::from_parts(rotation, outer)
}

/// Drawing of `S(G)` for a bipartite cactus: the circular layout when `G`
/// is a single even cycle, otherwise the rendered recursive embedding.
pub fn render_shadow(g: &Graph) -> Result<Drawing, RenderError> {
    let n = g.order();
    let single_even_cycle =
        n >= 4 && n.is_multiple_of(2) && g.is_connected() && g.vertices().all(|v| g.degree(v) == 2);
    let mut drawing = if single_even_cycle {
        let mut order = vec![0];
        while order.len() < n {
            let last = *order.last().unwrap();
            let prev = order.len().checked_sub(2).map(|i| order[i]);
            let next = g.neighbors(last).iter().copied().find(|&w| Some(w) != prev).unwrap();
            order.push(next);
        }
        let shadows: Vec<Vertex> = order.iter().map(|&v| v + n).collect();
        let layout = CircularLayout::with_labels(&order, &shadows, LayoutOptions::default())?;
        Drawing::from_layout(&layout).checked()?
    } else {
        render(&embed_shadow(g)?)?
    };
    drawing.shadow_start = Some(n);
    Ok(drawing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::draw_even_cycle_shadow;
    use crate::generators::{c4_plus_pendant, cycle, path};
    use crate::shadow::great_shadow;

    #[test]
    fn segment_predicates() {
        let o = (0.0, 0.0);
        assert!(segments_cross(o, (2.0, 2.0), (0.0, 2.0), (2.0, 0.0), TOLERANCE));
        assert!(!segments_cross(o, (1.0, 0.0), o, (0.0, 1.0), TOLERANCE));
        // collinear overlap through a shared endpoint
        assert!(segments_cross(o, (2.0, 0.0), o, (1.0, 0.0), TOLERANCE));
        // T-junction
        assert!(segments_cross(o, (2.0, 0.0), (1.0, 0.0), (1.0, 1.0), TOLERANCE));
        assert!(!segments_cross(o, (1.0, 0.0), (0.0, 1.0), (1.0, 1.0), TOLERANCE));
    }

    #[test]
    fn circular_layouts_are_crossing_free() {
        for len in (4..=16).step_by(2) {
            let d = Drawing::from_layout(&draw_even_cycle_shadow(len, LayoutOptions::default()).unwrap());
            assert_eq!(d.crossing_count(), 0, "C{len}");
        }
        let tight = LayoutOptions { d_in: 0.9, d_out: 1.1 };
        let d = Drawing::from_layout(&draw_even_cycle_shadow(6, tight).unwrap());
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn crossing_is_detected() {
        let pos = BTreeMap::from([(0, (0.0, 0.0)), (1, (1.0, 1.0)), (2, (0.0, 1.0)), (3, (1.0, 0.0))]);
        let d = Drawing::straight(pos, &[(0, 1), (2, 3)]);
        assert_eq!(d.crossings(), vec![(0, 1)]);
        assert!(matches!(d.checked(), Err(RenderError::Crossing(..))));
    }

    #[test]
    fn rendered_shadows_are_crossing_free() {
        for g in [c4_plus_pendant(), path(4), path(1), Graph::empty(2), cycle(8)] {
            let d = render_shadow(&g).unwrap();
            assert_eq!(d.crossing_count(), 0);
            let mut edges: Vec<_> = d.edges.iter().map(|e| (e.from, e.to)).collect();
            edges.sort_unstable();
            assert_eq!(edges, great_shadow(&g).graph.edges());
        }
    }

    #[test]
    fn svg_is_deterministic() {
        let g = c4_plus_pendant();
        let a = render_shadow(&g).unwrap().to_svg();
        let b = render_shadow(&g).unwrap().to_svg();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains("4'"));
    }
}

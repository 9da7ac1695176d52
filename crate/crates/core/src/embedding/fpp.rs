//! Straight-line grid drawing of a connected plane graph.
//!
//! The embedding is first triangulated with dummy vertices: a face with a
//! simple boundary gets one vertex joined to every corner, and a face that
//! revisits a vertex gets a ring of dummies (one per corner) around a
//! centre, which keeps the triangulation simple. A canonical ordering is
//! then peeled off the outer triangle and fed to the shift method, which
//! places vertex `k` at the apex of two slope-one lines over its contour
//! neighbours. Coordinates are exact integers.

use std::collections::HashMap;

use super::{Dart, RotationSystem};
use crate::graph::Vertex;

/// Local triangulated copy of one component.
struct Triangulation {
    /// `rot[v]` in cyclic order; vertices `0..original` are the input.
    rot: Vec<Vec<usize>>,
    original: usize,
    outer: [usize; 3],
}

fn triangulate(rot: &[Vec<usize>], faces: &[Vec<(usize, usize)>], outer_face: usize) -> Triangulation {
    let original = rot.len();
    let mut next_id = original;
    let mut tris: Vec<[usize; 3]> = Vec::new();
    let mut outer = None;
    for (fi, face) in faces.iter().enumerate() {
        let walk: Vec<usize> = face.iter().map(|&(x, _)| x).collect();
        let len = walk.len();
        let first = tris.len();
        let simple = {
            let mut s = walk.clone();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        };
        if len == 3 && simple {
            tris.push([walk[0], walk[1], walk[2]]);
        } else if simple {
            let x = next_id;
            next_id += 1;
            for i in 0..len {
                tris.push([walk[i], walk[(i + 1) % len], x]);
            }
        } else {
            let ring: Vec<usize> = (0..len).map(|i| next_id + i).collect();
            let centre = next_id + len;
            next_id += len + 1;
            for i in 0..len {
                let j = (i + 1) % len;
                tris.push([walk[i], walk[j], ring[i]]);
                tris.push([ring[i], walk[j], ring[j]]);
                tris.push([centre, ring[i], ring[j]]);
            }
        }
        if fi == outer_face {
            outer = Some(tris[first]);
        }
    }
    // at corner b of triangle a -> b -> c, the rotation steps from a to c
    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for t in &tris {
        for i in 0..3 {
            succ.insert((t[(i + 1) % 3], t[i]), t[(i + 2) % 3]);
        }
    }
    let mut start = vec![usize::MAX; next_id];
    for &(v, from) in succ.keys() {
        start[v] = start[v].min(from);
    }
    let rot = (0..next_id)
        .map(|v| {
            let s = start[v];
            let mut cyc = vec![s];
            let mut cur = succ[&(v, s)];
            while cur != s {
                cyc.push(cur);
                cur = succ[&(v, cur)];
            }
            cyc
        })
        .collect();
    Triangulation {
        rot,
        original,
        outer: outer.expect("outer face index is valid"),
    }
}

/// Canonical ordering by peeling: returns vertices in insertion order, the
/// first two being the base edge of the outer triangle.
fn canonical_order(t: &Triangulation) -> Vec<usize> {
    let n = t.rot.len();
    let [v1, v2, vn] = t.outer;
    let mut removed = vec![false; n];
    let mut contour = vec![v1, vn, v2];
    let mut pos = vec![usize::MAX; n];
    let mut order = vec![usize::MAX; n];
    for k in (2..n).rev() {
        for (i, &c) in contour.iter().enumerate() {
            pos[c] = i;
        }
        let i = (1..contour.len() - 1)
            .find(|&i| {
                let v = contour[i];
                t.rot[v].iter().all(|&w| {
                    removed[w] || pos[w] == usize::MAX || pos[w].abs_diff(i) <= 1
                })
            })
            .expect("a triangulated disc has a chord-free contour vertex");
        let v = contour[i];
        order[k] = v;
        removed[v] = true;
        let (l, r) = (contour[i - 1], contour[i + 1]);
        let arc = |from: usize, to: usize| {
            let rv = &t.rot[v];
            let s = rv.iter().position(|&w| w == from).unwrap();
            let mut out = Vec::new();
            let mut j = (s + 1) % rv.len();
            while rv[j] != to {
                if !removed[rv[j]] {
                    out.push(rv[j]);
                }
                j = (j + 1) % rv.len();
            }
            out
        };
        let mut inner = arc(l, r);
        if inner.is_empty() {
            inner = arc(r, l);
            inner.reverse();
        }
        for &c in &contour {
            pos[c] = usize::MAX;
        }
        contour.splice(i..=i, inner);
    }
    order[0] = v1;
    order[1] = v2;
    order
}

/// Shift-method coordinates for the canonical order.
fn shift_drawing(t: &Triangulation, order: &[usize]) -> Vec<(i64, i64)> {
    let n = order.len();
    let mut x = vec![0i64; n];
    let mut y = vec![0i64; n];
    let mut shift_set: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    x[v2] = 2;
    x[v3] = 1;
    y[v3] = 1;
    let mut contour = vec![v1, v3, v2];
    let mut adjacent = vec![false; n];
    for &v in &order[3..] {
        for &w in &t.rot[v] {
            adjacent[w] = true;
        }
        let p = contour.iter().position(|&c| adjacent[c]).expect("contour neighbour");
        let q = contour.iter().rposition(|&c| adjacent[c]).unwrap();
        for &w in &t.rot[v] {
            adjacent[w] = false;
        }
        for &c in &contour[p + 1..q] {
            for &u in &shift_set[c] {
                x[u] += 1;
            }
        }
        for &c in &contour[q..] {
            for &u in &shift_set[c] {
                x[u] += 2;
            }
        }
        let (wp, wq) = (contour[p], contour[q]);
        let dx = x[wq] - x[wp] + y[wq] - y[wp];
        debug_assert_eq!(dx % 2, 0);
        x[v] = x[wp] + dx / 2;
        y[v] = y[wp] + dx / 2;
        let mut set = vec![v];
        for &c in &contour[p + 1..q] {
            set.extend_from_slice(&shift_set[c]);
        }
        shift_set[v] = set;
        contour.splice(p + 1..q, [v]);
    }
    x.into_iter().zip(y).collect()
}

/// Integer coordinates for a connected embedding with at least three
/// vertices, keyed by the embedding's own labels.
pub(super) fn grid_drawing(rs: &RotationSystem) -> HashMap<Vertex, (i64, i64)> {
    let labels: Vec<Vertex> = rs.vertices().collect();
    let index: HashMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let rot: Vec<Vec<usize>> = labels
        .iter()
        .map(|&v| rs.rotation(v).iter().map(|w| index[w]).collect())
        .collect();
    let local = |(a, b): Dart| (index[&a], index[&b]);
    let faces: Vec<Vec<(usize, usize)>> = rs
        .faces()
        .into_iter()
        .map(|f| f.into_iter().map(local).collect())
        .collect();
    let outer_dart = rs.outer_dart().filter(|&(a, _)| index.contains_key(&a)).map(local);
    let outer_face = outer_dart
        .and_then(|d| faces.iter().position(|f| f.contains(&d)))
        .unwrap_or(0);
    let t = triangulate(&rot, &faces, outer_face);
    let order = canonical_order(&t);
    let coords = shift_drawing(&t, &order);
    (0..t.original).map(|i| (labels[i], coords[i])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::embed_shadow;
    use crate::generators::{c4_plus_pendant, path};

    #[test]
    fn canonical_order_covers_every_vertex() {
        let rs = embed_shadow(&c4_plus_pendant()).unwrap();
        let labels: Vec<Vertex> = rs.vertices().collect();
        let coords = grid_drawing(&rs);
        assert_eq!(coords.len(), labels.len());
        let mut pts: Vec<_> = coords.values().collect();
        pts.sort();
        pts.dedup();
        assert_eq!(pts.len(), labels.len(), "distinct grid points");
    }

    #[test]
    fn path_shadow_fits_the_grid() {
        let rs = embed_shadow(&path(6)).unwrap();
        let coords = grid_drawing(&rs);
        assert!(coords.values().all(|&(x, y)| x >= 0 && y >= 0));
    }
}

//! Exhaustive search for `K_{3,3}` and `K_5` subdivisions.
//!
//! Branch sets are tried in lexicographic order. For each, the pairs joined
//! by an edge are routed directly and the rest by depth-first search over
//! induced paths through unused vertices. Restricting to induced paths loses
//! nothing, since shortcutting a chord only frees vertices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{K33Witness, K5Witness};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBound {
    pub max_vertices: usize,
    pub max_steps: u64,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound {
            max_vertices: 64,
            max_steps: 50_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("graph has {order} vertices, search bound is {max}")]
    TooLarge { order: usize, max: usize },
    #[error("search budget of {0} steps exhausted")]
    StepBudget(u64),
}

struct Router<'a> {
    g: &'a Graph,
    pairs: Vec<(Vertex, Vertex)>,
    paths: Vec<Vec<Vertex>>,
    used: Vec<bool>,
    touch: Vec<u32>,
    steps: u64,
    max_steps: u64,
}

impl<'a> Router<'a> {
    fn new(g: &'a Graph, max_steps: u64) -> Self {
        Router {
            g,
            pairs: Vec::new(),
            paths: Vec::new(),
            used: vec![false; g.order()],
            touch: vec![0; g.order()],
            steps: 0,
            max_steps,
        }
    }

    /// Routes `pairs` with `branches` blocked; paths come back in pair order.
    fn route(
        &mut self,
        branches: &[Vertex],
        pairs: &[(Vertex, Vertex)],
    ) -> Result<Option<Vec<Vec<Vertex>>>, SearchError> {
        self.used.iter_mut().for_each(|u| *u = false);
        for &b in branches {
            self.used[b] = true;
        }
        // A branch vertex needs as many usable neighbours as it has pairs.
        for &b in branches {
            let need = pairs.iter().filter(|&&(s, t)| s == b || t == b).count();
            let have = self
                .g
                .neighbors(b)
                .iter()
                .filter(|&&w| !self.used[w] || pairs.contains(&(b, w)) || pairs.contains(&(w, b)))
                .count();
            if have < need {
                return Ok(None);
            }
        }
        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.sort_by_key(|&i| !self.g.has_edge(pairs[i].0, pairs[i].1));
        self.pairs = order.iter().map(|&i| pairs[i]).collect();
        self.paths.clear();
        if !self.next_pair()? {
            return Ok(None);
        }
        let mut out = vec![Vec::new(); pairs.len()];
        for (slot, path) in order.into_iter().zip(self.paths.drain(..)) {
            out[slot] = path;
        }
        Ok(Some(out))
    }

    fn tick(&mut self) -> Result<(), SearchError> {
        self.steps += 1;
        if self.steps > self.max_steps {
            Err(SearchError::StepBudget(self.max_steps))
        } else {
            Ok(())
        }
    }

    fn next_pair(&mut self) -> Result<bool, SearchError> {
        let k = self.paths.len();
        if k == self.pairs.len() {
            return Ok(true);
        }
        let (s, t) = self.pairs[k];
        if self.g.has_edge(s, t) {
            self.paths.push(vec![s, t]);
            if self.next_pair()? {
                return Ok(true);
            }
            self.paths.pop();
            return Ok(false);
        }
        let mut path = vec![s];
        self.mark_touch(s, 1);
        let found = self.extend(&mut path, t)?;
        self.mark_touch(s, -1);
        Ok(found)
    }

    fn mark_touch(&mut self, x: Vertex, delta: i32) {
        for &w in self.g.neighbors(x) {
            self.touch[w] = (self.touch[w] as i32 + delta) as u32;
        }
    }

    fn extend(&mut self, path: &mut Vec<Vertex>, t: Vertex) -> Result<bool, SearchError> {
        self.tick()?;
        let cur = *path.last().unwrap();
        if path.len() > 1 && self.g.has_edge(cur, t) {
            path.push(t);
            self.paths.push(path.clone());
            path.pop();
            // Inner vertices stay used while later pairs route, but the
            // chord counters only describe the path under construction.
            for &x in path.iter() {
                self.mark_touch(x, -1);
            }
            let done = self.next_pair()?;
            for &x in path.iter() {
                self.mark_touch(x, 1);
            }
            if !done {
                self.paths.pop();
            }
            return Ok(done);
        }
        let g = self.g;
        for &w in g.neighbors(cur) {
            if self.used[w] || self.touch[w] != 1 {
                continue;
            }
            self.used[w] = true;
            self.mark_touch(w, 1);
            path.push(w);
            let found = self.extend(path, t)?;
            path.pop();
            self.mark_touch(w, -1);
            self.used[w] = false;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Lexicographic `k`-subsets of `items`, passed to `f` until it returns
/// `Some`.
fn for_each_subset<T>(
    items: &[Vertex],
    k: usize,
    mut f: impl FnMut(&[Vertex]) -> Result<Option<T>, SearchError>,
) -> Result<Option<T>, SearchError> {
    if items.len() < k {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let subset: Vec<Vertex> = idx.iter().map(|&i| items[i]).collect();
        if let Some(found) = f(&subset)? {
            return Ok(Some(found));
        }
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < items.len() - k + p) else {
            return Ok(None);
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn check_bound(g: &Graph, bound: SearchBound) -> Result<(), SearchError> {
    if g.order() > bound.max_vertices {
        Err(SearchError::TooLarge {
            order: g.order(),
            max: bound.max_vertices,
        })
    } else {
        Ok(())
    }
}

/// Searches for a subdivided `K_{3,3}`. `Ok(None)` means none exists;
/// running out of budget is an error, never a negative answer.
pub fn k33_search(g: &Graph, bound: SearchBound) -> Result<Option<K33Witness>, SearchError> {
    check_bound(g, bound)?;
    let candidates: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let mut router = Router::new(g, bound.max_steps);
    for_each_subset(&candidates, 6, |six| {
        // Δ1 holds the smallest vertex; the other two come from the rest.
        for_each_subset(&six[1..], 2, |rest| {
            let delta1 = [six[0], rest[0], rest[1]];
            let d2: Vec<Vertex> = six.iter().copied().filter(|x| !delta1.contains(x)).collect();
            let delta2 = [d2[0], d2[1], d2[2]];
            let pairs: Vec<(Vertex, Vertex)> = delta1
                .iter()
                .flat_map(|&a| delta2.iter().map(move |&b| (a, b)))
                .collect();
            Ok(router.route(six, &pairs)?.map(|paths| K33Witness {
                delta1,
                delta2,
                paths,
            }))
        })
    })
}

/// Searches for a subdivided `K_5`.
pub fn k5_search(g: &Graph, bound: SearchBound) -> Result<Option<K5Witness>, SearchError> {
    check_bound(g, bound)?;
    let candidates: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) >= 4).collect();
    let mut router = Router::new(g, bound.max_steps);
    for_each_subset(&candidates, 5, |five| {
        let branches = [five[0], five[1], five[2], five[3], five[4]];
        let pairs: Vec<(Vertex, Vertex)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (branches[i], branches[j])))
            .collect();
        Ok(router
            .route(five, &pairs)?
            .map(|paths| K5Witness { branches, paths }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, petersen};
    use crate::shadow::great_shadow;

    #[test]
    fn k33_finds_itself() {
        let g = complete_bipartite(3, 3);
        let w = k33_search(&g, SearchBound::default()).unwrap().unwrap();
        assert_eq!(w.delta1, [0, 1, 2]);
        assert_eq!(w.delta2, [3, 4, 5]);
        assert!(w.check(&g).is_ok());
    }

    #[test]
    fn planar_graphs_have_none() {
        for g in [complete(4), cycle(8), great_shadow(&cycle(6)).graph] {
            assert_eq!(k33_search(&g, SearchBound::default()), Ok(None));
            assert_eq!(k5_search(&g, SearchBound::default()), Ok(None));
        }
    }

    #[test]
    fn petersen_has_a_k33_but_no_k5() {
        let g = petersen();
        let w = k33_search(&g, SearchBound::default()).unwrap().unwrap();
        assert!(w.check(&g).is_ok());
        assert_eq!(k5_search(&g, SearchBound::default()), Ok(None));
    }

    #[test]
    fn k5_found_in_k5() {
        let g = complete(5);
        let w = k5_search(&g, SearchBound::default()).unwrap().unwrap();
        assert!(w.check(&g).is_ok());
    }

    #[test]
    fn bounds_are_reported() {
        let g = complete(5);
        let tight = SearchBound {
            max_vertices: 4,
            max_steps: 10,
        };
        assert!(matches!(k5_search(&g, tight), Err(SearchError::TooLarge { .. })));
        let p = petersen();
        let starved = SearchBound {
            max_vertices: 64,
            max_steps: 1,
        };
        assert_eq!(k33_search(&p, starved), Err(SearchError::StepBudget(1)));
    }
}

//! Left–right planarity test (testing phase only).
//!
//! A DFS orients the graph and computes lowpoints; a second DFS processes
//! each vertex's outgoing edges by nesting depth and keeps a stack of
//! conflict pairs of return-edge intervals. Two return edges forced onto
//! the same side means the graph is not planar.

use std::collections::HashMap;

use crate::graph::{Graph, Vertex};

type EdgeId = usize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

impl Interval {
    fn new(e: EdgeId) -> Self {
        Interval {
            low: Some(e),
            high: Some(e),
        }
    }

    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State<'a> {
    g: &'a Graph,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    /// Oriented edges `(tail, head)`.
    edges: Vec<(Vertex, Vertex)>,
    oriented: HashMap<(Vertex, Vertex), EdgeId>,
    out: Vec<Vec<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    lowpt_edge: Vec<Option<EdgeId>>,
    reference: Vec<Option<EdgeId>>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
}

impl<'a> State<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let m = g.size();
        State {
            g,
            height: vec![None; n],
            parent_edge: vec![None; n],
            edges: Vec::with_capacity(m),
            oriented: HashMap::with_capacity(m),
            out: vec![Vec::new(); n],
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting_depth: Vec::with_capacity(m),
            lowpt_edge: vec![None; m],
            reference: vec![None; m],
            stack: Vec::new(),
            stack_bottom: vec![0; m],
        }
    }

    fn orientation(&mut self, v: Vertex) {
        let e = self.parent_edge[v];
        let hv = self.height[v].expect("visited");
        for &w in self.g.neighbors(v) {
            let key = (v.min(w), v.max(w));
            if self.oriented.contains_key(&key) {
                continue;
            }
            let vw = self.edges.len();
            self.edges.push((v, w));
            self.oriented.insert(key, vw);
            self.out[v].push(vw);
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting_depth.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orientation(w);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }
            self.nesting_depth[vw] = 2 * self.lowpt[vw] + usize::from(self.lowpt2[vw] < hv);
            if let Some(e) = e {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: EdgeId) -> bool {
        !i.is_empty() && self.lowpt[i.high.expect("non-empty")] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("non-empty pair")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("non-empty pair")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn testing(&mut self, v: Vertex) -> bool {
        let e = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        let adj = self.out[v].clone();
        for (idx, &ei) in adj.iter().enumerate() {
            let w = self.edges[ei].1;
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.testing(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval::new(ei),
                });
            }
            if self.lowpt[ei] < hv {
                let e = e.expect("a return edge below the root needs a parent");
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of e_i are stacked");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qrl = q.right.low.unwrap();
            if self.lowpt[qrl] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qrl] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(prl) = p.right.low {
                self.reference[prl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pll) = p.left.low {
                self.reference[pll] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.edges[e].0;
        let hu = self.height[u].unwrap();
        while self.stack.last().is_some_and(|p| self.lowest(p) == hu) {
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high.filter(|&h| self.edges[h].1 == u) {
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low.take() {
                    self.reference[l] = p.right.low;
                }
            }
            while let Some(h) = p.right.high.filter(|&h| self.edges[h].1 == u) {
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low.take() {
                    self.reference[r] = p.left.low;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                (Some(l), None) => Some(l),
                _ => hr,
            };
        }
    }
}

/// Planarity by the left–right criterion, after the Euler edge bound.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n > 2 && g.size() > 3 * n - 6 {
        return false;
    }
    let mut st = State::new(g);
    let mut roots = Vec::new();
    for v in g.vertices() {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            roots.push(v);
            st.orientation(v);
        }
    }
    for v in g.vertices() {
        let depth = &st.nesting_depth;
        st.out[v].sort_by_key(|&e| depth[e]);
    }
    roots.into_iter().all(|r| st.testing(r))
}

// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exhaustive per-block search over circular orders.
//!
//! Orders are built position by position with the block's smallest vertex
//! fixed first. A crossing between two chords is decided as soon as all four
//! endpoints are placed, so partial orders with a doubly crossed chord are cut
//! immediately. Reflections are removed by requiring `order[1] < order[last]`.

use super::{order_is_closed, Diagram};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const RECOGNITION_LIMIT: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Best,
    FirstClosed,
    All,
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    mode: Mode,
    order: Vec<usize>,
    pos: Vec<usize>,
    placed: Vec<(usize, usize)>,
    crossed: Vec<u8>,
    total: usize,
    open: bool,
    best: Option<(Vec<usize>, usize, bool)>,
    all: Vec<Vec<usize>>,
    done: bool,
}

const UNPLACED: usize = usize::MAX;

impl Search {
    fn new(g: &Graph, vertices: &[usize], mode: Mode) -> Self {
        let local = g.induced_relabelled(vertices);
        let n = vertices.len();
        let mut adj = vec![0u64; n];
        for e in local.edges() {
            adj[e.0] |= 1 << e.1;
            adj[e.1] |= 1 << e.0;
        }
        Search {
            n,
            adj,
            mode,
            order: Vec::with_capacity(n),
            pos: vec![UNPLACED; n],
            placed: Vec::new(),
            crossed: Vec::new(),
            total: 0,
            open: false,
            best: None,
            all: Vec::new(),
            done: false,
        }
    }

    fn edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    fn pruned(&self) -> bool {
        match (&self.best, self.mode) {
            (Some((_, c, closed)), Mode::Best) => {
                self.total > *c || (self.total == *c && (*closed || self.open))
            }
            _ => false,
        }
    }

    /// Places `v` at the next position. Returns the undo record, or `None`
    /// when some chord would be crossed twice.
    fn place(&mut self, v: usize) -> Option<(usize, Vec<usize>, bool)> {
        let p = self.order.len();
        let mut new_edges = Vec::new();
        let mut hits: Vec<usize> = Vec::new();
        let mut ok = true;
        for w in 0..self.n {
            if !self.edge(v, w) || self.pos[w] == UNPLACED {
                continue;
            }
            let pw = self.pos[w];
            let mut mine = 0;
            for (i, &(a, b)) in self.placed.iter().enumerate() {
                if a == pw || b == pw {
                    continue;
                }
                if (a > pw) != (b > pw) {
                    mine += 1;
                    hits.push(i);
                }
            }
            if mine > 1 {
                ok = false;
            }
            new_edges.push((pw.min(p), pw.max(p), mine as u8));
        }
        if ok {
            let mut sorted = hits.clone();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    ok = false;
                }
            }
            if sorted.iter().any(|&i| self.crossed[i] > 0) {
                ok = false;
            }
        }
        if !ok {
            return None;
        }
        let was_open = self.open;
        if p > 0 && !self.edge(self.order[p - 1], v) {
            self.open = true;
        }
        for &i in &hits {
            self.crossed[i] += 1;
        }
        self.total += hits.len();
        let added = new_edges.len();
        for (a, b, c) in new_edges {
            self.placed.push((a, b));
            self.crossed.push(c);
        }
        self.pos[v] = p;
        self.order.push(v);
        Some((added, hits, was_open))
    }

    fn unplace(&mut self, undo: (usize, Vec<usize>, bool)) {
        let (added, hits, was_open) = undo;
        let v = self.order.pop().unwrap();
        self.pos[v] = UNPLACED;
        let keep = self.placed.len() - added;
        self.placed.truncate(keep);
        self.crossed.truncate(keep);
        for &i in &hits {
            self.crossed[i] -= 1;
        }
        self.total -= hits.len();
        self.open = was_open;
    }

    fn finish(&mut self) {
        let n = self.n;
        if n >= 3 && self.order[1] > self.order[n - 1] {
            return;
        }
        let closed = !self.open && self.edge(self.order[n - 1], self.order[0]);
        match self.mode {
            Mode::All => self.all.push(self.order.clone()),
            Mode::FirstClosed => {
                if closed {
                    self.best = Some((self.order.clone(), self.total, true));
                    self.done = true;
                }
            }
            Mode::Best => {
                let better = match &self.best {
                    None => true,
                    Some((_, c, cl)) => self.total < *c || (self.total == *c && closed && !cl),
                };
                if better {
                    self.best = Some((self.order.clone(), self.total, closed));
                    if self.total == 0 && closed {
                        self.done = true;
                    }
                }
            }
        }
    }

    fn dfs(&mut self) {
        if self.done {
            return;
        }
        if self.order.len() == self.n {
            self.finish();
            return;
        }
        for v in 1..self.n {
            if self.pos[v] != UNPLACED {
                continue;
            }
            if self.mode == Mode::FirstClosed && !self.edge(*self.order.last().unwrap(), v) {
                continue;
            }
            if let Some(undo) = self.place(v) {
                if !self.pruned() {
                    self.dfs();
                }
                self.unplace(undo);
            }
            if self.done {
                return;
            }
        }
    }

    fn run(mut self, vertices: &[usize]) -> Self {
        if self.n == 0 {
            return self;
        }
        let undo = self.place(0).expect("first vertex");
        self.dfs();
        self.unplace(undo);
        let map = |o: &Vec<usize>| o.iter().map(|&i| vertices[i]).collect::<Vec<_>>();
        if let Some(b) = self.best.as_mut() {
            b.0 = map(&b.0);
        }
        self.all = self.all.iter().map(map).collect();
        self
    }
}

fn sorted(vertices: &[usize]) -> Vec<usize> {
    let mut v = vertices.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Minimum-crossing valid order of the subgraph of `g` induced by
/// `vertices`, preferring closed orders and then the lexicographically least
/// sequence. Returns `(order, crossings, closed)`.
pub fn search_block_orders(g: &Graph, vertices: &[usize]) -> Option<(Vec<usize>, usize, bool)> {
    let vs = sorted(vertices);
    Search::new(g, &vs, Mode::Best).run(&vs).best
}

/// Lexicographically least valid order whose consecutive pairs are all edges.
pub fn closed_order(g: &Graph, vertices: &[usize]) -> Option<Vec<usize>> {
    let vs = sorted(vertices);
    Search::new(g, &vs, Mode::FirstClosed)
        .run(&vs)
        .best
        .map(|b| b.0)
}

/// Every valid order up to rotation and reflection, in lexicographic order.
pub fn valid_orders(g: &Graph, vertices: &[usize]) -> Vec<Vec<usize>> {
    let vs = sorted(vertices);
    Search::new(g, &vs, Mode::All).run(&vs).all
}

pub fn recognize(g: &Graph) -> Result<Option<Diagram>> {
    recognize_with_limit(g, RECOGNITION_LIMIT)
}

pub fn recognize_with_limit(g: &Graph, limit: usize) -> Result<Option<Diagram>> {
    let bs = g.blocks();
    if let Some(b) = bs.blocks.iter().find(|b| b.vertices.len() > limit.min(64)) {
        return Err(Error::RecognitionTooLarge {
            size: b.vertices.len(),
            limit,
        });
    }
    let mut orders = Vec::with_capacity(bs.blocks.len());
    for b in &bs.blocks {
        match search_block_orders(g, &b.vertices) {
            Some((order, _, _)) => orders.push(order),
            None => return Ok(None),
        }
    }
    let d = Diagram::from_orders(g.clone(), orders);
    debug_assert!(d
        .blocks
        .iter()
        .all(|b| b.closed == order_is_closed(g, &b.order)));
    Ok(Some(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn k4_one_crossing() {
        let d = recognize(&Graph::complete(4)).unwrap().unwrap();
        assert!(d.validate().is_valid());
        assert_eq!(d.crossing_pairs().unwrap().len(), 1);
        assert!(d.blocks[0].closed);
        assert_eq!(d.blocks[0].order, vec![0, 1, 2, 3]);
    }

    #[test]
    fn k5_is_rejected() {
        assert!(recognize(&Graph::complete(5)).unwrap().is_none());
    }

    #[test]
    fn k23_is_open_with_one_crossing() {
        let d = recognize(&Graph::complete_bipartite(2, 3))
            .unwrap()
            .unwrap();
        assert!(d.validate().is_valid());
        assert_eq!(d.crossing_count(), 1);
        assert!(!d.blocks[0].closed);
    }

    #[test]
    fn cycle_is_drawn_as_its_boundary() {
        let g = Graph::cycle(6);
        let d = recognize(&g).unwrap().unwrap();
        assert_eq!(d.blocks[0].order, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            recognize(&Graph::cycle(11)),
            Err(Error::RecognitionTooLarge {
                size: 11,
                limit: 10
            })
        ));
        assert!(recognize_with_limit(&Graph::cycle(11), 11)
            .unwrap()
            .is_some());
    }

    #[test]
    fn k33_is_not_pseudo_outerplanar() {
        assert!(recognize(&Graph::complete_bipartite(3, 3))
            .unwrap()
            .is_none());
    }

    #[test]
    fn c4_orders() {
        let g = Graph::cycle(4);
        assert_eq!(valid_orders(&g, &[0, 1, 2, 3]).len(), 3);
        assert_eq!(closed_order(&g, &[0, 1, 2, 3]), Some(vec![0, 1, 2, 3]));
        let path = g.with_edges_removed(&[Edge(0, 3)]);
        assert_eq!(closed_order(&path, &[0, 1, 2, 3]), None);
    }
}

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

//! Exact backtracking used by the colouring branches that have no
//! constructive proof, and as a last resort.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Node budget for one exact search.
pub const EXACT_NODE_LIMIT: u64 = 20_000_000;

struct Budget {
    left: u64,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded);
        }
        self.left -= 1;
        Ok(())
    }
}

/// Proper `k`-edge-colouring, edges chosen by saturation.
pub(crate) fn exact_proper(
    g: &Graph,
    k: usize,
    limit: u64,
) -> Result<Option<BTreeMap<Edge, usize>>> {
    if k >= 64 {
        return Err(Error::Precondition(
            "exact colouring supports fewer than 64 colours".into(),
        ));
    }
    if g.max_degree() > k {
        return Ok(None);
    }
    let edges = g.edges().to_vec();
    let mut mask = vec![0u64; g.n()];
    let mut col = vec![0usize; edges.len()];
    let mut budget = Budget { left: limit };

    fn go(
        edges: &[Edge],
        k: usize,
        mask: &mut [u64],
        col: &mut [usize],
        top: usize,
        left: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        if left == 0 {
            return Ok(true);
        }
        budget.tick()?;
        let i = (0..edges.len())
            .filter(|&i| col[i] == 0)
            .max_by_key(|&i| {
                let Edge(u, v) = edges[i];
                ((mask[u] | mask[v]).count_ones(), std::cmp::Reverse(i))
            })
            .unwrap();
        let Edge(u, v) = edges[i];
        let blocked = mask[u] | mask[v];
        for c in 1..=k.min(top + 1) {
            if blocked >> c & 1 == 1 {
                continue;
            }
            col[i] = c;
            mask[u] |= 1 << c;
            mask[v] |= 1 << c;
            if go(edges, k, mask, col, top.max(c), left - 1, budget)? {
                return Ok(true);
            }
            mask[u] &= !(1 << c);
            mask[v] &= !(1 << c);
        }
        col[i] = 0;
        Ok(false)
    }

    let ok = go(&edges, k, &mut mask, &mut col, 0, edges.len(), &mut budget)?;
    Ok(ok.then(|| edges.into_iter().zip(col).collect()))
}

/// Edges in BFS order from a vertex of maximum degree, component by component.
fn bfs_order(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(g.edge_count());
    let mut placed = std::collections::BTreeSet::new();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &w in g.neighbors(v) {
                if placed.insert(Edge::new(v, w)) {
                    out.push(Edge::new(v, w));
                }
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    out
}

/// Union-find with undo, one forest per colour.
struct Forests {
    n: usize,
    parent: Vec<usize>,
    size: Vec<usize>,
    deg: Vec<u8>,
    undo: Vec<(usize, usize)>,
}

impl Forests {
    fn new(n: usize, k: usize) -> Self {
        Forests {
            n,
            parent: (0..n * k).map(|i| i % n).collect(),
            size: vec![1; n * k],
            deg: vec![0; n * k],
            undo: Vec::new(),
        }
    }

    fn root(&self, c: usize, mut v: usize) -> usize {
        while self.parent[c * self.n + v] != v {
            v = self.parent[c * self.n + v];
        }
        v
    }

    fn can_add(&self, c: usize, a: usize, b: usize) -> bool {
        self.deg[c * self.n + a] < 2
            && self.deg[c * self.n + b] < 2
            && self.root(c, a) != self.root(c, b)
    }

    fn add(&mut self, c: usize, a: usize, b: usize) {
        let (ra, rb) = (self.root(c, a), self.root(c, b));
        let (big, small) = if self.size[c * self.n + ra] >= self.size[c * self.n + rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[c * self.n + small] = big;
        self.size[c * self.n + big] += self.size[c * self.n + small];
        self.deg[c * self.n + a] += 1;
        self.deg[c * self.n + b] += 1;
        self.undo.push((c, small));
    }

    fn pop(&mut self, a: usize, b: usize) {
        let (c, small) = self.undo.pop().unwrap();
        let big = self.parent[c * self.n + small];
        self.size[c * self.n + big] -= self.size[c * self.n + small];
        self.parent[c * self.n + small] = small;
        self.deg[c * self.n + a] -= 1;
        self.deg[c * self.n + b] -= 1;
    }
}

/// Partition into `k` linear forests (colour classes `1..=k`).
pub(crate) fn exact_linear(
    g: &Graph,
    k: usize,
    limit: u64,
) -> Result<Option<BTreeMap<Edge, usize>>> {
    if g.edge_count() == 0 {
        return Ok(Some(BTreeMap::new()));
    }
    if k == 0 || g.max_degree() > 2 * k {
        return Ok(None);
    }
    let edges = bfs_order(g);
    let mut f = Forests::new(g.n(), k);
    let mut col = vec![0usize; edges.len()];
    let mut budget = Budget { left: limit };

    fn go(
        i: usize,
        top: usize,
        k: usize,
        edges: &[Edge],
        f: &mut Forests,
        col: &mut [usize],
        budget: &mut Budget,
    ) -> Result<bool> {
        if i == edges.len() {
            return Ok(true);
        }
        budget.tick()?;
        let Edge(a, b) = edges[i];
        for c in 0..k.min(top + 1) {
            if !f.can_add(c, a, b) {
                continue;
            }
            f.add(c, a, b);
            col[i] = c + 1;
            if go(i + 1, top.max(c + 1), k, edges, f, col, budget)? {
                return Ok(true);
            }
            f.pop(a, b);
        }
        Ok(false)
    }

    let ok = go(0, 0, k, &edges, &mut f, &mut col, &mut budget)?;
    Ok(ok.then(|| edges.into_iter().zip(col).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_pn, gen_qn};
    use crate::graph::{verify_edge_coloring, ColoringMode, EdgeColoring};

    fn proper_ok(g: &Graph, k: usize) -> bool {
        match exact_proper(g, k, EXACT_NODE_LIMIT).unwrap() {
            Some(m) => {
                let c = EdgeColoring::new(k, ColoringMode::Proper, m);
                assert!(verify_edge_coloring(g, &c).unwrap().is_valid());
                true
            }
            None => false,
        }
    }

    fn linear_ok(g: &Graph, k: usize) -> bool {
        match exact_linear(g, k, EXACT_NODE_LIMIT).unwrap() {
            Some(m) => {
                let c = EdgeColoring::new(k, ColoringMode::LinearForest, m);
                assert!(verify_edge_coloring(g, &c).unwrap().is_valid());
                true
            }
            None => false,
        }
    }

    #[test]
    fn proper() {
        assert!(!proper_ok(&Graph::cycle(5), 2));
        assert!(proper_ok(&Graph::cycle(5), 3));
        let (p1, _) = gen_pn(1).unwrap();
        assert!(!proper_ok(&p1, 3));
        assert!(proper_ok(&p1, 4));
    }

    #[test]
    fn linear() {
        assert!(!linear_ok(&Graph::cycle(4), 1));
        assert!(linear_ok(&Graph::cycle(4), 2));
        assert!(!linear_ok(&Graph::complete(5), 2));
        assert!(linear_ok(&Graph::complete(5), 3));
        let (q3, _) = gen_qn(3).unwrap();
        assert!(!linear_ok(&q3, 2));
        assert!(linear_ok(&q3, 3));
    }
}

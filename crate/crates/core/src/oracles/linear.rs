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

use std::collections::BTreeMap;

use super::budget::{bfs_edge_order, Meter};
use super::SearchBudget;
use crate::error::Result;
use crate::graph::{ColoringMode, Edge, EdgeColoring, Graph};

const NONE: usize = usize::MAX;

struct State {
    k: usize,
    /// `link[v][c]` holds the (at most two) colour-`c` neighbours of `v`.
    link: Vec<Vec<[usize; 2]>>,
    left: Vec<usize>,
}

impl State {
    fn count(&self, v: usize, c: usize) -> usize {
        self.link[v][c].iter().filter(|&&x| x != NONE).count()
    }

    /// Whether `b` is reachable from `a` along colour-`c` edges. Both have
    /// colour-degree at most one here, so this walks a single path.
    fn joined(&self, a: usize, b: usize, c: usize) -> bool {
        let (mut prev, mut cur) = (NONE, a);
        loop {
            let next = self.link[cur][c]
                .iter()
                .copied()
                .find(|&x| x != NONE && x != prev);
            match next {
                None => return false,
                Some(x) if x == b => return true,
                Some(x) => {
                    prev = cur;
                    cur = x;
                }
            }
        }
    }

    fn set(&mut self, a: usize, b: usize, c: usize) {
        let s = self.link[a][c].iter().position(|&x| x == NONE).unwrap();
        self.link[a][c][s] = b;
        let s = self.link[b][c].iter().position(|&x| x == NONE).unwrap();
        self.link[b][c][s] = a;
        self.left[a] -= 1;
        self.left[b] -= 1;
    }

    fn unset(&mut self, a: usize, b: usize, c: usize) {
        let s = self.link[a][c].iter().position(|&x| x == b).unwrap();
        self.link[a][c][s] = NONE;
        let s = self.link[b][c].iter().position(|&x| x == a).unwrap();
        self.link[b][c][s] = NONE;
        self.left[a] += 1;
        self.left[b] += 1;
    }

    fn room(&self, v: usize) -> bool {
        let cap: usize = (0..self.k).map(|c| 2 - self.count(v, c)).sum();
        self.left[v] <= cap
    }
}

/// A `k`-tree-colouring (every class a linear forest) by backtracking, or
/// `None` if none exists.
pub fn brute_tree_coloring(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<EdgeColoring>> {
    let mut meter = Meter::new(budget, g)?;
    let edges = bfs_edge_order(g);
    let mut st = State {
        k,
        link: vec![vec![[NONE; 2]; k]; g.n()],
        left: (0..g.n()).map(|v| g.degree(v)).collect(),
    };
    if (0..g.n()).any(|v| !st.room(v)) {
        return Ok(None);
    }
    let mut col = vec![0usize; edges.len()];
    fn go(
        i: usize,
        top: usize,
        edges: &[Edge],
        st: &mut State,
        col: &mut [usize],
        meter: &mut Meter,
    ) -> Result<bool> {
        if i == edges.len() {
            return Ok(true);
        }
        meter.tick()?;
        let Edge(a, b) = edges[i];
        for c in 0..st.k.min(top + 1) {
            if st.count(a, c) == 2 || st.count(b, c) == 2 || st.joined(a, b, c) {
                continue;
            }
            st.set(a, b, c);
            col[i] = c;
            if st.room(a) && st.room(b) && go(i + 1, top.max(c + 1), edges, st, col, meter)? {
                return Ok(true);
            }
            st.unset(a, b, c);
        }
        Ok(false)
    }
    if !go(0, 0, &edges, &mut st, &mut col, &mut meter)? {
        return Ok(None);
    }
    let colors: BTreeMap<Edge, usize> = edges.iter().zip(&col).map(|(&e, &c)| (e, c + 1)).collect();
    Ok(Some(EdgeColoring::new(
        k,
        ColoringMode::LinearForest,
        colors,
    )))
}

/// Exact linear arboricity, searching `k = ⌈Δ/2⌉, ⌈Δ/2⌉ + 1, ...`.
pub fn brute_linear_arboricity(g: &Graph, budget: SearchBudget) -> Result<usize> {
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let mut k = g.max_degree().div_ceil(2);
    loop {
        if brute_tree_coloring(g, k, budget)?.is_some() {
            return Ok(k);
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_pn;
    use crate::graph::verify_edge_coloring;

    #[test]
    fn small_values() {
        let b = SearchBudget::default();
        assert_eq!(brute_linear_arboricity(&Graph::complete(4), b).unwrap(), 2);
        assert_eq!(
            brute_linear_arboricity(&gen_pn(1).unwrap().0, b).unwrap(),
            2
        );
        assert_eq!(brute_linear_arboricity(&Graph::cycle(4), b).unwrap(), 2);
        assert_eq!(brute_linear_arboricity(&Graph::path(5), b).unwrap(), 1);
        assert_eq!(brute_linear_arboricity(&Graph::complete(5), b).unwrap(), 3);
    }

    #[test]
    fn colorings_verify() {
        let g = Graph::complete(5);
        let c = brute_tree_coloring(&g, 3, SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(verify_edge_coloring(&g, &c).unwrap().is_valid());
    }
}

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

/// Proper `k`-edge-colouring by backtracking, or `None` if none exists.
/// Colours are introduced in increasing order to skip relabelled copies.
pub fn brute_edge_coloring(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<EdgeColoring>> {
    let mut meter = Meter::new(budget, g)?;
    let edges = bfs_edge_order(g);
    let mut used = vec![0u64; g.n()];
    let mut col = vec![0usize; edges.len()];
    fn go(
        i: usize,
        top: usize,
        k: usize,
        edges: &[Edge],
        used: &mut [u64],
        col: &mut [usize],
        meter: &mut Meter,
    ) -> Result<bool> {
        if i == edges.len() {
            return Ok(true);
        }
        meter.tick()?;
        let Edge(a, b) = edges[i];
        let blocked = used[a] | used[b];
        for c in 0..k.min(top + 1) {
            if blocked >> c & 1 == 1 {
                continue;
            }
            used[a] |= 1 << c;
            used[b] |= 1 << c;
            col[i] = c;
            if go(i + 1, top.max(c + 1), k, edges, used, col, meter)? {
                return Ok(true);
            }
            used[a] &= !(1 << c);
            used[b] &= !(1 << c);
        }
        Ok(false)
    }
    if !go(0, 0, k, &edges, &mut used, &mut col, &mut meter)? {
        return Ok(None);
    }
    let colors: BTreeMap<Edge, usize> = edges.iter().zip(&col).map(|(&e, &c)| (e, c + 1)).collect();
    Ok(Some(EdgeColoring::new(k, ColoringMode::Proper, colors)))
}

/// Exact chromatic index: `Δ` if a `Δ`-colouring exists, otherwise `Δ + 1`.
pub fn brute_chromatic_index(g: &Graph, budget: SearchBudget) -> Result<usize> {
    let d = g.max_degree();
    if d == 0 {
        return Ok(0);
    }
    Ok(if brute_edge_coloring(g, d, budget)?.is_some() {
        d
    } else {
        d + 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_pn;

    #[test]
    fn small_values() {
        let b = SearchBudget::default();
        assert_eq!(brute_chromatic_index(&Graph::cycle(5), b).unwrap(), 3);
        assert_eq!(brute_chromatic_index(&Graph::complete(4), b).unwrap(), 3);
        assert_eq!(brute_chromatic_index(&gen_pn(1).unwrap().0, b).unwrap(), 4);
        assert_eq!(brute_chromatic_index(&Graph::empty(3), b).unwrap(), 0);
    }

    #[test]
    fn budget_is_reported() {
        let b = SearchBudget::default().with_nodes(3);
        assert!(matches!(
            brute_chromatic_index(&gen_pn(2).unwrap().0, b),
            Err(crate::Error::BudgetExceeded)
        ));
    }
}

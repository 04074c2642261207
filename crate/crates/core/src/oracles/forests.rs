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

use super::budget::{bfs_edge_order, Meter};
use super::SearchBudget;
use crate::error::Result;
use crate::graph::{Decomposition, Edge, Graph, Part, PartKind};

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

/// Partition of `E(g)` into at most `k` forests, or `None`. Graphs with
/// `|E| > k(n-1)` are rejected without search.
pub fn exists_k_forest_partition(
    g: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<Option<Decomposition>> {
    let n = g.n();
    if g.edge_count() > k * n.saturating_sub(1) {
        return Ok(None);
    }
    let mut meter = Meter::new(budget, g)?;
    let edges = bfs_edge_order(g);
    // union by size without path compression, so links can be undone
    let mut parent: Vec<Vec<usize>> = vec![(0..n).collect(); k];
    let mut size: Vec<Vec<usize>> = vec![vec![1; n]; k];
    let mut col = vec![0usize; edges.len()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        top: usize,
        k: usize,
        edges: &[Edge],
        parent: &mut [Vec<usize>],
        size: &mut [Vec<usize>],
        col: &mut [usize],
        meter: &mut Meter,
    ) -> Result<bool> {
        if i == edges.len() {
            return Ok(true);
        }
        meter.tick()?;
        let Edge(a, b) = edges[i];
        for c in 0..k.min(top + 1) {
            let (ra, rb) = (find(&parent[c], a), find(&parent[c], b));
            if ra == rb {
                continue;
            }
            let (big, small) = if size[c][ra] >= size[c][rb] {
                (ra, rb)
            } else {
                (rb, ra)
            };
            parent[c][small] = big;
            size[c][big] += size[c][small];
            col[i] = c;
            if go(i + 1, top.max(c + 1), k, edges, parent, size, col, meter)? {
                return Ok(true);
            }
            size[c][big] -= size[c][small];
            parent[c][small] = small;
        }
        Ok(false)
    }
    if !go(
        0,
        0,
        k,
        &edges,
        &mut parent,
        &mut size,
        &mut col,
        &mut meter,
    )? {
        return Ok(None);
    }
    let parts = (0..k)
        .map(|c| {
            let mut es: Vec<Edge> = edges
                .iter()
                .zip(&col)
                .filter(|(_, &x)| x == c)
                .map(|(&e, _)| e)
                .collect();
            es.sort_unstable();
            Part {
                kind: PartKind::Forest,
                edges: es,
            }
        })
        .collect();
    Ok(Some(Decomposition { parts }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_gn;

    #[test]
    fn examples() {
        let b = SearchBudget::default();
        let (g6, _) = gen_gn(6).unwrap();
        assert!(exists_k_forest_partition(&g6, 2, b).unwrap().is_none());
        let d = exists_k_forest_partition(&g6, 3, b).unwrap().unwrap();
        assert!(d.verify(&g6).is_empty());
        assert!(exists_k_forest_partition(&Graph::cycle(5), 1, b)
            .unwrap()
            .is_none());
    }

    #[test]
    fn k4_is_two_forests() {
        let g = Graph::complete(4);
        let d = exists_k_forest_partition(&g, 2, SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(d.verify(&g).is_empty());
    }
}

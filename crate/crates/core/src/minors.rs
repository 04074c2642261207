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

//! Exact K4 / K2,3 minor search and outerplanarity.
//!
//! `has_minor` looks for branch sets directly. Both patterns are
//! 2-connected, so the search runs per block. `is_outerplanar` uses a
//! degree-2 elimination that scales past the minor-search limit; the two
//! are cross-checked in the tests.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest block the branch-set search accepts.
pub const MINOR_SEARCH_LIMIT: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorPattern {
    K4,
    K23,
}

pub fn has_minor(g: &Graph, pattern: MinorPattern) -> Result<bool> {
    has_minor_with_limit(g, pattern, MINOR_SEARCH_LIMIT)
}

pub fn has_minor_with_limit(g: &Graph, pattern: MinorPattern, limit: usize) -> Result<bool> {
    let blocks = g.blocks().blocks;
    if let Some(b) = blocks.iter().find(|b| b.vertices.len() > limit.min(63)) {
        return Err(Error::MinorSearchTooLarge {
            n: b.vertices.len(),
            limit,
        });
    }
    for b in blocks.iter().filter(|b| b.vertices.len() >= 4) {
        let h = g.induced_relabelled(&b.vertices);
        let found = match pattern {
            MinorPattern::K4 => BranchSearch::new(&h).k4(),
            MinorPattern::K23 => BranchSearch::new(&h).k23(),
        };
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Outerplanarity decided by the branch-set minor search alone.
pub fn is_outerplanar_by_minors(g: &Graph) -> Result<bool> {
    Ok(!has_minor(g, MinorPattern::K4)? && !has_minor(g, MinorPattern::K23)?)
}

struct BranchSearch {
    n: usize,
    adj: Vec<u64>,
    /// connected vertex sets with their open neighbourhoods, sorted by lowest vertex
    sets: Vec<(u64, u64)>,
}

impl BranchSearch {
    fn new(h: &Graph) -> Self {
        let n = h.n();
        let adj: Vec<u64> = (0..n)
            .map(|v| h.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        let mut s = BranchSearch {
            n,
            adj,
            sets: Vec::new(),
        };
        s.sets = s.connected_sets();
        s
    }

    fn nbhd(&self, set: u64) -> u64 {
        let mut m = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            m |= self.adj[v];
        }
        m & !set
    }

    fn is_connected(&self, set: u64) -> bool {
        let start = set & set.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let next = self.nbhd(frontier) & set & !seen;
            seen |= next;
            frontier = next;
        }
        seen == set
    }

    fn connected_sets(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = (1u64..(1u64 << self.n))
            .filter(|&m| self.is_connected(m))
            .map(|m| (m, self.nbhd(m)))
            .collect();
        out.sort_by_key(|&(m, _)| (m.trailing_zeros(), m.count_ones(), m));
        out
    }

    fn k4(&self) -> bool {
        let sets = &self.sets;
        for (i, &(a, na)) in sets.iter().enumerate() {
            let amin = a.trailing_zeros();
            for &(b, nb) in &sets[i..] {
                if b.trailing_zeros() <= amin || b & a != 0 || na & b == 0 {
                    continue;
                }
                let bmin = b.trailing_zeros();
                let used_ab = a | b;
                for &(c, nc) in sets.iter().filter(|(c, _)| c.trailing_zeros() > bmin) {
                    if c & used_ab != 0 || na & c == 0 || nb & c == 0 {
                        continue;
                    }
                    let used = used_ab | c;
                    // the fourth set only needs to touch all three others;
                    // check for any connected set outside `used` that does
                    let reach = na & nb & nc & !used;
                    if reach != 0 {
                        return true;
                    }
                    if self.fourth_set_exists(used, na, nb, nc) {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Is there a connected set avoiding `used` that meets all three neighbourhoods?
    fn fourth_set_exists(&self, used: u64, na: u64, nb: u64, nc: u64) -> bool {
        let free = !used & ((1u64 << self.n) - 1);
        // components of the free part; a component touching all three works
        let mut left = free;
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let next = self.nbhd(frontier) & free & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            if comp & na != 0 && comp & nb != 0 && comp & nc != 0 {
                return true;
            }
        }
        false
    }

    /// K2,3: two disjoint connected sets with three common outside neighbours.
    /// The degree-2 side can be taken as single vertices: any longer branch
    /// path can be absorbed into the two big sets.
    fn k23(&self) -> bool {
        let sets = &self.sets;
        for (i, &(a, na)) in sets.iter().enumerate() {
            let amin = a.trailing_zeros();
            for &(b, nb) in &sets[i..] {
                if b.trailing_zeros() <= amin || b & a != 0 {
                    continue;
                }
                let common = na & nb & !(a | b);
                if common.count_ones() >= 3 {
                    return true;
                }
            }
        }
        false
    }
}

/// Outerplanarity via degree-2 elimination inside each block.
///
/// In a 2-connected outerplanar graph on at least four vertices some vertex
/// has degree two, both its edges lie on the outer cycle, and removing it
/// while joining its neighbours leaves a 2-connected outerplanar graph in
/// which the new edge is on the outer cycle. An edge `ab` of such a graph is
/// on the outer cycle exactly when deleting `a` and `b` leaves it connected.
pub fn is_outerplanar(g: &Graph) -> bool {
    g.blocks()
        .blocks
        .iter()
        .all(|b| b.vertices.len() <= 3 || block_outerplanar(g, &b.vertices, &b.edges))
}

fn block_outerplanar(g: &Graph, vertices: &[usize], edges: &[Edge]) -> bool {
    let h = g.induced_relabelled(vertices);
    debug_assert_eq!(h.edge_count(), edges.len());
    let n = h.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| h.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    while alive.len() > 3 {
        let Some(&v) = alive.iter().find(|&&v| adj[v].len() == 2) else {
            return false;
        };
        let mut it = adj[v].iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[v].clear();
        alive.remove(&v);
        adj[a].insert(b);
        adj[b].insert(a);
        if alive.len() >= 4 && !connected_without(&adj, &alive, a, b) {
            return false;
        }
    }
    true
}

fn connected_without(adj: &[BTreeSet<usize>], alive: &BTreeSet<usize>, a: usize, b: usize) -> bool {
    let rest: Vec<usize> = alive
        .iter()
        .copied()
        .filter(|&v| v != a && v != b)
        .collect();
    let Some(&start) = rest.first() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if w != a && w != b && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == rest.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_contains_itself() {
        assert!(has_minor(&Graph::complete(4), MinorPattern::K4).unwrap());
        assert!(!has_minor(&Graph::complete(4), MinorPattern::K23).unwrap());
    }

    #[test]
    fn cycle_has_no_k4() {
        assert!(!has_minor(&Graph::cycle(6), MinorPattern::K4).unwrap());
    }

    #[test]
    fn k23_found_in_five_vertex_witness() {
        // v1 v2 v3 v4 v7 with v1v2 v1v3 v1v7 v2v4 v3v4 v4v7, relabelled 0..5
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 4), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert!(has_minor(&g, MinorPattern::K23).unwrap());
    }

    #[test]
    fn outerplanarity_examples() {
        assert!(!is_outerplanar(&Graph::complete(4)));
        assert!(!is_outerplanar(&Graph::complete_bipartite(2, 3)));
        // apex 0 joined to the path 1-2-3-4-5
        let fan = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
            ],
        )
        .unwrap();
        assert!(is_outerplanar(&fan));
        assert!(is_outerplanar_by_minors(&fan).unwrap());
    }

    #[test]
    fn k4_subdivision_detected() {
        // K4 with every edge subdivided once
        let mut es = Vec::new();
        let mut next = 4;
        for u in 0..4 {
            for v in u + 1..4 {
                es.push((u, next));
                es.push((next, v));
                next += 1;
            }
        }
        let g = Graph::from_edges(next, &es).unwrap();
        assert!(has_minor(&g, MinorPattern::K4).unwrap());
        assert!(!is_outerplanar(&g));
    }

    #[test]
    fn size_guard() {
        let big = Graph::cycle(20).with_edges_added(&[Edge(0, 10)]);
        assert!(matches!(
            has_minor(&big, MinorPattern::K4),
            Err(Error::MinorSearchTooLarge { .. })
        ));
        // the elimination test has no such limit
        assert!(is_outerplanar(&big));
    }
}

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

//! Closing block boundaries and completing diagrams to maximal ones.

use std::collections::{BTreeMap, BTreeSet};

use super::{
    chords_cross, is_boundary, positions, valid_orders, BlockOrder, Diagram, RECOGNITION_LIMIT,
};
use crate::graph::{Edge, Graph};

/// Adds every missing consecutive pair of blocks with at least 3 vertices.
pub fn quasi_hamiltonize(d: &Diagram) -> (Diagram, Vec<Edge>) {
    let mut helpers = Vec::new();
    for b in &d.blocks {
        let k = b.order.len();
        if k < 3 {
            continue;
        }
        for i in 0..k {
            let e = Edge::new(b.order[i], b.order[(i + 1) % k]);
            if !d.graph.contains(e) {
                helpers.push(e);
            }
        }
    }
    helpers.sort_unstable();
    let graph = d.graph.with_edges_added(&helpers);
    let blocks = d
        .blocks
        .iter()
        .map(|b| BlockOrder {
            order: b.order.clone(),
            closed: b.order.len() >= 2,
        })
        .collect();
    (Diagram { graph, blocks }, helpers)
}

/// Greedily adds edges between positions of the fixed circular `order`,
/// scanning position pairs lexicographically. Returns the added edges.
fn complete_order(edges: &mut BTreeSet<Edge>, order: &[usize]) -> Vec<Edge> {
    let pos = positions(order);
    let k = order.len();
    let inside: BTreeSet<usize> = order.iter().copied().collect();
    let mut chords: Vec<Edge> = edges
        .iter()
        .copied()
        .filter(|e| inside.contains(&e.0) && inside.contains(&e.1) && !is_boundary(&pos, k, *e))
        .collect();
    let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
    for (i, &e) in chords.iter().enumerate() {
        for &f in &chords[i + 1..] {
            if chords_cross(&pos, e, f) {
                *count.entry(e).or_default() += 1;
                *count.entry(f).or_default() += 1;
            }
        }
    }
    let mut added = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let e = Edge::new(order[i], order[j]);
            if edges.contains(&e) {
                continue;
            }
            if is_boundary(&pos, k, e) {
                edges.insert(e);
                added.push(e);
                continue;
            }
            let hit: Vec<Edge> = chords
                .iter()
                .copied()
                .filter(|&f| chords_cross(&pos, e, f))
                .collect();
            let ok = match hit.as_slice() {
                [] => true,
                [f] => count.get(f).copied().unwrap_or(0) == 0,
                _ => false,
            };
            if ok {
                if let [f] = hit.as_slice() {
                    count.insert(*f, 1);
                    count.insert(e, 1);
                }
                chords.push(e);
                edges.insert(e);
                added.push(e);
            }
        }
    }
    added
}

/// Merges all blocks of each component into one circular order: for two
/// blocks meeting at `y`, drawn as `(y, b..)` and `(y, c..)`, the order
/// `(y, b.., c..)` with the new edge between the last `b` and first `c`.
fn merge_blocks(orders: &mut Vec<Vec<usize>>, edges: &mut BTreeSet<Edge>, added: &mut Vec<Edge>) {
    loop {
        let mut pair = None;
        'find: for i in 0..orders.len() {
            for j in i + 1..orders.len() {
                if let Some(&y) = orders[i].iter().filter(|v| orders[j].contains(v)).min() {
                    pair = Some((i, j, y));
                    break 'find;
                }
            }
        }
        let Some((i, j, y)) = pair else { return };
        let second = orders.remove(j);
        let first = orders.remove(i);
        let rot = |o: Vec<usize>| {
            let p = o.iter().position(|&v| v == y).unwrap();
            let mut o = o;
            o.rotate_left(p);
            o
        };
        let (a, b) = (rot(first), rot(second));
        let e = Edge::new(*a.last().unwrap(), b[1]);
        if edges.insert(e) {
            added.push(e);
        }
        let merged: Vec<usize> = a.into_iter().chain(b.into_iter().skip(1)).collect();
        orders.push(merged);
    }
}

/// Adds edges until no further edge keeps the drawing pseudo-outerplanar.
///
/// Blocks of one component are first merged into a single circular order.
/// Each order is then completed greedily; for blocks within the recognition
/// limit every other valid order of the completed block is tried as well and
/// the process repeats until no order admits a new edge. Distinct components
/// stay separate.
pub fn maximal_completion(d: &Diagram) -> (Diagram, Vec<Edge>) {
    let mut edges: BTreeSet<Edge> = d.graph.edges().iter().copied().collect();
    let mut orders: Vec<Vec<usize>> = d.blocks.iter().map(|b| b.order.clone()).collect();
    let mut added = Vec::new();
    merge_blocks(&mut orders, &mut edges, &mut added);
    for order in orders.iter_mut() {
        added.extend(complete_order(&mut edges, order));
        if order.len() > RECOGNITION_LIMIT {
            continue;
        }
        loop {
            let g = Graph::from_edge_set(d.graph.n(), edges.iter().copied());
            let mut improved = false;
            for cand in valid_orders(&g, order) {
                let mut trial = edges.clone();
                let more = complete_order(&mut trial, &cand);
                if !more.is_empty() {
                    edges = trial;
                    added.extend(more);
                    *order = cand;
                    improved = true;
                    break;
                }
            }
            if !improved {
                break;
            }
        }
    }
    added.sort_unstable();
    let graph = Graph::from_edge_set(d.graph.n(), edges);
    (Diagram::from_orders(graph, orders), added)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::recognize;

    #[test]
    fn k23_helpers_close_the_open_disk() {
        let d = recognize(&Graph::complete_bipartite(2, 3))
            .unwrap()
            .unwrap();
        assert_eq!(d.blocks[0].order, vec![0, 2, 1, 3, 4]);
        let before = d.crossing_pairs().unwrap();
        let (q, h) = quasi_hamiltonize(&d);
        assert_eq!(h, vec![Edge(3, 4)]);
        assert!(q.validate().is_valid());
        assert_eq!(q.crossing_pairs().unwrap(), before);
    }

    #[test]
    fn path_needs_no_helpers() {
        let d = recognize(&Graph::path(3)).unwrap().unwrap();
        assert!(quasi_hamiltonize(&d).1.is_empty());
    }

    #[test]
    fn c4_completes_to_k4() {
        let d = Diagram::from_orders(Graph::cycle(4), vec![vec![0, 1, 2, 3]]);
        let (m, added) = maximal_completion(&d);
        assert_eq!(added, vec![Edge(0, 2), Edge(1, 3)]);
        assert_eq!(m.graph, Graph::complete(4));
        assert!(m.validate().is_valid());
    }

    #[test]
    fn complete_and_single_edge_unchanged() {
        let d = recognize(&Graph::complete(4)).unwrap().unwrap();
        assert!(maximal_completion(&d).1.is_empty());
        let e = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let d = recognize(&e).unwrap().unwrap();
        assert!(maximal_completion(&d).1.is_empty());
    }

    #[test]
    fn blocks_are_merged() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = recognize(&g).unwrap().unwrap();
        let (m, _) = maximal_completion(&d);
        assert!(m.validate().is_valid());
        assert_eq!(m.blocks.len(), 1);
        for o in valid_orders(&m.graph, &[0, 1, 2, 3, 4]) {
            let mut es: BTreeSet<Edge> = m.graph.edges().iter().copied().collect();
            assert!(complete_order(&mut es, &o).is_empty());
        }
    }
}

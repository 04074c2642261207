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

//! Pseudo-outerplanar diagrams: one circular vertex order per block.
//!
//! An edge between circularly consecutive vertices of its block is a
//! boundary edge, every other block edge is a chord. Two chords cross when
//! their endpoints interleave around the circle; a valid diagram has every
//! chord crossed at most once.

mod completion;
mod hamiltonian;
mod recognize;
mod render;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use completion::{maximal_completion, quasi_hamiltonize};
pub use hamiltonian::to_hamiltonian_diagram;
pub use render::{to_dot, to_svg};
pub use recognize::{
    closed_order, recognize, recognize_with_limit, search_block_orders, valid_orders,
    RECOGNITION_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockOrder {
    pub order: Vec<usize>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagram {
    pub graph: Graph,
    pub blocks: Vec<BlockOrder>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub violations: Vec<String>,
}

impl DiagramReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Position lookup for one circular order.
pub(crate) fn positions(order: &[usize]) -> BTreeMap<usize, usize> {
    order.iter().enumerate().map(|(i, &v)| (v, i)).collect()
}

/// Whether `e` joins circularly consecutive vertices of `order`.
pub fn is_boundary(pos: &BTreeMap<usize, usize>, len: usize, e: Edge) -> bool {
    let (a, b) = (pos[&e.0], pos[&e.1]);
    let d = a.abs_diff(b);
    d == 1 || d + 1 == len
}

/// Two vertex-disjoint chords cross iff exactly one endpoint of the second
/// lies strictly between the endpoints of the first.
pub fn chords_cross(pos: &BTreeMap<usize, usize>, e: Edge, f: Edge) -> bool {
    if e.touches(f.0) || e.touches(f.1) {
        return false;
    }
    let (a, b) = minmax(pos[&e.0], pos[&e.1]);
    let inside = |p: usize| a < p && p < b;
    inside(pos[&f.0]) != inside(pos[&f.1])
}

fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Crossing pairs among `edges` drawn with the circular `order`.
pub fn crossings_in_order(order: &[usize], edges: &[Edge]) -> Vec<(Edge, Edge)> {
    let pos = positions(order);
    let chords: Vec<Edge> = edges
        .iter()
        .copied()
        .filter(|&e| !is_boundary(&pos, order.len(), e))
        .collect();
    let mut out = Vec::new();
    for (i, &e) in chords.iter().enumerate() {
        for &f in &chords[i + 1..] {
            if chords_cross(&pos, e, f) {
                out.push((e, f));
            }
        }
    }
    out
}

/// Whether every consecutive pair of `order` is an edge.
pub fn order_is_closed(g: &Graph, order: &[usize]) -> bool {
    let k = order.len();
    k >= 2 && (0..k).all(|i| g.has_edge(order[i], order[(i + 1) % k]))
}

impl Diagram {
    /// Builds a diagram whose `closed` flags are derived from the orders.
    pub fn from_orders(graph: Graph, orders: Vec<Vec<usize>>) -> Self {
        let blocks = orders
            .into_iter()
            .map(|order| BlockOrder {
                closed: order_is_closed(&graph, &order),
                order,
            })
            .collect();
        Diagram { graph, blocks }
    }

    /// Edges of the graph with both ends in block `b`.
    pub fn block_edges(&self, b: usize) -> Vec<Edge> {
        let vs: BTreeSet<usize> = self.blocks[b].order.iter().copied().collect();
        self.graph
            .edges()
            .iter()
            .copied()
            .filter(|e| vs.contains(&e.0) && vs.contains(&e.1))
            .collect()
    }

    pub fn boundary_edges(&self, b: usize) -> Vec<Edge> {
        let order = &self.blocks[b].order;
        let pos = positions(order);
        self.block_edges(b)
            .into_iter()
            .filter(|&e| is_boundary(&pos, order.len(), e))
            .collect()
    }

    pub fn chords(&self, b: usize) -> Vec<Edge> {
        let order = &self.blocks[b].order;
        let pos = positions(order);
        self.block_edges(b)
            .into_iter()
            .filter(|&e| !is_boundary(&pos, order.len(), e))
            .collect()
    }

    /// Index of the block whose order contains both ends of `e`.
    pub fn block_of_edge(&self, e: Edge) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.order.contains(&e.0) && b.order.contains(&e.1))
    }

    fn raw_crossings(&self) -> Vec<(Edge, Edge)> {
        (0..self.blocks.len())
            .flat_map(|b| crossings_in_order(&self.blocks[b].order, &self.block_edges(b)))
            .collect()
    }

    pub fn validate(&self) -> DiagramReport {
        let mut violations = Vec::new();
        let actual: BTreeSet<Vec<usize>> = self
            .graph
            .blocks()
            .blocks
            .into_iter()
            .map(|b| b.vertices)
            .collect();
        let mut drawn = BTreeSet::new();
        for (i, b) in self.blocks.iter().enumerate() {
            let mut vs = b.order.clone();
            vs.sort_unstable();
            let len = vs.len();
            vs.dedup();
            if vs.len() != len {
                violations.push(format!("block {i}: order repeats a vertex"));
            }
            if !actual.contains(&vs) {
                violations.push(format!(
                    "block {i}: {:?} is not a block of the graph",
                    b.order
                ));
            }
            drawn.insert(vs);
            if b.closed && !order_is_closed(&self.graph, &b.order) {
                violations.push(format!(
                    "block {i}: marked closed but a consecutive pair is not an edge"
                ));
            }
        }
        for vs in actual.difference(&drawn) {
            violations.push(format!("block {vs:?} has no circular order"));
        }
        if violations.is_empty() {
            let mut count: BTreeMap<Edge, Vec<Edge>> = BTreeMap::new();
            for (e, f) in self.raw_crossings() {
                count.entry(e).or_default().push(f);
                count.entry(f).or_default().push(e);
            }
            for (e, others) in count {
                if others.len() > 1 {
                    violations.push(format!(
                        "chord {e} is crossed {} times ({})",
                        others.len(),
                        others
                            .iter()
                            .map(|f| f.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ));
                }
            }
        }
        DiagramReport { violations }
    }

    fn require_valid(&self) -> Result<()> {
        let rep = self.validate();
        if rep.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(rep.violations.join("; ")))
        }
    }

    /// All crossing pairs, each with the smaller chord first.
    pub fn crossing_pairs(&self) -> Result<Vec<(Edge, Edge)>> {
        self.require_valid()?;
        let mut v: Vec<(Edge, Edge)> = self
            .raw_crossings()
            .into_iter()
            .map(|(e, f)| if e < f { (e, f) } else { (f, e) })
            .collect();
        v.sort_unstable();
        Ok(v)
    }

    pub fn crossing_count(&self) -> usize {
        self.raw_crossings().len()
    }

    /// The set of chords taking part in a crossing.
    pub fn crossed_chords(&self) -> BTreeSet<Edge> {
        self.raw_crossings()
            .into_iter()
            .flat_map(|(e, f)| [e, f])
            .collect()
    }

    /// Re-draws a modified graph by restricting the old orders. Every block
    /// of `graph` must sit inside one block of `self`; returns `None` if the
    /// restricted drawing is not valid.
    pub fn restrict(&self, graph: Graph) -> Option<Diagram> {
        let mut orders = Vec::new();
        for b in graph.blocks().blocks {
            let vs: BTreeSet<usize> = b.vertices.iter().copied().collect();
            let old = self
                .blocks
                .iter()
                .find(|o| vs.iter().all(|v| o.order.contains(v)))?;
            orders.push(
                old.order
                    .iter()
                    .copied()
                    .filter(|v| vs.contains(v))
                    .collect(),
            );
        }
        let d = Diagram::from_orders(graph, orders);
        d.validate().is_valid().then_some(d)
    }

    /// Blocks sorted by their smallest vertex, orders rotated to start there.
    pub fn normalized(mut self) -> Self {
        for b in &mut self.blocks {
            if let Some(p) = b
                .order
                .iter()
                .enumerate()
                .min_by_key(|(_, &v)| v)
                .map(|(i, _)| i)
            {
                b.order.rotate_left(p);
            }
        }
        self.blocks.sort_by(|a, b| a.order.cmp(&b.order));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Diagram {
        Diagram::from_orders(Graph::complete(4), vec![vec![0, 1, 2, 3]])
    }

    #[test]
    fn k4_has_one_crossing() {
        let d = k4();
        assert!(d.validate().is_valid());
        assert_eq!(d.crossing_pairs().unwrap(), vec![(Edge(0, 2), Edge(1, 3))]);
        assert!(d.blocks[0].closed);
    }

    #[test]
    fn c5_has_none() {
        let d = Diagram::from_orders(Graph::cycle(5), vec![vec![0, 1, 2, 3, 4]]);
        assert!(d.validate().is_valid());
        assert!(d.crossing_pairs().unwrap().is_empty());
    }

    #[test]
    fn doubly_crossed_chord_is_rejected() {
        let g = Graph::cycle(6).with_edges_added(&[Edge(0, 3), Edge(1, 4), Edge(2, 5)]);
        let d = Diagram::from_orders(g, vec![(0..6).collect()]);
        let rep = d.validate();
        assert!(!rep.is_valid());
        assert!(rep.violations.iter().any(|v| v.starts_with("chord {1,4}")));
        assert!(d.crossing_pairs().is_err());
    }

    #[test]
    fn two_disjoint_crossings_in_an_eight_cycle() {
        let g = Graph::cycle(8).with_edges_added(&[Edge(0, 2), Edge(1, 3), Edge(4, 6), Edge(5, 7)]);
        let d = Diagram::from_orders(g, vec![(0..8).collect()]);
        assert_eq!(
            d.crossing_pairs().unwrap(),
            vec![(Edge(0, 2), Edge(1, 3)), (Edge(4, 6), Edge(5, 7))]
        );
    }

    #[test]
    fn closed_flag_is_checked() {
        let g = Graph::path(4).with_edges_added(&[Edge(0, 2), Edge(1, 3)]);
        let mut d = Diagram::from_orders(g, vec![vec![0, 1, 2, 3]]);
        assert!(!d.blocks[0].closed);
        d.blocks[0].closed = true;
        assert!(!d.validate().is_valid());
    }

    #[test]
    fn order_must_match_blocks() {
        let d = Diagram::from_orders(Graph::path(3), vec![vec![0, 1, 2]]);
        assert!(!d.validate().is_valid());
        let ok = Diagram::from_orders(Graph::path(3), vec![vec![0, 1], vec![1, 2]]);
        assert!(ok.validate().is_valid());
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_value(k4()).unwrap();
        assert_eq!(s["blocks"][0]["order"], serde_json::json!([0, 1, 2, 3]));
        assert_eq!(s["blocks"][0]["closed"], serde_json::json!(true));
        assert_eq!(s["graph"]["n"], serde_json::json!(4));
    }
}

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

//! Whole-graph covers by an outerplanar graph plus a linear or star forest.

use std::collections::{BTreeSet, VecDeque};

use super::extract::{block_forest, Anchor, ForestKind};
use crate::diagram::{quasi_hamiltonize, recognize, Diagram};
use crate::error::{Error, Result};
use crate::graph::{Decomposition, Edge, Graph, Part, PartKind};

pub fn cover_outerplanar_plus(g: &Graph, kind: ForestKind) -> Result<Decomposition> {
    let d = recognize(g)?.ok_or(Error::NotPseudoOuterplanar)?;
    cover_outerplanar_plus_diagram(&d, kind)
}

/// Roots the block-cut forest at the first block of each component. Every
/// other block is anchored at the cut vertex towards the root, so forests of
/// different blocks never share a vertex.
#[allow(clippy::needless_range_loop)]
pub fn cover_outerplanar_plus_diagram(d: &Diagram, kind: ForestKind) -> Result<Decomposition> {
    let rep = d.validate();
    if !rep.is_valid() {
        return Err(Error::InvalidDiagram(rep.violations.join("; ")));
    }
    let (q, _) = quasi_hamiltonize(d);
    let nb = q.blocks.len();
    let mut parent: Vec<Option<Option<usize>>> = vec![None; nb];
    for root in 0..nb {
        if parent[root].is_some() {
            continue;
        }
        parent[root] = Some(None);
        let mut queue = VecDeque::from([root]);
        while let Some(b) = queue.pop_front() {
            for c in 0..nb {
                if parent[c].is_some() {
                    continue;
                }
                if let Some(&v) = q.blocks[c]
                    .order
                    .iter()
                    .find(|v| q.blocks[b].order.contains(v))
                {
                    parent[c] = Some(Some(v));
                    queue.push_back(c);
                }
            }
        }
    }
    let mut forest = BTreeSet::new();
    for (b, block) in q.blocks.iter().enumerate() {
        let order = &block.order;
        if order.len() < 4 {
            continue;
        }
        let edges: BTreeSet<Edge> = q.block_edges(b).into_iter().collect();
        let k = order.len();
        let anchor = parent[b].flatten().map(|y| {
            let p = order.iter().position(|&v| v == y).unwrap();
            Anchor {
                y,
                z: order[(p + 1) % k],
                x: order[(p + k - 1) % k],
            }
        });
        forest.extend(block_forest(order, &edges, kind, anchor)?);
    }
    let t: Vec<Edge> = forest.into_iter().collect();
    debug_assert!(t.iter().all(|&e| d.graph.contains(e)));
    let rest: Vec<Edge> = d
        .graph
        .edges()
        .iter()
        .copied()
        .filter(|e| !t.contains(e))
        .collect();
    let part_kind = match kind {
        ForestKind::Linear => PartKind::LinearForest,
        ForestKind::Star => PartKind::StarForest,
    };
    Ok(Decomposition {
        parts: vec![
            Part {
                kind: part_kind,
                edges: t,
            },
            Part {
                kind: PartKind::OuterplanarRemainder,
                edges: rest,
            },
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> Graph {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let k23 = [(3, 5), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7)];
        Graph::from_edges(8, &[&k4[..], &k23[..]].concat()).unwrap()
    }

    #[test]
    fn fig1_covers() {
        for kind in [ForestKind::Linear, ForestKind::Star] {
            let dec = cover_outerplanar_plus(&fig1(), kind).unwrap();
            assert!(dec.verify(&fig1()).is_empty(), "{:?}", dec.verify(&fig1()));
        }
    }

    #[test]
    fn outerplanar_input_gives_empty_forest() {
        let g = Graph::cycle(6).with_edges_added(&[Edge(0, 2), Edge(0, 3)]);
        let dec = cover_outerplanar_plus(&g, ForestKind::Linear).unwrap();
        assert!(dec.parts[0].edges.is_empty());
        assert_eq!(dec.parts[1].edges.len(), g.edge_count());
    }

    #[test]
    fn k5_is_rejected() {
        assert!(matches!(
            cover_outerplanar_plus(&Graph::complete(5), ForestKind::Star),
            Err(Error::NotPseudoOuterplanar)
        ));
    }
}

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

//! Peeling maximal diagrams and the two-forests-plus-matching split.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::diagram::{maximal_completion, recognize, BlockOrder, Diagram};
use crate::error::{Error, Result};
use crate::graph::{Decomposition, Edge, Graph, Part, PartKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PieceKind {
    K3,
    K4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    pub kind: PieceKind,
    /// Vertices deleted from the diagram.
    pub removed: Vec<usize>,
    pub glue: Edge,
    pub smaller: Diagram,
}

/// Removes one glued `K3` or `K4` from the first block with at least three
/// vertices. Among all pieces the one with the smallest removed vertices is
/// taken.
pub fn peel_maximal(d: &Diagram) -> Result<PeelStep> {
    let b = d
        .blocks
        .iter()
        .position(|b| b.order.len() >= 3)
        .ok_or(Error::Atomic)?;
    let order = &d.blocks[b].order;
    let g = &d.graph;
    let k = order.len();
    let at = |i: usize| order[i % k];
    let mut best: Option<(Vec<usize>, PieceKind, Edge)> = None;
    let mut offer = |removed: Vec<usize>, kind: PieceKind, glue: Edge| {
        let mut key = removed.clone();
        key.sort_unstable();
        if best.as_ref().is_none_or(|(r, _, _)| key < *r) {
            best = Some((key, kind, glue));
        }
    };
    for i in 0..k {
        let (a, v, c) = (at(i + k - 1), at(i), at(i + 1));
        if g.degree(v) == 2 && g.has_edge(a, c) && g.has_edge(a, v) && g.has_edge(v, c) {
            offer(vec![v], PieceKind::K3, Edge::new(a, c));
        }
        if k >= 4 {
            let (a, p, q, c) = (at(i), at(i + 1), at(i + 2), at(i + 3));
            let glued = if k == 4 { true } else { g.has_edge(a, c) };
            if glued
                && g.degree(p) == 3
                && g.degree(q) == 3
                && g.has_edge(a, q)
                && g.has_edge(p, c)
                && g.has_edge(a, p)
                && g.has_edge(p, q)
                && g.has_edge(q, c)
                && g.has_edge(a, c)
            {
                offer(vec![p, q], PieceKind::K4, Edge::new(a, c));
            }
        }
    }
    let (removed, kind, glue) = best.ok_or_else(|| {
        Error::Diagnostic("no K3 or K4 piece in a diagram assumed maximal".into())
    })?;
    let graph = g.without_vertices(&removed);
    let mut blocks = d.blocks.clone();
    let rest: Vec<usize> = order
        .iter()
        .copied()
        .filter(|v| !removed.contains(v))
        .collect();
    blocks[b] = BlockOrder {
        closed: true,
        order: rest,
    };
    let smaller = Diagram { graph, blocks };
    let rep = smaller.validate();
    if !rep.is_valid() {
        return Err(Error::Diagnostic(format!(
            "peeled diagram invalid: {}",
            rep.violations.join("; ")
        )));
    }
    Ok(PeelStep {
        kind,
        removed,
        glue,
        smaller,
    })
}

#[derive(Default)]
struct Triple {
    f1: BTreeSet<Edge>,
    f2: BTreeSet<Edge>,
    m: BTreeSet<Edge>,
}

fn split_block(d: Diagram) -> Result<Triple> {
    let mut steps = Vec::new();
    let mut cur = d;
    while cur.blocks.iter().any(|b| b.order.len() >= 3) {
        let s = peel_maximal(&cur)?;
        cur = s.smaller.clone();
        steps.push(s);
    }
    let mut t = Triple::default();
    t.f1.extend(cur.graph.edges().iter().copied());
    for s in steps.into_iter().rev() {
        let (x, y) = (s.glue.0, s.glue.1);
        match s.kind {
            PieceKind::K3 => {
                let z = s.removed[0];
                t.f1.insert(Edge::new(x, z));
                t.f2.insert(Edge::new(y, z));
            }
            PieceKind::K4 => {
                let (u, v) = (s.removed[0], s.removed[1]);
                t.f1.extend([Edge::new(x, u), Edge::new(x, v)]);
                t.f2.extend([Edge::new(y, u), Edge::new(y, v)]);
                t.m.insert(Edge::new(u, v));
            }
        }
    }
    Ok(t)
}

pub fn two_forests_plus_matching(g: &Graph) -> Result<Decomposition> {
    let d = recognize(g)?.ok_or(Error::NotPseudoOuterplanar)?;
    two_forests_plus_matching_diagram(&d)
}

/// Completes the diagram, peels each component down to an edge, assigns
/// the glued pieces and finally restricts all three parts to `E(g)`.
pub fn two_forests_plus_matching_diagram(d: &Diagram) -> Result<Decomposition> {
    let rep = d.validate();
    if !rep.is_valid() {
        return Err(Error::InvalidDiagram(rep.violations.join("; ")));
    }
    let (m, _) = maximal_completion(d);
    let mut all = Triple::default();
    for block in &m.blocks {
        let vs: BTreeSet<usize> = block.order.iter().copied().collect();
        let sub = Graph::from_edge_set(
            m.graph.n(),
            m.graph
                .edges()
                .iter()
                .copied()
                .filter(|e| vs.contains(&e.0) && vs.contains(&e.1)),
        );
        let t = split_block(Diagram {
            graph: sub,
            blocks: vec![block.clone()],
        })?;
        all.f1.extend(t.f1);
        all.f2.extend(t.f2);
        all.m.extend(t.m);
    }
    let keep = |s: BTreeSet<Edge>| -> Vec<Edge> {
        s.into_iter().filter(|&e| d.graph.contains(e)).collect()
    };
    Ok(Decomposition {
        parts: vec![
            Part {
                kind: PartKind::Forest,
                edges: keep(all.f1),
            },
            Part {
                kind: PartKind::Forest,
                edges: keep(all.f2),
            },
            Part {
                kind: PartKind::Matching,
                edges: keep(all.m),
            },
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_peels_to_an_edge() {
        let d = recognize(&Graph::complete(3)).unwrap().unwrap();
        let s = peel_maximal(&d).unwrap();
        assert_eq!(s.kind, PieceKind::K3);
        assert_eq!(s.removed, vec![0]);
        assert_eq!(s.smaller.graph.edges(), &[Edge(1, 2)]);
    }

    #[test]
    fn k4_peels_to_an_edge() {
        let c4 = Diagram::from_orders(Graph::cycle(4), vec![vec![0, 1, 2, 3]]);
        let (m, _) = maximal_completion(&c4);
        let s = peel_maximal(&m).unwrap();
        assert_eq!(s.kind, PieceKind::K4);
        assert_eq!(s.smaller.graph.edge_count(), 1);
        assert!(s.smaller.validate().is_valid());
    }

    #[test]
    fn edge_is_atomic() {
        let d = recognize(&Graph::path(2)).unwrap().unwrap();
        assert!(matches!(peel_maximal(&d), Err(Error::Atomic)));
    }

    #[test]
    fn k4_two_forests_and_matching() {
        let g = Graph::complete(4);
        let dec = two_forests_plus_matching(&g).unwrap();
        assert!(dec.verify(&g).is_empty());
        let sizes: Vec<usize> = dec.parts.iter().map(|p| p.edges.len()).collect();
        assert_eq!(sizes, vec![3, 2, 1]);
    }

    #[test]
    fn c5_split() {
        let g = Graph::cycle(5);
        let dec = two_forests_plus_matching(&g).unwrap();
        assert!(dec.verify(&g).is_empty());
    }
}

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

//! Forests of crossed chords whose removal leaves an outerplanar drawing.
//!
//! An instance is a closed block order written from `y`: `cyc[0] = y`,
//! `cyc[1] = z`, `cyc[last] = x`. The recursion splits the block along
//! chords at `y`, closing each piece with a boundary helper edge. Helpers
//! are never crossed, so they never enter the forest.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::diagram::{crossings_in_order, Diagram};
use crate::error::{Error, Result};
use crate::graph::{classify_edges, star_roots, Edge};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForestKind {
    Linear,
    Star,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionResult {
    pub forest: Vec<Edge>,
    pub remainder: Diagram,
}

/// Endpoint constraints for a block: `y` must be avoided, `x` and `z` may
/// only be path ends (linear) or roots (star).
#[derive(Debug, Clone, Copy)]
pub(crate) struct Anchor {
    pub y: usize,
    pub x: usize,
    pub z: usize,
}

fn induced(edges: &BTreeSet<Edge>, vs: &[usize], helpers: &[Edge]) -> BTreeSet<Edge> {
    let set: BTreeSet<usize> = vs.iter().copied().collect();
    edges
        .iter()
        .copied()
        .filter(|e| set.contains(&e.0) && set.contains(&e.1))
        .chain(
            helpers
                .iter()
                .copied()
                .filter(|h| h.0 != h.1 && set.contains(&h.0) && set.contains(&h.1)),
        )
        .collect()
}

fn prepend(y: usize, rest: &[usize]) -> Vec<usize> {
    std::iter::once(y).chain(rest.iter().copied()).collect()
}

/// The case recursion. For linear forests the result always satisfies the
/// constraints; for star forests it may not and is checked by the caller.
fn build(cyc: &[usize], edges: &BTreeSet<Edge>) -> BTreeSet<Edge> {
    let n = cyc.len();
    let ev: Vec<Edge> = edges.iter().copied().collect();
    let pairs = crossings_in_order(cyc, &ev);
    if pairs.is_empty() {
        return BTreeSet::new();
    }
    if n <= 4 {
        return [Edge::new(cyc[1], cyc[3])].into();
    }
    let (y, z, x) = (cyc[0], cyc[1], cyc[n - 1]);
    let has = |a: usize, b: usize| edges.contains(&Edge::new(a, b));
    let ny: Vec<usize> = (1..n).filter(|&p| has(y, cyc[p])).collect();

    if ny.len() == 2 {
        let sub = prepend(x, &cyc[1..n - 1]);
        return build(&sub, &induced(edges, &sub, &[Edge::new(x, z)]));
    }

    if ny.len() == 3 && has(x, z) {
        let pw = ny[1];
        let w = cyc[pw];
        let mut t = BTreeSet::from([Edge::new(x, z)]);
        if pw > 2 {
            let s1 = &cyc[1..=pw];
            t.extend(build(s1, &induced(edges, s1, &[Edge::new(z, w)])));
        }
        if pw < n - 2 {
            let s2 = prepend(x, &cyc[pw..n - 1]);
            t.extend(build(&s2, &induced(edges, &s2, &[Edge::new(w, x)])));
        }
        return t;
    }

    let p2 = ny[1];
    let y2 = cyc[p2];
    let yy2 = Edge::new(y, y2);
    let partner = pairs.iter().find_map(|&(e, f)| {
        if e == yy2 {
            Some(f)
        } else if f == yy2 {
            Some(e)
        } else {
            None
        }
    });
    let pos = |v: usize| cyc.iter().position(|&u| u == v).unwrap();
    let mut t = BTreeSet::new();
    match partner {
        None => {
            let s1 = &cyc[..=p2];
            let s2 = prepend(y, &cyc[p2..]);
            t.extend(build(s1, &induced(edges, s1, &[])));
            t.extend(build(&s2, &induced(edges, &s2, &[])));
        }
        Some(f) => {
            let (pl, pr) = {
                let (a, b) = (pos(f.0), pos(f.1));
                (a.min(b), a.max(b))
            };
            let (l, r) = (cyc[pl], cyc[pr]);
            let helpers = [Edge::new(y, l), Edge::new(y, r)];
            if pl > 1 {
                let s1 = &cyc[..=pl];
                t.extend(build(s1, &induced(edges, s1, &helpers)));
            }
            let s2 = prepend(y, &cyc[pl..=pr]);
            t.extend(build(&s2, &induced(edges, &s2, &helpers)));
            if pr < n - 1 {
                let s3 = prepend(y, &cyc[pr..]);
                t.extend(build(&s3, &induced(edges, &s3, &helpers)));
            }
        }
    }
    t
}

/// Whether `t` has the required kind and respects the anchor. Every
/// condition is preserved under taking subsets, so it also prunes searches.
pub(crate) fn forest_ok(kind: ForestKind, t: &[Edge], anchor: Option<Anchor>) -> bool {
    let n = t.iter().map(|e| e.1 + 1).max().unwrap_or(0);
    let k = classify_edges(n, t);
    let ok_kind = match kind {
        ForestKind::Linear => k.is_linear_forest,
        ForestKind::Star => k.is_star_forest,
    };
    if !ok_kind {
        return false;
    }
    let Some(a) = anchor else { return true };
    let deg = |v: usize| t.iter().filter(|e| e.touches(v)).count();
    if deg(a.y) > 0 {
        return false;
    }
    match kind {
        ForestKind::Linear => deg(a.x) <= 1 && deg(a.z) <= 1,
        ForestKind::Star => {
            let roots = star_roots(n, t);
            [a.x, a.z]
                .iter()
                .all(|&v| deg(v) == 0 || roots.contains(&v))
        }
    }
}

/// Picks one chord from every crossing pair by backtracking.
pub(crate) fn exact_choice(
    pairs: &[(Edge, Edge)],
    kind: ForestKind,
    anchor: Option<Anchor>,
) -> Option<BTreeSet<Edge>> {
    fn go(
        i: usize,
        pairs: &[(Edge, Edge)],
        kind: ForestKind,
        anchor: Option<Anchor>,
        t: &mut Vec<Edge>,
    ) -> bool {
        if i == pairs.len() {
            return true;
        }
        let (e, f) = pairs[i];
        for c in [e, f] {
            if t.contains(&c) {
                return go(i + 1, pairs, kind, anchor, t);
            }
        }
        for c in [e, f] {
            t.push(c);
            if forest_ok(kind, t, anchor) && go(i + 1, pairs, kind, anchor, t) {
                return true;
            }
            t.pop();
        }
        false
    }
    let mut t = Vec::new();
    go(0, pairs, kind, anchor, &mut t).then(|| t.into_iter().collect())
}

/// Forest for one closed block order. With an anchor the order is rotated
/// to start at `y` and oriented towards `z`; without one every starting
/// vertex is tried before the exact search.
pub(crate) fn block_forest(
    order: &[usize],
    edges: &BTreeSet<Edge>,
    kind: ForestKind,
    anchor: Option<Anchor>,
) -> Result<BTreeSet<Edge>> {
    let ev: Vec<Edge> = edges.iter().copied().collect();
    let pairs = crossings_in_order(order, &ev);
    if pairs.is_empty() {
        return Ok(BTreeSet::new());
    }
    let k = order.len();
    let oriented = |y: usize, z: usize| -> Vec<usize> {
        let p = order.iter().position(|&v| v == y).unwrap();
        let fwd = order[(p + 1) % k] == z;
        (0..k)
            .map(|i| {
                if fwd {
                    order[(p + i) % k]
                } else {
                    order[(p + k - i) % k]
                }
            })
            .collect()
    };
    let anchors: Vec<Anchor> = match anchor {
        Some(a) => vec![a],
        None => (0..k)
            .map(|p| Anchor {
                y: order[p],
                z: order[(p + 1) % k],
                x: order[(p + k - 1) % k],
            })
            .collect(),
    };
    for a in &anchors {
        let cyc = oriented(a.y, a.z);
        let t = build(&cyc, edges);
        let tv: Vec<Edge> = t.iter().copied().collect();
        let covers = pairs.iter().all(|(e, f)| t.contains(e) || t.contains(f));
        let within = pairs
            .iter()
            .flat_map(|&(e, f)| [e, f])
            .collect::<BTreeSet<_>>();
        if covers && t.is_subset(&within) && forest_ok(kind, &tv, anchor.map(|_| *a)) {
            return Ok(t);
        }
        if kind == ForestKind::Linear {
            return Err(Error::Diagnostic(format!(
                "linear forest recursion produced an invalid forest at y={}",
                a.y
            )));
        }
    }
    exact_choice(&pairs, kind, anchor).ok_or_else(|| {
        Error::Infeasible(match anchor {
            Some(a) => format!(
                "no {kind:?} forest of crossed chords avoids {} with {} and {} as roots",
                a.y, a.x, a.z
            )
            .to_lowercase(),
            None => format!("no {kind:?} forest of crossed chords exists").to_lowercase(),
        })
    })
}

fn extract(
    d: &Diagram,
    y: usize,
    x: usize,
    z: usize,
    kind: ForestKind,
) -> Result<ExtractionResult> {
    let rep = d.validate();
    if !rep.is_valid() {
        return Err(Error::InvalidDiagram(rep.violations.join("; ")));
    }
    let b = d
        .blocks
        .iter()
        .position(|b| b.order.len() >= 3 && b.order.contains(&y))
        .ok_or_else(|| {
            Error::Precondition(format!("{y} is not on a block with 3 or more vertices"))
        })?;
    let block = &d.blocks[b];
    if !block.closed {
        return Err(Error::Precondition("block boundary is not closed".into()));
    }
    let k = block.order.len();
    let p = block.order.iter().position(|&v| v == y).unwrap();
    let around = [block.order[(p + 1) % k], block.order[(p + k - 1) % k]];
    if x == z || !around.contains(&x) || !around.contains(&z) {
        return Err(Error::Precondition(format!(
            "{x} and {z} must be the boundary neighbours of {y}"
        )));
    }
    let edges: BTreeSet<Edge> = d.block_edges(b).into_iter().collect();
    let t = block_forest(&block.order, &edges, kind, Some(Anchor { y, x, z }))?;
    let forest: Vec<Edge> = t.into_iter().collect();
    let remainder = Diagram {
        graph: d.graph.with_edges_removed(&forest),
        blocks: d.blocks.clone(),
    };
    Ok(ExtractionResult { forest, remainder })
}

pub fn extract_linear_forest(
    d: &Diagram,
    y: usize,
    x: usize,
    z: usize,
) -> Result<ExtractionResult> {
    extract(d, y, x, z, ForestKind::Linear)
}

/// Star-forest analogue. Returns `Error::Infeasible` when no star forest of
/// crossed chords satisfies the anchor constraints, which can happen.
pub fn extract_star_forest(d: &Diagram, y: usize, x: usize, z: usize) -> Result<ExtractionResult> {
    extract(d, y, x, z, ForestKind::Star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k4() -> Diagram {
        Diagram::from_orders(Graph::complete(4), vec![vec![0, 1, 2, 3]])
    }

    fn c5_crossed() -> Diagram {
        let g = Graph::cycle(5).with_edges_added(&[Edge(0, 2), Edge(1, 4)]);
        Diagram::from_orders(g, vec![(0..5).collect()])
    }

    #[test]
    fn k4_linear_and_star() {
        for f in [extract_linear_forest, extract_star_forest] {
            let r = f(&k4(), 0, 3, 1).unwrap();
            assert_eq!(r.forest, vec![Edge(1, 3)]);
            assert_eq!(r.remainder.crossing_count(), 0);
        }
    }

    #[test]
    fn c5_with_one_crossing() {
        let r = extract_linear_forest(&c5_crossed(), 3, 4, 2).unwrap();
        assert_eq!(r.forest, vec![Edge(0, 2)]);
        let r = extract_linear_forest(&c5_crossed(), 3, 2, 4).unwrap();
        assert_eq!(r.forest, vec![Edge(1, 4)]);
        let r = extract_star_forest(&c5_crossed(), 3, 4, 2).unwrap();
        assert_eq!(r.forest, vec![Edge(0, 2)]);
    }

    #[test]
    fn outerplanar_gives_nothing() {
        let g = Graph::cycle(6).with_edges_added(&[Edge(0, 2), Edge(0, 3)]);
        let d = Diagram::from_orders(g, vec![(0..6).collect()]);
        assert!(extract_linear_forest(&d, 0, 5, 1)
            .unwrap()
            .forest
            .is_empty());
    }

    #[test]
    fn bad_anchor_is_rejected() {
        assert!(matches!(
            extract_linear_forest(&k4(), 0, 2, 1),
            Err(Error::Precondition(_))
        ));
    }

    /// Three crossing pairs whose non-`y` chords form the path 1-3-5-7.
    #[test]
    fn star_forest_can_be_impossible() {
        let g = Graph::cycle(8).with_edges_added(&[
            Edge(0, 2),
            Edge(1, 3),
            Edge(0, 3),
            Edge(0, 4),
            Edge(3, 5),
            Edge(0, 5),
            Edge(0, 6),
            Edge(5, 7),
        ]);
        let d = Diagram::from_orders(g, vec![(0..8).collect()]);
        assert!(d.validate().is_valid());
        assert_eq!(d.crossing_pairs().unwrap().len(), 3);
        assert!(matches!(
            extract_star_forest(&d, 0, 7, 1),
            Err(Error::Infeasible(_))
        ));
        let lin = extract_linear_forest(&d, 0, 7, 1).unwrap();
        assert_eq!(lin.forest, vec![Edge(1, 3), Edge(3, 5), Edge(5, 7)]);
    }
}

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

use std::collections::{BTreeMap, BTreeSet};

use crate::canon::{canonical_key, CanonicalKey, CANON_LIMIT};
use crate::diagram::{recognize, Diagram};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Labeled enumeration is exponential in `n(n-1)/2`.
pub const LABELED_LIMIT: usize = 7;

fn extend(g: &Graph, out: &mut BTreeMap<CanonicalKey, Graph>) -> Result<()> {
    let n = g.n();
    for mask in 1u32..(1 << n) {
        let new: Vec<Edge> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| Edge(i, n))
            .collect();
        let h = Graph::from_edge_set(n + 1, g.edges().iter().copied().chain(new));
        let key = canonical_key(&h)?;
        out.entry(key).or_insert(h);
    }
    Ok(())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > CANON_LIMIT {
        return Err(Error::Precondition(format!(
            "n must be in 1..={CANON_LIMIT}"
        )));
    }
    Ok(())
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, sorted by canonical key.
pub fn connected_classes(n: usize) -> Result<Vec<Graph>> {
    check_n(n)?;
    let mut level: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    level.insert(canonical_key(&Graph::empty(1))?, Graph::empty(1));
    for _ in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            extend(g, &mut next)?;
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

fn po_level(n: usize) -> Result<Vec<BTreeMap<CanonicalKey, (Graph, Diagram)>>> {
    check_n(n)?;
    let g1 = Graph::empty(1);
    let d1 = recognize(&g1)?.expect("single vertex");
    let mut levels = vec![BTreeMap::from([(canonical_key(&g1)?, (g1, d1))])];
    for _ in 1..n {
        let mut cand = BTreeMap::new();
        // connected PO graphs always have a non-cut vertex whose removal
        // leaves a connected PO graph, so extending PO classes suffices
        for (g, _) in levels.last().unwrap().values() {
            extend(g, &mut cand)?;
        }
        let mut next = BTreeMap::new();
        for (k, h) in cand {
            if let Some(d) = recognize(&h)? {
                next.insert(k, (h, d));
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Connected pseudo-outerplanar graphs on `n` vertices up to isomorphism,
/// each with a recognized diagram, sorted by canonical key.
pub fn enumerate_po(n: usize) -> Result<Vec<(Graph, Diagram)>> {
    Ok(po_level(n)?.pop().unwrap().into_values().collect())
}

/// Every class for `2 <= n <= max_n`, ordered by size then key.
pub fn po_corpus(max_n: usize) -> Result<Vec<(Graph, Diagram)>> {
    let levels = po_level(max_n)?;
    Ok(levels
        .into_iter()
        .skip(1)
        .flat_map(|l| l.into_values())
        .collect())
}

/// Every distinct relabeling of `g`.
pub fn labeled_orbit(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    loop {
        let mut es: Vec<Edge> = g
            .edges()
            .iter()
            .map(|e| Edge::new(perm[e.0], perm[e.1]))
            .collect();
        es.sort_unstable();
        if seen.insert(es.clone()) {
            out.push(Graph::from_edge_set(n, es));
        }
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All connected labeled graphs on `n` vertices that `recognize` accepts,
/// found as the orbits of the unlabeled classes. Each entry carries the
/// index of its class in `enumerate_po(n)`.
pub fn enumerate_labeled_po(n: usize) -> Result<Vec<(Graph, Diagram, usize)>> {
    if n == 0 || n > LABELED_LIMIT {
        return Err(Error::Precondition(format!(
            "labeled enumeration needs 1 <= n <= {LABELED_LIMIT}"
        )));
    }
    let mut out = Vec::new();
    for (i, (g, _)) in enumerate_po(n)?.iter().enumerate() {
        for h in labeled_orbit(g) {
            let d = recognize(&h)?
                .ok_or_else(|| Error::Diagnostic(format!("relabeled class {i} rejected")))?;
            out.push((h, d, i));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn connected_class_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| connected_classes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(connected_classes(7).unwrap().len(), 853);
    }

    #[test]
    fn small_po_classes() {
        assert_eq!(enumerate_po(3).unwrap().len(), 2);
        let four = enumerate_po(4).unwrap();
        assert_eq!(four.len(), 6);
        let five = enumerate_po(5).unwrap();
        // missing: K5, K5 - e and the wheel W4
        assert_eq!(five.len(), 18);
        assert!(five.iter().all(|(g, _)| g.edge_count() <= 8));
        let w4 = Graph::from_edges(
            5,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 0),
                (4, 1),
                (4, 2),
                (4, 3),
            ],
        )
        .unwrap();
        let k = canonical_key(&w4).unwrap();
        assert!(five.iter().all(|(g, _)| canonical_key(g).unwrap() != k));
    }

    #[test]
    fn labeled_matches_direct_enumeration() {
        for n in 2..=5 {
            let pairs: Vec<Edge> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| Edge(u, v)))
                .collect();
            let mut direct = BTreeSet::new();
            for mask in 0u64..(1 << pairs.len()) {
                let g = Graph::from_edge_set(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                );
                if g.is_connected() && recognize(&g).unwrap().is_some() {
                    direct.insert(g.edges().to_vec());
                }
            }
            let orbits = enumerate_labeled_po(n).unwrap();
            let via: BTreeSet<_> = orbits.iter().map(|(g, _, _)| g.edges().to_vec()).collect();
            assert_eq!(via.len(), orbits.len());
            assert_eq!(via, direct, "n = {n}");
        }
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(labeled_orbit(&Graph::complete(4)).len(), 1);
        assert_eq!(labeled_orbit(&Graph::cycle(5)).len(), 12);
        assert_eq!(labeled_orbit(&Graph::path(4)).len(), 12);
    }

    #[test]
    fn diagrams_validate() {
        for (g, d) in po_corpus(6).unwrap() {
            assert!(d.validate().is_valid(), "{:?}", g.edges());
        }
    }
}

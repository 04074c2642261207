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

//! Canonical forms for small graphs by exhaustive relabelling.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub const CANON_LIMIT: usize = 8;

/// Vertex count plus the largest upper-triangle adjacency bitmask over all
/// relabellings that list vertices in non-decreasing degree order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    pub n: usize,
    pub bits: u64,
}

fn pair_bit(i: usize, j: usize, n: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    // row-major index of (i, j) in the strict upper triangle
    (i * (2 * n - i - 1) / 2 + (j - i - 1)) as u32
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    let n = g.n();
    if n > CANON_LIMIT {
        return Err(Error::Precondition(format!(
            "canonical form limited to {CANON_LIMIT} vertices"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    // split into runs of equal degree
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut labels = vec![0usize; n];
    permute_classes(&classes, 0, &mut Vec::new(), &mut |seq: &[usize]| {
        for (pos, &v) in seq.iter().enumerate() {
            labels[v] = pos;
        }
        let bits = g.edges().iter().fold(0u64, |m, e| {
            m | (1u64 << pair_bit(labels[e.0], labels[e.1], n))
        });
        best = best.max(bits);
    });
    Ok(CanonicalKey { n, bits: best })
}

fn permute_classes(
    classes: &[Vec<usize>],
    idx: usize,
    prefix: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if idx == classes.len() {
        f(prefix);
        return;
    }
    let mut class = classes[idx].clone();
    let k = class.len();
    let mut c = vec![0usize; k];
    let base = prefix.len();
    prefix.extend_from_slice(&class);
    permute_classes(classes, idx + 1, prefix, f);
    prefix.truncate(base);
    // Heap's algorithm
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                class.swap(0, i);
            } else {
                class.swap(c[i], i);
            }
            prefix.extend_from_slice(&class);
            permute_classes(classes, idx + 1, prefix, f);
            prefix.truncate(base);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Rebuilds the canonical representative graph from its key.
pub fn from_key(key: CanonicalKey) -> Graph {
    let n = key.n;
    let mut es = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if key.bits >> pair_bit(i, j, n) & 1 == 1 {
                es.push(Edge(i, j));
            }
        }
    }
    Graph::from_edge_set(n, es)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_graphs_share_a_key() {
        let a = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]).unwrap();
        let b = Graph::from_edges(5, &[(4, 3), (3, 2), (2, 1), (1, 0), (4, 2)]).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap());
        assert!(!is_isomorphic(&a, &Graph::cycle(5)).unwrap());
    }

    #[test]
    fn key_round_trip() {
        let k4 = Graph::complete(4);
        let key = canonical_key(&k4).unwrap();
        assert!(is_isomorphic(&from_key(key), &k4).unwrap());
        assert_eq!(canonical_key(&from_key(key)).unwrap(), key);
    }

    #[test]
    fn too_large() {
        assert!(canonical_key(&Graph::cycle(9)).is_err());
    }
}

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

//! Graph families with their diagrams, and a seeded random diagram source.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{chords_cross, is_boundary, positions, recognize, Diagram};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Pn,
    Qn,
    Gn,
    Mat12,
    Fig1,
    RandomPo,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub parameter: usize,
    pub seed: Option<u64>,
    pub density: Option<f64>,
}

pub fn generate(req: FamilySpec) -> Result<(Graph, Diagram)> {
    match req.family {
        Family::Pn => gen_pn(req.parameter),
        Family::Qn => gen_qn(req.parameter),
        Family::Gn => gen_gn(req.parameter),
        Family::Mat12 => {
            if req.parameter != 12 && req.parameter != 0 {
                return Err(Error::Precondition("mat12 only exists for n = 12".into()));
            }
            Ok(gen_mat12())
        }
        Family::Fig1 => Ok(gen_fig1()),
        Family::RandomPo => {
            let d = gen_random_po(
                req.parameter,
                req.seed.unwrap_or(0),
                req.density.unwrap_or(0.5),
            )?;
            Ok((d.graph.clone(), d))
        }
    }
}

fn on_circle(n: usize, pairs: &[(usize, usize)]) -> (Graph, Diagram) {
    let g = Graph::from_edges(n, pairs).expect("family edges are simple");
    let d = Diagram::from_orders(g.clone(), vec![(0..n).collect()]);
    (g, d)
}

/// Cycle `x0..xn w yn..y0 v u` with rungs `xi yi` and the crossing pair
/// `x0 v`, `y0 u`. Vertices are numbered along the cycle.
pub fn gen_pn(n: usize) -> Result<(Graph, Diagram)> {
    if n < 1 {
        return Err(Error::Precondition("P_n needs n >= 1".into()));
    }
    let x = |i: usize| i;
    let w = n + 1;
    let y = |i: usize| n + 2 + (n - i);
    let (v, u) = (2 * n + 3, 2 * n + 4);
    let total = 2 * n + 5;
    let mut pairs: Vec<(usize, usize)> = (0..total).map(|i| (i, (i + 1) % total)).collect();
    pairs.extend((1..=n).map(|i| (x(i), y(i))));
    pairs.push((x(0), v));
    pairs.push((y(0), u));
    debug_assert_eq!(w, x(n) + 1);
    Ok(on_circle(total, &pairs))
}

/// Cycle `z1..z2n` with a triangle `ui vi wi` hung off each pair
/// `z(2i-1) z(2i)`. Drawn as `z(2i-1) vi ui wi z(2i)` around the circle.
/// For `n = 1` the cycle degenerates to the single edge `z1 z2`.
pub fn gen_qn(n: usize) -> Result<(Graph, Diagram)> {
    if n < 1 {
        return Err(Error::Precondition("Q_n needs n >= 1".into()));
    }
    let base = |i: usize| 5 * i;
    let (za, v, u, w, zb) = (
        |i| base(i),
        |i| base(i) + 1,
        |i| base(i) + 2,
        |i| base(i) + 3,
        |i| base(i) + 4,
    );
    let mut set = std::collections::BTreeSet::new();
    for i in 0..n {
        set.insert(Edge::new(za(i), zb(i)));
        set.insert(Edge::new(zb(i), za((i + 1) % n)));
        for e in [
            (u(i), v(i)),
            (v(i), w(i)),
            (w(i), u(i)),
            (v(i), za(i)),
            (v(i), zb(i)),
            (w(i), za(i)),
            (w(i), zb(i)),
        ] {
            set.insert(Edge::new(e.0, e.1));
        }
    }
    let g = Graph::from_edge_set(5 * n, set);
    let d = Diagram::from_orders(g.clone(), vec![(0..5 * n).collect()]);
    Ok((g, d))
}

/// Cycle `v1..vn`, the fan `v1 vi` for `3 <= i <= n-1` and the chords
/// `v(2i) v(2i+2)` for `1 <= i <= n/2 - 1`.
pub fn gen_gn(n: usize) -> Result<(Graph, Diagram)> {
    if n < 6 {
        return Err(Error::Precondition("G_n needs n >= 6".into()));
    }
    let v = |i: usize| i - 1;
    let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    pairs.extend((3..n).map(|i| (v(1), v(i))));
    pairs.extend((1..n / 2).map(|i| (v(2 * i), v(2 * i + 2))));
    Ok(on_circle(n, &pairs))
}

/// Twelve vertices: four copies of `S_i` at `i = 1, 4, 7, 10` plus the
/// diagonals `v1 v7` and `v4 v10`.
pub fn gen_mat12() -> (Graph, Diagram) {
    let v = |i: usize| (i - 1) % 12;
    let mut pairs = Vec::new();
    for i in [1, 4, 7, 10] {
        pairs.extend([
            (v(i), v(i + 1)),
            (v(i), v(i + 2)),
            (v(i), v(i + 3)),
            (v(i + 1), v(i + 3)),
            (v(i + 2), v(i + 3)),
        ]);
    }
    pairs.push((v(1), v(7)));
    pairs.push((v(4), v(10)));
    on_circle(12, &pairs)
}

/// `K4` on `0..4` and `K2,3` with sides `{3,4}`, `{5,6,7}`, sharing vertex 3.
pub fn gen_fig1() -> (Graph, Diagram) {
    let mut pairs = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for a in [3, 4] {
        for b in [5, 6, 7] {
            pairs.push((a, b));
        }
    }
    let g = Graph::from_edges(8, &pairs).expect("simple");
    let d = recognize(&g)
        .expect("small blocks")
        .expect("pseudo-outerplanar");
    (g, d)
}

/// Random closed diagram on `n` vertices: a shuffled circular order, its
/// boundary cycle, then each remaining pair in random order is offered with
/// probability `density` and kept if no chord ends up crossed twice.
pub fn gen_random_po(n: usize, seed: u64, density: f64) -> Result<Diagram> {
    if n < 3 {
        return Err(Error::Precondition("random diagrams need n >= 3".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Precondition("density must lie in [0, 1]".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let pos = positions(&order);
    let mut edges: Vec<Edge> = (0..n)
        .map(|i| Edge::new(order[i], order[(i + 1) % n]))
        .collect();
    let mut candidates: Vec<Edge> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let e = Edge(a, b);
            if !is_boundary(&pos, n, e) {
                candidates.push(e);
            }
        }
    }
    candidates.shuffle(&mut rng);
    let mut chords: Vec<(Edge, usize)> = Vec::new();
    for e in candidates {
        if !rng.gen_bool(density) {
            continue;
        }
        let hit: Vec<usize> = (0..chords.len())
            .filter(|&i| chords_cross(&pos, e, chords[i].0))
            .collect();
        match hit.as_slice() {
            [] => chords.push((e, 0)),
            [i] if chords[*i].1 == 0 => {
                chords[*i].1 = 1;
                chords.push((e, 1));
            }
            _ => {}
        }
    }
    edges.extend(chords.iter().map(|c| c.0));
    let g = Graph::from_edge_set(n, edges);
    Ok(Diagram::from_orders(g, vec![order]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pn_counts() {
        let (g, d) = gen_pn(1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 10));
        assert!(d.validate().is_valid());
        let (g, _) = gen_pn(2).unwrap();
        assert_eq!(g.max_degree(), 3);
        assert!((0..g.n()).all(|v| (2..=3).contains(&g.degree(v))));
    }

    #[test]
    fn qn_counts() {
        let (g, d) = gen_qn(3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (15, 27));
        assert!(d.validate().is_valid());
        let (g, d) = gen_qn(1).unwrap();
        assert_eq!((g.degree(2), g.degree(1), g.degree(3)), (2, 4, 4));
        assert!(d.validate().is_valid());
    }

    #[test]
    fn gn_counts() {
        assert_eq!(gen_gn(6).unwrap().0.edge_count(), 11);
        assert_eq!(gen_gn(7).unwrap().0.edge_count(), 13);
        assert!(gen_gn(5).is_err());
    }

    #[test]
    fn mat12_shape() {
        let (g, d) = gen_mat12();
        assert_eq!(g.edge_count(), 22);
        let e = |a: usize, b: usize| Edge::new(a - 1, (b - 1) % 12);
        let mut want = vec![
            (e(1, 3), e(2, 4)),
            (e(4, 6), e(5, 7)),
            (e(7, 9), e(8, 10)),
            (e(1, 7), e(4, 10)),
            (e(11, 13), e(10, 12)),
        ];
        for p in &mut want {
            if p.1 < p.0 {
                *p = (p.1, p.0);
            }
        }
        want.sort();
        assert_eq!(d.crossing_pairs().unwrap(), want);
    }

    #[test]
    fn fig1_shape() {
        let (g, d) = gen_fig1();
        assert_eq!((g.n(), g.edge_count(), g.min_degree()), (8, 12, 2));
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.blocks.iter().filter(|b| !b.closed).count(), 1);
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        let a = gen_random_po(20, 7, 0.5).unwrap();
        assert_eq!(a, gen_random_po(20, 7, 0.5).unwrap());
        assert!(a.validate().is_valid());
        let c = gen_random_po(10, 1, 0.0).unwrap();
        assert_eq!(c.graph.edge_count(), 10);
        assert_eq!(c.crossing_count(), 0);
    }
}

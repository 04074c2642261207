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

//! Δ-edge-colouring by reduction.
//!
//! Each level works on a graph whose maximum degree is the palette size `k`.
//! Children may have smaller maximum degree; they are coloured with their own
//! Δ (or Vizing below four), which stays within `1..=k`.

use std::collections::{BTreeMap, BTreeSet};

use super::exact::{exact_proper, EXACT_NODE_LIMIT};
use super::trace::{ColorTrace, FallbackReason, StepKind};
use super::vizing::vizing_map;
use crate::configurations::{match_in_graph, ConfigId};
use crate::diagram::{recognize, Diagram};
use crate::error::{Error, Result};
use crate::graph::{BlockStructure, ColoringMode, Edge, EdgeColoring, Graph};

pub(crate) type Map = BTreeMap<Edge, usize>;
type Roles = BTreeMap<String, usize>;

fn e(a: usize, b: usize) -> Edge {
    Edge::new(a, b)
}

pub(crate) fn colors_at(g: &Graph, m: &Map, v: usize) -> BTreeSet<usize> {
    g.neighbors(v)
        .iter()
        .filter_map(|&w| m.get(&e(v, w)).copied())
        .collect()
}

/// `act[label]` for a palette normalisation fixing the given
/// `(actual, label)` pairs; other labels take the unused colours in order.
pub(crate) fn relabel(k: usize, fixed: &[(usize, usize)]) -> Vec<usize> {
    let mut act = vec![0; k + 1];
    for &(a, l) in fixed {
        act[l] = a;
    }
    let taken: BTreeSet<usize> = fixed.iter().map(|p| p.0).collect();
    let mut spare = (1..=k).filter(|c| !taken.contains(c));
    for slot in act.iter_mut().skip(1) {
        if *slot == 0 {
            *slot = spare.next().unwrap_or(0);
        }
    }
    act
}

fn proper_ok(g: &Graph, m: &Map, k: usize) -> bool {
    if m.len() != g.edge_count()
        || g.edges()
            .iter()
            .any(|x| !matches!(m.get(x), Some(&c) if (1..=k).contains(&c)))
    {
        return false;
    }
    (0..g.n()).all(|v| colors_at(g, m, v).len() == g.degree(v))
}

/// Colours `new` on top of `base` by backtracking, leaving `base` untouched.
pub(crate) fn local_extend(g: &Graph, base: &Map, new: &[Edge], k: usize) -> Option<Map> {
    fn go(g: &Graph, m: &mut Map, new: &[Edge], k: usize) -> bool {
        let Some((&x, rest)) = new.split_first() else {
            return true;
        };
        let blocked: BTreeSet<usize> = colors_at(g, m, x.0)
            .union(&colors_at(g, m, x.1))
            .copied()
            .collect();
        for c in (1..=k).filter(|c| !blocked.contains(c)) {
            m.insert(x, c);
            if go(g, m, rest, k) {
                return true;
            }
            m.remove(&x);
        }
        false
    }
    let mut m = base.clone();
    go(g, &mut m, new, k).then_some(m)
}

fn sub(d: &Diagram, g: Graph) -> Result<Diagram> {
    d.restrict(g)
        .ok_or_else(|| Error::Diagnostic("restricted drawing is invalid".into()))
}

/// Drawing for a graph with added edges: restricted orders first, then a
/// fresh recognition when the blocks are small enough.
pub(crate) fn redraw(d: &Diagram, g: Graph) -> Result<Option<Diagram>> {
    if let Some(r) = d.restrict(g.clone()) {
        return Ok(Some(r));
    }
    match recognize(&g) {
        Ok(r) => Ok(r),
        Err(Error::RecognitionTooLarge { .. }) => Ok(None),
        Err(err) => Err(err),
    }
}

fn first(k: usize, ok: impl Fn(usize) -> bool) -> Option<usize> {
    (1..=k).find(|&c| ok(c))
}

#[derive(Default)]
pub(crate) struct Proper {
    pub trace: ColorTrace,
}

impl Proper {
    pub fn color(&mut self, d: &Diagram) -> Result<Map> {
        let g = &d.graph;
        if g.edge_count() == 0 {
            return Ok(Map::new());
        }
        let k = g.max_degree();
        if k < 4 {
            let m = vizing_map(g);
            self.trace
                .push(StepKind::VizingBase, g.active_vertices(), &Map::new(), &m);
            return Ok(m);
        }
        if let Some(&x) = g
            .edges()
            .iter()
            .find(|x| g.degree(x.0) + g.degree(x.1) <= k + 1)
        {
            let dh = sub(d, g.with_edges_removed(&[x]))?;
            let phi = self.color(&dh)?;
            let blocked: BTreeSet<usize> = colors_at(g, &phi, x.0)
                .union(&colors_at(g, &phi, x.1))
                .copied()
                .collect();
            let c = first(k, |c| !blocked.contains(&c))
                .ok_or_else(|| Error::Diagnostic(format!("no free colour for {x}")))?;
            let mut m = phi.clone();
            m.insert(x, c);
            self.trace
                .push(StepKind::LowEdgeDegree, vec![x.0, x.1], &phi, &m);
            return Ok(m);
        }
        let bs = g.blocks();
        if bs.blocks.len() > 1 {
            return self.split(d, &bs, k);
        }
        for id in ConfigId::COLORING {
            let mark = self.trace.steps.len();
            let Some(r) = match_in_graph(g, id) else {
                continue;
            };
            match self.reduce(d, id, &r, k)? {
                Some(m) => return Ok(m),
                None => self.trace.steps.truncate(mark),
            }
        }
        self.fallback(g, k, FallbackReason::ConfigurationMiss)
    }

    fn fallback(&mut self, g: &Graph, k: usize, why: FallbackReason) -> Result<Map> {
        let m = exact_proper(g, k, EXACT_NODE_LIMIT)?
            .ok_or_else(|| Error::Infeasible(format!("no proper {k}-edge-colouring")))?;
        self.trace
            .push(
                StepKind::ExactFallback,
                g.active_vertices(),
                &Map::new(),
                &m,
            )
            .fallback = Some(why);
        Ok(m)
    }

    fn small(&mut self, g: &Graph, k: usize) -> Result<Option<Map>> {
        if g.active_vertices().len() <= 6 {
            self.fallback(g, k, FallbackReason::SmallException)
                .map(Some)
        } else {
            Ok(None)
        }
    }

    /// Colours blocks one at a time in block-cut-tree order, permuting each
    /// new block's palette away from the colours already at its cut vertex.
    fn split(&mut self, d: &Diagram, bs: &BlockStructure, k: usize) -> Result<Map> {
        let g = &d.graph;
        let mut pending: Vec<usize> = (0..bs.blocks.len()).collect();
        let mut done: BTreeSet<usize> = BTreeSet::new();
        let mut before = Map::new();
        let mut out = Map::new();
        while !pending.is_empty() {
            let i = pending
                .iter()
                .position(|&b| bs.blocks[b].vertices.iter().any(|v| done.contains(v)))
                .unwrap_or(0);
            let b = &bs.blocks[pending.remove(i)];
            let bd = sub(d, Graph::from_edge_set(g.n(), b.edges.iter().copied()))?;
            let phi = self.color(&bd)?;
            before.extend(phi.iter().map(|(x, c)| (*x, *c)));
            let mut sigma: Vec<usize> = (0..=k).collect();
            if let Some(&c) = b.vertices.iter().find(|v| done.contains(v)) {
                let used = colors_at(g, &out, c);
                let mine = colors_at(&bd.graph, &phi, c);
                let mut targets = (1..=k).filter(|x| !used.contains(x));
                for &old in &mine {
                    sigma[old] = targets.next().expect("cut vertex degree is at most k");
                }
                let taken: BTreeSet<usize> = mine.iter().map(|&o| sigma[o]).collect();
                let mut rest = (1..=k).filter(|x| !taken.contains(x));
                for old in (1..=k).filter(|o| !mine.contains(o)) {
                    sigma[old] = rest.next().unwrap();
                }
            }
            out.extend(phi.iter().map(|(x, c)| (*x, sigma[*c])));
            done.extend(b.vertices.iter().copied());
        }
        self.trace.push(
            StepKind::BlockSplit,
            bs.cut_vertices.to_vec(),
            &before,
            &out,
        );
        Ok(out)
    }

    /// Extends `phi` by `assign` (actual colours, recolourings included) after
    /// dropping `temp`. A failing table falls back to searching the new edges.
    #[allow(clippy::too_many_arguments)]
    fn finish(
        &mut self,
        id: ConfigId,
        g: &Graph,
        k: usize,
        phi: &Map,
        temp: &[Edge],
        assign: Option<Vec<(Edge, usize)>>,
        r: &Roles,
    ) -> Result<Option<Map>> {
        let mut base = phi.clone();
        for t in temp {
            base.remove(t);
        }
        let mut m = base.clone();
        let mut repaired = false;
        let table_ok = match assign {
            Some(a) => {
                m.extend(a);
                proper_ok(g, &m, k)
            }
            None => false,
        };
        if !table_ok {
            let new: Vec<Edge> = g
                .edges()
                .iter()
                .filter(|x| !base.contains_key(x))
                .copied()
                .collect();
            match local_extend(g, &base, &new, k) {
                Some(x) => {
                    m = x;
                    repaired = true;
                }
                None => return Ok(None),
            }
        }
        let vs = r.values().copied().collect();
        self.trace.push(StepKind::Config(id), vs, phi, &m).repaired = repaired;
        Ok(Some(m))
    }

    fn reduce(&mut self, d: &Diagram, id: ConfigId, r: &Roles, k: usize) -> Result<Option<Map>> {
        match id {
            ConfigId::G3 => self.g3(d, r, k),
            ConfigId::G4 if k == 4 => self.g4(d, r, k),
            ConfigId::G5 if k == 4 => self.g5(d, r, k),
            ConfigId::G6 if k == 4 => self.g6(d, r, k),
            ConfigId::G12 if k == 4 => self.g12(d, r, k),
            ConfigId::G13 if k == 4 => self.g13(d, r, k),
            ConfigId::G16 if k == 4 => self.g16(d, r, k),
            ConfigId::G17 if k == 5 => self.g17(d, r, k),
            _ => Ok(None),
        }
    }

    fn g3(&mut self, d: &Diagram, r: &Roles, k: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let (u, v, x, y) = (r["u"], r["v"], r["x"], r["y"]);
        let dp = sub(d, g.without_vertices(&[u, v]))?;
        let phi = self.color(&dp)?;
        let cx = colors_at(&dp.graph, &phi, x);
        let cy = colors_at(&dp.graph, &phi, y);
        let assign = if cx == cy {
            first(k, |c| !cx.contains(&c)).and_then(|a| {
                let b = first(k, |c| !cx.contains(&c) && c != a)?;
                Some(vec![(e(u, x), a), (e(y, v), a), (e(u, y), b), (e(x, v), b)])
            })
        } else {
            (|| {
                let ux = first(k, |c| !cx.contains(&c) && cy.contains(&c))?;
                let xv = first(k, |c| !cx.contains(&c) && c != ux)?;
                let vy = first(k, |c| !cy.contains(&c) && c != xv)?;
                let uy = first(k, |c| !cy.contains(&c) && c != vy)?;
                Some(vec![
                    (e(u, x), ux),
                    (e(x, v), xv),
                    (e(v, y), vy),
                    (e(u, y), uy),
                ])
            })()
        };
        self.finish(ConfigId::G3, g, k, &phi, &[], assign, r)
    }

    fn g4(&mut self, d: &Diagram, r: &Roles, k: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let (u, x, y, v, w) = (r["u"], r["x"], r["y"], r["v"], r["w"]);
        let dp = sub(d, g.without_vertices(&[x, y, u]))?;
        let phi = self.color(&dp)?;
        let cv = colors_at(&dp.graph, &phi, v);
        let cw = colors_at(&dp.graph, &phi, w);
        let assign = (|| {
            if cv.len() != 2 || cw.len() != 2 {
                return None;
            }
            let vs: Vec<usize> = cv.iter().copied().collect();
            if cv == cw {
                let t = relabel(k, &[(vs[0], 1), (vs[1], 2)]);
                return Some(vec![
                    (e(u, y), t[1]),
                    (e(u, x), t[2]),
                    (e(u, w), t[3]),
                    (e(v, x), t[3]),
                    (e(u, v), t[4]),
                    (e(w, y), t[4]),
                ]);
            }
            let one = *cv.iter().find(|c| !cw.contains(c))?;
            let two = *cv.iter().find(|&&c| c != one)?;
            let three = *cw.iter().find(|c| !cv.contains(c))?;
            let t = relabel(k, &[(one, 1), (two, 2), (three, 3)]);
            let wy = [2, 3, 4]
                .into_iter()
                .map(|l| t[l])
                .find(|c| !cw.contains(c))?;
            Some(vec![
                (e(u, w), t[1]),
                (e(u, x), t[2]),
                (e(x, v), t[3]),
                (e(u, y), t[3]),
                (e(u, v), t[4]),
                (e(w, y), wy),
            ])
        })();
        self.finish(ConfigId::G4, g, k, &phi, &[], assign, r)
    }

    fn g5(&mut self, d: &Diagram, r: &Roles, k: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let (u, x, w, v, z, t) = (r["u"], r["x"], r["w"], r["v"], r["z"], r["t"]);
        let dp = sub(d, g.without_vertices(&[u]))?;
        let phi = self.color(&dp)?;
        let cv = colors_at(&dp.graph, &phi, v);
        let cw = colors_at(&dp.graph, &phi, w);
        let assign = (|| {
            if cv.len() != 3 || cw.len() != 3 {
                return None;
            }
            let vw = phi[&e(v, w)];
            if cv != cw {
                let one = *cw.iter().find(|&&c| c != vw && cv.contains(&c))?;
                let two = *cv.iter().find(|&&c| c != vw && c != one)?;
                let l = relabel(k, &[(one, 1), (two, 2), (vw, 3)]);
                return Some(vec![(e(u, v), l[4]), (e(u, w), l[2])]);
            }
            let l = relabel(k, &[(phi[&e(w, t)], 1), (phi[&e(w, x)], 2), (vw, 3)]);
            if phi.get(&e(x, z)) == Some(&l[4]) {
                Some(vec![
                    (e(w, x), l[3]),
                    (e(w, v), l[4]),
                    (e(u, v), l[3]),
                    (e(u, w), l[2]),
                ])
            } else {
                Some(vec![(e(w, x), l[4]), (e(u, v), l[4]), (e(u, w), l[2])])
            }
        })();
        self.finish(ConfigId::G5, g, k, &phi, &[], assign, r)
    }

    fn g6(&mut self, d: &Diagram, r: &Roles, k: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let (u, v) = (r["u"], r["v"]);
        let (mut x0, mut y0) = (r["x0"], r["y0"]);
        let (dx, dy) = (g.degree(x0), g.degree(y0));
        let others = |a: usize, skip: &[usize]| -> Vec<usize> {
            g.neighbors(a)
                .iter()
                .copied()
                .filter(|b| !skip.contains(b))
                .collect()
        };
        if dx == 4 && dy == 4 && !g.has_edge(x0, y0) {
            let xy = e(x0, y0);
            let Some(dp) = redraw(d, g.without_vertices(&[u, v]).with_edges_added(&[xy]))? else {
                return Ok(None);
            };
            let phi = self.color(&dp)?;
            let cx: BTreeSet<usize> = others(x0, &[u, v])
                .iter()
                .map(|&a| phi[&e(x0, a)])
                .collect();
            let cy: BTreeSet<usize> = others(y0, &[u, v])
                .iter()
                .map(|&a| phi[&e(y0, a)])
                .collect();
            let shared: Vec<usize> = cx.intersection(&cy).copied().collect();
            let assign = match shared.len() {
                1 => {
                    let a = *cx.iter().find(|&&c| c != shared[0]).unwrap();
                    let b = *cy.iter().find(|&&c| c != shared[0]).unwrap();
                    let l = relabel(k, &[(shared[0], 1), (a, 2), (b, 3)]);
                    Some(vec![
                        (e(u, v), l[1]),
                        (e(v, y0), l[2]),
                        (e(u, x0), l[3]),
                        (e(v, x0), l[4]),
                        (e(u, y0), l[4]),
                    ])
                }
                2 => {
                    let l = relabel(k, &[(shared[0], 1), (shared[1], 2)]);
                    Some(vec![
                        (e(u, v), l[1]),
                        (e(v, y0), l[3]),
                        (e(u, x0), l[3]),
                        (e(v, x0), l[4]),
                        (e(u, y0), l[4]),
                    ])
                }
                _ => None,
            };
            return self.finish(ConfigId::G6, g, k, &phi, &[xy], assign, r);
        }
        if dx == 4 && dy == 4 {
            let x1 = others(x0, &[u, v, y0])[0];
            let y1 = others(y0, &[u, v, x0])[0];
            if x1 == y1 {
                return self.small(g, k);
            }
            let dp = sub(
                d,
                g.without_vertices(&[u, v]).with_edges_removed(&[e(x0, y0)]),
            )?;
            let phi = self.color(&dp)?;
            let (a, b) = (phi[&e(x0, x1)], phi[&e(y0, y1)]);
            let assign = if a == b {
                let l = relabel(k, &[(a, 1)]);
                vec![
                    (e(u, v), l[1]),
                    (e(x0, y0), l[2]),
                    (e(u, x0), l[3]),
                    (e(v, y0), l[3]),
                    (e(v, x0), l[4]),
                    (e(u, y0), l[4]),
                ]
            } else {
                let l = relabel(k, &[(a, 1), (b, 2)]);
                vec![
                    (e(v, y0), l[1]),
                    (e(u, x0), l[2]),
                    (e(u, v), l[3]),
                    (e(x0, y0), l[3]),
                    (e(v, x0), l[4]),
                    (e(u, y0), l[4]),
                ]
            };
            return self.finish(ConfigId::G6, g, k, &phi, &[], Some(assign), r);
        }
        if dx.min(dy) != 3 {
            return Ok(None);
        }
        if dx != 3 {
            std::mem::swap(&mut x0, &mut y0);
        }
        let Some(&w) = others(x0, &[u, v]).first() else {
            return Ok(None);
        };
        let dp = sub(d, g.with_edges_removed(&[e(u, x0)]))?;
        let phi = self.color(&dp)?;
        let seen: BTreeSet<usize> = [e(v, x0), e(w, x0), e(u, v), e(u, y0)]
            .iter()
            .filter_map(|x| phi.get(x).copied())
            .collect();
        let assign = match first(k, |c| !seen.contains(&c)) {
            Some(c) => vec![(e(u, x0), c)],
            None => vec![(e(v, x0), phi[&e(u, y0)]), (e(u, x0), phi[&e(v, x0)])],
        };
        self.finish(ConfigId::G6, g, k, &phi, &[], Some(assign), r)
    }

    fn g12(&mut self, d: &Diagram, r: &Roles, k: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let (u, v, w) = (r["u"], r["v"], r["w"]);
        let (mut x, mut y) = (r["x"], r["y"]);
        let (dx, dy) = (g.degree(x), g.degree(y));
        let others = |a: usize, skip: &[usize]| -> Vec<usize> {
            g.neighbors(a)
                .iter()
                .copied()
                .filter(|b| !skip.contains(b))
                .collect()
        };
        if dx == 4 && dy == 4 && !g.has_edge(x, y) {
            let temp = [e(x, y), e(u, x), e(u, y)];
            let Some(dp) = redraw(d, g.without_vertices(&[v, w]).with_edges_added(&temp))? else {
                return Ok(None);
            };
            let phi = self.color(&dp)?;
            let cx: BTreeSet<usize> = others(x, &[v, w]).iter().map(|&a| phi[&e(x, a)]).collect();
            let cy: BTreeSet<usize> = others(y, &[v, w]).iter().map(|&a| phi[&e(y, a)]).collect();
            let shared: Vec<usize> = cx.intersection(&cy).copied().collect();
            let assign = (shared.len() == 1).then(|| {
                let a = *cx.iter().find(|&&c| c != shared[0]).unwrap();
                let b = *cy.iter().find(|&&c| c != shared[0]).unwrap();
                let l = relabel(k, &[(a, 1), (shared[0], 2), (b, 3)]);
                vec![
                    (e(u, v), l[1]),
                    (e(w, y), l[1]),
                    (e(v, w), l[2]),
                    (e(u, w), l[3]),
                    (e(v, x), l[3]),
                    (e(w, x), l[4]),
                    (e(v, y), l[4]),
                ]
            });
            return self.finish(ConfigId::G12, g, k, &phi, &temp, assign, r);
        }
        if dx == 4 && dy == 4 {
            let x1 = others(x, &[v, w, y])[0];
            let y1 = others(y, &[v, w, x])[0];
            if x1 == y1 || g.has_edge(x, y1) {
                return self.small(g, k);
            }
            // contract xy onto x
            let moved = e(x, y1);
            let Some(dp) = redraw(
                d,
                g.without_vertices(&[u, v, w, y]).with_edges_added(&[moved]),
            )?
            else {
                return Ok(None);
            };
            let phi = self.color(&dp)?;
            let (a, b) = (phi[&e(x, x1)], phi[&moved]);
            let l = relabel(k, &[(a, 1), (b, 2)]);
            let assign = vec![
                (e(y, y1), l[2]),
                (e(u, w), l[1]),
                (e(v, y), l[1]),
                (e(u, v), l[2]),
                (e(w, x), l[2]),
                (e(v, w), l[3]),
                (e(x, y), l[3]),
                (e(v, x), l[4]),
                (e(w, y), l[4]),
            ];
            return self.finish(ConfigId::G12, g, k, &phi, &[moved], Some(assign), r);
        }
        if dx.min(dy) <= 2 {
            return self.small(g, k);
        }
        if dx.min(dy) != 3 {
            return Ok(None);
        }
        if dx != 3 {
            std::mem::swap(&mut x, &mut y);
        }
        let Some(&x1) = others(x, &[v, w]).first() else {
            return Ok(None);
        };
        let dp = sub(d, g.with_edges_removed(&[e(u, v)]))?;
        let phi = self.color(&dp)?;
        let seen: BTreeSet<usize> = [e(u, w), e(v, w), e(v, y), e(v, x)]
            .iter()
            .filter_map(|p| phi.get(p).copied())
            .collect();
        let assign = match first(k, |c| !seen.contains(&c)) {
            Some(c) => Some(vec![(e(u, v), c)]),
            None => {
                let l = relabel(
                    k,
                    &[
                        (phi[&e(u, w)], 1),
                        (phi[&e(v, w)], 2),
                        (phi[&e(v, y)], 3),
                        (phi[&e(v, x)], 4),
                    ],
                );
                let xx1 = phi.get(&e(x, x1)).copied();
                if xx1 == Some(l[1]) {
                    Some(vec![
                        (e(v, x), l[2]),
                        (e(u, w), l[2]),
                        (e(v, w), l[1]),
                        (e(u, v), l[4]),
                    ])
                } else if xx1 == Some(l[2]) {
                    Some(vec![(e(v, x), l[1]), (e(u, v), l[4])])
                } else {
                    None
                }
            }
        };
        self.finish(ConfigId::G12, g, k, &phi, &[], assign, r)
    }

    fn g13(&mut self, d: &Diagram, r: &Roles, k: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let (u, v, w, x, y) = (r["u"], r["v"], r["w"], r["x"], r["y"]);
        let dp = sub(d, g.without_vertices(&[u, v, w]))?;
        let phi = self.color(&dp)?;
        let cx = colors_at(&dp.graph, &phi, x);
        let cy = colors_at(&dp.graph, &phi, y);
        let assign = (|| {
            if cx.len() != 1 || cy.len() > 2 {
                return None;
            }
            let a = *cx.first()?;
            if cy.contains(&a) {
                let mut fixed = vec![(a, 1)];
                fixed.extend(cy.iter().filter(|&&c| c != a).map(|&c| (c, 2)));
                let l = relabel(k, &fixed);
                Some(vec![
                    (e(v, w), l[1]),
                    (e(u, v), l[2]),
                    (e(w, x), l[2]),
                    (e(v, x), l[3]),
                    (e(w, y), l[3]),
                    (e(u, x), l[4]),
                    (e(v, y), l[4]),
                ])
            } else {
                let mut fixed = vec![(a, 1)];
                fixed.extend(cy.iter().zip(2..).map(|(&c, l)| (c, l)));
                let l = relabel(k, &fixed);
                Some(vec![
                    (e(v, y), l[1]),
                    (e(u, x), l[2]),
                    (e(v, w), l[2]),
                    (e(u, v), l[3]),
                    (e(w, x), l[3]),
                    (e(v, x), l[4]),
                    (e(w, y), l[4]),
                ])
            }
        })();
        self.finish(ConfigId::G13, g, k, &phi, &[], assign, r)
    }

    fn g16(&mut self, d: &Diagram, r: &Roles, k: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let (u, z, v, w, x, y) = (r["u"], r["z"], r["v"], r["w"], r["x"], r["y"]);
        let dp = sub(d, g.without_vertices(&[u, v, w, z]))?;
        let phi = self.color(&dp)?;
        let cx = colors_at(&dp.graph, &phi, x);
        let cy = colors_at(&dp.graph, &phi, y);
        let assign = (|| {
            if cx.len() != 1 || cy.len() != 1 {
                return None;
            }
            let (a, b) = (*cx.first()?, *cy.first()?);
            if a == b {
                let l = relabel(k, &[(a, 1)]);
                Some(vec![
                    (e(v, w), l[1]),
                    (e(u, x), l[2]),
                    (e(v, z), l[2]),
                    (e(w, y), l[2]),
                    (e(w, x), l[3]),
                    (e(v, y), l[3]),
                    (e(u, w), l[4]),
                    (e(v, x), l[4]),
                    (e(y, z), l[4]),
                ])
            } else {
                let l = relabel(k, &[(a, 1), (b, 2)]);
                Some(vec![
                    (e(v, z), l[1]),
                    (e(w, y), l[1]),
                    (e(v, x), l[2]),
                    (e(u, w), l[2]),
                    (e(v, y), l[3]),
                    (e(w, x), l[3]),
                    (e(y, z), l[4]),
                    (e(v, w), l[4]),
                    (e(u, x), l[4]),
                ])
            }
        })();
        self.finish(ConfigId::G16, g, k, &phi, &[], assign, r)
    }

    fn g17(&mut self, d: &Diagram, r: &Roles, k: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let (u, a, z, v, w, x, y) = (r["u"], r["a"], r["z"], r["v"], r["w"], r["x"], r["y"]);
        let dp = sub(d, g.without_vertices(&[u, v, w, z, a]))?;
        let phi = self.color(&dp)?;
        let cx = colors_at(&dp.graph, &phi, x);
        let cy = colors_at(&dp.graph, &phi, y);
        let assign = (|| {
            if cx.len() != 2 || cy.len() != 2 {
                return None;
            }
            let shared: Vec<usize> = cx.intersection(&cy).copied().collect();
            let xs: Vec<usize> = cx.iter().copied().collect();
            let ys: Vec<usize> = cy.iter().copied().collect();
            Some(match shared.len() {
                2 => {
                    let l = relabel(k, &[(xs[0], 1), (xs[1], 2)]);
                    vec![
                        (e(u, w), l[1]),
                        (e(a, v), l[1]),
                        (e(w, z), l[2]),
                        (e(u, v), l[2]),
                        (e(x, z), l[3]),
                        (e(v, w), l[3]),
                        (e(a, y), l[3]),
                        (e(w, x), l[4]),
                        (e(v, y), l[4]),
                        (e(v, x), l[5]),
                        (e(w, y), l[5]),
                    ]
                }
                1 => {
                    let s = shared[0];
                    let xo = *xs.iter().find(|&&c| c != s)?;
                    let yo = *ys.iter().find(|&&c| c != s)?;
                    let l = relabel(k, &[(s, 1), (xo, 2), (yo, 3)]);
                    vec![
                        (e(v, w), l[1]),
                        (e(w, y), l[2]),
                        (e(a, v), l[2]),
                        (e(w, z), l[3]),
                        (e(v, x), l[3]),
                        (e(w, x), l[4]),
                        (e(u, v), l[4]),
                        (e(a, y), l[4]),
                        (e(x, z), l[5]),
                        (e(u, w), l[5]),
                        (e(v, y), l[5]),
                    ]
                }
                _ => {
                    let l = relabel(k, &[(xs[0], 1), (xs[1], 2), (ys[0], 3), (ys[1], 4)]);
                    vec![
                        (e(v, w), l[1]),
                        (e(a, y), l[1]),
                        (e(w, z), l[2]),
                        (e(v, y), l[2]),
                        (e(v, x), l[3]),
                        (e(u, w), l[3]),
                        (e(w, x), l[4]),
                        (e(a, v), l[4]),
                        (e(x, z), l[5]),
                        (e(u, v), l[5]),
                        (e(w, y), l[5]),
                    ]
                }
            })
        })();
        self.finish(ConfigId::G17, g, k, &phi, &[], assign, r)
    }
}

/// Proper Δ-edge-colouring of a pseudo-outerplanar diagram with `Δ >= 4`.
pub fn po_edge_color(d: &Diagram) -> Result<(EdgeColoring, ColorTrace)> {
    let rep = d.validate();
    if !rep.is_valid() {
        return Err(Error::InvalidDiagram(rep.violations.join("; ")));
    }
    let k = d.graph.max_degree();
    if k < 4 {
        return Err(Error::DeltaBelowFour);
    }
    let mut run = Proper::default();
    let m = run.color(d)?;
    let c = EdgeColoring::new(k, ColoringMode::Proper, m);
    if !proper_ok(&d.graph, &c.colors, k) {
        return Err(Error::Diagnostic(
            "constructed colouring is not proper".into(),
        ));
    }
    Ok((c, run.trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_pn, gen_qn};
    use crate::graph::verify_edge_coloring;

    fn run(d: &Diagram) -> ColorTrace {
        let (c, t) = po_edge_color(d).unwrap();
        assert_eq!(c.k, d.graph.max_degree());
        assert!(verify_edge_coloring(&d.graph, &c).unwrap().is_valid());
        assert_eq!(t.replay(), c.colors);
        t
    }

    #[test]
    fn fan_on_five_path() {
        let mut es = vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)];
        es.extend([(1, 2), (2, 3), (3, 4), (4, 5)]);
        let d = recognize(&Graph::from_edges(6, &es).unwrap())
            .unwrap()
            .unwrap();
        run(&d);
    }

    #[test]
    fn q3_and_k4_plus() {
        let (_, d) = gen_qn(3).unwrap();
        let t = run(&d);
        assert!(t.diagnostics().is_empty());
    }

    #[test]
    fn delta_three_is_rejected() {
        let (_, d) = gen_pn(1).unwrap();
        assert!(matches!(po_edge_color(&d), Err(Error::DeltaBelowFour)));
    }

    #[test]
    fn relabel_fills_in_order() {
        assert_eq!(relabel(4, &[(3, 1), (1, 2)]), vec![0, 3, 1, 2, 4]);
    }
}

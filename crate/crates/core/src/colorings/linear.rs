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

//! Linear arboricity. Even `Δ >= 6` is built by reduction with `k = Δ/2`;
//! every other case runs an exact search.

use super::exact::{exact_linear, EXACT_NODE_LIMIT};
use super::proper::{redraw, Map};
use super::trace::{ColorTrace, FallbackReason, StepKind};
use crate::configurations::{match_in_graph, ConfigId};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::graph::{ColoringMode, Edge, EdgeColoring, Graph};

fn e(a: usize, b: usize) -> Edge {
    Edge::new(a, b)
}

fn count(g: &Graph, m: &Map, v: usize, c: usize) -> usize {
    g.neighbors(v)
        .iter()
        .filter(|&&w| m.get(&e(v, w)) == Some(&c))
        .count()
}

/// Whether `ab` can join colour class `c` without a branch or a cycle.
fn can_add(g: &Graph, m: &Map, c: usize, a: usize, b: usize) -> bool {
    if count(g, m, a, c) >= 2 || count(g, m, b, c) >= 2 {
        return false;
    }
    let (mut prev, mut cur) = (usize::MAX, a);
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && m.get(&e(cur, w)) == Some(&c));
        match next {
            Some(w) if w == b => return false,
            Some(w) => {
                prev = cur;
                cur = w;
            }
            None => return true,
        }
    }
}

fn linear_ok(g: &Graph, m: &Map, k: usize) -> bool {
    if m.len() != g.edge_count() {
        return false;
    }
    let mut parent: Vec<usize> = (0..g.n() * (k + 1)).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for x in g.edges() {
        let Some(&c) = m.get(x) else { return false };
        if c == 0 || c > k || count(g, m, x.0, c) > 2 || count(g, m, x.1, c) > 2 {
            return false;
        }
        let (a, b) = (
            find(&mut parent, c * g.n() + x.0),
            find(&mut parent, c * g.n() + x.1),
        );
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

fn around(g: &Graph, vs: &[usize]) -> Vec<Edge> {
    let mut out: Vec<Edge> = vs
        .iter()
        .flat_map(|&a| g.neighbors(a).iter().map(move |&b| e(a, b)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

const REPAIR_NODES: usize = 1_000_000;

/// Re-colours `free` (in order) on top of the rest of `base`, keeping every
/// class a linear forest.
fn repair(g: &Graph, base: &Map, free: &[Edge], k: usize) -> Option<Map> {
    fn go(g: &Graph, m: &mut Map, free: &[Edge], k: usize, nodes: &mut usize) -> bool {
        let Some((&x, rest)) = free.split_first() else {
            return true;
        };
        if *nodes == 0 {
            return false;
        }
        *nodes -= 1;
        for c in 1..=k {
            if can_add(g, m, c, x.0, x.1) {
                m.insert(x, c);
                if go(g, m, rest, k, nodes) {
                    return true;
                }
                m.remove(&x);
            }
        }
        false
    }
    let mut m = base.clone();
    for f in free {
        m.remove(f);
    }
    let free: Vec<Edge> = free.iter().copied().filter(|f| g.contains(*f)).collect();
    let mut nodes = REPAIR_NODES;
    go(g, &mut m, &free, k, &mut nodes).then_some(m)
}

struct Linear {
    k: usize,
    trace: ColorTrace,
}

impl Linear {
    fn color(&mut self, d: &Diagram) -> Result<Map> {
        let g = &d.graph;
        let k = self.k;
        if g.edge_count() == 0 {
            return Ok(Map::new());
        }
        if let Some(&x) = g
            .edges()
            .iter()
            .find(|x| g.degree(x.0) + g.degree(x.1) <= 2 * k + 1)
        {
            let dh = d
                .restrict(g.with_edges_removed(&[x]))
                .ok_or_else(|| Error::Diagnostic("restricted drawing is invalid".into()))?;
            let phi = self.color(&dh)?;
            let mut m = phi.clone();
            if let Some(c) = (1..=k).find(|&c| can_add(g, &phi, c, x.0, x.1)) {
                m.insert(x, c);
            } else if let Some(r) = self.exchange(g, &phi, x) {
                m = r;
                self.trace
                    .push(StepKind::LowEdgeDegree, vec![x.0, x.1], &phi, &m)
                    .repaired = true;
                return Ok(m);
            } else {
                return self.fallback(g, FallbackReason::ExtensionFailed);
            }
            self.trace
                .push(StepKind::LowEdgeDegree, vec![x.0, x.1], &phi, &m);
            return Ok(m);
        }
        let mark = self.trace.steps.len();
        if let Some(r) = match_in_graph(g, ConfigId::G3) {
            if let Some(m) = self.g3(d, r["u"], r["v"], r["x"], r["y"])? {
                return Ok(m);
            }
            self.trace.steps.truncate(mark);
        }
        self.fallback(g, FallbackReason::ConfigurationMiss)
    }

    /// Recolours edges next to `x` so that `x` fits.
    fn exchange(&self, g: &Graph, phi: &Map, x: Edge) -> Option<Map> {
        let mut free = vec![x];
        free.extend(around(g, &[x.0, x.1]).into_iter().filter(|f| *f != x));
        repair(g, phi, &free, self.k)
    }

    fn fallback(&mut self, g: &Graph, why: FallbackReason) -> Result<Map> {
        let m = exact_linear(g, self.k, EXACT_NODE_LIMIT)?
            .ok_or_else(|| Error::Infeasible(format!("no {}-tree-colouring", self.k)))?;
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

    fn g3(&mut self, d: &Diagram, u: usize, v: usize, x: usize, y: usize) -> Result<Option<Map>> {
        let g = &d.graph;
        let k = self.k;
        let xy = e(x, y);
        let added = if g.has_edge(x, y) {
            None
        } else {
            redraw(d, g.without_vertices(&[v]).with_edges_added(&[xy]))?
        };
        let (phi, mut m) = if let Some(dp) = added {
            let phi = self.color(&dp)?;
            let mut m = phi.clone();
            let c = m.remove(&xy).expect("xy is coloured");
            m.insert(e(v, x), c);
            m.insert(e(v, y), c);
            (phi, m)
        } else {
            let dp = d
                .restrict(g.without_vertices(&[v]))
                .ok_or_else(|| Error::Diagnostic("restricted drawing is invalid".into()))?;
            let phi = self.color(&dp)?;
            let gp = &dp.graph;
            let pick = |a: usize| {
                let ones: Vec<usize> = (1..=k).filter(|&c| count(gp, &phi, a, c) == 1).collect();
                ones.first()
                    .copied()
                    .or_else(|| (1..=k).find(|&c| count(gp, &phi, a, c) == 0))
            };
            let mut m = phi.clone();
            if let (Some(cx), Some(cy)) = (pick(x), pick(y)) {
                m.insert(e(v, x), cx);
                m.insert(e(v, y), cy);
                if cx == cy && g.has_edge(x, y) {
                    let cxy = phi[&xy];
                    let (ux, uy) = (phi[&e(u, x)], phi[&e(u, y)]);
                    if cxy == cx {
                        m.insert(e(u, x), cx);
                        m.insert(e(v, x), ux);
                    } else if ux == cx && uy == cx {
                        m.insert(xy, cx);
                        m.insert(e(v, x), cxy);
                        m.insert(e(u, y), cxy);
                    }
                }
            }
            (phi, m)
        };
        let mut repaired = false;
        if !linear_ok(g, &m, k) {
            let mut base = phi.clone();
            base.remove(&xy);
            if g.has_edge(x, y) {
                base.insert(xy, phi[&xy]);
            }
            let mut free = vec![e(v, x), e(v, y)];
            for f in around(g, &[x, y, u]) {
                if !free.contains(&f) {
                    free.push(f);
                }
            }
            let found = repair(g, &base, &free, k);
            match found {
                Some(t) => {
                    m = t;
                    repaired = true;
                }
                None => return Ok(None),
            }
        }
        self.trace
            .push(StepKind::Config(ConfigId::G3), vec![u, v, x, y], &phi, &m)
            .repaired = repaired;
        Ok(Some(m))
    }
}

/// Linear arboricity with a witnessing tree-colouring.
pub fn po_linear_arboricity(d: &Diagram) -> Result<(usize, EdgeColoring, ColorTrace)> {
    let rep = d.validate();
    if !rep.is_valid() {
        return Err(Error::InvalidDiagram(rep.violations.join("; ")));
    }
    let g = &d.graph;
    let delta = g.max_degree();
    if delta == 0 {
        let c = EdgeColoring::new(0, ColoringMode::LinearForest, Map::new());
        return Ok((0, c, ColorTrace::default()));
    }
    let lower = delta.div_ceil(2);
    if delta >= 6 && delta.is_multiple_of(2) {
        let mut run = Linear {
            k: lower,
            trace: ColorTrace::default(),
        };
        let m = run.color(d)?;
        if !linear_ok(g, &m, lower) {
            return Err(Error::Diagnostic(
                "constructed tree-colouring is invalid".into(),
            ));
        }
        return Ok((
            lower,
            EdgeColoring::new(lower, ColoringMode::LinearForest, m),
            run.trace,
        ));
    }
    for k in lower..=delta {
        if let Some(m) = exact_linear(g, k, EXACT_NODE_LIMIT)? {
            let mut trace = ColorTrace::default();
            trace
                .push(
                    StepKind::ExactFallback,
                    g.active_vertices(),
                    &Map::new(),
                    &m,
                )
                .fallback = Some(FallbackReason::ExactBranch);
            return Ok((
                k,
                EdgeColoring::new(k, ColoringMode::LinearForest, m),
                trace,
            ));
        }
    }
    Err(Error::Infeasible("no tree-colouring found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::recognize;
    use crate::generators::{gen_pn, gen_qn};
    use crate::graph::verify_edge_coloring;

    fn la(d: &Diagram) -> usize {
        let (k, c, t) = po_linear_arboricity(d).unwrap();
        assert!(verify_edge_coloring(&d.graph, &c).unwrap().is_valid());
        assert_eq!(t.replay(), c.colors);
        k
    }

    #[test]
    fn examples() {
        assert_eq!(la(&gen_pn(1).unwrap().1), 2);
        assert_eq!(la(&gen_qn(3).unwrap().1), 3);
        assert_eq!(la(&recognize(&Graph::path(5)).unwrap().unwrap()), 1);
        assert_eq!(la(&recognize(&Graph::cycle(6)).unwrap().unwrap()), 2);
    }

    #[test]
    fn even_delta_fan() {
        // fan: apex joined to a path on six vertices, Δ = 6
        let mut es: Vec<(usize, usize)> = (1..=6).map(|i| (0, i)).collect();
        es.extend((1..6).map(|i| (i, i + 1)));
        let d = recognize(&Graph::from_edges(7, &es).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(la(&d), 3);
    }

    /// Cycle `x_0..x_{m-1}` where each edge also carries two paths of
    /// length two; every `x_i` has degree six.
    fn necklace(m: usize) -> Diagram {
        let mut es = Vec::new();
        let mut order = Vec::new();
        for i in 0..m {
            let (a, b, p, q) = (i, (i + 1) % m, m + 2 * i, m + 2 * i + 1);
            es.extend([(a, b), (a, p), (p, b), (a, q), (q, b)]);
            order.extend([a, p, q]);
        }
        let d = Diagram::from_orders(Graph::from_edges(3 * m, &es).unwrap(), vec![order]);
        assert!(d.validate().is_valid());
        d
    }

    #[test]
    fn necklace_uses_g3() {
        for m in 3..8 {
            let d = necklace(m);
            let (k, c, t) = po_linear_arboricity(&d).unwrap();
            assert_eq!(k, 3);
            assert!(verify_edge_coloring(&d.graph, &c).unwrap().is_valid());
            assert!(t
                .steps
                .iter()
                .any(|s| s.kind == StepKind::Config(ConfigId::G3)));
            assert!(t.diagnostics().is_empty());
            assert_eq!(t.replay(), c.colors);
        }
    }

    #[test]
    fn can_add_rejects_cycles() {
        let g = Graph::cycle(3);
        let m = Map::from([(e(0, 1), 1), (e(1, 2), 1)]);
        assert!(!can_add(&g, &m, 1, 0, 2));
        assert!(can_add(&g, &m, 2, 0, 2));
    }
}

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

//! Misra–Gries edge colouring with at most `Δ + 1` colours.

use std::collections::BTreeMap;

use crate::graph::{ColoringMode, Edge, EdgeColoring, Graph};

const NONE: usize = usize::MAX;

struct State {
    /// `at[v][c]` is the neighbour joined to `v` by colour `c`.
    at: Vec<Vec<usize>>,
    col: BTreeMap<Edge, usize>,
    palette: usize,
}

impl State {
    fn color_of(&self, u: usize, v: usize) -> usize {
        self.col.get(&Edge::new(u, v)).copied().unwrap_or(0)
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c] == NONE
    }

    fn free(&self, v: usize) -> usize {
        (1..=self.palette)
            .find(|&c| self.is_free(v, c))
            .expect("palette has Δ+1 colours")
    }

    fn unset(&mut self, u: usize, v: usize) {
        if let Some(c) = self.col.remove(&Edge::new(u, v)) {
            self.at[u][c] = NONE;
            self.at[v][c] = NONE;
        }
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        self.unset(u, v);
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.col.insert(Edge::new(u, v), c);
        self.at[u][c] = v;
        self.at[v][c] = u;
    }

    fn max_fan(&self, g: &Graph, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = g.neighbors(u).iter().copied().find(|&w| {
                let c = self.color_of(u, w);
                c != 0 && !fan.contains(&w) && self.is_free(last, c)
            });
            match next {
                Some(w) => fan.push(w),
                None => return fan,
            }
        }
    }

    /// Swaps `c` and `d` along the alternating path that leaves `u` on `d`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = vec![u];
        let (mut cur, mut want) = (u, d);
        while self.at[cur][want] != NONE {
            let nxt = self.at[cur][want];
            path.push(nxt);
            cur = nxt;
            want = if want == d { c } else { d };
        }
        let old: Vec<(usize, usize, usize)> = path
            .windows(2)
            .map(|w| (w[0], w[1], self.color_of(w[0], w[1])))
            .collect();
        for &(a, b, _) in &old {
            self.unset(a, b);
        }
        for (a, b, x) in old {
            self.set(a, b, if x == c { d } else { c });
        }
    }
}

pub(crate) fn vizing_map(g: &Graph) -> BTreeMap<Edge, usize> {
    let palette = g.max_degree() + 1;
    let mut s = State {
        at: vec![vec![NONE; palette + 1]; g.n()],
        col: BTreeMap::new(),
        palette,
    };
    for &Edge(u, v) in g.edges() {
        let fan = s.max_fan(g, u, v);
        let c = s.free(u);
        let d = s.free(*fan.last().unwrap());
        if c != d {
            s.invert_path(u, c, d);
        }
        // first prefix that is still a fan and ends at a vertex missing d
        let mut end = 0;
        for i in 0..fan.len() {
            if i > 0 {
                let ci = s.color_of(u, fan[i]);
                if ci == 0 || !s.is_free(fan[i - 1], ci) {
                    break;
                }
            }
            if s.is_free(fan[i], d) {
                end = i;
                break;
            }
        }
        for j in 0..end {
            let cj = s.color_of(u, fan[j + 1]);
            s.unset(u, fan[j + 1]);
            s.set(u, fan[j], cj);
        }
        s.set(u, fan[end], d);
    }
    lower_top(&mut s);
    s.col
}

/// Tries to empty the top colour class with one Kempe swap per edge.
fn lower_top(s: &mut State) {
    let top = s.palette;
    if top < 2 {
        return;
    }
    let tops: Vec<Edge> = s
        .col
        .iter()
        .filter(|(_, &c)| c == top)
        .map(|(e, _)| *e)
        .collect();
    for Edge(u, v) in tops {
        s.unset(u, v);
        let free_u: Vec<usize> = (1..top).filter(|&c| s.is_free(u, c)).collect();
        let free_v: Vec<usize> = (1..top).filter(|&c| s.is_free(v, c)).collect();
        if let Some(&c) = free_u.iter().find(|c| free_v.contains(c)) {
            s.set(u, v, c);
            continue;
        }
        let mut done = false;
        'outer: for &a in &free_u {
            for &b in &free_v {
                // the a/b chain leaving v on a must not reach u
                let mut cur = v;
                let mut want = a;
                while s.at[cur][want] != NONE {
                    cur = s.at[cur][want];
                    want = if want == a { b } else { a };
                }
                if cur != u {
                    s.invert_path(v, b, a);
                    s.set(u, v, a);
                    done = true;
                    break 'outer;
                }
            }
        }
        if !done {
            s.set(u, v, top);
        }
    }
}

/// Proper colouring with at most `Δ + 1` colours.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let col = vizing_map(g);
    let k = col.values().copied().max().unwrap_or(0);
    EdgeColoring::new(k, ColoringMode::Proper, col)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_mat12, gen_qn};
    use crate::graph::verify_edge_coloring;

    fn check(g: &Graph) -> usize {
        let c = vizing_color(g);
        assert!(verify_edge_coloring(g, &c).unwrap().is_valid());
        assert!(c.k <= g.max_degree() + 1);
        c.k
    }

    #[test]
    fn small_cases() {
        assert_eq!(check(&Graph::cycle(5)), 3);
        assert_eq!(check(&Graph::complete_bipartite(1, 4)), 4);
        assert_eq!(check(&Graph::complete(4)), 3);
        assert_eq!(check(&Graph::empty(3)), 0);
    }

    #[test]
    fn larger_graphs() {
        for n in 3..9 {
            check(&Graph::complete(n));
        }
        check(&gen_mat12().0);
        check(&gen_qn(3).unwrap().0);
    }
}

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

//! Reducible configurations, matched by backtracking role assignment.
//!
//! Patterns are rebuilt from the reduction arguments that use them: each
//! lists its named roles, required edges and degree constraints. Roles with
//! an exact degree are "solid" and may have no other neighbours in the host.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConfigId {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G12,
    G13,
    G16,
    G17,
}

impl ConfigId {
    pub const ALL: [ConfigId; 10] = [
        ConfigId::G1,
        ConfigId::G2,
        ConfigId::G3,
        ConfigId::G4,
        ConfigId::G5,
        ConfigId::G6,
        ConfigId::G12,
        ConfigId::G13,
        ConfigId::G16,
        ConfigId::G17,
    ];

    /// The patterns used by the Δ-edge-colouring reductions, in dispatch order.
    pub const COLORING: [ConfigId; 8] = [
        ConfigId::G3,
        ConfigId::G6,
        ConfigId::G12,
        ConfigId::G13,
        ConfigId::G4,
        ConfigId::G5,
        ConfigId::G16,
        ConfigId::G17,
    ];
}

impl fmt::Display for ConfigId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::str::FromStr for ConfigId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConfigId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown configuration {s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeConstraint {
    Exact(usize),
    AtLeast(usize),
}

impl DegreeConstraint {
    fn holds(self, d: usize) -> bool {
        match self {
            DegreeConstraint::Exact(k) => d == k,
            DegreeConstraint::AtLeast(k) => d >= k,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationPattern {
    pub id: ConfigId,
    pub roles: Vec<&'static str>,
    pub edges: Vec<(&'static str, &'static str)>,
    pub non_edges: Vec<(&'static str, &'static str)>,
    pub degrees: Vec<(&'static str, DegreeConstraint)>,
    pub note: &'static str,
}

fn pat(
    id: ConfigId,
    roles: &[&'static str],
    edges: &[(&'static str, &'static str)],
    non_edges: &[(&'static str, &'static str)],
    exact: &[(&'static str, usize)],
    note: &'static str,
) -> ConfigurationPattern {
    ConfigurationPattern {
        id,
        roles: roles.to_vec(),
        edges: edges.to_vec(),
        non_edges: non_edges.to_vec(),
        degrees: exact
            .iter()
            .map(|&(r, k)| (r, DegreeConstraint::Exact(k)))
            .collect(),
        note,
    }
}

/// The ten reconstructed patterns.
pub fn catalog() -> Vec<ConfigurationPattern> {
    use ConfigId::*;
    vec![
        pat(
            G1,
            &["u", "v"],
            &[("u", "v")],
            &[],
            &[("u", 2), ("v", 2)],
            "reconstructed: two adjacent 2-vertices",
        ),
        pat(
            G2,
            &["u", "w", "x"],
            &[("u", "w"), ("u", "x"), ("w", "x")],
            &[],
            &[("u", 2), ("w", 3)],
            "reconstructed: triangle uwx with d(u)=2, d(w)=3",
        ),
        pat(
            G3,
            &["u", "v", "x", "y"],
            &[("u", "x"), ("u", "y"), ("v", "x"), ("v", "y")],
            &[("u", "v")],
            &[("u", 2), ("v", 2)],
            "reconstructed: N(u)=N(v)={x,y}; xy optional",
        ),
        pat(
            G4,
            &["u", "x", "y", "v", "w"],
            &[
                ("u", "x"),
                ("u", "y"),
                ("u", "v"),
                ("u", "w"),
                ("x", "v"),
                ("y", "w"),
            ],
            &[],
            &[("u", 4), ("x", 2), ("y", 2)],
            "reconstructed: 4-vertex u with 2-neighbours x~v and y~w",
        ),
        pat(
            G5,
            &["u", "x", "w", "v", "z", "t"],
            &[
                ("u", "v"),
                ("u", "w"),
                ("v", "w"),
                ("w", "x"),
                ("x", "z"),
                ("w", "t"),
            ],
            &[],
            &[("u", 2), ("x", 2), ("w", 4)],
            "reconstructed: triangle uvw with d(u)=2, d(w)=4, w also on the 2-vertex x",
        ),
        pat(
            G6,
            &["u", "v", "x0", "y0"],
            &[
                ("u", "v"),
                ("u", "x0"),
                ("u", "y0"),
                ("v", "x0"),
                ("v", "y0"),
            ],
            &[],
            &[("u", 3), ("v", 3)],
            "reconstructed: adjacent 3-vertices u, v with common neighbours x0, y0",
        ),
        pat(
            G12,
            &["u", "v", "w", "x", "y"],
            &[
                ("u", "v"),
                ("u", "w"),
                ("v", "w"),
                ("v", "x"),
                ("v", "y"),
                ("w", "x"),
                ("w", "y"),
            ],
            &[],
            &[("u", 2), ("v", 4), ("w", 4)],
            "reconstructed: triangle uvw, d(u)=2, v and w both adjacent to x and y",
        ),
        pat(
            G13,
            &["u", "v", "w", "x", "y"],
            &[
                ("u", "v"),
                ("u", "x"),
                ("v", "w"),
                ("v", "x"),
                ("v", "y"),
                ("w", "x"),
                ("w", "y"),
            ],
            &[],
            &[("u", 2), ("v", 4), ("w", 3)],
            "reconstructed: d(u)=2 on v and x, d(v)=4, d(w)=3",
        ),
        pat(
            G16,
            &["u", "z", "v", "w", "x", "y"],
            &[
                ("u", "w"),
                ("u", "x"),
                ("v", "w"),
                ("v", "x"),
                ("v", "y"),
                ("v", "z"),
                ("w", "x"),
                ("w", "y"),
                ("y", "z"),
            ],
            &[],
            &[("u", 2), ("z", 2), ("v", 4), ("w", 4)],
            "reconstructed: two 2-vertices and two 4-vertices around x, y",
        ),
        pat(
            G17,
            &["u", "a", "z", "v", "w", "x", "y"],
            &[
                ("u", "w"),
                ("u", "v"),
                ("a", "v"),
                ("a", "y"),
                ("w", "z"),
                ("x", "z"),
                ("v", "w"),
                ("w", "x"),
                ("v", "y"),
                ("v", "x"),
                ("w", "y"),
            ],
            &[],
            &[("u", 2), ("a", 2), ("z", 2), ("v", 5), ("w", 5)],
            "reconstructed: three 2-vertices and two 5-vertices around x, y",
        ),
    ]
}

/// Whether the G3 pair `x`, `y` is already joined, or can be joined
/// without breaking the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XyStatus {
    Present,
    Addable,
    NotAddable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigurationMatch {
    pub id: ConfigId,
    pub roles: BTreeMap<String, usize>,
    pub edges: Vec<Edge>,
    /// Crossing pairs of the diagram whose chords are both matched edges.
    pub crossings: Vec<(Edge, Edge)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xy: Option<XyStatus>,
}

impl ConfigurationMatch {
    pub fn role(&self, name: &str) -> usize {
        self.roles[name]
    }

    /// Re-checks every constraint of the pattern against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let p = pattern(self.id);
        let vs: BTreeSet<usize> = self.roles.values().copied().collect();
        vs.len() == self.roles.len()
            && p.edges
                .iter()
                .all(|(a, b)| g.has_edge(self.roles[*a], self.roles[*b]))
            && p.non_edges
                .iter()
                .all(|(a, b)| !g.has_edge(self.roles[*a], self.roles[*b]))
            && p.degrees
                .iter()
                .all(|(r, c)| c.holds(g.degree(self.roles[*r])))
    }
}

pub fn pattern(id: ConfigId) -> ConfigurationPattern {
    catalog()
        .into_iter()
        .find(|p| p.id == id)
        .expect("catalog is complete")
}

struct Matcher<'a> {
    g: &'a Graph,
    p: &'a ConfigurationPattern,
    order: Vec<usize>,
    degree: Vec<Option<DegreeConstraint>>,
    assign: Vec<usize>,
}

const FREE: usize = usize::MAX;

impl Matcher<'_> {
    fn idx(&self, r: &str) -> usize {
        self.p.roles.iter().position(|x| *x == r).unwrap()
    }

    fn consistent(&self, r: usize, v: usize) -> bool {
        if self.assign.contains(&v) {
            return false;
        }
        if let Some(c) = self.degree[r] {
            if !c.holds(self.g.degree(v)) {
                return false;
            }
        }
        for (a, b) in &self.p.edges {
            let (a, b) = (self.idx(a), self.idx(b));
            let other = if a == r {
                b
            } else if b == r {
                a
            } else {
                continue;
            };
            if self.assign[other] != FREE && !self.g.has_edge(v, self.assign[other]) {
                return false;
            }
        }
        for (a, b) in &self.p.non_edges {
            let (a, b) = (self.idx(a), self.idx(b));
            let other = if a == r {
                b
            } else if b == r {
                a
            } else {
                continue;
            };
            if self.assign[other] != FREE && self.g.has_edge(v, self.assign[other]) {
                return false;
            }
        }
        true
    }

    fn candidates(&self, r: usize) -> Vec<usize> {
        for (a, b) in &self.p.edges {
            let (a, b) = (self.idx(a), self.idx(b));
            let other = if a == r {
                b
            } else if b == r {
                a
            } else {
                continue;
            };
            if self.assign[other] != FREE {
                return self.g.neighbors(self.assign[other]).to_vec();
            }
        }
        (0..self.g.n()).collect()
    }

    fn search(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let r = self.order[i];
        for v in self.candidates(r) {
            if self.consistent(r, v) {
                self.assign[r] = v;
                if self.search(i + 1) {
                    return true;
                }
                self.assign[r] = FREE;
            }
        }
        false
    }
}

/// First assignment of `id` in `g`, trying host vertices in increasing
/// order for each role (solid roles first).
pub fn match_in_graph(g: &Graph, id: ConfigId) -> Option<BTreeMap<String, usize>> {
    let p = pattern(id);
    let k = p.roles.len();
    let mut degree = vec![None; k];
    for (r, c) in &p.degrees {
        degree[p.roles.iter().position(|x| x == r).unwrap()] = Some(*c);
    }
    let mut order: Vec<usize> = (0..k).filter(|&r| degree[r].is_some()).collect();
    order.extend((0..k).filter(|&r| degree[r].is_none()));
    let mut m = Matcher {
        g,
        p: &p,
        order,
        degree,
        assign: vec![FREE; k],
    };
    m.search(0).then(|| {
        p.roles
            .iter()
            .zip(&m.assign)
            .map(|(r, &v)| (r.to_string(), v))
            .collect()
    })
}

fn build_match(d: &Diagram, id: ConfigId, roles: BTreeMap<String, usize>) -> ConfigurationMatch {
    let p = pattern(id);
    let edges: Vec<Edge> = p
        .edges
        .iter()
        .map(|(a, b)| Edge::new(roles[*a], roles[*b]))
        .collect();
    let set: BTreeSet<Edge> = edges.iter().copied().collect();
    let crossings = d
        .crossing_pairs()
        .unwrap_or_default()
        .into_iter()
        .filter(|(e, f)| set.contains(e) && set.contains(f))
        .collect();
    let xy = (id == ConfigId::G3).then(|| {
        let (x, y) = (roles["x"], roles["y"]);
        if d.graph.has_edge(x, y) {
            XyStatus::Present
        } else if d
            .restrict(d.graph.with_edges_added(&[Edge::new(x, y)]))
            .is_some()
        {
            XyStatus::Addable
        } else {
            XyStatus::NotAddable
        }
    });
    ConfigurationMatch {
        id,
        roles,
        edges,
        crossings,
        xy,
    }
}

/// The first match among `allowed`, taken in the given order.
pub fn find_configuration(d: &Diagram, allowed: &[ConfigId]) -> Result<Option<ConfigurationMatch>> {
    let rep = d.validate();
    if !rep.is_valid() {
        return Err(Error::InvalidDiagram(rep.violations.join("; ")));
    }
    for &id in allowed {
        if let Some(roles) = match_in_graph(&d.graph, id) {
            return Ok(Some(build_match(d, id, roles)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::recognize;

    #[test]
    fn catalog_is_consistent() {
        for p in catalog() {
            for e in &p.edges {
                assert!(!p.non_edges.contains(e));
                assert!(p.roles.contains(&e.0) && p.roles.contains(&e.1));
            }
            for (r, c) in &p.degrees {
                let shown = p.edges.iter().filter(|(a, b)| a == r || b == r).count();
                match c {
                    DegreeConstraint::Exact(k) => assert!(*k >= shown, "{} {}", p.id, r),
                    DegreeConstraint::AtLeast(_) => {}
                }
            }
        }
        assert_eq!(catalog().len(), 10);
    }

    #[test]
    fn c5_has_g1() {
        let d = recognize(&Graph::cycle(5)).unwrap().unwrap();
        let m = find_configuration(&d, &ConfigId::ALL).unwrap().unwrap();
        assert_eq!(m.id, ConfigId::G1);
        assert!(m.holds_in(&d.graph));
    }

    #[test]
    fn k4_has_g6_with_x0y0() {
        let d = recognize(&Graph::complete(4)).unwrap().unwrap();
        let m = find_configuration(&d, &ConfigId::COLORING)
            .unwrap()
            .unwrap();
        assert_eq!(m.id, ConfigId::G6);
        assert!(d.graph.has_edge(m.role("x0"), m.role("y0")));
    }

    #[test]
    fn k23_has_g3() {
        let d = recognize(&Graph::complete_bipartite(2, 3))
            .unwrap()
            .unwrap();
        let m = find_configuration(&d, &[ConfigId::G3]).unwrap().unwrap();
        assert!([2, 3, 4].contains(&m.role("u")) && [2, 3, 4].contains(&m.role("v")));
        assert_eq!(m.xy, Some(XyStatus::Addable));
        assert!(m.holds_in(&d.graph));
    }

    #[test]
    fn parse_ids() {
        assert_eq!("g12".parse::<ConfigId>().unwrap(), ConfigId::G12);
        assert!("G7".parse::<ConfigId>().is_err());
    }
}

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

//! Simple undirected graphs and the checkers every other module leans on.
//!
//! Vertex ids are `0..n`. Removing a vertex keeps the id space and only drops
//! the incident edges, so ids stay stable through the reductions used by the
//! decomposition and coloring code.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|e| [e.0, e.1]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        let pairs: Vec<(usize, usize)> = raw.edges.iter().map(|p| (p[0], p[1])).collect();
        Graph::from_edges(raw.n, &pairs).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in pairs {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if !set.insert(Edge::new(u, v)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
        }
        Ok(Self::from_edge_set(n, set))
    }

    /// Builds a graph from already-normalized edges; duplicates collapse.
    pub fn from_edge_set<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Self {
        let set: BTreeSet<Edge> = edges.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for e in &set {
            debug_assert!(e.0 < e.1 && e.1 < n);
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph {
            n,
            edges: set.into_iter().collect(),
            adj,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edge_set(n, [])
    }

    pub fn complete(n: usize) -> Self {
        let mut es = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                es.push(Edge(u, v));
            }
        }
        Self::from_edge_set(n, es)
    }

    pub fn cycle(n: usize) -> Self {
        Self::from_edge_set(n, (0..n).map(|i| Edge::new(i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edge_set(n, (1..n).map(|i| Edge(i - 1, i)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut es = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                es.push(Edge(u, v));
            }
        }
        Self::from_edge_set(a + b, es)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Minimum degree over all vertices, isolated ones included.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Vertices with at least one incident edge.
    pub fn active_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    pub fn with_edges_removed<'a, I: IntoIterator<Item = &'a Edge>>(&self, remove: I) -> Self {
        let drop: BTreeSet<Edge> = remove.into_iter().copied().collect();
        Self::from_edge_set(
            self.n,
            self.edges.iter().copied().filter(|e| !drop.contains(e)),
        )
    }

    pub fn with_edges_added<'a, I: IntoIterator<Item = &'a Edge>>(&self, add: I) -> Self {
        Self::from_edge_set(
            self.n,
            self.edges.iter().copied().chain(add.into_iter().copied()),
        )
    }

    /// Drops every edge incident to the given vertices. Ids are kept.
    pub fn without_vertices(&self, vs: &[usize]) -> Self {
        Self::from_edge_set(
            self.n,
            self.edges
                .iter()
                .copied()
                .filter(|e| !vs.iter().any(|&v| e.touches(v))),
        )
    }

    /// Subgraph induced by `vs`, relabelled to `0..vs.len()` in the given order.
    pub fn induced_relabelled(&self, vs: &[usize]) -> Graph {
        let index: BTreeMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Graph::from_edge_set(
            vs.len(),
            self.edges
                .iter()
                .filter_map(|e| Some(Edge::new(*index.get(&e.0)?, *index.get(&e.1)?))),
        )
    }

    /// Connected components over all vertices (isolated vertices are singletons).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Biconnected components via Tarjan's edge stack.
    pub fn blocks(&self) -> BlockStructure {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut edge_stack: Vec<Edge> = Vec::new();
        let mut blocks: Vec<Block> = Vec::new();

        for root in 0..n {
            if disc[root] != usize::MAX || self.adj[root].is_empty() {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // (vertex, parent, next neighbor index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(Edge::new(v, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, v, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(Edge::new(v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            let mut es = Vec::new();
                            let stop = Edge::new(parent, v);
                            while let Some(e) = edge_stack.pop() {
                                es.push(e);
                                if e == stop {
                                    break;
                                }
                            }
                            blocks.push(Block::from_edges(es));
                        }
                    }
                }
            }
        }

        blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        let mut count = vec![0usize; n];
        for b in &blocks {
            for &v in &b.vertices {
                count[v] += 1;
            }
        }
        let cut_vertices = (0..n).filter(|&v| count[v] >= 2).collect();
        BlockStructure {
            blocks,
            cut_vertices,
        }
    }

    pub fn is_biconnected(&self) -> bool {
        let active = self.active_vertices();
        if active.len() < 2 || active.len() != self.n {
            return false;
        }
        let bs = self.blocks();
        bs.blocks.len() == 1
    }

    /// Vertex connectivity. Complete graphs return `n - 1`.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        if self.n < 2 || !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best = self.n - 1;
        for s in 0..self.n {
            for t in s + 1..self.n {
                if !self.has_edge(s, t) {
                    best = best.min(self.local_vertex_connectivity(s, t, best));
                }
            }
        }
        Ok(best)
    }

    /// Number of internally vertex-disjoint s-t paths (s, t non-adjacent),
    /// capped at `cap`. Unit-capacity max flow on the split-vertex network.
    fn local_vertex_connectivity(&self, s: usize, t: usize, cap: usize) -> usize {
        // node 2v = v_in, 2v+1 = v_out
        let nodes = 2 * self.n;
        let mut cap_map: BTreeMap<(usize, usize), i32> = BTreeMap::new();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes];
        let mut add = |a: usize, b: usize, c: i32, cap_map: &mut BTreeMap<(usize, usize), i32>| {
            *cap_map.entry((a, b)).or_insert(0) += c;
            cap_map.entry((b, a)).or_insert(0);
            out[a].push(b);
            out[b].push(a);
        };
        for v in 0..self.n {
            let c = if v == s || v == t { self.n as i32 } else { 1 };
            add(2 * v, 2 * v + 1, c, &mut cap_map);
        }
        for e in &self.edges {
            add(2 * e.0 + 1, 2 * e.1, self.n as i32, &mut cap_map);
            add(2 * e.1 + 1, 2 * e.0, self.n as i32, &mut cap_map);
        }
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        while flow < cap {
            let mut prev = vec![usize::MAX; nodes];
            prev[source] = source;
            let mut q = VecDeque::from([source]);
            while let Some(a) = q.pop_front() {
                if a == sink {
                    break;
                }
                for &b in &out[a] {
                    if prev[b] == usize::MAX && cap_map[&(a, b)] > 0 {
                        prev[b] = a;
                        q.push_back(b);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut b = sink;
            while b != source {
                let a = prev[b];
                *cap_map.get_mut(&(a, b)).unwrap() -= 1;
                *cap_map.get_mut(&(b, a)).unwrap() += 1;
                b = a;
            }
            flow += 1;
        }
        flow
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl Block {
    fn from_edges(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        let vertices: BTreeSet<usize> = edges.iter().flat_map(|e| [e.0, e.1]).collect();
        Block {
            vertices: vertices.into_iter().collect(),
            edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockStructure {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

/// Which of the four forest-like kinds an edge set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphKind {
    pub is_forest: bool,
    pub is_linear_forest: bool,
    pub is_star_forest: bool,
    pub is_matching: bool,
}

/// Classifies `s` as a subgraph of `g`; every element of `s` must be an edge.
pub fn classify_subgraph(g: &Graph, s: &[Edge]) -> Result<SubgraphKind> {
    for e in s {
        if !g.contains(*e) {
            return Err(Error::NotAnEdge(*e));
        }
    }
    Ok(classify_edges(g.n(), s))
}

/// Kind report for an arbitrary edge list on `n` vertices.
pub fn classify_edges(n: usize, s: &[Edge]) -> SubgraphKind {
    let h = Graph::from_edge_set(n, s.iter().copied());
    let forest = is_forest(&h);
    let max_deg = h.max_degree();
    let star = forest
        && h.components().iter().all(|comp| {
            let m = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
            m == 0 || comp.iter().any(|&v| h.degree(v) == m)
        });
    SubgraphKind {
        is_forest: forest,
        is_linear_forest: forest && max_deg <= 2,
        is_star_forest: star,
        is_matching: max_deg <= 1,
    }
}

fn is_forest(h: &Graph) -> bool {
    let comps = h.components();
    // a forest has exactly n - c edges
    h.edge_count() + comps.len() == h.n()
}

/// Roots (centres) of a star forest; both ends of a single-edge star are roots.
pub fn star_roots(n: usize, s: &[Edge]) -> BTreeSet<usize> {
    let h = Graph::from_edge_set(n, s.iter().copied());
    let mut roots = BTreeSet::new();
    for comp in h.components() {
        let m = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        if m == 0 {
            continue;
        }
        for &v in &comp {
            if h.degree(v) == m {
                roots.insert(v);
            }
        }
    }
    roots
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringMode {
    Proper,
    LinearForest,
}

/// Total map from edges to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    pub k: usize,
    pub mode: ColoringMode,
    pub colors: BTreeMap<Edge, usize>,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    k: usize,
    mode: ColoringMode,
    colors: Vec<[usize; 3]>,
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringJson {
            k: self.k,
            mode: self.mode,
            colors: self.colors.iter().map(|(e, &c)| [e.0, e.1, c]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ColoringJson::deserialize(d)?;
        Ok(EdgeColoring {
            k: raw.k,
            mode: raw.mode,
            colors: raw
                .colors
                .iter()
                .map(|t| (Edge::new(t[0], t[1]), t[2]))
                .collect(),
        })
    }
}

impl EdgeColoring {
    pub fn new(k: usize, mode: ColoringMode, colors: BTreeMap<Edge, usize>) -> Self {
        EdgeColoring { k, mode, colors }
    }

    /// Edges of color `c`.
    pub fn class(&self, c: usize) -> Vec<Edge> {
        self.colors
            .iter()
            .filter(|(_, &x)| x == c)
            .map(|(e, _)| *e)
            .collect()
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub color: usize,
    pub vertex: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub violations: Vec<Violation>,
}

impl ColoringReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every color class against the predicate of the coloring's mode.
/// Errors if some edge of `g` carries no color.
pub fn verify_edge_coloring(g: &Graph, c: &EdgeColoring) -> Result<ColoringReport> {
    for e in g.edges() {
        if !c.colors.contains_key(e) {
            return Err(Error::PartialColoring(*e));
        }
    }
    let mut violations = Vec::new();
    for (e, &col) in &c.colors {
        if !g.contains(*e) {
            violations.push(Violation {
                color: col,
                vertex: None,
                reason: format!("{e} is colored but not an edge"),
            });
        }
        if col == 0 || col > c.k {
            violations.push(Violation {
                color: col,
                vertex: None,
                reason: format!("{e} has color {col} outside 1..={}", c.k),
            });
        }
    }
    let classes: BTreeMap<usize, Vec<Edge>> =
        c.colors.iter().fold(BTreeMap::new(), |mut acc, (e, &col)| {
            acc.entry(col).or_insert_with(Vec::new).push(*e);
            acc
        });
    for (&col, es) in &classes {
        let h = Graph::from_edge_set(g.n(), es.iter().copied().filter(|e| e.1 < g.n()));
        match c.mode {
            ColoringMode::Proper => {
                for v in 0..h.n() {
                    if h.degree(v) > 1 {
                        violations.push(Violation {
                            color: col,
                            vertex: Some(v),
                            reason: format!("{} edges of color {col} meet at {v}", h.degree(v)),
                        });
                    }
                }
            }
            ColoringMode::LinearForest => {
                for v in 0..h.n() {
                    if h.degree(v) > 2 {
                        violations.push(Violation {
                            color: col,
                            vertex: Some(v),
                            reason: format!("{} edges of color {col} meet at {v}", h.degree(v)),
                        });
                    }
                }
                if !is_forest(&h) {
                    violations.push(Violation {
                        color: col,
                        vertex: None,
                        reason: format!("color {col} contains a cycle"),
                    });
                }
            }
        }
    }
    Ok(ColoringReport { violations })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartKind {
    Forest,
    LinearForest,
    StarForest,
    Matching,
    OuterplanarRemainder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    pub kind: PartKind,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

impl Decomposition {
    pub fn part(&self, kind: PartKind) -> Option<&Part> {
        self.parts.iter().find(|p| p.kind == kind)
    }

    /// Checks disjointness, coverage and the kind predicate of every part.
    /// Returns the list of problems found (empty means valid).
    pub fn verify(&self, g: &Graph) -> Vec<String> {
        let mut problems = Vec::new();
        let mut seen = BTreeSet::new();
        for (i, p) in self.parts.iter().enumerate() {
            for e in &p.edges {
                if !g.contains(*e) {
                    problems.push(format!("part {i} holds non-edge {e}"));
                } else if !seen.insert(*e) {
                    problems.push(format!("edge {e} appears in more than one part"));
                }
            }
            let kind = classify_edges(g.n(), &p.edges);
            let ok = match p.kind {
                PartKind::Forest => kind.is_forest,
                PartKind::LinearForest => kind.is_linear_forest,
                PartKind::StarForest => kind.is_star_forest,
                PartKind::Matching => kind.is_matching,
                PartKind::OuterplanarRemainder => crate::minors::is_outerplanar(
                    &Graph::from_edge_set(g.n(), p.edges.iter().copied()),
                ),
            };
            if !ok {
                problems.push(format!("part {i} is not a valid {:?}", p.kind));
            }
        }
        for e in g.edges() {
            if !seen.contains(e) {
                problems.push(format!("edge {e} is not covered"));
            }
        }
        problems
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, es: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, es).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let k4 = Graph::complete(4);
        let s = serde_json::to_string(&k4).unwrap();
        assert_eq!(
            s,
            r#"{"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#
        );
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, k4);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,1],[1,0]]}"#).is_err());
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn blocks_of_small_graphs() {
        let tri = Graph::cycle(3);
        let b = tri.blocks();
        assert_eq!(b.blocks.len(), 1);
        assert!(b.cut_vertices.is_empty());

        let p3 = Graph::path(3);
        let b = p3.blocks();
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.cut_vertices, vec![1]);

        // K4 on 0..4 and K2,3 glued at vertex 3
        let fig = g(
            8,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (3, 5),
                (3, 6),
                (7, 4),
                (7, 5),
                (7, 6),
            ],
        );
        let b = fig.blocks();
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.cut_vertices, vec![3]);
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(Graph::complete(4).vertex_connectivity().unwrap(), 3);
        assert_eq!(Graph::cycle(5).vertex_connectivity().unwrap(), 2);
        assert_eq!(Graph::path(4).vertex_connectivity().unwrap(), 1);
        assert_eq!(
            Graph::from_edges(4, &[(0, 1), (2, 3)])
                .unwrap()
                .vertex_connectivity(),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn subgraph_kinds() {
        let k = Graph::complete(5);
        let one = classify_subgraph(&k, &[Edge(0, 1)]).unwrap();
        assert!(one.is_forest && one.is_linear_forest && one.is_star_forest && one.is_matching);

        let p4 = classify_subgraph(&k, &[Edge(0, 1), Edge(1, 2), Edge(2, 3)]).unwrap();
        assert!(p4.is_forest && p4.is_linear_forest);
        assert!(!p4.is_star_forest && !p4.is_matching);

        let claw = classify_subgraph(&k, &[Edge(0, 1), Edge(0, 2), Edge(0, 3)]).unwrap();
        assert!(claw.is_forest && claw.is_star_forest);
        assert!(!claw.is_linear_forest && !claw.is_matching);

        assert!(classify_subgraph(&Graph::path(3), &[Edge(0, 2)]).is_err());
    }

    fn coloring(mode: ColoringMode, k: usize, cs: &[(usize, usize, usize)]) -> EdgeColoring {
        EdgeColoring::new(
            k,
            mode,
            cs.iter().map(|&(u, v, c)| (Edge::new(u, v), c)).collect(),
        )
    }

    #[test]
    fn verify_colorings() {
        let c4 = Graph::cycle(4);
        let ok = coloring(
            ColoringMode::Proper,
            2,
            &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)],
        );
        assert!(verify_edge_coloring(&c4, &ok).unwrap().is_valid());

        let c3 = Graph::cycle(3);
        let bad = coloring(ColoringMode::Proper, 2, &[(0, 1, 1), (1, 2, 2), (0, 2, 1)]);
        let rep = verify_edge_coloring(&c3, &bad).unwrap();
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].vertex, Some(0));

        let lin = coloring(
            ColoringMode::LinearForest,
            2,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 2)],
        );
        assert!(verify_edge_coloring(&c3, &lin).unwrap().is_valid());

        let partial = coloring(ColoringMode::Proper, 2, &[(0, 1, 1)]);
        assert!(verify_edge_coloring(&c3, &partial).is_err());
    }
}

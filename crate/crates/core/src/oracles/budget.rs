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

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits for an exhaustive search. Running out is reported as
/// `Error::BudgetExceeded`, never as an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 64,
            max_edges: 256,
            max_nodes: 5_000_000_000,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = nodes;
        self
    }

    pub fn with_time(mut self, t: Duration) -> Self {
        self.time_limit = Some(t);
        self
    }
}

pub(crate) struct Meter {
    budget: SearchBudget,
    nodes: u64,
    start: Instant,
}

impl Meter {
    pub fn new(budget: SearchBudget, g: &Graph) -> Result<Self> {
        if g.n() > budget.max_vertices || g.edge_count() > budget.max_edges {
            return Err(Error::BudgetExceeded);
        }
        Ok(Meter {
            budget,
            nodes: 0,
            start: Instant::now(),
        })
    }

    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExceeded);
        }
        if self.nodes.is_multiple_of(4096) {
            if let Some(t) = self.budget.time_limit {
                if self.start.elapsed() > t {
                    return Err(Error::BudgetExceeded);
                }
            }
        }
        Ok(())
    }
}

/// Edges listed in breadth-first order from a maximum-degree vertex, so that
/// searches constrain each new edge by already-decided neighbours.
pub(crate) fn bfs_edge_order(g: &Graph) -> Vec<crate::graph::Edge> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut rank = vec![usize::MAX; n];
    let mut next = 0;
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            rank[v] = next;
            next += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    let mut es = g.edges().to_vec();
    es.sort_by_key(|e| {
        let (a, b) = (rank[e.0], rank[e.1]);
        (a.max(b), a.min(b))
    });
    es
}

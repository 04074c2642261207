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

use serde::{Deserialize, Serialize};

use super::budget::{bfs_edge_order, Meter};
use super::SearchBudget;
use crate::error::Result;
use crate::graph::{classify_edges, Edge, Graph};
use crate::minors::is_outerplanar_by_minors;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RemovalKind {
    Matching,
    LinearForest,
    StarForest,
}

fn fits(kind: RemovalKind, n: usize, s: &[Edge]) -> bool {
    let k = classify_edges(n, s);
    match kind {
        RemovalKind::Matching => k.is_matching,
        RemovalKind::LinearForest => k.is_linear_forest,
        RemovalKind::StarForest => k.is_star_forest,
    }
}

/// Searches for `S` of the given kind with `g - S` outerplanar. Removing
/// more edges never hurts outerplanarity, so only inclusion-maximal sets of
/// the kind are tested. Outerplanarity uses the exact minor search.
pub fn exists_removal_decomposition(
    g: &Graph,
    kind: RemovalKind,
    budget: SearchBudget,
) -> Result<Option<Vec<Edge>>> {
    let mut meter = Meter::new(budget, g)?;
    let edges = bfs_edge_order(g);
    let n = g.n();
    let mut chosen: Vec<Edge> = Vec::new();
    let mut skipped: Vec<Edge> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        g: &Graph,
        kind: RemovalKind,
        n: usize,
        edges: &[Edge],
        chosen: &mut Vec<Edge>,
        skipped: &mut Vec<Edge>,
        meter: &mut Meter,
    ) -> Result<bool> {
        meter.tick()?;
        if i == edges.len() {
            let maximal = skipped.iter().all(|&e| {
                chosen.push(e);
                let ok = fits(kind, n, chosen);
                chosen.pop();
                !ok
            });
            return Ok(maximal && is_outerplanar_by_minors(&g.with_edges_removed(chosen.iter()))?);
        }
        chosen.push(edges[i]);
        if fits(kind, n, chosen) && go(i + 1, g, kind, n, edges, chosen, skipped, meter)? {
            return Ok(true);
        }
        chosen.pop();
        skipped.push(edges[i]);
        let r = go(i + 1, g, kind, n, edges, chosen, skipped, meter)?;
        skipped.pop();
        Ok(r)
    }
    let found = go(0, g, kind, n, &edges, &mut chosen, &mut skipped, &mut meter)?;
    Ok(found.then(|| {
        chosen.sort_unstable();
        chosen
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_mat12;

    #[test]
    fn k4_needs_one_diagonal() {
        let s = exists_removal_decomposition(
            &Graph::complete(4),
            RemovalKind::Matching,
            SearchBudget::default(),
        )
        .unwrap()
        .unwrap();
        let rest = Graph::complete(4).with_edges_removed(&s);
        assert!(is_outerplanar_by_minors(&rest).unwrap());
        assert!(classify_edges(4, &s).is_matching);
    }

    #[test]
    fn mat12_has_no_matching_but_has_a_linear_forest() {
        let (g, _) = gen_mat12();
        let b = SearchBudget::default();
        assert_eq!(
            exists_removal_decomposition(&g, RemovalKind::Matching, b).unwrap(),
            None
        );
        assert!(
            exists_removal_decomposition(&g, RemovalKind::LinearForest, b)
                .unwrap()
                .is_some()
        );
    }
}

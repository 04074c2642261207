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

use pograph::colorings::{po_edge_color, po_linear_arboricity};
use pograph::decompose::{
    cover_outerplanar_plus_diagram, two_forests_plus_matching_diagram, ForestKind,
};
use pograph::diagram::{maximal_completion, quasi_hamiltonize};
use pograph::generators::gen_random_po;
use pograph::graph::verify_edge_coloring;
use pograph::{Diagram, Edge};
use proptest::prelude::*;

fn diagram(max_n: usize) -> impl Strategy<Value = Diagram> {
    (3..=max_n, any::<u64>(), 0.0f64..=1.0)
        .prop_map(|(n, seed, density)| gen_random_po(n, seed, density).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum_is_twice_edges(d in diagram(40)) {
        let g = &d.graph;
        let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edges().len());
    }

    #[test]
    fn blocks_partition_edges(d in diagram(40)) {
        let g = &d.graph;
        let bs = g.blocks();
        let mut all: Vec<Edge> = bs.blocks.iter().flat_map(|b| b.edges.iter().copied()).collect();
        all.sort();
        let before = all.len();
        all.dedup();
        prop_assert_eq!(before, all.len());
        prop_assert_eq!(all, g.edges());
        for &c in &bs.cut_vertices {
            prop_assert!(bs.blocks.iter().filter(|b| b.vertices.contains(&c)).count() >= 2);
        }
    }

    #[test]
    fn random_diagrams_are_valid_and_sparse(d in diagram(40)) {
        prop_assert!(d.validate().is_valid());
        let n = d.graph.n();
        prop_assert!(2 * d.graph.edges().len() + 8 <= 5 * n);
    }

    #[test]
    fn restriction_stays_valid(d in diagram(30), drop in proptest::collection::vec(any::<prop::sample::Index>(), 0..8)) {
        let edges = d.graph.edges();
        let removed: Vec<Edge> = drop.iter().map(|i| edges[i.index(edges.len())]).collect();
        let h = d.graph.with_edges_removed(&removed);
        let r = d.restrict(h.clone()).expect("sub-orders of a valid diagram");
        prop_assert!(r.validate().is_valid());
        prop_assert_eq!(r.graph, h);
    }

    #[test]
    fn completions_are_valid_supergraphs(d in diagram(30)) {
        for (c, added) in [quasi_hamiltonize(&d), maximal_completion(&d)] {
            prop_assert!(c.validate().is_valid());
            for e in d.graph.edges() {
                prop_assert!(c.graph.has_edge(e.0, e.1));
            }
            prop_assert_eq!(c.graph.edges().len(), d.graph.edges().len() + added.len());
        }
    }

    #[test]
    fn decompositions_verify(d in diagram(40)) {
        for kind in [ForestKind::Linear, ForestKind::Star] {
            let dec = cover_outerplanar_plus_diagram(&d, kind).unwrap();
            prop_assert!(dec.verify(&d.graph).is_empty());
        }
        let dec = two_forests_plus_matching_diagram(&d).unwrap();
        prop_assert!(dec.verify(&d.graph).is_empty());
    }

    #[test]
    fn delta_colouring_replays(d in diagram(40)) {
        prop_assume!(d.graph.max_degree() >= 4);
        let (c, t) = po_edge_color(&d).unwrap();
        prop_assert_eq!(c.k, d.graph.max_degree());
        prop_assert!(verify_edge_coloring(&d.graph, &c).unwrap().is_valid());
        prop_assert_eq!(t.replay(), c.colors);
        prop_assert!(t.diagnostics().is_empty());
    }

    #[test]
    fn linear_arboricity_bounds(d in diagram(14)) {
        let delta = d.graph.max_degree();
        prop_assume!(delta >= 1);
        let (k, c, t) = po_linear_arboricity(&d).unwrap();
        prop_assert!(k >= delta.div_ceil(2) && k <= delta.div_ceil(2) + 1);
        prop_assert!(verify_edge_coloring(&d.graph, &c).unwrap().is_valid());
        prop_assert_eq!(t.replay(), c.colors);
    }
}

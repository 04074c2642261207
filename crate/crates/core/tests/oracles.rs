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

use pograph::colorings::{chromatic_index_diagram, po_linear_arboricity};
use pograph::oracles::{
    brute_chromatic_index, brute_linear_arboricity, enumerate_po, SearchBudget,
};

// Per n: (PO classes, class-2 graphs, graphs with la = ceil(Δ/2) + 1).
const FROZEN: [(usize, usize, usize, usize); 6] = [
    (2, 1, 0, 0),
    (3, 2, 1, 1),
    (4, 6, 0, 1),
    (5, 18, 2, 1),
    (6, 80, 1, 1),
    (7, 397, 3, 1),
];

#[test]
fn fast_algorithms_agree_with_brute_force() {
    for &(n, classes, class2, la_plus) in &FROZEN {
        let all = enumerate_po(n).unwrap();
        let (mut c2, mut lp) = (0, 0);
        for (g, d) in &all {
            let delta = g.max_degree();
            let chi = brute_chromatic_index(g, SearchBudget::default()).unwrap();
            assert!(chi == delta || chi == delta + 1);
            let (k, c) = chromatic_index_diagram(d).unwrap();
            assert_eq!(k, chi, "{:?}", g.edges());
            assert_eq!(c.colors.len(), g.edges().len());
            c2 += usize::from(chi > delta);
            let la = brute_linear_arboricity(g, SearchBudget::default()).unwrap();
            let lo = delta.div_ceil(2);
            assert!(la == lo || la == lo + 1);
            let (k, _, _) = po_linear_arboricity(d).unwrap();
            assert_eq!(k, la, "{:?}", g.edges());
            lp += usize::from(la > lo);
        }
        assert_eq!((all.len(), c2, lp), (classes, class2, la_plus), "n={n}");
    }
}

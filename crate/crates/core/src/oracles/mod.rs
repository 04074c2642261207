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

//! Brute-force ground truth. These searches share no code with the
//! constructive algorithms beyond the graph type and the verifiers.

mod budget;
mod chromatic;
mod enumerate;
mod forests;
mod linear;
mod removal;

pub use budget::SearchBudget;
pub use chromatic::{brute_chromatic_index, brute_edge_coloring};
pub use enumerate::{
    connected_classes, enumerate_labeled_po, enumerate_po, labeled_orbit, po_corpus,
};
pub use forests::exists_k_forest_partition;
pub use linear::{brute_linear_arboricity, brute_tree_coloring};
pub use removal::{exists_removal_decomposition, RemovalKind};

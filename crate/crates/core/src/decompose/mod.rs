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

//! Decompositions of pseudo-outerplanar graphs built from their diagrams.

mod cover;
mod extract;
mod peel;

pub use cover::{cover_outerplanar_plus, cover_outerplanar_plus_diagram};
pub use extract::{extract_linear_forest, extract_star_forest, ExtractionResult, ForestKind};
pub use peel::{
    peel_maximal, two_forests_plus_matching, two_forests_plus_matching_diagram, PeelStep, PieceKind,
};

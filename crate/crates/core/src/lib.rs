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

//! Pseudo-outerplanar graphs: diagrams, decompositions, reducible
//! configurations, edge colourings and linear arboricity, with brute-force
//! oracles for cross-checking.

pub mod canon;
pub mod classes;
pub mod colorings;
pub mod configurations;
pub mod decompose;
pub mod diagram;
pub mod error;
pub mod generators;
pub mod graph;
pub mod minors;
pub mod oracles;

pub use diagram::{BlockOrder, Diagram, DiagramReport};
pub use error::{Error, Result};
pub use graph::{ColoringMode, Decomposition, Edge, EdgeColoring, Graph, Part, PartKind};
